//! The two-sorted structural sequent calculus: rule schemas, derivation
//! checking, polarity, structure denotations and soundness audits.

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::teams::TeamError;

pub mod audit;
pub mod check;
pub mod denote;
pub mod pattern;
pub mod polarity;
pub mod rules;

pub use audit::{audit_mutations, audit_rule_table, audit_schema, audit_soundness, AuditReport, SchemaAudit};
pub use check::{check_derivation, check_report, match_rule, CheckError, CheckReport, MatchBinding, NoMatch};
pub use denote::{denote_structure, sequent_holds, Denotation};
pub use polarity::{polarity_of, Polarity};
pub use rules::{lookup, rule_table, RuleSchema};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("invalid occurrence path {0}")]
    BadPath(String),
    #[error("F* cannot occur in succedent position")]
    FStarInSuccedent,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Team(#[from] TeamError),
}
