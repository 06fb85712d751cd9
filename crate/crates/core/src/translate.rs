//! Translations from InqL into the two-sorted language, flattening, and the
//! collapse of flat General formulas back to Flat ones.

use thiserror::Error;

use crate::syntax::{FlatFormula, GeneralFormula, InqFormula};

pub mod hilbert;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("formula '{0}' is not classical")]
    NotClassical(String),
    #[error("'{0}' contains a disjunction and has no Flat counterpart")]
    NotCollapsible(String),
}

/// Classical formulas to Flat formulas: `p ↦ p`, `0 ↦ 0`, `∧ ↦ ⊓`, `→ ↦ ⇨`.
pub fn tau_c(a: &InqFormula) -> Result<FlatFormula, TranslateError> {
    Ok(match a {
        InqFormula::Var(v) => FlatFormula::Var(v.clone()),
        InqFormula::Zero => FlatFormula::Zero,
        InqFormula::And(x, y) => FlatFormula::cap(tau_c(x)?, tau_c(y)?),
        InqFormula::Imp(x, y) => FlatFormula::fimp(tau_c(x)?, tau_c(y)?),
        InqFormula::Or(..) => return Err(TranslateError::NotClassical(a.to_string())),
    })
}

/// InqL formulas to General formulas. Maximal classical subformulas `χ` become
/// `↓τc(χ)`; the remaining connectives are translated homomorphically.
pub fn tau_i(a: &InqFormula) -> GeneralFormula {
    if let Ok(c) = tau_c(a) {
        return GeneralFormula::Down(c);
    }
    match a {
        InqFormula::And(x, y) => GeneralFormula::and(tau_i(x), tau_i(y)),
        InqFormula::Imp(x, y) => GeneralFormula::imp(tau_i(x), tau_i(y)),
        InqFormula::Or(x, y) => GeneralFormula::or(tau_i(x), tau_i(y)),
        InqFormula::Var(_) | InqFormula::Zero => unreachable!("atoms are classical"),
    }
}

/// `φ^f`: every `φ ∨ ψ` replaced by `¬φ → ψ`, innermost first.
pub fn flatten(a: &InqFormula) -> InqFormula {
    match a {
        InqFormula::Var(_) | InqFormula::Zero => a.clone(),
        InqFormula::And(x, y) => InqFormula::and(flatten(x), flatten(y)),
        InqFormula::Imp(x, y) => InqFormula::imp(flatten(x), flatten(y)),
        InqFormula::Or(x, y) => InqFormula::imp(InqFormula::neg(flatten(x)), flatten(y)),
    }
}

/// General formulas built from `↓`, `∧`, `→` to Flat: `↓α ↦ α`, `∧ ↦ ⊓`, `→ ↦ ⇨`.
pub fn collapse_to_flat(a: &GeneralFormula) -> Result<FlatFormula, TranslateError> {
    Ok(match a {
        GeneralFormula::Down(x) => x.clone(),
        GeneralFormula::And(x, y) => FlatFormula::cap(collapse_to_flat(x)?, collapse_to_flat(y)?),
        GeneralFormula::Imp(x, y) => FlatFormula::fimp(collapse_to_flat(x)?, collapse_to_flat(y)?),
        GeneralFormula::Or(..) => return Err(TranslateError::NotCollapsible(a.to_string())),
    })
}

#[cfg(test)]
mod tests;
