//! Semantic soundness audits.
//!
//! The instance audit evaluates every node of a derivation under team
//! assignments to its atoms. The schema audit quantifies over the denotations
//! of a schema's metavariables directly.
//!
//! Schema audit domains: Flat metavariables and atoms range over all teams;
//! General structure metavariables occurring only in antecedent position range
//! over all down-sets; General formula metavariables and General structure
//! metavariables with a succedent occurrence range over the down-sets that
//! contain the empty team, which is every denotation those can have.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::check::path_string;
use super::denote::sequent_holds;
use super::pattern::{metas, FlatFormPat, FlatPat, GenFormPat, GenPat, MetaKind, SeqPat};
use super::polarity::Polarity;
use super::rules::RuleSchema;
use super::CalculusError;
use crate::algebra::{all_downsets, b_imp, coimp, downset, f, f_star, heyting, AElem, Assignment};
use crate::syntax::Derivation;
use crate::teams::{Context, Team};

/// Assignment counts up to this bound are enumerated rather than sampled.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditViolation {
    pub path: String,
    pub rule: String,
    pub assignment: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub nvars: usize,
    pub atoms: Vec<String>,
    pub exhaustive: bool,
    pub assignments: u64,
    pub nodes: usize,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self) -> String {
        let mode = if self.exhaustive { "exhaustive" } else { "sampled" };
        let mut out = format!(
            "audit at |V|={}: {} nodes, atoms [{}], {} {} assignments\n",
            self.nvars,
            self.nodes,
            self.atoms.join(", "),
            self.assignments,
            mode
        );
        for v in &self.violations {
            let path = if v.path.is_empty() { "root" } else { &v.path };
            out.push_str(&format!("VIOLATION {path} ({}) under {}\n", v.rule, v.assignment));
        }
        out.push_str(if self.ok() { "no violations\n" } else { "violations found\n" });
        out
    }
}

fn derivation_atoms(d: &Derivation) -> Vec<String> {
    let mut atoms = Vec::new();
    d.walk(&mut |_, n| {
        for a in n.conclusion.atoms() {
            if !atoms.contains(&a) {
                atoms.push(a);
            }
        }
    });
    atoms.sort();
    atoms
}

fn format_assignment(ctx: &Context, asg: &Assignment) -> String {
    asg.iter().map(|(v, t)| format!("{v}={}", ctx.format_team(*t))).collect::<Vec<_>>().join(", ")
}

/// For every node and assignment: premises hold implies the conclusion holds.
pub fn audit_soundness(d: &Derivation, nvars: usize, samples: u64, seed: u64) -> Result<AuditReport, CalculusError> {
    let ctx = Context::anonymous(nvars)?;
    let atoms = derivation_atoms(d);
    let mut nodes: Vec<(String, &Derivation)> = Vec::new();
    d.walk(&mut |p, n| nodes.push((path_string(p), n)));

    let teams = ctx.team_count() as u64;
    let total = teams.checked_pow(atoms.len() as u32).unwrap_or(u64::MAX);
    let exhaustive = nvars <= 2 && total <= EXHAUSTIVE_LIMIT;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = if exhaustive { total } else { samples };

    let mut violations = Vec::new();
    for k in 0..count {
        let mut asg = Assignment::new();
        let mut code = k;
        for a in &atoms {
            let t = if exhaustive {
                let t = code % teams;
                code /= teams;
                t
            } else {
                rng.gen_range(0..teams)
            };
            asg.set(a, Team(t as u32));
        }
        for (path, node) in &nodes {
            if violations.iter().any(|v: &AuditViolation| &v.path == path) {
                continue;
            }
            let mut prem_ok = true;
            for p in &node.premises {
                if !sequent_holds(&ctx, &asg, &p.conclusion)? {
                    prem_ok = false;
                    break;
                }
            }
            if prem_ok && !sequent_holds(&ctx, &asg, &node.conclusion)? {
                violations.push(AuditViolation {
                    path: path.clone(),
                    rule: node.rule.clone(),
                    assignment: format_assignment(&ctx, &asg),
                });
            }
        }
    }
    Ok(AuditReport { nvars, atoms, exhaustive, assignments: count, nodes: nodes.len(), violations })
}

/// The value of a metavariable in the schema audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Val {
    B(Team),
    A(AElem),
}

pub type Valuation = BTreeMap<String, Val>;

fn team_of(v: &Valuation, m: &str) -> Team {
    match v.get(m) {
        Some(Val::B(t)) => *t,
        other => panic!("metavariable {m} bound to {other:?}"),
    }
}

fn elem_of(v: &Valuation, m: &str) -> AElem {
    match v.get(m) {
        Some(Val::A(x)) => x.clone(),
        other => panic!("metavariable {m} bound to {other:?}"),
    }
}

fn ev_ff(ctx: &Context, p: &FlatFormPat, v: &Valuation) -> Team {
    match p {
        FlatFormPat::Meta(m) | FlatFormPat::Atom(m) => team_of(v, m),
        FlatFormPat::Zero => Team::EMPTY,
        FlatFormPat::Cap(a, b) => ev_ff(ctx, a, v).intersection(ev_ff(ctx, b, v)),
        FlatFormPat::FImp(a, b) => b_imp(ctx, ev_ff(ctx, a, v), ev_ff(ctx, b, v)),
    }
}

fn ev_gf(ctx: &Context, p: &GenFormPat, v: &Valuation) -> AElem {
    match p {
        GenFormPat::Meta(m) => elem_of(v, m),
        GenFormPat::Down(a) => downset(ctx, ev_ff(ctx, a, v)),
        GenFormPat::And(a, b) => ev_gf(ctx, a, v).meet(&ev_gf(ctx, b, v)),
        GenFormPat::Or(a, b) => ev_gf(ctx, a, v).join(&ev_gf(ctx, b, v)),
        GenFormPat::Imp(a, b) => heyting(ctx, &ev_gf(ctx, a, v), &ev_gf(ctx, b, v)),
    }
}

fn ev_fs(ctx: &Context, p: &FlatPat, v: &Valuation, pol: Polarity) -> Option<Team> {
    use Polarity::*;
    Some(match p {
        FlatPat::Meta(m) => team_of(v, m),
        FlatPat::Phi => match pol {
            Antecedent => ctx.full(),
            Succedent => Team::EMPTY,
        },
        FlatPat::Form(a) => ev_ff(ctx, a, v),
        FlatPat::Comma(a, b) => {
            let (x, y) = (ev_fs(ctx, a, v, pol)?, ev_fs(ctx, b, v, pol)?);
            match pol {
                Antecedent => x.intersection(y),
                Succedent => x.union(y),
            }
        }
        FlatPat::Sup(a, b) => {
            let (x, y) = (ev_fs(ctx, a, v, pol.flip())?, ev_fs(ctx, b, v, pol)?);
            match pol {
                Antecedent => ctx.complement(x).intersection(y),
                Succedent => ctx.complement(x).union(y),
            }
        }
        FlatPat::FOf(x) => f(&ev_gs(ctx, x, v, pol)?),
    })
}

fn ev_gs(ctx: &Context, p: &GenPat, v: &Valuation, pol: Polarity) -> Option<AElem> {
    use Polarity::*;
    Some(match p {
        GenPat::Meta(m) => elem_of(v, m),
        GenPat::DownOf(g) => downset(ctx, ev_fs(ctx, g, v, pol)?),
        GenPat::FStarOf(g) => match pol {
            Antecedent => f_star(ctx, ev_fs(ctx, g, v, pol)?),
            Succedent => return None,
        },
        GenPat::Form(a) => ev_gf(ctx, a, v),
        GenPat::Semi(a, b) => {
            let (x, y) = (ev_gs(ctx, a, v, pol)?, ev_gs(ctx, b, v, pol)?);
            match pol {
                Antecedent => x.meet(&y),
                Succedent => x.join(&y),
            }
        }
        GenPat::Gt(a, b) => {
            let (x, y) = (ev_gs(ctx, a, v, pol.flip())?, ev_gs(ctx, b, v, pol)?);
            match pol {
                Antecedent => coimp(ctx, &y, &x),
                Succedent => heyting(ctx, &x, &y),
            }
        }
    })
}

/// Whether a sequent pattern holds under a valuation of its metavariables;
/// `None` if it places `F*` in succedent position.
pub fn pattern_holds(ctx: &Context, p: &SeqPat, v: &Valuation) -> Option<bool> {
    use Polarity::*;
    Some(match p {
        SeqPat::Flat(a, s) => ev_fs(ctx, a, v, Antecedent)?.is_subset(ev_fs(ctx, s, v, Succedent)?),
        SeqPat::General(a, s) => ev_gs(ctx, a, v, Antecedent)?.is_subset(&ev_gs(ctx, s, v, Succedent)?),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemaAudit {
    pub name: String,
    pub label: String,
    pub rule: String,
    /// 1, or 2 for double-line rules.
    pub directions: usize,
    pub valuations: u64,
    pub counterexample: Option<String>,
}

impl SchemaAudit {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Metavariables of a schema with (kind, occurs in antecedent, occurs in succedent).
pub fn schema_metas(rule: &RuleSchema) -> BTreeMap<String, (MetaKind, bool, bool)> {
    let mut all: BTreeMap<String, (MetaKind, bool, bool)> = BTreeMap::new();
    for p in rule.premises.iter().chain(std::iter::once(&rule.conclusion)) {
        for (m, (k, ant, suc)) in metas(p) {
            let e = all.entry(m).or_insert((k, false, false));
            e.1 |= ant;
            e.2 |= suc;
        }
    }
    all
}

fn domain(kind: MetaKind, suc: bool, teams: &[Val], downsets: &[Val], pointed: &[Val]) -> Vec<Val> {
    match kind {
        MetaKind::FlatStructure | MetaKind::FlatFormula | MetaKind::Atom => teams.to_vec(),
        MetaKind::GeneralFormula => pointed.to_vec(),
        MetaKind::GeneralStructure if suc => pointed.to_vec(),
        MetaKind::GeneralStructure => downsets.to_vec(),
    }
}

fn format_valuation(ctx: &Context, v: &Valuation) -> String {
    v.iter()
        .map(|(m, val)| match val {
            Val::B(t) => format!("{m}={}", ctx.format_team(*t)),
            Val::A(x) => {
                let ts: Vec<String> = x.teams().map(|t| ctx.format_team(t)).collect();
                format!("{m}={{{}}}", ts.join(","))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Exhaustive denotation-level check of one schema at `nvars` variables.
pub fn audit_schema(rule: &RuleSchema, nvars: usize) -> Result<SchemaAudit, CalculusError> {
    let ctx = Context::anonymous(nvars)?;
    let teams: Vec<Val> = ctx.teams().map(Val::B).collect();
    let ds = all_downsets(&ctx)?;
    let pointed: Vec<Val> = ds.iter().filter(|x| x.contains(Team::EMPTY)).cloned().map(Val::A).collect();
    let downsets: Vec<Val> = ds.into_iter().map(Val::A).collect();

    let ms: Vec<(String, Vec<Val>)> = schema_metas(rule)
        .into_iter()
        .map(|(m, (k, _, suc))| {
            let d = domain(k, suc, &teams, &downsets, &pointed);
            (m, d)
        })
        .collect();

    let mut directions = vec![(rule.premises.clone(), rule.conclusion.clone())];
    if rule.bidirectional {
        directions.push((vec![rule.conclusion.clone()], rule.premises[0].clone()));
    }

    let mut idx = vec![0usize; ms.len()];
    let mut valuations = 0u64;
    let mut counterexample = None;
    'outer: loop {
        let v: Valuation = ms.iter().zip(&idx).map(|((m, d), &i)| (m.clone(), d[i].clone())).collect();
        valuations += 1;
        for (dir, (prems, concl)) in directions.iter().enumerate() {
            let mut prem_ok = true;
            for p in prems {
                if pattern_holds(&ctx, p, &v) != Some(true) {
                    prem_ok = false;
                    break;
                }
            }
            if prem_ok && pattern_holds(&ctx, concl, &v) != Some(true) {
                let which = if dir == 0 { "" } else { " (bottom-up)" };
                counterexample = Some(format!("{}{which}", format_valuation(&ctx, &v)));
                break 'outer;
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                break 'outer;
            }
            idx[k] += 1;
            if idx[k] < ms[k].1.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
    Ok(SchemaAudit {
        name: rule.name.clone(),
        label: rule.label.clone(),
        rule: rule.display(),
        directions: directions.len(),
        valuations,
        counterexample,
    })
}

/// Audit every schema in the table plus the representative surgical-cut contexts.
pub fn audit_rule_table(nvars: usize) -> Result<Vec<SchemaAudit>, CalculusError> {
    let mut schemas: Vec<RuleSchema> = super::rules::rule_table()
        .iter()
        .filter(|r| r.kind == super::rules::RuleKind::Schema)
        .cloned()
        .collect();
    schemas.extend(super::rules::surgical_cut_contexts());
    schemas.iter().map(|r| audit_schema(r, nvars)).collect()
}

/// Audit the deliberately unsound schemas; each should yield a counterexample.
pub fn audit_mutations(nvars: usize) -> Result<Vec<SchemaAudit>, CalculusError> {
    super::rules::mutations().iter().map(|r| audit_schema(r, nvars)).collect()
}
