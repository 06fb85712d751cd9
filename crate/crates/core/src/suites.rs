//! Property suites over the formula population, the algebra, the rule table
//! and the bundled corpus. Each suite reports [`LawCheck`]s.

use std::collections::HashSet;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::laws::LawCheck;
use crate::algebra::{AlgebraError, Assignment};
use crate::calculus::rules::mutations;
use crate::calculus::{audit_mutations, audit_rule_table, audit_soundness, check_derivation, CalculusError};
use crate::corpus;
use crate::cutelim::{
    complexity_decreases, cut_sizes, find_principal_cuts, random_principal_cut, reduce_all, reduce_principal_cut,
    Pattern,
};
use crate::population::{Population, PopulationError};
use crate::syntax::{parse_script, FlatFormula, GeneralFormula, InqFormula};
use crate::teams::{self, Context, Team, TeamError};
use crate::translate::hilbert::{down_dne, down_split, dne_shape, flat_is_top, general_is_top, split_shape, CPL_AXIOMS, IPL_AXIOMS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Population(#[from] PopulationError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Team(#[from] TeamError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Downward closure and the empty-team property, team by team.
pub fn semantics(pop: &Population) -> Result<LawCheck, SuiteError> {
    let ctx = pop.ctx();
    let mut c = LawCheck::new("downward closure and empty team");
    for class in pop.classes() {
        let ok = teams::downward_closed(ctx, &class.rep)?;
        c.record_weighted(ok, class.count, || class.rep.to_string());
    }
    Ok(c)
}

/// Flat iff equivalent to its flattening iff equivalent to its double
/// negation; and classical formulas are flat.
pub fn flatness(pop: &Population) -> Result<Vec<LawCheck>, SuiteError> {
    let ctx = pop.ctx();
    let mut triple = LawCheck::new("flat <=> phi == phi^f <=> phi == ~~phi");
    let mut classical = LawCheck::new("classical formulas are flat");
    for class in pop.classes() {
        let a = &class.rep;
        let flat = teams::is_flat(ctx, a)?;
        let by_f = class.key.support == class.key.flat_support;
        let by_nn = teams::equivalent(ctx, a, &InqFormula::neg(InqFormula::neg(a.clone())))?;
        triple.record_weighted(flat == by_f && by_f == by_nn, class.count, || {
            format!("{a}: flat={flat} phi^f={by_f} ~~phi={by_nn}")
        });
        if class.key.classical() {
            classical.record_weighted(flat, class.count, || a.to_string());
        }
    }
    Ok(vec![triple, classical])
}

/// Supporting teams coincide with the denotation of the General translation.
pub fn adequacy(pop: &Population) -> LawCheck {
    let mut c = LawCheck::new("S |= phi <=> S in [[tau_i(phi)]]");
    for class in pop.classes() {
        c.record_weighted(class.key.support == class.key.translation, class.count, || class.rep.to_string());
    }
    c
}

/// The split and double-negation axioms with classical `χ`, over all
/// semantically distinct choices of `χ, φ, ψ` from the population.
pub fn hilbert_classical(pop: &Population) -> Result<Vec<LawCheck>, SuiteError> {
    let ctx = pop.ctx();
    let supports = pop.support_classes();
    let mut seen = HashSet::new();
    let chis: Vec<&InqFormula> = pop
        .classes()
        .iter()
        .filter(|c| c.key.classical() && seen.insert(&c.key.support))
        .map(|c| &c.rep)
        .collect();
    let mut split = LawCheck::new("(chi -> phi \\/ psi) -> (chi -> phi) \\/ (chi -> psi), chi classical");
    let mut dne = LawCheck::new("~~chi -> chi, chi classical");
    for chi in &chis {
        dne.record(teams::valid(ctx, &dne_shape(chi))?, || chi.to_string());
        for (_, _, phi) in &supports {
            for (_, _, psi) in &supports {
                let f = split_shape(chi, phi, psi);
                split.record(teams::valid(ctx, &f)?, || f.to_string());
            }
        }
    }
    Ok(vec![split, dne])
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub formula: String,
    pub team: String,
}

/// A non-classical `χ` from the population whose double-negation instance
/// fails, with a team not supporting it.
pub fn nonclassical_dne_witness(pop: &Population) -> Result<Option<Witness>, SuiteError> {
    let ctx = pop.ctx();
    for class in pop.classes().iter().filter(|c| !c.key.classical()) {
        let f = dne_shape(&class.rep);
        if let Some(t) = teams::counterexample(ctx, &f)? {
            return Ok(Some(Witness { formula: f.to_string(), team: ctx.format_team(t) }));
        }
    }
    Ok(None)
}

/// A non-classical `χ` making the split shape fail, with a witness team.
pub fn nonclassical_split_witness(pop: &Population) -> Result<Option<Witness>, SuiteError> {
    let ctx = pop.ctx();
    let supports = pop.support_classes();
    for class in pop.classes().iter().filter(|c| !c.key.classical()) {
        for (_, _, phi) in &supports {
            for (_, _, psi) in &supports {
                let f = split_shape(&class.rep, phi, psi);
                if let Some(t) = teams::counterexample(ctx, &f)? {
                    return Ok(Some(Witness { formula: f.to_string(), team: ctx.format_team(t) }));
                }
            }
        }
    }
    Ok(None)
}

/// Whenever `φ ∨ ψ` is valid, so is `φ` or `ψ`.
pub fn disjunction_property(pop: &Population) -> Result<LawCheck, SuiteError> {
    let ctx = pop.ctx();
    let supports = pop.support_classes();
    let mut c = LawCheck::new("valid(phi \\/ psi) => valid(phi) or valid(psi)");
    for (_, ca, a) in &supports {
        for (_, cb, b) in &supports {
            let ok = teams::disjunction_property_holds(ctx, a, b)?;
            c.record_weighted(ok, ca * cb, || format!("{a} | {b}"));
        }
    }
    Ok(c)
}

fn random_flat(ctx: &Context, rng: &mut impl Rng, depth: usize) -> FlatFormula {
    if depth == 0 || rng.gen_bool(0.3) {
        let n = ctx.nvars();
        let i = rng.gen_range(0..=n);
        return if i == n { FlatFormula::Zero } else { FlatFormula::var(&ctx.vars()[i]) };
    }
    let (a, b) = (random_flat(ctx, rng, depth - 1), random_flat(ctx, rng, depth - 1));
    if rng.gen_bool(0.5) {
        FlatFormula::cap(a, b)
    } else {
        FlatFormula::fimp(a, b)
    }
}

fn random_general(ctx: &Context, rng: &mut impl Rng, depth: usize) -> GeneralFormula {
    if depth == 0 || rng.gen_bool(0.3) {
        return GeneralFormula::Down(random_flat(ctx, rng, 2));
    }
    let (a, b) = (random_general(ctx, rng, depth - 1), random_general(ctx, rng, depth - 1));
    match rng.gen_range(0..3) {
        0 => GeneralFormula::and(a, b),
        1 => GeneralFormula::or(a, b),
        _ => GeneralFormula::imp(a, b),
    }
}

fn random_assignment(ctx: &Context, rng: &mut impl Rng) -> Assignment {
    let mut asg = Assignment::new();
    for v in ctx.vars() {
        asg.set(v, Team(rng.gen_range(0..ctx.team_count() as u32)));
    }
    asg
}

/// Classical axioms in the Flat sort, intuitionistic axioms in the General
/// sort, the split with a `↓` antecedent and double negation elimination for
/// `↓α` denote top, each on `samples` random instantiations.
pub fn multi_type_axioms(ctx: &Context, samples: u64, rng: &mut impl Rng) -> Result<Vec<LawCheck>, SuiteError> {
    let mut checks = [
        LawCheck::new("classical axioms, Flat sort"),
        LawCheck::new("intuitionistic axioms, General sort"),
        LawCheck::new("split with dn antecedent"),
        LawCheck::new("double negation elimination for dn"),
    ];
    for _ in 0..samples {
        let asg = random_assignment(ctx, rng);
        let (al, be, ga) = (random_flat(ctx, rng, 3), random_flat(ctx, rng, 3), random_flat(ctx, rng, 3));
        let (a, b, x) = (random_general(ctx, rng, 3), random_general(ctx, rng, 3), random_general(ctx, rng, 3));
        let cpl = CPL_AXIOMS[rng.gen_range(0..CPL_AXIOMS.len())].instance(al.clone(), be, ga);
        checks[0].record(flat_is_top(ctx, &asg, &cpl)?, || cpl.to_string());
        let ipl = IPL_AXIOMS[rng.gen_range(0..IPL_AXIOMS.len())].instance(a.clone(), b.clone(), x);
        checks[1].record(general_is_top(ctx, &asg, &ipl)?, || ipl.to_string());
        let split = down_split(&al, &a, &b);
        checks[2].record(general_is_top(ctx, &asg, &split)?, || split.to_string());
        let dne = down_dne(&al);
        checks[3].record(general_is_top(ctx, &asg, &dne)?, || dne.to_string());
    }
    Ok(checks.into())
}

/// Every bundled derivation checks and has no violations in the instance
/// audit at the given team sizes.
pub fn corpus_replay(nvars: &[usize]) -> Vec<LawCheck> {
    let mut check = LawCheck::new("bundled derivations check");
    let mut audit = LawCheck::new("bundled derivations audit clean");
    for e in corpus::DERIVATIONS {
        let d = match e.parse() {
            Ok(d) => d,
            Err(err) => {
                check.record(false, || format!("{}: {err}", e.name));
                continue;
            }
        };
        let res = check_derivation(&d);
        check.record(res.is_ok(), || format!("{}: {:?}", e.name, res.as_ref().err()));
        for &n in nvars {
            match audit_soundness(&d, n, 10_000, 7) {
                Ok(r) => audit.record(r.ok(), || format!("{} at |V|={n}: {} violation(s)", e.name, r.violations.len())),
                Err(err) => audit.record(false, || format!("{}: {err}", e.name)),
            }
        }
    }
    vec![check, audit]
}

/// Every schema of the rule table passes the exhaustive audit, and every
/// mutation is refuted.
pub fn rule_soundness(nvars: usize) -> Result<Vec<LawCheck>, SuiteError> {
    let mut sound = LawCheck::new("rule schemas sound");
    for a in audit_rule_table(nvars)? {
        sound.record(a.passed(), || format!("{}: {:?}", a.name, a.counterexample));
    }
    let mut caught = LawCheck::new("mutations refuted");
    let muts = audit_mutations(nvars)?;
    caught.record(muts.len() == mutations().len(), || "mutation count".into());
    for a in muts {
        caught.record(!a.passed() && a.counterexample.is_some(), || a.name.clone());
    }
    Ok(vec![sound, caught])
}

/// The printed reductions give the expected results, and random principal
/// cuts of every pattern reduce to checked derivations with the same
/// endsequent and smaller cut complexity.
pub fn cut_reduction(random: usize, rng: &mut impl Rng) -> Vec<LawCheck> {
    let mut printed = LawCheck::new("printed reductions");
    for pr in corpus::REDUCTIONS {
        let ok = (|| {
            let before = parse_script(pr.before).ok()?;
            let after = parse_script(pr.after).ok()?;
            check_derivation(&before).ok()?;
            let site = find_principal_cuts(&before).into_iter().next()?;
            let (got, _) = reduce_principal_cut(&before, &site).ok()?;
            Some(got == after && check_derivation(&got).is_ok())
        })();
        printed.record(ok == Some(true), || pr.name.to_string());
    }
    let mut generated = LawCheck::new("random principal cuts");
    for i in 0..random {
        let pattern = Pattern::ALL[i % Pattern::ALL.len()];
        let d = random_principal_cut(rng, pattern);
        let (out, report) = reduce_all(&d, 64);
        let ok = check_derivation(&d).is_ok()
            && !report.steps.is_empty()
            && report.steps[0].pattern == pattern
            && check_derivation(&out).is_ok()
            && out.conclusion == d.conclusion
            && complexity_decreases(&cut_sizes(&d), &cut_sizes(&out));
        generated.record(ok, || format!("{pattern:?}: {}", crate::syntax::print_script(&d)));
    }
    vec![printed, generated]
}
