//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Library results are compared against oracles written here: a naive
//! support evaluator, a brute-force down-set enumeration and the textbook
//! multiset ordering.

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use inqmt::algebra::laws::{self, LawCheck};
use inqmt::algebra::{all_downsets, denote_general, Assignment};
use inqmt::calculus::rules::{mutations, rule_table};
use inqmt::calculus::{audit_mutations, audit_rule_table, audit_soundness, check_derivation};
use inqmt::corpus;
use inqmt::cutelim::{find_cuts, find_principal_cuts, random_principal_cut, reduce_all, reduce_principal_cut, Pattern};
use inqmt::population::Population;
use inqmt::suites;
use inqmt::syntax::{parse_script, Derivation, InqFormula, Sequent};
use inqmt::teams::{self, Context, Team};
use inqmt::translate::tau_i;

const SEMANTICS_BUDGET: Duration = Duration::from_secs(60);
const ALGEBRA_BUDGET: Duration = Duration::from_secs(120);
const ORACLE_SAMPLES: usize = 20_000;
const HILBERT_SAMPLES: u64 = 1_000;
const KP_SAMPLES: u64 = 100_000;
const RANDOM_CUTS: usize = 100;
const MIN_SAMPLED_ASSIGNMENTS: u64 = 10_000;
const EXPECTED_MUTATIONS: usize = 10;

// ---------------------------------------------------------------- oracles

/// Worlds are bitmasks over the variable list; a team is a mask over worlds.
struct Oracle {
    vars: Vec<String>,
}

impl Oracle {
    fn new(vars: &[&str]) -> Self {
        Oracle { vars: vars.iter().map(|s| s.to_string()).collect() }
    }

    fn worlds(&self) -> u32 {
        1 << self.vars.len()
    }

    fn teams(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.worlds())
    }

    fn var_true(&self, v: &str, w: u32) -> bool {
        let i = self.vars.iter().position(|x| x == v).expect("declared variable");
        w >> i & 1 == 1
    }

    fn support(&self, t: u32, a: &InqFormula) -> bool {
        match a {
            InqFormula::Var(v) => (0..self.worlds()).all(|w| t >> w & 1 == 0 || self.var_true(v, w)),
            InqFormula::Zero => t == 0,
            InqFormula::And(x, y) => self.support(t, x) && self.support(t, y),
            InqFormula::Or(x, y) => self.support(t, x) || self.support(t, y),
            InqFormula::Imp(x, y) => {
                let mut s = t;
                loop {
                    if self.support(s, x) && !self.support(s, y) {
                        return false;
                    }
                    if s == 0 {
                        return true;
                    }
                    s = (s - 1) & t;
                }
            }
        }
    }

    fn support_set(&self, a: &InqFormula) -> Vec<bool> {
        self.teams().map(|t| self.support(t, a)).collect()
    }

    fn valid(&self, a: &InqFormula) -> bool {
        self.teams().all(|t| self.support(t, a))
    }

    fn downward_closed_with_empty(&self, a: &InqFormula) -> bool {
        let s = self.support_set(a);
        s[0] && self.teams().all(|t| !s[t as usize] || (0..t).all(|u| u & !t != 0 || s[u as usize]))
    }

    fn flat(&self, a: &InqFormula) -> bool {
        let s = self.support_set(a);
        self.teams().all(|t| s[t as usize] == (0..self.worlds()).all(|w| t >> w & 1 == 0 || s[1 << w]))
    }

    /// `φ^f` with classical disjunction written as `¬(¬a ∧ ¬b)`, a different
    /// but equivalent reading from the library's `¬a → b`.
    fn flatten(a: &InqFormula) -> InqFormula {
        match a {
            InqFormula::Var(_) | InqFormula::Zero => a.clone(),
            InqFormula::And(x, y) => InqFormula::and(Self::flatten(x), Self::flatten(y)),
            InqFormula::Imp(x, y) => InqFormula::imp(Self::flatten(x), Self::flatten(y)),
            InqFormula::Or(x, y) => InqFormula::neg(InqFormula::and(
                InqFormula::neg(Self::flatten(x)),
                InqFormula::neg(Self::flatten(y)),
            )),
        }
    }
}

/// Down-sets of the powerset of `n` worlds by brute force over all collections.
fn brute_downsets(worlds: u32) -> usize {
    let teams = 1u32 << worlds;
    (0u64..(1u64 << teams))
        .filter(|&c| (0..teams).all(|t| c >> t & 1 == 0 || (0..teams).all(|u| u & !t != 0 || c >> u & 1 == 1)))
        .count()
}

/// Dershowitz-Manna: `after < before` iff they differ and every element
/// gained is dominated by some element lost.
fn multiset_less(after: &[usize], before: &[usize]) -> bool {
    let count = |v: &[usize]| {
        let mut m: BTreeMap<usize, i64> = BTreeMap::new();
        for &x in v {
            *m.entry(x).or_default() += 1;
        }
        m
    };
    let (a, b) = (count(after), count(before));
    if a == b {
        return false;
    }
    let keys: HashSet<usize> = a.keys().chain(b.keys()).copied().collect();
    keys.iter().all(|&x| {
        let gained = a.get(&x).copied().unwrap_or(0) > b.get(&x).copied().unwrap_or(0);
        !gained || b.iter().any(|(&y, &n)| y > x && n > a.get(&y).copied().unwrap_or(0))
    })
}

fn cut_sizes(d: &Derivation) -> Vec<usize> {
    find_cuts(d).into_iter().map(|c| c.size).collect()
}

/// Every Cut node joins premises whose sorts agree with the cut formula: the
/// left premise and the conclusion-side context of the right premise.
fn cuts_sort_uniform(d: &Derivation) -> bool {
    let mut ok = true;
    d.walk(&mut |_, n| {
        if n.rule == "Cut" {
            let left = n.premises[0].conclusion.sort();
            let right = n.premises[1].conclusion.sort();
            let general_cut = matches!(n.premises[0].conclusion, Sequent::General(..));
            ok &= if general_cut { right == left && n.conclusion.sort() == left } else { n.conclusion.sort() == right };
        }
    });
    ok
}

// ---------------------------------------------------------------- harness

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn all_pass(checks: &[LawCheck]) -> bool {
    checks.iter().all(LawCheck::passed)
}

fn first_failure(checks: &[LawCheck]) -> String {
    checks
        .iter()
        .find(|c| !c.passed())
        .map(|c| format!("; first failure in '{}': {:?}", c.name, c.first_failure))
        .unwrap_or_default()
}

fn pq() -> Context {
    Context::new(&["p", "q"]).unwrap()
}

fn c1_semantics(pop: &Population, built: Duration) -> Outcome {
    let start = Instant::now();
    let lib = suites::semantics(pop).unwrap();
    let oracle = Oracle::new(&["p", "q"]);
    let reps_ok = pop.classes().iter().all(|c| oracle.downward_closed_with_empty(&c.rep));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let ctx = pq();
    let mut sampled_ok = true;
    for _ in 0..ORACLE_SAMPLES {
        let a = pop.sample(&mut rng);
        let lib_set = teams::supporting_teams(&ctx, &a).unwrap();
        sampled_ok &= oracle.teams().all(|t| lib_set.contains(Team(t)) == oracle.support(t, &a));
        sampled_ok &= teams::downward_closed(&ctx, &a).unwrap();
    }
    let elapsed = built + start.elapsed();
    let expected_total: u64 = 3 + 3 * 2703 * 2703;
    outcome(
        lib.passed() && reps_ok && sampled_ok && pop.total() == expected_total && elapsed < SEMANTICS_BUDGET,
        format!(
            "{} formulas in {} semantic classes, {} violations; oracle on representatives {}; \
             {ORACLE_SAMPLES} sampled formulas agree with the oracle: {sampled_ok}; {:.2}s (budget {}s)",
            pop.total(),
            pop.classes().len(),
            lib.failures,
            if reps_ok { "clean" } else { "VIOLATED" },
            elapsed.as_secs_f64(),
            SEMANTICS_BUDGET.as_secs()
        ),
    )
}

fn c2_flatness(pop: &Population) -> Outcome {
    let lib = suites::flatness(pop).unwrap();
    let o = Oracle::new(&["p", "q"]);
    let mut oracle_ok = true;
    let mut classical = 0u64;
    for c in pop.classes() {
        let a = &c.rep;
        let s = o.support_set(a);
        let flat = o.flat(a);
        let by_f = s == o.support_set(&Oracle::flatten(a));
        let by_nn = s == o.support_set(&InqFormula::neg(InqFormula::neg(a.clone())));
        oracle_ok &= flat == by_f && by_f == by_nn;
        if a.is_classical() {
            classical += c.count;
            oracle_ok &= flat;
        }
    }
    outcome(
        all_pass(&lib) && oracle_ok,
        format!(
            "triple equivalence on {} formulas, {} classical all flat; oracle agrees: {oracle_ok}{}",
            lib[0].checked,
            classical,
            first_failure(&lib)
        ),
    )
}

fn c3_hilbert(pop: &Population) -> Outcome {
    let lib = suites::hilbert_classical(pop).unwrap();
    let o = Oracle::new(&["p", "q"]);
    let witness = suites::nonclassical_dne_witness(pop).unwrap();
    let split_witness = suites::nonclassical_split_witness(pop).unwrap();
    let witness_ok = match &witness {
        Some(w) => {
            let f = inqmt::syntax::parse_inql(&w.formula).unwrap();
            let t = pq().parse_team(&w.team).unwrap();
            !o.support(t.0, &f)
        }
        None => false,
    };
    let axioms = suites::multi_type_axioms(&pq(), HILBERT_SAMPLES, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
    let w = witness.as_ref().map(|w| format!("{} fails on team {}", w.formula, w.team)).unwrap_or("none".into());
    let sw = split_witness.map(|w| format!("{} fails on team {}", w.formula, w.team)).unwrap_or("none".into());
    outcome(
        all_pass(&lib) && witness_ok && all_pass(&axioms) && axioms.iter().all(|c| c.checked == HILBERT_SAMPLES),
        format!(
            "split: {} class triples valid; double negation: {} classical classes valid; \
             non-classical witness (double negation): {w}; (split): {sw}; multi-type axioms top on {HILBERT_SAMPLES} samples each{}",
            lib[0].checked,
            lib[1].checked,
            first_failure(&lib) + &first_failure(&axioms)
        ),
    )
}

fn c4_algebra() -> Outcome {
    let start = Instant::now();
    let v1 = Context::new(&["p"]).unwrap();
    let v2 = pq();
    let ds1 = all_downsets(&v1).unwrap();
    let ds2 = all_downsets(&v2).unwrap();
    let counts_ok = ds1.len() == brute_downsets(2) && ds2.len() == brute_downsets(4) && ds2.len() == 168;
    let mut checks = laws::all_exhaustive(&v2).unwrap();
    let kp1 = laws::kp_exhaustive(&v1, &ds1);
    let kp216 = laws::kp_downset_triples(&v1, &ds1);
    let kp_sampled = laws::kp_sampled(&v2, &ds2, KP_SAMPLES, &mut ChaCha8Rng::seed_from_u64(3));
    let kp_counts = (kp1.checked, kp216.checked, kp_sampled.checked);
    checks.extend([kp1, kp216, kp_sampled]);
    let elapsed = start.elapsed();
    outcome(
        all_pass(&checks) && counts_ok && kp_counts == (144, 216, KP_SAMPLES) && elapsed < ALGEBRA_BUDGET,
        format!(
            "{} laws exhaustive over 16 teams and {} down-sets (brute-force count agrees: {counts_ok}); \
             KP at |V|=1: {} team antecedents, {} down-set triples; KP at |V|=2: {} random triples; {:.2}s (budget {}s){}",
            checks.len() - 3,
            ds2.len(),
            kp_counts.0,
            kp_counts.1,
            kp_counts.2,
            elapsed.as_secs_f64(),
            ALGEBRA_BUDGET.as_secs(),
            first_failure(&checks)
        ),
    )
}

fn c5_adequacy(pop: &Population) -> Outcome {
    let lib = suites::adequacy(pop);
    let o = Oracle::new(&["p", "q"]);
    let ctx = pq();
    let asg = Assignment::canonical(&ctx);
    let oracle_ok = pop.classes().iter().all(|c| {
        let den = denote_general(&ctx, &asg, &tau_i(&c.rep)).unwrap();
        o.teams().all(|t| den.contains(Team(t)) == o.support(t, &c.rep))
    });
    outcome(
        lib.passed() && oracle_ok,
        format!(
            "{} formulas x 16 teams, {} violations; oracle support vs translation denotation on every class: {oracle_ok}",
            lib.checked, lib.failures
        ),
    )
}

fn c6_corpus() -> Outcome {
    let mut ok = corpus::DERIVATIONS.len() >= 6;
    let mut lines = Vec::new();
    for e in corpus::DERIVATIONS {
        let d = e.parse().unwrap();
        let checks = check_derivation(&d).is_ok();
        let a1 = audit_soundness(&d, 1, MIN_SAMPLED_ASSIGNMENTS, 11).unwrap();
        let a2 = audit_soundness(&d, 2, MIN_SAMPLED_ASSIGNMENTS, 11).unwrap();
        let sizes_ok = a1.exhaustive && (a2.exhaustive || a2.assignments >= MIN_SAMPLED_ASSIGNMENTS);
        ok &= checks && a1.ok() && a2.ok() && sizes_ok;
        lines.push(format!(
            "{} (checks={checks}, |V|=1 {} x{} viol={}, |V|=2 {} x{} viol={})",
            e.name,
            if a1.exhaustive { "exhaustive" } else { "sampled" },
            a1.assignments,
            a1.violations.len(),
            if a2.exhaustive { "exhaustive" } else { "sampled" },
            a2.assignments,
            a2.violations.len()
        ));
    }
    let n = corpus::DERIVATIONS.len();
    outcome(ok, format!("{n}/{n} bundled derivations: {}", lines.join("; ")))
}

fn c7_rules() -> Outcome {
    let table = audit_rule_table(1).unwrap();
    let schemas = rule_table().iter().filter(|r| r.kind == inqmt::calculus::rules::RuleKind::Schema).count();
    let sound = table.iter().all(|a| a.passed());
    let muts = audit_mutations(1).unwrap();
    let caught: Vec<String> = muts
        .iter()
        .filter(|m| !m.passed() && m.counterexample.is_some())
        .map(|m| format!("{} [{}]", m.name, m.counterexample.as_ref().unwrap()))
        .collect();
    outcome(
        sound && table.len() >= schemas && muts.len() == EXPECTED_MUTATIONS && caught.len() == EXPECTED_MUTATIONS
            && mutations().len() == EXPECTED_MUTATIONS,
        format!(
            "{} audited schemas sound at |V|=1 ({} table schemas plus surgical-cut contexts); \
             {}/{EXPECTED_MUTATIONS} mutations caught: {}",
            table.len(),
            schemas,
            caught.len(),
            caught.join(", ")
        ),
    )
}

fn reduction_ok(d: &Derivation) -> Result<Pattern, String> {
    check_derivation(d).map_err(|e| format!("input fails: {e:?}"))?;
    let site = find_principal_cuts(d).into_iter().min_by_key(|s| s.path.len()).ok_or("no principal cut")?;
    let (out, pattern) = reduce_principal_cut(d, &site).map_err(|e| e.to_string())?;
    check_derivation(&out).map_err(|e| format!("output fails: {e:?}"))?;
    if out.conclusion != d.conclusion {
        return Err("endsequent changed".into());
    }
    if !multiset_less(&cut_sizes(&out), &cut_sizes(d)) {
        return Err("cut complexity did not decrease".into());
    }
    if !cuts_sort_uniform(&out) {
        return Err("cut sorts not uniform".into());
    }
    Ok(pattern)
}

fn c8_cuts() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for pr in corpus::REDUCTIONS {
        let before = parse_script(pr.before).unwrap();
        let after = parse_script(pr.after).unwrap();
        let r = reduction_ok(&before);
        let (got, _) = reduce_principal_cut(&before, &find_principal_cuts(&before)[0]).unwrap();
        let matches = got == after;
        ok &= r.is_ok() && matches;
        notes.push(format!("{} {}", pr.name, if r.is_ok() && matches { "ok" } else { "FAILED" }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for pattern in [Pattern::FImp, Pattern::And, Pattern::Or, Pattern::Imp] {
        let r = reduction_ok(&random_principal_cut(&mut rng, pattern));
        ok &= r == Ok(pattern);
        notes.push(format!("{} {}", pattern.name(), if r == Ok(pattern) { "ok" } else { "FAILED" }));
    }
    let mut random_ok = 0;
    for i in 0..RANDOM_CUTS {
        let pattern = Pattern::ALL[i % Pattern::ALL.len()];
        let d = random_principal_cut(&mut rng, pattern);
        let single = reduction_ok(&d).is_ok();
        let (out, report) = reduce_all(&d, 64);
        if single && !report.steps.is_empty() && check_derivation(&out).is_ok() && out.conclusion == d.conclusion {
            random_ok += 1;
        }
    }
    ok &= random_ok == RANDOM_CUTS;
    outcome(ok, format!("printed: {}; delegated: {}; {random_ok}/{RANDOM_CUTS} random principal cuts reduce", notes[..4].join(", "), notes[4..].join(", ")))
}

fn c9_disjunction(pop: &Population) -> Outcome {
    let lib = suites::disjunction_property(pop).unwrap();
    let o = Oracle::new(&["p", "q"]);
    let supports = pop.support_classes();
    let valid: Vec<bool> = supports.iter().map(|(_, _, a)| o.valid(a)).collect();
    let mut oracle_ok = true;
    for (i, (_, _, a)) in supports.iter().enumerate() {
        for (j, (_, _, b)) in supports.iter().enumerate() {
            if o.valid(&InqFormula::or((*a).clone(), (*b).clone())) {
                oracle_ok &= valid[i] || valid[j];
            }
        }
    }
    outcome(
        lib.passed() && oracle_ok,
        format!(
            "{} support classes, {} formula pairs, {} violations; oracle agrees: {oracle_ok}",
            supports.len(),
            lib.checked,
            lib.failures
        ),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let start = Instant::now();
    let pop = Population::build(&pq(), 3).unwrap();
    let built = start.elapsed();
    let criteria: Vec<Criterion> = vec![
        ("1 semantics: downward closure and empty team", Box::new(|| c1_semantics(&pop, built))),
        ("2 flatness triple", Box::new(|| c2_flatness(&pop))),
        ("3 Hilbert validation", Box::new(|| c3_hilbert(&pop))),
        ("4 algebra laws", Box::new(c4_algebra)),
        ("5 translation adequacy", Box::new(|| c5_adequacy(&pop))),
        ("6 kernel corpus", Box::new(c6_corpus)),
        ("7 rule soundness and mutations", Box::new(c7_rules)),
        ("8 cut reduction", Box::new(c8_cuts)),
        ("9 disjunction property", Box::new(|| c9_disjunction(&pop))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        let o = run();
        let mark = if o.pass { "PASS" } else { "FAIL" };
        println!("{mark} criterion {name} [{:.2}s]: {}", t.elapsed().as_secs_f64(), o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
