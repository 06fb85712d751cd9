//! Principal cut reductions.
//!
//! A cut is principal-principal when both premises end by introducing the cut
//! formula in display. Each supported connective has a local rewrite that
//! either removes the cut or replaces it by cuts on proper subformulas.

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::calculus::check::check_node;
use crate::syntax::{
    Derivation, FlatFormula, FlatStructure, GeneralFormula, GeneralStructure, OccPath, Sequent, Side, Sort,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutElimError {
    #[error("no cut at {0}")]
    NotACut(String),
    #[error("cut at {0} is not principal on both sides")]
    NotPrincipal(String),
    #[error("unsupported cut pattern: {0}")]
    UnsupportedPattern(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pattern {
    Constant,
    Variable,
    Cap,
    FImp,
    And,
    Or,
    Imp,
    Down,
}

impl Pattern {
    pub const ALL: [Pattern; 8] = [
        Pattern::Constant,
        Pattern::Variable,
        Pattern::Cap,
        Pattern::FImp,
        Pattern::And,
        Pattern::Or,
        Pattern::Imp,
        Pattern::Down,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::Constant => "0",
            Pattern::Variable => "p",
            Pattern::Cap => "cap",
            Pattern::FImp => "fimp",
            Pattern::And => "and",
            Pattern::Or => "or",
            Pattern::Imp => "imp",
            Pattern::Down => "dn",
        }
    }
}

/// The cut formula of a cut node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutFormula {
    Flat(FlatFormula),
    General(GeneralFormula),
}

impl CutFormula {
    pub fn size(&self) -> usize {
        match self {
            CutFormula::Flat(a) => a.size(),
            CutFormula::General(a) => a.size(),
        }
    }

    pub fn sort(&self) -> Sort {
        match self {
            CutFormula::Flat(_) => Sort::Flat,
            CutFormula::General(_) => Sort::General,
        }
    }

    fn pattern(&self) -> Pattern {
        match self {
            CutFormula::Flat(FlatFormula::Zero) => Pattern::Constant,
            CutFormula::Flat(FlatFormula::Var(_)) => Pattern::Variable,
            CutFormula::Flat(FlatFormula::Cap(..)) => Pattern::Cap,
            CutFormula::Flat(FlatFormula::FImp(..)) => Pattern::FImp,
            CutFormula::General(GeneralFormula::Down(_)) => Pattern::Down,
            CutFormula::General(GeneralFormula::And(..)) => Pattern::And,
            CutFormula::General(GeneralFormula::Or(..)) => Pattern::Or,
            CutFormula::General(GeneralFormula::Imp(..)) => Pattern::Imp,
        }
    }

    /// Rules introducing the formula on the right and on the left.
    fn introducers(&self) -> (&'static str, &'static str) {
        match self.pattern() {
            Pattern::Constant => ("0R", "0L"),
            Pattern::Variable => ("Id", "Id"),
            Pattern::Cap => ("capR", "capL"),
            Pattern::FImp => ("fimpR", "fimpL"),
            Pattern::And => ("andR", "andL"),
            Pattern::Or => ("orR", "orL"),
            Pattern::Imp => ("impR", "impL"),
            Pattern::Down => ("dnR", "dnL"),
        }
    }
}

impl std::fmt::Display for CutFormula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CutFormula::Flat(a) => a.fmt(f),
            CutFormula::General(a) => a.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutSite {
    pub path: Vec<usize>,
    pub sort: Sort,
    pub cut_formula: String,
    pub size: usize,
    pub left_principal: bool,
    pub right_principal: bool,
}

impl CutSite {
    pub fn principal(&self) -> bool {
        self.left_principal && self.right_principal
    }
}

fn cut_formula(node: &Derivation) -> Option<CutFormula> {
    if node.rule != "Cut" || node.premises.len() != 2 {
        return None;
    }
    match &node.premises[0].conclusion {
        Sequent::Flat(_, FlatStructure::Fml(a)) => Some(CutFormula::Flat(a.clone())),
        Sequent::General(_, GeneralStructure::Fml(a)) => Some(CutFormula::General(a.clone())),
        _ => None,
    }
}

fn site_of(path: &[usize], node: &Derivation) -> Option<CutSite> {
    let cf = cut_formula(node)?;
    let (intro_r, intro_l) = cf.introducers();
    let left = &node.premises[0];
    let right = &node.premises[1];
    let left_principal = left.rule == intro_r;
    let displayed = match (&cf, &right.conclusion) {
        (CutFormula::Flat(a), Sequent::Flat(FlatStructure::Fml(b), _)) => {
            a == b
                && matches!(check_node(node), Ok((_, m)) if m.hole.as_ref().is_none_or(|h| *h == OccPath::root(Side::Ant)))
        }
        (CutFormula::General(a), Sequent::General(GeneralStructure::Fml(b), _)) => a == b,
        _ => false,
    };
    let right_principal = displayed && right.rule == intro_l;
    Some(CutSite {
        path: path.to_vec(),
        sort: cf.sort(),
        cut_formula: cf.to_string(),
        size: cf.size(),
        left_principal,
        right_principal,
    })
}

pub fn find_cuts(d: &Derivation) -> Vec<CutSite> {
    let mut out = Vec::new();
    d.walk(&mut |path, node| out.extend(site_of(path, node)));
    out
}

pub fn find_principal_cuts(d: &Derivation) -> Vec<CutSite> {
    find_cuts(d).into_iter().filter(CutSite::principal).collect()
}

/// Sizes of all cut formulas, for the complexity measure.
pub fn cut_sizes(d: &Derivation) -> Vec<usize> {
    find_cuts(d).into_iter().map(|s| s.size).collect()
}

/// Strict multiset-ordering decrease of cut sizes. Over a total order this is
/// lexicographic comparison of the descending-sorted sizes.
pub fn complexity_decreases(before: &[usize], after: &[usize]) -> bool {
    let desc = |v: &[usize]| {
        let mut v = v.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    desc(after) < desc(before)
}

fn n(concl: Sequent, rule: &str, premises: Vec<Derivation>) -> Derivation {
    Derivation::new(concl, rule, premises)
}

fn flat_cut(left: Derivation, right: Derivation, concl: Sequent) -> Derivation {
    n(concl, "Cut", vec![left, right]).with_active(OccPath::root(Side::Ant))
}

fn fs(a: &FlatFormula) -> FlatStructure {
    FlatStructure::Fml(a.clone())
}

fn gs(a: &GeneralFormula) -> GeneralStructure {
    GeneralStructure::Fml(a.clone())
}

fn flat_sides(s: &Sequent) -> (FlatStructure, FlatStructure) {
    match s {
        Sequent::Flat(a, b) => (a.clone(), b.clone()),
        Sequent::General(..) => unreachable!("checked Flat sequent"),
    }
}

fn gen_sides(s: &Sequent) -> (GeneralStructure, GeneralStructure) {
    match s {
        Sequent::General(a, b) => (a.clone(), b.clone()),
        Sequent::Flat(..) => unreachable!("checked General sequent"),
    }
}

fn rewrite(node: &Derivation, cf: &CutFormula) -> Result<Derivation, CutElimError> {
    use FlatStructure as FS;
    use GeneralStructure as GS;
    let left = &node.premises[0];
    let right = &node.premises[1];
    let concl = node.conclusion.clone();
    Ok(match (cf, cf.pattern()) {
        (_, Pattern::Constant) => left.premises[0].clone(),
        (_, Pattern::Variable) => n(concl, "Id", vec![]),
        (CutFormula::Flat(FlatFormula::Cap(a, b)), Pattern::Cap) => {
            let (p1, p2, p3) = (&left.premises[0], &left.premises[1], &right.premises[0]);
            let gamma = flat_sides(&p1.conclusion).0;
            let delta = flat_sides(&p2.conclusion).0;
            let lam = flat_sides(&p3.conclusion).1;
            let s1 = n(Sequent::Flat(fs(b), FS::sup(fs(a), lam.clone())), "res", vec![p3.clone()]);
            let s2 = flat_cut(p2.clone(), s1, Sequent::Flat(delta.clone(), FS::sup(fs(a), lam.clone())));
            let s3 = n(Sequent::Flat(FS::comma(fs(a), delta.clone()), lam.clone()), "res", vec![s2]);
            let s4 = n(Sequent::Flat(FS::comma(delta.clone(), fs(a)), lam.clone()), "E", vec![s3]);
            let s5 = n(Sequent::Flat(fs(a), FS::sup(delta.clone(), lam.clone())), "res", vec![s4]);
            let s6 = flat_cut(p1.clone(), s5, Sequent::Flat(gamma.clone(), FS::sup(delta.clone(), lam.clone())));
            let s7 = n(Sequent::Flat(FS::comma(delta, gamma), lam), "res", vec![s6]);
            n(concl, "E", vec![s7])
        }
        (CutFormula::Flat(FlatFormula::FImp(a, b)), Pattern::FImp) => {
            let (p1, p2, p3) = (&left.premises[0], &right.premises[0], &right.premises[1]);
            let gamma = flat_sides(&p1.conclusion).0;
            let delta = flat_sides(&p2.conclusion).0;
            let lam = flat_sides(&p3.conclusion).1;
            let ag = FS::comma(fs(a), gamma.clone());
            let t1 = n(Sequent::Flat(ag.clone(), fs(b)), "res", vec![p1.clone()]);
            let t2 = flat_cut(t1, p3.clone(), Sequent::Flat(ag, lam.clone()));
            let t3 = n(Sequent::Flat(FS::comma(gamma.clone(), fs(a)), lam.clone()), "E", vec![t2]);
            let t4 = n(Sequent::Flat(fs(a), FS::sup(gamma.clone(), lam.clone())), "res", vec![t3]);
            let t5 = flat_cut(p2.clone(), t4, Sequent::Flat(delta.clone(), FS::sup(gamma.clone(), lam.clone())));
            let t6 = n(Sequent::Flat(FS::comma(gamma.clone(), delta.clone()), lam.clone()), "res", vec![t5]);
            let t7 = n(Sequent::Flat(FS::comma(delta, gamma), lam), "E", vec![t6]);
            n(concl, "res", vec![t7])
        }
        (CutFormula::General(GeneralFormula::And(a, b)), Pattern::And) => {
            let (p1, p2, p3) = (&left.premises[0], &left.premises[1], &right.premises[0]);
            let x = gen_sides(&p1.conclusion).0;
            let y = gen_sides(&p2.conclusion).0;
            let z = gen_sides(&p3.conclusion).1;
            let u1 = n(Sequent::General(gs(b), GS::gt(gs(a), z.clone())), "res", vec![p3.clone()]);
            let u2 = n(Sequent::General(y.clone(), GS::gt(gs(a), z.clone())), "Cut", vec![p2.clone(), u1]);
            let u3 = n(Sequent::General(GS::semi(gs(a), y.clone()), z.clone()), "res", vec![u2]);
            let u4 = n(Sequent::General(GS::semi(y.clone(), gs(a)), z.clone()), "E", vec![u3]);
            let u5 = n(Sequent::General(gs(a), GS::gt(y.clone(), z.clone())), "res", vec![u4]);
            let u6 = n(Sequent::General(x.clone(), GS::gt(y.clone(), z.clone())), "Cut", vec![p1.clone(), u5]);
            let u7 = n(Sequent::General(GS::semi(y, x), z), "res", vec![u6]);
            n(concl, "E", vec![u7])
        }
        (CutFormula::General(GeneralFormula::Or(a, b)), Pattern::Or) => {
            let (p1, p2, p3) = (&left.premises[0], &right.premises[0], &right.premises[1]);
            let z = gen_sides(&p1.conclusion).0;
            let x = gen_sides(&p2.conclusion).1;
            let y = gen_sides(&p3.conclusion).1;
            let az = GS::gt(gs(a), z.clone());
            let v1 = n(Sequent::General(az.clone(), gs(b)), "res", vec![p1.clone()]);
            let v2 = n(Sequent::General(az, y.clone()), "Cut", vec![v1, p3.clone()]);
            let v3 = n(Sequent::General(z.clone(), GS::semi(gs(a), y.clone())), "res", vec![v2]);
            let v4 = n(Sequent::General(z.clone(), GS::semi(y.clone(), gs(a))), "E", vec![v3]);
            let yz = GS::gt(y.clone(), z.clone());
            let v5 = n(Sequent::General(yz.clone(), gs(a)), "res", vec![v4]);
            let v6 = n(Sequent::General(yz, x.clone()), "Cut", vec![v5, p2.clone()]);
            let v7 = n(Sequent::General(z, GS::semi(y, x)), "res", vec![v6]);
            n(concl, "E", vec![v7])
        }
        (CutFormula::General(GeneralFormula::Imp(a, b)), Pattern::Imp) => {
            let (p1, p2, p3) = (&left.premises[0], &right.premises[0], &right.premises[1]);
            let z = gen_sides(&p1.conclusion).0;
            let x = gen_sides(&p2.conclusion).0;
            let y = gen_sides(&p3.conclusion).1;
            let az = GS::semi(gs(a), z.clone());
            let w1 = n(Sequent::General(az.clone(), gs(b)), "res", vec![p1.clone()]);
            let w2 = n(Sequent::General(az, y.clone()), "Cut", vec![w1, p3.clone()]);
            let w3 = n(Sequent::General(GS::semi(z.clone(), gs(a)), y.clone()), "E", vec![w2]);
            let w4 = n(Sequent::General(gs(a), GS::gt(z.clone(), y.clone())), "res", vec![w3]);
            let w5 = n(Sequent::General(x.clone(), GS::gt(z.clone(), y.clone())), "Cut", vec![p2.clone(), w4]);
            let w6 = n(Sequent::General(GS::semi(z.clone(), x.clone()), y.clone()), "res", vec![w5]);
            let w7 = n(Sequent::General(GS::semi(x, z), y), "E", vec![w6]);
            n(concl, "res", vec![w7])
        }
        (CutFormula::General(GeneralFormula::Down(a)), Pattern::Down) => {
            let (p1, p2) = (&left.premises[0], &right.premises[0]);
            let x = gen_sides(&p1.conclusion).0;
            let y = gen_sides(&p2.conclusion).1;
            let fx = FS::f_of(x);
            let x1 = n(Sequent::Flat(fx.clone(), fs(a)), "d adj", vec![p1.clone()]);
            let x2 = n(Sequent::General(GS::down_of(fx), y), "Cut", vec![x1, p2.clone()])
                .with_active(OccPath::root(Side::Ant).child(0));
            n(concl, "d-f elim", vec![x2])
        }
        _ => return Err(CutElimError::UnsupportedPattern(cf.to_string())),
    })
}

/// Rewrite one principal-principal cut.
pub fn reduce_principal_cut(d: &Derivation, site: &CutSite) -> Result<(Derivation, Pattern), CutElimError> {
    let at = crate::calculus::check::path_string(&site.path);
    let node = d.at(&site.path).ok_or_else(|| CutElimError::NotACut(at.clone()))?;
    let cf = cut_formula(node).ok_or_else(|| CutElimError::NotACut(at.clone()))?;
    let fresh = site_of(&site.path, node).ok_or_else(|| CutElimError::NotACut(at.clone()))?;
    if !fresh.principal() {
        return Err(CutElimError::NotPrincipal(at));
    }
    let replacement = rewrite(node, &cf)?;
    let mut out = d.clone();
    *out.at_mut(&site.path).expect("path exists") = replacement;
    Ok((out, cf.pattern()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub path: String,
    pub pattern: Pattern,
    pub cut_formula: String,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReduceReport {
    pub steps: Vec<ReductionStep>,
    pub remaining_cuts: Vec<CutSite>,
    pub fuel_exhausted: bool,
}

impl ReduceReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let path = if s.path.is_empty() { "root" } else { &s.path };
            out.push_str(&format!("reduced {} cut on {} at {path}", s.pattern.name(), s.cut_formula));
            if let Some(note) = &s.note {
                out.push_str(&format!(" ({note})"));
            }
            out.push('\n');
        }
        for c in &self.remaining_cuts {
            let path = crate::calculus::check::path_string(&c.path);
            let path = if path.is_empty() { "root".to_string() } else { path };
            let kind = if c.principal() { "principal" } else { "unreduced (not principal on both sides)" };
            out.push_str(&format!("remaining cut on {} at {path}: {kind}\n", c.cut_formula));
        }
        out.push_str(&format!(
            "{} reduction(s), {} cut(s) remaining{}\n",
            self.steps.len(),
            self.remaining_cuts.len(),
            if self.fuel_exhausted { ", fuel exhausted" } else { "" }
        ));
        out
    }
}

/// Apply principal reductions until none applies or `fuel` steps are spent.
pub fn reduce_all(d: &Derivation, fuel: usize) -> (Derivation, ReduceReport) {
    let mut cur = d.clone();
    let mut steps = Vec::new();
    let mut fuel_exhausted = false;
    while let Some(site) = find_principal_cuts(&cur).into_iter().next() {
        if steps.len() == fuel {
            fuel_exhausted = true;
            break;
        }
        match reduce_principal_cut(&cur, &site) {
            Ok((next, pattern)) => {
                let note = (pattern == Pattern::Cap)
                    .then(|| "rewritten with Flat residuation to stay in the Flat sort".to_string());
                steps.push(ReductionStep {
                    path: crate::calculus::check::path_string(&site.path),
                    pattern,
                    cut_formula: site.cut_formula.clone(),
                    note,
                });
                cur = next;
            }
            Err(_) => break,
        }
    }
    let remaining_cuts = find_cuts(&cur);
    (cur, ReduceReport { steps, remaining_cuts, fuel_exhausted })
}

/// A cut-free derivation of `α ⊢ α`.
pub fn flat_identity(a: &FlatFormula) -> Derivation {
    let seq = |l: FlatStructure, r: FlatStructure| Sequent::Flat(l, r);
    match a {
        FlatFormula::Var(_) => n(seq(fs(a), fs(a)), "Id", vec![]),
        FlatFormula::Zero => n(seq(fs(a), fs(a)), "0R", vec![n(seq(fs(a), FlatStructure::Phi), "0L", vec![])]),
        FlatFormula::Cap(x, y) => {
            let both = n(seq(FlatStructure::comma(fs(x), fs(y)), fs(a)), "capR", vec![flat_identity(x), flat_identity(y)]);
            n(seq(fs(a), fs(a)), "capL", vec![both])
        }
        FlatFormula::FImp(x, y) => {
            let l = n(seq(fs(a), FlatStructure::sup(fs(x), fs(y))), "fimpL", vec![flat_identity(x), flat_identity(y)]);
            n(seq(fs(a), fs(a)), "fimpR", vec![l])
        }
    }
}

/// A cut-free derivation of `A ⊢ A`.
pub fn general_identity(a: &GeneralFormula) -> Derivation {
    let seq = |l: GeneralStructure, r: GeneralStructure| Sequent::General(l, r);
    match a {
        GeneralFormula::Down(x) => {
            let dx = GeneralStructure::down_of(fs(x));
            let m = n(seq(dx.clone(), dx.clone()), "d mon", vec![flat_identity(x)]);
            let l = n(seq(gs(a), dx), "dnL", vec![m]);
            n(seq(gs(a), gs(a)), "dnR", vec![l])
        }
        GeneralFormula::And(x, y) => {
            let r = n(seq(GeneralStructure::semi(gs(x), gs(y)), gs(a)), "andR", vec![general_identity(x), general_identity(y)]);
            n(seq(gs(a), gs(a)), "andL", vec![r])
        }
        GeneralFormula::Or(x, y) => {
            let l = n(seq(gs(a), GeneralStructure::semi(gs(x), gs(y))), "orL", vec![general_identity(x), general_identity(y)]);
            n(seq(gs(a), gs(a)), "orR", vec![l])
        }
        GeneralFormula::Imp(x, y) => {
            let l = n(seq(gs(a), GeneralStructure::gt(gs(x), gs(y))), "impL", vec![general_identity(x), general_identity(y)]);
            n(seq(gs(a), gs(a)), "impR", vec![l])
        }
    }
}

fn random_flat(rng: &mut impl Rng, depth: usize) -> FlatFormula {
    const ATOMS: [&str; 3] = ["p", "q", "r"];
    if depth == 0 || rng.gen_bool(0.35) {
        return if rng.gen_bool(0.15) { FlatFormula::Zero } else { FlatFormula::var(ATOMS[rng.gen_range(0..3)]) };
    }
    let (a, b) = (random_flat(rng, depth - 1), random_flat(rng, depth - 1));
    if rng.gen_bool(0.5) {
        FlatFormula::cap(a, b)
    } else {
        FlatFormula::fimp(a, b)
    }
}

fn random_general(rng: &mut impl Rng, depth: usize) -> GeneralFormula {
    if depth == 0 || rng.gen_bool(0.35) {
        return GeneralFormula::Down(random_flat(rng, 1));
    }
    let (a, b) = (random_general(rng, depth - 1), random_general(rng, depth - 1));
    match rng.gen_range(0..3) {
        0 => GeneralFormula::and(a, b),
        1 => GeneralFormula::or(a, b),
        _ => GeneralFormula::imp(a, b),
    }
}

/// A derivation whose root is a principal-principal cut of the given pattern,
/// built from identity derivations on random formulas, optionally weakened
/// below the cut.
pub fn random_principal_cut(rng: &mut impl Rng, pattern: Pattern) -> Derivation {
    use FlatStructure as FS;
    use GeneralStructure as GS;
    let cut = match pattern {
        Pattern::Constant => {
            let g = random_flat(rng, 2);
            let z = FlatFormula::Zero;
            let base = n(Sequent::Flat(fs(&z), FS::Phi), "0L", vec![]);
            let p1 = n(Sequent::Flat(FS::comma(fs(&z), fs(&g)), FS::Phi), "W", vec![base]);
            let gamma = FS::comma(fs(&z), fs(&g));
            let l = n(Sequent::Flat(gamma.clone(), fs(&z)), "0R", vec![p1]);
            let r = n(Sequent::Flat(fs(&z), FS::Phi), "0L", vec![]);
            flat_cut(l, r, Sequent::Flat(gamma, FS::Phi))
        }
        Pattern::Variable => {
            let p = FlatFormula::var(["p", "q", "r"][rng.gen_range(0..3)]);
            let id = || n(Sequent::Flat(fs(&p), fs(&p)), "Id", vec![]);
            flat_cut(id(), id(), Sequent::Flat(fs(&p), fs(&p)))
        }
        Pattern::Cap => {
            let (a, b) = (random_flat(rng, 2), random_flat(rng, 2));
            let c = FlatFormula::cap(a.clone(), b.clone());
            let l = n(Sequent::Flat(FS::comma(fs(&a), fs(&b)), fs(&c)), "capR", vec![flat_identity(&a), flat_identity(&b)]);
            let w = n(Sequent::Flat(FS::comma(fs(&a), fs(&b)), fs(&a)), "W", vec![flat_identity(&a)]);
            let r = n(Sequent::Flat(fs(&c), fs(&a)), "capL", vec![w]);
            flat_cut(l, r, Sequent::Flat(FS::comma(fs(&a), fs(&b)), fs(&a)))
        }
        Pattern::FImp => {
            let (a, b) = (random_flat(rng, 2), random_flat(rng, 2));
            let c = FlatFormula::fimp(a.clone(), b.clone());
            let l = flat_identity(&c);
            let r = n(Sequent::Flat(fs(&c), FS::sup(fs(&a), fs(&b))), "fimpL", vec![flat_identity(&a), flat_identity(&b)]);
            flat_cut(l, r, Sequent::Flat(fs(&c), FS::sup(fs(&a), fs(&b))))
        }
        Pattern::And => {
            let (a, b) = (random_general(rng, 2), random_general(rng, 2));
            let c = GeneralFormula::and(a.clone(), b.clone());
            let ab = GS::semi(gs(&a), gs(&b));
            let l = n(Sequent::General(ab.clone(), gs(&c)), "andR", vec![general_identity(&a), general_identity(&b)]);
            let w = n(Sequent::General(ab.clone(), gs(&a)), "W", vec![general_identity(&a)]);
            let r = n(Sequent::General(gs(&c), gs(&a)), "andL", vec![w]);
            n(Sequent::General(ab, gs(&a)), "Cut", vec![l, r])
        }
        Pattern::Or => {
            let (a, b) = (random_general(rng, 2), random_general(rng, 2));
            let c = GeneralFormula::or(a.clone(), b.clone());
            let ab = GS::semi(gs(&a), gs(&b));
            let w = n(Sequent::General(gs(&a), ab.clone()), "W", vec![general_identity(&a)]);
            let l = n(Sequent::General(gs(&a), gs(&c)), "orR", vec![w]);
            let r = n(Sequent::General(gs(&c), ab.clone()), "orL", vec![general_identity(&a), general_identity(&b)]);
            n(Sequent::General(gs(&a), ab), "Cut", vec![l, r])
        }
        Pattern::Imp => {
            let (a, b) = (random_general(rng, 2), random_general(rng, 2));
            let c = GeneralFormula::imp(a.clone(), b.clone());
            let w = n(Sequent::General(GS::semi(gs(&b), gs(&a)), gs(&b)), "W", vec![general_identity(&b)]);
            let e = n(Sequent::General(GS::semi(gs(&a), gs(&b)), gs(&b)), "E", vec![w]);
            let rs = n(Sequent::General(gs(&b), GS::gt(gs(&a), gs(&b))), "res", vec![e]);
            let l = n(Sequent::General(gs(&b), gs(&c)), "impR", vec![rs]);
            let r = n(Sequent::General(gs(&c), GS::gt(gs(&a), gs(&b))), "impL", vec![general_identity(&a), general_identity(&b)]);
            n(Sequent::General(gs(&b), GS::gt(gs(&a), gs(&b))), "Cut", vec![l, r])
        }
        Pattern::Down => {
            let a = random_flat(rng, 2);
            let da = GeneralFormula::Down(a.clone());
            let dd = GS::down_of(fs(&a));
            let m = || n(Sequent::General(dd.clone(), dd.clone()), "d mon", vec![flat_identity(&a)]);
            let l = n(Sequent::General(dd.clone(), gs(&da)), "dnR", vec![m()]);
            let r = n(Sequent::General(gs(&da), dd.clone()), "dnL", vec![m()]);
            n(Sequent::General(dd.clone(), dd), "Cut", vec![l, r])
        }
    };
    if rng.gen_bool(0.3) {
        weaken_below(rng, cut)
    } else {
        cut
    }
}

fn weaken_below(rng: &mut impl Rng, d: Derivation) -> Derivation {
    let concl = match &d.conclusion {
        Sequent::Flat(a, s) => Sequent::Flat(a.clone(), FlatStructure::comma(s.clone(), fs(&random_flat(rng, 1)))),
        Sequent::General(a, s) => {
            Sequent::General(GeneralStructure::semi(a.clone(), gs(&random_general(rng, 1))), s.clone())
        }
    };
    n(concl, "W", vec![d])
}

#[cfg(test)]
mod tests;
