//! Abstract syntax for InqL formulas and the two-sorted calculus language.

use serde::Serialize;

/// A formula of propositional inquisitive logic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InqFormula {
    Var(String),
    Zero,
    And(Box<InqFormula>, Box<InqFormula>),
    Imp(Box<InqFormula>, Box<InqFormula>),
    Or(Box<InqFormula>, Box<InqFormula>),
}

impl InqFormula {
    pub fn var(name: &str) -> Self {
        InqFormula::Var(name.to_string())
    }

    pub fn and(a: InqFormula, b: InqFormula) -> Self {
        InqFormula::And(Box::new(a), Box::new(b))
    }

    pub fn imp(a: InqFormula, b: InqFormula) -> Self {
        InqFormula::Imp(Box::new(a), Box::new(b))
    }

    pub fn or(a: InqFormula, b: InqFormula) -> Self {
        InqFormula::Or(Box::new(a), Box::new(b))
    }

    /// `~a`, i.e. `a -> 0`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: InqFormula) -> Self {
        InqFormula::imp(a, InqFormula::Zero)
    }

    /// `?a`, i.e. `a \/ ~a`.
    pub fn question(a: InqFormula) -> Self {
        InqFormula::or(a.clone(), InqFormula::neg(a))
    }

    /// Dependence atom `=(p1,...,pn,q)`: `?p1 /\ ... /\ ?pn -> ?q`.
    /// With no antecedent variables this is just `?q`.
    pub fn dependence(ps: &[&str], q: &str) -> Self {
        let target = InqFormula::question(InqFormula::var(q));
        let mut it = ps.iter();
        match it.next() {
            None => target,
            Some(first) => {
                let ante = it.fold(InqFormula::question(InqFormula::var(first)), |acc, p| {
                    InqFormula::and(acc, InqFormula::question(InqFormula::var(p)))
                });
                InqFormula::imp(ante, target)
            }
        }
    }

    /// Classical formulas are those without `\/`.
    pub fn is_classical(&self) -> bool {
        match self {
            InqFormula::Var(_) | InqFormula::Zero => true,
            InqFormula::And(a, b) | InqFormula::Imp(a, b) => a.is_classical() && b.is_classical(),
            InqFormula::Or(..) => false,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            InqFormula::Var(_) | InqFormula::Zero => 0,
            InqFormula::And(a, b) | InqFormula::Imp(a, b) | InqFormula::Or(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            InqFormula::Var(_) | InqFormula::Zero => 1,
            InqFormula::And(a, b) | InqFormula::Imp(a, b) | InqFormula::Or(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            InqFormula::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            InqFormula::Zero => {}
            InqFormula::And(a, b) | InqFormula::Imp(a, b) | InqFormula::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// Formula of the Flat (classical) sort.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlatFormula {
    Var(String),
    Zero,
    Cap(Box<FlatFormula>, Box<FlatFormula>),
    FImp(Box<FlatFormula>, Box<FlatFormula>),
}

impl FlatFormula {
    pub fn var(name: &str) -> Self {
        FlatFormula::Var(name.to_string())
    }

    pub fn cap(a: FlatFormula, b: FlatFormula) -> Self {
        FlatFormula::Cap(Box::new(a), Box::new(b))
    }

    pub fn fimp(a: FlatFormula, b: FlatFormula) -> Self {
        FlatFormula::FImp(Box::new(a), Box::new(b))
    }

    /// `~a`, i.e. `a ~> 0`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: FlatFormula) -> Self {
        FlatFormula::fimp(a, FlatFormula::Zero)
    }

    /// `a | b`, i.e. `~a ~> b`.
    pub fn cup(a: FlatFormula, b: FlatFormula) -> Self {
        FlatFormula::fimp(FlatFormula::neg(a), b)
    }

    /// Number of connectives and leaves.
    pub fn size(&self) -> usize {
        match self {
            FlatFormula::Var(_) | FlatFormula::Zero => 1,
            FlatFormula::Cap(a, b) | FlatFormula::FImp(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            FlatFormula::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            FlatFormula::Zero => {}
            FlatFormula::Cap(a, b) | FlatFormula::FImp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// Formula of the General (inquisitive) sort.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneralFormula {
    Down(FlatFormula),
    And(Box<GeneralFormula>, Box<GeneralFormula>),
    Or(Box<GeneralFormula>, Box<GeneralFormula>),
    Imp(Box<GeneralFormula>, Box<GeneralFormula>),
}

impl GeneralFormula {
    pub fn down(a: FlatFormula) -> Self {
        GeneralFormula::Down(a)
    }

    pub fn and(a: GeneralFormula, b: GeneralFormula) -> Self {
        GeneralFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: GeneralFormula, b: GeneralFormula) -> Self {
        GeneralFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: GeneralFormula, b: GeneralFormula) -> Self {
        GeneralFormula::Imp(Box::new(a), Box::new(b))
    }

    /// `neg A`, i.e. `A => dn(0)`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: GeneralFormula) -> Self {
        GeneralFormula::imp(a, GeneralFormula::Down(FlatFormula::Zero))
    }

    /// Number of connectives and leaves; `dn(a)` counts as one plus the size of `a`.
    pub fn size(&self) -> usize {
        match self {
            GeneralFormula::Down(a) => 1 + a.size(),
            GeneralFormula::And(a, b) | GeneralFormula::Or(a, b) | GeneralFormula::Imp(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            GeneralFormula::Down(a) => a.collect_vars(out),
            GeneralFormula::And(a, b) | GeneralFormula::Or(a, b) | GeneralFormula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// Structures of the Flat sort.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlatStructure {
    /// Structural unit `Ph`.
    Phi,
    Fml(FlatFormula),
    /// `G, D`
    Comma(Box<FlatStructure>, Box<FlatStructure>),
    /// `G |> D`
    Sup(Box<FlatStructure>, Box<FlatStructure>),
    /// `F(X)`
    FOf(Box<GeneralStructure>),
}

impl FlatStructure {
    pub fn fml(a: FlatFormula) -> Self {
        FlatStructure::Fml(a)
    }

    pub fn comma(a: FlatStructure, b: FlatStructure) -> Self {
        FlatStructure::Comma(Box::new(a), Box::new(b))
    }

    pub fn sup(a: FlatStructure, b: FlatStructure) -> Self {
        FlatStructure::Sup(Box::new(a), Box::new(b))
    }

    pub fn f_of(x: GeneralStructure) -> Self {
        FlatStructure::FOf(Box::new(x))
    }
}

/// Structures of the General sort.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneralStructure {
    /// `Dn(G)`
    DownOf(Box<FlatStructure>),
    /// `Fs(G)`
    FStarOf(Box<FlatStructure>),
    Fml(GeneralFormula),
    /// `X ; Y`
    Semi(Box<GeneralStructure>, Box<GeneralStructure>),
    /// `X > Y`
    Gt(Box<GeneralStructure>, Box<GeneralStructure>),
}

impl GeneralStructure {
    pub fn fml(a: GeneralFormula) -> Self {
        GeneralStructure::Fml(a)
    }

    pub fn down_of(g: FlatStructure) -> Self {
        GeneralStructure::DownOf(Box::new(g))
    }

    pub fn fstar_of(g: FlatStructure) -> Self {
        GeneralStructure::FStarOf(Box::new(g))
    }

    pub fn semi(a: GeneralStructure, b: GeneralStructure) -> Self {
        GeneralStructure::Semi(Box::new(a), Box::new(b))
    }

    pub fn gt(a: GeneralStructure, b: GeneralStructure) -> Self {
        GeneralStructure::Gt(Box::new(a), Box::new(b))
    }
}

/// The two sorts of the calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sort {
    Flat,
    General,
}

/// A type-uniform sequent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sequent {
    Flat(FlatStructure, FlatStructure),
    General(GeneralStructure, GeneralStructure),
}

impl Sequent {
    pub fn sort(&self) -> Sort {
        match self {
            Sequent::Flat(..) => Sort::Flat,
            Sequent::General(..) => Sort::General,
        }
    }

    /// Atoms occurring anywhere in the sequent, in order of first occurrence.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self {
            Sequent::Flat(a, s) => {
                flat_struct_vars(a, &mut out);
                flat_struct_vars(s, &mut out);
            }
            Sequent::General(a, s) => {
                gen_struct_vars(a, &mut out);
                gen_struct_vars(s, &mut out);
            }
        }
        out
    }
}

fn flat_struct_vars(s: &FlatStructure, out: &mut Vec<String>) {
    match s {
        FlatStructure::Phi => {}
        FlatStructure::Fml(a) => a.collect_vars(out),
        FlatStructure::Comma(a, b) | FlatStructure::Sup(a, b) => {
            flat_struct_vars(a, out);
            flat_struct_vars(b, out);
        }
        FlatStructure::FOf(x) => gen_struct_vars(x, out),
    }
}

fn gen_struct_vars(s: &GeneralStructure, out: &mut Vec<String>) {
    match s {
        GeneralStructure::DownOf(g) | GeneralStructure::FStarOf(g) => flat_struct_vars(g, out),
        GeneralStructure::Fml(a) => a.collect_vars(out),
        GeneralStructure::Semi(a, b) | GeneralStructure::Gt(a, b) => {
            gen_struct_vars(a, out);
            gen_struct_vars(b, out);
        }
    }
}

/// Which side of the turnstile an occurrence path starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Ant,
    Suc,
}

/// Address of a structure node inside a sequent: a side followed by child indices.
///
/// Binary structural connectives number their children 0 and 1; unary ones
/// (`F`, `Fs`, `Dn`) use 0. Formula leaves have no children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccPath {
    pub side: Side,
    pub steps: Vec<usize>,
}

impl OccPath {
    pub fn root(side: Side) -> Self {
        OccPath { side, steps: Vec::new() }
    }

    pub fn child(&self, i: usize) -> Self {
        let mut steps = self.steps.clone();
        steps.push(i);
        OccPath { side: self.side, steps }
    }
}

/// A derivation tree as written in a proof script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: String,
    pub premises: Vec<Derivation>,
    /// Occurrence of the cut formula in the right premise, for Flat cuts.
    pub active: Option<OccPath>,
}

impl Derivation {
    pub fn new(conclusion: Sequent, rule: &str, premises: Vec<Derivation>) -> Self {
        Derivation { conclusion, rule: rule.to_string(), premises, active: None }
    }

    pub fn with_active(mut self, path: OccPath) -> Self {
        self.active = Some(path);
        self
    }

    /// Subderivation at a premise-index path.
    pub fn at(&self, path: &[usize]) -> Option<&Derivation> {
        let mut cur = self;
        for &i in path {
            cur = cur.premises.get(i)?;
        }
        Some(cur)
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut Derivation> {
        let mut cur = self;
        for &i in path {
            cur = cur.premises.get_mut(i)?;
        }
        Some(cur)
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(Derivation::node_count).sum::<usize>()
    }

    /// Pre-order walk over all nodes with their premise-index paths.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&[usize], &'a Derivation)) {
        fn go<'a>(d: &'a Derivation, path: &mut Vec<usize>, f: &mut impl FnMut(&[usize], &'a Derivation)) {
            f(path, d);
            for (i, p) in d.premises.iter().enumerate() {
                path.push(i);
                go(p, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f);
    }
}
