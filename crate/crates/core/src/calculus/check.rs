//! Derivation checking.
//!
//! Type-uniformity of sequents is enforced by the `Sequent` type itself and by
//! the parser; the checker adds the cut-sort lint and the subterm lint on top
//! of rule matching.

use serde::Serialize;
use thiserror::Error;

use super::pattern::{match_seq, Binding, Bound};
use super::polarity::{node_at, occurrences, polarity_of, replace_flat_at, NodeRef, Polarity};
use super::rules::{lookup, RuleKind, RuleSchema};
use crate::syntax::{Derivation, FlatFormula, FlatStructure, GeneralFormula, GeneralStructure, OccPath, Sequent, Sort};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchBinding {
    pub schema: String,
    /// A double-line rule used bottom-up.
    pub reversed: bool,
    pub metas: Binding,
    /// The replaced occurrence in the right premise of a surgical cut.
    pub hole: Option<OccPath>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct NoMatch(pub String);

/// Match one schema against a node given by its conclusion and premise sequents.
pub fn match_rule(
    rule: &RuleSchema,
    conclusion: &Sequent,
    premises: &[Sequent],
    hole: Option<&OccPath>,
) -> Result<MatchBinding, NoMatch> {
    if rule.kind == RuleKind::SurgicalCut {
        return match_surgical(rule, conclusion, premises, hole);
    }
    if premises.len() != rule.premises.len() {
        return Err(NoMatch(format!(
            "{} expects {} premise(s), got {}",
            rule.name,
            rule.premises.len(),
            premises.len()
        )));
    }
    let attempt = |concl_pat: &super::pattern::SeqPat, prem_pats: &[super::pattern::SeqPat]| {
        let mut b = Binding::new();
        let ok = match_seq(concl_pat, conclusion, &mut b)
            && prem_pats.iter().zip(premises).all(|(p, s)| match_seq(p, s, &mut b));
        ok.then_some(b)
    };
    if let Some(metas) = attempt(&rule.conclusion, &rule.premises) {
        return Ok(MatchBinding { schema: rule.name.clone(), reversed: false, metas, hole: None });
    }
    if rule.bidirectional {
        if let Some(metas) = attempt(&rule.premises[0], std::slice::from_ref(&rule.conclusion)) {
            return Ok(MatchBinding { schema: rule.name.clone(), reversed: true, metas, hole: None });
        }
    }
    Err(NoMatch(format!("shape does not match {}: {}", rule.name, rule.display())))
}

fn match_surgical(
    rule: &RuleSchema,
    conclusion: &Sequent,
    premises: &[Sequent],
    hole: Option<&OccPath>,
) -> Result<MatchBinding, NoMatch> {
    let [left, right] = premises else {
        return Err(NoMatch(format!("{} expects 2 premises, got {}", rule.name, premises.len())));
    };
    let Sequent::Flat(gamma, FlatStructure::Fml(alpha)) = left else {
        return Err(NoMatch("left premise of the Flat cut must be Γ ⊢ α".into()));
    };
    let candidates: Vec<OccPath> = match hole {
        Some(p) => vec![p.clone()],
        None => occurrences(right)
            .into_iter()
            .filter(|(_, pol, n)| *pol == Polarity::Antecedent && *n == NodeRef::Flat(&FlatStructure::Fml(alpha.clone())))
            .map(|(p, _, _)| p)
            .collect(),
    };
    for path in &candidates {
        let is_alpha = matches!(node_at(right, path), Ok(NodeRef::Flat(FlatStructure::Fml(b))) if b == alpha);
        if !is_alpha || polarity_of(right, path) != Ok(Polarity::Antecedent) {
            continue;
        }
        if replace_flat_at(right, path, gamma).as_ref() == Ok(conclusion) {
            let mut metas = Binding::new();
            metas.insert("G".into(), Bound::FlatS(gamma.clone()));
            metas.insert("a".into(), Bound::FlatF(alpha.clone()));
            return Ok(MatchBinding { schema: rule.name.clone(), reversed: false, metas, hole: Some(path.clone()) });
        }
    }
    Err(NoMatch(match hole {
        Some(p) => format!("occurrence {p} is not an antecedent-part {alpha} whose replacement gives the conclusion"),
        None => format!("no antecedent-part occurrence of {alpha} in the right premise yields the conclusion"),
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FormRef<'a> {
    Flat(&'a FlatFormula),
    General(&'a GeneralFormula),
}

fn flat_in_flat(x: &FlatFormula, y: &FlatFormula) -> bool {
    x == y
        || match y {
            FlatFormula::Cap(a, b) | FlatFormula::FImp(a, b) => flat_in_flat(x, a) || flat_in_flat(x, b),
            _ => false,
        }
}

fn flat_in_general(x: &FlatFormula, y: &GeneralFormula) -> bool {
    match y {
        GeneralFormula::Down(a) => flat_in_flat(x, a),
        GeneralFormula::And(a, b) | GeneralFormula::Or(a, b) | GeneralFormula::Imp(a, b) => {
            flat_in_general(x, a) || flat_in_general(x, b)
        }
    }
}

fn general_in_general(x: &GeneralFormula, y: &GeneralFormula) -> bool {
    x == y
        || match y {
            GeneralFormula::Down(_) => false,
            GeneralFormula::And(a, b) | GeneralFormula::Or(a, b) | GeneralFormula::Imp(a, b) => {
                general_in_general(x, a) || general_in_general(x, b)
            }
        }
}

impl FormRef<'_> {
    fn within(self, other: FormRef<'_>) -> bool {
        match (self, other) {
            (FormRef::Flat(x), FormRef::Flat(y)) => flat_in_flat(x, y),
            (FormRef::Flat(x), FormRef::General(y)) => flat_in_general(x, y),
            (FormRef::General(x), FormRef::General(y)) => general_in_general(x, y),
            (FormRef::General(_), FormRef::Flat(_)) => false,
        }
    }
}

fn formula_leaves(seq: &Sequent) -> Vec<FormRef<'_>> {
    occurrences(seq)
        .into_iter()
        .filter_map(|(_, _, n)| match n {
            NodeRef::Flat(FlatStructure::Fml(a)) => Some(FormRef::Flat(a)),
            NodeRef::General(GeneralStructure::Fml(a)) => Some(FormRef::General(a)),
            _ => None,
        })
        .collect()
}

/// Subterm property: every formula in a premise is a subterm of a formula in the conclusion
/// or of the cut formula.
fn subterm_lint(node: &Derivation, cut_formula: Option<FormRef<'_>>) -> Result<(), String> {
    let mut pool = formula_leaves(&node.conclusion);
    pool.extend(cut_formula);
    for prem in &node.premises {
        for f in formula_leaves(&prem.conclusion) {
            if !pool.iter().any(|g| f.within(*g)) {
                let shown = match f {
                    FormRef::Flat(a) => a.to_string(),
                    FormRef::General(a) => a.to_string(),
                };
                return Err(format!("subterm property: premise formula {shown} is not a subterm of the conclusion"));
            }
        }
    }
    Ok(())
}

/// Cut sort: both occurrences of a cut formula live in the same sort.
fn cut_sort_lint(node: &Derivation, m: &MatchBinding) -> Result<Option<Sort>, String> {
    let prem = |i: usize| &node.premises[i].conclusion;
    if let Some(hole) = &m.hole {
        let right = node_at(prem(1), hole).map_err(|e| e.to_string())?;
        return match (prem(0), right) {
            (Sequent::Flat(_, FlatStructure::Fml(_)), NodeRef::Flat(FlatStructure::Fml(_))) => Ok(Some(Sort::Flat)),
            _ => Err("cut sort: cut formula occurrences differ in sort".into()),
        };
    }
    match (prem(0), prem(1)) {
        (Sequent::General(_, GeneralStructure::Fml(_)), Sequent::General(GeneralStructure::Fml(_), _)) => {
            Ok(Some(Sort::General))
        }
        _ => Err("cut sort: cut formula occurrences differ in sort".into()),
    }
}

/// Find the schema a node instantiates and run the lints.
pub fn check_node(node: &Derivation) -> Result<(&'static RuleSchema, MatchBinding), String> {
    let candidates = lookup(&node.rule);
    if candidates.is_empty() {
        return Err(format!("unknown rule '{}'", node.rule));
    }
    let prems: Vec<Sequent> = node.premises.iter().map(|p| p.conclusion.clone()).collect();
    let mut reasons = Vec::new();
    for rule in candidates {
        match match_rule(rule, &node.conclusion, &prems, node.active.as_ref()) {
            Ok(m) => {
                let cut_formula = if rule.label == "Cut" {
                    cut_sort_lint(node, &m)?;
                    match &node.premises[0].conclusion {
                        Sequent::Flat(_, FlatStructure::Fml(a)) => Some(FormRef::Flat(a)),
                        Sequent::General(_, GeneralStructure::Fml(a)) => Some(FormRef::General(a)),
                        _ => None,
                    }
                } else {
                    None
                };
                subterm_lint(node, cut_formula)?;
                return Ok((rule, m));
            }
            Err(NoMatch(r)) => reasons.push(r),
        }
    }
    Err(reasons.join("; "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeReport {
    /// Premise indices from the root, dot-separated; empty for the root.
    pub path: String,
    pub rule: String,
    pub conclusion: String,
    pub schema: Option<String>,
    pub ok: bool,
    pub reason: Option<String>,
    /// Matched a display postulate rather than a printed rule.
    pub extension: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub endsequent: String,
    pub nodes: Vec<NodeReport>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.nodes.iter().all(|n| n.ok)
    }

    pub fn first_error(&self) -> Option<&NodeReport> {
        self.nodes.iter().find(|n| !n.ok)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            let path = if n.path.is_empty() { "root".to_string() } else { n.path.clone() };
            let status = if n.ok { "ok" } else { "FAIL" };
            out.push_str(&format!("{status:4} {path:10} {:10} {}", n.rule, n.conclusion));
            if n.extension {
                out.push_str("  [extension: display postulate]");
            }
            if let Some(r) = &n.reason {
                out.push_str(&format!("\n     {r}"));
            }
            out.push('\n');
        }
        let verdict = if self.ok() { "derivation checks" } else { "derivation FAILS" };
        out.push_str(&format!("{verdict}: {} ({} nodes)\n", self.endsequent, self.nodes.len()));
        out
    }
}

pub fn path_string(path: &[usize]) -> String {
    path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
}

pub fn check_report(d: &Derivation) -> CheckReport {
    let mut nodes = Vec::new();
    d.walk(&mut |path, node| {
        let (schema, ok, reason, extension) = match check_node(node) {
            Ok((rule, _)) => (Some(rule.name.clone()), true, None, rule.extension),
            Err(r) => (None, false, Some(r), false),
        };
        nodes.push(NodeReport {
            path: path_string(path),
            rule: node.rule.clone(),
            conclusion: node.conclusion.to_string(),
            schema,
            ok,
            reason,
            extension,
        });
    });
    CheckReport { endsequent: d.conclusion.to_string(), nodes }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("node {} ({rule}): {reason}", if path.is_empty() { "root".to_string() } else { path_string(path) })]
pub struct CheckError {
    pub path: Vec<usize>,
    pub rule: String,
    pub reason: String,
}

/// Ok if every node instantiates its named rule; otherwise the first failing
/// node in pre-order.
pub fn check_derivation(d: &Derivation) -> Result<(), CheckError> {
    let mut first = None;
    d.walk(&mut |path, node| {
        if first.is_none() {
            if let Err(reason) = check_node(node) {
                first = Some(CheckError { path: path.to_vec(), rule: node.rule.clone(), reason });
            }
        }
    });
    first.map_or(Ok(()), Err)
}
