//! Occurrence paths, polarity and substitution at a path.
//!
//! Child indices: binary structural connectives have children 0 and 1; `F`,
//! `F*` and `⇓` have child 0. Formula leaves have no structural children.

use serde::Serialize;

use super::CalculusError;
use crate::syntax::{FlatStructure, GeneralStructure, OccPath, Sequent, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Polarity {
    Antecedent,
    Succedent,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Antecedent => Polarity::Succedent,
            Polarity::Succedent => Polarity::Antecedent,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeRef<'a> {
    Flat(&'a FlatStructure),
    General(&'a GeneralStructure),
}

impl<'a> NodeRef<'a> {
    /// Children with a flag telling whether the coordinate flips polarity.
    pub fn children(self) -> Vec<(NodeRef<'a>, bool)> {
        match self {
            NodeRef::Flat(s) => match s {
                FlatStructure::Phi | FlatStructure::Fml(_) => vec![],
                FlatStructure::Comma(a, b) => vec![(NodeRef::Flat(a), false), (NodeRef::Flat(b), false)],
                FlatStructure::Sup(a, b) => vec![(NodeRef::Flat(a), true), (NodeRef::Flat(b), false)],
                FlatStructure::FOf(x) => vec![(NodeRef::General(x), false)],
            },
            NodeRef::General(s) => match s {
                GeneralStructure::Fml(_) => vec![],
                GeneralStructure::DownOf(g) | GeneralStructure::FStarOf(g) => vec![(NodeRef::Flat(g), false)],
                GeneralStructure::Semi(a, b) => vec![(NodeRef::General(a), false), (NodeRef::General(b), false)],
                GeneralStructure::Gt(a, b) => vec![(NodeRef::General(a), true), (NodeRef::General(b), false)],
            },
        }
    }
}

fn root(seq: &Sequent, side: Side) -> NodeRef<'_> {
    match (seq, side) {
        (Sequent::Flat(a, _), Side::Ant) => NodeRef::Flat(a),
        (Sequent::Flat(_, s), Side::Suc) => NodeRef::Flat(s),
        (Sequent::General(a, _), Side::Ant) => NodeRef::General(a),
        (Sequent::General(_, s), Side::Suc) => NodeRef::General(s),
    }
}

fn side_polarity(side: Side) -> Polarity {
    match side {
        Side::Ant => Polarity::Antecedent,
        Side::Suc => Polarity::Succedent,
    }
}

fn walk_path<'a>(seq: &'a Sequent, path: &OccPath) -> Result<(NodeRef<'a>, Polarity), CalculusError> {
    let mut node = root(seq, path.side);
    let mut pol = side_polarity(path.side);
    for &i in &path.steps {
        let kids = node.children();
        let (child, flips) = *kids.get(i).ok_or_else(|| CalculusError::BadPath(path.to_string()))?;
        node = child;
        if flips {
            pol = pol.flip();
        }
    }
    Ok((node, pol))
}

pub fn node_at<'a>(seq: &'a Sequent, path: &OccPath) -> Result<NodeRef<'a>, CalculusError> {
    walk_path(seq, path).map(|(n, _)| n)
}

pub fn polarity_of(seq: &Sequent, path: &OccPath) -> Result<Polarity, CalculusError> {
    walk_path(seq, path).map(|(_, p)| p)
}

/// Every structure occurrence in pre-order, with its polarity.
pub fn occurrences(seq: &Sequent) -> Vec<(OccPath, Polarity, NodeRef<'_>)> {
    fn go<'a>(node: NodeRef<'a>, path: OccPath, pol: Polarity, out: &mut Vec<(OccPath, Polarity, NodeRef<'a>)>) {
        out.push((path.clone(), pol, node));
        for (i, (child, flips)) in node.children().into_iter().enumerate() {
            go(child, path.child(i), if flips { pol.flip() } else { pol }, out);
        }
    }
    let mut out = Vec::new();
    for side in [Side::Ant, Side::Suc] {
        go(root(seq, side), OccPath::root(side), side_polarity(side), &mut out);
    }
    out
}

fn replace_in_flat(s: &FlatStructure, steps: &[usize], rep: &FlatStructure) -> Option<FlatStructure> {
    let Some((&i, rest)) = steps.split_first() else {
        return Some(rep.clone());
    };
    Some(match (s, i) {
        (FlatStructure::Comma(a, b), 0) => FlatStructure::comma(replace_in_flat(a, rest, rep)?, (**b).clone()),
        (FlatStructure::Comma(a, b), 1) => FlatStructure::comma((**a).clone(), replace_in_flat(b, rest, rep)?),
        (FlatStructure::Sup(a, b), 0) => FlatStructure::sup(replace_in_flat(a, rest, rep)?, (**b).clone()),
        (FlatStructure::Sup(a, b), 1) => FlatStructure::sup((**a).clone(), replace_in_flat(b, rest, rep)?),
        (FlatStructure::FOf(x), 0) => FlatStructure::f_of(replace_in_general(x, rest, rep)?),
        _ => return None,
    })
}

fn replace_in_general(s: &GeneralStructure, steps: &[usize], rep: &FlatStructure) -> Option<GeneralStructure> {
    let (&i, rest) = steps.split_first()?;
    Some(match (s, i) {
        (GeneralStructure::DownOf(g), 0) => GeneralStructure::down_of(replace_in_flat(g, rest, rep)?),
        (GeneralStructure::FStarOf(g), 0) => GeneralStructure::fstar_of(replace_in_flat(g, rest, rep)?),
        (GeneralStructure::Semi(a, b), 0) => GeneralStructure::semi(replace_in_general(a, rest, rep)?, (**b).clone()),
        (GeneralStructure::Semi(a, b), 1) => GeneralStructure::semi((**a).clone(), replace_in_general(b, rest, rep)?),
        (GeneralStructure::Gt(a, b), 0) => GeneralStructure::gt(replace_in_general(a, rest, rep)?, (**b).clone()),
        (GeneralStructure::Gt(a, b), 1) => GeneralStructure::gt((**a).clone(), replace_in_general(b, rest, rep)?),
        _ => return None,
    })
}

/// Replace the Flat structure at `path` by `rep`.
pub fn replace_flat_at(seq: &Sequent, path: &OccPath, rep: &FlatStructure) -> Result<Sequent, CalculusError> {
    let bad = || CalculusError::BadPath(path.to_string());
    match node_at(seq, path)? {
        NodeRef::Flat(_) => {}
        NodeRef::General(_) => return Err(bad()),
    }
    let out = match (seq, path.side) {
        (Sequent::Flat(a, s), Side::Ant) => Sequent::Flat(replace_in_flat(a, &path.steps, rep).ok_or_else(bad)?, s.clone()),
        (Sequent::Flat(a, s), Side::Suc) => Sequent::Flat(a.clone(), replace_in_flat(s, &path.steps, rep).ok_or_else(bad)?),
        (Sequent::General(a, s), Side::Ant) => {
            Sequent::General(replace_in_general(a, &path.steps, rep).ok_or_else(bad)?, s.clone())
        }
        (Sequent::General(a, s), Side::Suc) => {
            Sequent::General(a.clone(), replace_in_general(s, &path.steps, rep).ok_or_else(bad)?)
        }
    };
    Ok(out)
}
