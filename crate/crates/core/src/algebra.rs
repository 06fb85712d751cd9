//! The Boolean algebra of teams and the Heyting algebra of down-sets of teams,
//! the maps between them, and the algebraic interpretation of both sorts.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::syntax::{FlatFormula, GeneralFormula};
use crate::teams::{Context, Team, TeamSet};

pub mod laws;

/// Elements of the Boolean algebra are teams.
pub type BElem = Team;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("collection of teams is not downward closed")]
    NotDownClosed,
    #[error("no team assigned to variable '{0}'")]
    Unassigned(String),
    #[error("{what} supports at most {cap} variables, got {n}")]
    TooManyVariables { what: &'static str, cap: usize, n: usize },
}

/// A downward-closed collection of teams.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AElem {
    set: TeamSet,
}

impl AElem {
    pub fn new(set: TeamSet) -> Result<AElem, AlgebraError> {
        if set.is_downward_closed() {
            Ok(AElem { set })
        } else {
            Err(AlgebraError::NotDownClosed)
        }
    }

    /// All teams.
    pub fn top(ctx: &Context) -> AElem {
        AElem { set: TeamSet::all(ctx) }
    }

    /// The empty collection.
    pub fn bottom(ctx: &Context) -> AElem {
        AElem { set: TeamSet::empty(ctx) }
    }

    pub fn contains(&self, t: Team) -> bool {
        self.set.contains(t)
    }

    pub fn teams(&self) -> impl Iterator<Item = Team> + '_ {
        self.set.iter()
    }

    pub fn as_set(&self) -> &TeamSet {
        &self.set
    }

    pub fn into_set(self) -> TeamSet {
        self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn is_top(&self) -> bool {
        self.set.is_full()
    }

    pub fn is_subset(&self, other: &AElem) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn meet(&self, other: &AElem) -> AElem {
        AElem { set: self.set.intersection(&other.set) }
    }

    pub fn join(&self, other: &AElem) -> AElem {
        AElem { set: self.set.union(&other.set) }
    }
}

/// Smallest down-set containing every member of `set`.
pub fn down_closure(ctx: &Context, set: &TeamSet) -> AElem {
    let mut out = TeamSet::empty(ctx);
    for t in set.iter() {
        if !out.contains(t) {
            for s in t.subteams() {
                out.insert(s);
            }
        }
    }
    AElem { set: out }
}

/// `↓S`: all subteams of `S`.
pub fn downset(ctx: &Context, s: Team) -> AElem {
    AElem { set: TeamSet::from_teams(ctx, s.subteams()) }
}

/// `f X`: the union of the members of `X`.
pub fn f(x: &AElem) -> Team {
    x.teams().fold(Team::EMPTY, Team::union)
}

/// `f* S`: the singletons of `S` together with the empty team, and the empty
/// collection when `S` is empty. This is the left adjoint of `f`.
pub fn f_star(ctx: &Context, s: Team) -> AElem {
    if s.is_empty() {
        return AElem::bottom(ctx);
    }
    let mut set = TeamSet::from_teams(ctx, s.worlds().map(Team::singleton));
    set.insert(Team::EMPTY);
    AElem { set }
}

/// `Y ⇒ Z`: teams all of whose subteams in `Y` are in `Z`.
pub fn heyting(ctx: &Context, y: &AElem, z: &AElem) -> AElem {
    let set = TeamSet::from_teams(
        ctx,
        ctx.teams().filter(|t| t.subteams().all(|s| !y.contains(s) || z.contains(s))),
    );
    AElem { set }
}

/// Co-implication: the down-closure of `X ∖ Y`, the least `W` with `X ⊆ Y ∪ W`.
pub fn coimp(ctx: &Context, x: &AElem, y: &AElem) -> AElem {
    down_closure(ctx, &x.set.difference(&y.set))
}

/// Boolean implication `S^c ∪ T`.
pub fn b_imp(ctx: &Context, s: Team, t: Team) -> Team {
    ctx.complement(s).union(t)
}

/// Whether `X = ↓ f X`, i.e. `X` is generated by a single team.
pub fn is_flat_element(ctx: &Context, x: &AElem) -> bool {
    *x == downset(ctx, f(x))
}

/// Every down-set of teams, in enumeration order. Capped at two variables.
pub fn all_downsets(ctx: &Context) -> Result<Vec<AElem>, AlgebraError> {
    if ctx.nvars() > 2 {
        return Err(AlgebraError::TooManyVariables { what: "down-set enumeration", cap: 2, n: ctx.nvars() });
    }
    let n = ctx.team_count();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let set = TeamSet::from_teams(ctx, (0..n).filter(|i| mask >> i & 1 == 1).map(|i| Team(i as u32)));
        if set.is_downward_closed() {
            out.push(AElem { set });
        }
    }
    Ok(out)
}

/// Teams assigned to propositional variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    map: BTreeMap<String, Team>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    /// Each variable denotes the team of worlds where it is true.
    pub fn canonical(ctx: &Context) -> Self {
        let map = ctx.vars().iter().enumerate().map(|(i, v)| (v.clone(), ctx.var_team(i))).collect();
        Assignment { map }
    }

    pub fn set(&mut self, var: &str, t: Team) {
        self.map.insert(var.to_string(), t);
    }

    pub fn with(mut self, var: &str, t: Team) -> Self {
        self.set(var, t);
        self
    }

    pub fn get(&self, var: &str) -> Result<Team, AlgebraError> {
        self.map.get(var).copied().ok_or_else(|| AlgebraError::Unassigned(var.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Team)> {
        self.map.iter()
    }
}

pub fn denote_flat(ctx: &Context, asg: &Assignment, a: &FlatFormula) -> Result<Team, AlgebraError> {
    Ok(match a {
        FlatFormula::Var(v) => asg.get(v)?,
        FlatFormula::Zero => Team::EMPTY,
        FlatFormula::Cap(x, y) => denote_flat(ctx, asg, x)?.intersection(denote_flat(ctx, asg, y)?),
        FlatFormula::FImp(x, y) => b_imp(ctx, denote_flat(ctx, asg, x)?, denote_flat(ctx, asg, y)?),
    })
}

pub fn denote_general(ctx: &Context, asg: &Assignment, a: &GeneralFormula) -> Result<AElem, AlgebraError> {
    Ok(match a {
        GeneralFormula::Down(x) => downset(ctx, denote_flat(ctx, asg, x)?),
        GeneralFormula::And(x, y) => denote_general(ctx, asg, x)?.meet(&denote_general(ctx, asg, y)?),
        GeneralFormula::Or(x, y) => denote_general(ctx, asg, x)?.join(&denote_general(ctx, asg, y)?),
        GeneralFormula::Imp(x, y) => heyting(ctx, &denote_general(ctx, asg, x)?, &denote_general(ctx, asg, y)?),
    })
}

#[cfg(test)]
mod tests;
