//! Worlds, teams and support.
//!
//! A world over variables `v0..vn-1` is a bitmask: bit `i` is the value of
//! `vi`. A team is a set of worlds, stored as a bitmask over world indices.
//! A collection of teams ([`TeamSet`]) is a bitset indexed by team masks.

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::syntax::InqFormula;

/// Hard cap on the number of variables for any team enumeration.
pub const MAX_VARS: usize = 4;
/// Cap for routines that quantify over the subteams of every team.
pub const MAX_SUBTEAM_VARS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TeamError {
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("invalid variable name '{0}'")]
    BadVariable(String),
    #[error("{what} supports at most {cap} variables, got {n}")]
    TooManyVariables { what: &'static str, cap: usize, n: usize },
    #[error("variable '{0}' is not declared")]
    UnknownVariable(String),
    #[error("bad team '{text}': {reason}")]
    BadTeam { text: String, reason: String },
    #[error("formula is not classical")]
    NotClassical,
}

/// The ordered list of propositional variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    vars: Vec<String>,
}

fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_lowercase())
        && cs.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && s != "dn"
        && s != "neg"
}

impl Context {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Self, TeamError> {
        let mut out: Vec<String> = Vec::new();
        for v in vars {
            let v = v.as_ref().trim();
            if !valid_name(v) {
                return Err(TeamError::BadVariable(v.to_string()));
            }
            if out.iter().any(|w| w == v) {
                return Err(TeamError::DuplicateVariable(v.to_string()));
            }
            out.push(v.to_string());
        }
        if out.len() > MAX_VARS {
            return Err(TeamError::TooManyVariables { what: "team enumeration", cap: MAX_VARS, n: out.len() });
        }
        Ok(Context { vars: out })
    }

    /// Parse a comma-separated variable list such as `p,q`.
    pub fn parse(list: &str) -> Result<Self, TeamError> {
        let names: Vec<&str> = if list.trim().is_empty() { Vec::new() } else { list.split(',').collect() };
        Context::new(&names)
    }

    /// Context `v0, ..., v{n-1}`, for checks that do not care about names.
    pub fn anonymous(n: usize) -> Result<Self, TeamError> {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        Context::new(&names)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn worlds(&self) -> usize {
        1 << self.vars.len()
    }

    pub fn team_count(&self) -> usize {
        1 << self.worlds()
    }

    pub fn require_at_most(&self, cap: usize, what: &'static str) -> Result<(), TeamError> {
        if self.nvars() > cap {
            Err(TeamError::TooManyVariables { what, cap, n: self.nvars() })
        } else {
            Ok(())
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn full(&self) -> Team {
        Team((((1u64 << self.worlds()) - 1) & 0xffff_ffff) as u32)
    }

    pub fn complement(&self, t: Team) -> Team {
        Team(!t.0 & self.full().0)
    }

    /// Team of all worlds where variable `i` is true.
    pub fn var_team(&self, i: usize) -> Team {
        Team((0..self.worlds()).filter(|w| w >> i & 1 == 1).fold(0, |m, w| m | 1 << w))
    }

    /// All teams, in mask order.
    pub fn teams(&self) -> impl Iterator<Item = Team> {
        (0..self.team_count() as u32).map(Team)
    }

    /// Parse a team such as `{10,01}`; each world lists variable values in declared order.
    pub fn parse_team(&self, text: &str) -> Result<Team, TeamError> {
        let bad = |reason: &str| TeamError::BadTeam { text: text.to_string(), reason: reason.to_string() };
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| bad("expected {...}"))?;
        let mut team = Team::EMPTY;
        if inner.trim().is_empty() {
            return Ok(team);
        }
        for word in inner.split(',') {
            let word = word.trim();
            if word.len() != self.nvars() {
                return Err(bad(&format!("world '{word}' must have {} digits", self.nvars())));
            }
            let mut w = 0usize;
            for (i, c) in word.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => w |= 1 << i,
                    _ => return Err(bad(&format!("world '{word}' must use only 0 and 1"))),
                }
            }
            team = team.with(w);
        }
        Ok(team)
    }

    pub fn format_world(&self, w: usize) -> String {
        (0..self.nvars()).map(|i| if w >> i & 1 == 1 { '1' } else { '0' }).collect()
    }

    pub fn format_team(&self, t: Team) -> String {
        let worlds: Vec<String> = t.worlds().map(|w| self.format_world(w)).collect();
        format!("{{{}}}", worlds.join(","))
    }
}

/// A set of worlds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Team(pub u32);

impl Team {
    pub const EMPTY: Team = Team(0);

    pub fn singleton(w: usize) -> Team {
        Team(1 << w)
    }

    pub fn with(self, w: usize) -> Team {
        Team(self.0 | 1 << w)
    }

    pub fn contains(self, w: usize) -> bool {
        self.0 >> w & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Team) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Team) -> Team {
        Team(self.0 | other.0)
    }

    pub fn intersection(self, other: Team) -> Team {
        Team(self.0 & other.0)
    }

    pub fn minus(self, other: Team) -> Team {
        Team(self.0 & !other.0)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn worlds(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |w| self.contains(*w))
    }

    /// All subteams, including the empty team and `self`, by submask enumeration.
    pub fn subteams(self) -> impl Iterator<Item = Team> {
        let m = self.0;
        let mut next = Some(m);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & m) };
            Some(Team(cur))
        })
    }
}

/// A collection of teams over a fixed context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TeamSet {
    bits: FixedBitSet,
}

impl fmt::Debug for TeamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

impl TeamSet {
    pub fn empty(ctx: &Context) -> TeamSet {
        TeamSet { bits: FixedBitSet::with_capacity(ctx.team_count()) }
    }

    pub fn all(ctx: &Context) -> TeamSet {
        let mut bits = FixedBitSet::with_capacity(ctx.team_count());
        bits.insert_range(..);
        TeamSet { bits }
    }

    pub fn from_teams(ctx: &Context, teams: impl IntoIterator<Item = Team>) -> TeamSet {
        let mut s = TeamSet::empty(ctx);
        for t in teams {
            s.insert(t);
        }
        s
    }

    /// Number of team slots (not members).
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, t: Team) -> bool {
        self.bits.contains(t.index())
    }

    pub fn insert(&mut self, t: Team) {
        self.bits.insert(t.index());
    }

    pub fn remove(&mut self, t: Team) {
        self.bits.set(t.index(), false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn iter(&self) -> impl Iterator<Item = Team> + '_ {
        self.bits.ones().map(|i| Team(i as u32))
    }

    pub fn is_subset(&self, other: &TeamSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &TeamSet) -> TeamSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        TeamSet { bits }
    }

    pub fn intersection(&self, other: &TeamSet) -> TeamSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        TeamSet { bits }
    }

    pub fn difference(&self, other: &TeamSet) -> TeamSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        TeamSet { bits }
    }

    /// Whether every subteam of every member is a member.
    pub fn is_downward_closed(&self) -> bool {
        self.iter().all(|t| t.subteams().all(|s| self.contains(s)))
    }
}

/// An InqL formula with variables replaced by their indices.
#[derive(Clone, Debug)]
enum Resolved {
    Var(usize),
    Zero,
    And(Box<Resolved>, Box<Resolved>),
    Imp(Box<Resolved>, Box<Resolved>),
    Or(Box<Resolved>, Box<Resolved>),
}

fn resolve(ctx: &Context, a: &InqFormula) -> Result<Resolved, TeamError> {
    Ok(match a {
        InqFormula::Var(v) => Resolved::Var(ctx.index_of(v).ok_or_else(|| TeamError::UnknownVariable(v.clone()))?),
        InqFormula::Zero => Resolved::Zero,
        InqFormula::And(x, y) => Resolved::And(Box::new(resolve(ctx, x)?), Box::new(resolve(ctx, y)?)),
        InqFormula::Imp(x, y) => Resolved::Imp(Box::new(resolve(ctx, x)?), Box::new(resolve(ctx, y)?)),
        InqFormula::Or(x, y) => Resolved::Or(Box::new(resolve(ctx, x)?), Box::new(resolve(ctx, y)?)),
    })
}

fn supports(ctx: &Context, t: Team, a: &Resolved) -> bool {
    match a {
        Resolved::Var(i) => t.is_subset(ctx.var_team(*i)),
        Resolved::Zero => t.is_empty(),
        Resolved::And(x, y) => supports(ctx, t, x) && supports(ctx, t, y),
        Resolved::Or(x, y) => supports(ctx, t, x) || supports(ctx, t, y),
        Resolved::Imp(x, y) => t.subteams().all(|s| !supports(ctx, s, x) || supports(ctx, s, y)),
    }
}

fn check_team(ctx: &Context, t: Team) -> Result<(), TeamError> {
    if t.is_subset(ctx.full()) {
        Ok(())
    } else {
        Err(TeamError::BadTeam { text: format!("{:#b}", t.0), reason: "contains worlds outside the context".into() })
    }
}

/// `t ⊨ a`, by direct recursion on the support clauses.
pub fn support(ctx: &Context, t: Team, a: &InqFormula) -> Result<bool, TeamError> {
    check_team(ctx, t)?;
    Ok(supports(ctx, t, &resolve(ctx, a)?))
}

/// Teams supporting `a ~> b` given the teams supporting `a` and `b`:
/// those all of whose subteams supporting `a` also support `b`.
pub fn imp_teams(ctx: &Context, a: &TeamSet, b: &TeamSet) -> TeamSet {
    TeamSet::from_teams(ctx, ctx.teams().filter(|t| t.subteams().all(|s| !a.contains(s) || b.contains(s))))
}

fn teams_of(ctx: &Context, a: &Resolved) -> TeamSet {
    match a {
        Resolved::Var(i) => {
            let v = ctx.var_team(*i);
            TeamSet::from_teams(ctx, v.subteams())
        }
        Resolved::Zero => TeamSet::from_teams(ctx, [Team::EMPTY]),
        Resolved::And(x, y) => teams_of(ctx, x).intersection(&teams_of(ctx, y)),
        Resolved::Or(x, y) => teams_of(ctx, x).union(&teams_of(ctx, y)),
        Resolved::Imp(x, y) => imp_teams(ctx, &teams_of(ctx, x), &teams_of(ctx, y)),
    }
}

/// The collection of all teams supporting `a`, computed bottom-up.
pub fn supporting_teams(ctx: &Context, a: &InqFormula) -> Result<TeamSet, TeamError> {
    Ok(teams_of(ctx, &resolve(ctx, a)?))
}

/// A team not supporting `a`, if any; the smallest mask is reported.
pub fn counterexample(ctx: &Context, a: &InqFormula) -> Result<Option<Team>, TeamError> {
    let s = supporting_teams(ctx, a)?;
    Ok(ctx.teams().find(|t| !s.contains(*t)))
}

/// Supported by every team.
pub fn valid(ctx: &Context, a: &InqFormula) -> Result<bool, TeamError> {
    Ok(counterexample(ctx, a)?.is_none())
}

/// Every team supporting all premises supports the conclusion.
pub fn entails(ctx: &Context, premises: &[InqFormula], conclusion: &InqFormula) -> Result<bool, TeamError> {
    let mut common = TeamSet::all(ctx);
    for p in premises {
        common = common.intersection(&supporting_teams(ctx, p)?);
    }
    Ok(common.is_subset(&supporting_teams(ctx, conclusion)?))
}

pub fn equivalent(ctx: &Context, a: &InqFormula, b: &InqFormula) -> Result<bool, TeamError> {
    Ok(supporting_teams(ctx, a)? == supporting_teams(ctx, b)?)
}

/// Flat: a team supports `a` iff each of its singletons does.
pub fn is_flat(ctx: &Context, a: &InqFormula) -> Result<bool, TeamError> {
    let s = supporting_teams(ctx, a)?;
    Ok(ctx.teams().all(|t| s.contains(t) == t.worlds().all(|w| s.contains(Team::singleton(w)))))
}

/// Downward closure and the empty-team property, checked team by team with `support`.
pub fn downward_closed(ctx: &Context, a: &InqFormula) -> Result<bool, TeamError> {
    ctx.require_at_most(MAX_SUBTEAM_VARS, "downward-closure check")?;
    let r = resolve(ctx, a)?;
    if !supports(ctx, Team::EMPTY, &r) {
        return Ok(false);
    }
    Ok(ctx.teams().all(|t| !supports(ctx, t, &r) || t.subteams().all(|s| supports(ctx, s, &r))))
}

/// `premises, a ⊨ b` iff `premises ⊨ a -> b`.
pub fn deduction_theorem_holds(
    ctx: &Context,
    premises: &[InqFormula],
    a: &InqFormula,
    b: &InqFormula,
) -> Result<bool, TeamError> {
    let mut with_a = premises.to_vec();
    with_a.push(a.clone());
    Ok(entails(ctx, &with_a, b)? == entails(ctx, premises, &InqFormula::imp(a.clone(), b.clone()))?)
}

/// If `a \/ b` is valid then so is `a` or `b`.
pub fn disjunction_property_holds(ctx: &Context, a: &InqFormula, b: &InqFormula) -> Result<bool, TeamError> {
    Ok(!valid(ctx, &InqFormula::or(a.clone(), b.clone()))? || valid(ctx, a)? || valid(ctx, b)?)
}

fn truth(ctx: &Context, w: usize, a: &Resolved) -> bool {
    match a {
        Resolved::Var(i) => ctx.var_team(*i).contains(w),
        Resolved::Zero => false,
        Resolved::And(x, y) => truth(ctx, w, x) && truth(ctx, w, y),
        Resolved::Imp(x, y) => !truth(ctx, w, x) || truth(ctx, w, y),
        Resolved::Or(x, y) => truth(ctx, w, x) || truth(ctx, w, y),
    }
}

/// Truth of a classical formula at a single world.
pub fn true_at(ctx: &Context, w: usize, a: &InqFormula) -> Result<bool, TeamError> {
    if !a.is_classical() {
        return Err(TeamError::NotClassical);
    }
    Ok(truth(ctx, w, &resolve(ctx, a)?))
}

/// Support for classical formulas via truth at each world. Cross-checked
/// against [`support`] in tests; never used in its place.
pub fn support_classical_fast(ctx: &Context, t: Team, a: &InqFormula) -> Result<bool, TeamError> {
    if !a.is_classical() {
        return Err(TeamError::NotClassical);
    }
    check_team(ctx, t)?;
    let r = resolve(ctx, a)?;
    Ok(t.worlds().all(|w| truth(ctx, w, &r)))
}
