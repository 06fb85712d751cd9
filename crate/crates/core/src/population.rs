//! The formula population used by the property suites: every InqL formula of
//! bounded depth over the declared variables, built from the variables and
//! `0` with `∧`, `→`, `∨`.
//!
//! The top level is not materialized. Every quantity recorded for a formula
//! (see [`Key`]) is determined by the connective and the keys of the two
//! immediate subformulas, so each distinct combination is evaluated once on a
//! representative formula and weighted by the number of formulas it stands
//! for.

use std::collections::HashMap;

use rand::Rng;
use thiserror::Error;

use crate::algebra::{denote_flat, denote_general, AlgebraError, Assignment};
use crate::syntax::InqFormula;
use crate::teams::{supporting_teams, Context, Team, TeamError, TeamSet};
use crate::translate::{flatten, tau_c, tau_i};

/// Largest number of formulas materialized below the top level.
pub const MAX_MATERIALIZED: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PopulationError {
    #[error("population below depth {depth} has {count} formulas, over the cap of {cap}")]
    TooLarge { depth: usize, count: u128, cap: usize },
    #[error(transparent)]
    Team(#[from] TeamError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Everything the suites ask about a formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Key {
    /// Teams supporting the formula.
    pub support: TeamSet,
    /// Teams supporting its flattening.
    pub flat_support: TeamSet,
    /// Denotation of the Flat translation, for classical formulas.
    pub flat_denotation: Option<Team>,
    /// Denotation of the General translation under the canonical assignment.
    pub translation: TeamSet,
}

impl Key {
    pub fn of(ctx: &Context, a: &InqFormula) -> Result<Key, PopulationError> {
        let asg = Assignment::canonical(ctx);
        let flat_denotation = match tau_c(a) {
            Ok(c) => Some(denote_flat(ctx, &asg, &c)?),
            Err(_) => None,
        };
        Ok(Key {
            support: supporting_teams(ctx, a)?,
            flat_support: supporting_teams(ctx, &flatten(a))?,
            flat_denotation,
            translation: denote_general(ctx, &asg, &tau_i(a))?.into_set(),
        })
    }

    pub fn classical(&self) -> bool {
        self.flat_denotation.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct Class {
    pub key: Key,
    pub count: u64,
    pub rep: InqFormula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    And,
    Imp,
    Or,
}

const OPS: [Op; 3] = [Op::And, Op::Imp, Op::Or];

fn apply(op: Op, a: InqFormula, b: InqFormula) -> InqFormula {
    match op {
        Op::And => InqFormula::and(a, b),
        Op::Imp => InqFormula::imp(a, b),
        Op::Or => InqFormula::or(a, b),
    }
}

fn atoms(ctx: &Context) -> Vec<InqFormula> {
    let mut out: Vec<InqFormula> = ctx.vars().iter().map(|v| InqFormula::var(v)).collect();
    out.push(InqFormula::Zero);
    out
}

/// Number of formulas of depth at most `depth`.
pub fn population_size(nvars: usize, depth: usize) -> u128 {
    let atoms = nvars as u128 + 1;
    (0..depth).fold(atoms, |n, _| atoms + 3 * n * n)
}

/// All formulas of depth at most `depth`, in generation order.
pub fn materialize(ctx: &Context, depth: usize) -> Result<Vec<InqFormula>, PopulationError> {
    let count = population_size(ctx.nvars(), depth);
    if count > MAX_MATERIALIZED as u128 {
        return Err(PopulationError::TooLarge { depth, count, cap: MAX_MATERIALIZED });
    }
    let mut level = atoms(ctx);
    for _ in 0..depth {
        let mut next = atoms(ctx);
        for op in OPS {
            for a in &level {
                for b in &level {
                    next.push(apply(op, a.clone(), b.clone()));
                }
            }
        }
        level = next;
    }
    Ok(level)
}

pub struct Population {
    ctx: Context,
    depth: usize,
    below: Vec<InqFormula>,
    classes: Vec<Class>,
}

impl Population {
    pub fn build(ctx: &Context, depth: usize) -> Result<Population, PopulationError> {
        let mut by_key: HashMap<Key, usize> = HashMap::new();
        let mut classes: Vec<Class> = Vec::new();
        let mut add = |key: Key, count: u64, rep: &dyn Fn() -> InqFormula| match by_key.get(&key) {
            Some(&i) => classes[i].count += count,
            None => {
                by_key.insert(key.clone(), classes.len());
                classes.push(Class { key, count, rep: rep() });
            }
        };
        if depth == 0 {
            for a in atoms(ctx) {
                add(Key::of(ctx, &a)?, 1, &|| a.clone());
            }
            return Ok(Population { ctx: ctx.clone(), depth, below: Vec::new(), classes });
        }
        let below = materialize(ctx, depth - 1)?;
        let mut sub: HashMap<Key, (u64, usize)> = HashMap::new();
        let mut sub_order: Vec<Key> = Vec::new();
        for (i, a) in below.iter().enumerate() {
            let k = Key::of(ctx, a)?;
            match sub.get_mut(&k) {
                Some(e) => e.0 += 1,
                None => {
                    sub_order.push(k.clone());
                    sub.insert(k, (1, i));
                }
            }
        }
        for a in atoms(ctx) {
            add(Key::of(ctx, &a)?, 1, &|| a.clone());
        }
        for op in OPS {
            for ka in &sub_order {
                let (ca, ia) = sub[ka];
                for kb in &sub_order {
                    let (cb, ib) = sub[kb];
                    let f = apply(op, below[ia].clone(), below[ib].clone());
                    add(Key::of(ctx, &f)?, ca * cb, &|| f.clone());
                }
            }
        }
        Ok(Population { ctx: ctx.clone(), depth, below, classes })
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    /// Number of formulas in the population.
    pub fn total(&self) -> u64 {
        self.classes.iter().map(|c| c.count).sum()
    }

    /// Classes merged by support alone: `(support, count, representative)`.
    pub fn support_classes(&self) -> Vec<(TeamSet, u64, &InqFormula)> {
        let mut idx: HashMap<&TeamSet, usize> = HashMap::new();
        let mut out: Vec<(TeamSet, u64, &InqFormula)> = Vec::new();
        for c in &self.classes {
            match idx.get(&c.key.support) {
                Some(&i) => out[i].1 += c.count,
                None => {
                    idx.insert(&c.key.support, out.len());
                    out.push((c.key.support.clone(), c.count, &c.rep));
                }
            }
        }
        out
    }

    /// A formula drawn uniformly from the population.
    pub fn sample(&self, rng: &mut impl Rng) -> InqFormula {
        let atoms = atoms(&self.ctx);
        if self.depth == 0 {
            return atoms[rng.gen_range(0..atoms.len())].clone();
        }
        let total = population_size(self.ctx.nvars(), self.depth);
        let pick = rng.gen_range(0..total);
        if pick < atoms.len() as u128 {
            return atoms[pick as usize].clone();
        }
        let n = self.below.len();
        let op = OPS[rng.gen_range(0..3)];
        apply(op, self.below[rng.gen_range(0..n)].clone(), self.below[rng.gen_range(0..n)].clone())
    }

    /// The class a formula of the population falls in.
    pub fn class_of(&self, a: &InqFormula) -> Result<Option<&Class>, PopulationError> {
        let k = Key::of(&self.ctx, a)?;
        Ok(self.classes.iter().find(|c| c.key == k))
    }
}
