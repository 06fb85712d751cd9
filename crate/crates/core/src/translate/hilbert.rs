//! Axiom schemas of the Hilbert systems for InqL and for its two-sorted
//! counterpart, with semantic validators.

use serde::Serialize;

use super::TranslateError;
use crate::algebra::{denote_flat, denote_general, AlgebraError, Assignment};
use crate::syntax::{FlatFormula, GeneralFormula, InqFormula};
use crate::teams::{self, Context, TeamError};

/// The connectives needed to state intuitionistic axioms.
pub trait Connectives: Clone {
    fn imp(a: Self, b: Self) -> Self;
    fn and(a: Self, b: Self) -> Self;
    fn or(a: Self, b: Self) -> Self;
    fn bot() -> Self;
}

impl Connectives for InqFormula {
    fn imp(a: Self, b: Self) -> Self {
        InqFormula::imp(a, b)
    }
    fn and(a: Self, b: Self) -> Self {
        InqFormula::and(a, b)
    }
    fn or(a: Self, b: Self) -> Self {
        InqFormula::or(a, b)
    }
    fn bot() -> Self {
        InqFormula::Zero
    }
}

impl Connectives for GeneralFormula {
    fn imp(a: Self, b: Self) -> Self {
        GeneralFormula::imp(a, b)
    }
    fn and(a: Self, b: Self) -> Self {
        GeneralFormula::and(a, b)
    }
    fn or(a: Self, b: Self) -> Self {
        GeneralFormula::or(a, b)
    }
    fn bot() -> Self {
        GeneralFormula::Down(FlatFormula::Zero)
    }
}

impl Connectives for FlatFormula {
    fn imp(a: Self, b: Self) -> Self {
        FlatFormula::fimp(a, b)
    }
    fn and(a: Self, b: Self) -> Self {
        FlatFormula::cap(a, b)
    }
    fn or(a: Self, b: Self) -> Self {
        FlatFormula::cup(a, b)
    }
    fn bot() -> Self {
        FlatFormula::Zero
    }
}

/// Intuitionistic axiom schemas; `DoubleNegation` is the classical addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    /// `a → (b → a)`
    K,
    /// `(a → (b → c)) → ((a → b) → (a → c))`
    S,
    /// `a ∧ b → a`
    AndElimL,
    /// `a ∧ b → b`
    AndElimR,
    /// `a → (b → a ∧ b)`
    AndIntro,
    /// `a → a ∨ b`
    OrIntroL,
    /// `b → a ∨ b`
    OrIntroR,
    /// `(a → c) → ((b → c) → (a ∨ b → c))`
    OrElim,
    /// `0 → a`
    ExFalso,
    /// `¬¬a → a`
    DoubleNegation,
}

pub const IPL_AXIOMS: [Axiom; 9] = [
    Axiom::K,
    Axiom::S,
    Axiom::AndElimL,
    Axiom::AndElimR,
    Axiom::AndIntro,
    Axiom::OrIntroL,
    Axiom::OrIntroR,
    Axiom::OrElim,
    Axiom::ExFalso,
];

pub const CPL_AXIOMS: [Axiom; 10] = [
    Axiom::K,
    Axiom::S,
    Axiom::AndElimL,
    Axiom::AndElimR,
    Axiom::AndIntro,
    Axiom::OrIntroL,
    Axiom::OrIntroR,
    Axiom::OrElim,
    Axiom::ExFalso,
    Axiom::DoubleNegation,
];

impl Axiom {
    /// Instantiate with metavariables `a`, `b`, `c`.
    pub fn instance<F: Connectives>(self, a: F, b: F, c: F) -> F {
        let imp = F::imp;
        let neg = |x: F| F::imp(x, F::bot());
        match self {
            Axiom::K => imp(a.clone(), imp(b, a)),
            Axiom::S => imp(
                imp(a.clone(), imp(b.clone(), c.clone())),
                imp(imp(a.clone(), b), imp(a, c)),
            ),
            Axiom::AndElimL => imp(F::and(a.clone(), b), a),
            Axiom::AndElimR => imp(F::and(a, b.clone()), b),
            Axiom::AndIntro => imp(a.clone(), imp(b.clone(), F::and(a, b))),
            Axiom::OrIntroL => imp(a.clone(), F::or(a, b)),
            Axiom::OrIntroR => imp(b.clone(), F::or(a, b)),
            Axiom::OrElim => imp(
                imp(a.clone(), c.clone()),
                imp(imp(b.clone(), c.clone()), imp(F::or(a, b), c)),
            ),
            Axiom::ExFalso => imp(F::bot(), a),
            Axiom::DoubleNegation => imp(neg(neg(a.clone())), a),
        }
    }
}

/// `(χ → (φ ∨ ψ)) → ((χ → φ) ∨ (χ → ψ))` for classical `χ`.
pub fn inql_split(chi: &InqFormula, phi: &InqFormula, psi: &InqFormula) -> Result<InqFormula, TranslateError> {
    require_classical(chi)?;
    Ok(split_shape(chi, phi, psi))
}

/// The split shape without the classicality check, for exhibiting counterexamples.
pub fn split_shape(chi: &InqFormula, phi: &InqFormula, psi: &InqFormula) -> InqFormula {
    InqFormula::imp(
        InqFormula::imp(chi.clone(), InqFormula::or(phi.clone(), psi.clone())),
        InqFormula::or(InqFormula::imp(chi.clone(), phi.clone()), InqFormula::imp(chi.clone(), psi.clone())),
    )
}

/// `¬¬χ → χ` for classical `χ`.
pub fn inql_dne(chi: &InqFormula) -> Result<InqFormula, TranslateError> {
    require_classical(chi)?;
    Ok(dne_shape(chi))
}

pub fn dne_shape(chi: &InqFormula) -> InqFormula {
    InqFormula::imp(InqFormula::neg(InqFormula::neg(chi.clone())), chi.clone())
}

fn require_classical(chi: &InqFormula) -> Result<(), TranslateError> {
    if chi.is_classical() {
        Ok(())
    } else {
        Err(TranslateError::NotClassical(chi.to_string()))
    }
}

/// Modus ponens preserves validity: if `φ → ψ` and `φ` are valid, so is `ψ`.
pub fn mp_preserves_validity(ctx: &Context, phi: &InqFormula, psi: &InqFormula) -> Result<bool, TeamError> {
    let premises_valid = teams::valid(ctx, &InqFormula::imp(phi.clone(), psi.clone()))? && teams::valid(ctx, phi)?;
    Ok(!premises_valid || teams::valid(ctx, psi)?)
}

/// `(↓α → (A ∨ B)) → ((↓α → A) ∨ (↓α → B))`
pub fn down_split(alpha: &FlatFormula, a: &GeneralFormula, b: &GeneralFormula) -> GeneralFormula {
    let d = GeneralFormula::Down(alpha.clone());
    GeneralFormula::imp(
        GeneralFormula::imp(d.clone(), GeneralFormula::or(a.clone(), b.clone())),
        GeneralFormula::or(GeneralFormula::imp(d.clone(), a.clone()), GeneralFormula::imp(d, b.clone())),
    )
}

/// `¬¬↓α → ↓α`
pub fn down_dne(alpha: &FlatFormula) -> GeneralFormula {
    let d = GeneralFormula::Down(alpha.clone());
    GeneralFormula::imp(GeneralFormula::neg(GeneralFormula::neg(d.clone())), d)
}

/// Whether a Flat formula denotes the full team.
pub fn flat_is_top(ctx: &Context, asg: &Assignment, a: &FlatFormula) -> Result<bool, AlgebraError> {
    Ok(denote_flat(ctx, asg, a)? == ctx.full())
}

/// Whether a General formula denotes the top down-set.
pub fn general_is_top(ctx: &Context, asg: &Assignment, a: &GeneralFormula) -> Result<bool, AlgebraError> {
    Ok(denote_general(ctx, asg, a)?.is_top())
}

/// Modus ponens preserves top under one assignment, for General formulas.
pub fn mp_general_preserves_top(
    ctx: &Context,
    asg: &Assignment,
    a: &GeneralFormula,
    b: &GeneralFormula,
) -> Result<bool, AlgebraError> {
    let prem = general_is_top(ctx, asg, &GeneralFormula::imp(a.clone(), b.clone()))? && general_is_top(ctx, asg, a)?;
    Ok(!prem || general_is_top(ctx, asg, b)?)
}

/// Modus ponens preserves top under one assignment, for Flat formulas.
pub fn mp_flat_preserves_top(
    ctx: &Context,
    asg: &Assignment,
    a: &FlatFormula,
    b: &FlatFormula,
) -> Result<bool, AlgebraError> {
    let prem = flat_is_top(ctx, asg, &FlatFormula::fimp(a.clone(), b.clone()))? && flat_is_top(ctx, asg, a)?;
    Ok(!prem || flat_is_top(ctx, asg, b)?)
}
