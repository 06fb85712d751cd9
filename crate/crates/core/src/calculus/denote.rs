//! Structures read as algebra elements, by polarity.
//!
//! | structure | antecedent | succedent |
//! |---|---|---|
//! | `Φ` | full team | `∅` |
//! | `Γ , Δ` | `∩` | `∪` |
//! | `Γ ⊐ Δ` | `(suc Γ)ᶜ ∩ ant Δ` | `(ant Γ)ᶜ ∪ suc Δ` |
//! | `F X` | `f` | `f` |
//! | `⇓Γ` | `↓` | `↓` |
//! | `F* Γ` | `f*` | rejected |
//! | `X ; Y` | `∩` | `∪` |
//! | `X > Y` | `coimp(ant Y, suc X)` | `ant X ⇒ suc Y` |

use super::polarity::Polarity;
use super::CalculusError;
use crate::algebra::{coimp, denote_flat, denote_general, downset, f, f_star, heyting, AElem, Assignment, BElem};
use crate::syntax::{FlatStructure, GeneralStructure, Sequent};
use crate::teams::Context;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Denotation {
    B(BElem),
    A(AElem),
}

pub fn denote_flat_structure(
    ctx: &Context,
    asg: &Assignment,
    s: &FlatStructure,
    pol: Polarity,
) -> Result<BElem, CalculusError> {
    use Polarity::*;
    Ok(match s {
        FlatStructure::Phi => match pol {
            Antecedent => ctx.full(),
            Succedent => crate::teams::Team::EMPTY,
        },
        FlatStructure::Fml(a) => denote_flat(ctx, asg, a)?,
        FlatStructure::Comma(a, b) => {
            let (x, y) = (denote_flat_structure(ctx, asg, a, pol)?, denote_flat_structure(ctx, asg, b, pol)?);
            match pol {
                Antecedent => x.intersection(y),
                Succedent => x.union(y),
            }
        }
        FlatStructure::Sup(a, b) => {
            let x = denote_flat_structure(ctx, asg, a, pol.flip())?;
            let y = denote_flat_structure(ctx, asg, b, pol)?;
            match pol {
                Antecedent => ctx.complement(x).intersection(y),
                Succedent => ctx.complement(x).union(y),
            }
        }
        FlatStructure::FOf(x) => f(&denote_general_structure(ctx, asg, x, pol)?),
    })
}

pub fn denote_general_structure(
    ctx: &Context,
    asg: &Assignment,
    s: &GeneralStructure,
    pol: Polarity,
) -> Result<AElem, CalculusError> {
    use Polarity::*;
    Ok(match s {
        GeneralStructure::Fml(a) => denote_general(ctx, asg, a)?,
        GeneralStructure::DownOf(g) => downset(ctx, denote_flat_structure(ctx, asg, g, pol)?),
        GeneralStructure::FStarOf(g) => match pol {
            Antecedent => f_star(ctx, denote_flat_structure(ctx, asg, g, pol)?),
            Succedent => return Err(CalculusError::FStarInSuccedent),
        },
        GeneralStructure::Semi(a, b) => {
            let (x, y) = (denote_general_structure(ctx, asg, a, pol)?, denote_general_structure(ctx, asg, b, pol)?);
            match pol {
                Antecedent => x.meet(&y),
                Succedent => x.join(&y),
            }
        }
        GeneralStructure::Gt(a, b) => {
            let x = denote_general_structure(ctx, asg, a, pol.flip())?;
            let y = denote_general_structure(ctx, asg, b, pol)?;
            match pol {
                Antecedent => coimp(ctx, &y, &x),
                Succedent => heyting(ctx, &x, &y),
            }
        }
    })
}

pub fn denote_structure(
    ctx: &Context,
    asg: &Assignment,
    s: super::polarity::NodeRef<'_>,
    pol: Polarity,
) -> Result<Denotation, CalculusError> {
    use super::polarity::NodeRef;
    match s {
        NodeRef::Flat(g) => denote_flat_structure(ctx, asg, g, pol).map(Denotation::B),
        NodeRef::General(x) => denote_general_structure(ctx, asg, x, pol).map(Denotation::A),
    }
}

/// Whether the antecedent's denotation is included in the succedent's.
pub fn sequent_holds(ctx: &Context, asg: &Assignment, seq: &Sequent) -> Result<bool, CalculusError> {
    Ok(match seq {
        Sequent::Flat(a, s) => denote_flat_structure(ctx, asg, a, Polarity::Antecedent)?
            .is_subset(denote_flat_structure(ctx, asg, s, Polarity::Succedent)?),
        Sequent::General(a, s) => denote_general_structure(ctx, asg, a, Polarity::Antecedent)?
            .is_subset(&denote_general_structure(ctx, asg, s, Polarity::Succedent)?),
    })
}
