//! Exhaustive and sampled checks of the algebraic facts the calculus relies on.

use rand::Rng;
use serde::Serialize;

use super::*;

/// Outcome of checking one law over a domain.
#[derive(Debug, Clone, Serialize)]
pub struct LawCheck {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl LawCheck {
    pub fn new(name: &str) -> Self {
        LawCheck { name: name.to_string(), checked: 0, failures: 0, first_failure: None }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.record_weighted(ok, 1, describe);
    }

    /// Record one check standing for `weight` instances.
    pub fn record_weighted(&mut self, ok: bool, weight: u64, describe: impl FnOnce() -> String) {
        self.checked += weight;
        if !ok {
            self.failures += weight;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

fn show(x: &AElem) -> String {
    format!("{:?}", x.as_set())
}

/// `f X ⊆ S` iff `X ⊆ ↓S`, and `f* S ⊆ X` iff `S ⊆ f X`.
pub fn adjunctions(ctx: &Context, downsets: &[AElem]) -> Vec<LawCheck> {
    let mut upper = LawCheck::new("f -| down");
    let mut lower = LawCheck::new("f* -| f");
    for x in downsets {
        let fx = f(x);
        for s in ctx.teams() {
            upper.record(fx.is_subset(s) == x.is_subset(&downset(ctx, s)), || format!("X={} S={s:?}", show(x)));
            lower.record(f_star(ctx, s).is_subset(x) == s.is_subset(fx), || format!("X={} S={s:?}", show(x)));
        }
    }
    vec![upper, lower]
}

/// `X ⊆ ↓ f X`, and `S ⊆ T` implies `f* S ⊆ ↓T`.
pub fn unit_and_bridge(ctx: &Context, downsets: &[AElem]) -> Vec<LawCheck> {
    let mut unit = LawCheck::new("X <= down f X");
    for x in downsets {
        unit.record(x.is_subset(&downset(ctx, f(x))), || show(x));
    }
    let mut bridge = LawCheck::new("S <= T implies f* S <= down T");
    for s in ctx.teams() {
        for t in ctx.teams() {
            if s.is_subset(t) {
                bridge.record(f_star(ctx, s).is_subset(&downset(ctx, t)), || format!("S={s:?} T={t:?}"));
            }
        }
    }
    vec![unit, bridge]
}

/// Families of teams as bitmasks over team indices; only feasible when there are at most 16 teams.
fn families(ctx: &Context) -> Option<impl Iterator<Item = Vec<Team>> + '_> {
    let n = ctx.team_count();
    if n > 16 {
        return None;
    }
    Some((0u32..(1u32 << n)).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| Team(i as u32)).collect()))
}

/// Properties of `↓`: bottom and top, arbitrary meets, and `↓(X^c ∪ Y) = ↓X ⇒ ↓Y`.
pub fn downset_properties(ctx: &Context) -> Vec<LawCheck> {
    let mut a = LawCheck::new("down bottom and top");
    a.record(
        downset(ctx, Team::EMPTY) == AElem::new(TeamSet::from_teams(ctx, [Team::EMPTY])).unwrap(),
        || "down(empty) != {empty}".into(),
    );
    a.record(downset(ctx, ctx.full()) == AElem::top(ctx), || "down(full) != top".into());

    let mut b = LawCheck::new("down preserves arbitrary meets");
    if let Some(fams) = families(ctx) {
        for fam in fams {
            let meet_b = fam.iter().fold(ctx.full(), |acc, t| acc.intersection(*t));
            let meet_a = fam.iter().fold(AElem::top(ctx), |acc, t| acc.meet(&downset(ctx, *t)));
            b.record(downset(ctx, meet_b) == meet_a, || format!("family {fam:?}"));
        }
    } else {
        for s in ctx.teams() {
            for t in ctx.teams() {
                b.record(
                    downset(ctx, s.intersection(t)) == downset(ctx, s).meet(&downset(ctx, t)),
                    || format!("{s:?} {t:?}"),
                );
            }
        }
    }

    let mut c = LawCheck::new("down(X^c | Y) = down X => down Y");
    for x in ctx.teams() {
        for y in ctx.teams() {
            c.record(
                downset(ctx, b_imp(ctx, x, y)) == heyting(ctx, &downset(ctx, x), &downset(ctx, y)),
                || format!("X={x:?} Y={y:?}"),
            );
        }
    }
    vec![a, b, c]
}

/// `f` preserves joins and meets (binary and empty), `f*` preserves arbitrary joins,
/// and all three maps are monotone.
pub fn preservation(ctx: &Context, downsets: &[AElem]) -> Vec<LawCheck> {
    let mut fj = LawCheck::new("f preserves joins");
    let mut fm = LawCheck::new("f preserves meets");
    fj.record(f(&AElem::bottom(ctx)) == Team::EMPTY, || "f(bottom) != empty".into());
    fm.record(f(&AElem::top(ctx)) == ctx.full(), || "f(top) != full".into());
    let mut mono = LawCheck::new("down, f, f* monotone");
    for x in downsets {
        for y in downsets {
            fj.record(f(&x.join(y)) == f(x).union(f(y)), || format!("{} {}", show(x), show(y)));
            fm.record(f(&x.meet(y)) == f(x).intersection(f(y)), || format!("{} {}", show(x), show(y)));
            if x.is_subset(y) {
                mono.record(f(x).is_subset(f(y)), || format!("f: {} {}", show(x), show(y)));
            }
        }
    }
    for s in ctx.teams() {
        for t in ctx.teams() {
            if s.is_subset(t) {
                mono.record(downset(ctx, s).is_subset(&downset(ctx, t)), || format!("down: {s:?} {t:?}"));
                mono.record(f_star(ctx, s).is_subset(&f_star(ctx, t)), || format!("f*: {s:?} {t:?}"));
            }
        }
    }
    let mut fsj = LawCheck::new("f* preserves arbitrary joins");
    if let Some(fams) = families(ctx) {
        for fam in fams {
            let join_b = fam.iter().fold(Team::EMPTY, |acc, t| acc.union(*t));
            let join_a = fam.iter().fold(AElem::bottom(ctx), |acc, t| acc.join(&f_star(ctx, *t)));
            fsj.record(f_star(ctx, join_b) == join_a, || format!("family {fam:?}"));
        }
    } else {
        fsj.record(f_star(ctx, Team::EMPTY) == AElem::bottom(ctx), || "f*(empty) != bottom".into());
        for s in ctx.teams() {
            for t in ctx.teams() {
                fsj.record(f_star(ctx, s.union(t)) == f_star(ctx, s).join(&f_star(ctx, t)), || format!("{s:?} {t:?}"));
            }
        }
    }
    vec![fj, fm, fsj, mono]
}

fn kp_holds(ctx: &Context, x: Team, y: &AElem, z: &AElem) -> bool {
    let dx = downset(ctx, x);
    heyting(ctx, &dx, &y.join(z)).is_subset(&heyting(ctx, &dx, y).join(&heyting(ctx, &dx, z)))
}

/// `↓X ⇒ (Y ∪ Z) ⊆ (↓X ⇒ Y) ∪ (↓X ⇒ Z)` for every team `X` and down-sets `Y`, `Z`.
pub fn kp_exhaustive(ctx: &Context, downsets: &[AElem]) -> LawCheck {
    let mut kp = LawCheck::new("KP (exhaustive)");
    for x in ctx.teams() {
        for y in downsets {
            for z in downsets {
                kp.record(kp_holds(ctx, x, y, z), || format!("X={x:?} Y={} Z={}", show(y), show(z)));
            }
        }
    }
    kp
}

/// KP with the antecedent given as a down-set `X`, read as `↓ f X`, for all
/// down-sets `X`, `Y`, `Z`.
pub fn kp_downset_triples(ctx: &Context, downsets: &[AElem]) -> LawCheck {
    let mut kp = LawCheck::new("KP (down-set triples, antecedent down f X)");
    for x in downsets {
        for y in downsets {
            for z in downsets {
                kp.record(kp_holds(ctx, f(x), y, z), || format!("X={} Y={} Z={}", show(x), show(y), show(z)));
            }
        }
    }
    kp
}

/// KP on `samples` random triples.
pub fn kp_sampled(ctx: &Context, downsets: &[AElem], samples: u64, rng: &mut impl Rng) -> LawCheck {
    let mut kp = LawCheck::new("KP (sampled)");
    for _ in 0..samples {
        let x = Team(rng.gen_range(0..ctx.team_count() as u32));
        let y = &downsets[rng.gen_range(0..downsets.len())];
        let z = &downsets[rng.gen_range(0..downsets.len())];
        kp.record(kp_holds(ctx, x, y, z), || format!("X={x:?} Y={} Z={}", show(y), show(z)));
    }
    kp
}

/// Every law above, exhaustively over `ctx` (at most two variables).
pub fn all_exhaustive(ctx: &Context) -> Result<Vec<LawCheck>, AlgebraError> {
    let ds = all_downsets(ctx)?;
    let mut out = adjunctions(ctx, &ds);
    out.extend(unit_and_bridge(ctx, &ds));
    out.extend(downset_properties(ctx));
    out.extend(preservation(ctx, &ds));
    out.push(kp_exhaustive(ctx, &ds));
    Ok(out)
}
