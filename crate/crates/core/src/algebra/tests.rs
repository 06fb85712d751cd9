use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::laws;
use super::*;
use crate::syntax::{parse_flat_formula, parse_general_formula};

fn ctx(n: usize) -> Context {
    Context::anonymous(n).unwrap()
}

#[test]
fn downset_counts() {
    assert_eq!(all_downsets(&ctx(0)).unwrap().len(), 3);
    assert_eq!(all_downsets(&ctx(1)).unwrap().len(), 6);
    assert_eq!(all_downsets(&ctx(2)).unwrap().len(), 168);
    assert!(all_downsets(&ctx(3)).is_err());
}

#[test]
fn rejects_non_downsets() {
    let c = ctx(1);
    assert_eq!(AElem::new(TeamSet::from_teams(&c, [Team(0b11)])), Err(AlgebraError::NotDownClosed));
    assert!(AElem::new(TeamSet::from_teams(&c, [Team(0), Team(0b01)])).is_ok());
}

// Oracles below characterise each operation by a universal property, searching
// over every down-set.

fn largest(ds: &[AElem], pred: impl Fn(&AElem) -> bool) -> AElem {
    let cands: Vec<&AElem> = ds.iter().filter(|w| pred(w)).collect();
    let top = cands.iter().find(|w| cands.iter().all(|v| v.is_subset(w))).expect("greatest element");
    (*top).clone()
}

fn least(ds: &[AElem], pred: impl Fn(&AElem) -> bool) -> AElem {
    let cands: Vec<&AElem> = ds.iter().filter(|w| pred(w)).collect();
    let bot = cands.iter().find(|w| cands.iter().all(|v| w.is_subset(v))).expect("least element");
    (*bot).clone()
}

#[test]
fn heyting_is_the_relative_pseudocomplement() {
    let c = ctx(1);
    let ds = all_downsets(&c).unwrap();
    for y in &ds {
        for z in &ds {
            let oracle = largest(&ds, |w| w.meet(y).is_subset(z));
            assert_eq!(heyting(&c, y, z), oracle);
        }
    }
}

#[test]
fn heyting_sampled_at_two_variables() {
    let c = ctx(2);
    let ds = all_downsets(&c).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let y = &ds[rand::Rng::gen_range(&mut rng, 0..ds.len())];
        let z = &ds[rand::Rng::gen_range(&mut rng, 0..ds.len())];
        assert_eq!(heyting(&c, y, z), largest(&ds, |w| w.meet(y).is_subset(z)));
    }
}

#[test]
fn coimp_is_the_left_residual_of_join() {
    for n in [1, 2] {
        let c = ctx(n);
        let ds = all_downsets(&c).unwrap();
        let step = if n == 1 { 1 } else { 7 };
        for x in ds.iter().step_by(step) {
            for y in ds.iter().step_by(step) {
                assert_eq!(coimp(&c, x, y), least(&ds, |w| x.is_subset(&y.join(w))));
            }
        }
    }
}

#[test]
fn f_star_is_the_left_adjoint_of_f() {
    for n in [1, 2] {
        let c = ctx(n);
        let ds = all_downsets(&c).unwrap();
        for s in c.teams() {
            assert_eq!(f_star(&c, s), least(&ds, |x| s.is_subset(f(x))));
        }
    }
}

#[test]
fn literal_f_star_of_empty_breaks_the_adjunction() {
    // With f*(∅) = {∅}, f*(∅) ⊆ X fails for X = ∅ although ∅ ⊆ f(∅) holds.
    let c = ctx(1);
    let literal = AElem::new(TeamSet::from_teams(&c, [Team::EMPTY])).unwrap();
    let bottom = AElem::bottom(&c);
    assert!(Team::EMPTY.is_subset(f(&bottom)));
    assert!(!literal.is_subset(&bottom));
    assert!(f_star(&c, Team::EMPTY).is_subset(&bottom));
    let s = Team(0b10);
    assert_eq!(f_star(&c, s), AElem::new(TeamSet::from_teams(&c, [Team::EMPTY, s])).unwrap());
}

#[test]
fn f_and_downset_basics() {
    let c = ctx(2);
    let x = down_closure(&c, &TeamSet::from_teams(&c, [Team(0b0011), Team(0b0100)]));
    assert_eq!(x.len(), 5);
    assert_eq!(f(&x), Team(0b0111));
    assert!(is_flat_element(&c, &downset(&c, Team(0b0110))));
    assert!(!is_flat_element(&c, &x));
    assert!(is_flat_element(&c, &AElem::top(&c)));
}

#[test]
fn denotations_under_the_canonical_assignment() {
    let c = Context::parse("p,q").unwrap();
    let asg = Assignment::canonical(&c);
    let p = c.var_team(0);
    assert_eq!(denote_flat(&c, &asg, &parse_flat_formula("p & ~p").unwrap()).unwrap(), Team::EMPTY);
    assert_eq!(denote_flat(&c, &asg, &parse_flat_formula("p | ~p").unwrap()).unwrap(), c.full());
    assert_eq!(denote_flat(&c, &asg, &parse_flat_formula("~p ~> q").unwrap()).unwrap(), p.union(c.var_team(1)));
    let q = denote_general(&c, &asg, &parse_general_formula("dn(p) \\/ dn(~p)").unwrap()).unwrap();
    assert_eq!(q.len(), 4 + 4 - 1);
    let top = denote_general(&c, &asg, &parse_general_formula("dn(p) => dn(p)").unwrap()).unwrap();
    assert!(top.is_top());
    assert!(matches!(
        denote_flat(&c, &asg, &parse_flat_formula("r").unwrap()),
        Err(AlgebraError::Unassigned(_))
    ));
}

#[test]
fn all_laws_hold_at_one_variable() {
    let c = ctx(1);
    for law in laws::all_exhaustive(&c).unwrap() {
        assert!(law.passed(), "{law:?}");
    }
    let kp = laws::kp_exhaustive(&c, &all_downsets(&c).unwrap());
    assert_eq!(kp.checked, 4 * 6 * 6);
    let kp = laws::kp_downset_triples(&c, &all_downsets(&c).unwrap());
    assert!(kp.passed());
    assert_eq!(kp.checked, 216);
}

#[test]
fn kp_fails_for_arbitrary_antecedents() {
    // With a non-principal down-set in place of ↓X the inclusion can fail.
    let c = ctx(1);
    let w = down_closure(&c, &TeamSet::from_teams(&c, [Team(0b01), Team(0b10)]));
    let y = downset(&c, Team(0b01));
    let z = downset(&c, Team(0b10));
    let lhs = heyting(&c, &w, &y.join(&z));
    let rhs = heyting(&c, &w, &y).join(&heyting(&c, &w, &z));
    assert!(!lhs.is_subset(&rhs));
}
