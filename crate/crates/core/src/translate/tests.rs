use proptest::prelude::*;

use super::hilbert::*;
use super::*;
use crate::algebra::{denote_general, downset, f, heyting, Assignment};
use crate::syntax::{parse_general_formula, parse_inql};
use crate::teams::{self, Context, Team};

fn inq(s: &str) -> InqFormula {
    parse_inql(s).unwrap()
}

#[test]
fn tau_examples() {
    assert_eq!(tau_i(&inq("p -> q")).to_string(), "dn(p ~> q)");
    assert_eq!(tau_i(&inq("?p")).to_string(), "dn(p) \\/ dn(~p)");
    assert_eq!(tau_i(&inq("(p \\/ q) /\\ ~r")).to_string(), "(dn(p) \\/ dn(q)) /\\ dn(~r)");
    assert_eq!(tau_c(&inq("p /\\ ~q")).unwrap().to_string(), "p & ~q");
    assert!(matches!(tau_c(&inq("p \\/ q")), Err(TranslateError::NotClassical(_))));
}

#[test]
fn flatten_examples() {
    assert_eq!(flatten(&inq("p \\/ q")), inq("~p -> q"));
    assert_eq!(flatten(&inq("(p \\/ q) \\/ r")), inq("~(~p -> q) -> r"));
    assert!(flatten(&inq("?p -> ?q")).is_classical());
}

#[test]
fn collapse_examples() {
    let a = parse_general_formula("dn(p) /\\ (dn(q) => dn(0))").unwrap();
    assert_eq!(collapse_to_flat(&a).unwrap().to_string(), "p & ~q");
    let b = parse_general_formula("dn(p) \\/ dn(q)").unwrap();
    assert!(matches!(collapse_to_flat(&b), Err(TranslateError::NotCollapsible(_))));
}

#[test]
fn non_classical_axiom_shapes_can_fail() {
    let c = Context::parse("p,q").unwrap();
    assert!(inql_dne(&inq("?p")).is_err());
    assert!(!teams::valid(&c, &dne_shape(&inq("?p"))).unwrap());
    assert!(inql_split(&inq("?p"), &inq("p"), &inq("~p")).is_err());
    assert!(!teams::valid(&c, &split_shape(&inq("?p"), &inq("p"), &inq("~p"))).unwrap());
    assert!(teams::valid(&c, &inql_split(&inq("~p"), &inq("q"), &inq("~q")).unwrap()).unwrap());
}

fn arb_inql() -> impl Strategy<Value = InqFormula> {
    let leaf = prop_oneof![
        3 => prop_oneof![Just("p"), Just("q")].prop_map(InqFormula::var),
        1 => Just(InqFormula::Zero),
    ];
    leaf.prop_recursive(4, 20, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| InqFormula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| InqFormula::imp(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| InqFormula::or(a, b)),
        ]
    })
}

fn arb_classical() -> impl Strategy<Value = InqFormula> {
    arb_inql().prop_map(|a| flatten(&a))
}

fn arb_flat() -> impl Strategy<Value = FlatFormula> {
    arb_classical().prop_map(|a| tau_c(&a).unwrap())
}

fn arb_general() -> impl Strategy<Value = GeneralFormula> {
    arb_inql().prop_map(|a| tau_i(&a))
}

fn arb_collapsible() -> impl Strategy<Value = GeneralFormula> {
    arb_flat().prop_map(GeneralFormula::Down).prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GeneralFormula::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| GeneralFormula::imp(a, b)),
        ]
    })
}

fn arb_assignment(c: &Context) -> impl Strategy<Value = Assignment> {
    let n = c.team_count() as u32;
    proptest::collection::vec(0..n, 3).prop_map(|ts| {
        Assignment::new().with("p", Team(ts[0])).with("q", Team(ts[1])).with("r", Team(ts[2]))
    })
}

fn pq() -> Context {
    Context::parse("p,q").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn translation_is_adequate(a in arb_inql()) {
        let c = pq();
        let den = denote_general(&c, &Assignment::canonical(&c), &tau_i(&a)).unwrap();
        for t in c.teams() {
            prop_assert_eq!(teams::support(&c, t, &a).unwrap(), den.contains(t));
        }
    }

    #[test]
    fn flatness_triple(a in arb_inql()) {
        let c = pq();
        let flat = teams::is_flat(&c, &a).unwrap();
        let eq_f = teams::equivalent(&c, &a, &flatten(&a)).unwrap();
        let eq_nn = teams::equivalent(&c, &a, &InqFormula::neg(InqFormula::neg(a.clone()))).unwrap();
        prop_assert_eq!(flat, eq_f);
        prop_assert_eq!(flat, eq_nn);
        prop_assert!(flatten(&a).is_classical());
    }

    #[test]
    fn implication_into_flat_is_flat(a in arb_inql(), b in arb_classical()) {
        let c = pq();
        prop_assert!(teams::is_flat(&c, &InqFormula::imp(a.clone(), b)).unwrap());
        prop_assert!(teams::is_flat(&c, &InqFormula::neg(a)).unwrap());
    }

    #[test]
    fn collapse_preserves_denotation(a in arb_collapsible(), asg in arb_assignment(&pq())) {
        let c = pq();
        let flat = collapse_to_flat(&a).unwrap();
        let lhs = denote_general(&c, &asg, &a).unwrap();
        let rhs = downset(&c, crate::algebra::denote_flat(&c, &asg, &flat).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn semantic_flatness_of_translations(a in arb_general(), asg in arb_assignment(&pq())) {
        let c = pq();
        let den = denote_general(&c, &asg, &a).unwrap();
        let pointwise = c.teams().all(|t| den.contains(t) == t.worlds().all(|w| den.contains(Team::singleton(w))));
        prop_assert_eq!(pointwise, den == downset(&c, f(&den)));
    }

    #[test]
    fn down_of_connectives(x in arb_flat(), y in arb_flat(), asg in arb_assignment(&pq())) {
        let c = pq();
        let d = |a: &FlatFormula| denote_general(&c, &asg, &GeneralFormula::Down(a.clone())).unwrap();
        prop_assert_eq!(d(&FlatFormula::cap(x.clone(), y.clone())), d(&x).meet(&d(&y)));
        prop_assert_eq!(d(&FlatFormula::fimp(x.clone(), y.clone())), heyting(&c, &d(&x), &d(&y)));
    }

    #[test]
    fn inql_axioms_are_valid(a in arb_inql(), b in arb_inql(), x in arb_inql(), chi in arb_classical()) {
        let c = pq();
        for ax in IPL_AXIOMS {
            prop_assert!(teams::valid(&c, &ax.instance(a.clone(), b.clone(), x.clone())).unwrap(), "{:?}", ax);
        }
        prop_assert!(teams::valid(&c, &inql_split(&chi, &a, &b).unwrap()).unwrap());
        prop_assert!(teams::valid(&c, &inql_dne(&chi).unwrap()).unwrap());
        prop_assert!(mp_preserves_validity(&c, &a, &b).unwrap());
    }

    #[test]
    fn multi_type_axioms_denote_top(
        a in arb_general(), b in arb_general(), x in arb_general(),
        al in arb_flat(), be in arb_flat(), ga in arb_flat(),
        asg in arb_assignment(&pq()),
    ) {
        let c = pq();
        for ax in CPL_AXIOMS {
            prop_assert!(flat_is_top(&c, &asg, &ax.instance(al.clone(), be.clone(), ga.clone())).unwrap(), "classical axiom {:?}", ax);
        }
        for ax in IPL_AXIOMS {
            prop_assert!(general_is_top(&c, &asg, &ax.instance(a.clone(), b.clone(), x.clone())).unwrap(), "intuitionistic axiom {:?}", ax);
        }
        prop_assert!(general_is_top(&c, &asg, &down_split(&al, &a, &b)).unwrap());
        prop_assert!(general_is_top(&c, &asg, &down_dne(&al)).unwrap());
        prop_assert!(mp_general_preserves_top(&c, &asg, &a, &b).unwrap());
        prop_assert!(mp_flat_preserves_top(&c, &asg, &al, &be).unwrap());
    }
}

#[test]
fn double_negation_is_not_intuitionistic_in_general_sort() {
    // ¬¬A → A fails for A = ↓p ∨ ↓~p, so the double negation axiom really needs a ↓ formula.
    let c = pq();
    let a = parse_general_formula("dn(p) \\/ dn(~p)").unwrap();
    let dne = Axiom::DoubleNegation.instance(a.clone(), a.clone(), a);
    assert!(!general_is_top(&c, &Assignment::canonical(&c), &dne).unwrap());
}
