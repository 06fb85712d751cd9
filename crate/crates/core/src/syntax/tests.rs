use proptest::prelude::*;

use super::*;

fn v(s: &str) -> InqFormula {
    InqFormula::var(s)
}

#[test]
fn inql_precedence() {
    assert_eq!(
        parse_inql("p /\\ q \\/ r -> s").unwrap(),
        InqFormula::imp(InqFormula::or(InqFormula::and(v("p"), v("q")), v("r")), v("s"))
    );
    assert_eq!(parse_inql("p -> q -> r").unwrap(), InqFormula::imp(v("p"), InqFormula::imp(v("q"), v("r"))));
    assert_eq!(parse_inql("~p").unwrap(), InqFormula::imp(v("p"), InqFormula::Zero));
    assert_eq!(parse_inql("?p").unwrap(), InqFormula::or(v("p"), InqFormula::neg(v("p"))));
}

#[test]
fn dependence_atom_expands() {
    let d = parse_inql("=(p,q,r)").unwrap();
    let q = |x: &str| InqFormula::question(v(x));
    assert_eq!(d, InqFormula::imp(InqFormula::and(q("p"), q("q")), q("r")));
    assert_eq!(parse_inql("=(r)").unwrap(), q("r"));
}

#[test]
fn flat_sugar() {
    let a = FlatFormula::var("a");
    let b = FlatFormula::var("b");
    assert_eq!(parse_flat_formula("a | b").unwrap(), FlatFormula::cup(a.clone(), b.clone()));
    assert_eq!(parse_flat_formula("~a ~> b").unwrap(), FlatFormula::cup(a.clone(), b));
    assert_eq!(parse_flat_formula("~a").unwrap(), FlatFormula::fimp(a, FlatFormula::Zero));
}

#[test]
fn general_neg_is_imp_to_dn_zero() {
    let g = parse_general_formula("neg dn(a)").unwrap();
    assert_eq!(
        g,
        GeneralFormula::imp(GeneralFormula::Down(FlatFormula::var("a")), GeneralFormula::Down(FlatFormula::Zero))
    );
}

#[test]
fn sort_errors() {
    assert!(matches!(parse_flat_formula("a /\\ b"), Err(ParseError::Sort(_))));
    assert!(matches!(parse_general_formula("a"), Err(ParseError::Sort(_))));
    assert!(matches!(parse_inql("dn(a)"), Err(ParseError::Sort(_))));
    assert!(matches!(parse_sequent("a |- dn(a)"), Err(ParseError::TypeUniformity(_))));
    assert!(matches!(parse_sequent("Dn(a) ; X |- dn(a)"), Err(ParseError::Sort(_))));
    assert!(matches!(parse_inql("p -> "), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_inql("p $ q"), Err(ParseError::Syntax { pos: 2, .. })));
    assert!(parse_sequent("a |- a |- a").is_err());
}

#[test]
fn structures() {
    let s = parse_sequent("F(Dn(a) ; dn(b)), Ph |- a |> b, c").unwrap();
    let a = FlatStructure::fml(FlatFormula::var("a"));
    let Sequent::Flat(ant, suc) = &s else { panic!("expected a Flat sequent") };
    assert_eq!(
        ant,
        &FlatStructure::comma(
            FlatStructure::f_of(GeneralStructure::semi(
                GeneralStructure::down_of(a.clone()),
                GeneralStructure::fml(GeneralFormula::Down(FlatFormula::var("b")))
            )),
            FlatStructure::Phi
        )
    );
    assert_eq!(
        suc,
        &FlatStructure::sup(
            a,
            FlatStructure::comma(FlatStructure::fml(FlatFormula::var("b")), FlatStructure::fml(FlatFormula::var("c")))
        )
    );
    assert_eq!(s.to_string(), "F(Dn(a) ; dn(b)), Ph |- a |> b, c");
}

#[test]
fn script_roundtrip_and_at() {
    let src = r#"
; identity on dn(a)
(rule "dnR" (seq "dn(a)" "dn(a)")
  (rule "dnL" (seq "dn(a)" "Dn(a)")
    (rule "d mon" (seq "Dn(a)" "Dn(a)")
      (rule "Cut" (seq "a" "a") (at "L")
        (rule "Id" (seq "a" "a"))
        (rule "Id" (seq "a" "a"))))))
"#;
    let d = parse_script(src).unwrap();
    assert_eq!(d.node_count(), 6);
    let cut = d.at(&[0, 0, 0]).unwrap();
    assert_eq!(cut.active, Some(OccPath::root(Side::Ant)));
    let again = parse_script(&print_script(&d)).unwrap();
    assert_eq!(again, d);
}

#[test]
fn script_errors() {
    assert!(parse_script("(rule \"x\" (seq \"a\"))").is_err());
    assert!(parse_script("(rule \"x\" (seq \"a\" \"a\")").is_err());
    assert!(parse_script("(rule \"x\" (seq \"a\" \"a\")) (rule \"y\" (seq \"a\" \"a\"))").is_err());
    assert!(parse_script("").is_err());
    assert!(parse_occ_path("Q.1").is_err());
    assert_eq!(parse_occ_path("R.0.1").unwrap(), OccPath { side: Side::Suc, steps: vec![0, 1] });
}

pub(crate) fn arb_inql() -> impl Strategy<Value = InqFormula> {
    let leaf = prop_oneof![Just(v("p")), Just(v("q")), Just(v("r1")), Just(InqFormula::Zero)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| InqFormula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| InqFormula::imp(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| InqFormula::or(a, b)),
        ]
    })
}

fn arb_flat() -> impl Strategy<Value = FlatFormula> {
    let leaf = prop_oneof![Just(FlatFormula::var("a")), Just(FlatFormula::var("b")), Just(FlatFormula::Zero)];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FlatFormula::cap(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| FlatFormula::fimp(a, b)),
        ]
    })
}

fn arb_general() -> impl Strategy<Value = GeneralFormula> {
    arb_flat().prop_map(GeneralFormula::Down).prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GeneralFormula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GeneralFormula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| GeneralFormula::imp(a, b)),
        ]
    })
}

fn arb_structures() -> impl Strategy<Value = (FlatStructure, GeneralStructure)> {
    let leaf = (arb_flat(), arb_general()).prop_flat_map(|(a, g)| {
        prop_oneof![
            Just((FlatStructure::Phi, GeneralStructure::fml(g.clone()))),
            Just((FlatStructure::fml(a.clone()), GeneralStructure::down_of(FlatStructure::fml(a.clone())))),
            Just((FlatStructure::fml(a.clone()), GeneralStructure::fstar_of(FlatStructure::Phi))),
        ]
    });
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|((f1, g1), (f2, g2))| {
                (FlatStructure::comma(f1, f2), GeneralStructure::semi(g1, g2))
            }),
            (inner.clone(), inner.clone()).prop_map(|((f1, g1), (f2, g2))| {
                (FlatStructure::sup(f1, f2), GeneralStructure::gt(g1, g2))
            }),
            inner.prop_map(|(f, g)| (FlatStructure::f_of(g.clone()), GeneralStructure::down_of(f))),
        ]
    })
}

proptest! {
    #[test]
    fn inql_print_parse_roundtrip(a in arb_inql()) {
        prop_assert_eq!(parse_inql(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn flat_print_parse_roundtrip(a in arb_flat()) {
        prop_assert_eq!(parse_flat_formula(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn general_print_parse_roundtrip(a in arb_general()) {
        prop_assert_eq!(parse_general_formula(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn structure_print_parse_roundtrip((f, g) in arb_structures()) {
        prop_assert_eq!(parse_flat_structure(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(parse_general_structure(&g.to_string()).unwrap(), g.clone());
        let flat = Sequent::Flat(f.clone(), f);
        prop_assert_eq!(parse_sequent(&flat.to_string()).unwrap(), flat);
        let general = Sequent::General(g.clone(), g);
        prop_assert_eq!(parse_sequent(&general.to_string()).unwrap(), general);
    }
}
