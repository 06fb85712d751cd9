use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::calculus::check_derivation;
use crate::syntax::{parse_flat_formula, parse_general_formula};

fn check(d: &Derivation) {
    if let Err(e) = check_derivation(d) {
        panic!("derivation fails at {:?}: {} ({})", e.path, e.rule, e.reason);
    }
}

#[test]
fn identities_check() {
    for src in ["p", "0", "p & q", "p ~> (q & 0)", "(p ~> q) ~> r"] {
        let a = parse_flat_formula(src).unwrap();
        let d = flat_identity(&a);
        check(&d);
        assert!(find_cuts(&d).is_empty());
    }
    for src in ["dn(p)", "dn(p) /\\ dn(q)", "dn(p) \\/ (dn(q) => dn(0 ~> r))"] {
        let a = parse_general_formula(src).unwrap();
        check(&general_identity(&a));
    }
}

#[test]
fn random_identities_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        check(&flat_identity(&random_flat(&mut rng, 3)));
        check(&general_identity(&random_general(&mut rng, 3)));
    }
}

#[test]
fn complexity_order() {
    assert!(complexity_decreases(&[3], &[2, 2, 1]));
    assert!(complexity_decreases(&[3, 1], &[3]));
    assert!(complexity_decreases(&[1], &[]));
    assert!(!complexity_decreases(&[2], &[2]));
    assert!(!complexity_decreases(&[2], &[3]));
    assert!(!complexity_decreases(&[], &[]));
}

fn reduce_root(d: &Derivation) -> (Derivation, Pattern) {
    let sites = find_principal_cuts(d);
    let site = sites.iter().min_by_key(|s| s.path.len()).expect("principal cut");
    reduce_principal_cut(d, site).unwrap()
}

#[test]
fn every_pattern_reduces() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for pattern in Pattern::ALL {
        for _ in 0..10 {
            let d = random_principal_cut(&mut rng, pattern);
            check(&d);
            let (out, got) = reduce_root(&d);
            assert_eq!(got, pattern);
            check(&out);
            assert_eq!(out.conclusion, d.conclusion);
            assert!(complexity_decreases(&cut_sizes(&d), &cut_sizes(&out)), "{pattern:?}");
        }
    }
}

#[test]
fn new_cuts_keep_their_sort() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let d = random_principal_cut(&mut rng, Pattern::Down);
    let (out, _) = reduce_root(&d);
    let cuts = find_cuts(&out);
    assert_eq!(cuts.len(), 1);
    assert_eq!(cuts[0].sort, Sort::Flat);
    let d = random_principal_cut(&mut rng, Pattern::Cap);
    let (out, _) = reduce_root(&d);
    assert!(find_cuts(&out).iter().all(|c| c.sort == Sort::Flat));
}

#[test]
fn non_principal_cut_is_refused() {
    let a = parse_general_formula("dn(p)").unwrap();
    let id = general_identity(&a);
    let w = Derivation::new(
        crate::syntax::parse_sequent("dn(p) |- dn(p) ; dn(q)").unwrap(),
        "W",
        vec![id.clone()],
    );
    let d = Derivation::new(w.conclusion.clone(), "Cut", vec![id, w]);
    check(&d);
    let sites = find_cuts(&d);
    assert_eq!(sites.len(), 1);
    assert!(sites[0].left_principal);
    assert!(!sites[0].right_principal);
    assert_eq!(reduce_principal_cut(&d, &sites[0]), Err(CutElimError::NotPrincipal(String::new())));
    let (same, report) = reduce_all(&d, 10);
    assert_eq!(same, d);
    assert!(report.steps.is_empty());
    assert_eq!(report.remaining_cuts.len(), 1);
}

#[test]
fn not_a_cut() {
    let d = flat_identity(&parse_flat_formula("p").unwrap());
    let site = CutSite {
        path: vec![],
        sort: Sort::Flat,
        cut_formula: "p".into(),
        size: 1,
        left_principal: true,
        right_principal: true,
    };
    assert!(matches!(reduce_principal_cut(&d, &site), Err(CutElimError::NotACut(_))));
}

#[test]
fn reduce_all_respects_fuel() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let d = random_principal_cut(&mut rng, Pattern::Variable);
    let (same, report) = reduce_all(&d, 0);
    assert_eq!(same, d);
    assert!(report.fuel_exhausted);
    let (out, report) = reduce_all(&d, 5);
    assert!(!report.fuel_exhausted);
    assert_eq!(report.steps.len(), 1);
    assert!(report.remaining_cuts.is_empty());
    assert_eq!(out.rule, "Id");
}

#[test]
fn cap_reduction_is_noted() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let d = random_principal_cut(&mut rng, Pattern::Cap);
    let (_, report) = reduce_all(&d, 1);
    assert_eq!(report.steps[0].pattern, Pattern::Cap);
    assert!(report.steps[0].note.is_some());
    assert!(report.render().contains("reduced cap cut"));
}

#[test]
fn hundred_random_cuts() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for i in 0..100 {
        let pattern = Pattern::ALL[i % Pattern::ALL.len()];
        let d = random_principal_cut(&mut rng, pattern);
        let (out, report) = reduce_all(&d, 64);
        assert!(!report.steps.is_empty());
        check(&out);
        assert_eq!(out.conclusion, d.conclusion);
        assert!(complexity_decreases(&cut_sizes(&d), &cut_sizes(&out)));
    }
}
