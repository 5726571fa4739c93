use super::*;
use crate::scalar::int;

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

fn l2() -> LieAlgebra {
    LieAlgebra::from_brackets(names(&["x", "y"]), [(0, 1, v(&[0, 1]))]).unwrap()
}

fn h1() -> LieAlgebra {
    LieAlgebra::from_brackets(names(&["x", "y", "z"]), [(0, 1, v(&[0, 0, 1]))]).unwrap()
}

#[test]
fn abelian_full_pair_has_trivial_actions() {
    let p = Pair::full(LieAlgebra::abelian(2));
    assert!(p.act_ln().is_trivial());
    assert!(p.act_nl().is_trivial());
}

#[test]
fn heisenberg_center_pair_has_trivial_actions() {
    let p = Pair::make_pair(h1(), vec![v(&[0, 0, 1])]).unwrap();
    assert!(p.act_ln().is_trivial());
    assert!(p.act_nl().is_trivial());
    assert_eq!(p.n().dim(), 1);
}

#[test]
fn non_ideal_is_rejected_with_witness() {
    let err = Pair::make_pair(h1(), vec![v(&[1, 0, 0])]).unwrap_err();
    match err {
        Error::NotAnIdeal(w) => {
            assert_eq!(w.algebra_basis, 1);
            assert_eq!(w.bracket, v(&[0, 0, -1]));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn trivial_actions_between_abelian_algebras_are_valid() {
    let (a, b) = (LieAlgebra::abelian(2), LieAlgebra::abelian(3));
    assert!(validate_action(&ActionData::trivial(2, 3), &a, &b).is_ok());
}

#[test]
fn inner_actions_are_valid_and_compatible() {
    for p in [
        Pair::full(l2()),
        Pair::full(h1()),
        Pair::make_pair(h1(), vec![v(&[0, 0, 1])]).unwrap(),
        Pair::make_pair(l2(), vec![v(&[0, 1])]).unwrap(),
    ] {
        assert!(validate_action(p.act_ln(), p.l(), p.n()).is_ok());
        assert!(validate_action(p.act_nl(), p.n(), p.l()).is_ok());
        assert!(p.validate_compatible().is_ok());
    }
}

#[test]
fn non_derivation_action_violates_second_axiom() {
    // a acts on H1 by z -> x, everything else to 0.
    let mut table = vec![vec![v(&[0, 0, 0]); 3]; 1];
    table[0][2] = v(&[1, 0, 0]);
    let act = ActionData::new(1, 3, table).unwrap();
    let err = validate_action(&act, &LieAlgebra::abelian(1), &h1()).unwrap_err();
    assert_eq!(err.axiom, ActionAxiom::Derivation);
    assert_eq!(err.indices, (0, 0, 1));
    assert_eq!(err.residual, v(&[1, 0, 0]));
}

#[test]
fn individually_valid_actions_can_be_incompatible() {
    // <a> and <b> abelian, ^a b = b and ^b a = a.
    let (a, b) = (LieAlgebra::abelian(1), LieAlgebra::abelian(1));
    let ln = ActionData::new(1, 1, vec![vec![v(&[1])]]).unwrap();
    let nl = ActionData::new(1, 1, vec![vec![v(&[1])]]).unwrap();
    assert!(validate_action(&ln, &a, &b).is_ok());
    assert!(validate_action(&nl, &b, &a).is_ok());
    let err = Pair::with_actions(a, b, ln, nl).unwrap_err();
    match err {
        Error::IncompatibleActions(w) => {
            assert_eq!(w.equation, CompatibilityEquation::ActedOnSide);
            assert_eq!(w.indices, (0, 0, 0));
            assert_eq!(w.residual, v(&[1]));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn quotient_pairs() {
    let ab = Pair::full(LieAlgebra::abelian(2)).quotient_pair().unwrap();
    assert!(ab.commutator.is_zero());
    assert_eq!(ab.pair.l().dim(), 2);
    assert_eq!(ab.pair.n().dim(), 2);

    let q = Pair::full(l2()).quotient_pair().unwrap();
    assert_eq!(q.commutator, Subspace::span(2, [v(&[0, 1])]).unwrap());
    assert_eq!(q.pair.l().dim(), 1);
    assert_eq!(q.pair.n().dim(), 1);
    assert!(q.pair.l().is_abelian());
    assert_eq!(q.proj_n.map().apply(&v(&[3, 7])).unwrap(), v(&[3]));

    let c = Pair::make_pair(h1(), vec![v(&[0, 0, 1])]).unwrap().quotient_pair().unwrap();
    assert!(c.commutator.is_zero());
    assert!(c.pair.l().same_structure(&h1()));
    assert_eq!(c.pair.n().dim(), 1);
}

#[test]
fn relative_abelianization_dims() {
    assert_eq!(Pair::full(LieAlgebra::abelian(3)).relative_abelianization_dim().unwrap(), 3);
    assert_eq!(Pair::full(l2()).relative_abelianization_dim().unwrap(), 1);
    assert_eq!(Pair::full(h1()).relative_abelianization_dim().unwrap(), 2);
}

#[test]
fn intersection_flag() {
    assert!(Pair::full(h1()).intersection_is_commutator().unwrap());
    let center = Pair::make_pair(h1(), vec![v(&[0, 0, 1])]).unwrap();
    assert!(!center.intersection_is_commutator().unwrap());
}

#[test]
fn direct_sum_of_pairs() {
    let s = Pair::full(l2())
        .direct_sum(&Pair::make_pair(h1(), vec![v(&[0, 0, 1])]).unwrap())
        .unwrap();
    assert_eq!(s.l().dim(), 5);
    assert_eq!(s.n().dim(), 3);
    assert!(s.validate_compatible().is_ok());
}
