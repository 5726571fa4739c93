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
fn abelian_is_valid() {
    assert!(LieAlgebra::abelian(3).validate_structure().is_ok());
}

#[test]
fn two_dimensional_nonabelian_is_valid() {
    assert!(l2().validate_structure().is_ok());
}

#[test]
fn symmetric_constants_violate_antisymmetry() {
    let mut c = vec![vec![v(&[0, 0]); 2]; 2];
    c[0][1] = v(&[1, 0]);
    c[1][0] = v(&[1, 0]);
    let err = LieAlgebra::from_structure_constants(names(&["x", "y"]), &c).unwrap_err();
    assert_eq!(
        err,
        Error::InvalidStructure(StructureViolation::Antisymmetry {
            i: 0,
            j: 1,
            k: 0,
            residual: int(2)
        })
    );
}

#[test]
fn jacobi_violation_is_located() {
    // [x,y]=y, [x,z]=z, [y,z]=x breaks Jacobi on (x,y,z) in component x.
    let err = LieAlgebra::from_brackets(
        names(&["x", "y", "z", "w"]),
        [(0, 1, v(&[0, 1, 0, 0])), (0, 2, v(&[0, 0, 1, 0])), (1, 2, v(&[1, 0, 0, 0]))],
    )
    .unwrap_err();
    assert_eq!(
        err,
        Error::InvalidStructure(StructureViolation::Jacobi {
            i: 0,
            j: 1,
            k: 2,
            m: 0,
            residual: int(-2)
        })
    );
}

#[test]
fn brackets_of_vectors() {
    let a = LieAlgebra::abelian(2);
    assert_eq!(a.bracket(&v(&[1, 2]), &v(&[3, 4])).unwrap(), v(&[0, 0]));
    assert_eq!(h1().bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(), v(&[0, 0, 1]));
    assert_eq!(l2().bracket(&v(&[0, 1]), &v(&[1, 0])).unwrap(), v(&[0, -1]));
    assert!(l2().bracket(&v(&[1]), &v(&[1, 0])).is_err());
}

#[test]
fn bracket_of_subspaces() {
    let a = LieAlgebra::abelian(3);
    assert!(a.whole().bracket(&a.whole()).unwrap().space().is_zero());
    let l = l2();
    assert_eq!(l.derived(), Subspace::span(2, [v(&[0, 1])]).unwrap());
    let h = h1();
    let z = h.center();
    assert!(z.bracket(&h.whole()).unwrap().space().is_zero());
}

#[test]
fn bracket_of_subspaces_is_symmetric() {
    let h = h1();
    let a = h.subspace(Subspace::span(3, [v(&[1, 1, 0])]).unwrap()).unwrap();
    let b = h.subspace(Subspace::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap()).unwrap();
    assert_eq!(a.bracket(&b).unwrap(), b.bracket(&a).unwrap());
}

#[test]
fn parent_mismatch_is_rejected() {
    let (a, b) = (l2(), h1());
    assert_eq!(a.whole().bracket(&b.whole()).unwrap_err(), Error::ParentMismatch);
}

#[test]
fn centers() {
    assert!(LieAlgebra::abelian(4).center().space().is_full());
    assert_eq!(h1().center().space(), &Subspace::span(3, [v(&[0, 0, 1])]).unwrap());
    assert!(l2().center().space().is_zero());
}

#[test]
fn quotients() {
    let h = h1();
    let (same, hom) = h.quotient(&Subspace::zero(3)).unwrap();
    assert!(same.same_structure(&h));
    assert_eq!(hom.map(), &LinearMap::identity(3));

    let (zero, _) = h.quotient(&Subspace::full(3)).unwrap();
    assert_eq!(zero.dim(), 0);

    let (ab, proj) = h.quotient(h.center().space()).unwrap();
    assert_eq!(ab.dim(), 2);
    assert!(ab.is_abelian());
    assert_eq!(ab.names(), &["x".to_string(), "y".to_string()]);
    assert_eq!(proj.map().apply(&v(&[0, 0, 5])).unwrap(), v(&[0, 0]));
}

#[test]
fn quotient_by_non_ideal_is_rejected() {
    let err = h1().quotient(&Subspace::span(3, [v(&[1, 0, 0])]).unwrap()).unwrap_err();
    assert!(matches!(err, Error::NotAnIdeal(_)));
}

#[test]
fn direct_sums() {
    let two = LieAlgebra::abelian(1).direct_sum(&LieAlgebra::abelian(1));
    assert_eq!(two.dim(), 2);
    assert!(two.is_abelian());
    assert_eq!(two.names(), &["a1".to_string(), "a1'".to_string()]);

    let s = l2().direct_sum(&LieAlgebra::abelian(1));
    assert_eq!(s.dim(), 3);
    assert_eq!(s.derived().dim(), 1);

    let hh = h1().direct_sum(&h1());
    assert_eq!(hh.dim(), 6);
    assert!(hh.validate_structure().is_ok());
    assert_eq!(hh.center().dim(), 2);
}

#[test]
fn direct_sum_center_is_blockwise() {
    let (a, b) = (h1(), l2());
    let s = a.direct_sum(&b);
    let mut expected = Vec::new();
    for z in a.center().space().basis() {
        let mut w = z.clone();
        w.extend(zero_vector(b.dim()));
        expected.push(w);
    }
    for z in b.center().space().basis() {
        let mut w = zero_vector(a.dim());
        w.extend(z.iter().cloned());
        expected.push(w);
    }
    assert_eq!(s.center().space(), &Subspace::span(s.dim(), expected).unwrap());
}

#[test]
fn abelianizations() {
    assert_eq!(LieAlgebra::abelian(3).abelianization().0.dim(), 3);
    assert_eq!(l2().abelianization().0.dim(), 1);
    assert_eq!(h1().abelianization().0.dim(), 2);
}

#[test]
fn permuting_the_basis_preserves_validity() {
    let h = h1().permuted(&[2, 0, 1]).unwrap();
    assert!(h.validate_structure().is_ok());
    assert_eq!(h.names(), &["z".to_string(), "x".to_string(), "y".to_string()]);
    // [x, y] = z becomes [b1, b2] = b0
    assert_eq!(h.bracket_basis(1, 2), &v(&[1, 0, 0])[..]);
}

#[test]
fn describe_vectors() {
    let h = h1();
    assert_eq!(h.describe(&v(&[1, -2, 0])), "x - 2*y");
    assert_eq!(h.describe(&v(&[0, 0, 0])), "0");
    assert_eq!(h.describe(&v(&[-1, 0, 1])), "-x + z");
}
