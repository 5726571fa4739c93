use proptest::prelude::*;
use tensoralg::catalog::{catalog_pairs, parse, parse_selector, AlgebraDocument, Document, Expr};
use tensoralg::linalg::{
    is_zero, kernel, quotient_with_section, span_intersect, span_sum, LinearMap, Matrix, Subspace,
};
use tensoralg::scalar::{format_rational, parse_rational, ratio};
use tensoralg::{NonabelianTensor, Pair, Scalar, Vector};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(scalar(), n)
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(scalar(), r * c).prop_map(move |e| Matrix::from_entries(r, c, e).unwrap())
    })
}

fn vectors(ambient: usize) -> impl Strategy<Value = Vec<Vector>> {
    proptest::collection::vec(vector(ambient), 0..=ambient + 1)
}

fn catalog_index() -> impl Strategy<Value = usize> {
    0..catalog_pairs().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_literals_round_trip(x in scalar()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let f = LinearMap::new(m.clone());
        let k = kernel(&f).unwrap();
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis() {
            prop_assert!(is_zero(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn quotient_section_is_a_right_inverse(gens in vectors(4)) {
        let r = Subspace::span(4, gens).unwrap();
        let q = quotient_with_section(4, &r).unwrap();
        prop_assert_eq!(q.dim() + r.dim(), 4);
        for v in r.basis() {
            prop_assert!(is_zero(&q.proj.apply(v).unwrap()));
        }
        for (k, s) in q.section.iter().enumerate() {
            prop_assert_eq!(q.proj.apply(s).unwrap(), tensoralg::linalg::unit_vector(q.dim(), k));
        }
    }

    #[test]
    fn sum_and_intersection_dimensions(a in vectors(4), b in vectors(4)) {
        let a = Subspace::span(4, a).unwrap();
        let b = Subspace::span(4, b).unwrap();
        let s = span_sum(&a, &b).unwrap();
        let i = span_intersect(&a, &b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
        prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
    }

    #[test]
    fn expansion_is_bilinear(index in catalog_index(), seed in any::<u64>()) {
        let (_, pair) = catalog_pairs().swap_remove(index);
        let t = NonabelianTensor::construct(&pair).unwrap();
        let (p, q) = (pair.l().dim(), pair.n().dim());
        let mut runner = proptest::test_runner::TestRunner::new_with_rng(
            ProptestConfig::default(),
            proptest::test_runner::TestRng::from_seed(
                proptest::test_runner::RngAlgorithm::ChaCha,
                &{
                    let mut s = [0u8; 32];
                    s[..8].copy_from_slice(&seed.to_le_bytes());
                    s
                },
            ),
        );
        use proptest::strategy::ValueTree;
        let mut draw = |n: usize| vector(n).new_tree(&mut runner).unwrap().current();
        let (x1, x2, y1, y2) = (draw(p), draw(p), draw(q), draw(q));
        let c = ratio(-3, 2);
        let comb = |a: &Vector, b: &Vector| -> Vector { a.iter().zip(b).map(|(u, v)| u + &c * v).collect() };
        let e = |x: &Vector, y: &Vector| t.symbol_expand(x, y).unwrap();
        prop_assert_eq!(e(&comb(&x1, &x2), &y1), comb(&e(&x1, &y1), &e(&x2, &y1)));
        prop_assert_eq!(e(&x1, &comb(&y1, &y2)), comb(&e(&x1, &y1), &e(&x1, &y2)));
    }

    #[test]
    fn dimensions_are_invariant_under_basis_permutation(
        index in catalog_index(),
        perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let (_, pair) = catalog_pairs().swap_remove(index);
        let n = pair.l().dim();
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let dims = |p: &Pair| NonabelianTensor::construct(p).unwrap().derived_maps().unwrap().dimensions();
        let permuted = pair.permuted(&perm).unwrap();
        prop_assert!(NonabelianTensor::construct(&permuted).unwrap().algebra().validate_structure().is_ok());
        prop_assert_eq!(dims(&permuted), dims(&pair));
    }

    #[test]
    fn algebra_documents_round_trip(
        index in catalog_index(),
        perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let (id, pair) = catalog_pairs().swap_remove(index);
        let n = pair.l().dim();
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let l = pair.l().permuted(&perm).unwrap();
        let doc = AlgebraDocument::from_algebra(&id, &l);
        let text = doc.to_string();
        let Document::Algebra(back) = parse(&text).unwrap() else {
            panic!("expected an algebra document");
        };
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_string(), text);
        prop_assert!(back.to_algebra().unwrap().same_structure(&l));
    }

    #[test]
    fn selectors_print_and_reparse(index in catalog_index()) {
        let selector = tensoralg::catalog::CATALOG_PAIRS[index];
        let expr: Expr = parse_selector(&format!("builtin:{selector}")).unwrap();
        prop_assert_eq!(expr.to_string(), selector);
    }
}
