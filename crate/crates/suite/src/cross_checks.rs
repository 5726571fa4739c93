use crate::{abelianization_dim, second_homology_dim};
use tensoralg::catalog::{abelian, catalog_pairs, direct_sum, heisenberg, nonabelian2};
use tensoralg::{NonabelianTensor, Pair};

fn multiplier_dim(l: &tensoralg::LieAlgebra) -> usize {
    let t = NonabelianTensor::construct(&Pair::full(l.clone())).unwrap();
    t.derived_maps().unwrap().dimensions().multiplier
}

#[test]
fn multiplier_of_full_pairs_matches_second_homology() {
    for (id, pair) in catalog_pairs() {
        if pair.is_full() {
            assert_eq!(multiplier_dim(pair.l()), second_homology_dim(pair.l()), "{id}");
        }
    }
    for l in [
        heisenberg(2),
        direct_sum(&nonabelian2(), &nonabelian2()),
        direct_sum(&heisenberg(1), &abelian(1)),
    ] {
        assert_eq!(multiplier_dim(&l), second_homology_dim(&l), "{l:?}");
    }
}

#[test]
fn diagonal_of_full_pairs_is_the_symmetric_square_of_the_abelianization() {
    for (id, pair) in catalog_pairs() {
        if pair.is_full() {
            let d = abelianization_dim(pair.l());
            let t = NonabelianTensor::construct(&pair).unwrap();
            assert_eq!(t.diagonal().unwrap().dim(), d * (d + 1) / 2, "{id}");
        }
    }
}

#[test]
fn tensor_square_dimension_is_multiplier_plus_diagonal_plus_derived() {
    for (id, pair) in catalog_pairs() {
        if pair.is_full() {
            let l = pair.l();
            let d = abelianization_dim(l);
            let derived = l.dim() - d;
            let t = NonabelianTensor::construct(&pair).unwrap();
            assert_eq!(
                t.dim(),
                second_homology_dim(l) + d * (d + 1) / 2 + derived,
                "{id}"
            );
        }
    }
}
