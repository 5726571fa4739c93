use crate::error::{check_len, Error, Result};
use crate::linalg::{unit_vector, LinearMap};

use super::LieAlgebra;

/// A linear map between Lie algebras that preserves brackets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    map: LinearMap,
}

impl AlgebraHom {
    /// Checks `f([b_i, b_j]) = [f(b_i), f(b_j)]` on all basis pairs.
    pub fn new(source: &LieAlgebra, target: &LieAlgebra, map: LinearMap) -> Result<Self> {
        check_len(source.dim(), map.domain_dim())?;
        check_len(target.dim(), map.codomain_dim())?;
        let images: Vec<_> = (0..source.dim()).map(|i| map.image_of_basis(i)).collect();
        for i in 0..source.dim() {
            for j in i + 1..source.dim() {
                let lhs = map.apply(source.bracket_basis(i, j))?;
                let rhs = target.bracket_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(i, j));
                }
            }
        }
        Ok(Self { map })
    }

    pub fn identity(alg: &LieAlgebra) -> Self {
        Self {
            map: LinearMap::identity(alg.dim()),
        }
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn into_map(self) -> LinearMap {
        self.map
    }

    pub fn apply_basis(&self, i: usize) -> crate::scalar::Vector {
        self.map.apply(&unit_vector(self.map.domain_dim(), i)).expect("basis index in range")
    }
}
