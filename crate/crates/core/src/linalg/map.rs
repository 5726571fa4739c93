use num_traits::Zero;

use super::{unit_vector, Matrix, Subspace};
use crate::error::{check_len, Result};
use crate::scalar::{Scalar, Vector};

/// A linear map `F^domain -> F^codomain`, stored as a `codomain x domain`
/// matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix }
    }

    pub fn zero(domain_dim: usize, codomain_dim: usize) -> Self {
        Self::new(Matrix::zeros(codomain_dim, domain_dim))
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    /// The map sending the `i`-th standard basis vector to `images[i]`.
    pub fn from_images(codomain_dim: usize, images: &[Vector]) -> Result<Self> {
        Ok(Self::new(Matrix::from_columns(codomain_dim, images)?))
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    /// Image of the `i`-th standard basis vector.
    pub fn image_of_basis(&self, i: usize) -> Vector {
        self.matrix.column(i)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        check_len(self.domain_dim(), inner.codomain_dim())?;
        Ok(Self::new(self.matrix.mul(&inner.matrix)?))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.codomain_dim(), self.matrix.columns()).expect("column length")
    }

    pub fn kernel(&self) -> Subspace {
        kernel(self).expect("kernel of well-formed map")
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.entries().iter().all(Zero::is_zero)
    }

    /// Restriction to a subspace, in the subspace's basis coordinates.
    pub fn restrict(&self, sub: &Subspace) -> Result<LinearMap> {
        check_len(self.domain_dim(), sub.ambient_dim())?;
        let images = sub
            .basis()
            .iter()
            .map(|v| self.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(self.codomain_dim(), &images)
    }
}

/// The solution space of `f(v) = 0`, in canonical form.
pub fn kernel(f: &LinearMap) -> Result<Subspace> {
    let n = f.domain_dim();
    let (reduced, pivots) = super::rref(f.matrix());
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::with_capacity(n - pivots.len());
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = unit_vector(n, free);
        for (r, &p) in pivots.iter().enumerate() {
            let a = reduced.get(r, free);
            if !a.is_zero() {
                v[p] = -a.clone();
            }
        }
        vectors.push(v);
    }
    Subspace::span(n, vectors)
}
