//! Exact linear algebra over the rationals.
//!
//! Everything here is value-typed and immutable once built. Subspaces are
//! stored by their reduced row-echelon basis, so equality of subspaces is
//! equality of the stored data.

mod echelon;
mod map;
mod matrix;
mod subspace;

pub use echelon::EchelonBasis;
pub use map::{kernel, LinearMap};
pub use matrix::{rref, Matrix};
pub use subspace::{quotient_with_section, span_intersect, span_sum, Quotient, Subspace};

use num_traits::Zero;

use crate::scalar::{Scalar, Vector};

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = crate::scalar::int(1);
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn neg(v: &[Scalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// Coefficients of the outer product `a ⊗ b`, flattened as `i * b.len() + j`.
pub fn outer(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = zero_vector(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}
