//! Nonabelian tensor products of pairs of Lie algebras over the rationals.
//!
//! For a finite-dimensional Lie algebra `L` with an ideal `N`, the crate
//! computes `L ⊗ N` as an explicit Lie algebra, together with the diagonal
//! ideal `L □ N`, the exterior product `L ∧ N`, the commutator maps onto
//! `[L, N]`, their kernels `J₂(L, N)` and `M(L, N)`, and the quadratic map
//! `ψ` out of `Γ(N/[N,L])`. The [`verify`] module checks the splitting and
//! Künneth-type identities relating these objects on concrete pairs.

pub mod catalog;
pub mod error;
pub mod gamma;
pub mod lie;
pub mod linalg;
pub mod pair;
pub mod scalar;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use lie::LieAlgebra;
pub use pair::Pair;
pub use scalar::{Scalar, Vector};
pub use tensor::NonabelianTensor;
