//! The quadratic functor `Γ` on finite-dimensional spaces and the map
//! `ψ: Γ(N/[N,L]) -> L ⊗ N`.
//!
//! Over a field of characteristic zero `Γ(V)` is the symmetric square of
//! `V`. Its basis is `γ(v_i)` for each `i` and the polarized products
//! `v_i·v_j` for `i < j`, listed together as the pairs `(i, j)` with
//! `i <= j` in lexicographic order.

use crate::error::Result;
use crate::linalg::{add, is_zero, quotient_with_section, sub, unit_vector, LinearMap, Subspace};
use crate::pair::Pair;
use crate::scalar::Vector;
use crate::tensor::NonabelianTensor;

pub fn gamma_dim(m: usize) -> usize {
    m * (m + 1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaSpace {
    source_dim: usize,
}

impl GammaSpace {
    pub fn new(source_dim: usize) -> Self {
        Self { source_dim }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn dim(&self) -> usize {
        gamma_dim(self.source_dim)
    }

    /// Basis index of `γ(v_i)` when `i == j`, of `v_i·v_j` otherwise.
    pub fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let m = self.source_dim;
        i * m - i * i.saturating_sub(1) / 2 + j - i
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let m = self.source_dim;
        (0..m).flat_map(move |i| (i..m).map(move |j| (i, j)))
    }
}

/// `ψ` together with the representatives it was built from.
#[derive(Debug, Clone)]
pub struct Psi {
    pub gamma: GammaSpace,
    /// Gamma coordinates to tensor coordinates.
    pub map: LinearMap,
    /// Representatives in `N` (in `N`-coordinates) of the basis of
    /// `N/[N,L]`.
    pub representatives: Vec<Vector>,
}

impl Psi {
    pub fn is_injective(&self) -> bool {
        self.map.is_injective()
    }

    pub fn image(&self) -> Subspace {
        self.map.image()
    }
}

fn representatives(pair: &Pair) -> Result<(Vec<Vector>, Subspace)> {
    let q = pair.n().dim();
    let commutator = pair.commutator_in_ideal()?;
    let quotient = quotient_with_section(q, &commutator)?;
    let reps = quotient.section_columns.iter().map(|&c| unit_vector(q, c)).collect();
    Ok((reps, commutator))
}

/// `x ⊗ y` for `x, y` in `N`-coordinates.
fn square_term(pair: &Pair, t: &NonabelianTensor, x: &[crate::Scalar], y: &[crate::Scalar]) -> Result<Vector> {
    t.symbol_expand(&pair.embed(x)?, y)
}

/// `γ(n̄_i) ↦ n_i ⊗ n_i`, `n̄_i·n̄_j ↦ n_i ⊗ n_j + n_j ⊗ n_i`.
pub fn psi_map(pair: &Pair, t: &NonabelianTensor) -> Result<Psi> {
    let (reps, _) = representatives(pair)?;
    let gamma = GammaSpace::new(reps.len());
    let mut images = Vec::with_capacity(gamma.dim());
    for (i, j) in gamma.pairs() {
        let image = if i == j {
            square_term(pair, t, &reps[i], &reps[i])?
        } else {
            add(
                &square_term(pair, t, &reps[i], &reps[j])?,
                &square_term(pair, t, &reps[j], &reps[i])?,
            )
        };
        images.push(image);
    }
    Ok(Psi {
        gamma,
        map: LinearMap::from_images(t.dim(), &images)?,
        representatives: reps,
    })
}

/// A representative `n` and a commutator basis element `m` for which
/// `(n+m) ⊗ (n+m)` and `n ⊗ n` differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiWitness {
    pub representative: usize,
    pub commutator: usize,
    pub difference: Vector,
}

/// Checks that `n ⊗ n` depends only on the class of `n` modulo `[N,L]`.
///
/// Returns the first failing representative and commutator basis element.
/// The difference must vanish exactly, a stronger requirement than lying
/// in the span of the other images.
pub fn psi_welldefined(pair: &Pair, t: &NonabelianTensor) -> Result<Option<PsiWitness>> {
    let (reps, commutator) = representatives(pair)?;
    for (r, n) in reps.iter().enumerate() {
        let base = square_term(pair, t, n, n)?;
        for (c, m) in commutator.basis().iter().enumerate() {
            let shifted = add(n, m);
            let difference = sub(&square_term(pair, t, &shifted, &shifted)?, &base);
            if !is_zero(&difference) {
                return Ok(Some(PsiWitness {
                    representative: r,
                    commutator: c,
                    difference,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(gamma_dim(0), 0);
        assert_eq!(gamma_dim(1), 1);
        assert_eq!(gamma_dim(2), 3);
        assert_eq!(gamma_dim(4), 10);
    }

    #[test]
    fn index_enumerates_pairs_in_order() {
        for m in 0..6 {
            let g = GammaSpace::new(m);
            let indices: Vec<usize> = g.pairs().map(|(i, j)| g.index(i, j)).collect();
            assert_eq!(indices, (0..g.dim()).collect::<Vec<_>>());
            assert_eq!(g.index(1.min(m), 0), g.index(0, 1.min(m)));
        }
    }
}
