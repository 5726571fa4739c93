//! The nonabelian tensor product `L ⊗ N` as an explicit Lie algebra.
//!
//! Relation 6 of the presentation, `[l⊗n, l'⊗n'] = -(^n l) ⊗ (^l' n')`,
//! rewrites every bracket of generators as a combination of generators, so
//! `L ⊗ N` is spanned by the images of the symbols `b_i ⊗ n_j`. It is
//! therefore the quotient of the symbol space `V = L ⊗_F N` by the
//! intersection of the relation ideal with `V`. That intersection is
//! computed as the smallest subspace `R` of `V` that
//!
//! * contains the two action relations (the bilinearity relations are built
//!   into `V`),
//! * contains the antisymmetry and Jacobi defects of the symbol bracket
//!   `β`, and
//! * is closed under `β(e, ·)` and `β(·, e)` for every symbol `e`.
//!
//! `V/R` with the bracket induced by `β` is a Lie algebra satisfying all
//! defining relations, and every element of `R` vanishes in the universal
//! object, so the two agree. Whether the presentation is read over
//! generators `l ⊗ n` for all `(l, n) ∈ L × N` or only for basis pairs makes
//! no difference once bilinearity is imposed.

mod closure;
mod derived;
mod symbols;

pub use closure::{beta_bracket, closure, relation_seed, SymbolBracket};
pub use derived::{DerivedMaps, Dimensions, Exterior};
pub use symbols::SymbolSpace;

use crate::error::{check_len, Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{outer, quotient_with_section, Quotient, Subspace};
use crate::pair::Pair;
use crate::scalar::{Scalar, Vector};

/// `L ⊗ N` for a pair, with the data needed to map symbols into it.
#[derive(Debug, Clone)]
pub struct NonabelianTensor {
    pair: Pair,
    symbols: SymbolSpace,
    relations: Subspace,
    quotient: Quotient,
    algebra: LieAlgebra,
}

impl NonabelianTensor {
    pub fn construct(pair: &Pair) -> Result<Self> {
        let symbols = SymbolSpace::new(pair.l().dim(), pair.n().dim());
        let beta = SymbolBracket::new(pair);
        let seed = relation_seed(pair);
        let relations = closure::close(&beta, seed);
        let quotient = quotient_with_section(symbols.dim(), &relations)?;
        let names: Vec<String> = quotient
            .section_columns
            .iter()
            .map(|&s| symbols.name(pair, s))
            .collect();
        let k = quotient.dim();
        let mut brackets = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let prod = beta.on_symbols(quotient.section_columns[a], quotient.section_columns[b]);
                brackets.push((a, b, quotient.proj.apply(&prod)?));
            }
        }
        let algebra = LieAlgebra::from_brackets_unchecked(names, brackets)?;
        algebra
            .validate_structure()
            .map_err(|v| Error::Internal(format!("tensor product bracket is not a Lie bracket: {v}")))?;
        Ok(Self {
            pair: pair.clone(),
            symbols,
            relations,
            quotient,
            algebra,
        })
    }

    pub fn pair(&self) -> &Pair {
        &self.pair
    }

    pub fn symbols(&self) -> SymbolSpace {
        self.symbols
    }

    /// The relation subspace `R` of the symbol space.
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Projection `V -> V/R` and its symbol section.
    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// `L ⊗ N` with basis the section symbols.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The symbol index of the `a`-th basis vector of the tensor product.
    pub fn basis_symbol(&self, a: usize) -> (usize, usize) {
        self.symbols.split(self.quotient.section_columns[a])
    }

    /// Image of a symbol-space vector in tensor coordinates.
    pub fn project(&self, v: &[Scalar]) -> Result<Vector> {
        self.quotient.proj.apply(v)
    }

    /// Image of `x ⊗ y` for `x` in `L`-coordinates and `y` in `N`-coordinates.
    pub fn symbol_expand(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_len(self.symbols.l_dim(), x.len())?;
        check_len(self.symbols.n_dim(), y.len())?;
        self.project(&outer(x, y))
    }

    /// Image of `x ⊗ y` for `x, y` both in `N ⊆ L`, given in `L`-coordinates.
    pub fn expand_in_l(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        let y = self
            .pair
            .ideal_coordinates(y)?
            .ok_or_else(|| Error::Internal("second factor is not in N".into()))?;
        self.symbol_expand(x, &y)
    }

    /// The diagonal ideal `L □ N`, spanned by `n ⊗ n` for `n ∈ N`, as the
    /// span of the polarized generators over the ideal basis.
    pub fn diagonal(&self) -> Result<Subspace> {
        let q = self.pair.n().dim();
        let mut images = Vec::with_capacity(q * (q + 1) / 2);
        for i in 0..q {
            let ni = self.pair.embed_basis(i)?.to_vec();
            images.push(self.symbol_expand(&ni, &crate::linalg::unit_vector(q, i))?);
            for j in i + 1..q {
                let nj = self.pair.embed_basis(j)?.to_vec();
                let a = self.symbol_expand(&ni, &crate::linalg::unit_vector(q, j))?;
                let b = self.symbol_expand(&nj, &crate::linalg::unit_vector(q, i))?;
                images.push(crate::linalg::add(&a, &b));
            }
        }
        Subspace::span(self.dim(), images)
    }

    /// `L ∧ N = (L ⊗ N) / (L □ N)` and the projection `ε`.
    pub fn exterior(&self) -> Result<Exterior> {
        derived::exterior(self)
    }

    pub fn derived_maps(&self) -> Result<DerivedMaps> {
        DerivedMaps::compute(self)
    }
}
