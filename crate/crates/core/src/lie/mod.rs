//! Finite-dimensional Lie algebras given by structure constants.

mod hom;
mod subspace;

pub use hom::AlgebraHom;
pub use subspace::AlgebraSubspace;

use std::fmt;

use num_traits::Zero;

use crate::error::{check_len, Error, Result};
use crate::linalg::{add_scaled, is_zero, kernel, quotient_with_section, zero_vector, LinearMap, Matrix, Subspace};
use crate::scalar::{format_rational, Scalar, Vector};

/// The first structure-constant tuple at which the Lie axioms fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureViolation {
    /// `c[i][j][k] + c[j][i][k] != 0` (with `i == j` meaning `c[i][i][k] != 0`).
    Antisymmetry { i: usize, j: usize, k: usize, residual: Scalar },
    /// Component `m` of the Jacobi sum over `(i, j, k)` is nonzero.
    Jacobi { i: usize, j: usize, k: usize, m: usize, residual: Scalar },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Antisymmetry { i, j, k, residual } => write!(
                f,
                "antisymmetry fails at ({i},{j},{k}): c[{i}][{j}][{k}] + c[{j}][{i}][{k}] = {}",
                format_rational(residual)
            ),
            Self::Jacobi { i, j, k, m, residual } => write!(
                f,
                "Jacobi identity fails on basis triple ({i},{j},{k}), component {m}: residual {}",
                format_rational(residual)
            ),
        }
    }
}

/// A Lie algebra with basis `b_0..b_{n-1}` and `[b_i, b_j] = table[i*n + j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: Vec<Vector>,
}

impl LieAlgebra {
    /// Builds an algebra from a full `c[i][j][k]` array, checking antisymmetry
    /// and the Jacobi identity.
    pub fn from_structure_constants(names: Vec<String>, c: &[Vec<Vector>]) -> Result<Self> {
        let n = names.len();
        check_len(n, c.len())?;
        let mut table = Vec::with_capacity(n * n);
        for row in c {
            check_len(n, row.len())?;
            for v in row {
                check_len(n, v.len())?;
                table.push(v.clone());
            }
        }
        let alg = Self { names, table };
        alg.validate_structure().map_err(Error::InvalidStructure)?;
        Ok(alg)
    }

    /// Builds an algebra from brackets `[b_i, b_j] = v` with `i < j`; the
    /// remaining products follow from antisymmetry. Jacobi is checked.
    pub fn from_brackets<I>(names: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vector)>,
    {
        let alg = Self::from_brackets_unchecked(names, brackets)?;
        alg.validate_structure().map_err(Error::InvalidStructure)?;
        Ok(alg)
    }

    pub(crate) fn from_brackets_unchecked<I>(names: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vector)>,
    {
        let n = names.len();
        let mut table = vec![zero_vector(n); n * n];
        for (i, j, v) in brackets {
            check_len(n, v.len())?;
            if i >= j || j >= n {
                return Err(Error::BracketIndex { i, j });
            }
            table[j * n + i] = v.iter().map(|x| -x).collect();
            table[i * n + j] = v;
        }
        Ok(Self { names, table })
    }

    pub fn abelian(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("a{i}")).collect();
        Self {
            names,
            table: vec![zero_vector(n); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        check_len(self.dim(), names.len())?;
        self.names = names;
        Ok(self)
    }

    /// `[b_i, b_j]`
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim() + j]
    }

    /// The structure constant `c[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.bracket_basis(i, j)[k]
    }

    /// Same structure constants, ignoring basis names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.table == other.table
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero(v))
    }

    pub fn validate_structure(&self) -> Result<(), StructureViolation> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let residual = self.constant(i, j, k) + self.constant(j, i, k);
                    let residual = if i == j { self.constant(i, i, k).clone() } else { residual };
                    if !residual.is_zero() {
                        return Err(StructureViolation::Antisymmetry { i, j, k, residual });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let jac = self.jacobi_sum(i, j, k);
                    if let Some(m) = jac.iter().position(|x| !x.is_zero()) {
                        return Err(StructureViolation::Jacobi {
                            i,
                            j,
                            k,
                            m,
                            residual: jac[m].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]`
    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vector {
        let mut out = zero_vector(self.dim());
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (t, x) in self.bracket_basis(b, c).iter().enumerate() {
                add_scaled(&mut out, x, self.bracket_basis(a, t));
            }
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_len(self.dim(), x.len())?;
        check_len(self.dim(), y.len())?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || is_zero(self.bracket_basis(i, j)) {
                    continue;
                }
                add_scaled(&mut out, &(a * b), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// `ad_x` as a linear map.
    pub fn ad(&self, x: &[Scalar]) -> Result<LinearMap> {
        check_len(self.dim(), x.len())?;
        let images: Vec<Vector> = (0..self.dim())
            .map(|j| self.bracket_unchecked(x, &crate::linalg::unit_vector(self.dim(), j)))
            .collect();
        LinearMap::from_images(self.dim(), &images)
    }

    pub fn whole(&self) -> AlgebraSubspace<'_> {
        AlgebraSubspace::new(self, Subspace::full(self.dim())).expect("ambient matches")
    }

    pub fn subspace(&self, space: Subspace) -> Result<AlgebraSubspace<'_>> {
        AlgebraSubspace::new(self, space)
    }

    /// `[A, B]` for subspaces given in this algebra's coordinates.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        check_len(self.dim(), a.ambient_dim())?;
        check_len(self.dim(), b.ambient_dim())?;
        let mut products = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                products.push(self.bracket_unchecked(x, y));
            }
        }
        Subspace::span(self.dim(), products)
    }

    /// `[L, L]`
    pub fn derived(&self) -> Subspace {
        Subspace::span(self.dim(), self.table.iter().cloned()).expect("table vectors have length dim")
    }

    /// `Z(L) = { v : [v, b_i] = 0 for all i }`
    pub fn center(&self) -> AlgebraSubspace<'_> {
        let n = self.dim();
        // Stack the maps v -> [v, b_i] into one n^2 x n matrix.
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for k in 0..n {
                for (t, x) in self.bracket_basis(k, i).iter().enumerate() {
                    if !x.is_zero() {
                        m.set(i * n + t, k, x.clone());
                    }
                }
            }
        }
        let space = kernel(&LinearMap::new(m)).expect("square system");
        AlgebraSubspace::new(self, space).expect("ambient matches")
    }

    /// Checks `[L, I] ⊆ I`, returning the first basis pair that leaves `I`.
    pub fn check_ideal(&self, ideal: &Subspace) -> Result<()> {
        check_len(self.dim(), ideal.ambient_dim())?;
        for i in 0..self.dim() {
            let b = crate::linalg::unit_vector(self.dim(), i);
            for (member_index, m) in ideal.basis().iter().enumerate() {
                let prod = self.bracket_unchecked(&b, m);
                if !ideal.contains(&prod) {
                    return Err(Error::NotAnIdeal(crate::pair::IdealViolation {
                        algebra_basis: i,
                        ideal_member: member_index,
                        bracket: prod,
                    }));
                }
            }
        }
        Ok(())
    }

    /// The algebra structure on the RREF basis of a subalgebra.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<LieAlgebra> {
        check_len(self.dim(), sub.ambient_dim())?;
        let m = sub.dim();
        let mut brackets = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let prod = self.bracket_unchecked(&sub.basis()[i], &sub.basis()[j]);
                let coords = sub.coordinates(&prod).ok_or_else(|| {
                    Error::Internal("subspace is not closed under the bracket".into())
                })?;
                brackets.push((i, j, coords));
            }
        }
        let names = sub
            .basis()
            .iter()
            .map(|v| self.describe(v))
            .collect();
        LieAlgebra::from_brackets_unchecked(names, brackets)
    }

    /// Quotient by an ideal, with the projection as a homomorphism.
    ///
    /// The quotient basis is the earliest set of basis vectors independent
    /// modulo the ideal, so surviving basis vectors keep their names.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, AlgebraHom)> {
        self.check_ideal(ideal)?;
        let q = quotient_with_section(self.dim(), ideal)?;
        let k = q.dim();
        let mut brackets = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let prod = self.bracket_basis(q.section_columns[a], q.section_columns[b]);
                brackets.push((a, b, q.proj.apply(prod)?));
            }
        }
        let names = q.section_columns.iter().map(|&c| self.names[c].clone()).collect();
        let quotient = LieAlgebra::from_brackets_unchecked(names, brackets)?;
        let hom = AlgebraHom::new(self, &quotient, q.proj)?;
        Ok((quotient, hom))
    }

    /// `L / [L, L]` with its projection.
    pub fn abelianization(&self) -> (LieAlgebra, AlgebraHom) {
        self.quotient(&self.derived()).expect("derived algebra is an ideal")
    }

    /// Block direct sum; summand names are kept, primed on collision.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (p, q) = (self.dim(), other.dim());
        let n = p + q;
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) || self.names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut table = vec![zero_vector(n); n * n];
        for i in 0..p {
            for j in 0..p {
                for (k, x) in self.bracket_basis(i, j).iter().enumerate() {
                    table[i * n + j][k] = x.clone();
                }
            }
        }
        for i in 0..q {
            for j in 0..q {
                for (k, x) in other.bracket_basis(i, j).iter().enumerate() {
                    table[(p + i) * n + p + j][p + k] = x.clone();
                }
            }
        }
        LieAlgebra { names, table }
    }

    /// Re-expresses the algebra in the permuted basis `b'_t = b_{perm[t]}`.
    pub fn permuted(&self, perm: &[usize]) -> Result<LieAlgebra> {
        let n = self.dim();
        check_len(n, perm.len())?;
        let mut inverse = vec![usize::MAX; n];
        for (t, &s) in perm.iter().enumerate() {
            if s >= n || inverse[s] != usize::MAX {
                return Err(Error::Internal("not a permutation".into()));
            }
            inverse[s] = t;
        }
        let mut table = vec![zero_vector(n); n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = self.bracket_basis(perm[a], perm[b]);
                for (k, x) in prod.iter().enumerate() {
                    table[a * n + b][inverse[k]] = x.clone();
                }
            }
        }
        let names = perm.iter().map(|&s| self.names[s].clone()).collect();
        Ok(LieAlgebra { names, table })
    }

    /// Human-readable form of a vector, e.g. `2*x - 1/2*y`.
    pub fn describe(&self, v: &[Scalar]) -> String {
        describe_combination(v, &self.names)
    }
}

pub(crate) fn describe_combination(v: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (x, name) in v.iter().zip(names) {
        if x.is_zero() {
            continue;
        }
        let negative = crate::scalar::is_neg(x);
        let magnitude = if negative { -x.clone() } else { x.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if magnitude != crate::scalar::int(1) {
            out.push_str(&format_rational(&magnitude));
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.dim())?;
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let v = self.bracket_basis(i, j);
                if !is_zero(v) {
                    write!(f, ", [{},{}]={}", self.names[i], self.names[j], self.describe(v))?;
                }
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests;
