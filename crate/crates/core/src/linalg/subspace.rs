use std::fmt;

use num_traits::Zero;

use super::{is_zero, unit_vector, zero_vector, EchelonBasis, LinearMap, Matrix};
use crate::error::{check_len, Result};
use crate::scalar::{format_vector, Scalar, Vector};

/// A subspace of `F^ambient_dim`, stored canonically by its RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: EchelonBasis,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            basis: EchelonBasis::new(ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut basis = EchelonBasis::new(ambient_dim);
        basis.extend((0..ambient_dim).map(|i| unit_vector(ambient_dim, i)));
        Self { basis }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut basis = EchelonBasis::new(ambient_dim);
        for v in vectors {
            check_len(ambient_dim, v.len())?;
            basis.insert(v);
        }
        Ok(Self { basis })
    }

    pub fn from_echelon(basis: EchelonBasis) -> Self {
        Self { basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ambient()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.basis.is_full()
    }

    /// The RREF basis rows.
    pub fn basis(&self) -> &[Vector] {
        self.basis.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.basis.pivots()
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim() && self.basis.contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.basis().iter().all(|v| other.contains(v))
    }

    /// Coordinates of `v` with respect to [`Subspace::basis`]; `None` if `v`
    /// is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient_dim() {
            return None;
        }
        self.basis.coordinates(v)
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Scalar]) -> Result<Vector> {
        check_len(self.dim(), coords.len())?;
        let mut out = zero_vector(self.ambient_dim());
        for (c, row) in coords.iter().zip(self.basis()) {
            super::add_scaled(&mut out, c, row);
        }
        Ok(out)
    }

    /// Image under a linear map.
    pub fn map(&self, f: &LinearMap) -> Result<Subspace> {
        check_len(f.domain_dim(), self.ambient_dim())?;
        let images = self
            .basis()
            .iter()
            .map(|v| f.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(f.codomain_dim(), images)
    }

    /// Preimage under a linear map.
    pub fn preimage(&self, f: &LinearMap) -> Result<Subspace> {
        check_len(f.codomain_dim(), self.ambient_dim())?;
        let q = quotient_with_section(self.ambient_dim(), self)?;
        super::kernel(&q.proj.compose(f)?)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis().iter().map(|r| format_vector(r)).collect();
        write!(f, "Subspace(ambient {}, [{}])", self.ambient_dim(), rows.join(", "))
    }
}

fn check_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    check_len(a.ambient_dim(), b.ambient_dim())
}

pub fn span_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    let mut basis = a.basis.clone();
    basis.extend(b.basis().iter().cloned());
    Ok(Subspace { basis })
}

pub fn span_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    if a.is_zero() || b.is_full() {
        return Ok(a.clone());
    }
    if b.is_zero() || a.is_full() {
        return Ok(b.clone());
    }
    // x = sum alpha_i a_i lies in b iff its class modulo b vanishes.
    let q = quotient_with_section(b.ambient_dim(), b)?;
    let incl = LinearMap::new(Matrix::from_columns(a.ambient_dim(), a.basis())?);
    let ker = super::kernel(&q.proj.compose(&incl)?)?;
    let images = ker
        .basis()
        .iter()
        .map(|c| incl.apply(c))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(a.ambient_dim(), images)
}

/// A quotient `F^n / R` with its projection and a section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    /// Projection onto quotient coordinates, rank `n - dim R`.
    pub proj: LinearMap,
    /// Coset representatives mapping to the standard basis of the quotient.
    pub section: Vec<Vector>,
    /// Ambient coordinates used as the section, ascending.
    pub section_columns: Vec<usize>,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.section.len()
    }

    /// Representative of a quotient vector.
    pub fn lift(&self, coords: &[Scalar]) -> Result<Vector> {
        check_len(self.dim(), coords.len())?;
        let n = self.proj.domain_dim();
        let mut out = zero_vector(n);
        for (c, &col) in coords.iter().zip(&self.section_columns) {
            out[col] = c.clone();
        }
        Ok(out)
    }
}

/// Projection onto `F^n / R` and a section of standard basis vectors.
///
/// The section consists of the earliest standard basis vectors that stay
/// independent modulo `R`; they are found by eliminating from the last
/// column backwards, so every relation row is solved for its last nonzero
/// coordinate.
pub fn quotient_with_section(ambient_dim: usize, r: &Subspace) -> Result<Quotient> {
    check_len(ambient_dim, r.ambient_dim())?;
    let n = ambient_dim;
    let mut reversed = EchelonBasis::new(n);
    for row in r.basis() {
        reversed.insert(row.iter().rev().cloned().collect());
    }
    let mut dependent: Vec<Option<Vector>> = vec![None; n];
    for (row, &p) in reversed.rows().iter().zip(reversed.pivots()) {
        let original: Vector = row.iter().rev().cloned().collect();
        dependent[n - 1 - p] = Some(original);
    }
    let section_columns: Vec<usize> = (0..n).filter(|&c| dependent[c].is_none()).collect();
    let k = section_columns.len();
    let mut slot = vec![usize::MAX; n];
    for (t, &c) in section_columns.iter().enumerate() {
        slot[c] = t;
    }
    let mut proj = Matrix::zeros(k, n);
    for c in 0..n {
        match &dependent[c] {
            None => proj.set(slot[c], c, crate::scalar::int(1)),
            Some(row) => {
                // e_c is congruent to e_c - row, which lives on section columns.
                for (&f, t) in section_columns.iter().zip(0..) {
                    if !row[f].is_zero() {
                        proj.set(t, c, -row[f].clone());
                    }
                }
            }
        }
    }
    let section = section_columns.iter().map(|&c| unit_vector(n, c)).collect();
    debug_assert!(r.basis().iter().all(|v| is_zero(&proj.mul_vec(v).unwrap())));
    Ok(Quotient {
        proj: LinearMap::new(proj),
        section,
        section_columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(n, vs.iter().map(|x| v(x))).unwrap()
    }

    #[test]
    fn sums() {
        let full = Subspace::full(2);
        assert_eq!(span_sum(&span(2, &[&[1, 0]]), &span(2, &[&[0, 1]])).unwrap(), full);
        let x = span(3, &[&[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(span_sum(&x, &x).unwrap(), x);
        assert_eq!(span_sum(&span(2, &[&[1, 1]]), &span(2, &[&[1, -1]])).unwrap(), full);
        assert!(span_sum(&x, &full).is_err());
    }

    #[test]
    fn intersections() {
        let x = span(3, &[&[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(span_intersect(&x, &Subspace::zero(3)).unwrap(), Subspace::zero(3));
        assert_eq!(span_intersect(&x, &x).unwrap(), x);
        let diag = span(2, &[&[1, 1]]);
        assert_eq!(span_intersect(&Subspace::full(2), &diag).unwrap(), diag);
        let a = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(span_intersect(&a, &b).unwrap(), span(3, &[&[0, 1, 0]]));
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let q = quotient_with_section(2, &Subspace::zero(2)).unwrap();
        assert_eq!(q.proj.matrix(), &Matrix::identity(2));
        assert_eq!(q.section, vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn quotient_by_everything_is_zero() {
        let q = quotient_with_section(2, &Subspace::full(2)).unwrap();
        assert_eq!(q.dim(), 0);
        assert_eq!(q.proj.codomain_dim(), 0);
        assert_eq!(q.proj.domain_dim(), 2);
    }

    #[test]
    fn quotient_by_diagonal() {
        let q = quotient_with_section(2, &span(2, &[&[1, 1]])).unwrap();
        assert_eq!(q.proj.rank(), 1);
        assert_eq!(q.proj.apply(&v(&[1, 1])).unwrap(), v(&[0]));
        assert_eq!(q.proj.apply(&q.section[0]).unwrap(), v(&[1]));
        assert_eq!(q.section_columns, vec![0]);
    }

    #[test]
    fn preimage_of_subspace() {
        let f = LinearMap::new(Matrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]));
        let target = span(2, &[&[1, 0]]);
        assert_eq!(target.preimage(&f).unwrap(), span(3, &[&[1, 0, 0], &[0, 1, 0]]));
    }
}
