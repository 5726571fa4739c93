use num_traits::{One, Zero};

use super::{add_scaled, is_zero};
use crate::scalar::{Scalar, Vector};

/// An incrementally grown basis kept in reduced row-echelon form.
///
/// Rows are sorted by pivot column, every pivot is 1 and every pivot column
/// is zero in all other rows, so the stored rows are the unique RREF basis
/// of their span at every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Reduces `v` modulo the span in place. The result is zero iff `v` was
    /// in the span.
    pub fn reduce(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                add_scaled(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if is_zero(v) {
            return true;
        }
        if self.is_full() {
            return true;
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        if self.is_full() || is_zero(&v) {
            return false;
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if !v[p].is_one() {
            let inv = v[p].recip();
            for x in v.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                add_scaled(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    pub fn extend<I: IntoIterator<Item = Vector>>(&mut self, vectors: I) {
        for v in vectors {
            self.insert(v);
        }
    }

    /// Coordinates of a member of the span with respect to the stored rows.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            add_scaled(&mut w, &-c, row);
        }
        is_zero(&w).then_some(coords)
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows
    }
}
