use crate::error::{check_len, Error, Result};
use crate::linalg::{span_intersect, span_sum, Subspace};

use super::LieAlgebra;

/// A subspace of a specific Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSubspace<'a> {
    parent: &'a LieAlgebra,
    space: Subspace,
}

impl<'a> AlgebraSubspace<'a> {
    pub fn new(parent: &'a LieAlgebra, space: Subspace) -> Result<Self> {
        check_len(parent.dim(), space.ambient_dim())?;
        Ok(Self { parent, space })
    }

    pub fn parent(&self) -> &'a LieAlgebra {
        self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn same_parent(&self, other: &AlgebraSubspace<'_>) -> Result<()> {
        if std::ptr::eq(self.parent, other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// `[self, other]`
    pub fn bracket(&self, other: &AlgebraSubspace<'_>) -> Result<AlgebraSubspace<'a>> {
        self.same_parent(other)?;
        let space = self.parent.bracket_spaces(&self.space, &other.space)?;
        Ok(Self { parent: self.parent, space })
    }

    pub fn sum(&self, other: &AlgebraSubspace<'_>) -> Result<AlgebraSubspace<'a>> {
        self.same_parent(other)?;
        Ok(Self {
            parent: self.parent,
            space: span_sum(&self.space, &other.space)?,
        })
    }

    pub fn intersect(&self, other: &AlgebraSubspace<'_>) -> Result<AlgebraSubspace<'a>> {
        self.same_parent(other)?;
        Ok(Self {
            parent: self.parent,
            space: span_intersect(&self.space, &other.space)?,
        })
    }

    pub fn is_ideal(&self) -> bool {
        self.parent.check_ideal(&self.space).is_ok()
    }
}
