//! Pairs `(L, N)` with mutual actions.
//!
//! The usual pair is an ideal `N` of `L` with both actions given by the
//! bracket of `L`. General bilinear actions between two separate algebras
//! are also supported; the tensor product only needs the actions, while the
//! commutator maps need the ideal embedding.

use std::fmt;

use num_traits::Zero;

use crate::error::{check_len, Error, Result};
use crate::lie::{AlgebraHom, LieAlgebra};
use crate::linalg::{add_scaled, is_zero, sub, unit_vector, zero_vector, LinearMap, Subspace};
use crate::scalar::{format_vector, Scalar, Vector};

/// `[b_i, m] ∉ I` for basis element `i` and the `ideal_member`-th RREF basis
/// vector `m` of `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealViolation {
    pub algebra_basis: usize,
    pub ideal_member: usize,
    pub bracket: Vector,
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bracket of basis element {} with ideal basis vector {} is {}, outside the span",
            self.algebra_basis,
            self.ideal_member,
            format_vector(&self.bracket)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionAxiom {
    /// `^[l,l'] n = ^l(^l' n) - ^l'(^l n)`
    BracketOfActors,
    /// `^l [n,n'] = [^l n, n'] + [n, ^l n']`
    Derivation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionViolation {
    pub axiom: ActionAxiom,
    /// Basis indices: `(l, l', n)` for the first axiom, `(l, n, n')` for the second.
    pub indices: (usize, usize, usize),
    pub residual: Vector,
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.indices;
        let what = match self.axiom {
            ActionAxiom::BracketOfActors => "^[l,l']n = ^l(^l'n) - ^l'(^ln)",
            ActionAxiom::Derivation => "^l[n,n'] = [^ln,n'] + [n,^ln']",
        };
        write!(f, "{what} fails on basis triple ({a},{b},{c}), residual {}", format_vector(&self.residual))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatibilityEquation {
    /// `^(^n l) n' = ^n'(^l n)`
    ActedOnSide,
    /// `^(^l n) l' = ^l'(^n l)`
    ActorSide,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityViolation {
    pub equation: CompatibilityEquation,
    /// `(n, l, n')` for the first equation, `(l, n, l')` for the second.
    pub indices: (usize, usize, usize),
    pub residual: Vector,
}

impl fmt::Display for CompatibilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.indices;
        let what = match self.equation {
            CompatibilityEquation::ActedOnSide => "^(^n l)n' = ^n'(^l n)",
            CompatibilityEquation::ActorSide => "^(^l n)l' = ^l'(^n l)",
        };
        write!(f, "{what} fails on basis triple ({a},{b},{c}), residual {}", format_vector(&self.residual))
    }
}

/// A bilinear map `actor × acted -> acted` given on basis elements.
#[derive(Clone, PartialEq, Eq)]
pub struct ActionData {
    actor_dim: usize,
    acted_dim: usize,
    table: Vec<Vector>,
}

impl ActionData {
    pub fn new(actor_dim: usize, acted_dim: usize, table: Vec<Vec<Vector>>) -> Result<Self> {
        check_len(actor_dim, table.len())?;
        let mut flat = Vec::with_capacity(actor_dim * acted_dim);
        for row in table {
            check_len(acted_dim, row.len())?;
            for v in row {
                check_len(acted_dim, v.len())?;
                flat.push(v);
            }
        }
        Ok(Self {
            actor_dim,
            acted_dim,
            table: flat,
        })
    }

    pub fn trivial(actor_dim: usize, acted_dim: usize) -> Self {
        Self {
            actor_dim,
            acted_dim,
            table: vec![zero_vector(acted_dim); actor_dim * acted_dim],
        }
    }

    /// `L` acting on its ideal `N` by `^l n = [l, n]`, in `N`'s RREF coordinates.
    pub fn inner_on_ideal(l: &LieAlgebra, ideal: &Subspace) -> Result<Self> {
        let mut table = Vec::with_capacity(l.dim() * ideal.dim());
        for i in 0..l.dim() {
            let b = unit_vector(l.dim(), i);
            for m in ideal.basis() {
                let prod = l.bracket_unchecked(&b, m);
                let coords = ideal.coordinates(&prod).ok_or_else(|| {
                    Error::Internal("bracket left the ideal while building the action".into())
                })?;
                table.push(coords);
            }
        }
        Ok(Self {
            actor_dim: l.dim(),
            acted_dim: ideal.dim(),
            table,
        })
    }

    /// An ideal `N` acting on `L` by `^n l = [n, l]`.
    pub fn inner_from_ideal(l: &LieAlgebra, ideal: &Subspace) -> Self {
        let mut table = Vec::with_capacity(l.dim() * ideal.dim());
        for m in ideal.basis() {
            for j in 0..l.dim() {
                table.push(l.bracket_unchecked(m, &unit_vector(l.dim(), j)));
            }
        }
        Self {
            actor_dim: ideal.dim(),
            acted_dim: l.dim(),
            table,
        }
    }

    pub fn actor_dim(&self) -> usize {
        self.actor_dim
    }

    pub fn acted_dim(&self) -> usize {
        self.acted_dim
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|v| is_zero(v))
    }

    /// Action of actor basis `i` on acted basis `j`.
    pub fn on_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.acted_dim + j]
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_len(self.actor_dim, x.len())?;
        check_len(self.acted_dim, y.len())?;
        Ok(self.apply_unchecked(x, y))
    }

    pub(crate) fn apply_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.acted_dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    add_scaled(&mut out, &(a * b), self.on_basis(i, j));
                }
            }
        }
        out
    }

    /// The acting map `y -> ^x y` of an actor vector.
    pub fn acting_map(&self, x: &[Scalar]) -> LinearMap {
        let images: Vec<Vector> = (0..self.acted_dim)
            .map(|j| self.apply_unchecked(x, &unit_vector(self.acted_dim, j)))
            .collect();
        LinearMap::from_images(self.acted_dim, &images).expect("image lengths")
    }
}

impl fmt::Debug for ActionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ActionData({} on {})", self.actor_dim, self.acted_dim)
    }
}

/// Checks both action axioms on all basis triples.
pub fn validate_action(act: &ActionData, actor: &LieAlgebra, acted: &LieAlgebra) -> Result<(), ActionViolation> {
    assert_eq!(act.actor_dim(), actor.dim(), "actor dimension");
    assert_eq!(act.acted_dim(), acted.dim(), "acted dimension");
    let (p, q) = (actor.dim(), acted.dim());
    for i in 0..p {
        for j in i + 1..p {
            for k in 0..q {
                let n = unit_vector(q, k);
                let lhs = act.apply_unchecked(actor.bracket_basis(i, j), &n);
                let inner_j = act.on_basis(j, k).to_vec();
                let inner_i = act.on_basis(i, k).to_vec();
                let mut rhs = act.apply_unchecked(&unit_vector(p, i), &inner_j);
                let other = act.apply_unchecked(&unit_vector(p, j), &inner_i);
                add_scaled(&mut rhs, &crate::scalar::int(-1), &other);
                let residual = sub(&lhs, &rhs);
                if !is_zero(&residual) {
                    return Err(ActionViolation {
                        axiom: ActionAxiom::BracketOfActors,
                        indices: (i, j, k),
                        residual,
                    });
                }
            }
        }
    }
    for i in 0..p {
        let l = unit_vector(p, i);
        for j in 0..q {
            for k in j + 1..q {
                let lhs = act.apply_unchecked(&l, acted.bracket_basis(j, k));
                let mut rhs = acted.bracket_unchecked(act.on_basis(i, j), &unit_vector(q, k));
                let other = acted.bracket_unchecked(&unit_vector(q, j), act.on_basis(i, k));
                add_scaled(&mut rhs, &crate::scalar::int(1), &other);
                let residual = sub(&lhs, &rhs);
                if !is_zero(&residual) {
                    return Err(ActionViolation {
                        axiom: ActionAxiom::Derivation,
                        indices: (i, j, k),
                        residual,
                    });
                }
            }
        }
    }
    Ok(())
}

/// A pair of Lie algebras acting on each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    l: LieAlgebra,
    n: LieAlgebra,
    act_ln: ActionData,
    act_nl: ActionData,
    ideal: Option<Subspace>,
}

/// `(L/[N,L], N/[N,L])` with its projections.
#[derive(Debug, Clone)]
pub struct QuotientPair {
    pub pair: Pair,
    pub proj_l: AlgebraHom,
    pub proj_n: AlgebraHom,
    /// `[N, L]` in the coordinates of `L`.
    pub commutator: Subspace,
}

impl Pair {
    /// `(L, N)` for the ideal spanned by `ideal_basis`, with both actions by
    /// the bracket of `L`.
    pub fn make_pair(l: LieAlgebra, ideal_basis: Vec<Vector>) -> Result<Self> {
        let ideal = Subspace::span(l.dim(), ideal_basis)?;
        Self::from_ideal(l, ideal)
    }

    pub fn from_ideal(l: LieAlgebra, ideal: Subspace) -> Result<Self> {
        l.check_ideal(&ideal)?;
        let n = l.subalgebra(&ideal)?;
        let act_ln = ActionData::inner_on_ideal(&l, &ideal)?;
        let act_nl = ActionData::inner_from_ideal(&l, &ideal);
        Ok(Self {
            l,
            n,
            act_ln,
            act_nl,
            ideal: Some(ideal),
        })
    }

    /// `(L, L)`
    pub fn full(l: LieAlgebra) -> Self {
        let ideal = Subspace::full(l.dim());
        Self::from_ideal(l, ideal).expect("an algebra is an ideal of itself")
    }

    /// A pair given by arbitrary actions; both actions and their
    /// compatibility are checked. There is no ideal embedding.
    pub fn with_actions(l: LieAlgebra, n: LieAlgebra, act_ln: ActionData, act_nl: ActionData) -> Result<Self> {
        check_len(l.dim(), act_ln.actor_dim())?;
        check_len(n.dim(), act_ln.acted_dim())?;
        check_len(n.dim(), act_nl.actor_dim())?;
        check_len(l.dim(), act_nl.acted_dim())?;
        validate_action(&act_ln, &l, &n).map_err(Error::InvalidAction)?;
        validate_action(&act_nl, &n, &l).map_err(Error::InvalidAction)?;
        let pair = Self::with_actions_unchecked(l, n, act_ln, act_nl);
        pair.validate_compatible().map_err(Error::IncompatibleActions)?;
        Ok(pair)
    }

    /// Builds the pair without running any checks.
    pub fn with_actions_unchecked(l: LieAlgebra, n: LieAlgebra, act_ln: ActionData, act_nl: ActionData) -> Self {
        Self {
            l,
            n,
            act_ln,
            act_nl,
            ideal: None,
        }
    }

    pub fn l(&self) -> &LieAlgebra {
        &self.l
    }

    pub fn n(&self) -> &LieAlgebra {
        &self.n
    }

    /// Action of `L` on `N`.
    pub fn act_ln(&self) -> &ActionData {
        &self.act_ln
    }

    /// Action of `N` on `L`.
    pub fn act_nl(&self) -> &ActionData {
        &self.act_nl
    }

    pub fn ideal(&self) -> Option<&Subspace> {
        self.ideal.as_ref()
    }

    pub fn require_ideal(&self) -> Result<&Subspace> {
        self.ideal.as_ref().ok_or(Error::NotEmbedded)
    }

    pub fn is_full(&self) -> bool {
        self.ideal.as_ref().is_some_and(Subspace::is_full)
    }

    /// The `j`-th basis vector of `N` in the coordinates of `L`.
    pub fn embed_basis(&self, j: usize) -> Result<&[Scalar]> {
        Ok(&self.require_ideal()?.basis()[j])
    }

    /// An `N`-coordinate vector in the coordinates of `L`.
    pub fn embed(&self, n_coords: &[Scalar]) -> Result<Vector> {
        self.require_ideal()?.combine(n_coords)
    }

    /// `N`-coordinates of an `L`-vector lying in `N`.
    pub fn ideal_coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        Ok(self.require_ideal()?.coordinates(v))
    }

    pub fn validate_compatible(&self) -> Result<(), CompatibilityViolation> {
        let (p, q) = (self.l.dim(), self.n.dim());
        for a in 0..q {
            for b in 0..p {
                let nl = self.act_nl.on_basis(a, b).to_vec();
                let ln = self.act_ln.on_basis(b, a).to_vec();
                for c in 0..q {
                    let lhs = self.act_ln.apply_unchecked(&nl, &unit_vector(q, c));
                    let rhs = self.n.bracket_unchecked(&unit_vector(q, c), &ln);
                    let residual = sub(&lhs, &rhs);
                    if !is_zero(&residual) {
                        return Err(CompatibilityViolation {
                            equation: CompatibilityEquation::ActedOnSide,
                            indices: (a, b, c),
                            residual,
                        });
                    }
                }
            }
        }
        for a in 0..p {
            for b in 0..q {
                let ln = self.act_ln.on_basis(a, b).to_vec();
                let nl = self.act_nl.on_basis(b, a).to_vec();
                for c in 0..p {
                    let lhs = self.act_nl.apply_unchecked(&ln, &unit_vector(p, c));
                    let rhs = self.l.bracket_unchecked(&unit_vector(p, c), &nl);
                    let residual = sub(&lhs, &rhs);
                    if !is_zero(&residual) {
                        return Err(CompatibilityViolation {
                            equation: CompatibilityEquation::ActorSide,
                            indices: (a, b, c),
                            residual,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[N, L]` in the coordinates of `L`.
    pub fn commutator(&self) -> Result<Subspace> {
        let ideal = self.require_ideal()?;
        self.l.bracket_spaces(ideal, &Subspace::full(self.l.dim()))
    }

    /// `[N, L]` in the coordinates of `N`.
    pub fn commutator_in_ideal(&self) -> Result<Subspace> {
        let ideal = self.require_ideal()?;
        let coords = self
            .commutator()?
            .basis()
            .iter()
            .map(|v| ideal.coordinates(v).expect("[N,L] lies in N"))
            .collect::<Vec<_>>();
        Subspace::span(ideal.dim(), coords)
    }

    /// `dim N/[N,L]`
    pub fn relative_abelianization_dim(&self) -> Result<usize> {
        Ok(self.n.dim() - self.commutator()?.dim())
    }

    /// Whether `N ∩ [L,L] = [N,L]`.
    pub fn intersection_is_commutator(&self) -> Result<bool> {
        let ideal = self.require_ideal()?;
        let meet = crate::linalg::span_intersect(ideal, &self.l.derived())?;
        Ok(meet == self.commutator()?)
    }

    /// `(L/[N,L], N/[N,L])` with inner actions and the two projections.
    pub fn quotient_pair(&self) -> Result<QuotientPair> {
        let ideal = self.require_ideal()?;
        let commutator = self.commutator()?;
        let (l_bar, proj_l) = self.l.quotient(&commutator)?;
        let n_bar = ideal.map(proj_l.map())?;
        let pair = Pair::from_ideal(l_bar, n_bar)?;
        let n_bar = pair.require_ideal()?.clone();
        let images = (0..ideal.dim())
            .map(|j| {
                let v = proj_l.map().apply(&ideal.basis()[j])?;
                n_bar
                    .coordinates(&v)
                    .ok_or_else(|| Error::Internal("projection of N left N/[N,L]".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let proj_n = AlgebraHom::new(&self.n, pair.n(), LinearMap::from_images(n_bar.dim(), &images)?)?;
        Ok(QuotientPair {
            pair,
            proj_l,
            proj_n,
            commutator,
        })
    }

    /// `(L1 ⊕ L2, N1 ⊕ N2)`
    pub fn direct_sum(&self, other: &Pair) -> Result<Pair> {
        let (a, b) = (self.require_ideal()?, other.require_ideal()?);
        let l = self.l.direct_sum(&other.l);
        let (p1, p2) = (self.l.dim(), other.l.dim());
        let mut basis = Vec::with_capacity(a.dim() + b.dim());
        for v in a.basis() {
            let mut w = v.clone();
            w.extend(zero_vector(p2));
            basis.push(w);
        }
        for v in b.basis() {
            let mut w = zero_vector(p1);
            w.extend(v.iter().cloned());
            basis.push(w);
        }
        Pair::make_pair(l, basis)
    }

    /// The same pair with `L`'s basis permuted as in [`LieAlgebra::permuted`].
    pub fn permuted(&self, perm: &[usize]) -> Result<Pair> {
        let ideal = self.require_ideal()?;
        let l = self.l.permuted(perm)?;
        let basis = ideal
            .basis()
            .iter()
            .map(|v| perm.iter().map(|&s| v[s].clone()).collect())
            .collect();
        Pair::make_pair(l, basis)
    }
}

#[cfg(test)]
mod tests;
