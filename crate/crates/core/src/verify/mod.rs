//! Checks of the structural identities relating `⊗`, `□`, `∧`, `J₂` and
//! `M` on concrete pairs.
//!
//! Every check produces a [`CheckRecord`]. Asserted checks are expected to
//! hold on every valid pair and a violation is a `fail`. Reporter checks
//! depend on hypotheses that the pair may not satisfy; a violation is
//! recorded as `reported` and never counts as a failure.

mod checks;
mod kunneth;
mod report;

pub use checks::{
    verify_abelian_basis, verify_diagonal_descent, verify_diagram, verify_j2_decomposition, verify_ker_pi,
    verify_psi, verify_splitting,
};
pub use kunneth::verify_kunneth;
pub use report::{CheckRecord, Status, Summary, VerificationReport};

use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::gamma::{psi_map, Psi};
use crate::linalg::{LinearMap, Subspace};
use crate::pair::{Pair, QuotientPair};
use crate::tensor::{DerivedMaps, NonabelianTensor};

/// A group of related checks, selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    Diagram,
    KerPi,
    DiagonalDescent,
    Splitting,
    J2,
    Psi,
    AbelianBasis,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::Diagram,
        Theorem::KerPi,
        Theorem::DiagonalDescent,
        Theorem::Splitting,
        Theorem::J2,
        Theorem::Psi,
        Theorem::AbelianBasis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Diagram => "diagram",
            Theorem::KerPi => "ker-pi",
            Theorem::DiagonalDescent => "diagonal-descent",
            Theorem::Splitting => "splitting",
            Theorem::J2 => "j2",
            Theorem::Psi => "psi",
            Theorem::AbelianBasis => "abelian-basis",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem group `{0}`")]
pub struct UnknownTheorem(pub String);

impl FromStr for Theorem {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// Everything the single-pair checks read, computed once.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub id: String,
    pub pair: Pair,
    pub tensor: NonabelianTensor,
    pub maps: DerivedMaps,
    /// `[N, L]` in `L`-coordinates.
    pub commutator: Subspace,
    /// `dim N/[N,L]`
    pub relative_dim: usize,
    /// `N = L`
    pub full: bool,
    /// `N ∩ [L,L] = [N,L]`
    pub clean: bool,
    pub quotient: QuotientPair,
    pub quotient_tensor: NonabelianTensor,
    /// `π: L ⊗ N -> L/[N,L] ⊗ N/[N,L]`
    pub pi: LinearMap,
    pub psi: Psi,
}

impl Analysis {
    pub fn new(id: impl Into<String>, pair: &Pair) -> Result<Self> {
        let tensor = NonabelianTensor::construct(pair)?;
        let maps = tensor.derived_maps()?;
        let quotient = pair.quotient_pair()?;
        let quotient_tensor = NonabelianTensor::construct(&quotient.pair)?;
        let pi = checks::induced_projection(&tensor, &quotient, &quotient_tensor)?;
        let psi = psi_map(pair, &tensor)?;
        Ok(Self {
            id: id.into(),
            commutator: pair.commutator()?,
            relative_dim: pair.relative_abelianization_dim()?,
            full: pair.is_full(),
            clean: pair.intersection_is_commutator()?,
            pair: pair.clone(),
            tensor,
            maps,
            quotient,
            quotient_tensor,
            pi,
            psi,
        })
    }

    fn record(&self, check: &str, claim: &str) -> CheckRecord {
        CheckRecord::new(&self.id, check, claim)
            .flag("full", self.full)
            .flag("clean", self.clean)
    }
}

/// Runs the selected theorem groups on one pair.
pub fn verify_pair(id: &str, pair: &Pair, theorems: &[Theorem]) -> Result<VerificationReport> {
    let a = Analysis::new(id, pair)?;
    Ok(verify_analysis(&a, theorems))
}

pub fn verify_analysis(a: &Analysis, theorems: &[Theorem]) -> VerificationReport {
    let mut report = VerificationReport::default();
    for t in Theorem::ALL {
        if !theorems.contains(&t) {
            continue;
        }
        match t {
            Theorem::Diagram => report.extend(verify_diagram(a)),
            Theorem::KerPi => report.push(verify_ker_pi(a)),
            Theorem::DiagonalDescent => report.push(verify_diagonal_descent(a)),
            Theorem::Splitting => report.push(verify_splitting(a)),
            Theorem::J2 => report.push(verify_j2_decomposition(a)),
            Theorem::Psi => report.extend(verify_psi(a)),
            Theorem::AbelianBasis => report.extend(verify_abelian_basis(a)),
        }
    }
    report.sort();
    report
}
