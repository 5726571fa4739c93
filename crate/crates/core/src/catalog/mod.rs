//! Builtin algebras and pairs, the selector language naming them, and the
//! on-disk document format.

mod document;
mod report;
mod selector;

pub use document::{
    load_document, load_pair, parse, AlgebraDocument, AlgebraSource, BracketEntry, Document, DocumentError,
    IdealSpec, PairDocument,
};
pub use report::serialize_report;
pub use selector::{evaluate, pair_from_selector, parse_expr, parse_selector, Builtin, Expr, SelectorError, PREFIX};

use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{unit_vector, Subspace};
use crate::pair::Pair;
use crate::scalar::{int, Vector};

/// `abelian(n)` with basis `a1, …, an`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

/// The nonabelian two-dimensional algebra `[x, y] = y`.
pub fn nonabelian2() -> LieAlgebra {
    LieAlgebra::from_brackets(vec!["x".into(), "y".into()], [(0, 1, vec![int(0), int(1)])])
        .expect("valid structure")
}

/// `heisenberg(m)` of dimension `2m + 1`, `[x_i, y_i] = z`.
///
/// For `m = 1` the basis is `x, y, z`; otherwise `x1, …, xm, y1, …, ym, z`.
pub fn heisenberg(m: usize) -> LieAlgebra {
    let dim = 2 * m + 1;
    let names: Vec<String> = if m == 1 {
        vec!["x".into(), "y".into(), "z".into()]
    } else {
        (1..=m)
            .map(|i| format!("x{i}"))
            .chain((1..=m).map(|i| format!("y{i}")))
            .chain(std::iter::once("z".to_string()))
            .collect()
    };
    let brackets = (0..m).map(|i| (i, m + i, unit_vector(dim, 2 * m)));
    LieAlgebra::from_brackets(names, brackets).expect("valid structure")
}

pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    a.direct_sum(b)
}

/// `(L, L)`
pub fn pair_full(l: LieAlgebra) -> Pair {
    Pair::full(l)
}

/// `(L, Z(L))`
pub fn pair_center(l: LieAlgebra) -> Result<Pair> {
    let center = l.center().into_space();
    Pair::from_ideal(l, center)
}

/// `(L, [L, L])`
pub fn pair_derived(l: LieAlgebra) -> Result<Pair> {
    let derived = l.derived();
    Pair::from_ideal(l, derived)
}

/// `(L, span of the first k basis vectors)`, provided that span is an ideal.
pub fn pair_leading(l: LieAlgebra, k: usize) -> Result<Pair> {
    let basis: Vec<Vector> = (0..k.min(l.dim())).map(|i| unit_vector(l.dim(), i)).collect();
    let ideal = Subspace::span(l.dim(), basis)?;
    Pair::from_ideal(l, ideal)
}

pub fn pair_direct_sum(p: &Pair, q: &Pair) -> Result<Pair> {
    p.direct_sum(q)
}

/// Description of one builtin constructor, for listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuiltinInfo {
    pub signature: &'static str,
    pub produces: &'static str,
    pub description: &'static str,
}

pub const BUILTINS: &[BuiltinInfo] = &[
    BuiltinInfo {
        signature: "abelian(n)",
        produces: "algebra",
        description: "abelian algebra of dimension n",
    },
    BuiltinInfo {
        signature: "nonabelian2",
        produces: "algebra",
        description: "two-dimensional algebra with [x,y]=y",
    },
    BuiltinInfo {
        signature: "heisenberg(m)",
        produces: "algebra",
        description: "Heisenberg algebra of dimension 2m+1",
    },
    BuiltinInfo {
        signature: "direct_sum(A,B)",
        produces: "algebra",
        description: "direct sum of two algebras",
    },
    BuiltinInfo {
        signature: "pair_full(A)",
        produces: "pair",
        description: "A with itself as ideal",
    },
    BuiltinInfo {
        signature: "pair_center(A)",
        produces: "pair",
        description: "A with its center",
    },
    BuiltinInfo {
        signature: "pair_derived(A)",
        produces: "pair",
        description: "A with its derived algebra",
    },
    BuiltinInfo {
        signature: "pair_leading(A,k)",
        produces: "pair",
        description: "A with the span of its first k basis vectors (must be an ideal)",
    },
    BuiltinInfo {
        signature: "pair_direct_sum(P,Q)",
        produces: "pair",
        description: "componentwise direct sum of two pairs",
    },
];

/// Selectors of the catalog pairs, the standard test bed of the verifier.
pub const CATALOG_PAIRS: &[&str] = &[
    "pair_full(abelian(1))",
    "pair_full(abelian(2))",
    "pair_full(abelian(3))",
    "pair_full(abelian(4))",
    "pair_full(nonabelian2)",
    "pair_derived(nonabelian2)",
    "pair_full(heisenberg(1))",
    "pair_center(heisenberg(1))",
    "pair_leading(abelian(2),1)",
    "pair_center(heisenberg(2))",
    "pair_full(direct_sum(heisenberg(1),nonabelian2))",
    "pair_direct_sum(pair_full(nonabelian2),pair_full(abelian(1)))",
    "pair_direct_sum(pair_center(heisenberg(1)),pair_full(abelian(1)))",
];

/// The catalog pairs with their selectors.
pub fn catalog_pairs() -> Vec<(String, Pair)> {
    CATALOG_PAIRS
        .iter()
        .map(|s| {
            let pair = pair_from_selector(s).expect("catalog selectors are valid");
            (s.to_string(), pair)
        })
        .collect()
}

#[cfg(test)]
mod tests;
