use super::SymbolSpace;
use crate::linalg::{add, add_scaled, is_zero, neg, outer, unit_vector, zero_vector, EchelonBasis, Subspace};
use crate::pair::Pair;
use crate::scalar::{int, Scalar, Vector};

/// The generator bracket `β(l⊗n, l'⊗n') = -(^n l) ⊗ (^l' n')` on the
/// symbol space.
///
/// `β(u, v) = -A(u) ⊗ B(v)` where `A(l⊗n) = ^n l ∈ L` and
/// `B(l⊗n) = ^l n ∈ N`; both are stored per symbol.
#[derive(Debug, Clone)]
pub struct SymbolBracket<'a> {
    pair: &'a Pair,
    symbols: SymbolSpace,
    left: Vec<Vector>,
    right: Vec<Vector>,
}

impl<'a> SymbolBracket<'a> {
    pub fn new(pair: &'a Pair) -> Self {
        let symbols = SymbolSpace::new(pair.l().dim(), pair.n().dim());
        let mut left = Vec::with_capacity(symbols.dim());
        let mut right = Vec::with_capacity(symbols.dim());
        for s in 0..symbols.dim() {
            let (i, j) = symbols.split(s);
            left.push(pair.act_nl().on_basis(j, i).to_vec());
            right.push(pair.act_ln().on_basis(i, j).to_vec());
        }
        Self {
            pair,
            symbols,
            left,
            right,
        }
    }

    pub fn symbols(&self) -> SymbolSpace {
        self.symbols
    }

    /// `A(u)`, an element of `L`.
    pub fn left_factor(&self, u: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.symbols.l_dim());
        for (c, a) in u.iter().zip(&self.left) {
            add_scaled(&mut out, c, a);
        }
        out
    }

    /// `B(v)`, an element of `N`.
    pub fn right_factor(&self, v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.symbols.n_dim());
        for (c, b) in v.iter().zip(&self.right) {
            add_scaled(&mut out, c, b);
        }
        out
    }

    pub fn on_symbols(&self, s: usize, t: usize) -> Vector {
        neg(&outer(&self.left[s], &self.right[t]))
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        neg(&outer(&self.left_factor(u), &self.right_factor(v)))
    }

    /// `β(e_s, β(e_t, e_u)) = A_s ⊗ ^(A_t) B_u`
    fn nested(&self, s: usize, t: usize, u: usize) -> Option<Vector> {
        if is_zero(&self.left[s]) || is_zero(&self.left[t]) || is_zero(&self.right[u]) {
            return None;
        }
        let inner = self.pair.act_ln().apply_unchecked(&self.left[t], &self.right[u]);
        if is_zero(&inner) {
            return None;
        }
        Some(outer(&self.left[s], &inner))
    }

    /// Cyclic Jacobi sum of `β` on three symbols.
    pub fn jacobi_defect(&self, s: usize, t: usize, u: usize) -> Vector {
        let mut out = zero_vector(self.symbols.dim());
        for (a, b, c) in [(s, t, u), (t, u, s), (u, s, t)] {
            if let Some(v) = self.nested(a, b, c) {
                add_scaled(&mut out, &int(1), &v);
            }
        }
        out
    }

    pub fn antisymmetry_defect(&self, s: usize, t: usize) -> Vector {
        add(&self.on_symbols(s, t), &self.on_symbols(t, s))
    }
}

/// The bracket of two symbol-space vectors, before reducing by relations.
pub fn beta_bracket(pair: &Pair, u: &[Scalar], v: &[Scalar]) -> Vector {
    SymbolBracket::new(pair).apply(u, v)
}

/// The two action relations over basis elements:
///
/// * `[l,l'] ⊗ n - l ⊗ ^l' n + l' ⊗ ^l n` for `l < l'`,
/// * `l ⊗ [n,n'] - ^n' l ⊗ n + ^n l ⊗ n'` for `n < n'`.
pub fn relation_seed(pair: &Pair) -> Subspace {
    let (p, q) = (pair.l().dim(), pair.n().dim());
    let dim = p * q;
    let mut basis = EchelonBasis::new(dim);
    let minus_one = int(-1);
    for i in 0..p {
        for j in i + 1..p {
            for k in 0..q {
                let mut r = outer(pair.l().bracket_basis(i, j), &unit_vector(q, k));
                add_scaled(&mut r, &minus_one, &outer(&unit_vector(p, i), pair.act_ln().on_basis(j, k)));
                add_scaled(&mut r, &int(1), &outer(&unit_vector(p, j), pair.act_ln().on_basis(i, k)));
                basis.insert(r);
            }
        }
    }
    for i in 0..p {
        for k in 0..q {
            for l in k + 1..q {
                let mut r = outer(&unit_vector(p, i), pair.n().bracket_basis(k, l));
                add_scaled(&mut r, &minus_one, &outer(pair.act_nl().on_basis(l, i), &unit_vector(q, k)));
                add_scaled(&mut r, &int(1), &outer(pair.act_nl().on_basis(k, i), &unit_vector(q, l)));
                basis.insert(r);
            }
        }
    }
    Subspace::from_echelon(basis)
}

/// The smallest `β`-stable subspace containing `seed` and every
/// antisymmetry and Jacobi defect of `β`.
pub fn closure(pair: &Pair, seed: &Subspace) -> Subspace {
    close(&SymbolBracket::new(pair), seed.clone())
}

pub(crate) fn close(beta: &SymbolBracket<'_>, seed: Subspace) -> Subspace {
    let dim = beta.symbols().dim();
    let mut basis = seed.echelon().clone();
    let mut pending: Vec<Vector> = seed.basis().to_vec();
    let add_vector = |basis: &mut EchelonBasis, pending: &mut Vec<Vector>, v: Vector| {
        if !is_zero(&v) && !basis.is_full() && basis.insert(v.clone()) {
            pending.push(v);
        }
    };

    for s in 0..dim {
        for t in s..dim {
            add_vector(&mut basis, &mut pending, beta.antisymmetry_defect(s, t));
        }
    }
    // Modulo a β-stable space containing the antisymmetry defects the Jacobi
    // sum is alternating, so strictly increasing triples suffice.
    for s in 0..dim {
        for t in s + 1..dim {
            for u in t + 1..dim {
                add_vector(&mut basis, &mut pending, beta.jacobi_defect(s, t, u));
            }
        }
    }

    while let Some(r) = pending.pop() {
        if basis.is_full() {
            break;
        }
        let a = beta.left_factor(&r);
        let b = beta.right_factor(&r);
        if !is_zero(&b) {
            for s in 0..dim {
                if !is_zero(&beta.left[s]) {
                    add_vector(&mut basis, &mut pending, neg(&outer(&beta.left[s], &b)));
                }
            }
        }
        if !is_zero(&a) {
            for s in 0..dim {
                if !is_zero(&beta.right[s]) {
                    add_vector(&mut basis, &mut pending, neg(&outer(&a, &beta.right[s])));
                }
            }
        }
    }
    Subspace::from_echelon(basis)
}
