//! Computations used to cross-check the tensor engine that do not go
//! through it.

use tensoralg::linalg::{is_zero, Matrix};
use tensoralg::{LieAlgebra, Scalar};

fn wedge2_index(n: usize, i: usize, j: usize) -> usize {
    // Position of e_i ∧ e_j, i < j, in lexicographic order.
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn add_wedge2(column: &mut [Scalar], n: usize, c: &Scalar, i: usize, j: usize) {
    use std::cmp::Ordering;
    match i.cmp(&j) {
        Ordering::Less => column[wedge2_index(n, i, j)] += c,
        Ordering::Greater => column[wedge2_index(n, j, i)] -= c,
        Ordering::Equal => {}
    }
}

/// `dim H₂(L)` from the Chevalley–Eilenberg complex
/// `Λ³L -> Λ²L -> L`, `x∧y ↦ -[x,y]`,
/// `x∧y∧z ↦ -[x,y]∧z + [x,z]∧y - [y,z]∧x`.
pub fn second_homology_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let dim2 = n * n.saturating_sub(1) / 2;
    let mut d2 = Vec::with_capacity(dim2);
    for i in 0..n {
        for j in i + 1..n {
            d2.push(l.bracket_basis(i, j).iter().map(|c| -c).collect::<Vec<_>>());
        }
    }
    let mut d3 = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut col: Vec<Scalar> = vec![Scalar::from_integer(0.into()); dim2];
                for (a, b, c, sign) in [(i, j, k, -1i64), (i, k, j, 1), (j, k, i, -1)] {
                    for (m, coeff) in l.bracket_basis(a, b).iter().enumerate() {
                        let s = coeff * Scalar::from_integer(sign.into());
                        add_wedge2(&mut col, n, &s, m, c);
                    }
                }
                d3.push(col);
            }
        }
    }
    let rank = |cols: &[Vec<Scalar>], rows: usize| {
        if cols.is_empty() || cols.iter().all(|c| is_zero(c)) {
            0
        } else {
            Matrix::from_columns(rows, cols).expect("column lengths").rank()
        }
    };
    let kernel_d2 = dim2 - rank(&d2, n);
    kernel_d2 - rank(&d3, dim2)
}

/// `dim L/[L,L]`, from the span of the structure constants.
pub fn abelianization_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let mut cols = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            cols.push(l.bracket_basis(i, j).to_vec());
        }
    }
    if cols.is_empty() {
        return n;
    }
    n - Matrix::from_columns(n, &cols).expect("column lengths").rank()
}

#[cfg(test)]
mod cross_checks;

#[cfg(test)]
mod tests {
    use super::*;
    use tensoralg::catalog::{abelian, heisenberg, nonabelian2};

    #[test]
    fn homology_of_small_algebras() {
        assert_eq!(second_homology_dim(&heisenberg(1)), 2);
        assert_eq!(second_homology_dim(&nonabelian2()), 0);
        for n in 0..=4 {
            assert_eq!(second_homology_dim(&abelian(n)), n * n.saturating_sub(1) / 2);
        }
        // H₂ of the (2m+1)-dimensional Heisenberg algebra is 2m² − m − 1 for m ≥ 2.
        assert_eq!(second_homology_dim(&heisenberg(2)), 5);
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelianization_dim(&heisenberg(1)), 2);
        assert_eq!(abelianization_dim(&nonabelian2()), 1);
        assert_eq!(abelianization_dim(&abelian(3)), 3);
    }
}
