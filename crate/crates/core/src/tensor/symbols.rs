use crate::pair::Pair;

/// Coordinates of `L ⊗_F N`: symbol `b_i ⊗ n_j` has index `i * dim N + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolSpace {
    p: usize,
    q: usize,
}

impl SymbolSpace {
    pub fn new(l_dim: usize, n_dim: usize) -> Self {
        Self { p: l_dim, q: n_dim }
    }

    pub fn l_dim(&self) -> usize {
        self.p
    }

    pub fn n_dim(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.p * self.q
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.p && j < self.q);
        i * self.q + j
    }

    pub fn split(&self, s: usize) -> (usize, usize) {
        (s / self.q, s % self.q)
    }

    pub fn name(&self, pair: &Pair, s: usize) -> String {
        let (i, j) = self.split(s);
        let wrap = |n: &str| {
            if n.contains(' ') {
                format!("({n})")
            } else {
                n.to_string()
            }
        };
        format!("{}⊗{}", wrap(&pair.l().names()[i]), wrap(&pair.n().names()[j]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_is_a_bijection() {
        let s = SymbolSpace::new(3, 4);
        let mut seen = vec![false; s.dim()];
        for i in 0..3 {
            for j in 0..4 {
                let k = s.index(i, j);
                assert!(!seen[k]);
                seen[k] = true;
                assert_eq!(s.split(k), (i, j));
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }
}
