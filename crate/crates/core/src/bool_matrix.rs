//! Square 0-1 matrices under the boolean semiring.
//!
//! Entry `(i, j)` of the matrix attached to an endomorphism `ρ` of `ℂ^n`
//! is 1 exactly when `ρ(E_i) ≥ E_j`. With that convention the matrix of
//! `ρ_k ∘ ⋯ ∘ ρ_1` is the product `M_1 · M_2 ⋯ M_k`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> Self {
        BoolMatrix {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values; any nonzero value counts as 1.
    ///
    /// Panics if the rows do not form a square matrix.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(
                row.len(),
                n,
                "row {i} has length {} in a {n}x{n} matrix",
                row.len()
            );
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v != 0);
            }
        }
        m
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        (0..self.n).all(|j| !self.get(i, j))
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        (0..self.n).all(|i| !self.get(i, j))
    }

    /// Indices `j` with a 1 somewhere in column `j`: the support of `ρ(1)`.
    pub fn column_support(&self) -> Vec<bool> {
        (0..self.n).map(|j| !self.col_is_zero(j)).collect()
    }

    /// Boolean product `self · rhs`.
    pub fn mul(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.n, rhs.n, "size mismatch in boolean product");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self.get(i, k) {
                    for j in 0..n {
                        if rhs.get(k, j) {
                            out.bits[i * n + j] = true;
                        }
                    }
                }
            }
        }
        out
    }

    /// Entrywise OR.
    pub fn or(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.n, rhs.n, "size mismatch in boolean sum");
        BoolMatrix {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&rhs.bits)
                .map(|(a, b)| *a || *b)
                .collect(),
        }
    }

    /// Kronecker product; index `(i1, i2)` maps to `i1 * rhs.n + i2`.
    pub fn kron(&self, rhs: &BoolMatrix) -> BoolMatrix {
        let (n1, n2) = (self.n, rhs.n);
        let mut out = Self::zeros(n1 * n2);
        for i1 in 0..n1 {
            for j1 in 0..n1 {
                if !self.get(i1, j1) {
                    continue;
                }
                for i2 in 0..n2 {
                    for j2 in 0..n2 {
                        if rhs.get(i2, j2) {
                            out.set(i1 * n2 + i2, j1 * n2 + j2, true);
                        }
                    }
                }
            }
        }
        out
    }

    /// True when no column holds two 1s, i.e. the images `ρ(E_i)` are
    /// mutually orthogonal as a *-homomorphism requires.
    pub fn is_column_injective(&self) -> bool {
        (0..self.n).all(|j| (0..self.n).filter(|&i| self.get(i, j)).count() <= 1)
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j) as u8)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_follows_first_acts_first() {
        // b: 1 -> 2, c: 2 -> 1
        let b = BoolMatrix::from_rows(&[[0, 1], [0, 0]]);
        let c = BoolMatrix::from_rows(&[[0, 0], [1, 0]]);
        assert_eq!(b.mul(&c), BoolMatrix::from_rows(&[[1, 0], [0, 0]]));
        assert_eq!(c.mul(&b), BoolMatrix::from_rows(&[[0, 0], [0, 1]]));
        assert!(b.mul(&b).is_zero());
    }

    #[test]
    fn kron_with_identity() {
        let b = BoolMatrix::from_rows(&[[0, 1], [0, 0]]);
        let one = BoolMatrix::identity(1);
        assert_eq!(b.kron(&one), b);
        assert_eq!(one.kron(&b), b);
        let k = b.kron(&BoolMatrix::identity(2));
        assert_eq!(k.count_ones(), 2);
        assert!(k.get(0, 2) && k.get(1, 3));
    }

    #[test]
    fn column_injectivity() {
        assert!(BoolMatrix::from_rows(&[[1, 0], [0, 1]]).is_column_injective());
        assert!(!BoolMatrix::from_rows(&[[1, 0], [1, 0]]).is_column_injective());
    }
}
