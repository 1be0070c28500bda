//! Finite families of endomorphisms of `ℂ^n`, one 0-1 matrix per symbol.
//!
//! A symbol `α` acts by `ρ_α(E_i) = Σ_j bits[α](i, j) E_j` on the minimal
//! projections `E_1, …, E_n`. Words act left to right: the first letter is
//! applied first, so the composite of `α_1 ⋯ α_k` is the boolean product
//! `bits[α_1] ⋯ bits[α_k]`, and the word is admissible iff that product is
//! nonzero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::abelian::IntMatrix;
use crate::bool_matrix::BoolMatrix;
use crate::symbolic_matrix::{
    validate, Alphabet, BitTensor, Specification, Symbol, SymbolicError, SymbolicMatrix,
    ValidityReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CsdsError {
    #[error("symbolic matrix is not essential and left-resolving: {0:?}")]
    InvalidMatrix(ValidityReport),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(Symbol),
    #[error("matrix of `{0}` maps two minimal projections onto overlapping images")]
    NotHomomorphism(Symbol),
    #[error("matrix of `{symbol}` has size {found}, expected {expected}")]
    WrongSize {
        symbol: Symbol,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

/// A word over a system's alphabet; the empty word is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    pub symbols: Vec<Symbol>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Panics on invalid symbol ids.
    pub fn from_ids(ids: &[&str]) -> Self {
        Word {
            symbols: ids
                .iter()
                .map(|s| Symbol::new(s).expect("valid symbol id"))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<&str> = self.symbols.iter().map(Symbol::as_str).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsdsSystem {
    tensor: BitTensor,
    essential: bool,
    faithful: bool,
}

impl CsdsSystem {
    /// Wraps a bit tensor, computing the essential and faithful flags.
    ///
    /// Each matrix must have at most one 1 per column, since the images of
    /// orthogonal projections under a *-homomorphism are orthogonal.
    pub fn from_bit_tensor(tensor: BitTensor) -> Result<Self, CsdsError> {
        for (s, m) in tensor.alphabet.iter().zip(&tensor.bits) {
            if m.size() != tensor.n {
                return Err(CsdsError::WrongSize {
                    symbol: s.clone(),
                    expected: tensor.n,
                    found: m.size(),
                });
            }
            if !m.is_column_injective() {
                return Err(CsdsError::NotHomomorphism(s.clone()));
            }
        }
        let n = tensor.n;
        let union = tensor
            .bits
            .iter()
            .fold(BoolMatrix::zeros(n), |acc, m| acc.or(m));
        let essential =
            tensor.bits.iter().all(|m| !m.is_zero()) && (0..n).all(|j| !union.col_is_zero(j));
        let faithful = (0..n).all(|i| !union.row_is_zero(i));
        Ok(CsdsSystem {
            tensor,
            essential,
            faithful,
        })
    }

    /// Builds a system from `(symbol, matrix)` pairs.
    pub fn from_matrices(
        n: usize,
        entries: impl IntoIterator<Item = (Symbol, BoolMatrix)>,
    ) -> Result<Self, CsdsError> {
        let (symbols, bits): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let alphabet = Alphabet::new(symbols)?;
        Self::from_bit_tensor(BitTensor { n, alphabet, bits })
    }

    /// `ρ^M_α(E_i) = Σ_j [α ∈ M(i,j)] E_j` for an essential, left-resolving `M`.
    pub fn from_symbolic_matrix(m: &SymbolicMatrix) -> Result<Self, CsdsError> {
        let report = validate(m);
        if !report.is_valid() {
            return Err(CsdsError::InvalidMatrix(report));
        }
        Self::from_bit_tensor(m.bit_tensor())
    }

    pub fn dim(&self) -> usize {
        self.tensor.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.tensor.alphabet
    }

    pub fn bit_tensor(&self) -> &BitTensor {
        &self.tensor
    }

    pub fn matrix(&self, s: &Symbol) -> Option<&BoolMatrix> {
        self.tensor.get(s)
    }

    pub(crate) fn matrix_at(&self, k: usize) -> &BoolMatrix {
        &self.tensor.bits[k]
    }

    pub fn is_essential(&self) -> bool {
        self.essential
    }

    pub fn is_faithful(&self) -> bool {
        self.faithful
    }

    pub fn is_valid(&self) -> bool {
        self.essential && self.faithful
    }

    /// Matrix of the composite endomorphism of `w`; identity for the empty word.
    pub fn compose(&self, w: &Word) -> Result<BoolMatrix, CsdsError> {
        let mut acc = BoolMatrix::identity(self.dim());
        for s in &w.symbols {
            let m = self
                .matrix(s)
                .ok_or_else(|| CsdsError::UnknownSymbol(s.clone()))?;
            acc = acc.mul(m);
        }
        Ok(acc)
    }

    pub fn is_admissible(&self, w: &Word) -> Result<bool, CsdsError> {
        Ok(!self.compose(w)?.is_zero())
    }

    /// All admissible words of length `k`, in lexicographic order of the
    /// alphabet.
    pub fn language(&self, k: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(k);
        self.extend_words(&BoolMatrix::identity(self.dim()), k, &mut prefix, &mut out);
        out
    }

    fn extend_words(
        &self,
        acc: &BoolMatrix,
        remaining: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            out.push(Word {
                symbols: prefix
                    .iter()
                    .map(|&k| self.alphabet().get(k).clone())
                    .collect(),
            });
            return;
        }
        for k in 0..self.alphabet().len() {
            let next = acc.mul(self.matrix_at(k));
            if next.is_zero() {
                continue;
            }
            prefix.push(k);
            self.extend_words(&next, remaining - 1, prefix, out);
            prefix.pop();
        }
    }

    /// `|B_k|` without materializing the words.
    ///
    /// A word is admissible iff starting from the full vertex set and taking
    /// images letter by letter never empties the set, so the count is a
    /// walk over distinct reachable subsets.
    pub fn language_count(&self, k: usize) -> BigUint {
        let n = self.dim();
        let mut states: BTreeMap<Vec<bool>, BigUint> = BTreeMap::new();
        states.insert(vec![true; n], BigUint::one());
        for _ in 0..k {
            let mut next: BTreeMap<Vec<bool>, BigUint> = BTreeMap::new();
            for (set, count) in &states {
                for m in &self.tensor.bits {
                    let image: Vec<bool> = (0..n)
                        .map(|j| (0..n).any(|i| set[i] && m.get(i, j)))
                        .collect();
                    if image.iter().any(|&b| b) {
                        *next.entry(image).or_insert_with(BigUint::zero) += count;
                    }
                }
            }
            states = next;
        }
        states.values().sum()
    }

    /// `L(i, j) = #{α : ρ_α(E_i) ≥ E_j}`.
    pub fn lambda_matrix(&self) -> IntMatrix {
        self.tensor.count_matrix()
    }

    /// Support of `ρ_α(1)` for each symbol, aligned with the alphabet.
    pub fn unit_image_supports(&self) -> Vec<Vec<bool>> {
        self.tensor
            .bits
            .iter()
            .map(BoolMatrix::column_support)
            .collect()
    }

    /// Boolean sum of all symbol matrices.
    pub fn support(&self) -> BoolMatrix {
        self.tensor
            .bits
            .iter()
            .fold(BoolMatrix::zeros(self.dim()), |acc, m| acc.or(m))
    }
}

/// Tensor product pair over `ℂ^{n₁} ⊗ ℂ^{n₂}`: `ρ_α ⊗ id` and `id ⊗ η_a`,
/// together with the flip specification `(α,b) ↦ (b,α)` on every pair with
/// a nonzero composite.
pub fn tensor_pair(rho: &CsdsSystem, eta: &CsdsSystem) -> (CsdsSystem, CsdsSystem, Specification) {
    let (n1, n2) = (rho.dim(), eta.dim());
    let id1 = BoolMatrix::identity(n1);
    let id2 = BoolMatrix::identity(n2);
    let left = CsdsSystem::from_bit_tensor(BitTensor {
        n: n1 * n2,
        alphabet: rho.alphabet().clone(),
        bits: rho.tensor.bits.iter().map(|m| m.kron(&id2)).collect(),
    })
    .expect("tensoring with the identity keeps columns injective");
    let right = CsdsSystem::from_bit_tensor(BitTensor {
        n: n1 * n2,
        alphabet: eta.alphabet().clone(),
        bits: eta.tensor.bits.iter().map(|m| id1.kron(m)).collect(),
    })
    .expect("tensoring with the identity keeps columns injective");

    let mut pairs = Vec::new();
    for (ka, alpha) in left.alphabet().iter().enumerate() {
        for (kb, b) in right.alphabet().iter().enumerate() {
            if !left.matrix_at(ka).mul(right.matrix_at(kb)).is_zero() {
                pairs.push((Symbol::pair(alpha, b), Symbol::pair(b, alpha)));
            }
        }
    }
    let flip = Specification::new(pairs).expect("the flip is injective");
    (left, right, flip)
}
