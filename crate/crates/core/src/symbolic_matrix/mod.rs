//! Symbolic matrices: square matrices whose entries are formal sums of
//! symbols, together with their products and specified equivalences.

mod format;
mod specification;
mod symbol;

use std::fmt;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::abelian::IntMatrix;
use crate::bool_matrix::BoolMatrix;

pub use format::{format_int_matrix, parse_int_matrix, ParseError};
pub use specification::{check_specification, find_specifications, Specification};
pub use symbol::{Alphabet, Symbol};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("invalid symbol `{0}`")]
    InvalidSymbol(String),
    #[error("symbol `{0}` listed twice in an alphabet")]
    DuplicateSymbol(Symbol),
    #[error("symbol `{symbol}` at ({row},{col}) is not in the alphabet")]
    ForeignSymbol {
        symbol: Symbol,
        row: usize,
        col: usize,
    },
    #[error("symbol `{0}` does not occur in any entry")]
    OrphanSymbol(Symbol),
    #[error("matrix size must be positive")]
    EmptyMatrix,
    #[error("expected {expected} cells, found {found}")]
    CellCount { expected: usize, found: usize },
    #[error("integer matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("integer matrix has a negative or oversized entry at ({row},{col})")]
    BadEntry { row: usize, col: usize },
    #[error("{} {} is zero", if *.is_row { "row" } else { "column" }, .index + 1)]
    ZeroRowOrColumn { is_row: bool, index: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("symbol `{0}` has no image under the specification")]
    DomainGap(Symbol),
    #[error("specification maps two pairs onto `{0}`")]
    NotBijective(Symbol),
    #[error("specification lists `{0}` twice")]
    DuplicateSource(Symbol),
    #[error("symbol `{0}` occurs more than once in the matrix")]
    NotEdgeDistinct(Symbol),
}

/// An `n×n` matrix whose `(i, j)` entry is a finite multiset of symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    n: usize,
    alphabet: Alphabet,
    // row-major cells; each a sorted list of alphabet indices (with repetition)
    cells: Vec<Vec<usize>>,
}

impl SymbolicMatrix {
    /// `cells` is row-major with `n*n` entries.
    pub fn new(
        n: usize,
        alphabet: Alphabet,
        cells: Vec<Vec<Symbol>>,
    ) -> Result<Self, SymbolicError> {
        if n == 0 {
            return Err(SymbolicError::EmptyMatrix);
        }
        if cells.len() != n * n {
            return Err(SymbolicError::CellCount {
                expected: n * n,
                found: cells.len(),
            });
        }
        let mut seen = vec![false; alphabet.len()];
        let mut out = Vec::with_capacity(n * n);
        for (c, cell) in cells.into_iter().enumerate() {
            let mut idx = Vec::with_capacity(cell.len());
            for s in cell {
                let k = alphabet.index_of(&s).ok_or(SymbolicError::ForeignSymbol {
                    symbol: s,
                    row: c / n,
                    col: c % n,
                })?;
                seen[k] = true;
                idx.push(k);
            }
            idx.sort_unstable();
            out.push(idx);
        }
        if let Some(k) = seen.iter().position(|&s| !s) {
            return Err(SymbolicError::OrphanSymbol(alphabet.get(k).clone()));
        }
        Ok(SymbolicMatrix {
            n,
            alphabet,
            cells: out,
        })
    }

    /// Builds from a nested literal such as `[["a"], ["a", "c"]]` per cell;
    /// the alphabet is the order of first appearance. Panics on bad input.
    pub fn from_literal(rows: &[&[&[&str]]]) -> Self {
        let n = rows.len();
        let mut ids: Vec<&str> = Vec::new();
        for row in rows {
            for cell in row.iter() {
                for id in cell.iter() {
                    if !ids.contains(id) {
                        ids.push(id);
                    }
                }
            }
        }
        let alphabet = Alphabet::from_ids(&ids);
        let cells = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), n, "literal is not square");
                row.iter()
            })
            .map(|cell| cell.iter().map(|id| Symbol::new(id).unwrap()).collect())
            .collect();
        SymbolicMatrix::new(n, alphabet, cells).expect("well-formed literal")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// The entry at `(i, j)` (0-based), sorted in alphabet order.
    pub fn entry(&self, i: usize, j: usize) -> impl Iterator<Item = &Symbol> + '_ {
        self.cells[i * self.n + j]
            .iter()
            .map(|&k| self.alphabet.get(k))
    }

    pub(crate) fn entry_indices(&self, i: usize, j: usize) -> &[usize] {
        &self.cells[i * self.n + j]
    }

    pub fn entry_len(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.n + j].len()
    }

    /// Every symbol occurs exactly once in the whole matrix.
    pub fn is_edge_distinct(&self) -> bool {
        self.first_repeated_symbol().is_none()
    }

    pub(crate) fn first_repeated_symbol(&self) -> Option<&Symbol> {
        let mut count = vec![0usize; self.alphabet.len()];
        for cell in &self.cells {
            for &k in cell {
                count[k] += 1;
            }
        }
        count
            .iter()
            .position(|&c| c > 1)
            .map(|k| self.alphabet.get(k))
    }

    /// `bits[α](i, j) = 1` iff `α` occurs in entry `(i, j)`.
    pub fn bit_tensor(&self) -> BitTensor {
        let mut bits = vec![BoolMatrix::zeros(self.n); self.alphabet.len()];
        for i in 0..self.n {
            for j in 0..self.n {
                for &k in self.entry_indices(i, j) {
                    bits[k].set(i, j, true);
                }
            }
        }
        BitTensor {
            n: self.n,
            alphabet: self.alphabet.clone(),
            bits,
        }
    }

    /// Total number of symbol occurrences in each cell.
    pub fn count_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| self.entry_len(i, j).into())
    }
}

impl fmt::Debug for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// One 0-1 matrix per symbol of an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitTensor {
    pub n: usize,
    pub alphabet: Alphabet,
    /// Aligned with `alphabet`.
    pub bits: Vec<BoolMatrix>,
}

impl BitTensor {
    pub fn get(&self, s: &Symbol) -> Option<&BoolMatrix> {
        self.alphabet.index_of(s).map(|k| &self.bits[k])
    }

    /// `Σ_α bits[α]` as an integer matrix.
    pub fn count_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            self.bits.iter().filter(|b| b.get(i, j)).count().into()
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    ZeroRow,
    ZeroColumn,
    /// A symbol occurring twice within one column.
    LeftResolving,
}

/// One failed condition. Indices are 0-based; `Display` prints them 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub row: Option<usize>,
    pub col: Option<usize>,
    pub symbol: Option<Symbol>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::ZeroRow => write!(f, "zero-row row={}", self.row.map_or(0, |i| i + 1)),
            ViolationKind::ZeroColumn => {
                write!(f, "zero-column column={}", self.col.map_or(0, |j| j + 1))
            }
            ViolationKind::LeftResolving => write!(
                f,
                "left-resolving row={} column={} symbol={}",
                self.row.map_or(0, |i| i + 1),
                self.col.map_or(0, |j| j + 1),
                self.symbol.as_ref().map_or("-", Symbol::as_str)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub essential: bool,
    pub left_resolving: bool,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.essential && self.left_resolving
    }
}

/// Checks essentiality (no zero row or column) and left-resolvingness (in
/// each column a symbol occurs at most once, counting multiplicity).
pub fn validate(m: &SymbolicMatrix) -> ValidityReport {
    let n = m.n;
    let mut violations = Vec::new();
    for i in 0..n {
        if (0..n).all(|j| m.entry_len(i, j) == 0) {
            violations.push(Violation {
                kind: ViolationKind::ZeroRow,
                row: Some(i),
                col: None,
                symbol: None,
            });
        }
    }
    for j in 0..n {
        if (0..n).all(|i| m.entry_len(i, j) == 0) {
            violations.push(Violation {
                kind: ViolationKind::ZeroColumn,
                row: None,
                col: Some(j),
                symbol: None,
            });
        }
    }
    let essential = violations.is_empty();
    for j in 0..n {
        let mut seen = vec![false; m.alphabet.len()];
        for i in 0..n {
            for &k in m.entry_indices(i, j) {
                if seen[k] {
                    violations.push(Violation {
                        kind: ViolationKind::LeftResolving,
                        row: Some(i),
                        col: Some(j),
                        symbol: Some(m.alphabet.get(k).clone()),
                    });
                }
                seen[k] = true;
            }
        }
    }
    let left_resolving = !violations
        .iter()
        .any(|v| v.kind == ViolationKind::LeftResolving);
    ValidityReport {
        essential,
        left_resolving,
        violations,
    }
}

/// Edge-distinct labeling of the graph of a nonnegative integer matrix:
/// entry `(i, j)` receives `A(i,j)` fresh symbols `{prefix}{i}_{j}_{k}`
/// (all indices 1-based).
pub fn from_integer_matrix(a: &IntMatrix, prefix: &str) -> Result<SymbolicMatrix, SymbolicError> {
    if !a.is_square() {
        return Err(SymbolicError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Err(SymbolicError::EmptyMatrix);
    }
    let mut counts = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            counts[i * n + j] = a[(i, j)]
                .to_usize()
                .filter(|&c| c <= u32::MAX as usize)
                .ok_or(SymbolicError::BadEntry { row: i, col: j })?;
        }
    }
    for i in 0..n {
        if (0..n).all(|j| counts[i * n + j] == 0) {
            return Err(SymbolicError::ZeroRowOrColumn {
                is_row: true,
                index: i,
            });
        }
    }
    for j in 0..n {
        if (0..n).all(|i| counts[i * n + j] == 0) {
            return Err(SymbolicError::ZeroRowOrColumn {
                is_row: false,
                index: j,
            });
        }
    }
    let mut symbols = Vec::new();
    let mut cells = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut cell = Vec::new();
            for k in 1..=counts[i * n + j] {
                let s = Symbol::new(&format!("{prefix}{}_{}_{k}", i + 1, j + 1))?;
                symbols.push(s.clone());
                cell.push(s);
            }
            cells.push(cell);
        }
    }
    SymbolicMatrix::new(n, Alphabet::new(symbols)?, cells)
}

/// Entry `(i, k)` of the product is the multiset of pair symbols `(α,b)`
/// with `α ∈ M(i,j)` and `b ∈ N(j,k)` over all `j`. The alphabet lists the
/// occurring pairs ordered by `(index of α, index of b)`.
pub fn multiply(m: &SymbolicMatrix, n: &SymbolicMatrix) -> Result<SymbolicMatrix, SymbolicError> {
    if m.n != n.n {
        return Err(SymbolicError::SizeMismatch(m.n, n.n));
    }
    let size = m.n;
    let nb = n.alphabet.len();
    let mut used = vec![false; m.alphabet.len() * nb];
    let mut raw: Vec<Vec<usize>> = Vec::with_capacity(size * size);
    for i in 0..size {
        for k in 0..size {
            let mut cell = Vec::new();
            for j in 0..size {
                for &a in m.entry_indices(i, j) {
                    for &b in n.entry_indices(j, k) {
                        let code = a * nb + b;
                        used[code] = true;
                        cell.push(code);
                    }
                }
            }
            raw.push(cell);
        }
    }
    let mut remap = vec![usize::MAX; used.len()];
    let mut symbols = Vec::new();
    for (code, _) in used.iter().enumerate().filter(|(_, &u)| u) {
        remap[code] = symbols.len();
        symbols.push(Symbol::pair(
            m.alphabet.get(code / nb),
            n.alphabet.get(code % nb),
        ));
    }
    let cells = raw
        .into_iter()
        .map(|cell| {
            let mut v: Vec<usize> = cell.into_iter().map(|c| remap[c]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    Ok(SymbolicMatrix {
        n: size,
        alphabet: Alphabet::new(symbols)?,
        cells,
    })
}
