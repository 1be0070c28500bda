//! Textile systems: two symbolic dynamical systems on the same `ℂ^n` tied
//! together by a specification `κ(α, b) = (a, β)` under which
//! `η_b ∘ ρ_α = ρ_β ∘ η_a`. Each such quadruple is a tile
//!
//! ```text
//!   · ──α── ·
//!   a       b
//!   · ──β── ·
//! ```
//!
//! with top `α`, right `b`, left `a` and bottom `β`.

mod patch;
mod render;

use std::collections::HashMap;
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use thiserror::Error;

use crate::abelian::IntMatrix;
use crate::bool_matrix::BoolMatrix;
use crate::csds::{CsdsError, CsdsSystem};
use crate::symbolic_matrix::{
    check_specification, find_specifications, from_integer_matrix, multiply, BitTensor,
    Specification, Symbol, SymbolicError,
};

pub use patch::{is_paved, patch_admissible, propagate_from_diagonal, DiagonalWord, Patch};
pub use render::{render_ascii, render_svg};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TextileError {
    #[error("systems act on algebras of different dimension ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("specification domain differs from the admissible pairs: {0}")]
    DomainMismatch(String),
    #[error("specification codomain differs from the admissible pairs: {0}")]
    CodomainMismatch(String),
    #[error("commutation fails for ({alpha},{b}) -> ({a},{beta})")]
    CommutationFailure {
        alpha: Symbol,
        b: Symbol,
        a: Symbol,
        beta: Symbol,
    },
    #[error("matrices do not commute at ({}, {}): AB = {ab}, BA = {ba}", .row + 1, .col + 1)]
    NotCommuting {
        row: usize,
        col: usize,
        ab: String,
        ba: String,
    },
    #[error("integer matrices must be square and of equal size")]
    ShapeMismatch,
    #[error("no specification with index {which} ({found} available)")]
    NoSpecification { which: usize, found: usize },
    #[error("the supplied specification does not give MN ≅ NM")]
    NotSpecifiedEquivalence,
    #[error("patch is not paved")]
    NotPaved,
    #[error("tile {0} does not belong to the system")]
    UnknownTile(Tile),
    #[error("diagonal is empty")]
    EmptyDiagonal,
    #[error("diagonal composite is zero")]
    InadmissibleDiagonal,
    #[error("no tile fits at position ({}, {})", .0.0, .0.1)]
    Incompatible((i64, i64)),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Csds(#[from] CsdsError),
}

/// `ω = (α, b, a, β)` with `κ(α, b) = (a, β)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    pub top: Symbol,
    pub right: Symbol,
    pub left: Symbol,
    pub bottom: Symbol,
}

impl Tile {
    pub fn new(top: Symbol, right: Symbol, left: Symbol, bottom: Symbol) -> Self {
        Tile {
            top,
            right,
            left,
            bottom,
        }
    }

    /// The tile as a single symbol `((α,b),(a,β))`.
    pub fn symbol(&self) -> Symbol {
        Symbol::pair(
            &Symbol::pair(&self.top, &self.right),
            &Symbol::pair(&self.left, &self.bottom),
        )
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.top, self.right, self.left, self.bottom
        )
    }
}

impl fmt::Debug for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which specification to use when building from commuting matrices.
#[derive(Clone, Debug)]
pub enum SpecChoice {
    /// Position in the enumeration order of `find_specifications`.
    Index(usize),
    Explicit(Specification),
}

#[derive(Clone, Debug)]
pub struct TextileSystem {
    rho: CsdsSystem,
    eta: CsdsSystem,
    kappa: Specification,
    tiles: Vec<Tile>,
    composites: Vec<BoolMatrix>,
    index: HashMap<Tile, usize>,
    by_top_right: HashMap<(Symbol, Symbol), usize>,
    by_left_bottom: HashMap<(Symbol, Symbol), usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub nonempty: bool,
    pub irreducible: bool,
    pub forms_square: bool,
}

impl TextileSystem {
    /// Checks that `κ` is a bijection from `Σ_ρη = {(α,b) : η_b∘ρ_α ≠ 0}` onto
    /// `Σ_ηρ = {(a,β) : ρ_β∘η_a ≠ 0}` satisfying the commutation relation,
    /// and materializes the tiles in `(α, b)` order.
    pub fn build(
        rho: CsdsSystem,
        eta: CsdsSystem,
        kappa: Specification,
    ) -> Result<Self, TextileError> {
        if rho.dim() != eta.dim() {
            return Err(TextileError::DimensionMismatch(rho.dim(), eta.dim()));
        }
        let mut sigma_rho_eta = Vec::new();
        for (ka, alpha) in rho.alphabet().iter().enumerate() {
            for (kb, b) in eta.alphabet().iter().enumerate() {
                let m = rho.matrix_at(ka).mul(eta.matrix_at(kb));
                if !m.is_zero() {
                    sigma_rho_eta.push((alpha.clone(), b.clone(), m));
                }
            }
        }
        let mut sigma_eta_rho: HashMap<(Symbol, Symbol), BoolMatrix> = HashMap::new();
        let mut sigma_eta_rho_order = Vec::new();
        for (ka, a) in eta.alphabet().iter().enumerate() {
            for (kb, beta) in rho.alphabet().iter().enumerate() {
                let m = eta.matrix_at(ka).mul(rho.matrix_at(kb));
                if !m.is_zero() {
                    sigma_eta_rho_order.push((a.clone(), beta.clone()));
                    sigma_eta_rho.insert((a.clone(), beta.clone()), m);
                }
            }
        }

        if kappa.len() != sigma_rho_eta.len() {
            let extra = kappa.domain().find(|s| {
                !s.as_pair().is_some_and(|(alpha, b)| {
                    sigma_rho_eta.iter().any(|(x, y, _)| *x == alpha && *y == b)
                })
            });
            if let Some(extra) = extra {
                return Err(TextileError::DomainMismatch(format!(
                    "`{extra}` is not an admissible pair"
                )));
            }
        }
        let mut tiles = Vec::with_capacity(sigma_rho_eta.len());
        let mut composites = Vec::with_capacity(sigma_rho_eta.len());
        let mut hit = 0usize;
        for (alpha, b, m) in sigma_rho_eta {
            let (a, beta) = kappa.apply_pair(&alpha, &b).ok_or_else(|| {
                TextileError::DomainMismatch(format!("`({alpha},{b})` has no image"))
            })?;
            let Some(other) = sigma_eta_rho.get(&(a.clone(), beta.clone())) else {
                return Err(TextileError::CodomainMismatch(format!(
                    "image `({a},{beta})` of `({alpha},{b})` is not an admissible pair"
                )));
            };
            hit += 1;
            if *other != m {
                return Err(TextileError::CommutationFailure { alpha, b, a, beta });
            }
            tiles.push(Tile::new(alpha, b, a, beta));
            composites.push(m);
        }
        if hit != sigma_eta_rho.len() {
            let image: std::collections::HashSet<&Symbol> = kappa.codomain().collect();
            let missing = sigma_eta_rho_order
                .iter()
                .find(|(a, beta)| !image.contains(&Symbol::pair(a, beta)))
                .expect("a missed admissible pair exists");
            return Err(TextileError::CodomainMismatch(format!(
                "`({},{})` is not an image",
                missing.0, missing.1
            )));
        }

        let index = tiles
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        let by_top_right = tiles
            .iter()
            .enumerate()
            .map(|(k, t)| ((t.top.clone(), t.right.clone()), k))
            .collect();
        let by_left_bottom = tiles
            .iter()
            .enumerate()
            .map(|(k, t)| ((t.left.clone(), t.bottom.clone()), k))
            .collect();
        Ok(TextileSystem {
            rho,
            eta,
            kappa,
            tiles,
            composites,
            index,
            by_top_right,
            by_left_bottom,
        })
    }

    /// The one-vertex system with `n` loops `e1_1_i` and `m` loops `f1_1_j`,
    /// tied by the flip `(e, f) ↦ (f, e)`.
    pub fn onm(n: usize, m: usize) -> Result<Self, TextileError> {
        let loops = |prefix: &str, k: usize| -> Vec<Symbol> {
            (1..=k)
                .map(|i| Symbol::new(&format!("{prefix}1_1_{i}")).expect("generated symbol"))
                .collect()
        };
        let (es, fs) = (loops("e", n), loops("f", m));
        let flip = es.iter().flat_map(|e| {
            fs.iter()
                .map(move |f| ((e.clone(), f.clone()), (f.clone(), e.clone())))
        });
        let kappa = Specification::from_component_pairs(flip)?;
        Self::from_commuting_matrices(
            &IntMatrix::scalar(n as i64),
            &IntMatrix::scalar(m as i64),
            SpecChoice::Explicit(kappa),
        )
    }

    /// Builds `M_A`, `M_B` (symbols `e…` and `f…`) for commuting nonnegative
    /// `A`, `B` and a specification `M_A M_B ≅κ M_B M_A`.
    pub fn from_commuting_matrices(
        a: &IntMatrix,
        b: &IntMatrix,
        choice: SpecChoice,
    ) -> Result<Self, TextileError> {
        if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
            return Err(TextileError::ShapeMismatch);
        }
        let (ab, ba) = (a.mul(b), b.mul(a));
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if ab[(i, j)] != ba[(i, j)] {
                    return Err(TextileError::NotCommuting {
                        row: i,
                        col: j,
                        ab: ab[(i, j)].to_string(),
                        ba: ba[(i, j)].to_string(),
                    });
                }
            }
        }
        let ma = from_integer_matrix(a, "e")?;
        let mb = from_integer_matrix(b, "f")?;
        let kappa = match choice {
            SpecChoice::Index(which) => {
                let mut found = find_specifications(&ma, &mb, which.saturating_add(1))?;
                if which >= found.len() {
                    return Err(TextileError::NoSpecification {
                        which,
                        found: found.len(),
                    });
                }
                found.swap_remove(which)
            }
            SpecChoice::Explicit(k) => {
                if !check_specification(&multiply(&ma, &mb)?, &multiply(&mb, &ma)?, &k)? {
                    return Err(TextileError::NotSpecifiedEquivalence);
                }
                k
            }
        };
        let rho = CsdsSystem::from_symbolic_matrix(&ma)?;
        let eta = CsdsSystem::from_symbolic_matrix(&mb)?;
        Self::build(rho, eta, kappa)
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn rho(&self) -> &CsdsSystem {
        &self.rho
    }

    pub fn eta(&self) -> &CsdsSystem {
        &self.eta
    }

    pub fn kappa(&self) -> &Specification {
        &self.kappa
    }

    /// `Σ_κ` in canonical order.
    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn tile_index(&self, t: &Tile) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// The composite `η_b ∘ ρ_α` of a tile.
    pub fn composite(&self, t: &Tile) -> Option<&BoolMatrix> {
        self.tile_index(t).map(|k| &self.composites[k])
    }

    pub fn composite_at(&self, k: usize) -> &BoolMatrix {
        &self.composites[k]
    }

    /// The unique tile with the given top and right edges.
    pub fn tile_from_top_right(&self, top: &Symbol, right: &Symbol) -> Option<&Tile> {
        self.by_top_right
            .get(&(top.clone(), right.clone()))
            .map(|&k| &self.tiles[k])
    }

    /// The unique tile with the given left and bottom edges.
    pub fn tile_from_left_bottom(&self, left: &Symbol, bottom: &Symbol) -> Option<&Tile> {
        self.by_left_bottom
            .get(&(left.clone(), bottom.clone()))
            .map(|&k| &self.tiles[k])
    }

    /// The symbolic dynamical system over `Σ_κ` whose symbol matrices are the
    /// tile composites; it presents the diagonal subshift.
    pub fn delta_system(&self) -> Result<CsdsSystem, TextileError> {
        let alphabet = crate::symbolic_matrix::Alphabet::new(self.tiles.iter().map(Tile::symbol))?;
        let sys = CsdsSystem::from_bit_tensor(BitTensor {
            n: self.dim(),
            alphabet,
            bits: self.composites.clone(),
        })
        .map_err(|e| TextileError::InternalInvariant(format!("tile composites: {e}")))?;
        if self.rho.is_valid() && self.eta.is_valid() && !sys.is_valid() {
            return Err(TextileError::InternalInvariant(
                "tile system is not essential and faithful".into(),
            ));
        }
        Ok(sys)
    }

    pub fn analyze(&self) -> AnalysisReport {
        let n = self.dim();
        let tile_support = self
            .composites
            .iter()
            .fold(BoolMatrix::zeros(n), |acc, m| acc.or(m));
        let nonempty = has_cycle(&tile_support);

        let lambda = self.rho.support().mul(&self.eta.support());
        let irreducible = strongly_connected(&lambda);

        let forms_square = atom_partition(&self.rho.unit_image_supports(), n)
            == atom_partition(&self.eta.unit_image_supports(), n);
        AnalysisReport {
            nonempty,
            irreducible,
            forms_square,
        }
    }
}

fn graph_of(m: &BoolMatrix) -> DiGraph<(), ()> {
    let n = m.size();
    let mut g = DiGraph::with_capacity(n, m.count_ones());
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    g
}

fn has_cycle(m: &BoolMatrix) -> bool {
    if (0..m.size()).any(|i| m.get(i, i)) {
        return true;
    }
    tarjan_scc(&graph_of(m)).iter().any(|c| c.len() > 1)
}

fn strongly_connected(m: &BoolMatrix) -> bool {
    tarjan_scc(&graph_of(m)).len() == 1
}

/// Labels each coordinate by the atom it belongs to in the partition
/// generated by the given supports; labels are assigned in order of first
/// appearance, so equal partitions give equal vectors.
fn atom_partition(supports: &[Vec<bool>], n: usize) -> Vec<usize> {
    let mut labels: HashMap<Vec<bool>, usize> = HashMap::new();
    (0..n)
        .map(|j| {
            let signature: Vec<bool> = supports.iter().map(|s| s[j]).collect();
            let next = labels.len();
            *labels.entry(signature).or_insert(next)
        })
        .collect()
}
