//! K-groups of textile systems forming square, through the two short exact
//! sequences
//!
//! ```text
//! 0 → ℤ^N / ((1-A)ℤ^N + (1-B)ℤ^N) → K₀ → Ker(1-A) ∩ Ker(1-B) → 0
//! 0 → Ker(1-B) / (1-A)Ker(1-B)    → K₁ → Ker(1-Ā on ℤ^N/(1-B)ℤ^N) → 0
//! ```
//!
//! Lattices such as `(1-A)ℤ^N` are column spans.

use std::fmt;

use num_integer::Integer;

use super::lattice::{cokernel, column_basis, kernel_basis, solve_in_basis};
use super::{AbelianError, FgAbelianGroup, IntMatrix};
use crate::textile::TextileSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    Yes,
    Unknown,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Split::Yes => "yes",
            Split::Unknown => "unknown",
        })
    }
}

/// `0 → sub → K → quot → 0`; `total` is named only when the sequence is
/// known to split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub sub: FgAbelianGroup,
    pub quot: FgAbelianGroup,
    pub split: Split,
    pub total: Option<FgAbelianGroup>,
}

impl ExtensionReport {
    fn new(sub: FgAbelianGroup, quot: FgAbelianGroup) -> Self {
        if quot.is_free() || sub.is_trivial() || quot.is_trivial() {
            let total = sub.direct_sum(&quot);
            ExtensionReport {
                sub,
                quot,
                split: Split::Yes,
                total: Some(total),
            }
        } else {
            ExtensionReport {
                sub,
                quot,
                split: Split::Unknown,
                total: None,
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TextileKGroups {
    pub k0: FgAbelianGroup,
    pub k1: ExtensionReport,
}

fn check_pair(a: &IntMatrix, b: &IntMatrix) -> Result<(), AbelianError> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(AbelianError::Shape(a.rows(), a.cols(), b.rows(), b.cols()));
    }
    let (ab, ba) = (a.mul(b), b.mul(a));
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if ab[(i, j)] != ba[(i, j)] {
                return Err(AbelianError::NotCommuting { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// `coker[1-A | 1-B] ⊕ ℤ^{rank(Ker(1-A) ∩ Ker(1-B))}`. The kernel term is
/// free, so the sequence splits.
pub fn k0_of_pair(a: &IntMatrix, b: &IntMatrix) -> Result<FgAbelianGroup, AbelianError> {
    check_pair(a, b)?;
    let (ia, ib) = (a.one_minus(), b.one_minus());
    let quotient = cokernel(&ia.hstack(&ib));
    let kernel_rank = kernel_basis(&ia.vstack(&ib)).cols();
    Ok(quotient.direct_sum(&FgAbelianGroup::free(kernel_rank)))
}

pub fn k1_of_pair(a: &IntMatrix, b: &IntMatrix) -> Result<ExtensionReport, AbelianError> {
    check_pair(a, b)?;
    let (ia, ib) = (a.one_minus(), b.one_minus());

    // (1-A) restricted to K = Ker(1-B), written in a basis of K
    let k = kernel_basis(&ib);
    let sub = if k.cols() == 0 {
        FgAbelianGroup::trivial()
    } else {
        let restricted = solve_in_basis(&k, &ia.mul(&k)).ok_or_else(|| {
            AbelianError::InternalInvariant("Ker(1-B) is not invariant under A".into())
        })?;
        cokernel(&restricted)
    };

    // Λ = (1-B)ℤ^N and Λ_F = {x : (1-A)x ∈ Λ}; the kernel of the induced
    // endomorphism is Λ_F / Λ
    let n = a.rows();
    let joint = kernel_basis(&ia.hstack(&ib.neg()));
    let preimage = column_basis(&joint.select_rows(0..n));
    let lambda_in_preimage = solve_in_basis(&preimage, &ib).ok_or_else(|| {
        AbelianError::InternalInvariant("(1-B)ℤ^N is not contained in its preimage".into())
    })?;
    let quot = cokernel(&lambda_in_preimage);

    Ok(ExtensionReport::new(sub, quot))
}

/// K-groups of a textile system forming square, fed through the pair
/// formulae with `L(i,j) = #{α : ρ_α(E_i) ≥ E_j}` for each side.
pub fn k_groups_textile(sys: &TextileSystem) -> Result<TextileKGroups, AbelianError> {
    if !sys.analyze().forms_square {
        return Err(AbelianError::NotSquare);
    }
    let lr = sys.rho().lambda_matrix();
    let le = sys.eta().lambda_matrix();
    Ok(TextileKGroups {
        k0: k0_of_pair(&lr, &le)?,
        k1: k1_of_pair(&lr, &le)?,
    })
}

/// `{k ∈ ℤ/m : n·k ≡ 0 (mod m)}` by enumeration, with its structure read off
/// the element orders.
pub fn cyclic_subgroup_oracle(n: u64, m: u64) -> FgAbelianGroup {
    assert!(n >= 1 && m >= 1, "cyclic_subgroup_oracle needs n, m ≥ 1");
    let orders: Vec<u64> = (0..m)
        .filter(|k| (n as u128 * *k as u128).is_multiple_of(m as u128))
        .map(|k| m / k.gcd(&m))
        .collect();
    FgAbelianGroup::from_element_orders(&orders)
}
