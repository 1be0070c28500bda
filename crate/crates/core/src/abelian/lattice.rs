//! Integer lattices given by generator columns.

use num_integer::Integer;
use num_traits::Zero;

use super::snf::smith_normal_form;
use super::{FgAbelianGroup, IntMatrix};

/// Columns form a ℤ-basis of `{x ∈ ℤ^cols : A x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    snf.v.select_cols(rank..a.cols())
}

/// ℤ^rows modulo the column span of `a`.
pub fn cokernel(a: &IntMatrix) -> FgAbelianGroup {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    FgAbelianGroup::from_canonical_parts(
        a.rows() - nonzero,
        diag.into_iter().filter(|d| !d.is_zero()),
    )
}

/// A basis (full column rank) of the lattice spanned by the columns of `gens`.
pub fn column_basis(gens: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(gens);
    let rank = snf.rank();
    gens.mul(&snf.v).select_cols(0..rank)
}

/// Solves `basis · X = targets` over ℤ when `basis` has full column rank.
/// Returns `None` when some target column is outside the lattice.
pub fn solve_in_basis(basis: &IntMatrix, targets: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(
        basis.rows(),
        targets.rows(),
        "lattice and targets live in different spaces"
    );
    let snf = smith_normal_form(basis);
    let t = basis.cols();
    assert_eq!(snf.rank(), t, "basis must have full column rank");
    let ug = snf.u.mul(targets);
    let mut y = IntMatrix::zeros(t, targets.cols());
    for i in 0..ug.rows() {
        for j in 0..ug.cols() {
            if i < t {
                let (q, r) = ug[(i, j)].div_rem(&snf.d[(i, i)]);
                if !r.is_zero() {
                    return None;
                }
                y[(i, j)] = q;
            } else if !ug[(i, j)].is_zero() {
                return None;
            }
        }
    }
    Some(snf.v.mul(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);
        assert_eq!(
            kernel_basis(&IntMatrix::from_rows(&[[0]])),
            IntMatrix::from_rows(&[[1]])
        );
        let k = kernel_basis(&IntMatrix::from_rows(&[[1, -1], [-1, 1]]));
        assert_eq!(k.cols(), 1);
        let col = k.column(0);
        // basis vector is ±(1, 1)
        assert_eq!(col[0], col[1]);
        assert_eq!(num_traits::Signed::abs(&col[0]), 1.into());
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x - 4y = 0 has kernel spanned by (2, 1), not (4, 2)
        let k = kernel_basis(&IntMatrix::from_rows(&[[2, -4]]));
        let col = k.column(0);
        let g = col[0].gcd(&col[1]);
        assert_eq!(g, 1.into());
        assert_eq!(&col[0] - &col[1] * 2, 0.into());
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(
            cokernel(&IntMatrix::from_rows(&[[-2, -4]])).to_string(),
            "Z/2"
        );
        assert_eq!(cokernel(&IntMatrix::zeros(2, 0)).to_string(), "Z^2");
        assert_eq!(
            cokernel(&IntMatrix::from_rows(&[[2, 4], [6, 8]])).to_string(),
            "Z/2 + Z/4"
        );
        assert_eq!(cokernel(&IntMatrix::identity(3)).to_string(), "0");
    }

    #[test]
    fn solve_in_sublattice() {
        let basis = IntMatrix::from_rows(&[[2, 0], [0, 3], [0, 0]]);
        let x = solve_in_basis(&basis, &IntMatrix::from_rows(&[[4], [-3], [0]])).unwrap();
        assert_eq!(x, IntMatrix::from_rows(&[[2], [-1]]));
        assert!(solve_in_basis(&basis, &IntMatrix::from_rows(&[[1], [0], [0]])).is_none());
        assert!(solve_in_basis(&basis, &IntMatrix::from_rows(&[[0], [0], [1]])).is_none());
    }

    #[test]
    fn column_basis_drops_dependent_generators() {
        let gens = IntMatrix::from_rows(&[[2, 4, 6], [0, 0, 0]]);
        let b = column_basis(&gens);
        assert_eq!(b.cols(), 1);
        assert_eq!(num_traits::Signed::abs(&b[(0, 0)]), 2.into());
    }
}
