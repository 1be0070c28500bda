mod support;

use ctextile::abelian::IntMatrix;
use ctextile::symbolic_matrix::{
    check_specification, find_specifications, from_integer_matrix, multiply, validate,
    Specification, SymbolicMatrix,
};
use proptest::prelude::*;
use support::*;

fn small_essential() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3, any::<u64>()).prop_map(|(n, seed)| random_essential(&mut rng(seed), n, 2))
}

#[test]
fn specification_counts_match_brute_force() {
    type Pair = (Vec<Vec<i64>>, Vec<Vec<i64>>);
    let cases: Vec<Pair> = vec![
        (vec![vec![1, 1], vec![1, 0]], vec![vec![1, 1], vec![1, 0]]),
        (vec![vec![2]], vec![vec![3]]),
        (vec![vec![1, 1], vec![1, 1]], vec![vec![1, 1], vec![1, 1]]),
        (vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1], vec![1, 1]]),
        (vec![vec![2, 1], vec![1, 1]], vec![vec![1, 1], vec![1, 0]]),
    ];
    for (a, b) in cases {
        let ma = from_integer_matrix(&mat(&a), "e").unwrap();
        let mb = from_integer_matrix(&mat(&b), "f").unwrap();
        let mn = multiply(&ma, &mb).unwrap();
        let nm = multiply(&mb, &ma).unwrap();
        let expected = brute_force_specification_count(&mn, &nm);
        let found = find_specifications(&ma, &mb, usize::MAX).unwrap();
        assert_eq!(found.len(), expected, "A={a:?} B={b:?}");
        for k in &found {
            assert!(check_specification(&mn, &nm, k).unwrap());
        }
        for (i, x) in found.iter().enumerate() {
            assert!(
                found[i + 1..].iter().all(|y| y != x),
                "duplicate specification"
            );
        }
    }
}

#[test]
fn limit_truncates_in_order() {
    let a = mat(&[vec![1, 1], vec![1, 1]]);
    let ma = from_integer_matrix(&a, "e").unwrap();
    let mb = from_integer_matrix(&a, "f").unwrap();
    let all = find_specifications(&ma, &mb, usize::MAX).unwrap();
    // every cell of A² holds 2 pairs
    assert_eq!(all.len(), 16);
    assert_eq!(find_specifications(&ma, &mb, 3).unwrap(), all[..3].to_vec());
}

#[test]
fn non_commuting_has_no_specification() {
    let ma = from_integer_matrix(&mat(&[vec![1, 1], vec![0, 1]]), "e").unwrap();
    let mb = from_integer_matrix(&mat(&[vec![1, 0], vec![1, 1]]), "f").unwrap();
    assert!(find_specifications(&ma, &mb, 10).unwrap().is_empty());
}

#[test]
fn identity_relabeling_checks() {
    let m = SymbolicMatrix::from_literal(&[&[&["(a,x)"]]]);
    let k = Specification::new(m.alphabet().iter().map(|s| (s.clone(), s.clone()))).unwrap();
    assert!(check_specification(&m, &m, &k).unwrap());
}

proptest! {
    #[test]
    fn integer_round_trip(a in small_essential()) {
        let m = from_integer_matrix(&mat(&a), "e").unwrap();
        prop_assert_eq!(int_rows(&m.count_matrix()), a.clone());
        prop_assert!(m.is_edge_distinct());
        prop_assert!(validate(&m).is_valid());
        let back = SymbolicMatrix::parse(&m.to_text()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn product_counts_are_matrix_products(a in small_essential(), seed in any::<u64>()) {
        let b = random_essential(&mut rng(seed), a.len(), 2);
        let ma = from_integer_matrix(&mat(&a), "e").unwrap();
        let mb = from_integer_matrix(&mat(&b), "f").unwrap();
        let p = multiply(&ma, &mb).unwrap();
        prop_assert_eq!(int_rows(&p.count_matrix()), mul_i64(&a, &b));
    }

    #[test]
    fn powers_commute_and_have_specifications(a in small_essential(), which in 0usize..3) {
        let pa = mat(&a);
        let b = match which {
            0 => pa.clone(),
            1 => pa.mul(&pa),
            _ => pa.add(&IntMatrix::identity(a.len())),
        };
        let ma = from_integer_matrix(&pa, "e").unwrap();
        let mb = from_integer_matrix(&b, "f").unwrap();
        let found = find_specifications(&ma, &mb, 2).unwrap();
        prop_assert!(!found.is_empty());
    }

    #[test]
    fn single_letter_left_resolving(a in small_essential()) {
        // a single symbol on every edge is left-resolving iff no column has
        // two nonzero cells or a multiple edge
        let n = a.len();
        let rows: Vec<Vec<Vec<&str>>> = a
            .iter()
            .map(|r| r.iter().map(|&v| vec!["x"; v as usize]).collect())
            .collect();
        let rows_ref: Vec<Vec<&[&str]>> = rows.iter().map(|r| r.iter().map(Vec::as_slice).collect()).collect();
        let lit: Vec<&[&[&str]]> = rows_ref.iter().map(Vec::as_slice).collect();
        let m = SymbolicMatrix::from_literal(&lit);
        let expected = (0..n).all(|j| a.iter().map(|r| r[j]).sum::<i64>() <= 1);
        prop_assert_eq!(validate(&m).left_resolving, expected);
        prop_assert!(validate(&m).essential);
    }
}
