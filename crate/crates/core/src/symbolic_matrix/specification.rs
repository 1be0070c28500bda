use std::collections::HashMap;
use std::fmt;

use super::{multiply, Symbol, SymbolicError, SymbolicMatrix};

/// A bijection between two finite symbol sets, typically pair symbols
/// `(α,b) ↦ (a,β)`. Both the domain and the codomain are stored.
#[derive(Clone)]
pub struct Specification {
    pairs: Vec<(Symbol, Symbol)>,
    forward: HashMap<Symbol, usize>,
    backward: HashMap<Symbol, usize>,
}

impl Specification {
    pub fn new(pairs: impl IntoIterator<Item = (Symbol, Symbol)>) -> Result<Self, SymbolicError> {
        let mut out = Specification {
            pairs: Vec::new(),
            forward: HashMap::new(),
            backward: HashMap::new(),
        };
        for (src, dst) in pairs {
            if out.forward.contains_key(&src) {
                return Err(SymbolicError::DuplicateSource(src));
            }
            if out.backward.contains_key(&dst) {
                return Err(SymbolicError::NotBijective(dst));
            }
            let k = out.pairs.len();
            out.forward.insert(src.clone(), k);
            out.backward.insert(dst.clone(), k);
            out.pairs.push((src, dst));
        }
        Ok(out)
    }

    /// Built from component pairs: `((α, b), (a, β))` becomes `(α,b) ↦ (a,β)`.
    pub fn from_component_pairs(
        pairs: impl IntoIterator<Item = ((Symbol, Symbol), (Symbol, Symbol))>,
    ) -> Result<Self, SymbolicError> {
        Self::new(
            pairs
                .into_iter()
                .map(|((a, b), (c, d))| (Symbol::pair(&a, &b), Symbol::pair(&c, &d))),
        )
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(Symbol, Symbol)] {
        &self.pairs
    }

    pub fn domain(&self) -> impl Iterator<Item = &Symbol> {
        self.pairs.iter().map(|(s, _)| s)
    }

    pub fn codomain(&self) -> impl Iterator<Item = &Symbol> {
        self.pairs.iter().map(|(_, t)| t)
    }

    pub fn apply(&self, s: &Symbol) -> Option<&Symbol> {
        self.forward.get(s).map(|&k| &self.pairs[k].1)
    }

    pub fn invert(&self, t: &Symbol) -> Option<&Symbol> {
        self.backward.get(t).map(|&k| &self.pairs[k].0)
    }

    /// `κ(α, b)` as a component pair `(a, β)`.
    pub fn apply_pair(&self, first: &Symbol, second: &Symbol) -> Option<(Symbol, Symbol)> {
        self.apply(&Symbol::pair(first, second))
            .and_then(Symbol::as_pair)
    }

    /// `κ⁻¹(a, β)` as a component pair `(α, b)`.
    pub fn invert_pair(&self, first: &Symbol, second: &Symbol) -> Option<(Symbol, Symbol)> {
        self.invert(&Symbol::pair(first, second))
            .and_then(Symbol::as_pair)
    }
}

impl PartialEq for Specification {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.pairs.iter().all(|(s, t)| other.apply(s) == Some(t))
    }
}

impl Eq for Specification {}

impl fmt::Debug for Specification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.pairs.iter().map(|(s, t)| (s, t)))
            .finish()
    }
}

impl fmt::Display for Specification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, t)) in self.pairs.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{s} -> {t}")?;
        }
        Ok(())
    }
}

/// True iff replacing every symbol of `mn` by its κ-image yields `nm`
/// entry by entry, as multisets.
pub fn check_specification(
    mn: &SymbolicMatrix,
    nm: &SymbolicMatrix,
    kappa: &Specification,
) -> Result<bool, SymbolicError> {
    if mn.size() != nm.size() {
        return Err(SymbolicError::SizeMismatch(mn.size(), nm.size()));
    }
    let images: Vec<&Symbol> = mn
        .alphabet()
        .iter()
        .map(|s| {
            kappa
                .apply(s)
                .ok_or_else(|| SymbolicError::DomainGap(s.clone()))
        })
        .collect::<Result<_, _>>()?;
    let n = mn.size();
    for i in 0..n {
        for j in 0..n {
            let mut mapped: Vec<&Symbol> =
                mn.entry_indices(i, j).iter().map(|&k| images[k]).collect();
            let mut target: Vec<&Symbol> = nm.entry(i, j).collect();
            mapped.sort_unstable();
            target.sort_unstable();
            if mapped != target {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Enumerates specifications `κ` with `MN ≅κ NM` for edge-distinct `M`, `N`.
///
/// Each pair symbol lives in exactly one cell, so a global `κ` is a choice
/// of bijection per cell. Cells are taken in row-major order and each cell's
/// bijections in lexicographic order (first cell slowest); at most `limit`
/// results are returned. An empty list means some cell has mismatched
/// pair counts.
pub fn find_specifications(
    m: &SymbolicMatrix,
    n: &SymbolicMatrix,
    limit: usize,
) -> Result<Vec<Specification>, SymbolicError> {
    if m.size() != n.size() {
        return Err(SymbolicError::SizeMismatch(m.size(), n.size()));
    }
    for x in [m, n] {
        if let Some(s) = x.first_repeated_symbol() {
            return Err(SymbolicError::NotEdgeDistinct(s.clone()));
        }
    }
    let p = multiply(m, n)?;
    let q = multiply(n, m)?;
    let size = m.size();

    let mut cells: Vec<(&[usize], &[usize])> = Vec::new();
    for i in 0..size {
        for k in 0..size {
            let (pc, qc) = (p.entry_indices(i, k), q.entry_indices(i, k));
            if pc.len() != qc.len() {
                return Ok(Vec::new());
            }
            if !pc.is_empty() {
                cells.push((pc, qc));
            }
        }
    }

    let mut perms: Vec<Vec<usize>> = cells
        .iter()
        .map(|(pc, _)| (0..pc.len()).collect())
        .collect();
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    loop {
        let mut assignment: Vec<(usize, usize)> = cells
            .iter()
            .zip(&perms)
            .flat_map(|((pc, qc), perm)| perm.iter().enumerate().map(|(t, &pt)| (pc[t], qc[pt])))
            .collect();
        assignment.sort_unstable();
        out.push(Specification::new(assignment.into_iter().map(
            |(src, dst)| (p.alphabet().get(src).clone(), q.alphabet().get(dst).clone()),
        ))?);
        if out.len() >= limit {
            break;
        }
        // odometer: the last cell varies fastest
        let mut carried = true;
        for perm in perms.iter_mut().rev() {
            if next_permutation(perm) {
                carried = false;
                break;
            }
        }
        if carried {
            break;
        }
    }
    Ok(out)
}

/// Advances to the lexicographically next permutation; on the last one it
/// resets to the identity ordering and returns `false`.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        p.reverse();
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::IntMatrix;
    use crate::symbolic_matrix::from_integer_matrix;

    fn sym(s: &str) -> Symbol {
        Symbol::new(s).unwrap()
    }

    #[test]
    fn permutations_in_lexicographic_order() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn identity_specification() {
        let m = SymbolicMatrix::from_literal(&[&[&["a"]]]);
        let n = SymbolicMatrix::from_literal(&[&[&["x"]]]);
        let mn = multiply(&m, &n).unwrap();
        let kappa = Specification::new([(sym("(a,x)"), sym("(a,x)"))]).unwrap();
        assert!(check_specification(&mn, &mn, &kappa).unwrap());
    }

    #[test]
    fn flip_specification_for_loops() {
        let m = from_integer_matrix(&IntMatrix::scalar(2), "e").unwrap();
        let n = from_integer_matrix(&IntMatrix::scalar(3), "f").unwrap();
        let mn = multiply(&m, &n).unwrap();
        let nm = multiply(&n, &m).unwrap();
        let kappa = Specification::new(mn.alphabet().iter().map(|s| {
            let (e, f) = s.as_pair().unwrap();
            (s.clone(), Symbol::pair(&f, &e))
        }))
        .unwrap();
        assert!(check_specification(&mn, &nm, &kappa).unwrap());
    }

    #[test]
    fn non_bijection_rejected() {
        let err = Specification::new([(sym("(a,x)"), sym("(x,a)")), (sym("(b,x)"), sym("(x,a)"))]);
        assert_eq!(err.err(), Some(SymbolicError::NotBijective(sym("(x,a)"))));
    }

    #[test]
    fn domain_gap_detected() {
        let m = SymbolicMatrix::from_literal(&[&[&["a", "b"]]]);
        let n = SymbolicMatrix::from_literal(&[&[&["x"]]]);
        let mn = multiply(&m, &n).unwrap();
        let nm = multiply(&n, &m).unwrap();
        let kappa = Specification::new([(sym("(a,x)"), sym("(x,a)"))]).unwrap();
        assert_eq!(
            check_specification(&mn, &nm, &kappa),
            Err(SymbolicError::DomainGap(sym("(b,x)")))
        );
    }

    #[test]
    fn scalar_one_has_unique_specification() {
        let m = from_integer_matrix(&IntMatrix::scalar(1), "e").unwrap();
        let n = from_integer_matrix(&IntMatrix::scalar(1), "f").unwrap();
        let all = find_specifications(&m, &n, 10).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(
            all[0].apply(&sym("(e1_1_1,f1_1_1)")),
            Some(&sym("(f1_1_1,e1_1_1)"))
        );
    }

    #[test]
    fn fibonacci_square_has_two() {
        let a = IntMatrix::from_rows(&[[1, 1], [1, 0]]);
        let m = from_integer_matrix(&a, "e").unwrap();
        let n = from_integer_matrix(&a, "f").unwrap();
        let all = find_specifications(&m, &n, 100).unwrap();
        assert_eq!(all.len(), 2);
        assert_ne!(all[0], all[1]);
        let p = multiply(&m, &n).unwrap();
        let q = multiply(&n, &m).unwrap();
        for k in &all {
            assert!(check_specification(&p, &q, k).unwrap());
        }
        assert_eq!(find_specifications(&m, &n, 1).unwrap().len(), 1);
    }

    #[test]
    fn not_edge_distinct_rejected() {
        let m = SymbolicMatrix::from_literal(&[&[&["a"], &["a"]], &[&["b"], &[]]]);
        let n = SymbolicMatrix::from_literal(&[&[&["x"], &["y"]], &[&["z"], &[]]]);
        assert_eq!(
            find_specifications(&m, &n, 1).err(),
            Some(SymbolicError::NotEdgeDistinct(sym("a")))
        );
    }

    #[test]
    fn mismatched_counts_give_nothing() {
        // A = [[1,1],[0,1]], B = [[1,0],[1,1]] do not commute
        let m = from_integer_matrix(&IntMatrix::from_rows(&[[1, 1], [0, 1]]), "e").unwrap();
        let n = from_integer_matrix(&IntMatrix::from_rows(&[[1, 0], [1, 1]]), "f").unwrap();
        assert!(find_specifications(&m, &n, 5).unwrap().is_empty());
    }
}
