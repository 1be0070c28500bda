use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{snf::smith_normal_form, IntMatrix};

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/d_1 ⊕ ⋯ ⊕ ℤ/d_k` with
/// `2 ≤ d_1 | d_2 | ⋯ | d_k`. Two groups are isomorphic iff the values are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid group expression `{0}`")]
pub struct ParseGroupError(pub String);

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// `ℤ/d`; `d = 0` gives `ℤ` and `d = ±1` the trivial group.
    pub fn cyclic(d: impl Into<BigInt>) -> Self {
        Self::from_cyclic_factors(0, [d.into()])
    }

    /// Takes factors that already form a divisibility chain (as read off a
    /// Smith form); unit factors are dropped.
    pub(crate) fn from_canonical_parts(
        rank: usize,
        factors: impl IntoIterator<Item = BigInt>,
    ) -> Self {
        let torsion: Vec<BigInt> = factors
            .into_iter()
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect();
        debug_assert!(torsion.iter().all(|d| !d.is_zero()));
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        FgAbelianGroup { rank, torsion }
    }

    /// `ℤ^free_rank ⊕ ℤ/c_1 ⊕ ℤ/c_2 ⊕ ⋯` for arbitrary cyclic orders `c_i`
    /// (0 meaning infinite cyclic), brought to canonical form.
    pub fn from_cyclic_factors(free_rank: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let orders: Vec<BigInt> = orders.into_iter().collect();
        let k = orders.len();
        let mut diag = IntMatrix::zeros(k, k);
        for (i, c) in orders.into_iter().enumerate() {
            diag[(i, i)] = c;
        }
        let snf = smith_normal_form(&diag);
        let d = snf.diagonal();
        let zeros = d.iter().filter(|x| x.is_zero()).count();
        Self::from_canonical_parts(free_rank + zeros, d.into_iter().filter(|x| !x.is_zero()))
    }

    /// Recovers a finite abelian group from the orders of all its elements.
    ///
    /// For each prime `p`, the counts `|{g : ord(g) | p^e}|` determine the
    /// partition of the `p`-primary part; the partitions are then recombined
    /// into invariant factors. No lattice reduction is involved.
    pub fn from_element_orders(orders: &[u64]) -> Self {
        let size = orders.len() as u64;
        assert!(size > 0, "a group has at least one element");
        let mut exponents_by_prime: Vec<Vec<u32>> = Vec::new();
        let mut primes: Vec<u64> = Vec::new();
        for (p, a) in factorize(size) {
            let mut prev_log = 0u32;
            // multiplicity[e] = number of cyclic factors of exponent ≥ e
            let mut at_least: Vec<u32> = vec![0];
            let mut e = 1u32;
            loop {
                let pe = p.pow(e);
                let count = orders.iter().filter(|&&o| pe % o == 0).count() as u64;
                let log = ilog_exact(count, p);
                at_least.push(log - prev_log);
                prev_log = log;
                if log == a {
                    break;
                }
                e += 1;
            }
            let mut exps = Vec::new();
            for e in 1..at_least.len() {
                let next = at_least.get(e + 1).copied().unwrap_or(0);
                for _ in 0..(at_least[e] - next) {
                    exps.push(e as u32);
                }
            }
            exps.sort_unstable_by(|x, y| y.cmp(x));
            primes.push(p);
            exponents_by_prime.push(exps);
        }
        let count = exponents_by_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut torsion: Vec<BigInt> = (0..count)
            .map(|k| {
                primes
                    .iter()
                    .zip(&exponents_by_prime)
                    .fold(BigInt::one(), |acc, (&p, exps)| {
                        acc * BigInt::from(p).pow(exps.get(k).copied().unwrap_or(0))
                    })
            })
            .collect();
        torsion.reverse();
        FgAbelianGroup { rank: 0, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Group order, or `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank + self.torsion.len() <= 1
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        Self::from_cyclic_factors(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        match self.rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        terms.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", terms.join(" + "))
    }
}

impl FromStr for FgAbelianGroup {
    type Err = ParseGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGroupError(s.to_string());
        let mut rank = 0usize;
        let mut orders = Vec::new();
        for term in s.split('+').map(str::trim) {
            if term == "0" {
                continue;
            }
            if term == "Z" {
                rank += 1;
            } else if let Some(r) = term.strip_prefix("Z^") {
                rank += r.parse::<usize>().map_err(|_| err())?;
            } else if let Some(d) = term.strip_prefix("Z/") {
                let d: BigInt = d.parse().map_err(|_| err())?;
                if d.is_negative() {
                    return Err(err());
                }
                orders.push(d);
            } else {
                return Err(err());
            }
        }
        Ok(Self::from_cyclic_factors(rank, orders))
    }
}

fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

fn ilog_exact(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        assert_eq!(x % p, 0, "element counts of a p-subgroup are powers of p");
        x /= p;
        k += 1;
    }
    k
}

impl FgAbelianGroup {
    /// Invariant factors as machine integers, when they all fit.
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }
}
