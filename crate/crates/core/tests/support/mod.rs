//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the Smith normal form or the boolean-matrix machinery under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use ctextile::abelian::IntMatrix;
use ctextile::symbolic_matrix::{Symbol, SymbolicMatrix};
use ctextile::textile::{Patch, TextileSystem, Tile};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn int_rows(a: &IntMatrix) -> Vec<Vec<i64>> {
    a.to_i64_rows().expect("small entries")
}

pub fn mat(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows)
}

/// Random nonnegative `n×n` matrix with entries in `0..=max` and no zero row
/// or column.
pub fn random_essential(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Vec<Vec<i64>> {
    loop {
        let a: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..=max)).collect())
            .collect();
        let rows_ok = a.iter().all(|r| r.iter().any(|&v| v > 0));
        let cols_ok = (0..n).all(|j| a.iter().any(|r| r[j] > 0));
        if rows_ok && cols_ok {
            return a;
        }
    }
}

pub fn mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `1ᵀ A^k 1` in exact integers.
pub fn total_walks(a: &[Vec<i64>], k: usize) -> i128 {
    let n = a.len();
    let mut v = vec![1i128; n];
    for _ in 0..k {
        v = (0..n)
            .map(|i| (0..n).map(|j| a[i][j] as i128 * v[j]).sum())
            .collect();
    }
    v.iter().sum()
}

/// Edges of a labeled graph: symbol ↦ (source, target).
pub fn edges(m: &SymbolicMatrix) -> BTreeMap<Symbol, Vec<(usize, usize)>> {
    let mut out: BTreeMap<Symbol, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..m.size() {
        for j in 0..m.size() {
            for s in m.entry(i, j) {
                out.entry(s.clone()).or_default().push((i, j));
            }
        }
    }
    out
}

/// A word is realized iff some vertex path follows its letters.
pub fn realized_by_path(
    edges: &BTreeMap<Symbol, Vec<(usize, usize)>>,
    word: &[Symbol],
    n: usize,
) -> bool {
    let mut here: HashSet<usize> = (0..n).collect();
    for s in word {
        let Some(es) = edges.get(s) else { return false };
        here = es
            .iter()
            .filter(|(i, _)| here.contains(i))
            .map(|&(_, j)| j)
            .collect();
        if here.is_empty() {
            return false;
        }
    }
    true
}

/// All words of length `k` that some vertex path realizes, by exhaustive
/// enumeration over the alphabet.
pub fn path_words(m: &SymbolicMatrix, k: usize) -> Vec<Vec<Symbol>> {
    let es = edges(m);
    let letters: Vec<Symbol> = m.alphabet().iter().cloned().collect();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(k);
    fn go(
        letters: &[Symbol],
        es: &BTreeMap<Symbol, Vec<(usize, usize)>>,
        n: usize,
        k: usize,
        word: &mut Vec<Symbol>,
        out: &mut Vec<Vec<Symbol>>,
    ) {
        if !realized_by_path(es, word, n) {
            return;
        }
        if word.len() == k {
            out.push(word.clone());
            return;
        }
        for s in letters {
            word.push(s.clone());
            go(letters, es, n, k, word, out);
            word.pop();
        }
    }
    go(&letters, &es, m.size(), k, &mut word, &mut out);
    out
}

/// Count of bijections `MN → NM` preserving cells, by trying every bijection
/// between the full pair lists.
pub fn brute_force_specification_count(mn: &SymbolicMatrix, nm: &SymbolicMatrix) -> usize {
    let cell_of = |m: &SymbolicMatrix| -> Vec<(Symbol, (usize, usize))> {
        let mut v = Vec::new();
        for i in 0..m.size() {
            for j in 0..m.size() {
                for s in m.entry(i, j) {
                    v.push((s.clone(), (i, j)));
                }
            }
        }
        v
    };
    let src = cell_of(mn);
    let dst = cell_of(nm);
    if src.len() != dst.len() {
        return 0;
    }
    let mut used = vec![false; dst.len()];
    fn go(
        k: usize,
        src: &[(Symbol, (usize, usize))],
        dst: &[(Symbol, (usize, usize))],
        used: &mut [bool],
    ) -> usize {
        if k == src.len() {
            return 1;
        }
        let mut total = 0;
        for t in 0..dst.len() {
            if !used[t] {
                used[t] = true;
                if dst[t].1 == src[k].1 {
                    total += go(k + 1, src, dst, used);
                }
                used[t] = false;
            }
        }
        total
    }
    go(0, &src, &dst, &mut used)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn adjugate3(a: &[Vec<i64>]) -> [[i64; 3]; 3] {
    let m = |r: usize, c: usize| {
        let rs: Vec<usize> = (0..3).filter(|&x| x != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&x| x != c).collect();
        a[rs[0]][cs[0]] * a[rs[1]][cs[1]] - a[rs[0]][cs[1]] * a[rs[1]][cs[0]]
    };
    // adj[c][r] is the (r, c) cofactor
    std::array::from_fn(|c| {
        std::array::from_fn(|r| if (r + c) % 2 == 0 { m(r, c) } else { -m(r, c) })
    })
}

pub fn det3(a: &[Vec<i64>]) -> i64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Invariant factors of `ℤ³ / Aℤ³` for nonsingular `A`.
///
/// `x ↦ adj(A)·x mod |det A|` embeds the quotient into `(ℤ/d)³`; the image
/// is generated by the columns of `adj(A)`, so a breadth-first closure lists
/// every coset. The structure is read off the numbers of elements killed by
/// each prime power.
pub fn residue_cokernel3(a: &[Vec<i64>]) -> Vec<u64> {
    let d = det3(a).abs();
    assert!(d > 0, "singular matrix");
    let adj = adjugate3(a);
    let gens: Vec<[i64; 3]> = (0..3)
        .map(|c| [0, 1, 2].map(|r| adj[r][c].rem_euclid(d)))
        .collect();
    let mut seen: HashSet<[i64; 3]> = HashSet::new();
    let mut queue = VecDeque::from([[0i64; 3]]);
    seen.insert([0; 3]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = [0, 1, 2].map(|i| (v[i] + g[i]) % d);
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    let order_of = |v: &[i64; 3]| -> i64 {
        v.iter().fold(1, |acc, &c| {
            let o = d / gcd(c, d);
            acc / gcd(acc, o) * o
        })
    };
    let orders: Vec<i64> = seen.iter().map(order_of).collect();
    invariant_factors_from_orders(&orders)
}

/// Invariant factors of a finite abelian group given the orders of all its
/// elements.
pub fn invariant_factors_from_orders(orders: &[i64]) -> Vec<u64> {
    let n = orders.len() as i64;
    let mut primes = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            primes.push(p);
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    // per prime: exponents of the cyclic p-factors, largest first
    let mut factors: Vec<Vec<i64>> = Vec::new();
    for &p in &primes {
        let mut logs = vec![0u32];
        let mut pe = 1i64;
        loop {
            pe *= p;
            let c = orders.iter().filter(|&&o| pe % o == 0).count() as i64;
            let mut s = 0;
            let mut c2 = c;
            while c2 > 1 {
                c2 /= p;
                s += 1;
            }
            if s == *logs.last().unwrap() {
                break;
            }
            logs.push(s);
        }
        // number of factors of exponent ≥ e is logs[e] - logs[e-1]
        let at_least: Vec<u32> = (1..logs.len()).map(|e| logs[e] - logs[e - 1]).collect();
        let count = at_least[0] as usize;
        let mut exps = vec![0u32; count];
        for (e, &k) in at_least.iter().enumerate() {
            for x in exps.iter_mut().take(k as usize) {
                *x = e as u32 + 1;
            }
        }
        factors.push(exps.iter().map(|&e| p.pow(e)).collect());
    }
    let width = factors.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<u64> = (0..width)
        .map(|i| {
            factors
                .iter()
                .map(|f| f.get(i).copied().unwrap_or(1))
                .product::<i64>() as u64
        })
        .collect();
    out.reverse();
    out
}

/// Every complete `w×h` paved patch over the system's tiles, by row-major
/// backtracking constrained by the left and lower neighbours.
pub fn paved_patches(sys: &TextileSystem, w: usize, h: usize) -> Vec<Patch> {
    let tiles = sys.tiles().to_vec();
    let mut out = Vec::new();
    let mut grid: Vec<Option<Tile>> = vec![None; w * h];
    fn go(
        k: usize,
        w: usize,
        h: usize,
        tiles: &[Tile],
        grid: &mut Vec<Option<Tile>>,
        out: &mut Vec<Patch>,
    ) {
        if k == w * h {
            out.push(Patch::from_fn(w, h, |x, y| grid[y * w + x].clone()));
            return;
        }
        let (x, y) = (k % w, k / w);
        for t in tiles {
            if x > 0 && grid[k - 1].as_ref().unwrap().right != t.left {
                continue;
            }
            if y > 0 && grid[k - w].as_ref().unwrap().top != t.bottom {
                continue;
            }
            grid[k] = Some(t.clone());
            go(k + 1, w, h, tiles, grid, out);
            grid[k] = None;
        }
    }
    go(0, w, h, &tiles, &mut grid, &mut out);
    out
}

/// 0-1 matrix of a symbol as exact integers.
pub fn int_bits(sys_matrix: &ctextile::BoolMatrix) -> Vec<Vec<i64>> {
    sys_matrix
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect()
}

/// Admissibility through the other boundary: along the top row (ρ letters)
/// and then down the right column (η letters), in integer arithmetic.
pub fn admissible_via_top_right(sys: &TextileSystem, p: &Patch) -> bool {
    let n = sys.dim();
    let id: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for x0 in 0..p.width() {
        for x1 in x0..p.width() {
            for y0 in 0..p.height() {
                for y1 in y0..p.height() {
                    let full = (x0..=x1).all(|x| (y0..=y1).all(|y| p.get(x, y).is_some()));
                    if !full {
                        continue;
                    }
                    let mut m = id.clone();
                    for x in x0..=x1 {
                        let t = p.get(x, y1).unwrap();
                        m = mul_i64(&m, &int_bits(sys.rho().matrix(&t.top).unwrap()));
                    }
                    for y in (y0..=y1).rev() {
                        let t = p.get(x1, y).unwrap();
                        m = mul_i64(&m, &int_bits(sys.eta().matrix(&t.right).unwrap()));
                    }
                    if m.iter().flatten().all(|&v| v == 0) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
