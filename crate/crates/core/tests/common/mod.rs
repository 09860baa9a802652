//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use abacus_core::partition::{partitions_of, Partition};
use abacus_core::{beta_of_partition, hooks, remove_hook, BCharLabel, DCharLabel};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

/// Content (weight) counts of all semistandard tableaux of `shape` with
/// entries in `1..=n`.
pub fn ssyt_weights(shape: &Partition, n: usize) -> HashMap<Vec<u8>, u64> {
    fn go(
        n: usize,
        cells: &[(usize, usize)],
        i: usize,
        grid: &mut Vec<Vec<u8>>,
        weight: &mut Vec<u8>,
        out: &mut HashMap<Vec<u8>, u64>,
    ) {
        if i == cells.len() {
            *out.entry(weight.clone()).or_default() += 1;
            return;
        }
        let (r, c) = cells[i];
        let mut lo = 1u8;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=n as u8 {
            grid[r][c] = v;
            weight[v as usize - 1] += 1;
            go(n, cells, i + 1, grid, weight, out);
            weight[v as usize - 1] -= 1;
        }
        grid[r][c] = 0;
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut grid: Vec<Vec<u8>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = HashMap::new();
    go(n, &cells, 0, &mut grid, &mut vec![0; n], &mut out);
    out
}

fn as_weight(p: &Partition, n: usize) -> Vec<u8> {
    let mut w: Vec<u8> = p.parts().iter().map(|&x| x as u8).collect();
    w.resize(n, 0);
    w
}

/// Schur expansion of `s_μ · s_ν` computed from monomial coefficients in
/// `|μ| + |ν|` variables and triangular Kostka extraction.
pub struct SchurOracle {
    n: usize,
    weights: BTreeMap<Partition, HashMap<Vec<u8>, u64>>,
}

impl SchurOracle {
    /// Prepares weight tables for every partition of size at most `n`.
    pub fn new(n: usize) -> Self {
        let mut weights = BTreeMap::new();
        for k in 0..=n {
            for p in partitions_of(k) {
                let w = ssyt_weights(&p, n.max(1));
                weights.insert(p, w);
            }
        }
        SchurOracle { n: n.max(1), weights }
    }

    fn monomial_coeff(&self, mu: &Partition, nu: &Partition, kappa: &[u8]) -> u64 {
        let wm = &self.weights[mu];
        let wn = &self.weights[nu];
        let mut total = 0;
        for (a, &ca) in wm {
            if a.iter().zip(kappa).any(|(x, y)| x > y) {
                continue;
            }
            let b: Vec<u8> = kappa.iter().zip(a).map(|(k, x)| k - x).collect();
            if let Some(&cb) = wn.get(&b) {
                total += ca * cb;
            }
        }
        total
    }

    pub fn product(&self, mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
        let size = mu.size() + nu.size();
        assert!(size <= self.n);
        // partitions_of lists (size) first: reverse lexicographic, which
        // refines reverse dominance.
        let shapes = partitions_of(size);
        let mut coeffs: BTreeMap<Partition, i64> = BTreeMap::new();
        for kappa in &shapes {
            let kw = as_weight(kappa, self.n);
            let mut m = self.monomial_coeff(mu, nu, &kw) as i64;
            for (lam, c) in &coeffs {
                let k = self.weights[lam].get(&kw).copied().unwrap_or(0) as i64;
                m -= c * k;
            }
            assert!(m >= 0, "negative Schur coefficient");
            if m > 0 {
                coeffs.insert(kappa.clone(), m);
            }
        }
        coeffs.into_iter().map(|(k, v)| (k, v as u64)).collect()
    }
}

/// SYT count by removing corners recursively.
pub fn syt_recursive(shape: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
    if shape.is_empty() {
        return BigUint::from(1u8);
    }
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    let v = shape.remove_box_all().iter().map(|s| syt_recursive(s, memo)).sum::<BigUint>();
    memo.insert(shape.clone(), v.clone());
    v
}

/// `e`-core by removing randomly chosen hooks until none is left.
pub fn random_core<R: Rng>(lambda: &Partition, e: usize, rng: &mut R) -> (Partition, usize) {
    let mut cur = lambda.clone();
    let mut steps = 0;
    loop {
        let hs = hooks(&cur, e);
        let Some(h) = hs.choose(rng) else {
            return (cur, steps);
        };
        cur = remove_hook(&cur, *h).unwrap();
        steps += 1;
    }
}

/// Cells of `outer / inner`.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    outer.cells().filter(|&(r, c)| c >= inner.part(r)).collect()
}

/// Whether a set of cells is a translate of the Young diagram of `shape`.
pub fn is_translate_of(cells: &[(usize, usize)], shape: &Partition) -> bool {
    let Some(r0) = cells.iter().map(|c| c.0).min() else {
        return shape.is_empty();
    };
    let c0 = cells.iter().map(|c| c.1).min().unwrap();
    let mut a: Vec<(usize, usize)> = cells.iter().map(|&(r, c)| (r - r0, c - c0)).collect();
    let mut b: Vec<(usize, usize)> = shape.cells().collect();
    a.sort();
    b.sort();
    a == b
}

pub fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn fact(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `f^λ` as a machine integer, by the hook length formula done in `u128`.
pub fn syt_u128(p: &Partition) -> u128 {
    let hooks: u128 = p.cells().map(|(r, c)| p.hook_length(r, c) as u128).product();
    fact(p.size()) / hooks
}

/// Degree of `χ^{(a,b)}` of `W(B_n)`.
pub fn dim_b(l: &BCharLabel) -> u128 {
    binom(l.size(), l.a0.size()) * syt_u128(&l.a0) * syt_u128(&l.a1)
}

/// Degree of a `W(D_n)` character (halved on degenerate labels).
pub fn dim_d(l: &DCharLabel) -> u128 {
    let full = dim_b(&l.as_b());
    if l.is_degenerate() && l.size() > 0 {
        full / 2
    } else {
        full
    }
}

/// Every bipartition of `n`.
pub fn bipartitions(n: usize) -> Vec<BCharLabel> {
    abacus_core::partition::multipartitions(n, 2)
        .into_iter()
        .map(|v| BCharLabel::new(v[0].clone(), v[1].clone()))
        .collect()
}

/// Every `W(D_n)` label: unordered pairs, both versions of equal pairs.
pub fn d_labels(n: usize) -> Vec<DCharLabel> {
    let mut out = std::collections::BTreeSet::new();
    for b in bipartitions(n) {
        out.insert(DCharLabel::new(b.a0.clone(), b.a1.clone(), false).unwrap());
        if b.a0 == b.a1 {
            out.insert(DCharLabel::new(b.a0.clone(), b.a1.clone(), true).unwrap());
        }
    }
    out.into_iter().collect()
}

/// Minimal beta-set with exactly `s` beads, for oracles needing padding.
pub fn beta_with(p: &Partition, s: usize) -> abacus_core::BetaSet {
    beta_of_partition(p, s).unwrap()
}
