//! Littlewood-Richardson coefficients and standard Young tableaux.

use num_bigint::BigUint;
use num_traits::One;

use crate::partition::Partition;

/// A Littlewood-Richardson filling of the skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewFilling {
    pub outer: Partition,
    pub inner: Partition,
    /// `rows[r]` holds the entries of row `r` left to right (skew cells only).
    pub rows: Vec<Vec<usize>>,
}

struct Filler<'a> {
    inner: &'a Partition,
    outer: &'a Partition,
    content: &'a Partition,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl Filler<'_> {
    // Cells are visited in reverse reading order: rows top to bottom,
    // each row right to left. Entries are 1-based.
    fn fill(&mut self, row: usize, col: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if row == self.outer.len() {
            visit(&self.grid);
            return;
        }
        let start = self.inner.part(row);
        if col < start || col == usize::MAX {
            let next = row + 1;
            let c = self.outer.part(next).wrapping_sub(1);
            self.fill(next, c, visit);
            return;
        }
        // weakly increasing rows: bounded by the cell to the right
        let mut hi = self.counts.len();
        if col + 1 < self.outer.part(row) {
            hi = hi.min(self.grid[row][col + 1 - start]);
        }
        // strict columns: bounded below by the cell above
        let mut lo = 1;
        if row > 0 && col >= self.inner.part(row - 1) {
            lo = self.grid[row - 1][col - self.inner.part(row - 1)] + 1;
        }
        // an entry in row r never exceeds r + 1
        hi = hi.min(row + 1);
        for k in lo..=hi {
            let i = k - 1;
            if self.counts[i] == self.content.part(i) {
                continue;
            }
            if i > 0 && self.counts[i] + 1 > self.counts[i - 1] {
                continue;
            }
            self.counts[i] += 1;
            self.grid[row][col - start] = k;
            self.fill(row, col.wrapping_sub(1), visit);
            self.counts[i] -= 1;
        }
        self.grid[row][col - start] = 0;
    }
}

fn for_each_filling(
    inner: &Partition,
    content: &Partition,
    outer: &Partition,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if inner.size() + content.size() != outer.size() || !outer.contains(inner) {
        return;
    }
    let grid = (0..outer.len()).map(|r| vec![0; outer.part(r) - inner.part(r)]).collect();
    let mut f = Filler { inner, outer, content, grid, counts: vec![0; content.len()] };
    let c = outer.part(0).wrapping_sub(1);
    f.fill(0, c, visit);
}

/// The coefficient `g_{μ,ν}^λ`: fillings of `λ / μ` with content `ν`.
pub fn lr_coeff(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    let mut n = 0u64;
    for_each_filling(mu, nu, lambda, &mut |_| n += 1);
    n
}

/// Every Littlewood-Richardson filling of `λ / μ` with content `ν`.
pub fn lr_fillings(mu: &Partition, nu: &Partition, lambda: &Partition) -> Vec<SkewFilling> {
    let mut out = Vec::new();
    for_each_filling(mu, nu, lambda, &mut |g| {
        out.push(SkewFilling { outer: lambda.clone(), inner: mu.clone(), rows: g.to_vec() })
    });
    out
}

/// Number of standard Young tableaux of shape `σ`, by the hook length formula.
pub fn syt_count(shape: &Partition) -> BigUint {
    let hooks: BigUint = shape.cells().map(|(r, c)| BigUint::from(shape.hook_length(r, c))).product();
    factorial(shape.size()) / hooks
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
