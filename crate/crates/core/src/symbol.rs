//! Symbols: unordered pairs of beta-sets up to simultaneous shift.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{
    beta_core, beta_from_quotient, beta_of_partition, beta_quotient, minimal_beta, partition_of_beta, shift,
    AbacusView, BetaSet, Partition,
};

/// A symbol in canonical form.
///
/// The halves are shift-reduced (0 is not in both), the larger half comes
/// first, and equal-length halves are ordered so that `x >= y`
/// lexicographically. Every constructor canonicalizes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    x: BetaSet,
    y: BetaSet,
}

impl Symbol {
    pub fn new(x: BetaSet, y: BetaSet) -> Self {
        canonical_symbol(&x, &y)
    }

    pub fn empty() -> Self {
        Symbol { x: BetaSet::empty(), y: BetaSet::empty() }
    }

    pub fn x(&self) -> &BetaSet {
        &self.x
    }

    pub fn y(&self) -> &BetaSet {
        &self.y
    }

    pub fn is_degenerate(&self) -> bool {
        self.x == self.y
    }

    pub fn defect(&self) -> usize {
        self.x.len() - self.y.len()
    }

    pub fn rank(&self) -> usize {
        defect_and_rank(self).1
    }

    /// Both halves shifted up by `k`, in the original order.
    pub fn shifted(&self, k: usize) -> (BetaSet, BetaSet) {
        (shift(&self.x, k), shift(&self.y, k))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.x, self.y)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    /// Parses `"1,2|0"`; an empty half is `-` or empty.
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = parse_halves(s)?;
        Ok(Symbol::new(x, y))
    }
}

/// Splits a `"x1,x2|y1"` literal into its two beta-sets without reordering.
pub fn parse_halves(s: &str) -> Result<(BetaSet, BetaSet)> {
    let (x, y) =
        s.split_once('|').ok_or_else(|| Error::Parse(format!("symbol `{s}` needs a `|` separator")))?;
    Ok((x.parse()?, y.parse()?))
}

/// Shift-reduces `{x, y}` and orders the halves deterministically.
pub fn canonical_symbol(x: &BetaSet, y: &BetaSet) -> Symbol {
    let mut x = x.clone();
    let mut y = y.clone();
    while let (Some(a), Some(b)) = (x.unshift(), y.unshift()) {
        x = a;
        y = b;
    }
    let swap = match x.len().cmp(&y.len()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => x.entries() < y.entries(),
    };
    if swap {
        std::mem::swap(&mut x, &mut y);
    }
    Symbol { x, y }
}

fn halves_rank(x: &BetaSet, y: &BetaSet) -> usize {
    let n = x.len() + y.len();
    let correction = if n == 0 { 0 } else { (n - 1) * (n - 1) / 4 };
    x.sum() + y.sum() - correction
}

/// `(||X| - |Y||, ΣX + ΣY - floor(((|X|+|Y|-1)/2)^2))`.
pub fn defect_and_rank(symbol: &Symbol) -> (usize, usize) {
    (symbol.defect(), halves_rank(&symbol.x, &symbol.y))
}

/// Rank of an arbitrary (not necessarily reduced) pair of halves.
pub fn rank_of_halves(x: &BetaSet, y: &BetaSet) -> usize {
    halves_rank(x, y)
}

/// An `e`-core of a symbol, possibly counted twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolCore {
    pub core: Symbol,
    /// 2 only when `core` is degenerate and at least one hook was removed.
    pub copies: u8,
}

/// Removes `e`-hooks from both halves until none remain.
pub fn symbol_e_core(symbol: &Symbol, e: usize) -> (SymbolCore, usize) {
    let (cx, wx) = beta_core(&symbol.x, e);
    let (cy, wy) = beta_core(&symbol.y, e);
    let core = canonical_symbol(&cx, &cy);
    let weight = wx + wy;
    let copies = if core.is_degenerate() && weight > 0 { 2 } else { 1 };
    (SymbolCore { core, copies }, weight)
}

/// Whether a symbol has no `e`-hooks in either half.
pub fn is_symbol_e_core(symbol: &Symbol, e: usize) -> bool {
    symbol_e_core(symbol, e).1 == 0
}

/// The `2e`-linear diagram of a pair of halves: `X` on runners `0..e`,
/// `Y` on runners `e..2e`.
pub fn linear_diagram_of(x: &BetaSet, y: &BetaSet, e: usize) -> AbacusView {
    assert!(e > 0, "linear diagram needs e >= 1");
    let mut positions = AbacusView::of(x, e).positions;
    positions.extend(y.entries().iter().map(|&v| (e + v % e, v / e)));
    AbacusView { runner_count: 2 * e, positions }
}

/// The `2e`-linear diagram of a canonical symbol.
pub fn linear_diagram(symbol: &Symbol, e: usize) -> AbacusView {
    linear_diagram_of(&symbol.x, &symbol.y, e)
}

/// Rebuilds `(X, Y)` from `2e` runner partitions and bead counts.
pub fn halves_from_runners(quotients: &[Partition], bead_counts: &[usize]) -> Result<(BetaSet, BetaSet)> {
    if !quotients.len().is_multiple_of(2) || quotients.len() != bead_counts.len() {
        return Err(Error::InconsistentBeadCounts(format!(
            "{} runner partitions for {} bead counts",
            quotients.len(),
            bead_counts.len()
        )));
    }
    let e = quotients.len() / 2;
    let x = beta_from_quotient(&quotients[..e], &bead_counts[..e])?;
    let y = beta_from_quotient(&quotients[e..], &bead_counts[e..])?;
    Ok((x, y))
}

/// The `(s, μ, ν)` relabeling of a partition or symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SmnLabel {
    pub s: usize,
    pub mu: Partition,
    pub nu: Partition,
}

impl SmnLabel {
    /// For `s = 0` the pair is unordered; it is stored with `mu <= nu`.
    pub fn new(s: usize, mu: Partition, nu: Partition) -> Self {
        if s == 0 && mu > nu {
            SmnLabel { s, mu: nu, nu: mu }
        } else {
            SmnLabel { s, mu, nu }
        }
    }

    /// Rank of the symbol this label describes.
    pub fn symbol_rank(&self) -> usize {
        self.mu.size() + self.nu.size() + self.s * self.s / 4
    }

    pub fn to_symbol(&self) -> Symbol {
        from_smn(self)
    }
}

impl fmt::Display for SmnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:({}):({})", self.s, self.mu, self.nu)
    }
}

impl fmt::Debug for SmnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SmnLabel {
    type Err = Error;

    /// Parses `"s:(mu):(nu)"`, e.g. `"1:(1,1):()"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.splitn(3, ':');
        let (Some(a), Some(b), Some(c)) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!("label `{s}` is not of the form s:(mu):(nu)")));
        };
        let s = a.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{a}`: {e}")))?;
        Ok(SmnLabel::new(s, b.parse()?, c.parse()?))
    }
}

/// `(|X| - |Y|, partition of X, partition of Y)` for a canonical symbol.
pub fn smn_relabel(symbol: &Symbol) -> SmnLabel {
    SmnLabel::new(symbol.defect(), partition_of_beta(&symbol.x), partition_of_beta(&symbol.y))
}

/// Inverse of [`smn_relabel`].
pub fn from_smn(label: &SmnLabel) -> Symbol {
    let b = label.nu.len().max(label.mu.len().saturating_sub(label.s));
    let a = b + label.s;
    let x = beta_of_partition(&label.mu, a).expect("a covers the parts of mu");
    let y = beta_of_partition(&label.nu, b).expect("b covers the parts of nu");
    canonical_symbol(&x, &y)
}

/// The beta-set of `λ` whose 2-abacus has more beads on runner 0.
pub fn partition_two_abacus(partition: &Partition) -> BetaSet {
    let beta = minimal_beta(partition);
    let c = beta.runner_counts(2);
    if c[0] > c[1] {
        beta
    } else {
        shift(&beta, 1)
    }
}

/// `(s, μ, ν)` of a partition read on its 2-abacus; always `s >= 1`.
pub fn partition_smn(partition: &Partition) -> SmnLabel {
    let beta = partition_two_abacus(partition);
    let c = beta.runner_counts(2);
    let q = beta_quotient(&beta, 2);
    SmnLabel { s: c[0] - c[1], mu: q[0].clone(), nu: q[1].clone() }
}

/// Inverse of [`partition_smn`].
pub fn partition_from_smn(label: &SmnLabel) -> Result<Partition> {
    if label.s == 0 {
        return Err(Error::LabelMismatch("partition labels have s >= 1".into()));
    }
    let c1 = label.nu.len().max(label.mu.len().saturating_sub(label.s));
    let beta = beta_from_quotient(&[label.mu.clone(), label.nu.clone()], &[c1 + label.s, c1])?;
    Ok(partition_of_beta(&beta))
}
