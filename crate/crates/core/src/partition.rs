//! Partitions, beta-sets and the `e`-abacus.
//!
//! A beta-set `{b_1 < ... < b_s}` encodes the partition with parts
//! `a_i = b_{s-i+1} - s + i`. All hook, core and quotient manipulations are
//! carried out on beta-sets; Young-diagram cells are only used for display
//! and by a few oracles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest partition size accepted by [`Partition::new`].
pub const MAX_PARTITION_SIZE: usize = 10_000;
/// Largest beta-set entry accepted by [`BetaSet::new`].
pub const MAX_BETA_ENTRY: usize = 1_000_000;

/// A weakly decreasing list of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part inside the list".into()));
        }
        let size: usize = parts.iter().sum();
        if size > MAX_PARTITION_SIZE {
            return Err(Error::InvalidPartition(format!(
                "size {size} exceeds the cap of {MAX_PARTITION_SIZE}"
            )));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols).map(|c| self.parts.iter().take_while(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// Whether the partition has the shape `(a, 1^b)`.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Cells `(row, column)` of the Young diagram, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Hook length of the cell `(row, column)`.
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col - 1;
        let leg = self.parts[row + 1..].iter().take_while(|&&p| p > col).count();
        arm + leg + 1
    }

    /// All partitions obtained by adding a single box.
    pub fn add_box_all(&self) -> Vec<Partition> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.part(r) < self.part(r - 1))
            .map(|r| {
                let mut parts = self.parts.clone();
                if r == parts.len() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                Partition { parts }
            })
            .collect()
    }

    /// All partitions obtained by removing a single corner box.
    pub fn remove_box_all(&self) -> Vec<Partition> {
        (0..self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| {
                let mut parts = self.parts.clone();
                parts[r] -= 1;
                if parts[r] == 0 {
                    parts.pop();
                }
                Partition { parts }
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        write_list(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"5,5,3,2"`; the empty partition is `""` or `"-"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s)?;
        Partition::new(parts)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{t}`: {e}")))).collect()
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All `k`-tuples of partitions with total size `n`.
pub fn multipartitions(n: usize, k: usize) -> Vec<Vec<Partition>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        let heads = partitions_of(first);
        for tail in multipartitions(n - first, k - 1) {
            for h in &heads {
                let mut v = Vec::with_capacity(k);
                v.push(h.clone());
                v.extend(tail.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}

/// A strictly increasing finite set of non-negative integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    /// Accepts any order; rejects repeated entries and entries above the cap.
    pub fn new(mut entries: Vec<usize>) -> Result<Self> {
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBetaSet(format!("repeated entry in {entries:?}")));
        }
        if entries.last().is_some_and(|&x| x > MAX_BETA_ENTRY) {
            return Err(Error::InvalidBetaSet(format!("entry exceeds the cap of {MAX_BETA_ENTRY}")));
        }
        Ok(BetaSet { entries })
    }

    pub(crate) fn from_sorted(entries: Vec<usize>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        BetaSet { entries }
    }

    pub fn empty() -> Self {
        BetaSet::default()
    }

    /// `{0, 1, ..., k-1}`.
    pub fn prefix(k: usize) -> Self {
        BetaSet { entries: (0..k).collect() }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Whether `{0, ..., d-1}` is contained in the set.
    pub fn has_prefix(&self, d: usize) -> bool {
        self.entries.len() >= d && (d == 0 || self.entries[d - 1] == d - 1)
    }

    /// Undoes one 1-shift; `None` if `0` is not in the set.
    pub fn unshift(&self) -> Option<BetaSet> {
        if self.entries.first() != Some(&0) {
            return None;
        }
        Some(BetaSet { entries: self.entries[1..].iter().map(|x| x - 1).collect() })
    }

    /// The smallest equivalent beta-set (no leading `0`).
    pub fn minimal(&self) -> BetaSet {
        let k = self.entries.iter().enumerate().take_while(|(i, &x)| *i == x).count();
        BetaSet { entries: self.entries[k..].iter().map(|x| x - k).collect() }
    }

    fn replace(&self, from: usize, to: usize) -> BetaSet {
        let mut entries: Vec<usize> = self.entries.iter().map(|&x| if x == from { to } else { x }).collect();
        entries.sort_unstable();
        BetaSet { entries }
    }

    /// Bead count on each of the `e` runners of the `e`-abacus.
    pub fn runner_counts(&self, e: usize) -> Vec<usize> {
        let mut counts = vec![0; e];
        for &x in &self.entries {
            counts[x % e] += 1;
        }
        counts
    }

    /// The beta-set `{i : e*i + j in self}` of runner `j`.
    pub fn runner(&self, e: usize, j: usize) -> BetaSet {
        BetaSet { entries: self.entries.iter().filter(|&&x| x % e == j).map(|&x| x / e).collect() }
    }

    /// The beta-set with `counts[j]` beads pushed to the top of runner `j`.
    pub fn from_runner_counts(counts: &[usize]) -> BetaSet {
        let e = counts.len();
        let mut entries: Vec<usize> =
            counts.iter().enumerate().flat_map(|(j, &c)| (0..c).map(move |i| e * i + j)).collect();
        entries.sort_unstable();
        BetaSet { entries }
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("-");
        }
        write_list(f, &self.entries)
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for BetaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(s);
        BetaSet::new(parse_list(s)?)
    }
}

impl TryFrom<Vec<usize>> for BetaSet {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        BetaSet::new(v)
    }
}

impl From<BetaSet> for Vec<usize> {
    fn from(b: BetaSet) -> Self {
        b.entries
    }
}

/// An `e`-hook of a beta-set: `x` is a bead, `y = x - e` is a gap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hook {
    pub x: usize,
    pub y: usize,
}

impl Hook {
    pub fn length(&self) -> usize {
        self.x - self.y
    }
}

/// Beads of a beta-set on an abacus with `runner_count` runners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusView {
    pub runner_count: usize,
    /// Occupied `(runner, row)` positions.
    pub positions: BTreeSet<(usize, usize)>,
}

impl AbacusView {
    pub fn of(beta: &BetaSet, e: usize) -> Self {
        assert!(e > 0, "abacus needs at least one runner");
        AbacusView { runner_count: e, positions: beta.entries().iter().map(|&x| (x % e, x / e)).collect() }
    }

    pub fn bead_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.runner_count];
        for &(j, _) in &self.positions {
            counts[j] += 1;
        }
        counts
    }

    pub fn to_beta(&self) -> BetaSet {
        BetaSet::from_sorted({
            let mut v: Vec<usize> = self.positions.iter().map(|&(j, i)| self.runner_count * i + j).collect();
            v.sort_unstable();
            v
        })
    }
}

/// The beta-set of `partition` with exactly `s` entries.
pub fn beta_of_partition(partition: &Partition, s: usize) -> Result<BetaSet> {
    if s < partition.len() {
        return Err(Error::BetaTooSmall { size: s, parts: partition.len() });
    }
    // b_{s-i+1} = a_i + s - i for i = 1..s
    let mut entries: Vec<usize> = (1..=s).map(|i| partition.part(i - 1) + s - i).collect();
    entries.reverse();
    if entries.last().is_some_and(|&x| x > MAX_BETA_ENTRY) {
        return Err(Error::InvalidBetaSet(format!("entry exceeds the cap of {MAX_BETA_ENTRY}")));
    }
    Ok(BetaSet { entries })
}

/// The beta-set with as many entries as `partition` has parts.
pub fn minimal_beta(partition: &Partition) -> BetaSet {
    beta_of_partition(partition, partition.len()).expect("length is always large enough")
}

/// The partition encoded by `beta`; invariant under shifts.
pub fn partition_of_beta(beta: &BetaSet) -> Partition {
    let s = beta.len();
    let parts: Vec<usize> = (1..=s).map(|i| beta.entries[s - i] + i - s).take_while(|&a| a > 0).collect();
    Partition::from_sorted(parts)
}

/// The `d`-shift `{0..d-1} ∪ {x + d}`.
pub fn shift(beta: &BetaSet, d: usize) -> BetaSet {
    BetaSet { entries: (0..d).chain(beta.entries.iter().map(|x| x + d)).collect() }
}

/// Every removable `e`-hook of a beta-set.
pub fn beta_hooks(beta: &BetaSet, e: usize) -> Vec<Hook> {
    beta.entries.iter().filter(|&&x| x >= e && !beta.contains(x - e)).map(|&x| Hook { x, y: x - e }).collect()
}

/// Every removable `e`-hook of `partition`, read on its minimal beta-set.
pub fn hooks(partition: &Partition, e: usize) -> Vec<Hook> {
    assert!(e > 0, "hook length must be positive");
    beta_hooks(&minimal_beta(partition), e)
}

/// Replaces `hook.x` by `hook.y` in `beta`.
pub fn remove_beta_hook(beta: &BetaSet, hook: Hook) -> Result<BetaSet> {
    if hook.y >= hook.x || !beta.contains(hook.x) || beta.contains(hook.y) {
        return Err(Error::NotAHook { x: hook.x, y: hook.y });
    }
    Ok(beta.replace(hook.x, hook.y))
}

/// Removes a hook reported by [`hooks`] (minimal beta-set coordinates).
pub fn remove_hook(partition: &Partition, hook: Hook) -> Result<Partition> {
    let beta = minimal_beta(partition);
    remove_beta_hook(&beta, hook).map(|b| partition_of_beta(&b))
}

/// The `e`-core of a beta-set (same number of entries) and the weight.
pub fn beta_core(beta: &BetaSet, e: usize) -> (BetaSet, usize) {
    assert!(e > 0, "core needs e >= 1");
    // Pushing every bead to the top of its runner removes all e-hooks;
    // the number of removals is the total upward displacement.
    let mut counts = vec![0usize; e];
    let mut weight = 0;
    for &x in &beta.entries {
        let (j, row) = (x % e, x / e);
        weight += row - counts[j];
        counts[j] += 1;
    }
    (BetaSet::from_runner_counts(&counts), weight)
}

/// The `e`-core of `partition` and its `e`-weight.
pub fn e_core_and_weight(partition: &Partition, e: usize) -> (Partition, usize) {
    let (core, weight) = beta_core(&minimal_beta(partition), e);
    (partition_of_beta(&core), weight)
}

/// Whether `partition` has no `e`-hooks.
pub fn is_e_core(partition: &Partition, e: usize) -> bool {
    hooks(partition, e).is_empty()
}

/// The `e`-quotient `[λ^0, ..., λ^{e-1}]` read on the given representation.
pub fn e_quotient(partition: &Partition, e: usize, beta: &BetaSet) -> Result<Vec<Partition>> {
    if &partition_of_beta(beta) != partition {
        return Err(Error::InvalidBetaSet(format!("{beta:?} does not represent {partition:?}")));
    }
    Ok(beta_quotient(beta, e))
}

/// Per-runner partitions of a beta-set on the `e`-abacus.
pub fn beta_quotient(beta: &BetaSet, e: usize) -> Vec<Partition> {
    (0..e).map(|j| partition_of_beta(&beta.runner(e, j))).collect()
}

/// Rebuilds the beta-set with the given per-runner bead counts and quotient.
pub fn beta_from_quotient(quotients: &[Partition], bead_counts: &[usize]) -> Result<BetaSet> {
    let e = quotients.len();
    if bead_counts.len() != e {
        return Err(Error::InconsistentBeadCounts(format!(
            "{} runners but {} bead counts",
            e,
            bead_counts.len()
        )));
    }
    let mut entries = Vec::with_capacity(bead_counts.iter().sum());
    for (j, (q, &c)) in quotients.iter().zip(bead_counts).enumerate() {
        let runner = beta_of_partition(q, c).map_err(|_| {
            Error::InconsistentBeadCounts(format!(
                "runner {j} has {c} beads but its quotient {q:?} has {} parts",
                q.len()
            ))
        })?;
        entries.extend(runner.entries.iter().map(|&i| e * i + j));
    }
    entries.sort_unstable();
    Ok(BetaSet { entries })
}

/// Inverse of [`e_quotient`] for the representation fixed by `bead_counts`.
pub fn partition_from_core_and_quotient(
    core: &Partition,
    quotients: &[Partition],
    bead_counts: &[usize],
) -> Result<Partition> {
    let e = quotients.len();
    if e == 0 {
        return Err(Error::InconsistentBeadCounts("no runners".into()));
    }
    let core_beta = BetaSet::from_runner_counts(bead_counts);
    if &partition_of_beta(&core_beta) != core {
        return Err(Error::InconsistentBeadCounts(format!(
            "bead counts {bead_counts:?} describe the core {:?}, not {core:?}",
            partition_of_beta(&core_beta)
        )));
    }
    beta_from_quotient(quotients, bead_counts).map(|b| partition_of_beta(&b))
}
