//! Induction multiplicities in Weyl groups of types A, B and D.
//!
//! Irreducible characters of `W(B_n)` are labeled by ordered bipartitions
//! of `n`; those of `W(D_n)` by unordered pairs, where an equal pair splits
//! into two characters (unprimed and primed). Every D multiplicity is
//! computed through the B rule.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tableaux::lr_coeff;

/// An ordered bipartition `(α⁰, α¹)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BCharLabel {
    pub a0: Partition,
    pub a1: Partition,
}

impl BCharLabel {
    pub fn new(a0: Partition, a1: Partition) -> Self {
        BCharLabel { a0, a1 }
    }

    pub fn size(&self) -> usize {
        self.a0.size() + self.a1.size()
    }

    pub fn swapped(&self) -> Self {
        BCharLabel { a0: self.a1.clone(), a1: self.a0.clone() }
    }
}

impl fmt::Display for BCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.a0, self.a1)
    }
}

impl fmt::Debug for BCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for BCharLabel {
    type Err = Error;

    /// Parses `"2,1|1"`; either side may be `-` or empty.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bipartition `{s}` needs a `|` separator")))?;
        Ok(BCharLabel::new(a.parse()?, b.parse()?))
    }
}

/// An unordered pair `{α⁰, α¹}`; `primed` is only set on equal pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DCharLabel {
    a0: Partition,
    a1: Partition,
    primed: bool,
}

impl DCharLabel {
    /// Stores the pair with `a0 <= a1`. Rejects a prime on a non-degenerate pair.
    pub fn new(a0: Partition, a1: Partition, primed: bool) -> Result<Self> {
        if primed && a0 != a1 {
            return Err(Error::LabelMismatch(format!("only equal pairs carry a prime, got {{{a0}, {a1}}}")));
        }
        let (a0, a1) = if a0 <= a1 { (a0, a1) } else { (a1, a0) };
        Ok(DCharLabel { a0, a1, primed })
    }

    pub fn a0(&self) -> &Partition {
        &self.a0
    }

    pub fn a1(&self) -> &Partition {
        &self.a1
    }

    pub fn primed(&self) -> bool {
        self.primed
    }

    pub fn is_degenerate(&self) -> bool {
        self.a0 == self.a1
    }

    pub fn size(&self) -> usize {
        self.a0.size() + self.a1.size()
    }

    pub fn as_b(&self) -> BCharLabel {
        BCharLabel::new(self.a0.clone(), self.a1.clone())
    }
}

impl fmt::Display for DCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}{}", self.a0, self.a1, if self.primed { "'" } else { "" })
    }
}

impl fmt::Debug for DCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for DCharLabel {
    type Err = Error;

    /// Parses `"1|1"` or `"1|1'"` for the primed copy.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let b: BCharLabel = body.parse()?;
        DCharLabel::new(b.a0, b.a1, primed)
    }
}

/// Multiplicity of `χ^γ` in `Ind_{S_{n-k} × S_k}^{S_n}(χ^α ⊗ χ^β)`.
pub fn branch_a(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    lr_coeff(alpha, beta, gamma)
}

/// Multiplicity of `χ^β` in `Ind_{W_{n-k} × S_k}^{W_n}(χ^α ⊗ χ^γ)`.
pub fn branch_b(alpha: &BCharLabel, gamma: &Partition, beta: &BCharLabel) -> u64 {
    let k = gamma.size();
    if alpha.size() + k != beta.size() {
        return 0;
    }
    let (b0, a0) = (beta.a0.size(), alpha.a0.size());
    if b0 < a0 || b0 - a0 > k {
        return 0;
    }
    let j = b0 - a0;
    let mut total = 0;
    for d0 in partitions_of(j) {
        let g0 = lr_coeff(&alpha.a0, &d0, &beta.a0);
        if g0 == 0 {
            continue;
        }
        for d1 in partitions_of(k - j) {
            let g1 = lr_coeff(&alpha.a1, &d1, &beta.a1);
            if g1 == 0 {
                continue;
            }
            total += g0 * g1 * lr_coeff(&d0, &d1, gamma);
        }
    }
    total
}

/// Multiplicity of `χ^β` in `Ind_{W'_{n-k} × S_k}^{W'_n}(χ^α ⊗ χ^δ)` for type D.
///
/// A degenerate target gets the same value for both primed versions, and a
/// degenerate source gives the same value for both of its versions. The
/// case where both are degenerate is rejected.
pub fn branch_d(alpha: &DCharLabel, delta: &Partition, beta: &DCharLabel) -> Result<u64> {
    match (alpha.is_degenerate(), beta.is_degenerate()) {
        (true, true) => Err(Error::Unsupported("type D branching between two degenerate labels".into())),
        (false, true) | (true, false) => Ok(branch_b(&alpha.as_b(), delta, &beta.as_b())),
        (false, false) => {
            let a = alpha.as_b();
            let b = beta.as_b();
            Ok(branch_b(&a, delta, &b) + branch_b(&a, delta, &b.swapped()))
        }
    }
}
