//! Numeric block theory: `d`, `e`, `a`, linear primes, group orders,
//! p-element classes, admissible cores and block contexts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::UnipotentLabel;
use crate::partition::{
    beta_core, beta_from_quotient, minimal_beta, partition_of_beta, shift, BetaSet, Partition,
};
use crate::symbol::{canonical_symbol, halves_from_runners, rank_of_halves, Symbol};

/// Largest modulus `p^a` for which p-element classes are enumerated.
pub const MAX_CLASS_MODULUS: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    GL,
    U,
    Sp,
    CSp,
    SOOdd,
    SOPlus,
    SOMinus,
    CSOPlus,
    CSOMinus,
}

/// The four cases (with conformal sub-cases) of the main construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    One,
    TwoA,
    TwoB,
    Three,
    FourA,
    FourB,
}

impl CaseTag {
    pub fn number(self) -> u8 {
        match self {
            CaseTag::One => 1,
            CaseTag::TwoA | CaseTag::TwoB => 2,
            CaseTag::Three => 3,
            CaseTag::FourA | CaseTag::FourB => 4,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::One => "1",
            CaseTag::TwoA => "2(a)",
            CaseTag::TwoB => "2(b)",
            CaseTag::Three => "3",
            CaseTag::FourA => "4(a)",
            CaseTag::FourB => "4(b)",
        })
    }
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 9] = [
        GroupFamily::GL,
        GroupFamily::U,
        GroupFamily::Sp,
        GroupFamily::CSp,
        GroupFamily::SOOdd,
        GroupFamily::SOPlus,
        GroupFamily::SOMinus,
        GroupFamily::CSOPlus,
        GroupFamily::CSOMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupFamily::GL => "gl",
            GroupFamily::U => "u",
            GroupFamily::Sp => "sp",
            GroupFamily::CSp => "csp",
            GroupFamily::SOOdd => "so-odd",
            GroupFamily::SOPlus => "so-plus",
            GroupFamily::SOMinus => "so-minus",
            GroupFamily::CSOPlus => "cso-plus",
            GroupFamily::CSOMinus => "cso-minus",
        }
    }

    /// `None` for GL, which is not one of the four cases.
    pub fn case(self) -> Option<CaseTag> {
        Some(match self {
            GroupFamily::GL => return None,
            GroupFamily::U => CaseTag::One,
            GroupFamily::Sp => CaseTag::TwoA,
            GroupFamily::CSp => CaseTag::TwoB,
            GroupFamily::SOOdd => CaseTag::Three,
            GroupFamily::SOPlus | GroupFamily::SOMinus => CaseTag::FourA,
            GroupFamily::CSOPlus | GroupFamily::CSOMinus => CaseTag::FourB,
        })
    }

    /// Families with a `(q-1)_p` centre factor.
    pub fn is_conformal(self) -> bool {
        matches!(self, GroupFamily::CSp | GroupFamily::CSOPlus | GroupFamily::CSOMinus)
    }

    pub fn uses_symbols(self) -> bool {
        !matches!(self, GroupFamily::GL | GroupFamily::U)
    }

    /// Whether unipotent labels of this family may have the given defect.
    pub fn defect_allowed(self, defect: usize) -> bool {
        match self {
            GroupFamily::GL | GroupFamily::U => true,
            GroupFamily::Sp | GroupFamily::CSp | GroupFamily::SOOdd => defect % 2 == 1,
            GroupFamily::SOPlus | GroupFamily::CSOPlus => defect.is_multiple_of(4),
            GroupFamily::SOMinus | GroupFamily::CSOMinus => defect % 4 == 2,
        }
    }

    /// The Lie rank `n` for matrix degree `m`, checking the parity of `m`.
    pub fn rank_of_degree(self, m: usize) -> Result<usize> {
        match self {
            GroupFamily::GL | GroupFamily::U => Ok(m),
            GroupFamily::SOOdd if m % 2 == 1 => Ok(m / 2),
            GroupFamily::SOOdd => Err(Error::InvalidParameters(format!("SO_m needs odd m, got {m}"))),
            _ if m.is_multiple_of(2) => Ok(m / 2),
            f => Err(Error::InvalidParameters(format!("{} needs even m, got {m}", f.name()))),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String =
            s.trim().to_ascii_lowercase().chars().map(|c| if c == '_' { '-' } else { c }).collect();
        Ok(match key.as_str() {
            "gl" => GroupFamily::GL,
            "u" => GroupFamily::U,
            "sp" => GroupFamily::Sp,
            "csp" => GroupFamily::CSp,
            "so-odd" | "so" => GroupFamily::SOOdd,
            "so-plus" | "so+" => GroupFamily::SOPlus,
            "so-minus" | "so-" => GroupFamily::SOMinus,
            "cso-plus" | "cso+" => GroupFamily::CSOPlus,
            "cso-minus" | "cso-" => GroupFamily::CSOMinus,
            _ => return Err(Error::Parse(format!("unknown group family `{s}`"))),
        })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// `(r, k)` with `n = r^k` and `r` prime, if `n` is a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let r = (2..=n).find(|r| n.is_multiple_of(*r))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(r) {
        m /= r;
        k += 1;
    }
    (m == 1).then_some((r, k))
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Multiplicative order of `x` modulo `m`; `x` must be a unit.
pub fn mult_order(x: u64, m: u64) -> usize {
    let x = x % m;
    let mut acc = x;
    let mut k = 1;
    while acc != 1 % m {
        acc = ((acc as u128 * x as u128) % m as u128) as u64;
        k += 1;
        assert!(k <= m as usize, "{x} is not a unit mod {m}");
    }
    k
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn p_valuation(n: &BigUint, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// `d`, `e`, `a` and the linear flag of a family at `(q, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedParams {
    pub d: usize,
    pub e: usize,
    pub a: u32,
    pub linear: bool,
    /// `sqrt(q)` for the unitary family.
    pub q0: Option<u64>,
}

/// Checks the family's constraints on `q` and returns `q0` for U.
pub fn validate_q(family: GroupFamily, q: u64) -> Result<Option<u64>> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidParameters(format!("q = {q} is not a prime power")));
    }
    match family {
        GroupFamily::GL => Ok(None),
        GroupFamily::U => {
            let q0 = isqrt(q);
            if q0 * q0 != q {
                return Err(Error::InvalidParameters(format!(
                    "the unitary family needs q = q0^2, got q = {q}"
                )));
            }
            Ok(Some(q0))
        }
        _ if q.is_multiple_of(2) => {
            Err(Error::InvalidParameters(format!("{} needs odd q, got q = {q}", family.name())))
        }
        _ => Ok(None),
    }
}

pub fn derive_params(family: GroupFamily, q: u64, p: u64) -> Result<DerivedParams> {
    let q0 = validate_q(family, q)?;
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidParameters(format!("p = {p} is not an odd prime")));
    }
    if q.is_multiple_of(p) {
        return Err(Error::InvalidParameters(format!("p = {p} divides q = {q}")));
    }
    let d = mult_order(q, p);
    let e = match family {
        GroupFamily::GL => d,
        GroupFamily::U => mult_order(p - q0.unwrap() % p, p),
        _ => mult_order(((q % p) * (q % p)) % p, p),
    };
    let qd = BigUint::from(q).pow(d as u32) - BigUint::one();
    let a = p_valuation(&qd, p);
    let linear = match family {
        GroupFamily::GL => true,
        GroupFamily::U => e != d,
        _ => e == d,
    };
    Ok(DerivedParams { d, e, a, linear, q0 })
}

/// Group order by Wall's formulas; `m` is the matrix degree.
pub fn group_order(family: GroupFamily, q: u64, m: usize) -> Result<BigUint> {
    let q0 = validate_q(family, q)?;
    let n = family.rank_of_degree(m)?;
    let qb = BigUint::from(q);
    let one = BigUint::one();
    let pw = |b: &BigUint, k: usize| -> BigUint { Pow::pow(b, k as u32) };
    let sym_prod = |upto: usize| -> BigUint { (1..=upto).map(|i| pw(&qb, 2 * i) - &one).product() };
    let conformal = if family.is_conformal() { &qb - &one } else { one.clone() };
    Ok(match family {
        GroupFamily::GL => {
            pw(&qb, n * n.saturating_sub(1) / 2) * (1..=n).map(|i| pw(&qb, i) - &one).product::<BigUint>()
        }
        GroupFamily::U => {
            let b = BigUint::from(q0.unwrap());
            let prod: BigUint =
                (1..=n).map(|i| if i % 2 == 1 { pw(&b, i) + &one } else { pw(&b, i) - &one }).product();
            pw(&b, n * n.saturating_sub(1) / 2) * prod
        }
        GroupFamily::Sp | GroupFamily::CSp | GroupFamily::SOOdd => pw(&qb, n * n) * sym_prod(n) * conformal,
        GroupFamily::SOPlus | GroupFamily::CSOPlus | GroupFamily::SOMinus | GroupFamily::CSOMinus => {
            if n == 0 {
                return Err(Error::InvalidParameters("even orthogonal groups need m >= 2".into()));
            }
            let plus = matches!(family, GroupFamily::SOPlus | GroupFamily::CSOPlus);
            let qn = pw(&qb, n);
            let middle = if plus { qn - &one } else { qn + &one };
            pw(&qb, n * (n - 1)) * middle * sym_prod(n - 1) * conformal
        }
    })
}

/// Frobenius orbits of the non-zero residues mod `p^a`, with the pairing `t ↦ t̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PClassSet {
    pub modulus: u64,
    /// Each class sorted; classes ordered by smallest element.
    pub classes: Vec<Vec<u64>>,
    /// `involution[c]` is the class of `t̄` for `t` in class `c`.
    pub involution: Vec<usize>,
    #[serde(skip)]
    class_of: BTreeMap<u64, usize>,
}

impl PClassSet {
    /// Orbits under `u ↦ q·u`; the pairing is `u ↦ twist·u`.
    pub fn new(q: u64, modulus: u64, d: usize, twist: u64) -> Result<Self> {
        if modulus > MAX_CLASS_MODULUS {
            return Err(Error::Unsupported(format!("class modulus {modulus} exceeds {MAX_CLASS_MODULUS}")));
        }
        let mul = |u: u64, k: u64| ((u as u128 * k as u128) % modulus as u128) as u64;
        let mut class_of = BTreeMap::new();
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for u in 1..modulus {
            if class_of.contains_key(&u) {
                continue;
            }
            let mut orbit = vec![u];
            let mut v = mul(u, q);
            while v != u {
                orbit.push(v);
                v = mul(v, q);
            }
            if orbit.len() != d {
                return Err(Error::InvalidParameters(format!(
                    "orbit of {u} mod {modulus} has size {} instead of {d}",
                    orbit.len()
                )));
            }
            orbit.sort_unstable();
            for &x in &orbit {
                class_of.insert(x, classes.len());
            }
            classes.push(orbit);
        }
        let mut involution = Vec::with_capacity(classes.len());
        for (c, orbit) in classes.iter().enumerate() {
            let image = class_of[&mul(orbit[0], twist)];
            if orbit.iter().any(|&u| class_of[&mul(u, twist)] != image) {
                return Err(Error::InvalidParameters(format!("pairing is not well defined on class {c}")));
            }
            if image == c {
                return Err(Error::SelfPairedClass(c));
            }
            involution.push(image);
        }
        if (0..classes.len()).any(|c| involution[involution[c]] != c) {
            return Err(Error::InvalidParameters("pairing is not an involution".into()));
        }
        Ok(PClassSet { modulus, classes, involution, class_of })
    }

    /// The class set at `(q, p)`; the pairing is twisted by `-q0` for U.
    pub fn for_params(q: u64, p: u64, params: &DerivedParams) -> Result<Self> {
        let modulus = p
            .checked_pow(params.a)
            .filter(|&m| m <= MAX_CLASS_MODULUS)
            .ok_or_else(|| Error::Unsupported(format!("class modulus {p}^{} is too large", params.a)))?;
        let twist = match params.q0 {
            Some(q0) => modulus - q0 % modulus,
            None => modulus - 1,
        };
        PClassSet::new(q, modulus, params.d, twist)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, u: u64) -> Option<usize> {
        self.class_of.get(&u).copied()
    }

    /// Pairs `(c, c̄)` with `c < c̄`, in increasing order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter(|&c| c < self.involution[c]).map(|c| (c, self.involution[c])).collect()
    }

    /// Index of the pair containing class `c` in [`PClassSet::pairs`].
    pub fn pair_index(&self, c: usize) -> usize {
        let lo = c.min(self.involution[c]);
        (0..lo).filter(|&x| x < self.involution[x]).count()
    }
}

/// The runner gap condition on `2d` bead counts.
pub fn gap_condition_holds(case: CaseTag, d: usize, w: usize, counts: &[usize]) -> bool {
    assert_eq!(counts.len(), 2 * d, "expected 2d bead counts");
    let gap = w as i64 - 1;
    let ok = |i: usize, j: usize| counts[i] as i64 + gap <= counts[j] as i64;
    match case {
        CaseTag::One => (0..(2 * d).saturating_sub(2)).all(|i| ok(i, i + 2)),
        _ => (0..d - 1).chain(d..2 * d - 1).all(|i| ok(i, i + 1)),
    }
}

/// A fixed representation of a core on `2d` runners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinnedCore {
    pub case: CaseTag,
    pub d: usize,
    /// Number of 1-shifts applied to the minimal representation.
    pub shift: usize,
    /// For symbols: whether the second canonical half sits on runners `0..d`.
    pub swapped: bool,
    /// Case 1: the beta-set on the `2d`-abacus. Otherwise the half on runners `0..d`.
    pub left: BetaSet,
    /// Otherwise: the half on runners `d..2d`.
    pub right: Option<BetaSet>,
    pub counts: Vec<usize>,
}

impl PinnedCore {
    pub fn runner_count(&self) -> usize {
        2 * self.d
    }

    /// The unipotent label whose runner partitions are `runners`.
    pub fn reconstruct(&self, runners: &[Partition]) -> Result<UnipotentLabel> {
        match &self.right {
            None => {
                let beta = beta_from_quotient(runners, &self.counts)?;
                Ok(UnipotentLabel::Partition(partition_of_beta(&beta)))
            }
            Some(_) => {
                let (x, y) = halves_from_runners(runners, &self.counts)?;
                Ok(UnipotentLabel::symbol(canonical_symbol(&x, &y)))
            }
        }
    }
}

fn symbol_runner_counts(x: &BetaSet, y: &BetaSet, d: usize) -> Vec<usize> {
    let mut c = x.runner_counts(d);
    c.extend(y.runner_counts(d));
    c
}

/// Candidate representations of `rho`: `(shift, swapped, left, right, counts)`.
fn representation(
    case: CaseTag,
    d: usize,
    rho: &UnipotentLabel,
    k: usize,
    swapped: bool,
) -> (BetaSet, Option<BetaSet>, Vec<usize>) {
    match rho {
        UnipotentLabel::Partition(p) => {
            debug_assert_eq!(case, CaseTag::One);
            let beta = shift(&minimal_beta(p), k);
            let counts = beta.runner_counts(2 * d);
            (beta, None, counts)
        }
        UnipotentLabel::Symbol { symbol, .. } => {
            let (mut x, mut y) = symbol.shifted(k);
            if swapped {
                std::mem::swap(&mut x, &mut y);
            }
            let counts = symbol_runner_counts(&x, &y, d);
            (x, Some(y), counts)
        }
    }
}

fn orientations(rho: &UnipotentLabel) -> &'static [bool] {
    match rho {
        UnipotentLabel::Symbol { symbol, .. } if !symbol.is_degenerate() => &[false, true],
        _ => &[false],
    }
}

/// The smallest representation of `rho` satisfying the gap condition with
/// the first `w` rows of the `2d` runners full.
pub fn pin_core(case: CaseTag, d: usize, w: usize, rho: &UnipotentLabel) -> Option<PinnedCore> {
    let e = if case == CaseTag::One { 2 * d } else { d };
    for k in 0..e * w + e {
        for &swapped in orientations(rho) {
            let (left, right, counts) = representation(case, d, rho, k, swapped);
            let full = left.has_prefix(e * w) && right.as_ref().is_none_or(|r| r.has_prefix(e * w));
            if full && gap_condition_holds(case, d, w, &counts) {
                return Some(PinnedCore { case, d, shift: k, swapped, left, right, counts });
            }
        }
    }
    None
}

/// Why `rho` is not an admissible core for `(family, d, w)`, if it is not.
pub fn admissibility_failure(
    family: GroupFamily,
    d: usize,
    w: usize,
    rho: &UnipotentLabel,
) -> Option<String> {
    let Some(case) = family.case() else {
        return Some("GL is not one of the supported cases".into());
    };
    match (case, rho) {
        (CaseTag::One, UnipotentLabel::Partition(p)) => {
            let (_, weight) = beta_core(&minimal_beta(p), 2 * d);
            if weight > 0 {
                return Some(format!("{p} is not a {}-core", 2 * d));
            }
        }
        (CaseTag::One, _) => return Some("case 1 cores are partitions".into()),
        (_, UnipotentLabel::Symbol { symbol, .. }) => {
            if beta_core(symbol.x(), d).1 + beta_core(symbol.y(), d).1 > 0 {
                return Some(format!("{symbol} is not a {d}-core"));
            }
            if symbol.rank() == 0 {
                return Some("the core must have non-zero rank".into());
            }
            if !family.defect_allowed(symbol.defect()) {
                return Some(format!("defect {} is not allowed for {}", symbol.defect(), family.name()));
            }
        }
        (_, UnipotentLabel::Partition(_)) => return Some("cases 2-4 cores are symbols".into()),
    }
    let e = if case == CaseTag::One { 2 * d } else { d };
    let gap_ok = (0..e).any(|k| {
        orientations(rho).iter().any(|&s| {
            let (_, _, counts) = representation(case, d, rho, k, s);
            gap_condition_holds(case, d, w, &counts)
        })
    });
    if !gap_ok {
        return Some(format!("no representation of {rho} satisfies the runner gap condition for w = {w}"));
    }
    None
}

/// Whether `rho` is an admissible core for `(family, d, w)`.
pub fn admissible_core(family: GroupFamily, d: usize, w: usize, rho: &UnipotentLabel) -> bool {
    admissibility_failure(family, d, w, rho).is_none()
}

/// Whether the given representation of `rho` (bead counts on `2d` runners)
/// passes the gap condition, on top of the label checks.
pub fn admissible_representation(
    family: GroupFamily,
    d: usize,
    w: usize,
    rho: &UnipotentLabel,
    counts: &[usize],
) -> bool {
    let Some(case) = family.case() else { return false };
    admissible_core(family, d, w, rho) && counts.len() == 2 * d && gap_condition_holds(case, d, w, counts)
}

/// Matrix degree `m` for a core of rank `r`.
pub fn m_of_w(case: CaseTag, r: usize, d: usize, w: usize) -> usize {
    match case {
        CaseTag::One => r + 2 * d * w,
        CaseTag::Three => 2 * (r + d * w) + 1,
        _ => 2 * (r + d * w),
    }
}

fn chains(len: usize, step: i64, bound: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, step: i64, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map_or(0, |&c| (c as i64 + step).max(0) as usize);
        for v in lo..=bound {
            cur.push(v);
            go(len, step, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, step, bound, &mut Vec::new(), &mut out);
    out
}

/// Searches bead-count vectors satisfying the gap condition for the core of
/// least rank (ties broken by rendering).
pub fn minimal_core(family: GroupFamily, d: usize, w: usize) -> Result<UnipotentLabel> {
    let case = family
        .case()
        .ok_or_else(|| Error::Unsupported("GL blocks are not part of the construction".into()))?;
    let bound = w.saturating_sub(1) * (d - 1) + 5;
    let chain = chains(d, w as i64 - 1, bound);
    if chain.len().saturating_mul(chain.len()) > 20_000_000 {
        return Err(Error::Unsupported(format!("minimal core search for d = {d} is too large")));
    }
    let mut best: Option<(usize, String, UnipotentLabel)> = None;
    for a in &chain {
        for b in &chain {
            let label = if case == CaseTag::One {
                let counts: Vec<usize> =
                    (0..2 * d).map(|i| if i % 2 == 0 { a[i / 2] } else { b[i / 2] }).collect();
                UnipotentLabel::Partition(partition_of_beta(&BetaSet::from_runner_counts(&counts)))
            } else {
                let x = BetaSet::from_runner_counts(a);
                let y = BetaSet::from_runner_counts(b);
                let defect = x.len().abs_diff(y.len());
                if !family.defect_allowed(defect) || rank_of_halves(&x, &y) == 0 {
                    continue;
                }
                UnipotentLabel::symbol(canonical_symbol(&x, &y))
            };
            let key = (label.rank(), label.to_string());
            if best.as_ref().is_none_or(|(r, s, _)| (key.0, &key.1) < (*r, s)) {
                best = Some((key.0, key.1, label));
            }
        }
    }
    best.map(|(_, _, l)| l)
        .ok_or_else(|| Error::Inadmissible(format!("no admissible core found for d = {d}, w = {w}")))
}

/// Sizes attached to a block context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sizes {
    /// Order of the defect group `P`.
    pub defect_group: BigUint,
    /// `|N| / |L| = 2^w w!`.
    pub n_over_l: BigUint,
}

/// Everything derived from `(G, q, p, w, ρ)`.
#[derive(Clone, Debug, Serialize)]
pub struct BlockContext {
    pub family: GroupFamily,
    pub case: CaseTag,
    pub q: u64,
    pub q0: Option<u64>,
    pub p: u64,
    pub d: usize,
    pub e: usize,
    pub a: u32,
    pub linear: bool,
    pub w: usize,
    pub rho: UnipotentLabel,
    pub pinned: PinnedCore,
    pub m: usize,
    pub classes: PClassSet,
}

impl BlockContext {
    /// Validates parameters and the core; `rho = None` picks [`minimal_core`].
    pub fn new(family: GroupFamily, q: u64, p: u64, w: usize, rho: Option<UnipotentLabel>) -> Result<Self> {
        let case = family
            .case()
            .ok_or_else(|| Error::Unsupported("GL blocks are not part of the construction".into()))?;
        let params = derive_params(family, q, p)?;
        if !params.linear {
            return Err(Error::InvalidParameters(format!(
                "p = {p} is not a linear prime for {} at q = {q}",
                family.name()
            )));
        }
        if w as u64 >= p {
            return Err(Error::InvalidParameters(format!("weight w = {w} must be below p = {p}")));
        }
        let d = params.d;
        let rho = match rho {
            Some(r) => r.with_primed(false),
            None => minimal_core(family, d, w)?,
        };
        if let Some(why) = admissibility_failure(family, d, w, &rho) {
            return Err(Error::Inadmissible(why));
        }
        let pinned = pin_core(case, d, w, &rho)
            .ok_or_else(|| Error::Inadmissible(format!("no pinned representation of {rho}")))?;
        let classes = PClassSet::for_params(q, p, &params)?;
        let m = m_of_w(case, rho.rank(), d, w);
        Ok(BlockContext {
            family,
            case,
            q,
            q0: params.q0,
            p,
            d,
            e: params.e,
            a: params.a,
            linear: params.linear,
            w,
            rho,
            pinned,
            m,
            classes,
        })
    }

    /// Rank `r` of the core.
    pub fn r(&self) -> usize {
        self.rho.rank()
    }

    pub fn is_degenerate(&self) -> bool {
        self.rho.is_degenerate()
    }

    /// Number of central labels `κ`: `(q-1)_p` for conformal families, else 1.
    pub fn kappa_range(&self) -> u64 {
        if self.family.is_conformal() {
            let v = p_valuation(&BigUint::from(self.q - 1), self.p);
            self.p.pow(v)
        } else {
            1
        }
    }

    pub fn group_order(&self) -> BigUint {
        group_order(self.family, self.q, self.m).expect("context degree has the right parity")
    }

    pub fn sizes(&self) -> Sizes {
        let defect_group =
            BigUint::from(self.kappa_range()) * Pow::pow(BigUint::from(self.p), self.a as usize * self.w);
        let n_over_l = (1..=self.w).map(BigUint::from).product::<BigUint>() << self.w;
        Sizes { defect_group, n_over_l }
    }
}

/// A core label parsed for the family: symbols for cases 2-4, partitions otherwise.
pub fn parse_core(family: GroupFamily, s: &str) -> Result<UnipotentLabel> {
    let label: UnipotentLabel = s.parse()?;
    match (family.uses_symbols(), &label) {
        (true, UnipotentLabel::Symbol { .. }) | (false, UnipotentLabel::Partition(_)) => Ok(label),
        _ => Err(Error::LabelMismatch(format!("`{s}` is not a core label for {}", family.name()))),
    }
}

/// The symbol `(X, Y)` as given, for tests and fixtures.
pub fn symbol_label(x: &[usize], y: &[usize]) -> UnipotentLabel {
    UnipotentLabel::symbol(Symbol::new(
        BetaSet::new(x.to_vec()).expect("valid beta-set"),
        BetaSet::new(y.to_vec()).expect("valid beta-set"),
    ))
}
