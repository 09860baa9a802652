//! Mechanical check of the rank identity
//! `Σ_T (mult of T in R(φ))² = 2^w · w! · Σ_χ dim(χ)²`
//! with character dimensions kept as formal variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::induction::{aba_complement, slide_runners};
use crate::label::UnipotentLabel;
use crate::params::BlockContext;
use crate::partition::Partition;
use crate::poly::FormalPolynomial;

/// One `GL_d` factor of a block character of `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Slot {
    /// Trivial semisimple part with the hook partition of runner `α`.
    Hook(usize),
    /// A p-element class (by index into the context's class set) with `(1)`.
    PClass(usize),
}

/// A character of the block of `L = GL_d^w × G'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CharLabel {
    pub slots: Vec<Slot>,
    /// Index of the central element, `0..kappa_range`.
    pub kappa: u64,
    /// Which copy of a degenerate core.
    pub primed: bool,
}

impl CharLabel {
    pub fn hook_count(&self) -> usize {
        self.slots.iter().filter(|s| matches!(s, Slot::Hook(_))).count()
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.slots {
            match s {
                Slot::Hook(a) => write!(f, "h{a} ⊗ ")?,
                Slot::PClass(c) => write!(f, "t{c} ⊗ ")?,
            }
        }
        write!(f, "rho[{}]{}", self.kappa, if self.primed { "'" } else { "" })
    }
}

/// A character of `G` reached by induction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TargetLabel {
    pub kappa: u64,
    /// `(class pair index, ν)` for every pair with non-empty `ν`.
    pub classes: Vec<(usize, Partition)>,
    /// Unipotent component, prime flag included.
    pub mu: UnipotentLabel,
}

impl fmt::Display for TargetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.kappa)?;
        for (pair, nu) in &self.classes {
            write!(f, " T{pair}:({nu})")?;
        }
        write!(f, " {}", self.mu)
    }
}

/// A formal dimension variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DimVar {
    /// `dim χ_{1,λ}` of `GL_d` for a hook partition `λ`.
    Hook(Partition),
    /// Shared by the classes `t` and `t̄` of a pair.
    ClassPair(usize),
    /// One class on its own (only without canonicalization).
    Class(usize),
    /// `dim χ_{κ,ρ}`; `primed` is only ever set without canonicalization.
    Core { kappa: u64, primed: bool },
}

impl fmt::Display for DimVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimVar::Hook(p) => write!(f, "h({p})"),
            DimVar::ClassPair(i) => write!(f, "T{i}"),
            DimVar::Class(c) => write!(f, "t{c}"),
            DimVar::Core { kappa, primed } => {
                write!(f, "rho{kappa}{}", if *primed { "'" } else { "" })
            }
        }
    }
}

/// Whether equal-dimension characters share a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimScheme {
    /// `t`/`t̄` and `ρ`/`ρ'` share variables.
    Canonical,
    /// Every character gets its own variable.
    Raw,
}

pub type DimPoly = FormalPolynomial<DimVar>;

/// A component of a block character, for [`dimension_variable`].
#[derive(Clone, Copy, Debug)]
pub enum Component {
    Slot(Slot),
    Core { kappa: u64, primed: bool },
}

pub fn dimension_variable(ctx: &BlockContext, component: Component, scheme: DimScheme) -> DimVar {
    match (component, scheme) {
        (Component::Slot(Slot::Hook(a)), _) => {
            DimVar::Hook(aba_complement(ctx.d, a).expect("hook index below d"))
        }
        (Component::Slot(Slot::PClass(c)), DimScheme::Canonical) => {
            DimVar::ClassPair(ctx.classes.pair_index(c))
        }
        (Component::Slot(Slot::PClass(c)), DimScheme::Raw) => DimVar::Class(c),
        (Component::Core { kappa, .. }, DimScheme::Canonical) => DimVar::Core { kappa, primed: false },
        (Component::Core { kappa, primed }, DimScheme::Raw) => DimVar::Core { kappa, primed },
    }
}

/// `Π dim` of the components of `label`.
pub fn label_monomial(ctx: &BlockContext, label: &CharLabel, scheme: DimScheme) -> Vec<DimVar> {
    let mut vars: Vec<DimVar> =
        label.slots.iter().map(|&s| dimension_variable(ctx, Component::Slot(s), scheme)).collect();
    vars.push(dimension_variable(ctx, Component::Core { kappa: label.kappa, primed: label.primed }, scheme));
    vars.sort();
    vars
}

/// All block characters of `L`: each slot a hook or a class, every `κ`,
/// and both copies of a degenerate core.
pub fn enumerate_block_labels(ctx: &BlockContext) -> Vec<CharLabel> {
    let options: Vec<Slot> =
        (0..ctx.d).map(Slot::Hook).chain((0..ctx.classes.len()).map(Slot::PClass)).collect();
    let mut tuples: Vec<Vec<Slot>> = vec![Vec::new()];
    for _ in 0..ctx.w {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                options.iter().map(move |&o| {
                    let mut next = t.clone();
                    next.push(o);
                    next
                })
            })
            .collect();
    }
    let primes: &[bool] = if ctx.is_degenerate() { &[false, true] } else { &[false] };
    let mut out = Vec::with_capacity(tuples.len() * ctx.kappa_range() as usize * primes.len());
    for slots in &tuples {
        for kappa in 0..ctx.kappa_range() {
            for &primed in primes {
                out.push(CharLabel { slots: slots.clone(), kappa, primed });
            }
        }
    }
    out
}

type State = (Vec<Partition>, Vec<Partition>);

/// Ordered path counts: runner partitions and per-pair `ν` reached after
/// processing the slots in order.
fn path_counts(ctx: &BlockContext, slots: &[Slot]) -> BTreeMap<State, BigUint> {
    let runners = 2 * ctx.d;
    let pairs = ctx.classes.pairs().len();
    let mut states: BTreeMap<State, BigUint> = BTreeMap::new();
    states.insert((vec![Partition::empty(); runners], vec![Partition::empty(); pairs]), BigUint::one());
    for &slot in slots {
        let mut next: BTreeMap<State, BigUint> = BTreeMap::new();
        for ((rs, nus), count) in &states {
            match slot {
                Slot::Hook(alpha) => {
                    for r in slide_runners(ctx.case, ctx.d, alpha) {
                        for grown in rs[r].add_box_all() {
                            let mut rs2 = rs.clone();
                            rs2[r] = grown;
                            *next.entry((rs2, nus.clone())).or_default() += count;
                        }
                    }
                }
                Slot::PClass(c) => {
                    let i = ctx.classes.pair_index(c);
                    for grown in nus[i].add_box_all() {
                        let mut nus2 = nus.clone();
                        nus2[i] = grown;
                        *next.entry((rs.clone(), nus2)).or_default() += count;
                    }
                }
            }
        }
        states = next;
    }
    states
}

fn class_key(nus: &[Partition]) -> Vec<(usize, Partition)> {
    nus.iter().enumerate().filter(|(_, nu)| !nu.is_empty()).map(|(i, nu)| (i, nu.clone())).collect()
}

/// Multiplicity of every target in the `w`-fold induction of one label.
///
/// For a degenerate core, a non-degenerate target gets the number of ordered
/// slide sequences producing one of its two orientations; a degenerate
/// target reached by at least one slide gets half the count for each of its
/// two versions; without slides the core keeps the label's version.
pub fn induced_expansion(ctx: &BlockContext, label: &CharLabel) -> Result<BTreeMap<TargetLabel, BigUint>> {
    let states = path_counts(ctx, &label.slots);
    let mut out: BTreeMap<TargetLabel, BigUint> = BTreeMap::new();
    let degenerate = ctx.is_degenerate();
    let hooks = label.hook_count();
    let d = ctx.d;
    let two = BigUint::from(2u8);
    for ((rs, nus), count) in &states {
        let mu = ctx.pinned.reconstruct(rs)?;
        let classes = class_key(nus);
        let mut add = |mu: UnipotentLabel, c: BigUint| {
            let key = TargetLabel { kappa: label.kappa, classes: classes.clone(), mu };
            *out.entry(key).or_default() += c;
        };
        if !degenerate {
            if mu.is_degenerate() {
                return Err(Error::Unsupported(format!(
                    "degenerate target {mu} over the non-degenerate core {}",
                    ctx.rho
                )));
            }
            add(mu, count.clone());
            continue;
        }
        if hooks == 0 {
            add(mu.with_primed(label.primed), count.clone());
            continue;
        }
        let swapped: Vec<Partition> = rs[d..].iter().chain(&rs[..d]).cloned().collect();
        if &swapped == rs {
            assert!(mu.is_degenerate(), "symmetric runners must give a degenerate symbol");
            assert!((count % &two).is_zero(), "odd path count onto a degenerate target");
            let half = count / &two;
            add(mu.with_primed(false), half.clone());
            add(mu.with_primed(true), half);
            continue;
        }
        let mirror = ctx.pinned.reconstruct(&swapped)?;
        assert_eq!(mirror, mu, "swapping the halves must give the same symbol");
        assert!(!mu.is_degenerate(), "asymmetric runners gave a degenerate symbol");
        let other = states.get(&(swapped.clone(), nus.clone())).cloned().unwrap_or_default();
        assert_eq!(&other, count, "path counts of mirrored targets differ");
        if rs < &swapped {
            add(mu, count.clone());
        }
    }
    Ok(out)
}

/// Both sides of the identity and the verdict.
#[derive(Clone, Debug)]
pub struct RankReport {
    pub lhs: DimPoly,
    pub rhs: DimPoly,
    pub equal: bool,
    pub label_count: usize,
    pub target_count: usize,
}

/// Computes `Σ_T (Σ_χ mult(χ → T) · dim χ)²` and `2^w · w! · Σ_χ (dim χ)²`.
///
/// Labels are expanded in parallel; the reduction is into ordered maps with
/// exact coefficients, so the result does not depend on scheduling.
pub fn verify_rank_identity(ctx: &BlockContext, scheme: DimScheme) -> Result<RankReport> {
    if ctx.w as u64 >= ctx.p {
        return Err(Error::InvalidParameters("the rank identity needs w < p".into()));
    }
    let labels = enumerate_block_labels(ctx);
    let merge = |mut a: BTreeMap<TargetLabel, DimPoly>, b: BTreeMap<TargetLabel, DimPoly>| {
        for (k, v) in b {
            *a.entry(k).or_default() += &v;
        }
        a
    };
    let per_target: BTreeMap<TargetLabel, DimPoly> = labels
        .par_iter()
        .map(|label| -> Result<BTreeMap<TargetLabel, DimPoly>> {
            let mono = label_monomial(ctx, label, scheme);
            let mut acc = BTreeMap::new();
            for (t, m) in induced_expansion(ctx, label)? {
                acc.insert(t, DimPoly::monomial(mono.clone(), BigInt::from(m)));
            }
            Ok(acc)
        })
        .try_fold(BTreeMap::new, |a, b| b.map(|b| merge(a, b)))
        .try_reduce(BTreeMap::new, |a, b| Ok(merge(a, b)))?;

    let mut lhs = DimPoly::zero();
    for poly in per_target.values() {
        lhs += &poly.square();
    }
    let mut dims = DimPoly::zero();
    for label in &labels {
        let mono = label_monomial(ctx, label, scheme);
        let sq: Vec<DimVar> = mono.iter().chain(&mono).cloned().collect();
        dims.add_term(sq, &BigInt::one());
    }
    let factor: BigInt = (1..=ctx.w).map(BigInt::from).product::<BigInt>() << ctx.w;
    let rhs = dims.scale(&factor);
    Ok(RankReport { equal: lhs == rhs, label_count: labels.len(), target_count: per_target.len(), lhs, rhs })
}

/// `Π_α C(l_α, |σ^α|) syt(σ^α) syt(τ^α) · Π_i syt(ν^i)` for a target given
/// by its runner partitions, where `l_α` counts the hook slots of runner `α`.
pub fn closed_form_multiplicity(
    ctx: &BlockContext,
    label: &CharLabel,
    runners: &[Partition],
    nus: &[Partition],
) -> BigUint {
    use crate::tableaux::{binomial, syt_count};
    let mut l = vec![0usize; ctx.d];
    let mut r = vec![0usize; ctx.classes.pairs().len()];
    for s in &label.slots {
        match *s {
            Slot::Hook(a) => l[a] += 1,
            Slot::PClass(c) => r[ctx.classes.pair_index(c)] += 1,
        }
    }
    let mut total = BigUint::one();
    for (alpha, &la) in l.iter().enumerate() {
        let [a, b] = slide_runners(ctx.case, ctx.d, alpha);
        let (sigma, tau) = (&runners[a], &runners[b]);
        if sigma.size() + tau.size() != la {
            return BigUint::zero();
        }
        total *= binomial(la, sigma.size()) * syt_count(sigma) * syt_count(tau);
    }
    for (nu, &ri) in nus.iter().zip(&r) {
        if nu.size() != ri {
            return BigUint::zero();
        }
        total *= syt_count(nu);
    }
    total
}
