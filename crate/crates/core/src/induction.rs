//! Harish-Chandra induction multiplicities on unipotent labels and the
//! bead-slide description used for blocks at linear primes.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::label::UnipotentLabel;
use crate::params::{CaseTag, GroupFamily, PinnedCore};
use crate::partition::{beta_of_partition, beta_quotient, multipartitions, partitions_of, shift, Partition};
use crate::symbol::{from_smn, partition_from_smn, partition_smn, smn_relabel, SmnLabel};
use crate::tableaux::lr_coeff;
use crate::weyl::{branch_b, branch_d, BCharLabel, DCharLabel};

/// The hook partition `(α+1, 1^{d-α-1})` attached to runner `α`.
pub fn aba_complement(d: usize, alpha: usize) -> Result<Partition> {
    if alpha >= d {
        return Err(Error::InvalidParameters(format!("runner {alpha} out of range for d = {d}")));
    }
    let mut parts = vec![alpha + 1];
    parts.extend(std::iter::repeat_n(1, d - alpha - 1));
    Partition::new(parts)
}

/// Checks that `label` is a unipotent label of `family`.
pub fn check_label(family: GroupFamily, label: &UnipotentLabel) -> Result<()> {
    match (family, label) {
        (GroupFamily::GL | GroupFamily::U, UnipotentLabel::Partition(_)) => Ok(()),
        (GroupFamily::GL | GroupFamily::U, _) => Err(Error::LabelMismatch(format!(
            "{} characters are labeled by partitions, got {label}",
            family.name()
        ))),
        (_, UnipotentLabel::Partition(_)) => Err(Error::LabelMismatch(format!(
            "{} characters are labeled by symbols, got {label}",
            family.name()
        ))),
        (_, UnipotentLabel::Symbol { symbol, primed }) => {
            if !family.defect_allowed(symbol.defect()) {
                return Err(Error::LabelMismatch(format!(
                    "defect {} is not allowed for {}",
                    symbol.defect(),
                    family.name()
                )));
            }
            let plus = matches!(family, GroupFamily::SOPlus | GroupFamily::CSOPlus);
            if *primed && !plus {
                return Err(Error::LabelMismatch(format!(
                    "primed labels only occur for so-plus and cso-plus, not {}",
                    family.name()
                )));
            }
            Ok(())
        }
    }
}

fn smn_of(label: &UnipotentLabel) -> SmnLabel {
    match label {
        UnipotentLabel::Partition(p) => partition_smn(p),
        UnipotentLabel::Symbol { symbol, .. } => smn_relabel(symbol),
    }
}

/// Multiplicity of `target` in `R_L^G(χ_γ ⊗ χ_source)` for `L = GL_k × G'`.
///
/// GL uses Littlewood-Richardson coefficients. The other families compare
/// `(s, μ, ν)` labels: the multiplicity is zero unless the `s` agree, and is
/// then a type B branching number in `W_v` with `v = |μ| + |ν|` of the target.
/// For so-plus and cso-plus with `s = 0` the type D rule is used instead.
pub fn induce_unipotent_mult(
    family: GroupFamily,
    gamma: &Partition,
    source: &UnipotentLabel,
    target: &UnipotentLabel,
) -> Result<u64> {
    check_label(family, source)?;
    check_label(family, target)?;
    if family == GroupFamily::GL {
        let (UnipotentLabel::Partition(a), UnipotentLabel::Partition(b)) = (source, target) else {
            unreachable!("checked above");
        };
        return Ok(lr_coeff(gamma, a, b));
    }
    let src = smn_of(source);
    let tgt = smn_of(target);
    if src.s != tgt.s {
        return Ok(0);
    }
    let plus = matches!(family, GroupFamily::SOPlus | GroupFamily::CSOPlus);
    if plus && src.s == 0 {
        let a = DCharLabel::new(src.mu, src.nu, source.primed())?;
        let b = DCharLabel::new(tgt.mu, tgt.nu, target.primed())?;
        return branch_d(&a, gamma, &b);
    }
    Ok(branch_b(&BCharLabel::new(src.mu, src.nu), gamma, &BCharLabel::new(tgt.mu, tgt.nu)))
}

/// Every target with non-zero multiplicity, in label order.
pub fn induce_unipotent_all(
    family: GroupFamily,
    gamma: &Partition,
    source: &UnipotentLabel,
) -> Result<Vec<(UnipotentLabel, u64)>> {
    check_label(family, source)?;
    let k = gamma.size();
    let candidates: Vec<UnipotentLabel> = match (family, source) {
        (GroupFamily::GL, UnipotentLabel::Partition(p)) => {
            partitions_of(p.size() + k).into_iter().map(UnipotentLabel::Partition).collect()
        }
        _ => {
            let src = smn_of(source);
            let n = src.mu.size() + src.nu.size() + k;
            let mut out = BTreeSet::new();
            for pair in multipartitions(n, 2) {
                let l = SmnLabel::new(src.s, pair[0].clone(), pair[1].clone());
                if family == GroupFamily::U {
                    out.insert(UnipotentLabel::Partition(partition_from_smn(&l)?));
                } else {
                    let sym = from_smn(&l);
                    let plus = matches!(family, GroupFamily::SOPlus | GroupFamily::CSOPlus);
                    if plus && sym.is_degenerate() {
                        out.insert(UnipotentLabel::Symbol { symbol: sym.clone(), primed: true });
                    }
                    out.insert(UnipotentLabel::symbol(sym));
                }
            }
            out.into_iter().collect()
        }
    };
    let mut result = Vec::new();
    for t in candidates {
        let m = match induce_unipotent_mult(family, gamma, source, &t) {
            Err(Error::Unsupported(_)) => continue,
            other => other?,
        };
        if m > 0 {
            result.push((t, m));
        }
    }
    if source.is_degenerate() && result.iter().any(|(t, _)| t.is_degenerate()) {
        return Err(Error::Unsupported("type D branching between two degenerate labels".into()));
    }
    Ok(result)
}

/// The two runners a slide for hook `α` may use.
pub fn slide_runners(case: CaseTag, d: usize, alpha: usize) -> [usize; 2] {
    match case {
        CaseTag::One => [2 * alpha, 2 * alpha + 1],
        _ => [alpha, alpha + d],
    }
}

/// Runner partitions of `label` on the pinned representation of its core.
pub fn pinned_runners(pinned: &PinnedCore, label: &UnipotentLabel) -> Result<Vec<Partition>> {
    let d = pinned.d;
    let mismatch = || {
        Error::LabelMismatch(format!(
            "{label} does not fit the bead counts {:?} of the pinned core",
            pinned.counts
        ))
    };
    match (label, &pinned.right) {
        (UnipotentLabel::Partition(p), None) => {
            let total: usize = pinned.counts.iter().sum();
            let beta = beta_of_partition(p, total).map_err(|_| mismatch())?;
            if beta.runner_counts(2 * d) != pinned.counts {
                return Err(mismatch());
            }
            Ok(beta_quotient(&beta, 2 * d))
        }
        (UnipotentLabel::Symbol { symbol, .. }, Some(_)) => {
            let left: usize = pinned.counts[..d].iter().sum();
            let right: usize = pinned.counts[d..].iter().sum();
            for (a, b) in [(symbol.x(), symbol.y()), (symbol.y(), symbol.x())] {
                if a.len() > left || left - a.len() + b.len() != right {
                    continue;
                }
                let k = left - a.len();
                let (a, b) = (shift(a, k), shift(b, k));
                let mut counts = a.runner_counts(d);
                counts.extend(b.runner_counts(d));
                if counts == pinned.counts {
                    let mut runners = beta_quotient(&a, d);
                    runners.extend(beta_quotient(&b, d));
                    return Ok(runners);
                }
            }
            Err(mismatch())
        }
        _ => Err(mismatch()),
    }
}

/// All labels obtained from `tau` by sliding one bead one row down on
/// either runner designated by hook `α`, each with multiplicity 1.
///
/// A degenerate target is listed in both versions.
pub fn bead_slide_targets(
    pinned: &PinnedCore,
    alpha: usize,
    tau: &UnipotentLabel,
) -> Result<Vec<(UnipotentLabel, u64)>> {
    if alpha >= pinned.d {
        return Err(Error::InvalidParameters(format!("runner {alpha} out of range for d = {}", pinned.d)));
    }
    let runners = pinned_runners(pinned, tau)?;
    let mut out = BTreeSet::new();
    for r in slide_runners(pinned.case, pinned.d, alpha) {
        for grown in runners[r].add_box_all() {
            let mut next = runners.clone();
            next[r] = grown;
            let label = pinned.reconstruct(&next)?;
            if label.is_degenerate() {
                out.insert(label.with_primed(true));
            }
            out.insert(label);
        }
    }
    Ok(out.into_iter().map(|l| (l, 1)).collect())
}

/// Every label of weight `v` over the pinned core, both versions of
/// degenerate symbols included.
pub fn labels_over_core(pinned: &PinnedCore, v: usize) -> Result<Vec<UnipotentLabel>> {
    let mut out = BTreeSet::new();
    for runners in multipartitions(v, 2 * pinned.d) {
        let label = pinned.reconstruct(&runners)?;
        if label.is_degenerate() {
            out.insert(label.with_primed(true));
        }
        out.insert(label);
    }
    Ok(out.into_iter().collect())
}
