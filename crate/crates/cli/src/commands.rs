use std::collections::BTreeSet;
use std::time::Instant;

use abacus_core::induction::check_label;
use abacus_core::params::{parse_core, PClassSet};
use abacus_core::partition::{beta_quotient, multipartitions, partitions_of};
use abacus_core::symbol::{from_smn, partition_from_smn, symbol_e_core};
use abacus_core::{
    branch_a, branch_b, branch_d, derive_params, e_core_and_weight, induce_unipotent_all,
    induce_unipotent_mult, lr_coeff, verify_rank_identity, BCharLabel, BetaSet, BlockContext, DCharLabel,
    DimScheme, Error, GroupFamily, Partition, Result, SmnLabel, Symbol, UnipotentLabel,
};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "abacus",
    version,
    about = "Abacus combinatorics for unipotent blocks of finite classical groups"
)]
pub struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// e-core and e-weight of a partition or a symbol.
    Core(CoreArgs),
    /// Beta-set, bead counts and e-quotient.
    Quotient(CoreArgs),
    /// Littlewood-Richardson coefficient, or the whole product expansion.
    Lr(LrArgs),
    /// Induction multiplicities in Weyl groups of type A, B or D.
    Branch(BranchArgs),
    /// Harish-Chandra induction on unipotent labels.
    Induce(InduceArgs),
    /// d, e, a and linearity of (family, q, p).
    Params(ParamsArgs),
    /// Core, degree and defect group of a unipotent block.
    Blocks(BlockArgs),
    /// Checks the rank identity of a block as a polynomial identity.
    VerifyRank(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("label").required(true).args(["partition", "symbol"])))]
pub struct CoreArgs {
    /// Partition literal, e.g. 5,5,3,2.
    #[arg(long)]
    partition: Option<String>,
    /// Symbol literal, e.g. 0,1,2|.
    #[arg(long)]
    symbol: Option<String>,
    #[arg(long)]
    e: usize,
    /// Number of beads (partitions only); defaults to the number of parts.
    #[arg(long)]
    beads: Option<usize>,
}

#[derive(Args, Debug)]
pub struct LrArgs {
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: String,
    /// Omit to list every λ with a non-zero coefficient.
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum WeylType {
    A,
    B,
    D,
}

#[derive(Args, Debug)]
pub struct BranchArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    kind: WeylType,
    /// Label of the larger Levi factor: a partition (A) or `a|b` (B, D; `'` marks the second version).
    #[arg(long)]
    alpha: String,
    /// Partition of k for the symmetric group factor.
    #[arg(long)]
    gamma: String,
    /// Target label; omit to list every target with a non-zero multiplicity.
    #[arg(long)]
    beta: Option<String>,
}

#[derive(Args, Debug)]
pub struct InduceArgs {
    #[arg(long)]
    family: GroupFamily,
    /// Partition of d for the GL_d factor.
    #[arg(long)]
    gamma: String,
    /// Partition, symbol `x|y` (with `'` for the second version) or `s:(mu):(nu)`.
    #[arg(long)]
    source: String,
    #[arg(long)]
    target: Option<String>,
    /// One JSON object per target line instead of a single document.
    #[arg(long)]
    lines: bool,
}

#[derive(Args, Debug)]
pub struct ParamsArgs {
    #[arg(long)]
    family: GroupFamily,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    p: u64,
}

#[derive(Args, Debug)]
pub struct BlockArgs {
    #[arg(long)]
    family: GroupFamily,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    w: usize,
    /// Core label; defaults to the minimal admissible core.
    #[arg(long)]
    rho: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    block: BlockArgs,
    /// Expected d; rejected if it differs from ord_p(q).
    #[arg(long)]
    d: Option<usize>,
    /// Worker threads for the parallel reduction.
    #[arg(long)]
    threads: Option<usize>,
    /// Include both polynomials in canonical text form.
    #[arg(long)]
    dump: bool,
    /// Give every character its own variable (expected to break the identity).
    #[arg(long)]
    raw_variables: bool,
}

pub enum Output {
    Document(Value),
    Lines(Vec<String>),
}

pub fn run(cli: Cli) -> Result<Output> {
    Ok(match cli.command {
        Command::Core(a) => Output::Document(core(&a)?),
        Command::Quotient(a) => Output::Document(quotient(&a)?),
        Command::Lr(a) => Output::Document(lr(&a)?),
        Command::Branch(a) => Output::Document(branch(&a)?),
        Command::Induce(a) => induce(&a)?,
        Command::Params(a) => Output::Document(params(&a)?),
        Command::Blocks(a) => Output::Document(blocks(&a)?),
        Command::VerifyRank(a) => Output::Document(verify(&a)?),
    })
}

fn partition(s: &str) -> Result<Partition> {
    s.parse()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn core(a: &CoreArgs) -> Result<Value> {
    if a.e == 0 {
        return Err(Error::InvalidParameters("e must be positive".into()));
    }
    if a.beads.is_some() {
        return Err(Error::InvalidParameters("--beads applies to the quotient subcommand".into()));
    }
    if let Some(p) = &a.partition {
        let (core, weight) = e_core_and_weight(&partition(p)?, a.e);
        return Ok(json!({ "core": core.to_string(), "weight": weight }));
    }
    let symbol: Symbol = a.symbol.as_deref().unwrap_or_default().parse()?;
    let (core, weight) = symbol_e_core(&symbol, a.e);
    Ok(json!({ "copies": core.copies, "core": core.core.to_string(), "weight": weight }))
}

fn quotient(a: &CoreArgs) -> Result<Value> {
    if a.e == 0 {
        return Err(Error::InvalidParameters("e must be positive".into()));
    }
    if let Some(p) = &a.partition {
        let lambda = partition(p)?;
        let beads = a.beads.unwrap_or(lambda.len());
        let beta = abacus_core::beta_of_partition(&lambda, beads)?;
        let q = abacus_core::e_quotient(&lambda, a.e, &beta)?;
        let (core, weight) = e_core_and_weight(&lambda, a.e);
        return Ok(json!({
            "bead_counts": beta.runner_counts(a.e),
            "beta": beta.to_string(),
            "core": core.to_string(),
            "quotient": strings(&q),
            "weight": weight,
        }));
    }
    if a.beads.is_some() {
        return Err(Error::InvalidParameters("--beads applies to partitions only".into()));
    }
    let symbol: Symbol = a.symbol.as_deref().unwrap_or_default().parse()?;
    let halves: [&BetaSet; 2] = [symbol.x(), symbol.y()];
    let mut counts = Vec::new();
    let mut runners = Vec::new();
    for h in halves {
        counts.extend(h.runner_counts(a.e));
        runners.extend(beta_quotient(h, a.e));
    }
    let (core, weight) = symbol_e_core(&symbol, a.e);
    Ok(json!({
        "bead_counts": counts,
        "core": core.core.to_string(),
        "quotient": strings(&runners),
        "symbol": symbol.to_string(),
        "weight": weight,
    }))
}

fn lr(a: &LrArgs) -> Result<Value> {
    let (mu, nu) = (partition(&a.mu)?, partition(&a.nu)?);
    if let Some(l) = &a.lambda {
        return Ok(json!({ "coeff": lr_coeff(&mu, &nu, &partition(l)?) }));
    }
    let terms: Vec<Value> = partitions_of(mu.size() + nu.size())
        .into_iter()
        .filter_map(|l| {
            let c = lr_coeff(&mu, &nu, &l);
            (c > 0).then(|| json!({ "coeff": c, "lambda": l.to_string() }))
        })
        .collect();
    Ok(json!({ "terms": terms }))
}

fn branch(a: &BranchArgs) -> Result<Value> {
    let gamma = partition(&a.gamma)?;
    let entries: Vec<(String, u64)> = match a.kind {
        WeylType::A => {
            let alpha = partition(&a.alpha)?;
            let targets = match &a.beta {
                Some(b) => vec![partition(b)?],
                None => partitions_of(alpha.size() + gamma.size()),
            };
            targets.into_iter().map(|b| (b.to_string(), branch_a(&alpha, &gamma, &b))).collect()
        }
        WeylType::B => {
            let alpha: BCharLabel = a.alpha.parse()?;
            let targets = match &a.beta {
                Some(b) => vec![b.parse()?],
                None => multipartitions(alpha.size() + gamma.size(), 2)
                    .into_iter()
                    .map(|v| BCharLabel::new(v[0].clone(), v[1].clone()))
                    .collect(),
            };
            targets.into_iter().map(|b| (b.to_string(), branch_b(&alpha, &gamma, &b))).collect()
        }
        WeylType::D => {
            let alpha: DCharLabel = a.alpha.parse()?;
            let targets: Vec<DCharLabel> = match &a.beta {
                Some(b) => vec![b.parse()?],
                None => d_labels(alpha.size() + gamma.size())?,
            };
            let mut out = Vec::new();
            for b in targets {
                match branch_d(&alpha, &gamma, &b) {
                    Err(Error::Unsupported(_)) if a.beta.is_none() => continue,
                    r => out.push((b.to_string(), r?)),
                }
            }
            out
        }
    };
    if a.beta.is_some() {
        return Ok(json!({ "mult": entries[0].1 }));
    }
    let terms: Vec<Value> =
        entries.into_iter().filter(|(_, m)| *m > 0).map(|(b, m)| json!({ "beta": b, "mult": m })).collect();
    Ok(json!({ "terms": terms }))
}

fn d_labels(n: usize) -> Result<Vec<DCharLabel>> {
    let mut out = BTreeSet::new();
    for v in multipartitions(n, 2) {
        out.insert(DCharLabel::new(v[0].clone(), v[1].clone(), false)?);
        if v[0] == v[1] {
            out.insert(DCharLabel::new(v[0].clone(), v[1].clone(), true)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// A unipotent label of `family` in any of the accepted literal forms.
fn label(family: GroupFamily, s: &str) -> Result<UnipotentLabel> {
    let s = s.trim();
    let parsed = if s.contains(':') {
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let smn: SmnLabel = body.parse()?;
        match family {
            GroupFamily::GL => {
                return Err(Error::LabelMismatch("GL labels are plain partitions".into()));
            }
            GroupFamily::U if primed => {
                return Err(Error::LabelMismatch("partition labels carry no prime".into()));
            }
            GroupFamily::U => UnipotentLabel::Partition(partition_from_smn(&smn)?),
            _ => UnipotentLabel::primed_symbol(from_smn(&smn), primed)?,
        }
    } else {
        s.parse()?
    };
    check_label(family, &parsed)?;
    Ok(parsed)
}

fn induce(a: &InduceArgs) -> Result<Output> {
    let gamma = partition(&a.gamma)?;
    let source = label(a.family, &a.source)?;
    if let Some(t) = &a.target {
        let target = label(a.family, t)?;
        let mult = induce_unipotent_mult(a.family, &gamma, &source, &target)?;
        let doc = json!({ "mult": mult });
        return Ok(if a.lines { Output::Lines(vec![doc.to_string()]) } else { Output::Document(doc) });
    }
    let targets: Vec<Value> = induce_unipotent_all(a.family, &gamma, &source)?
        .into_iter()
        .map(|(t, m)| json!({ "label": t.to_string(), "mult": m }))
        .collect();
    if a.lines {
        return Ok(Output::Lines(targets.iter().map(Value::to_string).collect()));
    }
    Ok(Output::Document(json!({
        "family": a.family.name(),
        "gamma": gamma.to_string(),
        "source": source.to_string(),
        "targets": targets,
    })))
}

fn params(a: &ParamsArgs) -> Result<Value> {
    let d = derive_params(a.family, a.q, a.p)?;
    let classes = match a.family {
        GroupFamily::GL => Value::Null,
        _ => PClassSet::for_params(a.q, a.p, &d).map_or(Value::Null, |c| json!(c.len())),
    };
    Ok(json!({ "a": d.a, "classes": classes, "d": d.d, "e": d.e, "linear": d.linear }))
}

fn context(a: &BlockArgs) -> Result<BlockContext> {
    let rho = a.rho.as_deref().map(|s| parse_core(a.family, s)).transpose()?;
    BlockContext::new(a.family, a.q, a.p, a.w, rho)
}

fn block_summary(ctx: &BlockContext) -> Value {
    let sizes = ctx.sizes();
    json!({
        "case": ctx.case.to_string(),
        "d": ctx.d,
        "defect_group_order": sizes.defect_group.to_string(),
        "e": ctx.e,
        "family": ctx.family.name(),
        "m": ctx.m,
        "p": ctx.p,
        "pinned": {
            "bead_counts": ctx.pinned.counts,
            "shift": ctx.pinned.shift,
            "swapped": ctx.pinned.swapped,
        },
        "q": ctx.q,
        "rank": ctx.r(),
        "rho": ctx.rho.to_string(),
        "w": ctx.w,
    })
}

fn blocks(a: &BlockArgs) -> Result<Value> {
    let ctx = context(a)?;
    let mut v = block_summary(&ctx);
    v["classes"] = json!(ctx.classes.len());
    v["group_order"] = json!(ctx.group_order().to_string());
    v["n_over_l"] = json!(ctx.sizes().n_over_l.to_string());
    Ok(v)
}

fn verify(a: &VerifyArgs) -> Result<Value> {
    let start = Instant::now();
    let ctx = context(&a.block)?;
    if let Some(d) = a.d {
        if d != ctx.d {
            return Err(Error::InvalidParameters(format!(
                "d = {d} does not match ord_{}({}) = {}",
                ctx.p, ctx.q, ctx.d
            )));
        }
    }
    let scheme = if a.raw_variables { DimScheme::Raw } else { DimScheme::Canonical };
    let report = match a.threads {
        Some(0) => return Err(Error::InvalidParameters("--threads must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParameters(e.to_string()))?
            .install(|| verify_rank_identity(&ctx, scheme))?,
        None => verify_rank_identity(&ctx, scheme)?,
    };
    let mut v = json!({
        "elapsed_ms": start.elapsed().as_millis() as u64,
        "equal": report.equal,
        "label_count": report.label_count,
        "params": block_summary(&ctx),
        "target_count": report.target_count,
    });
    if a.dump {
        v["lhs"] = json!(report.lhs.to_string());
        v["rhs"] = json!(report.rhs.to_string());
    }
    Ok(v)
}
