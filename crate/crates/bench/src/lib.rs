//! Fixed inputs shared by the benchmarks.

use abacus_core::params::{parse_core, symbol_label};
use abacus_core::partition::partitions_of;
use abacus_core::{BlockContext, GroupFamily, Partition, UnipotentLabel};

/// `(μ, ν, λ)` triples with `|λ| = 10`.
pub fn lr_triples() -> Vec<(Partition, Partition, Partition)> {
    let p = |s: &str| s.parse::<Partition>().expect("valid literal");
    vec![
        (p("3,2,1"), p("2,1,1"), p("4,3,2,1")),
        (p("3,2"), p("3,2"), p("4,3,2,1")),
        (p("4,2,1"), p("2,1"), p("5,3,2")),
        (p("2,2,1"), p("3,1,1"), p("4,3,2,1")),
    ]
}

/// Every partition of `n`, for whole-table sweeps.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n)
}

/// Block contexts from the acceptance grid, smallest first.
pub fn grid_contexts() -> Vec<(&'static str, BlockContext)> {
    let ctx = |family, q, p, w, rho: Option<&str>| {
        let rho = rho.map(|s| parse_core(family, s).expect("valid core"));
        BlockContext::new(family, q, p, w, rho).expect("admissible grid point")
    };
    vec![
        ("so_odd_w2", ctx(GroupFamily::SOOdd, 7, 3, 2, None)),
        ("csp_w2", ctx(GroupFamily::CSp, 7, 3, 2, None)),
        ("cso_plus_degenerate_w1", ctx(GroupFamily::CSOPlus, 3, 13, 1, Some("2,5|2,5"))),
        ("u_w2", ctx(GroupFamily::U, 9, 5, 2, None)),
    ]
}

/// A degenerate core for the induction benchmark.
pub fn degenerate_core() -> UnipotentLabel {
    symbol_label(&[2, 5], &[2, 5])
}
