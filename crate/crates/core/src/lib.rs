//! Exact combinatorics for unipotent blocks of finite classical groups at
//! linear primes: partitions and symbols on the abacus, Littlewood-Richardson
//! and Weyl group branching, Harish-Chandra induction on unipotent labels,
//! block parameters, and a verifier for the rank identity
//! `dim End = 2^w · w! · dim KLf`.

pub mod error;
pub mod induction;
pub mod label;
pub mod params;
pub mod partition;
pub mod poly;
pub mod symbol;
pub mod tableaux;
pub mod verifier;
pub mod weyl;

pub use error::{Error, Result};
pub use induction::{
    aba_complement, bead_slide_targets, induce_unipotent_all, induce_unipotent_mult, labels_over_core,
    pinned_runners,
};
pub use label::UnipotentLabel;
pub use params::{
    admissible_core, derive_params, group_order, minimal_core, BlockContext, CaseTag, DerivedParams,
    GroupFamily, PClassSet, PinnedCore,
};
pub use partition::{
    beta_of_partition, e_core_and_weight, e_quotient, hooks, partition_from_core_and_quotient,
    partition_of_beta, remove_hook, shift, AbacusView, BetaSet, Hook, Partition,
};
pub use poly::FormalPolynomial;
pub use symbol::{canonical_symbol, defect_and_rank, smn_relabel, symbol_e_core, SmnLabel, Symbol};
pub use tableaux::{lr_coeff, syt_count};
pub use verifier::{
    enumerate_block_labels, induced_expansion, verify_rank_identity, CharLabel, DimScheme, RankReport,
    TargetLabel,
};
pub use weyl::{branch_a, branch_b, branch_d, BCharLabel, DCharLabel};
