//! Independent arithmetic progressions in graphs on `[n]`.
//!
//! Given a graph on vertex set `[n]` with few edges, a k-term arithmetic
//! progression none of whose pairs form an edge always exists; this crate
//! makes that constructive. It counts the candidate progression families
//! exactly, certifies how many edges a union-bound argument can absorb,
//! searches for explicit witnesses, and applies the machinery to rainbow
//! progressions under colorings and to progression-free conditions under
//! permutations. Brute-force extremal searches over small ranges provide
//! ground truth for the certified bounds.
//!
//! ```
//! use indap::{build_sieve, find_independent_ap, FinderConfig, IntGraph};
//!
//! # fn main() -> indap::Result<()> {
//! let table = build_sieve(100)?;
//! let cfg = FinderConfig::default();
//! let mut g = IntGraph::empty(100)?;
//! g.add_edge(1, 5)?;
//! let w = find_independent_ap(&g, 3, &cfg, &table).expect("within budget");
//! assert!(w.certified);
//! # Ok(())
//! # }
//! ```

pub mod bitset;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod finder;
pub mod graph;
pub mod progression;
pub mod sieve;

pub use error::{Error, Result};
pub use extremal::{
    coloring_avoids_rainbow, exists_coloring_without_rainbow,
    exists_permutation_without_free_ap, n0_probe, permutation_avoids_free_ap, sr_exact, tk_probe,
    N0ProbeReport, SearchBudget, SearchOutcome, SearchResult, SrExactReport, TkProbeReport,
};
pub use finder::{
    certified_edge_budget, derive_default_epsilon, empirical_probe, find_independent_ap,
    find_independent_ap_in_family, find_rainbow_ap, find_unmapped_ap, max_pair_hits,
    n0_upper_bound, selected_family, sr_upper_bound, tk_upper_bound, FinderConfig, Witness,
    DEFAULT_EPSILON, DEFAULT_ETA,
};
pub use graph::{parse_edge_list, Coloring, FixedPointMode, IntGraph, PermutationMap};
pub use progression::{
    aps_containing_pair, count_aps, enumerate_aps, restricted_family_size, DifferenceFamily,
    Progression,
};
pub use sieve::{build_sieve, build_sieve_with_guard, RoughDensity, SieveTable};
