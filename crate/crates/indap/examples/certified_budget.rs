//! Certified edge budgets: how many edges a union-bound argument absorbs
//! before the guarantee of an independent progression lapses.
//!
//! ```bash
//! cargo run -p indap --example certified_budget
//! ```

use indap::finder::{certified_edge_budget, max_pair_hits, selected_family};
use indap::progression::count_aps;
use indap::sieve::build_sieve;
use indap::{DifferenceFamily, FinderConfig};

fn main() {
    let k = 3usize;
    let cfg = FinderConfig::default();
    let table = build_sieve(2_000).unwrap();

    println!("k = {k}: budget = (family size - 1) / max pair hits");
    println!("{:>6} {:>10} {:>12} {:>10} {:>10}", "n", "family", "size", "h_max", "budget");
    for n in [30usize, 60, 120, 197, 198, 400, 1000, 2000] {
        // The family switches from prime to coprime differences once n
        // clears the regime threshold (197 -> 198 for k = 3).
        let family = selected_family(n, k, &cfg);
        let size = count_aps(n, k, family, &table);
        let h_max = max_pair_hits(n, k, family, &table);
        let budget = certified_edge_budget(n, k, family, &table);
        let name = family.to_string();
        println!("{n:>6} {name:>10} {size:>12} {h_max:>10} {budget:>10}");
    }

    // The coprime family admits at most one difference per pair, so its
    // worst-case pair hits stay at k - 1 while the unrestricted family's
    // grow with n.
    let n = 400;
    for family in [
        DifferenceFamily::CoprimeUpTo(k),
        DifferenceFamily::Prime,
        DifferenceFamily::All,
    ] {
        println!(
            "n = {n}, family {family}: h_max = {}, budget = {}",
            max_pair_hits(n, k, family, &table),
            certified_edge_budget(n, k, family, &table),
        );
    }
}
