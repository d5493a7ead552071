//! How tight are the certificates? Measure the survival fraction of random
//! graphs as the edge count passes the certified budget, and probe the
//! permutation threshold exhaustively at small n.
//!
//! ```bash
//! cargo run -p indap --example tightness_probe
//! ```

use indap::extremal::{n0_probe, SearchBudget};
use indap::finder::{certified_edge_budget, empirical_probe, selected_family};
use indap::graph::FixedPointMode;
use indap::sieve::build_sieve;
use indap::FinderConfig;

fn main() {
    let (n, k) = (80usize, 3usize);
    let cfg = FinderConfig::default();
    let table = build_sieve(n).unwrap();
    let family = selected_family(n, k, &cfg);
    let budget = certified_edge_budget(n, k, family, &table);

    // At or below the budget the fraction is exactly 1 (that is the
    // certificate); past it the guarantee lapses gradually, not at once.
    println!("n = {n}, k = {k}, certified budget = {budget} edges");
    for mult in [1usize, 2, 4, 6, 8, 9, 10, 11] {
        let e = (budget * mult).min(n * (n - 1) / 2);
        let fraction = empirical_probe(n, k, e, 200, 1, &table).unwrap();
        println!("  {e:>5} edges ({mult:>2}x budget): fraction {fraction:.3}");
    }

    // Exhaustive probe of the permutation threshold for weak fixed
    // points: bad permutations (leaving no progression free) per n.
    let rep = n0_probe(3, FixedPointMode::Weak, 8, &SearchBudget::default(), Some(18));
    println!("weak permutation probe, k = 3, horizon {}:", rep.n_max);
    for v in &rep.verdicts {
        match (v.bad_exists, &v.witness) {
            (Some(true), Some(w)) => println!("  n = {}: bad permutation {:?}", v.n, w),
            (Some(false), _) => println!("  n = {}: every permutation leaves one free", v.n),
            _ => println!("  n = {}: unknown (budget)", v.n),
        }
    }
    println!("largest bad n found: {:?} ({})", rep.largest_bad, rep.note);
}
