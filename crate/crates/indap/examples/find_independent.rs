//! Find a k-term progression that avoids every edge of a graph on [n].
//!
//! ```bash
//! cargo run -p indap --example find_independent
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use indap::finder::{certified_edge_budget, find_independent_ap, random_graph, selected_family};
use indap::sieve::build_sieve;
use indap::FinderConfig;

fn main() {
    let (n, k) = (120usize, 4usize);
    let cfg = FinderConfig::default();
    let table = build_sieve(n).unwrap();

    let family = selected_family(n, k, &cfg);
    let budget = certified_edge_budget(n, k, family, &table);
    println!("n = {n}, k = {k}: family {family}, certified edge budget {budget}");

    // A random graph within the budget always yields a witness.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let g = random_graph(n, budget, &mut rng).unwrap();
    let w = find_independent_ap(&g, k, &cfg, &table).expect("within budget");
    println!(
        "graph with {} edges: independent progression {:?} (family {}, certified: {}, scanned {})",
        g.edge_count(),
        w.progression.elements(),
        w.family_used,
        w.certified,
        w.aps_scanned,
    );

    // Well beyond the budget the finder still scans to completion; the
    // answer is exact either way.
    let g = random_graph(n, budget * 8, &mut rng).unwrap();
    match find_independent_ap(&g, k, &cfg, &table) {
        Some(w) => println!(
            "graph with {} edges: still found {:?} (uncertified: {})",
            g.edge_count(),
            w.progression.elements(),
            !w.certified,
        ),
        None => println!("graph with {} edges: no independent progression", g.edge_count()),
    }
}
