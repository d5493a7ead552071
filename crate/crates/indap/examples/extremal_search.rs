//! Exhaustive small-case searches: exact sub-Ramsey values and colorings
//! with no rainbow progression, enumerated as canonical set partitions.
//!
//! ```bash
//! cargo run -p indap --example extremal_search
//! ```

use indap::extremal::{
    exists_coloring_without_rainbow, sr_exact, visit_partitions, SearchBudget,
};

fn main() {
    let budget = SearchBudget::default();

    // Least n at which every coloring of [n] with each color used at most
    // twice has a rainbow 3-term progression, proven through the horizon.
    let rep = sr_exact(2, 3, 8, &budget);
    println!("sub-Ramsey(m = 2, k = 3) = {:?} ({:?})", rep.value, rep.outcome);
    for v in &rep.verdicts {
        match (&v.witness, v.bad_exists) {
            (Some(w), _) => println!("  n = {}: bad coloring {:?}", v.n, w),
            (None, Some(false)) => println!("  n = {}: every coloring has a rainbow AP", v.n),
            _ => println!("  n = {}: unknown (budget)", v.n),
        }
    }

    // The search stops at the first witness; here one exists at n = 4.
    let r = exists_coloring_without_rainbow(4, 2, 3, &budget);
    println!(
        "n = 4, m = 2, k = 3: witness {:?} after {} nodes",
        r.witness.map(|c| (1..=c.n()).map(|i| c.color_of(i)).collect::<Vec<_>>()),
        r.nodes,
    );

    // The underlying enumerator walks canonical set partitions; without
    // pruning the leaf counts are the Bell numbers.
    print!("partitions of [n]:");
    for n in 1..=8usize {
        let mut count = 0u64;
        visit_partitions(n, n, None, &budget, |_, _| true, |_, _| {
            count += 1;
            false
        });
        print!(" {count}");
    }
    println!();
}
