//! Rainbow progressions: color [n] with every color used at most m times
//! and find a progression with pairwise distinct colors.
//!
//! ```bash
//! cargo run -p indap --example rainbow_coloring
//! ```

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use indap::finder::{find_rainbow_ap, sr_upper_bound};
use indap::graph::Coloring;
use indap::sieve::build_sieve;
use indap::FinderConfig;

fn main() {
    let (m, k) = (3usize, 3usize);
    let cfg = FinderConfig::default();

    // At this n, every multiplicity-m coloring contains a rainbow k-term
    // progression; the bound is ceil(m k^2 ln k / epsilon).
    let n = sr_upper_bound(m, k, &cfg).unwrap();
    let table = build_sieve(n).unwrap();
    println!("m = {m}, k = {k}: guaranteed from n = {n}");

    // A shuffled pool with each color exactly m times.
    let t = n.div_ceil(m);
    let mut ids: Vec<usize> = (0..t * m).map(|i| i / m).collect();
    ids.shuffle(&mut ChaCha8Rng::seed_from_u64(7));
    ids.truncate(n);
    let c = Coloring::from_class_ids(&ids).unwrap();
    let w = find_rainbow_ap(&c, k, &cfg, &table).expect("guaranteed at this n");
    let colors: Vec<usize> = w.progression.elements().iter().map(|&x| c.color_of(x)).collect();
    println!(
        "random coloring ({} colors): rainbow {:?} with colors {:?}",
        c.color_count(),
        w.progression.elements(),
        colors,
    );

    // Contiguous blocks are the structured extreme.
    let blocks: Vec<usize> = (0..n).map(|i| i / m).collect();
    let c = Coloring::from_class_ids(&blocks).unwrap();
    let w = find_rainbow_ap(&c, k, &cfg, &table).expect("guaranteed at this n");
    println!("block coloring: rainbow {:?}", w.progression.elements());

    // Below k distinct colors no rainbow progression can exist.
    let c = Coloring::from_class_ids(&vec![0usize; 10]).unwrap();
    assert!(find_rainbow_ap(&c, k, &cfg, &build_sieve(10).unwrap()).is_none());
    println!("constant coloring of [10]: none, as it must be");
}
