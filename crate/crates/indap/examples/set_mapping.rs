//! Progressions a permutation maps entirely off themselves, under both
//! fixed-point conventions.
//!
//! ```bash
//! cargo run -p indap --example set_mapping
//! ```

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use indap::finder::{find_unmapped_ap, n0_upper_bound};
use indap::graph::{FixedPointMode, PermutationMap};
use indap::sieve::build_sieve;
use indap::FinderConfig;

fn main() {
    let k = 3usize;
    let cfg = FinderConfig::default();
    let table = build_sieve(100).unwrap();

    // From this n on, every permutation leaves some k-term progression
    // free: a permutation graph has at most n edges, within the certified
    // budget.
    let n = n0_upper_bound(k, &cfg, &table, 100).unwrap();
    println!("k = {k}: every permutation of [{n}] leaves a progression free");

    let rev = PermutationMap::reversal(n).unwrap();
    let w = find_unmapped_ap(&rev, k, FixedPointMode::Strict, &cfg, &table).unwrap();
    println!("reversal, strict: {:?} (certified: {})", w.progression.elements(), w.certified);

    let mut image: Vec<usize> = (1..=n).collect();
    image.shuffle(&mut ChaCha8Rng::seed_from_u64(3));
    let p = PermutationMap::from_image(image).unwrap();
    let w = find_unmapped_ap(&p, k, FixedPointMode::Weak, &cfg, &table).unwrap();
    let images: Vec<usize> = w.progression.elements().iter().map(|&x| p.apply(x)).collect();
    println!(
        "random permutation, weak: {:?} maps to {:?}",
        w.progression.elements(),
        images,
    );

    // The two conventions split on the identity: strict forbids every
    // fixed point, weak ignores them.
    let id = PermutationMap::identity(n).unwrap();
    assert!(find_unmapped_ap(&id, k, FixedPointMode::Strict, &cfg, &table).is_none());
    let w = find_unmapped_ap(&id, k, FixedPointMode::Weak, &cfg, &table).unwrap();
    println!(
        "identity: strict finds nothing, weak accepts {:?}",
        w.progression.elements(),
    );
}
