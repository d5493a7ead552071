//! Exact sieve counts behind the difference families: smallest prime
//! factors, prime counts, and rough numbers (no prime factor at or below
//! a threshold).
//!
//! ```bash
//! cargo run -p indap --example sieve_counts
//! ```

use indap::sieve::build_sieve;

fn main() {
    let table = build_sieve(1_000_000).unwrap();

    println!("pi(10^6) = {}", table.prime_count(1_000_000).unwrap());
    for x in [10usize, 100, 1_000, 10_000] {
        println!("pi({x}) = {}", table.prime_count(x).unwrap());
    }

    // rough_count(x, y) counts integers <= x whose prime factors all
    // exceed y, with 1 always included; these are the admissible coprime
    // differences when y = k.
    println!();
    println!("{:>8} {:>6} {:>8}", "x", "y", "rough");
    for (x, y) in [(25usize, 3usize), (100, 5), (1000, 7), (100_000, 11)] {
        println!("{x:>8} {y:>6} {:>8}", table.rough_count(x, y).unwrap());
    }

    // The coprime differences for [n], k: 1 plus every d whose smallest
    // prime factor exceeds k.
    let (n, k) = (60usize, 5usize);
    let diffs = table.coprime_differences(n, k).unwrap();
    println!();
    println!("coprime differences for n = {n}, k = {k}: {diffs:?}");

    // Density of rough numbers normalized by ln(k)/n; the finder's
    // certificate constant is the grid minimum of the derived budget
    // ratio, not of this quantity alone.
    let d = table.rough_density(n, k).unwrap();
    println!("rough density at (n = {n}, k = {k}): {} values, normalized {:.4}", d.count, d.value);
}
