//! Arithmetic progressions in `[n]` under a difference-family constraint.
//!
//! A family restricts which common differences are allowed: every `d`, only
//! primes, or only `d` coprime to each modulus in `2..=k` (equivalently
//! `d = 1` or `spf(d) > k`). Enumeration order is `(diff, start)` ascending
//! throughout, so outputs are deterministic and diffable.

use crate::error::{Error, Result};
use crate::sieve::SieveTable;

/// A `length`-term progression `start, start + diff, ...` with `diff >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Progression {
    pub start: usize,
    pub diff: usize,
    pub length: usize,
}

impl Progression {
    pub fn new(start: usize, diff: usize, length: usize) -> Result<Self> {
        if start < 1 || diff < 1 || length < 1 {
            return Err(Error::InvalidProgression {
                msg: format!("start = {start}, diff = {diff}, length = {length} (all must be >= 1)"),
            });
        }
        Ok(Progression { start, diff, length })
    }

    /// Largest element, `start + (length - 1) * diff`.
    pub fn last(&self) -> usize {
        self.start + (self.length - 1) * self.diff
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.length).map(|i| self.start + i * self.diff).collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= self.start
            && (x - self.start) % self.diff == 0
            && (x - self.start) / self.diff < self.length
    }
}

/// Which common differences a progression may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferenceFamily {
    /// Every `d >= 1`.
    All,
    /// `d = 1` or `spf(d) > k`: coprime to each of `2..=k`.
    CoprimeUpTo(usize),
    /// Prime `d` only.
    Prime,
}

impl DifferenceFamily {
    /// Whether `d` is an allowed difference. Families other than `All`
    /// consult the table, which must cover `d`.
    pub fn admits(&self, d: usize, table: &SieveTable) -> bool {
        match *self {
            DifferenceFamily::All => d >= 1,
            DifferenceFamily::CoprimeUpTo(k) => d == 1 || table.spf(d) > k,
            DifferenceFamily::Prime => d >= 2 && table.spf(d) == d,
        }
    }
}

impl std::fmt::Display for DifferenceFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            DifferenceFamily::All => write!(f, "all"),
            DifferenceFamily::CoprimeUpTo(k) => write!(f, "coprime({k})"),
            DifferenceFamily::Prime => write!(f, "prime"),
        }
    }
}

/// Streams every length-`k` progression inside `[n]` with an admitted
/// difference, each exactly once, ordered by `(diff, start)`. For `k = 1`
/// the `n` singletons are yielded with the conventional `diff = 1`.
pub fn enumerate_aps<'a>(
    n: usize,
    k: usize,
    family: DifferenceFamily,
    table: &'a SieveTable,
) -> Box<dyn Iterator<Item = Progression> + 'a> {
    if k <= 1 {
        return Box::new((1..=n).map(|start| Progression { start, diff: 1, length: 1 }));
    }
    let max_d = if n >= 1 { (n - 1) / (k - 1) } else { 0 };
    Box::new(
        (1..=max_d)
            .filter(move |&d| family.admits(d, table))
            .flat_map(move |d| {
                (1..=n - (k - 1) * d).map(move |start| Progression { start, diff: d, length: k })
            }),
    )
}

/// Exact stream length of `enumerate_aps`, without materializing it:
/// the sum over admitted `d <= (n - 1)/(k - 1)` of `n - (k - 1) d`.
pub fn count_aps(n: usize, k: usize, family: DifferenceFamily, table: &SieveTable) -> usize {
    if k <= 1 {
        return n;
    }
    if n < k {
        return 0;
    }
    let max_d = (n - 1) / (k - 1);
    match family {
        DifferenceFamily::All => {
            // Sum of n - (k-1)d over d = 1..=max_d.
            max_d * n - (k - 1) * (max_d * (max_d + 1) / 2)
        }
        _ => (1..=max_d)
            .filter(|&d| family.admits(d, table))
            .map(|d| n - (k - 1) * d)
            .sum(),
    }
}

/// Size of the restricted sub-family with start in `[floor(n/2)]` and
/// difference in `X ∩ [floor(n/2k)]`, where `X` is the `CoprimeUpTo(k)`
/// difference set. Every such progression ends at
/// `floor(n/2) + (k - 1) floor(n/2k) <= n`, so the whole sub-family lies
/// inside `[n]`.
pub fn restricted_family_size(n: usize, k: usize, table: &SieveTable) -> Result<usize> {
    if k < 1 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    if n < 2 * k {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 2 * k,
            max: table.limit(),
        });
    }
    if n > table.limit() {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 2 * k,
            max: table.limit(),
        });
    }
    let diffs = table.rough_count(n / (2 * k), k)?;
    Ok((n / 2) * diffs)
}

/// All admitted k-term progressions in `[n]` containing both `u` and `v`
/// (in either argument order), ordered by `(diff, start)`. Any such
/// progression has `diff | (v - u)` with `(v - u)/diff <= k - 1`, so the
/// search walks divisors of the gap rather than the whole family.
pub fn aps_containing_pair(
    u: usize,
    v: usize,
    n: usize,
    k: usize,
    family: DifferenceFamily,
    table: &SieveTable,
) -> Result<Vec<Progression>> {
    if u == v {
        return Err(Error::DegeneratePair { v });
    }
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    if u < 1 || v > n {
        return Err(Error::OutOfRange {
            what: "pair",
            value: if u < 1 { u } else { v },
            min: 1,
            max: n,
        });
    }
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    let gap = v - u;
    let mut out = Vec::new();
    // t = number of steps between u and v; descending t gives ascending d.
    for t in (1..=k - 1).rev() {
        if gap % t != 0 {
            continue;
        }
        let d = gap / t;
        if !family.admits(d, table) {
            continue;
        }
        // start = u - i*d for i in [i_lo, i_hi]; descending i gives
        // ascending start.
        let i_hi = ((u - 1) / d).min(k - 1 - t);
        let need = u + (k - 1) * d;
        let i_lo = if need > n { (need - n).div_ceil(d) } else { 0 };
        if i_lo > i_hi {
            continue;
        }
        for i in (i_lo..=i_hi).rev() {
            out.push(Progression { start: u - i * d, diff: d, length: k });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::build_sieve;
    use proptest::prelude::*;

    fn p(start: usize, diff: usize, length: usize) -> Progression {
        Progression { start, diff, length }
    }

    /// Brute-force enumeration over all (start, diff) pairs; independent of
    /// the iterator's arithmetic.
    fn enumerate_oracle(
        n: usize,
        k: usize,
        family: DifferenceFamily,
        table: &SieveTable,
    ) -> Vec<Progression> {
        let mut out = Vec::new();
        if k <= 1 {
            return (1..=n).map(|s| p(s, 1, 1)).collect();
        }
        for d in 1..=n {
            if !family.admits(d, table) {
                continue;
            }
            for start in 1..=n {
                if start + (k - 1) * d <= n {
                    out.push(p(start, d, k));
                }
            }
        }
        out.sort_by_key(|q| (q.diff, q.start));
        out
    }

    #[test]
    fn elements_examples() {
        assert_eq!(p(1, 1, 3).elements(), vec![1, 2, 3]);
        assert_eq!(p(2, 3, 4).elements(), vec![2, 5, 8, 11]);
        assert_eq!(p(5, 7, 1).elements(), vec![5]);
        assert_eq!(p(2, 3, 4).last(), 11);
        assert!(p(2, 3, 4).contains(8));
        assert!(!p(2, 3, 4).contains(9));
        assert!(!p(2, 3, 4).contains(14));
        assert!(!p(2, 3, 4).contains(1));
    }

    #[test]
    fn new_rejects_zero_fields() {
        assert!(Progression::new(0, 1, 3).is_err());
        assert!(Progression::new(1, 0, 3).is_err());
        assert!(Progression::new(1, 1, 0).is_err());
        assert!(Progression::new(1, 1, 1).is_ok());
    }

    #[test]
    fn family_admits() {
        let t = build_sieve(50).unwrap();
        assert!(DifferenceFamily::All.admits(1, &t));
        assert!(DifferenceFamily::All.admits(42, &t));
        let c3 = DifferenceFamily::CoprimeUpTo(3);
        assert!(c3.admits(1, &t));
        assert!(!c3.admits(2, &t));
        assert!(!c3.admits(3, &t));
        assert!(c3.admits(5, &t));
        assert!(!c3.admits(6, &t));
        assert!(c3.admits(25, &t));
        assert!(c3.admits(35, &t));
        assert!(!DifferenceFamily::Prime.admits(1, &t));
        assert!(DifferenceFamily::Prime.admits(2, &t));
        assert!(!DifferenceFamily::Prime.admits(4, &t));
        assert!(DifferenceFamily::Prime.admits(47, &t));
    }

    #[test]
    fn family_labels() {
        assert_eq!(DifferenceFamily::All.to_string(), "all");
        assert_eq!(DifferenceFamily::CoprimeUpTo(4).to_string(), "coprime(4)");
        assert_eq!(DifferenceFamily::Prime.to_string(), "prime");
    }

    #[test]
    fn enumerate_matches_oracle_and_order() {
        let t = build_sieve(60).unwrap();
        for n in [1usize, 2, 5, 10, 12, 31, 60] {
            for k in [1usize, 2, 3, 4, 7] {
                for fam in [
                    DifferenceFamily::All,
                    DifferenceFamily::CoprimeUpTo(k),
                    DifferenceFamily::Prime,
                ] {
                    let got: Vec<_> = enumerate_aps(n, k, fam, &t).collect();
                    assert_eq!(got, enumerate_oracle(n, k, fam, &t), "n={n} k={k} {fam}");
                }
            }
        }
    }

    #[test]
    fn enumerate_known_counts() {
        let t = build_sieve(20).unwrap();
        // d=1..4 give 8+6+4+2 starts.
        assert_eq!(enumerate_aps(10, 3, DifferenceFamily::All, &t).count(), 20);
        assert_eq!(enumerate_aps(5, 6, DifferenceFamily::All, &t).count(), 0);
        // prime d in {2,3,5}: 8+6+2.
        assert_eq!(enumerate_aps(12, 3, DifferenceFamily::Prime, &t).count(), 16);
    }

    #[test]
    fn singleton_convention() {
        let t = build_sieve(10).unwrap();
        let got: Vec<_> = enumerate_aps(4, 1, DifferenceFamily::Prime, &t).collect();
        assert_eq!(got, vec![p(1, 1, 1), p(2, 1, 1), p(3, 1, 1), p(4, 1, 1)]);
        assert_eq!(count_aps(4, 1, DifferenceFamily::Prime, &t), 4);
    }

    #[test]
    fn count_matches_enumeration() {
        let t = build_sieve(80).unwrap();
        for n in 1..=80usize {
            for k in 1..=6usize {
                for fam in [
                    DifferenceFamily::All,
                    DifferenceFamily::CoprimeUpTo(k.max(1)),
                    DifferenceFamily::Prime,
                ] {
                    assert_eq!(
                        count_aps(n, k, fam, &t),
                        enumerate_aps(n, k, fam, &t).count(),
                        "n={n} k={k} {fam}"
                    );
                }
            }
        }
    }

    #[test]
    fn count_known_values() {
        let t = build_sieve(30).unwrap();
        assert_eq!(count_aps(10, 3, DifferenceFamily::All, &t), 20);
        for n in [2usize, 5, 9, 30] {
            assert_eq!(count_aps(n, 2, DifferenceFamily::All, &t), n * (n - 1) / 2);
        }
        // Admitted d <= 5 for k = 3 in [12] are {1, 5}: (12-2) + (12-10).
        assert_eq!(count_aps(12, 3, DifferenceFamily::CoprimeUpTo(3), &t), 12);
    }

    #[test]
    fn restricted_family_examples() {
        let t = build_sieve(200).unwrap();
        // X for k = 2 within [10] is {1,3,5,7,9}.
        assert_eq!(restricted_family_size(40, 2, &t).unwrap(), 20 * 5);
        assert!(restricted_family_size(5, 3, &t).is_err());
        for n in [6usize, 20, 100, 200] {
            for k in 2..=5usize {
                if n < 2 * k {
                    continue;
                }
                let sub = restricted_family_size(n, k, &t).unwrap();
                let full = count_aps(n, k, DifferenceFamily::CoprimeUpTo(k), &t);
                assert!(sub <= full, "n={n} k={k}: {sub} > {full}");
                // Containment: the last element of the widest progression fits.
                assert!(n / 2 + (k - 1) * (n / (2 * k)) <= n);
            }
        }
    }

    /// Filter-based oracle for pair incidence.
    fn pair_oracle(
        u: usize,
        v: usize,
        n: usize,
        k: usize,
        fam: DifferenceFamily,
        t: &SieveTable,
    ) -> Vec<Progression> {
        enumerate_aps(n, k, fam, t)
            .filter(|q| q.contains(u) && q.contains(v))
            .collect()
    }

    #[test]
    fn pair_examples() {
        let t = build_sieve(30).unwrap();
        let got = aps_containing_pair(2, 8, 12, 4, DifferenceFamily::Prime, &t).unwrap();
        assert_eq!(got, vec![p(2, 2, 4), p(2, 3, 4)]);
        assert_eq!(got, pair_oracle(2, 8, 12, 4, DifferenceFamily::Prime, &t));

        // Gap 1 forces diff 1 and the single progression {1,2,3}.
        let got = aps_containing_pair(1, 2, 10, 3, DifferenceFamily::All, &t).unwrap();
        assert_eq!(got, pair_oracle(1, 2, 10, 3, DifferenceFamily::All, &t));
        assert_eq!(got, vec![p(1, 1, 3)]);

        // Argument order is immaterial; equal endpoints are rejected.
        assert_eq!(
            aps_containing_pair(8, 2, 12, 4, DifferenceFamily::Prime, &t).unwrap(),
            vec![p(2, 2, 4), p(2, 3, 4)]
        );
        assert!(aps_containing_pair(3, 3, 12, 4, DifferenceFamily::All, &t).is_err());
        assert!(aps_containing_pair(1, 13, 12, 4, DifferenceFamily::All, &t).is_err());
    }

    #[test]
    fn pair_matches_oracle_on_grid() {
        let t = build_sieve(40).unwrap();
        for n in [8usize, 15, 40] {
            for k in 2..=5usize {
                for fam in [
                    DifferenceFamily::All,
                    DifferenceFamily::CoprimeUpTo(k),
                    DifferenceFamily::Prime,
                ] {
                    for u in 1..n {
                        for v in u + 1..=n {
                            assert_eq!(
                                aps_containing_pair(u, v, n, k, fam, &t).unwrap(),
                                pair_oracle(u, v, n, k, fam, &t),
                                "u={u} v={v} n={n} k={k} {fam}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coprime_pair_uniqueness_and_hit_bound() {
        let t = build_sieve(500).unwrap();
        for k in 2..=12usize {
            let fam = DifferenceFamily::CoprimeUpTo(k);
            for gap in 1..500usize {
                // At most one admitted d with d | gap and gap/d <= k-1.
                let divisors: Vec<usize> = (1..=k - 1)
                    .filter(|&s| gap % s == 0)
                    .map(|s| gap / s)
                    .filter(|&d| fam.admits(d, &t))
                    .collect();
                assert!(divisors.len() <= 1, "k={k} gap={gap}: {divisors:?}");
            }
        }
        let t = build_sieve(120).unwrap();
        for k in 2..=6usize {
            let fam = DifferenceFamily::CoprimeUpTo(k);
            for u in 1..120 {
                for v in u + 1..=120 {
                    let hits = aps_containing_pair(u, v, 120, k, fam, &t).unwrap();
                    assert!(hits.len() <= k - 1, "u={u} v={v} k={k}");
                }
            }
        }
    }

    #[test]
    fn prime_family_can_exceed_hit_bound() {
        // Gap 6 admits prime diffs 2 and 3 for k = 5, and a pair deep inside
        // [20] sits in five progressions, one more than k - 1.
        let t = build_sieve(20).unwrap();
        let hits = aps_containing_pair(7, 13, 20, 5, DifferenceFamily::Prime, &t).unwrap();
        assert_eq!(hits, pair_oracle(7, 13, 20, 5, DifferenceFamily::Prime, &t));
        assert_eq!(hits.len(), 5);
    }

    proptest! {
        #[test]
        fn prop_pair_matches_oracle(
            n in 2usize..60,
            k in 2usize..7,
            u in 1usize..60,
            v in 1usize..60,
            which in 0usize..3,
        ) {
            let t = build_sieve(60).unwrap();
            prop_assume!(u != v && u <= n && v <= n);
            let fam = match which {
                0 => DifferenceFamily::All,
                1 => DifferenceFamily::CoprimeUpTo(k),
                _ => DifferenceFamily::Prime,
            };
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            prop_assert_eq!(
                aps_containing_pair(u, v, n, k, fam, &t).unwrap(),
                pair_oracle(lo, hi, n, k, fam, &t)
            );
        }

        #[test]
        fn prop_enumerated_aps_are_valid(n in 1usize..50, k in 2usize..6) {
            let t = build_sieve(50).unwrap();
            for q in enumerate_aps(n, k, DifferenceFamily::All, &t) {
                prop_assert!(q.start >= 1 && q.diff >= 1 && q.length == k);
                prop_assert!(q.last() <= n);
            }
        }
    }
}
