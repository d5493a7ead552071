//! Certified edge budgets and the independent-progression search.
//!
//! The counting argument: if a difference family contains `F` progressions
//! and no vertex pair lies in more than `h_max` of them, then a graph with
//! `B * h_max < F` edges cannot touch every progression, so an untouched
//! (independent) one exists. `certified_edge_budget` computes the largest
//! such `B` from exact counts; `find_independent_ap` exhibits the witness.
//!
//! Family selection follows the size of `n` relative to `k^2 ln k`: above
//! the threshold the coprime family is dense enough and enjoys the sharp
//! one-difference-per-pair property; below it prime differences give the
//! better count. The search falls back to the remaining families, so it is
//! complete even outside the certified range.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{Coloring, FixedPointMode, IntGraph, PermutationMap};
use crate::progression::{count_aps, enumerate_aps, DifferenceFamily, Progression};
use crate::sieve::SieveTable;

/// Grid-derived default for the bound constant ε: the largest value with
/// `ε n² / (k² ln k) <= certified_edge_budget(n, k)` across the pinned
/// derivation grid. Recomputed bit-for-bit by `derive_default_epsilon`.
pub const DEFAULT_EPSILON: f64 = 0.278_976_949_358_808_18;

/// Default density constant η for the rough-number count.
pub const DEFAULT_ETA: f64 = 0.1;

/// (k, n) grid on which the default ε is derived.
pub const EPSILON_GRID_K: [usize; 4] = [3, 4, 5, 6];
pub const EPSILON_GRID_N: [usize; 7] = [50, 75, 100, 150, 200, 300, 400];

/// Largest `n` for which `find_independent_ap` computes the exact budget to
/// decide certification; above it only the closed-form fallback is used.
const CERTIFY_EXACT_LIMIT: usize = 4096;

/// Tuning constants of the finder.
#[derive(Clone, Copy, Debug)]
pub struct FinderConfig {
    /// Density constant for rough-number counts, in (0, 1].
    pub eta: f64,
    /// Bound constant for the application formulas, in (0, 1).
    pub epsilon: f64,
    /// Regime switch: scan the coprime family first when
    /// `n >= regime_threshold_factor * k^2 * ln k`.
    pub regime_threshold_factor: f64,
}

impl Default for FinderConfig {
    fn default() -> Self {
        FinderConfig {
            eta: DEFAULT_ETA,
            epsilon: DEFAULT_EPSILON,
            regime_threshold_factor: 2.0 / DEFAULT_ETA,
        }
    }
}

impl FinderConfig {
    /// Config with explicit constants; the regime threshold is `2 / eta`.
    pub fn new(eta: f64, epsilon: f64) -> Result<Self> {
        let cfg = FinderConfig {
            eta,
            epsilon,
            regime_threshold_factor: 2.0 / eta,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0 && self.eta <= 1.0) {
            return Err(Error::InvalidConfig {
                msg: format!("eta = {} outside (0, 1]", self.eta),
            });
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::InvalidConfig {
                msg: format!("epsilon = {} outside (0, 1)", self.epsilon),
            });
        }
        if !(self.regime_threshold_factor > 0.0) {
            return Err(Error::InvalidConfig {
                msg: format!(
                    "regime_threshold_factor = {} not positive",
                    self.regime_threshold_factor
                ),
            });
        }
        Ok(())
    }
}

/// The family scanned first for parameters `(n, k)`: coprime differences at
/// or above the regime threshold, prime differences below it. `k = 1` has
/// no meaningful family and selects `All`.
pub fn selected_family(n: usize, k: usize, cfg: &FinderConfig) -> DifferenceFamily {
    if k < 2 {
        return DifferenceFamily::All;
    }
    let threshold = cfg.regime_threshold_factor * (k * k) as f64 * (k as f64).ln();
    if n as f64 >= threshold {
        DifferenceFamily::CoprimeUpTo(k)
    } else {
        DifferenceFamily::Prime
    }
}

/// Scan order for the search: the selected family, then the other
/// restricted family, then everything.
pub fn scan_order(n: usize, k: usize, cfg: &FinderConfig) -> Vec<DifferenceFamily> {
    if k < 2 {
        return vec![DifferenceFamily::All];
    }
    match selected_family(n, k, cfg) {
        DifferenceFamily::CoprimeUpTo(k) => vec![
            DifferenceFamily::CoprimeUpTo(k),
            DifferenceFamily::Prime,
            DifferenceFamily::All,
        ],
        _ => vec![
            DifferenceFamily::Prime,
            DifferenceFamily::CoprimeUpTo(k),
            DifferenceFamily::All,
        ],
    }
}

/// Number of admitted k-term progressions in `[n]` containing both `u` and
/// `u + gap`; counting-only version of `aps_containing_pair`.
fn pair_hits(u: usize, gap: usize, n: usize, k: usize, family: DifferenceFamily, table: &SieveTable) -> usize {
    let mut cnt = 0;
    for t in 1..=k - 1 {
        if gap % t != 0 {
            continue;
        }
        let d = gap / t;
        if !family.admits(d, table) {
            continue;
        }
        let i_hi = ((u - 1) / d).min(k - 1 - t);
        let need = u + (k - 1) * d;
        let i_lo = if need > n { (need - n).div_ceil(d) } else { 0 };
        if i_lo <= i_hi {
            cnt += i_hi - i_lo + 1;
        }
    }
    cnt
}

/// Maximum over all pairs `u < v` in `[n]` of the number of admitted k-term
/// progressions containing both. Exact; gaps are bounded above first so
/// only candidates that can still win are scanned.
pub fn max_pair_hits(n: usize, k: usize, family: DifferenceFamily, table: &SieveTable) -> usize {
    if k < 2 || n < 2 {
        return 0;
    }
    // Ceiling per gap: ignoring boundary truncation, divisor step t
    // contributes at most k - t positions.
    let mut by_gap: Vec<(usize, usize)> = (1..n)
        .map(|gap| {
            let ub: usize = (1..=k - 1)
                .filter(|&t| gap % t == 0 && family.admits(gap / t, table))
                .map(|t| k - t)
                .sum();
            (ub, gap)
        })
        .collect();
    by_gap.sort_unstable_by(|a, b| b.cmp(a));

    let mut best = 0;
    for &(ub, gap) in &by_gap {
        if ub <= best {
            break;
        }
        for u in 1..=n - gap {
            let h = pair_hits(u, gap, n, k, family, table);
            if h > best {
                best = h;
                if best == ub {
                    break;
                }
            }
        }
    }
    best
}

/// Largest `B` with `B * h_max < F`, where `F` counts the family's k-term
/// progressions in `[n]` and `h_max` is the worst-case pair incidence. Any
/// graph on `[n]` with at most `B` edges (and no forbidden vertices) leaves
/// some family progression untouched. Returns 0 when the family is empty.
pub fn certified_edge_budget(
    n: usize,
    k: usize,
    family: DifferenceFamily,
    table: &SieveTable,
) -> usize {
    if k < 2 {
        return 0;
    }
    let f = count_aps(n, k, family, table);
    if f == 0 {
        return 0;
    }
    let h_max = max_pair_hits(n, k, family, table);
    debug_assert!(h_max >= 1);
    (f - 1) / h_max
}

/// Closed-form lower bound on the budget that avoids the pair scan: the
/// coprime family admits at most one difference per pair (so at most
/// `k - 1` incidences), and any family has at most `k - t` positions for
/// each of the `k - 1` divisor steps, giving `k (k - 1) / 2`.
fn cheap_budget_floor(f: usize, k: usize, family: DifferenceFamily) -> usize {
    if f == 0 || k < 2 {
        return 0;
    }
    let h_ub = match family {
        DifferenceFamily::CoprimeUpTo(_) => k - 1,
        _ => k * (k - 1) / 2,
    };
    (f - 1) / h_ub
}

/// A found progression plus how it was found.
#[derive(Clone, Debug)]
pub struct Witness {
    pub progression: Progression,
    pub family_used: DifferenceFamily,
    /// Progressions tested before this one was accepted.
    pub aps_scanned: usize,
    /// True only when the graph's edge count is within the certified budget
    /// of the family the witness came from (and no vertex is forbidden), so
    /// existence was guaranteed before the scan started.
    pub certified: bool,
}

impl Witness {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "start": self.progression.start,
            "diff": self.progression.diff,
            "length": self.progression.length,
            "elements": self.progression.elements(),
            "family": self.family_used.to_string(),
            "certified": self.certified,
        })
    }
}

fn certification(g: &IntGraph, k: usize, family: DifferenceFamily, table: &SieveTable) -> bool {
    // The budget argument counts only edges; a forbidden vertex removes
    // progressions it cannot account for.
    if !g.forbidden().is_empty() {
        return false;
    }
    let n = g.n();
    let f = count_aps(n, k, family, table);
    if g.edge_count() <= cheap_budget_floor(f, k, family) {
        return true;
    }
    if n <= CERTIFY_EXACT_LIMIT {
        return g.edge_count() <= certified_edge_budget(n, k, family, table);
    }
    false
}

/// First independent k-term progression in `[g.n]`, scanning families in
/// regime order and each family in `(diff, start)` order. Returns `None`
/// only when no admitted progression of any family is independent. The
/// table must cover `g.n`.
pub fn find_independent_ap(
    g: &IntGraph,
    k: usize,
    cfg: &FinderConfig,
    table: &SieveTable,
) -> Option<Witness> {
    assert!(k >= 1, "k must be at least 1");
    assert!(table.limit() >= g.n(), "sieve table must cover [n]");
    let n = g.n();
    let mut aps_scanned = 0usize;
    for family in scan_order(n, k, cfg) {
        for p in enumerate_aps(n, k, family, table) {
            aps_scanned += 1;
            if g.is_independent(&p).expect("enumerated progressions lie in [n]") {
                let certified = certification(g, k, family, table);
                return Some(Witness {
                    progression: p,
                    family_used: family,
                    aps_scanned,
                    certified,
                });
            }
        }
    }
    None
}

/// Like `find_independent_ap` but pinned to one family, skipping the
/// regime fallbacks.
pub fn find_independent_ap_in_family(
    g: &IntGraph,
    k: usize,
    family: DifferenceFamily,
    table: &SieveTable,
) -> Option<Witness> {
    assert!(k >= 1, "k must be at least 1");
    assert!(table.limit() >= g.n(), "sieve table must cover [n]");
    let mut aps_scanned = 0usize;
    for p in enumerate_aps(g.n(), k, family, table) {
        aps_scanned += 1;
        if g.is_independent(&p).expect("enumerated progressions lie in [n]") {
            let certified = certification(g, k, family, table);
            return Some(Witness {
                progression: p,
                family_used: family,
                aps_scanned,
                certified,
            });
        }
    }
    None
}

/// Rainbow search: same-color elements become adjacent, so an independent
/// progression of the derived graph has pairwise distinct colors.
pub fn find_rainbow_ap(
    c: &Coloring,
    k: usize,
    cfg: &FinderConfig,
    table: &SieveTable,
) -> Option<Witness> {
    let g = IntGraph::from_coloring(c);
    find_independent_ap(&g, k, cfg, table)
}

/// Freeness search: edges `{i, π(i)}` make an independent progression one
/// whose elements all map outside it (fixed points per `mode`).
pub fn find_unmapped_ap(
    p: &PermutationMap,
    k: usize,
    mode: FixedPointMode,
    cfg: &FinderConfig,
    table: &SieveTable,
) -> Option<Witness> {
    let g = IntGraph::from_permutation(p, mode);
    find_independent_ap(&g, k, cfg, table)
}

fn require_k3(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::KTooSmall { k, min: 3 });
    }
    Ok(())
}

/// `ceil(ε⁻¹ m k² ln k)`: an `n` at which every coloring of `[n]` with no
/// color used more than `m` times has a rainbow k-term progression.
pub fn sr_upper_bound(m: usize, k: usize, cfg: &FinderConfig) -> Result<usize> {
    require_k3(k)?;
    if m < 1 {
        return Err(Error::OutOfRange {
            what: "m",
            value: m,
            min: 1,
            max: usize::MAX,
        });
    }
    cfg.validate()?;
    Ok((m as f64 * (k * k) as f64 * (k as f64).ln() / cfg.epsilon).ceil() as usize)
}

/// `ceil(ε⁻¹ k² ln k)`: bound for the least color count forcing rainbow
/// k-term progressions in every equinumerous coloring, independent of the
/// class size.
pub fn tk_upper_bound(k: usize, cfg: &FinderConfig) -> Result<usize> {
    sr_upper_bound(1, k, cfg)
}

/// Least `n <= horizon` whose certified edge budget absorbs the at-most-`n`
/// edges of any permutation graph, so every permutation of `[n]` leaves
/// some k-term progression free. Scans upward; errors when the horizon is
/// exhausted rather than guessing.
pub fn n0_upper_bound(
    k: usize,
    cfg: &FinderConfig,
    table: &SieveTable,
    horizon: usize,
) -> Result<usize> {
    require_k3(k)?;
    cfg.validate()?;
    let horizon = horizon.min(table.limit());
    for n in k..=horizon {
        let family = selected_family(n, k, cfg);
        if n <= certified_edge_budget(n, k, family, table) {
            return Ok(n);
        }
    }
    Err(Error::HorizonExhausted { horizon })
}

/// Uniformly random graph on `[n]` with exactly `e` edges.
pub fn random_graph(n: usize, e: usize, rng: &mut ChaCha8Rng) -> Result<IntGraph> {
    let total = n * (n - 1) / 2;
    if e > total {
        return Err(Error::OutOfRange {
            what: "e",
            value: e,
            min: 0,
            max: total,
        });
    }
    let mut pairs = Vec::with_capacity(total);
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.push((u, v));
        }
    }
    let mut g = IntGraph::empty(n)?;
    for idx in rand::seq::index::sample(rng, total, e) {
        let (u, v) = pairs[idx];
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Greedy stress graph: place `e` edges one at a time, each killing the
/// most progressions of `family` still alive, ties broken toward the
/// lexicographically least pair. Deterministic.
pub fn adversarial_graph(
    n: usize,
    k: usize,
    e: usize,
    family: DifferenceFamily,
    table: &SieveTable,
) -> Result<IntGraph> {
    let aps: Vec<Vec<usize>> = enumerate_aps(n, k, family, table)
        .map(|p| p.elements())
        .collect();
    let pair_id = |u: usize, v: usize| (u - 1) * n + (v - 1);
    // kill[pair] = alive progressions through that pair.
    let mut kill = vec![0u32; n * n];
    let mut aps_of_pair: Vec<Vec<u32>> = vec![Vec::new(); n * n];
    for (id, elems) in aps.iter().enumerate() {
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let pid = pair_id(elems[i], elems[j]);
                kill[pid] += 1;
                aps_of_pair[pid].push(id as u32);
            }
        }
    }
    let mut alive = vec![true; aps.len()];
    let mut g = IntGraph::empty(n)?;
    for _ in 0..e {
        let mut best_pid = usize::MAX;
        let mut best_kill = 0u32;
        for u in 1..=n {
            for v in u + 1..=n {
                let pid = pair_id(u, v);
                if kill[pid] > best_kill && !g.has_edge(u, v) {
                    best_kill = kill[pid];
                    best_pid = pid;
                }
            }
        }
        if best_pid == usize::MAX {
            // No remaining edge kills anything; fill with the least absent
            // pair to reach the requested count.
            'outer: for u in 1..=n {
                for v in u + 1..=n {
                    if !g.has_edge(u, v) {
                        best_pid = pair_id(u, v);
                        break 'outer;
                    }
                }
            }
        }
        if best_pid == usize::MAX {
            return Err(Error::OutOfRange {
                what: "e",
                value: e,
                min: 0,
                max: n * (n - 1) / 2,
            });
        }
        let (u, v) = (best_pid / n + 1, best_pid % n + 1);
        g.add_edge(u, v)?;
        for &id in &aps_of_pair[best_pid] {
            if !alive[id as usize] {
                continue;
            }
            alive[id as usize] = false;
            let elems = &aps[id as usize];
            for i in 0..elems.len() {
                for j in i + 1..elems.len() {
                    kill[pair_id(elems[i], elems[j])] -= 1;
                }
            }
        }
    }
    Ok(g)
}

/// Fraction of `trials` random `e`-edge graphs on `[n]` containing an
/// independent k-term progression (unrestricted differences, exhaustive
/// scan). Deterministic for a fixed seed.
pub fn empirical_probe(
    n: usize,
    k: usize,
    e: usize,
    trials: usize,
    seed: u64,
    table: &SieveTable,
) -> Result<f64> {
    if e > n * (n - 1) / 2 {
        return Err(Error::OutOfRange {
            what: "e",
            value: e,
            min: 0,
            max: n * (n - 1) / 2,
        });
    }
    if trials == 0 {
        return Err(Error::InvalidConfig {
            msg: "trials must be positive".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = 0usize;
    for _ in 0..trials {
        let g = random_graph(n, e, &mut rng)?;
        let hit = enumerate_aps(n, k, DifferenceFamily::All, table)
            .any(|p| g.is_independent(&p).unwrap());
        if hit {
            present += 1;
        }
    }
    Ok(present as f64 / trials as f64)
}

/// Recomputes the pinned default ε from the fixed `(k, n)` grid: for each
/// point, the largest ε with `ε n² / (k² ln k)` at most the certified
/// budget of the regime-selected family; the grid minimum is returned.
/// Deterministic, and bit-identical to `DEFAULT_EPSILON`.
pub fn derive_default_epsilon(table: &SieveTable) -> f64 {
    let cfg = FinderConfig {
        eta: DEFAULT_ETA,
        epsilon: 0.5, // placeholder; ε plays no role in budgets
        regime_threshold_factor: 2.0 / DEFAULT_ETA,
    };
    let mut min: Option<f64> = None;
    for &k in &EPSILON_GRID_K {
        for &n in &EPSILON_GRID_N {
            let family = selected_family(n, k, &cfg);
            let budget = certified_edge_budget(n, k, family, table);
            let eps = budget as f64 * (k * k) as f64 * (k as f64).ln() / (n * n) as f64;
            min = Some(match min {
                Some(m) if m <= eps => m,
                _ => eps,
            });
        }
    }
    min.expect("grid is non-empty")
}
