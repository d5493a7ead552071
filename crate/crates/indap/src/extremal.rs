//! Exhaustive desk-scale searches for extremal witnesses: colorings with no
//! rainbow progression and permutations leaving no progression free.
//!
//! Colorings are enumerated as canonical set partitions (blocks ordered by
//! their least element), which quotients away color relabeling. Every
//! search carries a budget, and a verdict is marked `Complete` only when
//! the space was fully covered; running out of budget is reported as
//! `Exhausted`, never as absence.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::graph::{Coloring, FixedPointMode, PermutationMap};

/// Node and wall-clock limits for one search invocation.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 20_000_000,
            time_limit: Duration::from_secs(30),
        }
    }
}

impl SearchBudget {
    pub fn with_nodes(node_limit: u64) -> Self {
        SearchBudget { node_limit, ..Self::default() }
    }
}

/// Whether a verdict covers the whole search space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchOutcome {
    /// The verdict is proven: either a witness was found or the space was
    /// fully enumerated.
    Complete,
    /// The budget ran out first; absence of a witness means nothing.
    Exhausted,
}

/// Search result: an optional witness, the coverage flag, and node count.
#[derive(Clone, Debug)]
pub struct SearchResult<W> {
    pub witness: Option<W>,
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

enum Flow {
    Continue,
    Stop,
    Cut,
}

struct PartitionDfs {
    n: usize,
    max_block_size: usize,
    max_blocks: usize,
    colors: Vec<usize>,
    sizes: Vec<usize>,
    nblocks: usize,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
}

impl PartitionDfs {
    fn run<FA, FL>(&mut self, i: usize, allow: &mut FA, leaf: &mut FL) -> Flow
    where
        FA: FnMut(usize, &[usize]) -> bool,
        FL: FnMut(&[usize], usize) -> bool,
    {
        if i > self.n {
            return if leaf(&self.colors, self.nblocks) { Flow::Stop } else { Flow::Continue };
        }
        let open = self.nblocks + usize::from(self.nblocks < self.max_blocks);
        for b in 0..open {
            let new_block = b == self.nblocks;
            if !new_block && self.sizes[b] >= self.max_block_size {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit
                || (self.nodes & 0xfff == 0 && Instant::now() >= self.deadline)
            {
                return Flow::Cut;
            }
            self.colors[i - 1] = b;
            if new_block {
                self.sizes.push(1);
                self.nblocks += 1;
            } else {
                self.sizes[b] += 1;
            }
            let keep = allow(i, &self.colors);
            let flow = if keep { self.run(i + 1, allow, leaf) } else { Flow::Continue };
            if new_block {
                self.sizes.pop();
                self.nblocks -= 1;
            } else {
                self.sizes[b] -= 1;
            }
            match flow {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }
}

/// Walks every canonical set partition of `[n]` with block sizes at most
/// `max_block_size` and (when given) at most `max_blocks` blocks. Blocks
/// are created in order of their least element, so each partition appears
/// exactly once.
///
/// `allow(i, colors)` is called after element `i` is placed (`colors[0..i]`
/// valid, values are block ids); returning false abandons that placement.
/// `leaf(colors, nblocks)` sees each complete partition; returning true
/// stops the walk. The return value reports coverage and nodes expanded.
pub fn visit_partitions<FA, FL>(
    n: usize,
    max_block_size: usize,
    max_blocks: Option<usize>,
    budget: &SearchBudget,
    mut allow: FA,
    mut leaf: FL,
) -> (SearchOutcome, u64)
where
    FA: FnMut(usize, &[usize]) -> bool,
    FL: FnMut(&[usize], usize) -> bool,
{
    let mut dfs = PartitionDfs {
        n,
        max_block_size,
        max_blocks: max_blocks.unwrap_or(n),
        colors: vec![0; n],
        sizes: Vec::new(),
        nblocks: 0,
        nodes: 0,
        node_limit: budget.node_limit,
        deadline: Instant::now() + budget.time_limit,
    };
    let flow = dfs.run(1, &mut allow, &mut leaf);
    let outcome = match flow {
        Flow::Cut => SearchOutcome::Exhausted,
        _ => SearchOutcome::Complete,
    };
    (outcome, dfs.nodes)
}

/// Element lists of all k-term progressions in `[n]` (singletons for k=1).
fn all_k_aps(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 1 {
        return (1..=n).map(|s| vec![s]).collect();
    }
    if n < k {
        return out;
    }
    for d in 1..=(n - 1) / (k - 1) {
        for start in 1..=n - (k - 1) * d {
            out.push((0..k).map(|i| start + i * d).collect());
        }
    }
    out
}

/// Groups progressions by their largest element.
fn aps_by_max(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_max: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for ap in all_k_aps(n, k) {
        let hi = *ap.last().unwrap();
        by_max[hi].push(ap);
    }
    by_max
}

fn is_rainbow_under(colors: &[usize], ap: &[usize]) -> bool {
    for a in 0..ap.len() {
        for b in a + 1..ap.len() {
            if colors[ap[a] - 1] == colors[ap[b] - 1] {
                return false;
            }
        }
    }
    true
}

/// True iff no k-term progression in `[c.n()]` is rainbow under `c`.
pub fn coloring_avoids_rainbow(c: &Coloring, k: usize) -> bool {
    let colors: Vec<usize> = (1..=c.n()).map(|i| c.color_of(i)).collect();
    all_k_aps(c.n(), k).iter().all(|ap| !is_rainbow_under(&colors, ap))
}

/// True iff no k-term progression in `[p.n()]` is left free by `p` under
/// `mode`.
pub fn permutation_avoids_free_ap(p: &PermutationMap, k: usize, mode: FixedPointMode) -> bool {
    all_k_aps(p.n(), k).iter().all(|ap| {
        !ap.iter().all(|&i| {
            let j = p.apply(i);
            if j == i { mode == FixedPointMode::Weak } else { !ap.contains(&j) }
        })
    })
}

/// Searches for a coloring of `[n]` using every color at most `m` times
/// with no rainbow k-term progression. A branch is cut as soon as a fully
/// colored progression is rainbow, since later elements cannot change it.
pub fn exists_coloring_without_rainbow(
    n: usize,
    m: usize,
    k: usize,
    budget: &SearchBudget,
) -> SearchResult<Coloring> {
    assert!(n >= 1 && m >= 1 && k >= 1);
    search_coloring(n, m, None, k, budget)
}

fn search_coloring(
    n: usize,
    max_block_size: usize,
    max_blocks: Option<usize>,
    k: usize,
    budget: &SearchBudget,
) -> SearchResult<Coloring> {
    let by_max = aps_by_max(n, k);
    let mut found: Option<Vec<usize>> = None;
    let (outcome, nodes) = visit_partitions(
        n,
        max_block_size,
        max_blocks,
        budget,
        |i, colors| !by_max[i].iter().any(|ap| is_rainbow_under(colors, ap)),
        |colors, _| {
            found = Some(colors.to_vec());
            true
        },
    );
    SearchResult {
        witness: found.map(|ids| Coloring::from_class_ids(&ids).expect("n >= 1")),
        outcome,
        nodes,
    }
}

/// Per-`n` verdict inside an `sr_exact` scan.
#[derive(Clone, Debug, Serialize)]
pub struct SrVerdict {
    pub n: usize,
    /// Some(true): bad coloring found; Some(false): none exists (proven);
    /// None: search exhausted, unknown.
    pub bad_exists: Option<bool>,
    pub outcome: SearchOutcome,
    pub nodes: u64,
    /// Class ids of a bad coloring when one was found.
    pub witness: Option<Vec<usize>>,
}

/// Result of scanning `n = 1..=n_max` for the least guaranteed interval.
#[derive(Clone, Debug, Serialize)]
pub struct SrExactReport {
    pub m: usize,
    pub k: usize,
    pub n_max: usize,
    /// Least `n` with no bad coloring, proven, such that every larger
    /// `n' <= n_max` is also proven bad-free. None when no such tail.
    pub value: Option<usize>,
    pub verdicts: Vec<SrVerdict>,
    pub outcome: SearchOutcome,
}

/// Exact sub-Ramsey value by exhaustive search, horizon `n_max`. Each `n`
/// gets its own verdict; the reported value requires the whole tail
/// `[value, n_max]` to be proven, not inferred from monotonicity.
pub fn sr_exact(m: usize, k: usize, n_max: usize, budget: &SearchBudget) -> SrExactReport {
    assert!(m >= 1 && k >= 1 && n_max >= 1);
    let mut verdicts = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let r = exists_coloring_without_rainbow(n, m, k, budget);
        let bad_exists = match (&r.witness, r.outcome) {
            (Some(_), _) => Some(true),
            (None, SearchOutcome::Complete) => Some(false),
            (None, SearchOutcome::Exhausted) => None,
        };
        verdicts.push(SrVerdict {
            n,
            bad_exists,
            outcome: r.outcome,
            nodes: r.nodes,
            witness: r.witness.map(|c| (1..=c.n()).map(|i| c.color_of(i)).collect()),
        });
    }
    let overall = if verdicts.iter().any(|v| v.outcome == SearchOutcome::Exhausted) {
        SearchOutcome::Exhausted
    } else {
        SearchOutcome::Complete
    };
    // Longest proven bad-free suffix.
    let mut value = None;
    for v in verdicts.iter().rev() {
        if v.bad_exists == Some(false) {
            value = Some(v.n);
        } else {
            break;
        }
    }
    SrExactReport { m, k, n_max, value, verdicts, outcome: overall }
}

struct PermDfs {
    n: usize,
    mode: FixedPointMode,
    aps: Vec<Vec<usize>>,
    aps_of_elem: Vec<Vec<u32>>,
    killed: Vec<bool>,
    assigned_in: Vec<u8>,
    unkilled: usize,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
}

impl PermDfs {
    fn kills(&self, i: usize, v: usize, ap: &[usize]) -> bool {
        if !ap.contains(&v) {
            return false;
        }
        if v == i {
            self.mode == FixedPointMode::Strict
        } else {
            true
        }
    }

    fn run(&mut self, i: usize) -> Flow {
        if self.unkilled == 0 {
            // Any completion works; take the least one.
            for j in i..=self.n {
                let v = (1..=self.n).find(|&v| !self.used[v]).unwrap();
                self.image[j - 1] = v;
                self.used[v] = true;
            }
            return Flow::Stop;
        }
        if i > self.n {
            return Flow::Continue;
        }
        for v in 1..=self.n {
            if self.used[v] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit
                || (self.nodes & 0xfff == 0 && Instant::now() >= self.deadline)
            {
                return Flow::Cut;
            }
            // Apply π(i) = v to every progression containing i.
            let mut newly_killed: Vec<u32> = Vec::new();
            let mut ok = true;
            for &id in &self.aps_of_elem[i] {
                let id_us = id as usize;
                self.assigned_in[id_us] += 1;
                if !self.killed[id_us] && self.kills(i, v, &self.aps[id_us]) {
                    self.killed[id_us] = true;
                    self.unkilled -= 1;
                    newly_killed.push(id);
                }
                // Fully assigned yet alive: free forever, so this branch
                // cannot reach a witness.
                if !self.killed[id_us] && self.assigned_in[id_us] as usize == self.aps[id_us].len()
                {
                    ok = false;
                }
            }
            if ok {
                self.image[i - 1] = v;
                self.used[v] = true;
                let flow = self.run(i + 1);
                self.used[v] = false;
                match flow {
                    Flow::Continue => {}
                    other => {
                        if matches!(other, Flow::Stop) {
                            self.image[i - 1] = v;
                            self.used[v] = true;
                        }
                        return other;
                    }
                }
            }
            for &id in &self.aps_of_elem[i] {
                self.assigned_in[id as usize] -= 1;
            }
            for &id in &newly_killed {
                self.killed[id as usize] = false;
                self.unkilled += 1;
            }
        }
        Flow::Continue
    }
}

/// Searches for a permutation of `[n]` under which no k-term progression is
/// free. Kills are monotone under extension, so once every progression is
/// killed any completion is a witness; conversely a fully assigned yet
/// unkilled progression cuts the branch.
pub fn exists_permutation_without_free_ap(
    n: usize,
    k: usize,
    mode: FixedPointMode,
    budget: &SearchBudget,
) -> SearchResult<PermutationMap> {
    assert!(n >= 1 && k >= 2);
    let aps = all_k_aps(n, k);
    let mut aps_of_elem: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for (id, ap) in aps.iter().enumerate() {
        for &x in ap {
            aps_of_elem[x].push(id as u32);
        }
    }
    let unkilled = aps.len();
    let mut dfs = PermDfs {
        n,
        mode,
        killed: vec![false; aps.len()],
        assigned_in: vec![0; aps.len()],
        aps,
        aps_of_elem,
        unkilled,
        image: vec![0; n],
        used: vec![false; n + 1],
        nodes: 0,
        node_limit: budget.node_limit,
        deadline: Instant::now() + budget.time_limit,
    };
    let flow = dfs.run(1);
    let (witness, outcome) = match flow {
        Flow::Stop => (
            Some(PermutationMap::from_image(dfs.image.clone()).expect("search yields bijections")),
            SearchOutcome::Complete,
        ),
        Flow::Continue => (None, SearchOutcome::Complete),
        Flow::Cut => (None, SearchOutcome::Exhausted),
    };
    SearchResult { witness, outcome, nodes: dfs.nodes }
}

fn mode_name(mode: FixedPointMode) -> &'static str {
    match mode {
        FixedPointMode::Strict => "strict",
        FixedPointMode::Weak => "weak",
    }
}

/// Per-`n` verdict of the permutation probe.
#[derive(Clone, Debug, Serialize)]
pub struct N0Verdict {
    pub n: usize,
    pub bad_exists: Option<bool>,
    pub outcome: SearchOutcome,
    pub nodes: u64,
    /// Image list of a bad permutation when one was found.
    pub witness: Option<Vec<usize>>,
}

/// Horizon-limited probe of the least `n` beyond which every permutation
/// leaves a free progression.
#[derive(Clone, Debug, Serialize)]
pub struct N0ProbeReport {
    pub k: usize,
    pub mode: String,
    pub n_max: usize,
    pub largest_bad: Option<usize>,
    /// Claimed exact threshold; set only when the whole tail above
    /// `largest_bad` is proven good and the horizon reaches a certified
    /// upper bound.
    pub exact: Option<usize>,
    pub certified_upper: Option<usize>,
    pub verdicts: Vec<N0Verdict>,
    pub note: String,
}

/// Probes each `n <= n_max` for a bad permutation. `certified_upper` is an
/// externally proven bound (if available); without reaching it the probe
/// only ever lower-bounds the threshold.
pub fn n0_probe(
    k: usize,
    mode: FixedPointMode,
    n_max: usize,
    budget: &SearchBudget,
    certified_upper: Option<usize>,
) -> N0ProbeReport {
    assert!(k >= 3 && n_max >= 1);
    let mut verdicts = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let r = exists_permutation_without_free_ap(n, k, mode, budget);
        let bad_exists = match (&r.witness, r.outcome) {
            (Some(_), _) => Some(true),
            (None, SearchOutcome::Complete) => Some(false),
            (None, SearchOutcome::Exhausted) => None,
        };
        verdicts.push(N0Verdict {
            n,
            bad_exists,
            outcome: r.outcome,
            nodes: r.nodes,
            witness: r.witness.map(|p| p.image().to_vec()),
        });
    }
    let largest_bad = verdicts.iter().rev().find(|v| v.bad_exists == Some(true)).map(|v| v.n);
    let tail_proven_good = verdicts
        .iter()
        .filter(|v| v.n > largest_bad.unwrap_or(0))
        .all(|v| v.bad_exists == Some(false));
    let horizon_reaches_bound = certified_upper.is_some_and(|ub| n_max >= ub);
    let exact = if tail_proven_good && horizon_reaches_bound {
        Some(largest_bad.unwrap_or(0) + 1)
    } else {
        None
    };
    let note = if mode == FixedPointMode::Strict {
        "strict mode: the identity is a bad permutation at every n (fixed points forbid \
         every progression), so no threshold exists in this mode"
            .to_string()
    } else if exact.is_some() {
        format!(
            "exact: every n in ({}, {n_max}] is proven good and the horizon reaches the \
             certified upper bound",
            largest_bad.unwrap_or(0)
        )
    } else {
        "the threshold is only lower-bounded by this horizon-limited search; n beyond the \
         horizon (or exhausted searches inside it) may still admit bad permutations"
            .to_string()
    };
    N0ProbeReport {
        k,
        mode: mode_name(mode).to_string(),
        n_max,
        largest_bad,
        exact,
        certified_upper,
        verdicts,
        note,
    }
}

/// Per-`m` verdict of the equinumerous-coloring probe.
#[derive(Clone, Debug, Serialize)]
pub struct TkVerdict {
    pub m: usize,
    pub n: usize,
    /// Some(true): every coloring of [tm] with each of t colors used m
    /// times has a rainbow progression (proven); Some(false): a bad
    /// coloring was found; None: exhausted.
    pub forced: Option<bool>,
    pub outcome: SearchOutcome,
    pub nodes: u64,
    pub witness: Option<Vec<usize>>,
}

/// Probe of whether `t` colors force rainbow progressions at each class
/// size `m <= m_max`.
#[derive(Clone, Debug, Serialize)]
pub struct TkProbeReport {
    pub t: usize,
    pub k: usize,
    pub m_max: usize,
    pub verdicts: Vec<TkVerdict>,
    pub note: String,
}

/// For each `m <= m_max`, decides by exhaustive search whether every
/// coloring of `[t m]` using each of `t` colors exactly `m` times contains
/// a rainbow k-term progression. The quantifier over all `m` is never
/// decided here.
pub fn tk_probe(t: usize, k: usize, m_max: usize, budget: &SearchBudget) -> TkProbeReport {
    assert!(t >= 1 && k >= 1 && m_max >= 1);
    let mut verdicts = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let n = t * m;
        // Blocks of size exactly m: sizes <= m and at most t blocks can
        // only cover [tm] with t full blocks.
        let r = search_coloring(n, m, Some(t), k, budget);
        let forced = match (&r.witness, r.outcome) {
            (Some(_), _) => Some(false),
            (None, SearchOutcome::Complete) => Some(true),
            (None, SearchOutcome::Exhausted) => None,
        };
        verdicts.push(TkVerdict {
            m,
            n,
            forced,
            outcome: r.outcome,
            nodes: r.nodes,
            witness: r.witness.map(|c| (1..=c.n()).map(|i| c.color_of(i)).collect()),
        });
    }
    TkProbeReport {
        t,
        k,
        m_max,
        verdicts,
        note: "per-m verdicts only: the quantifier over all class sizes m is not decided by \
               any finite probe"
            .to_string(),
    }
}
