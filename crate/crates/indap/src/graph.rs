//! Graphs on vertex set `[n]` plus the two reductions that manufacture
//! them: same-color cliques from a coloring and `{i, π(i)}` edges from a
//! permutation.
//!
//! Vertices are 1-indexed throughout; bit `v` of an adjacency row is vertex
//! `v` directly. Self-pairs never become edges: a loop marks its vertex as
//! forbidden, excluding it from every independent set.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::progression::Progression;

/// How fixed points of a permutation constrain the derived graph.
///
/// The freeness condition on a progression `A` reads "the image of every
/// element of `A` lies outside `A`". A fixed point in `A` violates it
/// literally, so `Strict` marks fixed points forbidden; `Weak` ignores them,
/// asking only that non-fixed elements map out of `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedPointMode {
    Strict,
    Weak,
}

/// Undirected graph on `[n]` with a forbidden-vertex mask.
#[derive(Clone, Debug)]
pub struct IntGraph {
    n: usize,
    adj: Vec<BitSet>,
    edge_count: usize,
    forbidden: BitSet,
}

/// An edge-list entry tagged with its source line for error reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeLine {
    pub u: usize,
    pub v: usize,
    pub line: usize,
}

impl IntGraph {
    /// Edgeless graph on `[n]`.
    pub fn empty(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n,
                min: 1,
                max: usize::MAX,
            });
        }
        Ok(IntGraph {
            n,
            adj: vec![BitSet::new(n + 1); n + 1],
            edge_count: 0,
            forbidden: BitSet::new(n + 1),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Vertices excluded from every independent set.
    pub fn forbidden(&self) -> &BitSet {
        &self.forbidden
    }

    pub fn is_forbidden(&self, v: usize) -> bool {
        self.forbidden.test(v)
    }

    /// Adjacency row of `v` as a bitset over `[n]`.
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    fn check_vertex(&self, what: &'static str, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::OutOfRange {
                what,
                value: v,
                min: 1,
                max: self.n,
            });
        }
        Ok(())
    }

    /// Inserts the undirected edge `{u, v}`; duplicates are ignored and a
    /// self-pair marks `u` forbidden instead.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex("u", u)?;
        self.check_vertex("v", v)?;
        if u == v {
            self.forbidden.set(u);
            return Ok(());
        }
        if !self.adj[u].test(v) {
            self.adj[u].set(v);
            self.adj[v].set(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].test(v)
    }

    /// Builds from raw pairs; out-of-range vertices error without line info.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = IntGraph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from parsed file lines; a bad vertex errors with its line.
    pub fn from_edge_lines(n: usize, edges: &[EdgeLine]) -> Result<Self> {
        let mut g = IntGraph::empty(n)?;
        for e in edges {
            g.add_edge(e.u, e.v).map_err(|_| Error::Parse {
                line: e.line,
                msg: format!("vertex out of range [1, {n}] in pair {} {}", e.u, e.v),
            })?;
        }
        Ok(g)
    }

    /// Disjoint union of cliques, one per color class.
    pub fn from_coloring(c: &Coloring) -> Self {
        let mut g = IntGraph::empty(c.n()).expect("coloring has n >= 1");
        for class in c.classes() {
            for i in 0..class.len() {
                for j in i + 1..class.len() {
                    g.add_edge(class[i], class[j]).expect("class members in range");
                }
            }
        }
        g
    }

    /// Edges `{i, π(i)}` for every non-fixed `i` (a 2-cycle contributes one
    /// edge), so at most `n` edges. Fixed points become forbidden vertices
    /// in `Strict` mode and are ignored in `Weak` mode.
    pub fn from_permutation(p: &PermutationMap, mode: FixedPointMode) -> Self {
        let mut g = IntGraph::empty(p.n()).expect("permutation has n >= 1");
        for i in 1..=p.n() {
            let j = p.apply(i);
            if i == j {
                if mode == FixedPointMode::Strict {
                    g.forbidden.set(i);
                }
            } else {
                g.add_edge(i, j).expect("images in range");
            }
        }
        g
    }

    /// True iff no element of `p` is forbidden and no two are adjacent.
    pub fn is_independent(&self, p: &Progression) -> Result<bool> {
        if p.start < 1 || p.last() > self.n {
            return Err(Error::OutOfRange {
                what: "progression element",
                value: p.last(),
                min: 1,
                max: self.n,
            });
        }
        for i in 0..p.length {
            let x = p.start + i * p.diff;
            if self.forbidden.test(x) {
                return Ok(false);
            }
            let row = &self.adj[x];
            for j in i + 1..p.length {
                if row.test(p.start + j * p.diff) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Parses edge-list text: one whitespace-separated `u v` pair per line,
/// `#` starts a comment, blank lines ignored.
pub fn parse_edge_list(text: &str) -> Result<Vec<EdgeLine>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected two vertices, found {} tokens", tokens.len()),
            });
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid vertex {tok:?}"),
            })
        };
        out.push(EdgeLine {
            u: parse(tokens[0])?,
            v: parse(tokens[1])?,
            line,
        });
    }
    Ok(out)
}

/// A coloring of `[n]`, with color classes and their multiplicities.
#[derive(Clone, Debug)]
pub struct Coloring {
    color_of: Vec<usize>,
    multiplicity: Vec<usize>,
}

impl Coloring {
    /// Colors given as arbitrary labels, position `i` holding the color of
    /// element `i + 1`.
    pub fn from_labels<T: std::hash::Hash + Eq>(labels: &[T]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidColoring {
                msg: "coloring of the empty interval".into(),
            });
        }
        let mut ids: HashMap<&T, usize> = HashMap::new();
        let mut color_of = Vec::with_capacity(labels.len());
        for label in labels {
            let next = ids.len();
            color_of.push(*ids.entry(label).or_insert(next));
        }
        let mut multiplicity = vec![0usize; ids.len()];
        for &c in &color_of {
            multiplicity[c] += 1;
        }
        Ok(Coloring { color_of, multiplicity })
    }

    /// Colors given as dense ids, position `i` holding the color of `i + 1`.
    pub fn from_class_ids(ids: &[usize]) -> Result<Self> {
        Self::from_labels(ids)
    }

    /// Parses `i c` lines (element, color token); every `i` in `[max i]`
    /// must appear exactly once.
    pub fn parse(text: &str) -> Result<Self> {
        let mut seen: HashMap<usize, (String, usize)> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected \"element color\", found {} tokens", tokens.len()),
                });
            }
            let i: usize = tokens[0].parse().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid element {:?}", tokens[0]),
            })?;
            if i < 1 {
                return Err(Error::Parse {
                    line,
                    msg: "elements are 1-indexed".into(),
                });
            }
            if let Some((_, first)) = seen.get(&i) {
                return Err(Error::Parse {
                    line,
                    msg: format!("element {i} already colored on line {first}"),
                });
            }
            seen.insert(i, (tokens[1].to_string(), line));
        }
        if seen.is_empty() {
            return Err(Error::InvalidColoring {
                msg: "no colored elements".into(),
            });
        }
        let n = *seen.keys().max().unwrap();
        let mut labels = Vec::with_capacity(n);
        for i in 1..=n {
            match seen.get(&i) {
                Some((c, _)) => labels.push(c.clone()),
                None => {
                    return Err(Error::InvalidColoring {
                        msg: format!("element {i} has no color (n inferred as {n})"),
                    })
                }
            }
        }
        Self::from_labels(&labels)
    }

    pub fn n(&self) -> usize {
        self.color_of.len()
    }

    /// Dense color id of element `i` (1-indexed).
    pub fn color_of(&self, i: usize) -> usize {
        self.color_of[i - 1]
    }

    pub fn color_count(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.multiplicity.iter().copied().max().unwrap_or(0)
    }

    /// Members of each color class, ascending within and across classes.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.multiplicity.len()];
        for i in 1..=self.n() {
            classes[self.color_of(i)].push(i);
        }
        classes
    }

    /// True iff the elements of `p` receive pairwise distinct colors.
    pub fn is_rainbow(&self, p: &Progression) -> Result<bool> {
        if p.start < 1 || p.last() > self.n() {
            return Err(Error::OutOfRange {
                what: "progression element",
                value: p.last(),
                min: 1,
                max: self.n(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        Ok(p.elements().iter().all(|&x| seen.insert(self.color_of(x))))
    }
}

/// A bijection `[n] -> [n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationMap {
    image: Vec<usize>,
}

impl PermutationMap {
    /// Validates that `image` (position `i` holding the image of `i + 1`)
    /// is a bijection on `[n]`.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidPermutation {
                msg: "permutation of the empty interval".into(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v < 1 || v > n {
                return Err(Error::InvalidPermutation {
                    msg: format!("image {v} outside [1, {n}]"),
                });
            }
            if seen[v] {
                return Err(Error::InvalidPermutation {
                    msg: format!("image {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(PermutationMap { image })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_image((1..=n).collect())
    }

    /// The reversal `i -> n + 1 - i`.
    pub fn reversal(n: usize) -> Result<Self> {
        Self::from_image((1..=n).rev().collect())
    }

    /// Parses either a single line of `n` images or `i π(i)` lines covering
    /// every element. A lone non-comment line is always read as an image
    /// list.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            let mut vals = Vec::with_capacity(tokens.len());
            for tok in tokens {
                vals.push(tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("invalid integer {tok:?}"),
                })?);
            }
            rows.push((line, vals));
        }
        if rows.is_empty() {
            return Err(Error::InvalidPermutation {
                msg: "no permutation data".into(),
            });
        }
        if rows.len() == 1 {
            return Self::from_image(rows.into_iter().next().unwrap().1);
        }
        let mut pairs: HashMap<usize, usize> = HashMap::new();
        for (line, vals) in &rows {
            if vals.len() != 2 {
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("expected \"i image\", found {} tokens", vals.len()),
                });
            }
            if pairs.insert(vals[0], vals[1]).is_some() {
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("element {} mapped twice", vals[0]),
                });
            }
        }
        let n = *pairs.keys().max().unwrap();
        let mut image = Vec::with_capacity(n);
        for i in 1..=n {
            match pairs.get(&i) {
                Some(&v) => image.push(v),
                None => {
                    return Err(Error::InvalidPermutation {
                        msg: format!("element {i} has no image (n inferred as {n})"),
                    })
                }
            }
        }
        Self::from_image(image)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// π(i), 1-indexed.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Direct check of the freeness condition on `p`: every element's image
    /// lies outside `p`, with fixed points violating in `Strict` mode and
    /// ignored in `Weak` mode.
    pub fn leaves_free(&self, p: &Progression, mode: FixedPointMode) -> Result<bool> {
        if p.start < 1 || p.last() > self.n() {
            return Err(Error::OutOfRange {
                what: "progression element",
                value: p.last(),
                min: 1,
                max: self.n(),
            });
        }
        Ok(p.elements().iter().all(|&i| {
            let j = self.apply(i);
            if j == i {
                mode == FixedPointMode::Weak
            } else {
                !p.contains(j)
            }
        }))
    }
}
