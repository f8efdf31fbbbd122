use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard vertex limit. Subset enumeration over 2^n drives everything
/// downstream, so the library is explicitly desk-scale.
pub const MAX_VERTICES: usize = 24;

/// Subset of vertex indices of a specific graph, as a bit-mask.
/// Bit i set means vertex i (0-based) is a member.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= 32);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> VertexSet {
        VertexSet(1 << i)
    }

    pub fn from_indices(indices: &[usize]) -> VertexSet {
        let mut m = 0u32;
        for &i in indices {
            m |= 1 << i;
        }
        VertexSet(m)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, i: usize) -> VertexSet {
        VertexSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Finite simple graph with ordered, distinct vertex labels.
/// Adjacency is stored as one neighbor mask per vertex; the structure
/// is immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Graph {
    /// Graph with explicit labels and 0-based edge pairs.
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel { label: l.clone() });
            }
        }
        let mut adj = vec![0u32; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    index: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop {
                    label: labels[u].clone(),
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { labels, adj })
    }

    /// Graph on n vertices labeled x1..xn with 1-based edge pairs.
    /// Duplicate edges collapse; loops and out-of-range indices are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        for &(u, v) in edges {
            if u < 1 || v < 1 || u > n || v > n {
                return Err(Error::VertexOutOfRange {
                    index: u.max(v),
                    n,
                });
            }
        }
        let shifted: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Graph::new(default_labels(n), &shifted)
    }

    /// Path x1 - x2 - ... - xn. A single vertex is allowed.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::FamilyRange {
                family: "path".into(),
                min: 1,
                n,
            });
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(default_labels(n), &edges)
    }

    /// Cycle x1 - x2 - ... - xn - x1. Needs n >= 3 to stay simple.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::FamilyRange {
                family: "cycle".into(),
                min: 3,
                n,
            });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(default_labels(n), &edges)
    }

    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(default_labels(n), &[])
    }

    /// Labeled graph from an edge bit-mask. Bit k encodes the k-th pair
    /// in lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2), ...
    /// This fixes the enumeration order of "all labeled graphs on n vertices".
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        debug_assert!(k == n * n.saturating_sub(1) / 2);
        Graph::new(default_labels(n), &edges)
    }

    /// Number of labeled graphs on n vertices, i.e. the mask range for
    /// [`Graph::from_edge_mask`].
    pub fn edge_mask_count(n: usize) -> u64 {
        1u64 << (n * n.saturating_sub(1) / 2)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel {
                label: label.to_string(),
            })
    }

    /// Resolves a set of labels to a vertex set.
    pub fn set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for l in labels {
            s = s.with(self.index_of(l)?);
        }
        Ok(s)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Edges as 0-based pairs (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v]).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// True if some vertex of W has no neighbor inside W.
    pub fn has_isolated_vertex_in(&self, w: VertexSet) -> bool {
        w.iter().any(|v| self.adj[v] & w.0 == 0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.has_isolated_vertex_in(self.vertices())
    }

    /// Induced subgraph on W. Labels are preserved; vertex order follows
    /// the original order, so indices are compressed.
    pub fn induced(&self, w: VertexSet) -> Graph {
        let keep: Vec<usize> = w.iter().collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut adj = vec![0u32; keep.len()];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.has_edge(i, j) {
                    adj[a] |= 1 << b;
                }
            }
        }
        Graph { labels, adj }
    }

    /// Adjoins a new vertex adjacent to exactly the vertices of C, appended
    /// last and labeled "z" (primed on a label clash). C = V gives the full
    /// suspension; any C is allowed.
    pub fn suspend(&self, c: VertexSet) -> Result<Graph> {
        let n = self.n();
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: n + 1,
                limit: MAX_VERTICES,
            });
        }
        debug_assert!(c.is_subset_of(self.vertices()));
        let mut apex = String::from("z");
        while self.labels.contains(&apex) {
            apex.push('\'');
        }
        let mut labels = self.labels.clone();
        labels.push(apex);
        let mut adj = self.adj.clone();
        adj.push(c.0);
        for v in c.iter() {
            adj[v] |= 1 << n;
        }
        Ok(Graph { labels, adj })
    }

    /// Index of the suspension vertex, i.e. the last one.
    pub fn apex_index(&self) -> usize {
        self.n() - 1
    }

    pub fn is_independent(&self, x: VertexSet) -> bool {
        x.iter().all(|v| self.adj[v] & x.0 == 0)
    }

    /// Independent and not extendable: every vertex outside X sees X.
    pub fn is_maximal_independent(&self, x: VertexSet) -> bool {
        if !self.is_independent(x) {
            return false;
        }
        self.vertices()
            .minus(x)
            .iter()
            .all(|v| self.adj[v] & x.0 != 0)
    }

    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        self.is_independent(self.vertices().minus(c))
    }

    /// All maximal independent sets, sorted by bit-mask value.
    /// Brute force over every subset; complete by construction.
    pub fn maximal_independent_sets(&self) -> Result<Vec<VertexSet>> {
        let n = self.n();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut out = Vec::new();
        for mask in 0..1u32 << n {
            let s = VertexSet(mask);
            if self.is_maximal_independent(s) {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Minimal vertex covers are exactly complements of maximal
    /// independent sets.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        let full = self.vertices();
        let mut covers: Vec<VertexSet> = self
            .maximal_independent_sets()?
            .into_iter()
            .map(|x| full.minus(x))
            .collect();
        covers.sort();
        Ok(covers)
    }

    /// Maximum cardinality of a minimal vertex cover.
    pub fn big_height(&self) -> Result<usize> {
        Ok(self
            .minimal_vertex_covers()?
            .into_iter()
            .map(|c| c.len())
            .max()
            .unwrap_or(0))
    }

    /// Independence number, by branching on a maximum-degree vertex with
    /// memoization on the remaining vertex mask.
    pub fn independence_number(&self) -> usize {
        let mut memo: HashMap<u32, usize> = HashMap::new();
        self.alpha_rec(self.vertices(), &mut memo)
    }

    fn alpha_rec(&self, avail: VertexSet, memo: &mut HashMap<u32, usize>) -> usize {
        if avail.is_empty() {
            return 0;
        }
        if let Some(&a) = memo.get(&avail.0) {
            return a;
        }
        let pivot = avail
            .iter()
            .max_by_key(|&v| (self.adj[v] & avail.0).count_ones())
            .unwrap();
        if self.adj[pivot] & avail.0 == 0 {
            // everything left is isolated within avail
            let a = avail.len();
            memo.insert(avail.0, a);
            return a;
        }
        let skip = self.alpha_rec(avail.without(pivot), memo);
        let take = 1 + self.alpha_rec(avail.minus(self.closed_neighborhood(pivot)), memo);
        let a = skip.max(take);
        memo.insert(avail.0, a);
        a
    }

    pub fn min_vertex_cover_size(&self) -> usize {
        self.n() - self.independence_number()
    }

    /// Concatenates two graphs with no cross edges. Vertices are relabeled
    /// x1..x(n+m) so label clashes cannot occur.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n();
        let m = other.n();
        let mut edges = self.edges();
        for (u, v) in other.edges() {
            edges.push((u + n, v + n));
        }
        Graph::new(default_labels(n + m), &edges)
    }

    /// Parses the edge-list text format: first non-comment line is n,
    /// then one `u v` pair per line, 1-indexed. `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parse_tok = |t: &str| -> Result<usize> {
                t.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected an integer, got {t:?}"),
                })
            };
            match n {
                None => {
                    if toks.len() != 1 {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("expected vertex count alone, got {line:?}"),
                        });
                    }
                    n = Some(parse_tok(toks[0])?);
                }
                Some(_) => {
                    if toks.len() != 2 {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("expected `u v`, got {line:?}"),
                        });
                    }
                    edges.push((parse_tok(toks[0])?, parse_tok(toks[1])?));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "empty input, expected a vertex count".into(),
        })?;
        Graph::build(n, &edges)
    }

    /// Inverse of [`Graph::parse_edge_list`], modulo comments.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Edges as 1-based pairs, for reports.
    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }
}
