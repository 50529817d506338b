//! Labeled simple undirected graphs and the elementary transformations the
//! counting algorithms consume: contraction, deletion, vertex merging,
//! clique-ification, matching extraction, component and bridge detection.
//!
//! Vertices carry labels that are *sets of original-vertex identifiers*;
//! contraction merges labels, so the contraction history of a graph stays
//! observable. Graphs are immutable values: every transformation returns a
//! new graph. The vertex list is always sorted by label, so structurally
//! equal graphs compare equal and can serve as memo keys.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::partition::SetPartition;

/// Hard ceiling on the number of vertices; single-byte graph6 headers cover
/// exactly this range and a `u64` bitset row covers it with room to spare.
pub const MAX_VERTICES: usize = 62;

/// A vertex label: the nonempty, sorted set of original-vertex identifiers
/// merged into this vertex by contractions. Fresh graphs have singletons.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Vec<u32>);

impl Label {
    fn singleton(id: u32) -> Self {
        Label(vec![id])
    }

    fn union(labels: impl IntoIterator<Item = Label>) -> Self {
        let mut ids: Vec<u32> = labels.into_iter().flat_map(|l| l.0).collect();
        ids.sort_unstable();
        ids.dedup();
        Label(ids)
    }

    pub fn ids(&self) -> &[u32] {
        &self.0
    }

    /// Smallest original id in the label; distinct labels of one graph have
    /// distinct minima because labels are pairwise disjoint.
    pub fn min_id(&self) -> u32 {
        self.0[0]
    }
}

/// Labeled simple undirected graph with bitset adjacency.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<Label>,
    adj: Vec<u64>,
    names: Arc<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
        self.adj.hash(state);
    }
}

fn default_names(n: usize) -> Arc<Vec<String>> {
    Arc::new((0..n).map(|i| i.to_string()).collect())
}

impl Graph {
    /// Edgeless graph on `n` fresh vertices `0..n`.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::ResourceCap {
                what: "graph vertices",
                requested: n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            labels: (0..n as u32).map(Label::singleton).collect(),
            adj: vec![0; n],
            names: default_names(n),
        })
    }

    /// Graph on `n` fresh vertices with the given edges (indices `< n`).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("{}", u.max(v))));
            }
            if u == v {
                return Err(Error::BadEdgeSet(format!("self-loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Rebuild from explicit labels and edges between label positions,
    /// restoring the sorted-by-label vertex order.
    fn from_parts(
        mut labels: Vec<Label>,
        edges: &BTreeSet<(usize, usize)>,
        names: Arc<Vec<String>>,
    ) -> Graph {
        let n = labels.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut position = vec![0usize; n];
        for (new_idx, &old_idx) in order.iter().enumerate() {
            position[old_idx] = new_idx;
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            let (u, v) = (position[u], position[v]);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut sorted_labels = Vec::with_capacity(n);
        for &old_idx in &order {
            sorted_labels.push(std::mem::replace(&mut labels[old_idx], Label(Vec::new())));
        }
        Graph {
            labels: sorted_labels,
            adj,
            names,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// True for the null graph (no vertices at all).
    pub fn is_null(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && v < self.vertex_count() && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor bitmask of `v`.
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.adj[v];
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(u)
            }
        })
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    /// Stable element id of a vertex: the smallest original id in its label.
    /// Vertex order is sorted by label, so element ids ascend with the index.
    pub fn element_id(&self, v: usize) -> u32 {
        self.labels[v].min_id()
    }

    /// Element ids of all vertices, ascending; the partition ground set.
    pub fn element_ids(&self) -> Vec<u32> {
        self.labels.iter().map(Label::min_id).collect()
    }

    /// Vertex index holding the given element id, if any.
    pub fn vertex_of_element(&self, id: u32) -> Option<usize> {
        self.labels.binary_search_by(|l| l.min_id().cmp(&id)).ok()
    }

    /// Human-readable name of a vertex (original names joined for merged
    /// vertices, e.g. `{a,b}`).
    pub fn vertex_name(&self, v: usize) -> String {
        let ids = self.labels[v].ids();
        if ids.len() == 1 {
            self.names[ids[0] as usize].clone()
        } else {
            let parts: Vec<&str> = ids.iter().map(|&i| self.names[i as usize].as_str()).collect();
            format!("{{{}}}", parts.join(","))
        }
    }

    /// Look up a fresh (singleton-labeled) vertex by its original name.
    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| {
            let ids = self.labels[v].ids();
            ids.len() == 1 && self.names[ids[0] as usize] == name
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            Err(Error::UnknownVertex(format!("index {v}")))
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::UnknownEdge(self.vertex_name(u), self.vertex_name(v)));
        }
        Ok(())
    }

    // ----- transformations ---------------------------------------------

    /// Contract every edge of `F`: each component of `(V, F)` collapses to a
    /// single vertex labeled by the union of its members' labels. Parallel
    /// edges collapse to single edges, self-loops vanish.
    pub fn contract(&self, f: &[(usize, usize)]) -> Result<Graph> {
        for &(u, v) in f {
            self.check_edge(u, v)?;
        }
        let groups = union_groups(self.vertex_count(), f);
        self.quotient(&groups)
    }

    /// Merge an arbitrary vertex set into a single vertex (the `G/X` of the
    /// neighborhood recursion; `X` need not induce a connected subgraph).
    pub fn merge_vertices(&self, xs: &[usize]) -> Result<Graph> {
        for &v in xs {
            self.check_vertex(v)?;
        }
        let mut groups: Vec<usize> = (0..self.vertex_count()).collect();
        if let Some(&root) = xs.iter().min() {
            for &v in xs {
                groups[v] = root;
            }
        }
        self.quotient(&groups)
    }

    /// Quotient by a vertex->group assignment.
    fn quotient(&self, groups: &[usize]) -> Result<Graph> {
        let mut reps: Vec<usize> = groups.to_vec();
        reps.sort_unstable();
        reps.dedup();
        let group_index = |g: usize| reps.binary_search(&g).unwrap();

        let mut member_labels: Vec<Vec<Label>> = vec![Vec::new(); reps.len()];
        for v in 0..self.vertex_count() {
            member_labels[group_index(groups[v])].push(self.labels[v].clone());
        }
        let labels: Vec<Label> = member_labels.into_iter().map(Label::union).collect();

        let mut edges = BTreeSet::new();
        for (u, v) in self.edges() {
            let (a, b) = (group_index(groups[u]), group_index(groups[v]));
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(Graph::from_parts(labels, &edges, self.names.clone()))
    }

    /// Remove the given vertices (with incident edges) and edges.
    pub fn delete(&self, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Graph> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        for &(u, v) in edges {
            self.check_edge(u, v)?;
        }
        let mut removed_mask = 0u64;
        for &v in vertices {
            removed_mask |= 1 << v;
        }
        let removed_edges: BTreeSet<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();

        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| removed_mask & (1 << v) == 0)
            .collect();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let mut new_edges = BTreeSet::new();
        for (u, v) in self.edges() {
            if removed_mask & (1 << u) != 0 || removed_mask & (1 << v) != 0 {
                continue;
            }
            if removed_edges.contains(&(u, v)) {
                continue;
            }
            new_edges.insert((new_index[u], new_index[v]));
        }
        let labels: Vec<Label> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(Graph::from_parts(labels, &new_edges, self.names.clone()))
    }

    /// Induced subgraph on the vertices of `mask`.
    pub fn induced(&self, mask: u64) -> Graph {
        let removed: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| mask & (1 << v) == 0)
            .collect();
        self.delete(&removed, &[]).expect("indices in range")
    }

    /// Add all missing edges inside `xs`, making it a clique.
    pub fn cliqueify(&self, xs: &[usize]) -> Result<Graph> {
        for &v in xs {
            self.check_vertex(v)?;
        }
        let mut g = self.clone();
        for (i, &u) in xs.iter().enumerate() {
            for &v in &xs[i + 1..] {
                if u != v {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
            }
        }
        Ok(g)
    }

    /// Remove the matching `m` together with all endpoints of its edges.
    pub fn extract_matching(&self, m: &[(usize, usize)]) -> Result<Graph> {
        let mut seen = 0u64;
        for &(u, v) in m {
            self.check_edge(u, v)?;
            let pair = (1u64 << u) | (1 << v);
            if seen & pair != 0 {
                return Err(Error::BadEdgeSet(format!(
                    "not a matching: edge ({}, {}) shares an endpoint",
                    self.vertex_name(u),
                    self.vertex_name(v)
                )));
            }
            seen |= pair;
        }
        let vertices: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| seen & (1 << v) != 0)
            .collect();
        self.delete(&vertices, &[])
    }

    // ----- connectivity --------------------------------------------------

    /// Full-vertex-set mask.
    pub fn full_mask(&self) -> u64 {
        if self.vertex_count() == 0 {
            0
        } else {
            (!0u64) >> (64 - self.vertex_count())
        }
    }

    /// Is the sub-vertex-set `mask` connected in `self`? The empty set and
    /// singletons count as connected.
    pub fn connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut reached = 1u64 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v] & mask & !reached;
            }
            reached |= next;
            frontier = next;
        }
        reached == mask
    }

    /// Connected components of the induced subgraph on `mask`, as masks in
    /// ascending order of their lowest vertex.
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut todo = mask;
        while todo != 0 {
            let start = todo.trailing_zeros() as usize;
            let mut reached = 1u64 << start;
            let mut frontier = reached;
            while frontier != 0 {
                let mut next = 0u64;
                let mut rest = frontier;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= self.adj[v] & mask & !reached;
                }
                reached |= next;
                frontier = next;
            }
            out.push(reached);
            todo &= !reached;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_within(self.full_mask())
    }

    /// The set partition of the vertex set induced by connected components.
    pub fn components(&self) -> SetPartition {
        let n = self.vertex_count();
        let mut assignment = vec![0u32; n];
        for (k, comp) in self.components_within(self.full_mask()).iter().enumerate() {
            let mut rest = *comp;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                assignment[v] = k as u32;
            }
        }
        SetPartition::from_assignment(self.element_ids(), &assignment)
    }

    /// Exactly the edges whose removal increases the component count.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let base = self.components_within(self.full_mask()).len();
        self.edges()
            .into_iter()
            .filter(|&(u, v)| {
                let g = self.delete(&[], &[(u, v)]).expect("edge exists");
                g.components_within(g.full_mask()).len() > base
            })
            .collect()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, m={};", self.vertex_count(), self.edge_count())?;
        for (u, v) in self.edges() {
            write!(f, " {}-{}", self.vertex_name(u), self.vertex_name(v))?;
        }
        write!(f, ")")
    }
}

/// Group vertices by the components of `(V, F)`; returns the smallest member
/// of each vertex's group.
fn union_groups(n: usize, f: &[(usize, usize)]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        if parent[v] != v {
            parent[v] = find(parent, parent[v]);
        }
        parent[v]
    }
    for &(u, v) in f {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        // smallest representative wins, for determinism
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

// ----- parsing ------------------------------------------------------------

/// Input formats accepted by [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

/// Parse one graph in the named format. graph6 expects a single line,
/// edge lists one `u v` pair per line.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text.trim_end_matches(['\r', '\n'])),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// Decode a graph6 line: `n` from the first byte, then the upper triangle
/// column-major, six bits per byte, most significant bit first.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            byte: 0,
            message: "empty input".into(),
        });
    }
    let first = bytes[0];
    if first == 126 {
        return Err(Error::Graph6 {
            byte: 0,
            message: "multi-byte vertex counts (n > 62) not supported".into(),
        });
    }
    if !(63..=125).contains(&first) {
        return Err(Error::Graph6 {
            byte: 0,
            message: format!("header byte {first} outside printable range 63..=125"),
        });
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - 1 != need {
        return Err(Error::Graph6 {
            byte: bytes.len().min(need + 1),
            message: format!(
                "bit-length mismatch: n={n} needs {need} body bytes, got {}",
                bytes.len() - 1
            ),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte_idx = 1 + bit / 6;
            let b = bytes[byte_idx];
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6 {
                    byte: byte_idx,
                    message: format!("body byte {b} outside printable range 63..=126"),
                });
            }
            let chunk = b - 63;
            if chunk & (1 << (5 - bit % 6)) != 0 {
                edges.push((row, col));
            }
            bit += 1;
            if bit >= bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 && need > 0 {
        let last = bytes[need] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6 {
                byte: need,
                message: "nonzero padding bits".into(),
            });
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encode a graph as a graph6 line (inverse of [`parse_graph6`]).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= MAX_VERTICES, "graph6 single-byte header caps at 62");
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            if g.has_edge(row, col) {
                body[bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push((n as u8 + 63) as char);
    for b in body {
        out.push((b + 63) as char);
    }
    out
}

/// Parse an edge list: one `u v` pair per line, vertices named by their
/// tokens and numbered in order of first appearance. Blank lines are
/// skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut index_of = std::collections::HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_display = lineno + 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::EdgeList {
                line: line_display,
                message: format!("expected two tokens, got {}", tokens.len()),
            });
        }
        let mut id = |tok: &str| -> usize {
            *index_of.entry(tok.to_string()).or_insert_with(|| {
                names.push(tok.to_string());
                names.len() - 1
            })
        };
        let (u, v) = (id(tokens[0]), id(tokens[1]));
        if u == v {
            return Err(Error::EdgeList {
                line: line_display,
                message: format!("self-loop at vertex {:?}", tokens[0]),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::EdgeList {
                line: line_display,
                message: format!("duplicate edge {:?} {:?}", tokens[0], tokens[1]),
            });
        }
        edges.push((u, v));
    }
    if names.len() > MAX_VERTICES {
        return Err(Error::ResourceCap {
            what: "graph vertices",
            requested: names.len(),
            cap: MAX_VERTICES,
        });
    }
    let mut g = Graph::from_edges(names.len(), &edges)?;
    g.names = Arc::new(names);
    Ok(g)
}

// ----- families -------------------------------------------------------

/// Parametrized graph families used as generators and closed-form fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Empty { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    CompleteMinusMatching { n: usize, m: usize },
    RandomTree { n: usize, seed: u64 },
    RandomForest { n: usize, m: usize, seed: u64 },
}

/// Build the named family member; deterministic for a fixed seed.
pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Empty { n } => Graph::new(n),
        FamilySpec::Path { n } => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParameters(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Complete { n } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::CompleteBipartite { s, t } => {
            let mut edges = Vec::new();
            for u in 0..s {
                for v in 0..t {
                    edges.push((u, s + v));
                }
            }
            Graph::from_edges(s + t, &edges)
        }
        FamilySpec::CompleteMinusMatching { n, m } => {
            if 2 * m > n {
                return Err(Error::InvalidParameters(format!(
                    "matching of {m} edges does not fit in {n} vertices"
                )));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    // matching edge i pairs vertices 2i and 2i+1
                    if v == u + 1 && u % 2 == 0 && u / 2 < m {
                        continue;
                    }
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::RandomTree { n, seed } => {
            if n == 0 {
                return Err(Error::InvalidParameters("tree needs n >= 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pruefer: Vec<usize> = (0..n.saturating_sub(2))
                .map(|_| rng.gen_range(0..n))
                .collect();
            Graph::from_edges(n, &pruefer_decode(n, &pruefer))
        }
        FamilySpec::RandomForest { n, m, seed } => {
            if m + 1 > n && !(n == 0 && m == 0) {
                return Err(Error::InvalidParameters(format!(
                    "forest on {n} vertices holds at most {} edges, requested {m}",
                    n.saturating_sub(1)
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    pairs.push((u, v));
                }
            }
            pairs.shuffle(&mut rng);
            let mut edges = Vec::new();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(parent: &mut [usize], v: usize) -> usize {
                if parent[v] != v {
                    parent[v] = find(parent, parent[v]);
                }
                parent[v]
            }
            for (u, v) in pairs {
                if edges.len() == m {
                    break;
                }
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
    }
}

/// Decode a Pruefer sequence into the edge list of a tree on `0..n`.
fn pruefer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    if n == 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut it = leaves.into_iter();
    let (a, b) = (it.next().unwrap(), it.next().unwrap());
    edges.push((a.min(b), a.max(b)));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        make_family(FamilySpec::Path { n }).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        make_family(FamilySpec::Cycle { n }).unwrap()
    }

    fn complete(n: usize) -> Graph {
        make_family(FamilySpec::Complete { n }).unwrap()
    }

    #[test]
    fn graph6_k2_and_e2() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!(e2.vertex_count(), 2);
        assert_eq!(e2.edge_count(), 0);
    }

    #[test]
    fn graph6_errors_name_positions() {
        match parse_graph6("") {
            Err(Error::Graph6 { byte: 0, .. }) => {}
            other => panic!("expected header error, got {other:?}"),
        }
        // 'D' says n=5 (needs 2 body bytes), only one given
        match parse_graph6("D?") {
            Err(Error::Graph6 { message, .. }) => assert!(message.contains("bit-length")),
            other => panic!("expected length error, got {other:?}"),
        }
        match parse_graph6(" A_") {
            Err(Error::Graph6 { byte: 0, .. }) => {}
            other => panic!("expected header error, got {other:?}"),
        }
    }

    #[test]
    fn edge_list_path() {
        let g = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.vertex_by_name("a"), Some(0));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn edge_list_errors_name_lines() {
        match parse_edge_list("a b\nc c") {
            Err(Error::EdgeList { line: 2, message }) => assert!(message.contains("self-loop")),
            other => panic!("expected self-loop at line 2, got {other:?}"),
        }
        match parse_edge_list("a b\nb a") {
            Err(Error::EdgeList { line: 2, message }) => assert!(message.contains("duplicate")),
            other => panic!("expected duplicate at line 2, got {other:?}"),
        }
        match parse_edge_list("a b c") {
            Err(Error::EdgeList { line: 1, .. }) => {}
            other => panic!("expected token error at line 1, got {other:?}"),
        }
    }

    #[test]
    fn contract_cycle_edge_gives_triangle() {
        let c4 = cycle(4);
        let g = c4.contract(&[(0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.label(0).ids(), &[0, 1]);
    }

    #[test]
    fn contract_empty_set_is_identity() {
        let g = cycle(5);
        assert_eq!(g.contract(&[]).unwrap(), g);
    }

    #[test]
    fn contract_whole_tree_collapses() {
        let p3 = path(3);
        let g = p3.contract(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.label(0).ids(), &[0, 1, 2]);
    }

    #[test]
    fn contract_rejects_non_edge() {
        assert!(path(3).contract(&[(0, 2)]).is_err());
    }

    #[test]
    fn delete_ops() {
        assert_eq!(complete(3).delete(&[0], &[]).unwrap(), complete(2));
        let c4_minus = cycle(4).delete(&[], &[(3, 0)]).unwrap();
        assert_eq!(c4_minus, path(4));
        let g = cycle(4);
        assert_eq!(g.delete(&[], &[]).unwrap(), g);
        assert!(g.delete(&[7], &[]).is_err());
        assert!(g.delete(&[], &[(0, 2)]).is_err());
    }

    #[test]
    fn components_partitions() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.components().blocks(), vec![vec![0, 1], vec![2]]);
        let e3 = Graph::new(3).unwrap();
        assert_eq!(e3.components().block_count(), 3);
        assert_eq!(cycle(5).components().block_count(), 1);
    }

    #[test]
    fn bridge_detection() {
        assert_eq!(path(3).bridges(), vec![(0, 1), (1, 2)]);
        assert!(cycle(4).bridges().is_empty());
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        edges.push((2, 3)); // pendant
        let g = Graph::from_edges(4, &edges).unwrap();
        assert_eq!(g.bridges(), vec![(2, 3)]);
    }

    #[test]
    fn bridges_match_component_counts() {
        // e is a bridge iff deleting it increases the component count
        for g in [path(5), cycle(5), complete(4)] {
            let base = g.components().block_count();
            for (u, v) in g.edges() {
                let without = g.delete(&[], &[(u, v)]).unwrap();
                let is_bridge = g.bridges().contains(&(u, v));
                assert_eq!(
                    without.components().block_count() == base + 1,
                    is_bridge
                );
            }
        }
    }

    #[test]
    fn cliqueify_cases() {
        let e3 = Graph::new(3).unwrap();
        assert_eq!(e3.cliqueify(&[0, 1, 2]).unwrap(), complete(3));
        let g = cycle(4);
        assert_eq!(g.cliqueify(&[]).unwrap(), g);
        assert_eq!(path(3).cliqueify(&[0, 2]).unwrap(), complete(3));
        assert!(g.cliqueify(&[9]).is_err());
    }

    #[test]
    fn extract_matching_cases() {
        let k4 = complete(4);
        assert_eq!(k4.extract_matching(&[(0, 1)]).unwrap(), complete(2));
        assert_eq!(k4.extract_matching(&[]).unwrap(), k4);
        let null = k4.extract_matching(&[(0, 1), (2, 3)]).unwrap();
        assert!(null.is_null());
        assert!(k4.extract_matching(&[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(complete(3), cycle(3));
        let tree = make_family(FamilySpec::RandomTree { n: 8, seed: 7 }).unwrap();
        assert_eq!(tree.edge_count(), 7);
        assert!(tree.is_connected());
        assert_eq!(
            tree,
            make_family(FamilySpec::RandomTree { n: 8, seed: 7 }).unwrap()
        );
        let forest = make_family(FamilySpec::RandomForest { n: 9, m: 5, seed: 3 }).unwrap();
        assert_eq!(forest.edge_count(), 5);
        assert!(forest.bridges().len() == 5);
        assert!(make_family(FamilySpec::RandomForest { n: 3, m: 3, seed: 0 }).is_err());
        assert!(make_family(FamilySpec::CompleteMinusMatching { n: 3, m: 2 }).is_err());
        let c4_like = make_family(FamilySpec::CompleteMinusMatching { n: 4, m: 2 }).unwrap();
        assert_eq!(c4_like.edge_count(), 4);
        assert!(c4_like.edges().iter().all(|&(u, v)| v != u + 1 || u % 2 == 1));
    }

    #[test]
    fn contract_composes_over_edge_set_unions() {
        let g = make_family(FamilySpec::CompleteBipartite { s: 3, t: 3 }).unwrap();
        let all = g.edges();
        for split in 0..all.len() {
            let (f1, f2) = all.split_at(split);
            let once = g.contract(&all).unwrap();
            let first = g.contract(f1).unwrap();
            // map f2's endpoints into the contracted graph via labels
            let f2_mapped: Vec<(usize, usize)> = f2
                .iter()
                .filter_map(|&(u, v)| {
                    let a = (0..first.vertex_count())
                        .find(|&w| first.label(w).ids().contains(&(u as u32)))?;
                    let b = (0..first.vertex_count())
                        .find(|&w| first.label(w).ids().contains(&(v as u32)))?;
                    (a != b).then_some((a.min(b), a.max(b)))
                })
                .collect();
            let twice = first.contract(&f2_mapped).unwrap();
            assert_eq!(once, twice, "split at {split}");
        }
    }

    #[test]
    fn merge_vertices_contracts_non_adjacent() {
        let p3 = path(3);
        let merged = p3.merge_vertices(&[0, 2]).unwrap();
        assert_eq!(merged.vertex_count(), 2);
        assert_eq!(merged.edge_count(), 1);
        assert_eq!(merged.label(0).ids(), &[0, 2]);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for col in 1..n {
                for row in 0..col {
                    if bits[k] {
                        edges.push((row, col));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let enc = to_graph6(&g);
            prop_assert_eq!(parse_graph6(&enc).unwrap(), g);
        }

        #[test]
        fn cliqueify_adds_exactly_inner_pairs(n in 2usize..7, sel in any::<u64>(), edge_bits in any::<u64>()) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if edge_bits & (1 << k) != 0 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let xs: Vec<usize> = (0..n).filter(|&v| sel & (1 << v) != 0).collect();
            let gx = g.cliqueify(&xs).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    let inside = xs.contains(&u) && xs.contains(&v);
                    prop_assert_eq!(gx.has_edge(u, v), g.has_edge(u, v) || inside);
                }
            }
        }
    }
}
