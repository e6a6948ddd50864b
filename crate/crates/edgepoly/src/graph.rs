//! Immutable labeled simple graphs on vertex set `{1, ..., d}`.
//!
//! Adjacency is stored as one fixed-width bitset row per vertex. Vertices are
//! 1-indexed in every public signature and in the text format, and 0-indexed
//! internally. All operations return new values; nothing mutates a built
//! graph, so graphs can be shared freely across threads.

use std::fmt;

/// Hard cap on the vertex count; bounds memory for the bitset rows.
pub const MAX_VERTICES: usize = 4096;

// ============================================================================
// Errors
// ============================================================================

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("{family} requires size at least {min}, got {got}")]
    SizeTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph has {0} vertices; the limit is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range 1..={d}")]
    VertexOutOfRange { vertex: usize, d: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("embedding must list {expected} vertices, got {got}")]
    EmbeddingSize { expected: usize, got: usize },
    #[error("embedding is not injective (vertex {0} repeated)")]
    EmbeddingNotInjective(usize),
    #[error("edge {{{u},{v}}} not present in the host graph")]
    EdgeNotInHost { u: usize, v: usize },
    #[error("empty input: expected a vertex count header")]
    ParseEmpty,
    #[error("invalid vertex count header, line {line}")]
    ParseBadHeader { line: usize },
    #[error("vertex out of range, line {line}")]
    ParseVertexOutOfRange { line: usize },
    #[error("expected \"i j\" with i < j, line {line}")]
    ParseBadEdge { line: usize },
    #[error("duplicate edge, line {line}")]
    ParseDuplicateEdge { line: usize },
    #[error("non-ASCII input, line {line}")]
    ParseNonAscii { line: usize },
}

// ============================================================================
// Edge
// ============================================================================

/// An undirected edge `{u, v}` with `1 <= u < v <= d`, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes endpoint order; rejects loops and out-of-range endpoints.
    pub fn new(a: usize, b: usize, d: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        for x in [a, b] {
            if x < 1 || x > d {
                return Err(GraphError::VertexOutOfRange { vertex: x, d });
            }
        }
        Ok(Self {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

// ============================================================================
// Graph
// ============================================================================

/// Immutable simple graph; see the module docs for conventions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    d: usize,
    words: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(d={}, m={}, edges=[", self.d, self.edge_count())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{},{}}}", e.u(), e.v())?;
        }
        write!(f, "])")
    }
}

impl Graph {
    fn blank(d: usize) -> Result<Self, GraphError> {
        if d < 1 {
            return Err(GraphError::SizeTooSmall {
                family: "graph",
                min: 1,
                got: d,
            });
        }
        if d > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(d));
        }
        let words = d.div_ceil(64);
        Ok(Self {
            d,
            words,
            adj: vec![0; d * words],
        })
    }

    /// Edgeless graph on `d` vertices.
    pub fn empty(d: usize) -> Result<Self, GraphError> {
        Self::blank(d)
    }

    /// Complete graph on `d` vertices.
    pub fn complete(d: usize) -> Result<Self, GraphError> {
        let mut g = Self::blank(d)?;
        for i in 0..d {
            for j in (i + 1)..d {
                g.set_edge0(i, j);
            }
        }
        Ok(g)
    }

    /// Complete bipartite graph with parts `{1..m}` and `{m+1..m+n}`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self, GraphError> {
        if m < 1 || n < 1 {
            return Err(GraphError::SizeTooSmall {
                family: "complete_bipartite",
                min: 1,
                got: m.min(n),
            });
        }
        let mut g = Self::blank(m + n)?;
        for i in 0..m {
            for j in m..(m + n) {
                g.set_edge0(i, j);
            }
        }
        Ok(g)
    }

    /// Cycle `1-2-...-n-1`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::SizeTooSmall {
                family: "cycle",
                min: 3,
                got: n,
            });
        }
        let mut g = Self::blank(n)?;
        for i in 0..n {
            g.set_edge0(i, (i + 1) % n);
        }
        Ok(g)
    }

    /// Path `1-2-...-n`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::blank(n)?;
        for i in 0..n.saturating_sub(1) {
            g.set_edge0(i, i + 1);
        }
        Ok(g)
    }

    /// Builds a graph from 1-indexed edge pairs, validating range, loops
    /// and duplicates.
    pub fn from_edges(d: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::blank(d)?;
        for &(a, b) in edges {
            let e = Edge::new(a, b, d)?;
            if g.has_edge0(e.u - 1, e.v - 1) {
                return Err(GraphError::DuplicateEdge { u: e.u, v: e.v });
            }
            g.set_edge0(e.u - 1, e.v - 1);
        }
        Ok(g)
    }

    // ------------------------------------------------------------------
    // Accessors
    // ------------------------------------------------------------------

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj.iter().map(|w| w.count_ones()).sum();
        (total / 2) as usize
    }

    /// Degree of 1-indexed vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        assert!((1..=self.d).contains(&v), "vertex {v} out of range");
        self.degree0(v - 1)
    }

    /// Whether `{a, b}` is an edge; 1-indexed.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        assert!((1..=self.d).contains(&a) && (1..=self.d).contains(&b));
        a != b && self.has_edge0(a - 1, b - 1)
    }

    /// All edges, sorted lexicographically, 1-indexed.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.d {
            let row = self.row0(i);
            for j in iter_bits_above(row, i) {
                out.push(Edge { u: i + 1, v: j + 1 });
            }
        }
        out
    }

    // ------------------------------------------------------------------
    // Internal 0-indexed plumbing (shared with the sibling modules)
    // ------------------------------------------------------------------

    pub(crate) fn row0(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn has_edge0(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub(crate) fn degree0(&self, i: usize) -> usize {
        self.row0(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn set_edge0(&mut self, i: usize, j: usize) {
        debug_assert!(i != j);
        self.adj[i * self.words + j / 64] |= 1 << (j % 64);
        self.adj[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn clear_edge0(&mut self, i: usize, j: usize) {
        self.adj[i * self.words + j / 64] &= !(1 << (j % 64));
        self.adj[j * self.words + i / 64] &= !(1 << (i % 64));
    }

    /// Popcount of the intersection of two adjacency rows.
    pub(crate) fn common_neighbors0(&self, i: usize, j: usize) -> usize {
        self.row0(i)
            .iter()
            .zip(self.row0(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// 0-indexed edge list as `u32` pairs, sorted; the hot-loop currency.
    pub(crate) fn edge_pairs0(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.d {
            for j in iter_bits_above(self.row0(i), i) {
                out.push((i as u32, j as u32));
            }
        }
        out
    }

    // ------------------------------------------------------------------
    // Operations
    // ------------------------------------------------------------------

    /// The graph on the same vertices whose edges are this graph's non-edges.
    pub fn complement(&self) -> Self {
        let mut g = Self::blank(self.d).expect("complement of a valid graph");
        for i in 0..self.d {
            for j in (i + 1)..self.d {
                if !self.has_edge0(i, j) {
                    g.set_edge0(i, j);
                }
            }
        }
        g
    }

    /// Removes the edges of `h`, embedded via `embedding`, from `self`.
    ///
    /// `embedding[k]` is the 1-indexed vertex of `self` hosting vertex `k+1`
    /// of `h`. The map must be injective and every edge of `h` must land on
    /// an edge of `self`. The vertex count never changes.
    pub fn subtract(&self, h: &Graph, embedding: &[usize]) -> Result<Self, GraphError> {
        if embedding.len() != h.d {
            return Err(GraphError::EmbeddingSize {
                expected: h.d,
                got: embedding.len(),
            });
        }
        let mut seen = vec![false; self.d];
        for &v in embedding {
            if v < 1 || v > self.d {
                return Err(GraphError::VertexOutOfRange { vertex: v, d: self.d });
            }
            if seen[v - 1] {
                return Err(GraphError::EmbeddingNotInjective(v));
            }
            seen[v - 1] = true;
        }
        let mut g = self.clone();
        for e in h.edges() {
            let (a, b) = (embedding[e.u() - 1], embedding[e.v() - 1]);
            if !g.has_edge0(a - 1, b - 1) {
                return Err(GraphError::EdgeNotInHost {
                    u: a.min(b),
                    v: a.max(b),
                });
            }
            g.clear_edge0(a - 1, b - 1);
        }
        Ok(g)
    }

    /// Connected components, ordered by smallest vertex, each with a flag
    /// telling whether it carries at least one edge (single isolated
    /// vertices do not).
    pub fn connected_components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.d];
        let mut out = Vec::new();
        let mut queue = Vec::new();
        for start in 0..self.d {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.clear();
            queue.push(start);
            let mut verts = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for w in iter_bits(self.row0(v), self.d) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                        verts.push(w);
                    }
                }
            }
            verts.sort_unstable();
            let has_edges = verts.len() > 1;
            out.push(Component {
                vertices: verts.into_iter().map(|v| v + 1).collect(),
                has_edges,
            });
        }
        out
    }

    /// BFS 2-coloring. Each component is colored independently with its
    /// lowest-index vertex in part one; within the returned parts vertices
    /// are sorted ascending. `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.d];
        let mut queue = Vec::new();
        for start in 0..self.d {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.clear();
            queue.push(start);
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for w in iter_bits(self.row0(v), self.d) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let mut part1 = Vec::new();
        let mut part2 = Vec::new();
        for (v, &c) in color.iter().enumerate() {
            if c == 0 {
                part1.push(v + 1);
            } else {
                part2.push(v + 1);
            }
        }
        Some(Bipartition { part1, part2 })
    }

    // ------------------------------------------------------------------
    // Text format
    // ------------------------------------------------------------------

    /// Parses the edge-list text format:
    ///
    /// ```text
    /// # optional comments
    /// d
    /// i j        (one edge per line, 1 <= i < j <= d)
    /// ```
    ///
    /// Blank lines are skipped, `#` starts a comment, duplicates are
    /// rejected, input must be ASCII. Errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut g: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if !raw.is_ascii() {
                return Err(GraphError::ParseNonAscii { line });
            }
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            match g {
                None => {
                    let d: usize = content
                        .parse()
                        .map_err(|_| GraphError::ParseBadHeader { line })?;
                    if d < 1 || d > MAX_VERTICES {
                        return Err(GraphError::ParseBadHeader { line });
                    }
                    g = Some(Graph::blank(d).expect("validated above"));
                }
                Some(ref mut graph) => {
                    let mut it = content.split_whitespace();
                    let i: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(GraphError::ParseBadEdge { line })?;
                    let j: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(GraphError::ParseBadEdge { line })?;
                    if it.next().is_some() {
                        return Err(GraphError::ParseBadEdge { line });
                    }
                    if i < 1 || i > graph.d || j < 1 || j > graph.d {
                        return Err(GraphError::ParseVertexOutOfRange { line });
                    }
                    if i >= j {
                        return Err(GraphError::ParseBadEdge { line });
                    }
                    if graph.has_edge0(i - 1, j - 1) {
                        return Err(GraphError::ParseDuplicateEdge { line });
                    }
                    graph.set_edge0(i - 1, j - 1);
                }
            }
        }
        g.ok_or(GraphError::ParseEmpty)
    }

    /// Emits the edge-list format with edges sorted lexicographically.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.d.to_string());
        out.push('\n');
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.u(), e.v()));
        }
        out
    }
}

/// One connected component, 1-indexed and sorted; `has_edges` is false
/// exactly for isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub has_edges: bool,
}

/// A proper 2-coloring; both parts sorted ascending, 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

// ============================================================================
// Bit iteration helpers
// ============================================================================

/// Iterates set bit positions `< d` of a row.
pub(crate) fn iter_bits(row: &[u64], d: usize) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(move |(wi, &w)| {
        std::iter::successors(Some(w), |&m| Some(m & m.wrapping_sub(1)))
            .take_while(|&m| m != 0)
            .map(move |m| wi * 64 + m.trailing_zeros() as usize)
            .filter(move |&b| b < d)
    })
}

/// Iterates set bit positions strictly greater than `lo`.
fn iter_bits_above(row: &[u64], lo: usize) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(move |(wi, &w)| {
        let mut w = w;
        if wi * 64 <= lo {
            let shift = lo + 1 - wi * 64;
            w = if shift >= 64 { 0 } else { w & (!0u64 << shift) };
        }
        std::iter::successors(Some(w), |&m| Some(m & m.wrapping_sub(1)))
            .take_while(|&m| m != 0)
            .map(move |m| wi * 64 + m.trailing_zeros() as usize)
    })
}

// ============================================================================
// Fixture
// ============================================================================

/// Cross edges of the 70-edge bipartite graph on `{1..10} | {11..20}` whose
/// complement is the fixture returned by [`fixture_g_prime`].
const G_PRIME_COMPLEMENT_EDGES: [(usize, usize); 70] = [
    (1, 12), (1, 14), (1, 15), (1, 16), (1, 18), (1, 19), (1, 20),
    (2, 11), (2, 12), (2, 13), (2, 15), (2, 17), (2, 19), (2, 20),
    (3, 11), (3, 12), (3, 13), (3, 14), (3, 15), (3, 16), (3, 18),
    (4, 14), (4, 15), (4, 16), (4, 17), (4, 18), (4, 19), (4, 20),
    (5, 11), (5, 12), (5, 13), (5, 15), (5, 17), (5, 18), (5, 20),
    (6, 12), (6, 16), (6, 17), (6, 18), (6, 19), (6, 20),
    (7, 11), (7, 12), (7, 13), (7, 14), (7, 16), (7, 17), (7, 19),
    (8, 11), (8, 12), (8, 13), (8, 14), (8, 15), (8, 18), (8, 19), (8, 20),
    (9, 11), (9, 14), (9, 15), (9, 16), (9, 17), (9, 18), (9, 19),
    (10, 11), (10, 13), (10, 15), (10, 16), (10, 18), (10, 19), (10, 20),
];

/// The 20-vertex, 120-edge graph whose complement is a specific 70-edge
/// bipartite graph on parts `{1..10} | {11..20}`. Its edge-polytope edge
/// count is 4203, which beats every 20-vertex graph whose complement
/// components are all complete bipartite (those max out at 4176).
pub fn fixture_g_prime() -> Graph {
    let bip = Graph::from_edges(20, &G_PRIME_COMPLEMENT_EDGES).expect("fixture data is valid");
    bip.complement()
}

// ============================================================================
// Tests
// ============================================================================
