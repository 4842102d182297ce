//! Dense undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex, plus graph6 interchange and a few exact small-graph
//! utilities.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the number of vertices of a [`Graph`].
pub const MAX_VERTICES: usize = 64;

/// Largest graph accepted by [`longest_path_order`].
pub const LONGEST_PATH_CAP: usize = 24;

/// Largest graph [`emit_graph6`] will encode (single-byte size header).
pub const GRAPH6_EMIT_CAP: usize = 62;

/// A set of vertex indices below [`MAX_VERTICES`], iterated in increasing order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u64 << v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Number of elements strictly smaller than `v`.
    pub fn rank(self, v: usize) -> usize {
        if v >= MAX_VERTICES {
            return self.len();
        }
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph without loops on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count",
                value: n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).bits() & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !((2u64 << u) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(())
    }

    /// Appends a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.n == MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count",
                value: self.n + 1,
                cap: MAX_VERTICES,
            });
        }
        self.adj.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| s.bits() & !(1u64 << v) & !self.adj[v] == 0)
    }

    /// Graph on the same vertices with exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.n,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

/// Subgraph induced by `s`. Vertex `i` of the result is the `i`-th smallest
/// member of `s`.
pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Result<Graph> {
    g.check_set(s)?;
    let members = s.to_vec();
    let adj = members
        .iter()
        .map(|&v| compress(g.adj[v] & s.bits(), s.bits()))
        .collect();
    Ok(Graph {
        n: members.len(),
        adj,
    })
}

/// Removes `v`; vertices above `v` shift down by one.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut keep = g.vertices();
    keep.remove(v);
    induced_subgraph(g, keep)
}

// Packs the bits of `word` selected by `mask` into the low bits.
fn compress(word: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut bit = 0;
    let mut m = mask;
    while m != 0 {
        let low = m.trailing_zeros();
        if word >> low & 1 == 1 {
            out |= 1u64 << bit;
        }
        bit += 1;
        m &= m - 1;
    }
    out
}

/// Number of vertices of a longest simple path in `g` (0 for the empty graph).
pub fn longest_path_order(g: &Graph) -> Result<usize> {
    if g.n > LONGEST_PATH_CAP {
        return Err(Error::CapExceeded {
            what: "longest path search",
            value: g.n,
            cap: LONGEST_PATH_CAP,
        });
    }
    let mut best = 0;
    for start in 0..g.n {
        if best == g.n {
            break;
        }
        extend_path(g, start, VertexSet::singleton(start).bits(), 1, &mut best);
    }
    Ok(best)
}

fn extend_path(g: &Graph, end: usize, used: u64, len: usize, best: &mut usize) {
    if len > *best {
        *best = len;
    }
    // Bound: the path can only grow inside the unused component of `end`.
    let reach = reachable(g, end, !used & g.vertices().bits());
    if len + reach.count_ones() as usize <= *best {
        return;
    }
    for next in VertexSet(g.adj[end] & !used) {
        extend_path(g, next, used | 1u64 << next, len + 1, best);
        if *best == g.n {
            return;
        }
    }
}

// Vertices of `allowed` reachable from `from` through `allowed`, excluding `from`.
fn reachable(g: &Graph, from: usize, allowed: u64) -> u64 {
    let mut seen = 0u64;
    let mut frontier = g.adj[from] & allowed;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0u64;
        for v in VertexSet(frontier) {
            next |= g.adj[v];
        }
        frontier = next & allowed & !seen;
    }
    seen
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some((pos, &b)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} at offset {pos} is outside the printable range 63..=126"
        )));
    }
    let (n, header) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte size header".into()));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "vertex count",
            value: n,
            cap: MAX_VERTICES,
        });
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let body = &bytes[header..];
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} edge bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = (body[k / 6] - 63) & ((1u8 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding (no header, no newline).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    if g.n > GRAPH6_EMIT_CAP {
        return Err(Error::CapExceeded {
            what: "graph6 output",
            value: g.n,
            cap: GRAPH6_EMIT_CAP,
        });
    }
    let mut out = Vec::with_capacity(1 + (g.n * g.n) / 12 + 1);
    out.push(63 + g.n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..g.n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
