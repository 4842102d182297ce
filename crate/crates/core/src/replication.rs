//! Vertex replication: each `w` in `W` gains a clone adjacent to `w` and to
//! every neighbour of `w`.
//!
//! Clones are appended after the original vertices; the clone of the `k`-th
//! smallest member of `W` gets index `|V(G)| + k`. With that naming the
//! result does not depend on the order in which `W` is processed.

use crate::error::{Error, Result};
use crate::gallai::{GallaiGraph, VertexName};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplicatedGraph {
    graph: Graph,
    original_count: usize,
    replicated: VertexSet,
    clone_of: Vec<usize>,
}

impl ReplicatedGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Number of vertices of the graph that was replicated.
    pub fn original_count(&self) -> usize {
        self.original_count
    }

    /// The replicated set `W`, as indices of the original graph.
    pub fn replicated(&self) -> VertexSet {
        self.replicated
    }

    /// Original of each clone, indexed by `clone - original_count`.
    pub fn clone_of(&self) -> &[usize] {
        &self.clone_of
    }

    pub fn is_clone(&self, v: usize) -> bool {
        v >= self.original_count && v < self.graph.vertex_count()
    }

    /// The original a vertex stands for (itself if it is not a clone).
    pub fn origin(&self, v: usize) -> usize {
        if self.is_clone(v) {
            self.clone_of[v - self.original_count]
        } else {
            v
        }
    }

    /// Index of the clone of `original`, if it was replicated.
    pub fn clone_index(&self, original: usize) -> Option<usize> {
        self.replicated
            .contains(original)
            .then(|| self.original_count + self.replicated.rank(original))
    }

    /// Clones of the members of `s` (which must be original vertices).
    pub fn clones_of(&self, s: VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.clone_index(v)).collect()
    }
}

/// `repl(G, W)`, replicating `W` in ascending order.
pub fn replicate(g: &Graph, w: VertexSet) -> Result<ReplicatedGraph> {
    let order = w.to_vec();
    replicate_in_order(g, &order)
}

/// Replicates the vertices of `order` one at a time, in the given order, then
/// renames clones canonically. Used to check order independence.
pub fn replicate_in_order(g: &Graph, order: &[usize]) -> Result<ReplicatedGraph> {
    let w: VertexSet = order.iter().copied().collect();
    if w.len() != order.len() {
        return Err(Error::InvalidArgument(
            "replicated vertices must be distinct".into(),
        ));
    }
    g.check_set(w)?;
    let n = g.vertex_count();
    let mut work = g.clone();
    let mut made = Vec::with_capacity(order.len());
    for &v in order {
        let c = work.add_vertex()?;
        let nbrs = work.neighbours(v);
        for u in nbrs {
            work.add_edge(c, u)?;
        }
        work.add_edge(c, v)?;
        made.push((v, c));
    }
    // Rename: the clone of the k-th smallest member of W goes to n + k.
    let mut rename: Vec<usize> = (0..work.vertex_count()).collect();
    for &(orig, c) in &made {
        rename[c] = n + w.rank(orig);
    }
    let mut graph = Graph::empty(work.vertex_count())?;
    for (u, v) in work.edges() {
        graph.add_edge(rename[u], rename[v])?;
    }
    Ok(ReplicatedGraph {
        graph,
        original_count: n,
        replicated: w,
        clone_of: w.to_vec(),
    })
}

/// Names of the vertices of a replicated Gallai graph.
pub fn vertex_name(h: &GallaiGraph, rg: &ReplicatedGraph, v: usize) -> VertexName {
    let mut name = h.name(rg.origin(v));
    name.clone = rg.is_clone(v);
    name
}

fn check_gallai_based(h: &GallaiGraph, rg: &ReplicatedGraph, i: usize) -> Result<()> {
    if rg.original_count != h.graph().vertex_count() {
        return Err(Error::InvalidArgument(format!(
            "replicated graph is not based on H_{}",
            h.n()
        )));
    }
    h.column(i).map(|_| ())
}

/// `X_i`: the column `C_i` together with the clones of its replicated members.
pub fn clique_x(h: &GallaiGraph, rg: &ReplicatedGraph, i: usize) -> Result<VertexSet> {
    check_gallai_based(h, rg, i)?;
    let col = h.column(i)?;
    Ok(col.union(rg.clones_of(col.intersection(rg.replicated))))
}

/// `Y_i = X_i ∪ X_{i+1 mod n}`.
pub fn segment_y(h: &GallaiGraph, rg: &ReplicatedGraph, i: usize) -> Result<VertexSet> {
    Ok(clique_x(h, rg, i)?.union(clique_x(h, rg, (i + 1) % h.n())?))
}
