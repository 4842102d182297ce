//! Exact colouring: k-colourability, chromatic number, and vertex/edge
//! criticality.
//!
//! The search is DSATUR-ordered backtracking on bitsets. Before searching,
//! vertices of degree below `k` are peeled off (they can always be coloured
//! last), and a maximum clique of the remaining core is pre-coloured
//! `0..ω`, which both proves infeasibility early when `ω > k` and removes
//! colour-permutation symmetry.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{delete_vertex, Graph, VertexSet};

const UNCOLOURED: u8 = u8::MAX;

/// A colouring with colours `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colours: Vec<u8>,
    pub k: u8,
}

impl Coloring {
    pub fn new(colours: Vec<u8>, k: u8) -> Self {
        Coloring { colours, k }
    }

    pub fn colour(&self, v: usize) -> u8 {
        self.colours[v]
    }

    /// Colouring of the induced subgraph on `s`, re-indexed like
    /// [`crate::graph::induced_subgraph`].
    pub fn restrict(&self, s: VertexSet) -> Coloring {
        Coloring {
            colours: s.iter().map(|v| self.colours[v]).collect(),
            k: self.k,
        }
    }

    fn from_zero_based(c: &[u8], k: u32) -> Self {
        Coloring {
            colours: c.iter().map(|&x| x + 1).collect(),
            k: k as u8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringViolation {
    LengthMismatch { colours: usize, vertices: usize },
    OutOfPalette { vertex: usize, colour: u8, k: u8 },
    Monochromatic { u: usize, v: usize, colour: u8 },
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringViolation::LengthMismatch { colours, vertices } => {
                write!(f, "{colours} colours given for {vertices} vertices")
            }
            ColoringViolation::OutOfPalette { vertex, colour, k } => {
                write!(f, "vertex {vertex} has colour {colour} outside 1..={k}")
            }
            ColoringViolation::Monochromatic { u, v, colour } => {
                write!(f, "edge {u}-{v} has both ends coloured {colour}")
            }
        }
    }
}

impl std::error::Error for ColoringViolation {}

/// Checks that `c` is a proper colouring of `g` using colours `1..=c.k`.
pub fn validate_coloring(g: &Graph, c: &Coloring) -> std::result::Result<(), ColoringViolation> {
    if c.colours.len() != g.vertex_count() {
        return Err(ColoringViolation::LengthMismatch {
            colours: c.colours.len(),
            vertices: g.vertex_count(),
        });
    }
    for (v, &col) in c.colours.iter().enumerate() {
        if col == 0 || col > c.k {
            return Err(ColoringViolation::OutOfPalette {
                vertex: v,
                colour: col,
                k: c.k,
            });
        }
    }
    for (u, v) in g.edges() {
        if c.colours[u] == c.colours[v] {
            return Err(ColoringViolation::Monochromatic {
                u,
                v,
                colour: c.colours[u],
            });
        }
    }
    Ok(())
}

/// A maximum clique of `g`.
pub fn max_clique(g: &Graph) -> VertexSet {
    let adj: Vec<u64> = (0..g.vertex_count())
        .map(|v| g.neighbours(v).bits())
        .collect();
    let mut best = 0u64;
    clique_expand(&adj, 0, g.vertices().bits(), &mut best);
    VertexSet::from_bits(best)
}

fn clique_expand(adj: &[u64], clique: u64, mut cand: u64, best: &mut u64) {
    let (order, bounds) = colour_sort(adj, cand);
    let size = clique.count_ones();
    for idx in (0..order.len()).rev() {
        if size + bounds[idx] <= best.count_ones() {
            return;
        }
        let v = order[idx];
        let next = cand & adj[v];
        let grown = clique | 1u64 << v;
        if next == 0 {
            if grown.count_ones() > best.count_ones() {
                *best = grown;
            }
        } else {
            clique_expand(adj, grown, next, best);
        }
        cand &= !(1u64 << v);
    }
}

// Greedy colour classes of `cand`; bounds[i] is the colour number of order[i].
fn colour_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut rest = cand;
    let mut colour = 0;
    while rest != 0 {
        colour += 1;
        let mut avail = rest;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !adj[v] & !(1u64 << v);
            rest &= !(1u64 << v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

struct Search<'a> {
    adj: &'a [u64],
    k: usize,
    colour: Vec<u8>,
    class: Vec<u64>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c as u8;
        self.class[c] |= 1u64 << v;
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = UNCOLOURED;
        self.class[c] &= !(1u64 << v);
    }

    fn forbidden(&self, v: usize) -> u64 {
        let mut f = 0u64;
        for (c, &members) in self.class.iter().enumerate() {
            if members & self.adj[v] != 0 {
                f |= 1u64 << c;
            }
        }
        f
    }

    fn solve(&mut self, uncoloured: u64, used: usize) -> bool {
        if uncoloured == 0 {
            return true;
        }
        let all = if self.k == 64 {
            u64::MAX
        } else {
            (1u64 << self.k) - 1
        };
        let mut pick = usize::MAX;
        let mut pick_forb = 0u64;
        let mut key = (0u32, 0u32);
        for v in VertexSet::from_bits(uncoloured) {
            let forb = self.forbidden(v);
            if forb & all == all {
                return false;
            }
            let cand = (forb.count_ones(), (self.adj[v] & uncoloured).count_ones());
            if pick == usize::MAX || cand > key {
                pick = v;
                pick_forb = forb;
                key = cand;
            }
        }
        let rest = uncoloured & !(1u64 << pick);
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if pick_forb >> c & 1 == 1 {
                continue;
            }
            self.assign(pick, c);
            if self.solve(rest, used.max(c + 1)) {
                return true;
            }
            self.unassign(pick, c);
        }
        false
    }
}

/// A proper colouring of `g` with colours `0..k`, if one exists.
fn find_coloring(g: &Graph, k: usize) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbours(v).bits()).collect();

    // Peel vertices of degree < k; they are coloured greedily afterwards in
    // reverse order.
    let mut core = g.vertices().bits();
    let mut peeled = Vec::new();
    loop {
        let low: Vec<usize> = VertexSet::from_bits(core)
            .iter()
            .filter(|&v| ((adj[v] & core).count_ones() as usize) < k)
            .collect();
        if low.is_empty() {
            break;
        }
        for v in low {
            if ((adj[v] & core).count_ones() as usize) < k {
                core &= !(1u64 << v);
                peeled.push(v);
            }
        }
    }

    let mut colour = vec![UNCOLOURED; n];
    if core != 0 {
        let core_adj: Vec<u64> = adj.iter().map(|a| a & core).collect();
        let mut best = 0u64;
        clique_expand(&core_adj, 0, core, &mut best);
        let omega = best.count_ones() as usize;
        if omega > k {
            return None;
        }
        let mut search = Search {
            adj: &core_adj,
            k,
            colour: vec![UNCOLOURED; n],
            class: vec![0; k],
        };
        for (c, v) in VertexSet::from_bits(best).iter().enumerate() {
            search.assign(v, c);
        }
        if !search.solve(core & !best, omega) {
            return None;
        }
        colour = search.colour;
    }
    for &v in peeled.iter().rev() {
        let mut used = 0u64;
        for u in VertexSet::from_bits(adj[v]) {
            if colour[u] != UNCOLOURED {
                used |= 1u64 << colour[u];
            }
        }
        let c = (!used).trailing_zeros() as usize;
        debug_assert!(c < k);
        colour[v] = c as u8;
    }
    Some(colour)
}

// DSATUR without backtracking: an upper bound with witness.
fn greedy_dsatur(g: &Graph) -> (usize, Vec<u8>) {
    let n = g.vertex_count();
    let mut colour = vec![UNCOLOURED; n];
    let mut forb = vec![0u64; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == UNCOLOURED)
            .max_by_key(|&v| (forb[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let c = (!forb[v]).trailing_zeros() as usize;
        colour[v] = c as u8;
        used = used.max(c + 1);
        for u in g.neighbours(v) {
            forb[u] |= 1u64 << c;
        }
    }
    (used, colour)
}

/// A proper colouring of `g` with colours `1..=k`, or `None` if `g` is not
/// `k`-colourable.
pub fn is_k_colorable(g: &Graph, k: u32) -> Option<Coloring> {
    // More colours than vertices never help.
    let search_k = (k as usize).min(g.vertex_count().max(1));
    find_coloring(g, search_k).map(|c| Coloring::from_zero_based(&c, k.min(u8::MAX as u32)))
}

/// Chromatic number of `g` with an optimal colouring.
pub fn chromatic_number(g: &Graph) -> (u32, Coloring) {
    if g.vertex_count() == 0 {
        return (0, Coloring::new(Vec::new(), 0));
    }
    let lower = max_clique(g).len();
    let (upper, greedy) = greedy_dsatur(g);
    for k in lower..upper {
        if let Some(c) = find_coloring(g, k) {
            return (k as u32, Coloring::from_zero_based(&c, k as u32));
        }
    }
    (
        upper as u32,
        Coloring::from_zero_based(&greedy, upper as u32),
    )
}

/// Exact chromatic numbers of `g` and of its one-vertex and (optionally)
/// one-edge deletions, judged against `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub k: u32,
    pub chi: u32,
    pub per_vertex_chi: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_edge_chi: Option<Vec<EdgeChi>>,
    pub is_vertex_critical: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub is_edge_critical: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeChi {
    pub u: usize,
    pub v: usize,
    pub chi: u32,
}

pub fn criticality(g: &Graph, k: u32, edges: bool) -> Result<CriticalityReport> {
    let (chi, _) = chromatic_number(g);
    // Deleting a vertex or an edge lowers the chromatic number by at most one.
    let drop_to = |h: &Graph| -> u32 {
        if chi > 0 && find_coloring(h, chi as usize - 1).is_some() {
            chi - 1
        } else {
            chi
        }
    };
    let mut per_vertex_chi = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        per_vertex_chi.push(drop_to(&delete_vertex(g, v)?));
    }
    let is_vertex_critical = chi == k && per_vertex_chi.iter().all(|&c| c + 1 == k);
    let per_edge_chi = if edges {
        let mut out = Vec::with_capacity(g.edge_count());
        for (u, v) in g.edges() {
            let mut h = g.clone();
            h.remove_edge(u, v)?;
            out.push(EdgeChi {
                u,
                v,
                chi: drop_to(&h),
            });
        }
        Some(out)
    } else {
        None
    };
    // Every proper subgraph lies inside a one-edge or one-vertex deletion.
    let is_edge_critical = per_edge_chi
        .as_ref()
        .map(|pe| is_vertex_critical && pe.iter().all(|e| e.chi + 1 == k));
    Ok(CriticalityReport {
        k,
        chi,
        per_vertex_chi,
        per_edge_chi,
        is_vertex_critical,
        is_edge_critical,
    })
}

/// Short-circuiting test for `k`-vertex-criticality.
pub fn is_vertex_critical(g: &Graph, k: u32) -> Result<bool> {
    if k == 0 {
        return Ok(false);
    }
    let k = k as usize;
    if find_coloring(g, k - 1).is_some() || find_coloring(g, k).is_none() {
        return Ok(false);
    }
    for v in 0..g.vertex_count() {
        if find_coloring(&delete_vertex(g, v)?, k - 1).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A vertex `v` with `χ(g - v) > k`, if any.
pub fn vertex_keeping_chi_above(g: &Graph, k: u32) -> Result<Option<usize>> {
    for v in 0..g.vertex_count() {
        if find_coloring(&delete_vertex(g, v)?, k as usize).is_none() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let n = a.vertex_count();
        let mut g = Graph::empty(n + b.vertex_count()).unwrap();
        for (u, v) in a.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in b.edges() {
            g.add_edge(n + u, n + v).unwrap();
        }
        g
    }

    #[test]
    fn complete_graphs() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_k_colorable(&k4, 3).is_none());
        let c = is_k_colorable(&k4, 4).unwrap();
        assert!(validate_coloring(&k4, &c).is_ok());
        assert_eq!(chromatic_number(&k4).0, 4);
        assert_eq!(max_clique(&k4).len(), 4);
    }

    #[test]
    fn empty_and_edgeless() {
        let e0 = Graph::empty(0).unwrap();
        assert_eq!(chromatic_number(&e0).0, 0);
        assert!(is_k_colorable(&e0, 0).is_some());
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(chromatic_number(&e3).0, 1);
        assert!(is_k_colorable(&e3, 0).is_none());
    }

    #[test]
    fn odd_cycles_and_wheels() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(chromatic_number(&c5).0, 3);
        let mut w5 = Graph::cycle(5).unwrap();
        let hub = w5.add_vertex().unwrap();
        for v in 0..5 {
            w5.add_edge(hub, v).unwrap();
        }
        assert_eq!(chromatic_number(&w5).0, 4);
    }

    #[test]
    fn validate_reports_reasons() {
        let k2 = Graph::complete(2).unwrap();
        let bad = Coloring::new(vec![1, 1], 2);
        assert_eq!(
            validate_coloring(&k2, &bad),
            Err(ColoringViolation::Monochromatic {
                u: 0,
                v: 1,
                colour: 1
            })
        );
        let palette = Coloring::new(vec![1, 3], 2);
        assert!(matches!(
            validate_coloring(&k2, &palette),
            Err(ColoringViolation::OutOfPalette { vertex: 1, .. })
        ));
        let short = Coloring::new(vec![1], 2);
        assert!(validate_coloring(&k2, &short).is_err());
        let c5 = Graph::cycle(5).unwrap();
        assert!(validate_coloring(&c5, &Coloring::new(vec![1, 2, 1, 2, 3], 3)).is_ok());
    }

    #[test]
    fn criticality_of_small_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        let r = criticality(&c5, 3, false).unwrap();
        assert!(r.is_vertex_critical);
        assert_eq!(r.is_edge_critical, None);
        assert!(is_vertex_critical(&c5, 3).unwrap());

        let g = disjoint_union(&Graph::complete(4).unwrap(), &Graph::empty(1).unwrap());
        let r = criticality(&g, 4, true).unwrap();
        assert_eq!(r.chi, 4);
        assert_eq!(r.per_vertex_chi[4], 4);
        assert!(!r.is_vertex_critical);
        assert_eq!(r.is_edge_critical, Some(false));
        assert!(!is_vertex_critical(&g, 4).unwrap());
        assert_eq!(vertex_keeping_chi_above(&g, 3).unwrap(), Some(4));

        let k1 = Graph::empty(1).unwrap();
        assert!(criticality(&k1, 1, true).unwrap().is_edge_critical.unwrap());
    }

    #[test]
    fn bowtie_is_not_critical() {
        // Two triangles sharing vertex 2.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let r = criticality(&g, 3, true).unwrap();
        assert_eq!(r.chi, 3);
        assert!(!r.is_vertex_critical);
        assert_eq!(r.per_vertex_chi[2], 2);
    }
}
