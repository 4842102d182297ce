//! Gallai's 4-regular 4-edge-critical graphs `H_n`: the Cartesian product of
//! a path on `n` vertices with a triangle, closed up by three twisted edges
//! `(0, j) -- (n-1, -j)`.
//!
//! Vertex `(i, j)` (column `i`, row `j`) has index `3i + j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::z3::Z3;

/// Smallest admissible `n`.
pub const MIN_N: usize = 4;

/// Largest `n` whose `H_n` (with every vertex replicated) still fits in a [`Graph`].
pub const MAX_N: usize = MAX_VERTICES / 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiGraph {
    n: usize,
    graph: Graph,
}

/// Name of a vertex of `H_n` or of one of its replications.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexName {
    pub column: usize,
    pub row: Z3,
    pub clone: bool,
}

impl VertexName {
    pub fn original(column: usize, row: Z3) -> Self {
        VertexName {
            column,
            row,
            clone: false,
        }
    }
}

impl fmt::Display for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.column, self.row)?;
        if self.clone {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl FromStr for VertexName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, clone) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (i, j) = body
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("vertex name {s:?} is not of the form i,j")))?;
        let column = i
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("column in {s:?}: {e}")))?;
        let row = j
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("row in {s:?}: {e}")))?;
        Ok(VertexName {
            column,
            row: Z3::new(row),
            clone,
        })
    }
}

/// Builds `H_n` for `n >= 4`.
pub fn build_h(n: usize) -> Result<GallaiGraph> {
    if n < MIN_N {
        return Err(Error::InvalidArgument(format!(
            "H_n is defined for n >= {MIN_N}, got {n}"
        )));
    }
    if n > MAX_N {
        return Err(Error::CapExceeded {
            what: "Gallai order n",
            value: n,
            cap: MAX_N,
        });
    }
    let mut graph = Graph::empty(3 * n)?;
    let idx = |i: usize, j: Z3| 3 * i + j.index();
    for i in 0..n {
        for j in Z3::ALL {
            graph.add_edge(idx(i, j), idx(i, j + Z3::ONE))?;
            if i + 1 < n {
                graph.add_edge(idx(i, j), idx(i + 1, j))?;
            }
        }
    }
    for j in Z3::ALL {
        graph.add_edge(idx(0, j), idx(n - 1, -j))?;
    }
    Ok(GallaiGraph { n, graph })
}

impl GallaiGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn vertex(&self, column: usize, row: Z3) -> usize {
        debug_assert!(column < self.n);
        3 * column + row.index()
    }

    pub fn name(&self, v: usize) -> VertexName {
        VertexName::original(v / 3, Z3::new((v % 3) as i64))
    }

    pub fn index_of(&self, name: VertexName) -> Result<usize> {
        if name.clone {
            return Err(Error::InvalidArgument(format!(
                "{name} names a clone, which is not a vertex of H_{}",
                self.n
            )));
        }
        if name.column >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: name.column,
                vertex_count: self.n,
            });
        }
        Ok(self.vertex(name.column, name.row))
    }

    /// `C_i = {v_{i,0}, v_{i,1}, v_{i,2}}`.
    pub fn column(&self, i: usize) -> Result<VertexSet> {
        if i >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                vertex_count: self.n,
            });
        }
        Ok(VertexSet::from_bits(0b111 << (3 * i)))
    }

    /// `R_j = {v_{0,j}, ..., v_{n-1,j}}`.
    pub fn row(&self, j: Z3) -> VertexSet {
        (0..self.n).map(|i| self.vertex(i, j)).collect()
    }

    /// Parses a set literal such as `"0,0;1,2"`. The empty string is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for item in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            s.insert(self.index_of(item.parse()?)?);
        }
        Ok(s)
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        s.iter()
            .map(|v| self.name(v).to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    /// `(i, j) -> (i, -j)`.
    pub fn row_negation(&self) -> Vec<usize> {
        (0..3 * self.n)
            .map(|v| {
                let name = self.name(v);
                self.vertex(name.column, -name.row)
            })
            .collect()
    }

    /// `(i, j) -> (i+1, j)` for `i < n-1` and `(n-1, j) -> (0, -j)`.
    pub fn column_shift(&self) -> Vec<usize> {
        (0..3 * self.n)
            .map(|v| {
                let name = self.name(v);
                if name.column + 1 < self.n {
                    self.vertex(name.column + 1, name.row)
                } else {
                    self.vertex(0, -name.row)
                }
            })
            .collect()
    }

    /// `(i, j) -> (i, j+1)`; not an automorphism, kept for diagnostics.
    pub fn row_rotation(&self) -> Vec<usize> {
        (0..3 * self.n)
            .map(|v| {
                let name = self.name(v);
                self.vertex(name.column, name.row + Z3::ONE)
            })
            .collect()
    }
}

/// True iff `map` is an automorphism of `h`. Errors if `map` is not a
/// bijection of the vertex set.
pub fn verify_automorphism(h: &GallaiGraph, map: &[usize]) -> Result<bool> {
    let g = h.graph();
    let n = g.vertex_count();
    if map.len() != n {
        return Err(Error::InvalidArgument(format!(
            "map has {} entries, graph has {n} vertices",
            map.len()
        )));
    }
    let image: VertexSet = map.iter().copied().filter(|&v| v < n).collect();
    if image.len() != n || map.iter().any(|&v| v >= n) {
        return Err(Error::InvalidArgument("map is not a bijection".into()));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) != g.has_edge(map[u], map[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
