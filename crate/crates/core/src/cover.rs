//! Minimal vertex covers and the Macaulay2 script for the cover ideal.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fractional::maximal_independent_sets;
use crate::graph::{Graph, VertexSet};

/// Variables are named `x1 .. x26`.
pub const EXPORT_CAP: usize = 26;

/// The inclusion-minimal vertex covers of a graph, ordered by size and then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalCoverSet {
    pub vertex_count: usize,
    pub covers: Vec<Vec<usize>>,
}

/// Minimal covers are exactly the complements of maximal independent sets.
pub fn minimal_covers(g: &Graph) -> Result<MinimalCoverSet> {
    let all = g.vertices();
    let mut covers: Vec<Vec<usize>> = maximal_independent_sets(g)?
        .into_iter()
        .map(|s| all.difference(s).to_vec())
        .collect();
    covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(MinimalCoverSet {
        vertex_count: g.vertex_count(),
        covers,
    })
}

fn monomial(cover: &[usize]) -> String {
    if cover.is_empty() {
        return "1_R".to_string();
    }
    cover
        .iter()
        .map(|v| format!("x{}", v + 1))
        .collect::<Vec<_>>()
        .join("*")
}

/// Monomial generators of the cover ideal, in [`MinimalCoverSet`] order.
pub fn cover_ideal_generators(g: &Graph) -> Result<Vec<String>> {
    Ok(minimal_covers(g)?
        .covers
        .iter()
        .map(|c| monomial(c))
        .collect())
}

/// A Macaulay2 script that builds `J(G)` and prints `Ass(J^s)` and
/// `depth(R/J^s)` for `s = 1..=max_power`.
pub fn export_cover_ideal_script(g: &Graph, max_power: u32) -> Result<String> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument("the graph has no vertices".into()));
    }
    if n > EXPORT_CAP {
        return Err(Error::CapExceeded {
            what: "cover ideal export vertices",
            value: n,
            cap: EXPORT_CAP,
        });
    }
    if max_power == 0 {
        return Err(Error::InvalidArgument(
            "max power must be at least 1".into(),
        ));
    }
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let gens = cover_ideal_generators(g)?;
    let mut out = String::new();
    writeln!(
        out,
        "-- cover ideal of a graph on {n} vertices and {} edges",
        g.edge_count()
    )
    .unwrap();
    writeln!(out, "needsPackage \"Depth\";").unwrap();
    writeln!(out, "R = QQ[{}];", vars.join(",")).unwrap();
    writeln!(out, "J = monomialIdeal({});", gens.join(", ")).unwrap();
    writeln!(out, "for s from 1 to {max_power} do (").unwrap();
    writeln!(out, "    Js = J^s;").unwrap();
    writeln!(out, "    print(\"s = \" | toString s);").unwrap();
    writeln!(out, "    print(associatedPrimes Js);").unwrap();
    writeln!(out, "    print(\"depth = \" | toString depth(R/Js));").unwrap();
    writeln!(out, ");").unwrap();
    Ok(out)
}

/// Checks that every listed set meets every edge and that no vertex can be
/// dropped from it.
pub fn verify_covers(g: &Graph, covers: &MinimalCoverSet) -> bool {
    covers.covers.iter().all(|c| {
        let s: VertexSet = c.iter().copied().collect();
        let covers_all = |s: VertexSet| {
            g.edges()
                .iter()
                .all(|&(u, v)| s.contains(u) || s.contains(v))
        };
        covers_all(s)
            && s.iter().all(|v| {
                let mut t = s;
                t.remove(v);
                !covers_all(t)
            })
    })
}
