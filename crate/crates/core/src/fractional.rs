//! Fractional chromatic number as the exact optimum of the covering program
//!
//! ```text
//! minimise  Σ_S w_S   subject to  Σ_{S ∋ v} w_S >= 1  for every vertex v,  w >= 0,
//! ```
//!
//! where `S` ranges over the maximal independent sets. The program is solved
//! with a dense dual simplex in exact rationals (Bland's smallest-index rule),
//! and both the primal weights and the dual vertex prices are returned so the
//! optimum can be audited without re-solving.

use serde::{Deserialize, Serialize};

use crate::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

/// Largest graph for which maximal independent sets are enumerated.
pub const MIS_CAP: usize = 40;

/// All inclusion-maximal independent sets, sorted lexicographically by their
/// ascending vertex lists.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.vertex_count() > MIS_CAP {
        return Err(Error::CapExceeded {
            what: "independent set enumeration",
            value: g.vertex_count(),
            cap: MIS_CAP,
        });
    }
    // Maximal cliques of the complement, Bron–Kerbosch with Tomita pivoting.
    let co = g.complement();
    let adj: Vec<u64> = (0..co.vertex_count())
        .map(|v| co.neighbours(v).bits())
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&adj, 0, g.vertices().bits(), 0, &mut out);
    out.sort_by_key(|s| s.to_vec());
    Ok(out)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet::from_bits(r));
        }
        return;
    }
    let pivot = VertexSet::from_bits(p | x)
        .iter()
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p is nonempty");
    for v in VertexSet::from_bits(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1u64 << v, p & adj[v], x & adj[v], out);
        p &= !(1u64 << v);
        x |= 1u64 << v;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedSet {
    pub set: Vec<usize>,
    pub weight: Rational,
}

/// Optimal fractional colouring with its dual certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalSolution {
    pub value: Rational,
    /// Maximal independent sets with positive weight.
    pub weights: Vec<WeightedSet>,
    /// Price of each vertex; a feasible solution of the dual packing program.
    pub dual: Vec<Rational>,
}

impl FractionalSolution {
    /// Re-checks primal feasibility, dual feasibility and equality of the two
    /// objective values against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        let fail = |msg: String| {
            Err(Error::Falsification(format!(
                "fractional certificate: {msg}"
            )))
        };
        if self.dual.len() != n {
            return fail(format!("{} dual prices for {n} vertices", self.dual.len()));
        }
        let mut cover = vec![Rational::zero(); n];
        for ws in &self.weights {
            let s: VertexSet = ws.set.iter().copied().collect();
            if ws.weight.is_negative() {
                return fail(format!("negative weight on {:?}", ws.set));
            }
            if g.check_set(s).is_err() || !g.is_independent(s) {
                return fail(format!("{:?} is not an independent set", ws.set));
            }
            for v in s {
                cover[v] = &cover[v] + &ws.weight;
            }
        }
        if let Some(v) = cover.iter().position(|c| c < &Rational::one()) {
            return fail(format!("vertex {v} covered only {}", cover[v]));
        }
        if let Some(v) = self.dual.iter().position(Rational::is_negative) {
            return fail(format!("negative dual price at vertex {v}"));
        }
        for s in maximal_independent_sets(g)? {
            let load: Rational = s.iter().map(|v| &self.dual[v]).sum();
            if load > Rational::one() {
                return fail(format!("dual overloads {:?} with {load}", s.to_vec()));
            }
        }
        let primal: Rational = self.weights.iter().map(|w| &w.weight).sum();
        let dual: Rational = self.dual.iter().sum();
        if primal != self.value || dual != self.value {
            return fail(format!(
                "value {} but primal {primal} and dual {dual}",
                self.value
            ));
        }
        Ok(())
    }
}

/// Exact `χ_f(g)` with primal and dual certificates.
pub fn fractional_chromatic_number(g: &Graph) -> Result<FractionalSolution> {
    let sets = maximal_independent_sets(g)?;
    let n = g.vertex_count();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|v| {
            sets.iter()
                .map(|s| {
                    if s.contains(v) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let cost = vec![Rational::one(); sets.len()];
    let rhs = vec![Rational::one(); n];
    let lp = simplex::covering_min(&rows, &rhs, &cost)?;
    let weights = sets
        .iter()
        .zip(&lp.primal)
        .filter(|(_, w)| w.is_positive())
        .map(|(s, w)| WeightedSet {
            set: s.to_vec(),
            weight: w.clone(),
        })
        .collect();
    let sol = FractionalSolution {
        value: lp.value,
        weights,
        dual: lp.dual,
    };
    sol.verify(g)?;
    Ok(sol)
}

/// Whether `χ_f(g) > χ(g) - 1`, compared exactly.
pub fn fht_condition(g: &Graph) -> Result<bool> {
    let frac = fractional_chromatic_number(g)?;
    let (chi, _) = chromatic_number(g);
    Ok(frac.value > Rational::integer(chi as i64 - 1))
}

pub mod simplex {
    //! Dense tableau dual simplex for `min c·x  s.t.  A x >= b, x >= 0` with
    //! `c >= 0`, so the all-surplus basis is dual feasible from the start.

    use crate::error::{Error, Result};
    use crate::rational::Rational;

    const MAX_PIVOTS: usize = 100_000;

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct LpSolution {
        pub value: Rational,
        pub primal: Vec<Rational>,
        pub dual: Vec<Rational>,
        pub pivots: usize,
    }

    pub fn covering_min(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Result<LpSolution> {
        let rows = a.len();
        let cols = c.len();
        if b.len() != rows || a.iter().any(|r| r.len() != cols) {
            return Err(Error::Lp("inconsistent dimensions".into()));
        }
        if c.iter().any(Rational::is_negative) {
            return Err(Error::Lp("costs must be nonnegative".into()));
        }
        let width = cols + rows;
        // Row i encodes  -A_i x + s_i = -b_i  with s_i basic.
        let mut t: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                let mut row: Vec<Rational> = a[i].iter().map(|x| -x.clone()).collect();
                row.extend((0..rows).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                row
            })
            .collect();
        let mut rhs: Vec<Rational> = b.iter().map(|x| -x.clone()).collect();
        let mut reduced: Vec<Rational> = c
            .iter()
            .cloned()
            .chain((0..rows).map(|_| Rational::zero()))
            .collect();
        let mut basis: Vec<usize> = (cols..width).collect();

        let mut pivots = 0;
        loop {
            // Bland: leave with the smallest-index basic variable that is negative.
            let leave = (0..rows)
                .filter(|&i| rhs[i].is_negative())
                .min_by_key(|&i| basis[i]);
            let Some(r) = leave else { break };
            let mut enter: Option<(usize, Rational)> = None;
            for j in 0..width {
                if !t[r][j].is_negative() {
                    continue;
                }
                let ratio = &reduced[j] / &-t[r][j].clone();
                if enter.as_ref().is_none_or(|(_, best)| ratio < *best) {
                    enter = Some((j, ratio));
                }
            }
            let Some((e, _)) = enter else {
                return Err(Error::Lp("primal infeasible".into()));
            };
            pivot(&mut t, &mut rhs, &mut reduced, r, e);
            basis[r] = e;
            pivots += 1;
            if pivots > MAX_PIVOTS {
                return Err(Error::Lp(format!(
                    "no convergence after {MAX_PIVOTS} pivots"
                )));
            }
        }

        let mut primal = vec![Rational::zero(); cols];
        for (i, &var) in basis.iter().enumerate() {
            if var < cols {
                primal[var] = rhs[i].clone();
            }
        }
        // The reduced cost of surplus s_i is the dual price of row i.
        let dual: Vec<Rational> = reduced[cols..].to_vec();
        let value: Rational = c.iter().zip(&primal).map(|(ci, xi)| ci * xi).sum();
        Ok(LpSolution {
            value,
            primal,
            dual,
            pivots,
        })
    }

    fn pivot(
        t: &mut [Vec<Rational>],
        rhs: &mut [Rational],
        reduced: &mut [Rational],
        r: usize,
        e: usize,
    ) {
        let p = t[r][e].clone();
        for x in t[r].iter_mut() {
            *x = &*x / &p;
        }
        rhs[r] = &rhs[r] / &p;
        let prow = t[r].clone();
        let prhs = rhs[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for (x, pr) in row.iter_mut().zip(&prow) {
                if !pr.is_zero() {
                    *x = &*x - &(&f * pr);
                }
            }
            rhs[i] = &rhs[i] - &(&f * &prhs);
        }
        let f = reduced[e].clone();
        if !f.is_zero() {
            for (x, pr) in reduced.iter_mut().zip(&prow) {
                if !pr.is_zero() {
                    *x = &*x - &(&f * pr);
                }
            }
        }
    }

}
