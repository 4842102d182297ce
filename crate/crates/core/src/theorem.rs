//! Executable forms of the main results about `H_n`: the classification of
//! sets `W` whose replication is at least 5-chromatic, the constructive
//! 4-colouring for every other `W`, the exhaustive check that no
//! `repl(H_n, W)` is 5-critical, and a replication search for arbitrary
//! critical graphs.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::{
    criticality, is_k_colorable, is_vertex_critical, validate_coloring, vertex_keeping_chi_above,
    Coloring, CriticalityReport,
};
use crate::error::{Error, Result};
use crate::gallai::{build_h, GallaiGraph};
use crate::graph::{induced_subgraph, longest_path_order, Graph, VertexSet};
use crate::replication::{clique_x, replicate};
use crate::signseq::{complete_selection, encode_sigma, ColumnSelection, SignSequence};
use crate::strolls::{find_stroll, synthesize_coloring, Pattern, Stroll};
use crate::z3::Z3;

/// Largest `n` scanned over all `2^{3n}` subsets.
pub const EXHAUSTIVE_CAP: usize = 6;

/// Largest graph [`conjecture_check`] will scan exhaustively.
pub const CONJECTURE_CAP: usize = 20;

/// Which condition of the 5-chromatic classification a set `W` meets, checked
/// in the order A, B, C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum SubsetCase {
    /// Some column contains at least two vertices of `W`.
    A {
        column: usize,
    },
    /// `n` is odd and `W` contains at least `n - 1` vertices of row 0.
    B {
        row0_count: usize,
    },
    /// `n` is even and `H_n[W - R_0]` has a path on at least `n` vertices.
    C {
        path_order: usize,
    },
    None,
}

impl SubsetCase {
    pub fn label(&self) -> &'static str {
        match self {
            SubsetCase::A { .. } => "A",
            SubsetCase::B { .. } => "B",
            SubsetCase::C { .. } => "C",
            SubsetCase::None => "none",
        }
    }
}

pub fn classify_subset(h: &GallaiGraph, w: VertexSet) -> Result<SubsetCase> {
    h.graph().check_set(w)?;
    let n = h.n();
    for i in 0..n {
        if w.intersection(h.column(i)?).len() >= 2 {
            return Ok(SubsetCase::A { column: i });
        }
    }
    let row0 = h.row(Z3::ZERO);
    if n % 2 == 1 {
        let count = w.intersection(row0).len();
        if count + 1 >= n {
            return Ok(SubsetCase::B { row0_count: count });
        }
    } else {
        let rest = w.difference(row0);
        if rest.len() >= n {
            let order = longest_path_order(&induced_subgraph(h.graph(), rest)?)?;
            if order >= n {
                return Ok(SubsetCase::C { path_order: order });
            }
        }
    }
    Ok(SubsetCase::None)
}

/// A 4-colouring of `repl(H_n, W)` obtained from a good stroll of a completion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrollColoring {
    pub completion: ColumnSelection,
    pub sigma: SignSequence,
    pub stroll: Stroll,
    pub coloring: Coloring,
}

/// For `W` meeting none of the conditions A–C: completes `W` to a selection
/// `Z`, finds a good `σ^Z`-stroll, colours `repl(H_n, Z)` from it and restricts
/// the colouring to `repl(H_n, W)`. A missing stroll is a falsification.
pub fn stroll_coloring(h: &GallaiGraph, w: VertexSet) -> Result<StrollColoring> {
    let completion = complete_selection(h, w)?;
    let sigma = encode_sigma(&completion);
    let stroll = find_stroll(&sigma, Pattern::START, Pattern::GOOD_END).ok_or_else(|| {
        Error::Falsification(format!(
            "W = {{{}}} is unclassified but its completion encodes {sigma}, which is not good",
            h.format_set(w)
        ))
    })?;
    let full = synthesize_coloring(h, &completion, &stroll)?;
    let base = 3 * h.n();
    // Originals keep their indices; the clone of w moves from base + column(w)
    // to base + rank of w in W.
    let colours: Vec<u8> = (0..base)
        .map(|v| full.colour(v))
        .chain(w.iter().map(|v| full.colour(base + v / 3)))
        .collect();
    let coloring = Coloring::new(colours, 4);
    let rg = replicate(h.graph(), w)?;
    validate_coloring(rg.graph(), &coloring).map_err(|e| {
        Error::Falsification(format!(
            "restricted colouring is improper for {}: {e}",
            h.format_set(w)
        ))
    })?;
    Ok(StrollColoring {
        completion,
        sigma,
        stroll,
        coloring,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Constructive,
    Solver,
    Both,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "constructive" => Ok(Mode::Constructive),
            "solver" => Ok(Mode::Solver),
            "both" => Ok(Mode::Both),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Constructive => "constructive",
            Mode::Solver => "solver",
            Mode::Both => "both",
        })
    }
}

/// How the verdict for one `W` was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A good stroll gave a validated 4-colouring.
    Stroll,
    /// `X_column` is a clique on at least five vertices and `vertex` lies outside it.
    Clique { column: usize, vertex: usize },
    /// The solver found no 4-colouring of the replication nor of its deletion of `vertex`.
    SolverWitness { vertex: usize },
    /// Full criticality computation.
    Solver,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverVerdict {
    pub chi: u32,
    pub five_critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetRecord {
    pub w: String,
    pub mask: u64,
    #[serde(flatten)]
    pub case: SubsetCase,
    pub four_colourable: bool,
    pub five_critical: bool,
    pub certificate: Certificate,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<SignSequence>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub solver: Option<SolverVerdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub falsification: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTotals {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub none: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: usize,
    pub mode: Mode,
    pub exhaustive: bool,
    pub subsets_checked: usize,
    pub totals: CaseTotals,
    pub four_colourable: usize,
    pub five_critical: usize,
    /// Subsets additionally checked by the solver in constructive mode.
    pub audited: usize,
    pub disagreements: usize,
    pub falsifications: Vec<String>,
    pub pass: bool,
    /// Every record when requested, otherwise only records that falsify something.
    pub records: Vec<SubsetRecord>,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub mode: Mode,
    /// Fraction of stroll-coloured subsets re-checked by the solver in constructive mode.
    pub audit_fraction: f64,
    pub seed: u64,
    /// Check this many random subsets instead of all of them.
    pub sample: Option<usize>,
    pub jobs: Option<usize>,
    pub keep_records: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: Mode::Constructive,
            audit_fraction: 0.01,
            seed: 0,
            sample: None,
            jobs: None,
            keep_records: false,
        }
    }
}

fn constructive_record(h: &GallaiGraph, w: VertexSet) -> Result<SubsetRecord> {
    let case = classify_subset(h, w)?;
    let mut rec = SubsetRecord {
        w: h.format_set(w),
        mask: w.bits(),
        case,
        four_colourable: false,
        five_critical: false,
        certificate: Certificate::Stroll,
        sigma: None,
        solver: None,
        falsification: None,
    };
    match case {
        SubsetCase::None => match stroll_coloring(h, w) {
            Ok(p4) => {
                rec.four_colourable = true;
                rec.sigma = Some(p4.sigma);
            }
            Err(Error::Falsification(msg)) => {
                // Unknown colourability; the solver decides what to report.
                let (g, rep) = solver_check(h, w)?;
                rec.four_colourable = rep.chi <= 4;
                rec.five_critical = rep.five_critical;
                rec.certificate = Certificate::Solver;
                rec.falsification = Some(msg);
                drop(g);
            }
            Err(e) => return Err(e),
        },
        SubsetCase::A { column } => {
            let rg = replicate(h.graph(), w)?;
            let x = clique_x(h, &rg, column)?;
            let g = rg.graph();
            let outside = g.vertices().difference(x).iter().next();
            match outside {
                Some(vertex) if x.len() >= 5 && g.is_clique(x) => {
                    rec.certificate = Certificate::Clique { column, vertex };
                }
                _ => {
                    rec.falsification = Some(format!(
                        "case A for {} without a proper clique of order 5",
                        rec.w
                    ));
                }
            }
        }
        SubsetCase::B { .. } | SubsetCase::C { .. } => {
            let rg = replicate(h.graph(), w)?;
            let g = rg.graph();
            if is_k_colorable(g, 4).is_some() {
                rec.four_colourable = true;
                rec.falsification = Some(format!(
                    "case {} for {} but the replication is 4-colourable",
                    case.label(),
                    rec.w
                ));
            } else {
                match vertex_keeping_chi_above(g, 4)? {
                    Some(vertex) => rec.certificate = Certificate::SolverWitness { vertex },
                    None => {
                        rec.five_critical = true;
                        rec.certificate = Certificate::Solver;
                        rec.falsification =
                            Some(format!("repl(H_{}, {{{}}}) is 5-critical", h.n(), rec.w));
                    }
                }
            }
        }
    }
    Ok(rec)
}

fn solver_check(h: &GallaiGraph, w: VertexSet) -> Result<(Graph, SolverVerdict)> {
    let g = replicate(h.graph(), w)?.into_graph();
    let rep = criticality(&g, 5, false)?;
    Ok((
        g,
        SolverVerdict {
            chi: rep.chi,
            five_critical: rep.is_vertex_critical,
        },
    ))
}

fn solver_record(h: &GallaiGraph, w: VertexSet) -> Result<SubsetRecord> {
    let case = classify_subset(h, w)?;
    let (_, verdict) = solver_check(h, w)?;
    let w_text = h.format_set(w);
    Ok(SubsetRecord {
        falsification: verdict
            .five_critical
            .then(|| format!("repl(H_{}, {{{w_text}}}) is 5-critical", h.n())),
        w: w_text,
        mask: w.bits(),
        case,
        four_colourable: verdict.chi <= 4,
        five_critical: verdict.five_critical,
        certificate: Certificate::Solver,
        sigma: None,
        solver: Some(verdict),
    })
}

// Attaches a solver verdict to a constructive record and checks agreement.
fn cross_check(h: &GallaiGraph, w: VertexSet, rec: &mut SubsetRecord) -> Result<bool> {
    let (_, verdict) = solver_check(h, w)?;
    let agree =
        rec.four_colourable == (verdict.chi <= 4) && rec.five_critical == verdict.five_critical;
    if !agree && rec.falsification.is_none() {
        rec.falsification = Some(format!(
            "constructive and solver verdicts differ for {{{}}}: chi = {}",
            rec.w, verdict.chi
        ));
    }
    if verdict.five_critical && rec.falsification.is_none() {
        rec.falsification = Some(format!("repl(H_{}, {{{}}}) is 5-critical", h.n(), rec.w));
    }
    rec.solver = Some(verdict);
    Ok(agree)
}

fn run_in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

/// Checks that no `repl(H_n, W)` is 5-critical, over all `W ⊆ V(H_n)` (or a
/// random sample of them).
pub fn verify_theorem(n: usize, opts: &VerifyOptions) -> Result<TheoremReport> {
    let h = build_h(n)?;
    let universe = 1u64 << (3 * n);
    let (masks, exhaustive): (Vec<u64>, bool) = match opts.sample {
        None if n <= EXHAUSTIVE_CAP => ((0..universe).collect(), true),
        None => {
            return Err(Error::CapExceeded {
                what: "exhaustive verification order n",
                value: n,
                cap: EXHAUSTIVE_CAP,
            })
        }
        Some(m) => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut picked = BTreeSet::new();
            let m = (m as u64).min(universe);
            while (picked.len() as u64) < m {
                picked.insert(rng.gen_range(0..universe));
            }
            (picked.into_iter().collect(), m == universe)
        }
    };

    let mode = opts.mode;
    let records: Vec<(SubsetRecord, bool)> = run_in_pool(opts.jobs, || {
        masks
            .par_iter()
            .map(|&m| {
                let w = VertexSet::from_bits(m);
                match mode {
                    Mode::Solver => solver_record(&h, w).map(|r| (r, true)),
                    Mode::Constructive => constructive_record(&h, w).map(|r| (r, true)),
                    Mode::Both => {
                        let mut r = constructive_record(&h, w)?;
                        let agree = cross_check(&h, w, &mut r)?;
                        Ok((r, agree))
                    }
                }
            })
            .collect::<Result<Vec<_>>>()
    })??;
    let (mut records, agreement): (Vec<SubsetRecord>, Vec<bool>) = records.into_iter().unzip();
    let mut disagreements = agreement.iter().filter(|&&a| !a).count();

    let mut audited = 0;
    if mode == Mode::Constructive && opts.audit_fraction > 0.0 {
        let pool: Vec<usize> = records
            .iter()
            .enumerate()
            .filter(|(_, r)| r.certificate == Certificate::Stroll)
            .map(|(i, _)| i)
            .collect();
        let take = ((pool.len() as f64 * opts.audit_fraction).ceil() as usize).min(pool.len());
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed_a0d1);
        let mut chosen: Vec<usize> = sample(&mut rng, pool.len(), take)
            .into_iter()
            .map(|k| pool[k])
            .collect();
        chosen.sort_unstable();
        let results: Vec<(usize, SubsetRecord, bool)> = run_in_pool(opts.jobs, || {
            chosen
                .par_iter()
                .map(|&i| {
                    let mut r = records[i].clone();
                    let agree = cross_check(&h, VertexSet::from_bits(r.mask), &mut r)?;
                    Ok((i, r, agree))
                })
                .collect::<Result<Vec<_>>>()
        })??;
        audited = results.len();
        for (i, r, agree) in results {
            disagreements += usize::from(!agree);
            records[i] = r;
        }
    }

    let mut totals = CaseTotals::default();
    for r in &records {
        match r.case {
            SubsetCase::A { .. } => totals.a += 1,
            SubsetCase::B { .. } => totals.b += 1,
            SubsetCase::C { .. } => totals.c += 1,
            SubsetCase::None => totals.none += 1,
        }
    }
    let falsifications: Vec<String> = records
        .iter()
        .filter_map(|r| r.falsification.clone())
        .collect();
    let five_critical = records.iter().filter(|r| r.five_critical).count();
    let four_colourable = records.iter().filter(|r| r.four_colourable).count();
    if !opts.keep_records {
        records.retain(|r| r.falsification.is_some());
    }
    Ok(TheoremReport {
        n,
        mode,
        exhaustive,
        subsets_checked: masks.len(),
        totals,
        four_colourable,
        five_critical,
        audited,
        disagreements,
        pass: falsifications.is_empty() && five_critical == 0 && disagreements == 0,
        falsifications,
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureResult {
    pub k: u32,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    /// Criticality of `repl(G, witness)` recomputed from scratch.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_report: Option<CriticalityReport>,
    /// Number of sets `W` inspected; `2^|V|` when `holds` is false.
    pub subsets_examined: u64,
}

/// Searches for `W` with `repl(g, W)` being `(k+1)`-critical. `g` must be
/// `k`-critical. Sets are tried by size, then by bitmask; the first hit is
/// returned after an independent re-check.
pub fn conjecture_check(g: &Graph, k: u32) -> Result<ConjectureResult> {
    let n = g.vertex_count();
    if n > CONJECTURE_CAP {
        return Err(Error::CapExceeded {
            what: "replication search",
            value: n,
            cap: CONJECTURE_CAP,
        });
    }
    if !criticality(g, k, false)?.is_vertex_critical {
        return Err(Error::Precondition(format!("graph is not {k}-critical")));
    }
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let hit = masks.par_iter().position_first(|&m| {
        let Ok(rg) = replicate(g, VertexSet::from_bits(m)) else {
            return false;
        };
        let h = rg.graph();
        is_k_colorable(h, k).is_none() && is_vertex_critical(h, k + 1).unwrap_or(false)
    });
    match hit {
        Some(pos) => {
            let w = VertexSet::from_bits(masks[pos]);
            let rep = criticality(replicate(g, w)?.graph(), k + 1, false)?;
            if !rep.is_vertex_critical {
                return Err(Error::Falsification(format!(
                    "search reported {:?} but re-check says repl is not {}-critical",
                    w.to_vec(),
                    k + 1
                )));
            }
            Ok(ConjectureResult {
                k,
                holds: true,
                witness: Some(w.to_vec()),
                witness_report: Some(rep),
                subsets_examined: pos as u64 + 1,
            })
        }
        None => Ok(ConjectureResult {
            k,
            holds: false,
            witness: None,
            witness_report: None,
            subsets_examined: masks.len() as u64,
        }),
    }
}
