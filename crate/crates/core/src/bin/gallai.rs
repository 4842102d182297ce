use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use gallai_core::cache::Cache;
use gallai_core::chromatic::{chromatic_number, criticality, max_clique};
use gallai_core::cover::{cover_ideal_generators, export_cover_ideal_script};
use gallai_core::fractional::{fht_condition, fractional_chromatic_number};
use gallai_core::gallai::{build_h, GallaiGraph};
use gallai_core::graph::{emit_graph6, parse_graph6, Graph, VertexSet};
use gallai_core::replication::{replicate, vertex_name};
use gallai_core::scan::scan_corpus;
use gallai_core::signseq::{
    complete_selection, encode_sigma, z_parity, ColumnSelection, SignSequence,
};
use gallai_core::strolls::{classify_sequence, find_stroll, is_valid_stroll, Pattern, Stroll};
use gallai_core::theorem::{conjecture_check, verify_theorem, Mode, VerifyOptions};
use gallai_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "gallai",
    version,
    about = "Gallai graphs, replication and colour-criticality checks"
)]
struct Cli {
    /// Output format; graph6 applies to commands that output a graph.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for parallel scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory of cached reports.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Seed for sampled runs and audits.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Graph6,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// File whose first non-blank line is a graph6 string.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Use the Gallai graph H_N.
    #[arg(long, value_name = "N")]
    gallai: Option<usize>,
}

impl GraphInput {
    fn load(&self) -> Result<(Graph, Option<GallaiGraph>)> {
        if let Some(n) = self.gallai {
            let h = build_h(n)?;
            return Ok((h.graph().clone(), Some(h)));
        }
        let text = match (&self.graph6, &self.file) {
            (Some(s), _) => s.clone(),
            (None, Some(p)) => std::fs::read_to_string(p)?
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::InvalidArgument(format!("{} holds no graph", p.display())))?
                .to_string(),
            (None, None) => unreachable!("clap requires one input"),
        };
        Ok((parse_graph6(&text)?, None))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit the Gallai graph H_n.
    Gen {
        #[arg(long)]
        n: usize,
    },
    /// Chromatic number with an optimal colouring.
    Chromatic {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Chromatic numbers of all one-vertex (and optionally one-edge) deletions.
    Critical {
        #[command(flatten)]
        input: GraphInput,
        /// Target k; defaults to the chromatic number.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        edges: bool,
    },
    /// Exact fractional chromatic number with primal and dual certificates.
    FractionalChi {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Replicate a set of vertices.
    Replicate {
        #[command(flatten)]
        input: GraphInput,
        /// Vertex set of H_n as "i,j;i,j" (requires --gallai).
        #[arg(long)]
        w: Option<String>,
        /// Vertex indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<usize>,
    },
    /// Sign sequence of a one-per-column subset of H_n.
    EncodeSigma {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Complete W to a one-per-column selection first.
        #[arg(long)]
        complete: bool,
    },
    /// Decide whether a sign sequence is good and reversing.
    Stroll {
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        /// A stroll to validate, as comma separated patterns like "[12]34".
        #[arg(long)]
        patterns: Option<String>,
    },
    /// Check that no replication of H_n is 5-critical.
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Constructive)]
        mode: ModeArg,
        /// Check this many random subsets instead of all.
        #[arg(long)]
        sample: Option<usize>,
        /// Fraction of stroll-coloured subsets re-checked by the solver.
        #[arg(long, default_value_t = 0.01)]
        audit: f64,
        /// Include a record for every subset in the report.
        #[arg(long)]
        records: bool,
    },
    /// Search for W making repl(G, W) (k+1)-critical.
    Conjecture {
        #[command(flatten)]
        input: GraphInput,
        /// Defaults to the chromatic number.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Run the replication search over a file of graph6 lines.
    Scan {
        path: PathBuf,
        /// Defaults to each graph's chromatic number.
        #[arg(long)]
        k: Option<u32>,
        /// Only search edge-critical graphs.
        #[arg(long)]
        edge_critical: bool,
    },
    /// Write a Macaulay2 script for the cover ideal and its powers.
    ExportM2 {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 4)]
        max_power: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Constructive,
    Solver,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Constructive => Mode::Constructive,
            ModeArg::Solver => Mode::Solver,
            ModeArg::Both => Mode::Both,
        }
    }
}

/// What a command prints, in every format, and its exit status.
#[derive(Serialize, Deserialize)]
struct Outcome {
    exit: u8,
    json: String,
    text: String,
}

impl Outcome {
    fn new(report: &impl Serialize, text: String, failed: bool) -> Result<Outcome> {
        Ok(Outcome {
            exit: u8::from(failed),
            json: serde_json::to_string_pretty(report)?,
            text,
        })
    }
}

fn graph_text(g: &Graph) -> Result<String> {
    emit_graph6(g)
}

type Job = Box<dyn FnOnce() -> Result<Outcome>>;

fn run(cli: &Cli) -> Result<Outcome> {
    let seed = cli.seed;
    let jobs = cli.jobs;
    let (input_key, op, params, compute): (String, &str, String, Job) = match &cli.command {
        Command::Gen { n } => {
            let n = *n;
            (
                String::new(),
                "gen",
                n.to_string(),
                Box::new(move || gen(n)),
            )
        }
        Command::Chromatic { input } => {
            let (g, _) = input.load()?;
            (
                graph_text(&g)?,
                "chromatic",
                String::new(),
                Box::new(move || chromatic(&g)),
            )
        }
        Command::Critical { input, k, edges } => {
            let (g, _) = input.load()?;
            let (k, edges) = (*k, *edges);
            (
                graph_text(&g)?,
                "critical",
                format!("{k:?}/{edges}"),
                Box::new(move || critical(&g, k, edges)),
            )
        }
        Command::FractionalChi { input } => {
            let (g, _) = input.load()?;
            (
                graph_text(&g)?,
                "fractional-chi",
                String::new(),
                Box::new(move || fractional(&g)),
            )
        }
        Command::Replicate { input, w, vertices } => {
            let (g, h) = input.load()?;
            let set = match (w, h.as_ref()) {
                (Some(text), Some(h)) => h.parse_set(text)?,
                (Some(_), None) => {
                    return Err(Error::InvalidArgument(
                        "--w needs --gallai; use --vertices".into(),
                    ))
                }
                (None, _) => vertices.iter().copied().collect(),
            };
            g.check_set(set)?;
            (
                graph_text(&g)?,
                "replicate",
                format!("{:x}", set.bits()),
                Box::new(move || replicate_cmd(&g, h.as_ref(), set)),
            )
        }
        Command::EncodeSigma { n, w, complete } => {
            let (n, w, complete) = (*n, w.clone(), *complete);
            (
                String::new(),
                "encode-sigma",
                format!("{n}/{w}/{complete}"),
                Box::new(move || encode_cmd(n, &w, complete)),
            )
        }
        Command::Stroll { sigma, patterns } => {
            let sigma: SignSequence = sigma.parse()?;
            let patterns = patterns.clone();
            (
                String::new(),
                "stroll",
                format!("{sigma}/{patterns:?}"),
                Box::new(move || stroll_cmd(&sigma, patterns.as_deref())),
            )
        }
        Command::VerifyTheorem {
            n,
            mode,
            sample,
            audit,
            records,
        } => {
            let opts = VerifyOptions {
                mode: (*mode).into(),
                audit_fraction: *audit,
                seed,
                sample: *sample,
                jobs,
                keep_records: *records,
            };
            let n = *n;
            (
                String::new(),
                "verify-theorem",
                format!(
                    "{n}/{:?}/{:?}/{}/{}/{}",
                    opts.mode, opts.sample, opts.audit_fraction, seed, records
                ),
                Box::new(move || theorem_cmd(n, &opts)),
            )
        }
        Command::Conjecture { input, k } => {
            let (g, _) = input.load()?;
            let k = *k;
            (
                graph_text(&g)?,
                "conjecture",
                format!("{k:?}"),
                Box::new(move || conjecture_cmd(&g, k)),
            )
        }
        Command::Scan {
            path,
            k,
            edge_critical,
        } => {
            let corpus = std::fs::read_to_string(path)?;
            let (path, k, filter) = (path.clone(), *k, *edge_critical);
            (
                corpus,
                "scan",
                format!("{k:?}/{filter}"),
                Box::new(move || scan_cmd(&path, k, filter)),
            )
        }
        Command::ExportM2 {
            input,
            max_power,
            output,
        } => {
            let (g, _) = input.load()?;
            let outcome = export_cmd(&g, *max_power)?;
            if let Some(path) = output {
                std::fs::write(path, &outcome.text)?;
            }
            return Ok(outcome);
        }
    };
    match &cli.cache {
        Some(dir) => {
            let cache = Cache::open(dir)?;
            let stored = cache.get_or_compute(&input_key, op, &params, || {
                Ok(serde_json::to_string(&compute()?)?)
            })?;
            Ok(serde_json::from_str(&stored)?)
        }
        None => compute(),
    }
}

fn gen(n: usize) -> Result<Outcome> {
    let h = build_h(n)?;
    let g = h.graph();
    let g6 = emit_graph6(g)?;
    let names: Vec<String> = (0..g.vertex_count())
        .map(|v| h.name(v).to_string())
        .collect();
    let report = json!({
        "n": n,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "graph6": g6,
        "names": names,
        "edge_list": g.edges(),
    });
    Outcome::new(&report, g6, false)
}

fn chromatic(g: &Graph) -> Result<Outcome> {
    let (chi, colouring) = chromatic_number(g);
    let clique = max_clique(g);
    let report = json!({
        "graph6": emit_graph6(g)?,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "chi": chi,
        "clique": clique.to_vec(),
        "colouring": colouring.colours,
    });
    let text = format!(
        "chi = {chi}\nclique number = {}\ncolouring = {:?}",
        clique.len(),
        colouring.colours
    );
    Outcome::new(&report, text, false)
}

fn critical(g: &Graph, k: Option<u32>, edges: bool) -> Result<Outcome> {
    let k = k.unwrap_or_else(|| chromatic_number(g).0);
    let rep = criticality(g, k, edges)?;
    let mut text = format!(
        "chi = {}\n{}-vertex-critical: {}",
        rep.chi, k, rep.is_vertex_critical
    );
    if let Some(e) = rep.is_edge_critical {
        text.push_str(&format!("\n{k}-edge-critical: {e}"));
    }
    Outcome::new(&rep, text, false)
}

fn fractional(g: &Graph) -> Result<Outcome> {
    let sol = fractional_chromatic_number(g)?;
    let (chi, _) = chromatic_number(g);
    let fht = fht_condition(g)?;
    let report = json!({
        "graph6": emit_graph6(g)?,
        "chi_f": sol.value,
        "chi": chi,
        "fht_condition": fht,
        "certificate": sol,
    });
    let text = format!(
        "chi_f = {}\nchi = {chi}\nchi_f > chi - 1: {fht}\ncertificate: {} weighted sets, dual verified",
        sol.value,
        sol.weights.len()
    );
    Outcome::new(&report, text, false)
}

fn replicate_cmd(g: &Graph, h: Option<&GallaiGraph>, w: VertexSet) -> Result<Outcome> {
    let rg = replicate(g, w)?;
    let out = rg.graph();
    let g6 = emit_graph6(out)?;
    let names: Option<Vec<String>> = h.map(|h| {
        (0..out.vertex_count())
            .map(|v| vertex_name(h, &rg, v).to_string())
            .collect()
    });
    let report = json!({
        "graph6": g6,
        "vertices": out.vertex_count(),
        "edges": out.edge_count(),
        "replicated": w.to_vec(),
        "clone_of": rg.clone_of(),
        "names": names,
    });
    Outcome::new(&report, g6, false)
}

fn encode_cmd(n: usize, w: &str, complete: bool) -> Result<Outcome> {
    let h = build_h(n)?;
    let set = h.parse_set(w)?;
    let sel = if complete {
        complete_selection(&h, set)?
    } else {
        ColumnSelection::from_vertex_set(&h, set)?
    };
    let sigma = encode_sigma(&sel);
    let class = classify_sequence(&sigma);
    let selected = sel.to_vertex_set(&h)?;
    let report = json!({
        "n": n,
        "w": h.format_set(set),
        "selection": h.format_set(selected),
        "sigma": sigma,
        "z": z_parity(&sigma),
        "good": class.good,
        "reversing": class.reversing,
    });
    let text = format!(
        "selection = {}\nsigma = {sigma}\nz = {}\ngood = {}\nreversing = {}",
        h.format_set(selected),
        z_parity(&sigma),
        class.good,
        class.reversing
    );
    Outcome::new(&report, text, false)
}

fn stroll_cmd(sigma: &SignSequence, patterns: Option<&str>) -> Result<Outcome> {
    let good = find_stroll(sigma, Pattern::START, Pattern::GOOD_END);
    let reversing = find_stroll(sigma, Pattern::START, Pattern::REVERSING_END);
    let mut text = format!(
        "sigma = {sigma}\nz = {}\ngood = {}\nreversing = {}",
        z_parity(sigma),
        good.is_some(),
        reversing.is_some()
    );
    for (label, st) in [("good", &good), ("reversing", &reversing)] {
        if let Some(st) = st {
            text.push_str(&format!("\n{label} stroll: {}", join_patterns(st)));
        }
    }
    let mut supplied = None;
    let mut failed = false;
    if let Some(list) = patterns {
        let pats = list
            .split(',')
            .map(|p| p.trim().parse::<Pattern>())
            .collect::<Result<Vec<_>>>()?;
        let st = Stroll {
            sigma: sigma.clone(),
            patterns: pats,
        };
        let valid = is_valid_stroll(&st)?;
        let ends = (st.start() == Pattern::START).then(|| {
            if st.end() == Pattern::GOOD_END {
                "good"
            } else if st.end() == Pattern::REVERSING_END {
                "reversing"
            } else {
                "other"
            }
        });
        failed = !valid;
        text.push_str(&format!(
            "\nsupplied stroll: {}",
            if valid { "valid" } else { "invalid" }
        ));
        if let (true, Some(e)) = (valid, ends) {
            text.push_str(&format!(" ({e})"));
        }
        supplied = Some(json!({
            "patterns": st.patterns,
            "valid": valid,
            "certifies": if valid { ends } else { None },
        }));
    }
    let report = json!({
        "sigma": sigma,
        "z": z_parity(sigma),
        "good": good.is_some(),
        "reversing": reversing.is_some(),
        "good_stroll": good.map(|s| s.patterns),
        "reversing_stroll": reversing.map(|s| s.patterns),
        "supplied": supplied,
    });
    Outcome::new(&report, text, failed)
}

fn join_patterns(st: &Stroll) -> String {
    st.patterns
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn theorem_cmd(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let rep = verify_theorem(n, opts)?;
    let mut text = format!(
        "n = {n}, mode = {}, subsets = {}{}\ncases: A {} / B {} / C {} / none {}\n4-colourable: {}\n5-critical: {}\naudited: {}, disagreements: {}\n{}",
        rep.mode,
        rep.subsets_checked,
        if rep.exhaustive { " (all)" } else { " (sample)" },
        rep.totals.a,
        rep.totals.b,
        rep.totals.c,
        rep.totals.none,
        rep.four_colourable,
        rep.five_critical,
        rep.audited,
        rep.disagreements,
        if rep.pass { "PASS" } else { "FAIL" }
    );
    for f in &rep.falsifications {
        text.push_str(&format!("\nfalsification: {f}"));
    }
    Outcome::new(&rep, text, !rep.pass)
}

fn conjecture_cmd(g: &Graph, k: Option<u32>) -> Result<Outcome> {
    let k = k.unwrap_or_else(|| chromatic_number(g).0);
    let res = conjecture_check(g, k)?;
    let text = match &res.witness {
        Some(w) => format!("holds: repl(G, {w:?}) is {}-critical", k + 1),
        None => format!(
            "fails: no W among {} subsets makes repl(G, W) {}-critical",
            res.subsets_examined,
            k + 1
        ),
    };
    Outcome::new(&res, text, !res.holds)
}

fn scan_cmd(path: &std::path::Path, k: Option<u32>, filter: bool) -> Result<Outcome> {
    let rep = scan_corpus(path, k, filter)?;
    let mut text = format!(
        "corpus sha256 {}\ngraphs {}, searched {}, errors {}\ncounterexamples: {}",
        rep.corpus_sha256,
        rep.graphs,
        rep.checked,
        rep.errors,
        rep.counterexamples.len()
    );
    for g in &rep.counterexamples {
        text.push_str(&format!("\n  {g}"));
    }
    for e in rep.entries.iter().filter(|e| e.error.is_some()) {
        text.push_str(&format!(
            "\nline {}: {}",
            e.line,
            e.error.as_deref().unwrap_or("")
        ));
    }
    let failed = !rep.counterexamples.is_empty();
    Outcome::new(&rep, text, failed)
}

fn export_cmd(g: &Graph, max_power: u32) -> Result<Outcome> {
    let script = export_cover_ideal_script(g, max_power)?;
    let report = json!({
        "graph6": emit_graph6(g)?,
        "max_power": max_power,
        "generators": cover_ideal_generators(g)?,
        "script": script,
    });
    Outcome::new(&report, script, false)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
        {
            eprintln!("gallai: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => &out.json,
                Format::Text | Format::Graph6 => &out.text,
            };
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", body.trim_end());
            ExitCode::from(out.exit)
        }
        Err(Error::Falsification(msg)) => {
            eprintln!("gallai: falsification: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("gallai: {e}");
            ExitCode::from(2)
        }
    }
}
