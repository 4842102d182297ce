//! Acceptance criteria 1-10, one PASS/FAIL line each. All comparisons are
//! exact; the only tolerances are the wall-clock budgets listed per line.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gallai_core::chromatic::{criticality, is_k_colorable};
use gallai_core::cover::{cover_ideal_generators, export_cover_ideal_script, minimal_covers};
use gallai_core::fractional::{
    fht_condition, fractional_chromatic_number, maximal_independent_sets,
};
use gallai_core::gallai::build_h;
use gallai_core::graph::{emit_graph6, Graph, VertexSet};
use gallai_core::rational::Rational;
use gallai_core::replication::{replicate, replicate_in_order, segment_y};
use gallai_core::scan::scan_text;
use gallai_core::signseq::{
    complete_selection, encode_sigma, negate, precedes, z_parity, ColumnSelection, SignSequence,
};
use gallai_core::strolls::{
    automaton, classify_sequence, compatible, find_stroll, is_valid_stroll, pattern_at,
    reverse_pattern, stationary_stroll, synthesize_coloring, Pattern, Stroll,
};
use gallai_core::theorem::{
    classify_subset, conjecture_check, verify_theorem, Certificate, Mode, SubsetCase, VerifyOptions,
};
use gallai_core::z3::Z3;

mod common;
use common::{precedes_by_indices, seqs_up_to, subsequence};

type Check = Result<String, String>;
type Criterion = (u8, &'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn stroll(sigma: &str, patterns: &[&str]) -> Stroll {
    Stroll {
        sigma: sigma.parse().unwrap(),
        patterns: patterns.iter().map(|p| p.parse().unwrap()).collect(),
    }
}

fn gallai_basics() -> Check {
    for n in 4..=6 {
        let h = build_h(n).map_err(|e| e.to_string())?;
        let g = h.graph();
        ensure!(
            g.vertex_count() == 3 * n,
            "H_{n} has {} vertices",
            g.vertex_count()
        );
        ensure!(
            g.edge_count() == 6 * n,
            "H_{n} has {} edges",
            g.edge_count()
        );
        ensure!(
            (0..3 * n).all(|v| g.degree(v) == 4),
            "H_{n} is not 4-regular"
        );
        let rep = criticality(g, 4, true).map_err(|e| e.to_string())?;
        ensure!(rep.chi == 4, "chi(H_{n}) = {}", rep.chi);
        ensure!(rep.is_vertex_critical, "H_{n} is not 4-vertex-critical");
        ensure!(
            rep.is_edge_critical == Some(true),
            "H_{n} is not 4-edge-critical"
        );
    }
    Ok("n = 4, 5, 6: 3n vertices, 6n edges, 4-regular, chi = 4, vertex- and edge-critical".into())
}

fn theorem_n4_both() -> Check {
    let opts = VerifyOptions {
        mode: Mode::Both,
        keep_records: true,
        ..VerifyOptions::default()
    };
    let rep = verify_theorem(4, &opts).map_err(|e| e.to_string())?;
    ensure!(
        rep.exhaustive && rep.subsets_checked == 4096,
        "checked {}",
        rep.subsets_checked
    );
    ensure!(
        rep.five_critical == 0,
        "{} 5-critical replications",
        rep.five_critical
    );
    ensure!(
        rep.disagreements == 0,
        "{} disagreements",
        rep.disagreements
    );
    ensure!(rep.pass, "report did not pass: {:?}", rep.falsifications);
    for r in &rep.records {
        let s = r
            .solver
            .as_ref()
            .ok_or(format!("no solver verdict for {{{}}}", r.w))?;
        ensure!(
            (s.chi <= 4) == r.four_colourable && s.five_critical == r.five_critical,
            "verdicts differ for {{{}}}",
            r.w
        );
    }
    let out = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(["verify-theorem", "--n", "4", "--mode", "both"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.code() == Some(0),
        "CLI exit {:?}",
        out.status.code()
    );
    Ok(format!(
        "4096 subsets, 0 five-critical, verdicts identical; cases A {} B {} C {} none {}; CLI exit 0",
        rep.totals.a, rep.totals.b, rep.totals.c, rep.totals.none
    ))
}

fn theorem_n5_constructive() -> Check {
    let opts = VerifyOptions {
        mode: Mode::Constructive,
        audit_fraction: 0.01,
        seed: 5,
        keep_records: true,
        ..VerifyOptions::default()
    };
    let rep = verify_theorem(5, &opts).map_err(|e| e.to_string())?;
    ensure!(
        rep.exhaustive && rep.subsets_checked == 1 << 15,
        "checked {}",
        rep.subsets_checked
    );
    ensure!(rep.pass, "report did not pass: {:?}", rep.falsifications);
    let strolled = rep
        .records
        .iter()
        .filter(|r| r.certificate == Certificate::Stroll)
        .count();
    ensure!(
        strolled == rep.totals.none,
        "{strolled} stroll certificates, {} unclassified",
        rep.totals.none
    );
    let needed = (strolled as f64 * 0.01).ceil() as usize;
    ensure!(
        rep.audited >= needed,
        "audited {} of {strolled}",
        rep.audited
    );
    for r in &rep.records {
        let ok = match r.case {
            SubsetCase::A { .. } => matches!(r.certificate, Certificate::Clique { .. }),
            SubsetCase::B { .. } | SubsetCase::C { .. } => {
                matches!(r.certificate, Certificate::SolverWitness { .. })
            }
            SubsetCase::None => r.certificate == Certificate::Stroll && r.four_colourable,
        };
        ensure!(
            ok,
            "unexpected certificate {:?} for {{{}}}",
            r.certificate,
            r.w
        );
    }
    Ok(format!(
        "32768 subsets; A {} by clique, B {} C {} by solver witness, {} stroll-coloured, {} audited",
        rep.totals.a, rep.totals.b, rep.totals.c, strolled, rep.audited
    ))
}

const TABLE_GOOD: [(&str, &[&str]); 8] = [
    ("+-+", &["[12]34", "[14]23", "[24]31", "[12]43"]),
    ("++++", &["[12]34", "[14]23", "[34]12", "[24]31", "[12]43"]),
    ("+++-", &["[12]34", "[14]23", "[13]42", "[23]14", "[12]43"]),
    ("++--", &["[12]34", "[14]23", "[34]12", "[13]24", "[12]43"]),
    ("+---", &["[12]34", "[14]23", "[24]31", "[23]14", "[12]43"]),
    ("00", &["[12]34", "[34]12", "[12]43"]),
    ("0++", &["[12]34", "[34]12", "[24]31", "[12]43"]),
    (
        "0+00-",
        &["[12]34", "[34]12", "[23]41", "[14]32", "[23]14", "[12]43"],
    ),
];

const TABLE_REVERSING: [(&str, &[&str]); 2] = [
    ("0+0+", &["[12]34", "[34]12", "[23]41", "[14]23", "[34]12"]),
    ("0+0-", &["[12]34", "[34]21", "[13]42", "[24]31", "[34]12"]),
];

fn stroll_goldens() -> Check {
    for (sigma, pats) in TABLE_GOOD {
        let st = stroll(sigma, pats);
        ensure!(is_valid_stroll(&st) == Ok(true), "{sigma} stroll invalid");
        ensure!(
            st.start() == Pattern::START && st.end() == Pattern::GOOD_END,
            "{sigma} endpoints"
        );
        ensure!(
            classify_sequence(&st.sigma).good,
            "{sigma} not classified good"
        );
    }
    for (sigma, pats) in TABLE_REVERSING {
        let st = stroll(sigma, pats);
        ensure!(is_valid_stroll(&st) == Ok(true), "{sigma} stroll invalid");
        ensure!(
            st.start() == Pattern::START && st.end() == Pattern::REVERSING_END,
            "{sigma} endpoints"
        );
        ensure!(
            classify_sequence(&st.sigma).reversing,
            "{sigma} not classified reversing"
        );
        let swapped = st.swap_colours(1, 2);
        ensure!(
            is_valid_stroll(&swapped) == Ok(true),
            "{sigma} with 1, 2 swapped invalid"
        );
        ensure!(
            swapped.end() == "[34]21".parse().unwrap(),
            "{sigma} swapped end {}",
            swapped.end()
        );
    }
    let worked = stroll(
        "--+0+-",
        &[
            "[12]34", "[13]42", "[34]21", "[14]32", "[23]41", "[13]24", "[12]43",
        ],
    );
    ensure!(
        is_valid_stroll(&worked) == Ok(true),
        "worked example invalid"
    );
    ensure!(worked.end() == Pattern::GOOD_END, "worked example end");
    Ok(
        "8 good and 2 reversing table strolls, their 1-2 swaps, and the worked example validate"
            .into(),
    )
}

fn automaton_structure() -> Check {
    let all = Pattern::all();
    ensure!(all.len() == 12, "{} patterns", all.len());
    ensure!(
        all.iter().collect::<BTreeSet<_>>().len() == 12,
        "patterns not distinct"
    );
    let d = automaton();
    let mut loops = 0;
    for &p in all {
        let out = d.out_neighbours(p);
        let non_loop = out.iter().filter(|&&q| q != p).count();
        ensure!(
            non_loop == 2 && out.contains(&p),
            "{p} has out-neighbours {out:?}"
        );
        loops += 1;
        ensure!(
            d.undirected_neighbours(p).len() == 2,
            "{p} undirected degree"
        );
        for &q in all {
            ensure!(
                d.has_directed(p, q) == d.has_directed(reverse_pattern(q), reverse_pattern(p)),
                "directed reversal fails at {p} -> {q}"
            );
            ensure!(
                d.has_undirected(p, q) == d.has_undirected(reverse_pattern(p), reverse_pattern(q)),
                "undirected reversal fails at {p} - {q}"
            );
        }
    }
    let (directed, undirected) = (d.directed_edges().len(), d.undirected_edges().len());
    ensure!(
        directed == 24 && loops == 12 && undirected == 12,
        "totals {directed}/{loops}/{undirected}"
    );
    Ok("12 patterns; each has 2 out-edges, 1 loop, 2 undirected edges; totals 24/12/12; reversal symmetric".into())
}

fn compatibility_brute_force() -> Check {
    // In repl(H_4, {v_{0,w0}, v_{1,w0+s}}), enumerate all proper 4-colourings of
    // Y_0 and record which pattern pairs occur on (X_0, X_1).
    let h = build_h(4).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for w0 in Z3::ALL {
        for s in Z3::ALL {
            let w1 = w0 + s;
            let (a, b) = (h.vertex(0, w0), h.vertex(1, w1));
            let w: VertexSet = [a, b].into_iter().collect();
            let rg = replicate(h.graph(), w).map_err(|e| e.to_string())?;
            let g = rg.graph();
            let y = segment_y(&h, &rg, 0).map_err(|e| e.to_string())?.to_vec();
            let (ca, cb) = (rg.clone_index(a).unwrap(), rg.clone_index(b).unwrap());
            let x0 = [a, ca, h.vertex(0, w0 + Z3::ONE), h.vertex(0, w0 + Z3::TWO)];
            let x1 = [b, cb, h.vertex(1, w1 + Z3::ONE), h.vertex(1, w1 + Z3::TWO)];
            ensure!(y.len() == 8, "Y_0 has {} vertices", y.len());
            let mut seen: BTreeMap<Pattern, BTreeSet<Pattern>> = BTreeMap::new();
            let mut colour = vec![0u8; g.vertex_count()];
            for code in 0..4u32.pow(8) {
                let mut c = code;
                for &v in &y {
                    colour[v] = (c % 4) as u8 + 1;
                    c /= 4;
                }
                let proper = y.iter().all(|&u| {
                    y.iter()
                        .all(|&v| u >= v || !g.has_edge(u, v) || colour[u] != colour[v])
                });
                if !proper {
                    continue;
                }
                let pat = |x: [usize; 4]| {
                    Pattern::from_parts([
                        &[colour[x[0]], colour[x[1]]],
                        &[colour[x[2]]],
                        &[colour[x[3]]],
                    ])
                    .expect("proper on a 4-clique")
                };
                seen.entry(pat(x0)).or_default().insert(pat(x1));
            }
            ensure!(
                seen.len() == 12,
                "only {} patterns occur on X_0",
                seen.len()
            );
            for (p, qs) in seen {
                let want: BTreeSet<Pattern> = compatible(p, s).into_iter().collect();
                ensure!(
                    qs == want,
                    "w0 = {w0:?}, s = {s:?}, {p}: brute force {qs:?}, table {want:?}"
                );
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (row, sign, pattern) triples match exhaustive Y_0 colourings"
    ))
}

fn fractional_values() -> Check {
    for n in 4..=6 {
        let h = build_h(n).map_err(|e| e.to_string())?;
        let sol = fractional_chromatic_number(h.graph()).map_err(|e| e.to_string())?;
        sol.verify(h.graph()).map_err(|e| e.to_string())?;
        ensure!(
            sol.value == Rational::integer(3),
            "chi_f(H_{n}) = {}",
            sol.value
        );
    }
    let h4 = build_h(4).map_err(|e| e.to_string())?;
    ensure!(
        !fht_condition(h4.graph()).map_err(|e| e.to_string())?,
        "FHT condition holds for H_4"
    );
    Ok("chi_f(H_4) = chi_f(H_5) = chi_f(H_6) = 3/1 with verified certificates; FHT condition false on H_4".into())
}

fn conjecture_checks() -> Check {
    let err = |e: gallai_core::Error| e.to_string();
    for (name, g, k) in [
        ("K_4", Graph::complete(4).map_err(err)?, 4),
        ("C_5", Graph::cycle(5).map_err(err)?, 3),
    ] {
        let r = conjecture_check(&g, k).map_err(err)?;
        ensure!(r.holds, "{name}: no witness");
        let w: VertexSet = r.witness.clone().unwrap().into_iter().collect();
        let again =
            criticality(replicate(&g, w).map_err(err)?.graph(), k + 1, false).map_err(err)?;
        ensure!(
            again.is_vertex_critical,
            "{name}: witness does not re-validate"
        );
    }
    let h4 = build_h(4).map_err(err)?;
    let r = conjecture_check(h4.graph(), 4).map_err(err)?;
    ensure!(
        !r.holds && r.subsets_examined == 4096,
        "H_4: holds {} after {}",
        r.holds,
        r.subsets_examined
    );
    let k4 = emit_graph6(&Graph::complete(4).map_err(err)?).map_err(err)?;
    let h4g6 = emit_graph6(h4.graph()).map_err(err)?;
    let scan = scan_text(&format!("{k4}\n{h4g6}\n"), Some(4), false);
    ensure!(
        scan.counterexamples == vec![h4g6.clone()],
        "scan flagged {:?}",
        scan.counterexamples
    );
    Ok("K_4 and C_5 hold with re-validated witnesses; H_4 fails after 4096 subsets; scan flags exactly H_4".into())
}

fn seq_from(rng: &mut ChaCha8Rng, max_len: usize) -> SignSequence {
    let len = rng.gen_range(0..=max_len);
    SignSequence::new((0..len).map(|_| Z3::new(rng.gen_range(0..3))).collect())
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(0..=max_n);
    let mut g = Graph::empty(n).unwrap();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(0.4) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn property_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut notes = Vec::new();

    for _ in 0..1000 {
        let g = random_graph(&mut rng, 10);
        let w = VertexSet::from_bits(rng.gen::<u64>()).intersection(g.vertices());
        let mut order = w.to_vec();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let a = replicate(&g, w).unwrap();
        let b = replicate_in_order(&g, &order).unwrap();
        ensure!(
            a.graph() == b.graph(),
            "replication depends on order {order:?}"
        );
        let h = a.graph();
        for (k, &orig) in a.clone_of().iter().enumerate() {
            let c = g.vertex_count() + k;
            let (mut nc, mut no) = (h.neighbours(c), h.neighbours(orig));
            nc.remove(orig);
            no.remove(c);
            ensure!(
                h.has_edge(c, orig) && nc == no,
                "clone {c} of {orig} is not a closed twin"
            );
        }
    }
    notes.push("order/twins 1000");

    for n in [4, 5] {
        for sel in ColumnSelection::all(n) {
            let total: Z3 = encode_sigma(&sel).symbols().iter().copied().sum();
            ensure!(total == sel.row(0), "sum identity fails for {sel:?}");
        }
    }
    notes.push("sum n=4,5 exhaustive");

    let upto8: Vec<SignSequence> = seqs_up_to(8).collect();
    for a in &upto8 {
        ensure!(
            z_parity(&negate(a)) == z_parity(a) && negate(&negate(a)) == *a,
            "negation identities fail on {a}"
        );
        let b = &upto8[a.len() * 7 % upto8.len()];
        ensure!(
            z_parity(&a.concat(b)) == z_parity(a) ^ z_parity(b),
            "parity of {a}{b}"
        );
        ensure!(
            classify_sequence(a).good == classify_sequence(&negate(a)).good,
            "goodness of {a} vs its negation"
        );
    }
    notes.push("z/negate and goodness symmetry exhaustive to length 8");

    let short: Vec<SignSequence> = seqs_up_to(3).collect();
    for s in seqs_up_to(7) {
        for t in &short {
            ensure!(precedes(t, &s) == precedes_by_indices(t, &s), "{t} vs {s}");
        }
    }
    for _ in 0..1000 {
        let (s, t) = (seq_from(&mut rng, 7), seq_from(&mut rng, 7));
        ensure!(
            precedes(&t, &s) == precedes_by_indices(&t, &s),
            "{t} vs {s}"
        );
    }
    notes.push("precedes vs index search (length <= 7)");

    let d = automaton();
    for s in seqs_up_to(6) {
        for &p in Pattern::all() {
            for r in d.undirected_neighbours(p) {
                let st = stationary_stroll(&s, p, r).unwrap();
                let end = if z_parity(&s) == 0 { p } else { r };
                ensure!(
                    is_valid_stroll(&st) == Ok(true) && st.end() == end,
                    "stationary stroll fails on {s}, {p}, {r}"
                );
            }
        }
    }
    notes.push("stationary strolls exhaustive to length 6");

    let mut hits = 0;
    while hits < 1000 {
        let s = seq_from(&mut rng, 12);
        let t = subsequence(&s, rng.gen());
        if !precedes(&t, &s) {
            continue;
        }
        hits += 1;
        let (cs, ct) = (classify_sequence(&s), classify_sequence(&t));
        let same = z_parity(&t) == z_parity(&s);
        ensure!(
            !(same && ct.good) || cs.good,
            "good subsequence, same parity, fails: {t} in {s}"
        );
        ensure!(
            !(!same && ct.reversing) || cs.good,
            "reversing subsequence, opposite parity, fails: {t} in {s}"
        );
    }
    notes.push("subsequence monotonicity 1000 samples");

    for n in [4, 5] {
        let h = build_h(n).unwrap();
        for m in 0..1u64 << (3 * n) {
            let w = VertexSet::from_bits(m);
            if classify_subset(&h, w).unwrap() != SubsetCase::None {
                continue;
            }
            let z = complete_selection(&h, w)
                .unwrap()
                .to_vertex_set(&h)
                .unwrap();
            ensure!(w.is_subset(z), "completion drops vertices");
            ensure!(
                classify_subset(&h, z).unwrap() == SubsetCase::None,
                "completion of {} is classified",
                h.format_set(w)
            );
        }
    }
    notes.push("completions n=4,5 re-classified");

    let h = build_h(4).unwrap();
    let mut round_trips = 0;
    for sel in ColumnSelection::all(4) {
        if let Some(st) = find_stroll(&encode_sigma(&sel), Pattern::START, Pattern::GOOD_END) {
            let c = synthesize_coloring(&h, &sel, &st).unwrap();
            for i in 0..4 {
                ensure!(
                    pattern_at(&h, &sel, &c, i).unwrap() == st.patterns[i],
                    "round trip fails at column {i}"
                );
            }
            round_trips += 1;
        }
    }
    notes.push("synthesis round trip");
    Ok(format!(
        "{}; {round_trips} good selections at n=4",
        notes.join(", ")
    ))
}

fn out_of_scope_goldens() -> Check {
    let err = |e: gallai_core::Error| e.to_string();
    let k3 = Graph::complete(3).map_err(err)?;
    ensure!(
        cover_ideal_generators(&k3).map_err(err)? == ["x1*x2", "x1*x3", "x2*x3"],
        "K_3 generators"
    );
    let edge = Graph::complete(2).map_err(err)?;
    ensure!(
        cover_ideal_generators(&edge).map_err(err)? == ["x1", "x2"],
        "single-edge generators"
    );
    let script = export_cover_ideal_script(&k3, 4).map_err(err)?;
    ensure!(
        script.contains("J = monomialIdeal(x1*x2, x1*x3, x2*x3);"),
        "K_3 script"
    );
    let h4 = build_h(4).map_err(err)?;
    let covers = minimal_covers(h4.graph()).map_err(err)?;
    let complements: BTreeSet<Vec<usize>> = maximal_independent_sets(h4.graph())
        .map_err(err)?
        .into_iter()
        .map(|s| h4.graph().vertices().difference(s).to_vec())
        .collect();
    ensure!(
        covers.covers.iter().cloned().collect::<BTreeSet<_>>() == complements,
        "covers differ from MIS complements"
    );
    ensure!(
        export_cover_ideal_script(h4.graph(), 4)
            .map_err(err)?
            .contains("x12]"),
        "H_4 ring"
    );
    ensure!(is_k_colorable(h4.graph(), 4).is_some(), "sanity");
    Ok("not reproducible here: the corpus sweep over edge-critical graphs on up to 12 vertices needs the \
        external list, and Ass/depth of cover-ideal powers need a computer-algebra system; \
        checked instead: exported K_3 and single-edge generators, H_4 covers = MIS complements"
        .into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "Gallai basics", Duration::from_secs(30), gallai_basics),
        (
            2,
            "Theorem at n=4, mode both",
            Duration::from_secs(300),
            theorem_n4_both,
        ),
        (
            3,
            "Theorem at n=5, constructive",
            Duration::from_secs(600),
            theorem_n5_constructive,
        ),
        (4, "stroll goldens", Duration::from_secs(60), stroll_goldens),
        (
            5,
            "automaton D structure",
            Duration::from_secs(60),
            automaton_structure,
        ),
        (
            6,
            "compatibility table vs brute force",
            Duration::from_secs(300),
            compatibility_brute_force,
        ),
        (
            7,
            "fractional chromatic number",
            Duration::from_secs(120),
            fractional_values,
        ),
        (
            8,
            "conjecture checker and scan",
            Duration::from_secs(300),
            conjecture_checks,
        ),
        (
            9,
            "property suites",
            Duration::from_secs(600),
            property_suites,
        ),
        (
            10,
            "scope statement and export goldens",
            Duration::from_secs(60),
            out_of_scope_goldens,
        ),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(format!(
                "panicked: {:?}",
                p.downcast_ref::<String>()
                    .map(String::as_str)
                    .or(p.downcast_ref::<&str>().copied())
            ))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > budget => Err(format!("took {elapsed:.1?}, budget {budget:?}")),
            other => other,
        };
        let (verdict, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        failed += usize::from(outcome.is_err());
        println!("criterion {id:>2} {verdict} [{elapsed:.2?} / {budget:?}] {name}: {detail}");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
