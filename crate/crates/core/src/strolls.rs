//! Patterns, the compatibility automaton `D`, and strolls.
//!
//! A pattern records a proper 4-colouring of a clique `X_i` up to the order
//! of the two colours on the selected vertex and its clone: a cyclically
//! ordered triple of colour sets `(pair, a, b)` partitioning `{1,2,3,4}`.
//! Written `[12]34`, canonically with the pair first and ascending.
//!
//! `D` has the 12 patterns as vertices. `ρ` is `+`-compatible with `π`
//! (directed edge `π -> ρ`) when `ρ = π` or `ρ` arises from `π` by moving one
//! paired colour into the preceding part; `-`-compatibility moves it into
//! the following part instead. The two `0`-compatible patterns (undirected
//! edges) merge the unpaired colours of `π` and split its pair in either
//! order. A `σ`-stroll is a walk in `D` whose `j`-th step follows `s_j`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chromatic::{validate_coloring, Coloring};
use crate::error::{Error, Result};
use crate::gallai::GallaiGraph;
use crate::replication::replicate;
use crate::signseq::{encode_sigma, ColumnSelection, SignSequence};
use crate::z3::Z3;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    pair: [u8; 2],
    first: u8,
    second: u8,
}

impl Pattern {
    /// `[12]34`
    pub const START: Pattern = Pattern {
        pair: [1, 2],
        first: 3,
        second: 4,
    };
    /// `[12]43`, the end of a good stroll.
    pub const GOOD_END: Pattern = Pattern {
        pair: [1, 2],
        first: 4,
        second: 3,
    };
    /// `[34]12`, the end of a reversing stroll.
    pub const REVERSING_END: Pattern = Pattern {
        pair: [3, 4],
        first: 1,
        second: 2,
    };

    /// Canonical pattern from a cyclic triple of parts, exactly one of size two.
    pub fn from_parts(parts: [&[u8]; 3]) -> Result<Pattern> {
        let mut seen = 0u8;
        for part in parts {
            for &c in part {
                if !(1..=4).contains(&c) || seen >> c & 1 == 1 {
                    return Err(Error::InvalidArgument(format!(
                        "parts {parts:?} do not partition {{1,2,3,4}}"
                    )));
                }
                seen |= 1 << c;
            }
        }
        let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
        let Some(k) = sizes.iter().position(|&s| s == 2) else {
            return Err(Error::InvalidArgument(format!(
                "no part of size two in {parts:?}"
            )));
        };
        if seen != 0b11110 || sizes.iter().filter(|&&s| s == 1).count() != 2 {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not a pair and two singletons covering 1..=4"
            )));
        }
        let pair = parts[k];
        Ok(Pattern {
            pair: [pair[0].min(pair[1]), pair[0].max(pair[1])],
            first: parts[(k + 1) % 3][0],
            second: parts[(k + 2) % 3][0],
        })
    }

    /// All 12 patterns in canonical order.
    pub fn all() -> &'static [Pattern; 12] {
        static ALL: OnceLock<[Pattern; 12]> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut out = Vec::with_capacity(12);
            for x in 1..=4u8 {
                for y in (x + 1)..=4 {
                    let rest: Vec<u8> = (1..=4).filter(|&c| c != x && c != y).collect();
                    out.push(Pattern {
                        pair: [x, y],
                        first: rest[0],
                        second: rest[1],
                    });
                    out.push(Pattern {
                        pair: [x, y],
                        first: rest[1],
                        second: rest[0],
                    });
                }
            }
            out.sort();
            out.try_into().expect("twelve patterns")
        })
    }

    /// Position in [`Pattern::all`].
    pub fn index(self) -> usize {
        Pattern::all()
            .iter()
            .position(|&p| p == self)
            .expect("canonical pattern")
    }

    pub fn pair(self) -> [u8; 2] {
        self.pair
    }

    pub fn first(self) -> u8 {
        self.first
    }

    pub fn second(self) -> u8 {
        self.second
    }

    /// Swaps two colours everywhere.
    pub fn swap_colours(self, a: u8, b: u8) -> Pattern {
        let f = |c: u8| {
            if c == a {
                b
            } else if c == b {
                a
            } else {
                c
            }
        };
        Pattern::from_parts([
            &[f(self.pair[0]), f(self.pair[1])],
            &[f(self.first)],
            &[f(self.second)],
        ])
        .expect("colour swap preserves the partition")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}{}]{}{}",
            self.pair[0], self.pair[1], self.first, self.second
        )
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '[' | ']'))
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse(format!("pattern {s:?} must look like [12]34")))?;
        let t = s.trim();
        if digits.len() != 4 || !t.starts_with('[') || t.find(']') != Some(3) {
            return Err(Error::Parse(format!("pattern {s:?} must look like [12]34")));
        }
        Pattern::from_parts([&digits[0..2], &digits[2..3], &digits[3..4]])
            .map_err(|e| Error::Parse(format!("pattern {s:?}: {e}")))
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Reverses the cyclic order of the parts.
pub fn reverse_pattern(p: Pattern) -> Pattern {
    Pattern {
        pair: p.pair,
        first: p.second,
        second: p.first,
    }
}

/// Patterns at `X_{i+1}` compatible with pattern `p` at `X_i` for offset `s`,
/// in canonical order.
pub fn compatible(p: Pattern, s: Z3) -> Vec<Pattern> {
    let [x, y] = p.pair;
    let (a, b) = (p.first, p.second);
    let mut out = match s.value() {
        // Move a paired colour into the preceding part (the one holding `b`).
        1 => vec![
            p,
            Pattern::from_parts([&[y], &[a], &[b, x]]).expect("valid"),
            Pattern::from_parts([&[x], &[a], &[b, y]]).expect("valid"),
        ],
        // Move it into the following part (the one holding `a`).
        2 => vec![
            p,
            Pattern::from_parts([&[y], &[a, x], &[b]]).expect("valid"),
            Pattern::from_parts([&[x], &[a, y], &[b]]).expect("valid"),
        ],
        _ => vec![
            Pattern::from_parts([&[a, b], &[x], &[y]]).expect("valid"),
            Pattern::from_parts([&[a, b], &[y], &[x]]).expect("valid"),
        ],
    };
    out.sort();
    out
}

/// The compatibility automaton, as adjacency bitmasks over pattern indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomatonD {
    /// `directed[p]`: patterns `q` with an edge `p -> q` (loops included).
    directed: [u16; 12],
    undirected: [u16; 12],
}

impl AutomatonD {
    pub fn has_directed(&self, from: Pattern, to: Pattern) -> bool {
        self.directed[from.index()] >> to.index() & 1 == 1
    }

    pub fn has_undirected(&self, p: Pattern, q: Pattern) -> bool {
        self.undirected[p.index()] >> q.index() & 1 == 1
    }

    pub fn out_neighbours(&self, p: Pattern) -> Vec<Pattern> {
        mask_patterns(self.directed[p.index()])
    }

    pub fn undirected_neighbours(&self, p: Pattern) -> Vec<Pattern> {
        mask_patterns(self.undirected[p.index()])
    }

    /// Non-loop directed edges, sorted.
    pub fn directed_edges(&self) -> Vec<(Pattern, Pattern)> {
        let all = Pattern::all();
        let mut out = Vec::new();
        for &p in all {
            for q in self.out_neighbours(p) {
                if p != q {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Undirected edges `{p, q}` reported once with `p < q`.
    pub fn undirected_edges(&self) -> Vec<(Pattern, Pattern)> {
        let mut out = Vec::new();
        for &p in Pattern::all() {
            for q in self.undirected_neighbours(p) {
                if p < q {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Whether pattern `to` may follow `from` on a step with sign `s`.
    pub fn step(&self, from: Pattern, to: Pattern, s: Z3) -> bool {
        match s.value() {
            0 => self.has_undirected(from, to),
            1 => self.has_directed(from, to),
            _ => self.has_directed(to, from),
        }
    }
}

fn mask_patterns(mask: u16) -> Vec<Pattern> {
    Pattern::all()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect()
}

/// Builds `D` from [`compatible`].
pub fn build_d() -> AutomatonD {
    let mut directed = [0u16; 12];
    let mut undirected = [0u16; 12];
    for &p in Pattern::all() {
        for q in compatible(p, Z3::ONE) {
            directed[p.index()] |= 1 << q.index();
        }
        for q in compatible(p, Z3::ZERO) {
            undirected[p.index()] |= 1 << q.index();
            undirected[q.index()] |= 1 << p.index();
        }
    }
    AutomatonD {
        directed,
        undirected,
    }
}

/// Shared instance of `D`.
pub fn automaton() -> &'static AutomatonD {
    static D: OnceLock<AutomatonD> = OnceLock::new();
    D.get_or_init(build_d)
}

/// A sign sequence together with a walk `π_0 … π_L` in `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stroll {
    pub sigma: SignSequence,
    pub patterns: Vec<Pattern>,
}

impl Stroll {
    /// The stroll of the empty sign sequence sitting at `p`.
    pub fn empty_at(p: Pattern) -> Stroll {
        Stroll {
            sigma: SignSequence::default(),
            patterns: vec![p],
        }
    }

    pub fn start(&self) -> Pattern {
        self.patterns[0]
    }

    pub fn end(&self) -> Pattern {
        *self
            .patterns
            .last()
            .expect("a stroll has at least one pattern")
    }

    /// Swaps two colours in every pattern.
    pub fn swap_colours(&self, a: u8, b: u8) -> Stroll {
        Stroll {
            sigma: self.sigma.clone(),
            patterns: self.patterns.iter().map(|p| p.swap_colours(a, b)).collect(),
        }
    }
}

/// Whether every step of `st` follows the rule for its sign. Errors when the
/// number of patterns is not one more than the length of the sign sequence.
pub fn is_valid_stroll(st: &Stroll) -> Result<bool> {
    if st.patterns.len() != st.sigma.len() + 1 {
        return Err(Error::InvalidArgument(format!(
            "stroll has {} patterns for a sign sequence of length {}",
            st.patterns.len(),
            st.sigma.len()
        )));
    }
    let d = automaton();
    Ok(st
        .sigma
        .symbols()
        .iter()
        .zip(st.patterns.windows(2))
        .all(|(&s, w)| d.step(w[0], w[1], s)))
}

/// The lexicographically least `s`-stroll from `from` to `to`, if any.
pub fn find_stroll(s: &SignSequence, from: Pattern, to: Pattern) -> Option<Stroll> {
    let d = automaton();
    let all = Pattern::all();
    let len = s.len();
    // can[i]: patterns at position i from which `to` is reachable.
    let mut can = vec![0u16; len + 1];
    can[len] = 1 << to.index();
    for i in (0..len).rev() {
        let sym = s.symbols()[i];
        for &p in all {
            if all
                .iter()
                .any(|&q| can[i + 1] >> q.index() & 1 == 1 && d.step(p, q, sym))
            {
                can[i] |= 1 << p.index();
            }
        }
    }
    if can[0] >> from.index() & 1 == 0 {
        return None;
    }
    let mut patterns = Vec::with_capacity(len + 1);
    patterns.push(from);
    let mut cur = from;
    for i in 0..len {
        let sym = s.symbols()[i];
        cur = *all
            .iter()
            .find(|&&q| can[i + 1] >> q.index() & 1 == 1 && d.step(cur, q, sym))
            .expect("backward pass guarantees a successor");
        patterns.push(cur);
    }
    Some(Stroll {
        sigma: s.clone(),
        patterns,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub good: bool,
    pub reversing: bool,
}

/// Good: a stroll `[12]34 -> [12]43` exists. Reversing: `[12]34 -> [34]12`.
pub fn classify_sequence(s: &SignSequence) -> Classification {
    Classification {
        good: find_stroll(s, Pattern::START, Pattern::GOOD_END).is_some(),
        reversing: find_stroll(s, Pattern::START, Pattern::REVERSING_END).is_some(),
    }
}

/// `S(σ; π, ρ)`: stays put on nonzero signs and toggles between `p` and `r`
/// on zeros. Requires `p`–`r` to be an undirected edge of `D`.
pub fn stationary_stroll(s: &SignSequence, p: Pattern, r: Pattern) -> Result<Stroll> {
    if !automaton().has_undirected(p, r) {
        return Err(Error::InvalidArgument(format!(
            "{p} and {r} are not 0-compatible"
        )));
    }
    let mut patterns = Vec::with_capacity(s.len() + 1);
    let mut cur = p;
    patterns.push(cur);
    for &sym in s.symbols() {
        if sym == Z3::ZERO {
            cur = if cur == p { r } else { p };
        }
        patterns.push(cur);
    }
    Ok(Stroll {
        sigma: s.clone(),
        patterns,
    })
}

/// `a ∘ b`: concatenated signs, patterns spliced at the shared junction.
pub fn compose(a: &Stroll, b: &Stroll) -> Result<Stroll> {
    if a.end() != b.start() {
        return Err(Error::InvalidArgument(format!(
            "cannot compose: first stroll ends at {}, second starts at {}",
            a.end(),
            b.start()
        )));
    }
    let mut patterns = a.patterns.clone();
    patterns.extend_from_slice(&b.patterns[1..]);
    Ok(Stroll {
        sigma: a.sigma.concat(&b.sigma),
        patterns,
    })
}

/// 4-colouring of `repl(H_n, Z)` for the selection `Z`, colouring each clique
/// `X_i` with pattern `π_i` of `st`: the pair goes to `v_{i,w_i}` (lower
/// colour) and its clone (higher), the next part to `v_{i,w_i+1}`, the last
/// to `v_{i,w_i+2}`. The result is validated before it is returned.
pub fn synthesize_coloring(
    h: &GallaiGraph,
    sel: &ColumnSelection,
    st: &Stroll,
) -> Result<Coloring> {
    let n = h.n();
    if sel.n() != n {
        return Err(Error::InvalidArgument(format!(
            "selection has {} columns, H_{n} has {n}",
            sel.n()
        )));
    }
    if !is_valid_stroll(st)? {
        return Err(Error::InvalidArgument("stroll is not valid".into()));
    }
    if st.sigma != encode_sigma(sel) {
        return Err(Error::InvalidArgument(format!(
            "stroll follows {} but the selection encodes {}",
            st.sigma,
            encode_sigma(sel)
        )));
    }
    if st.start() != Pattern::START || st.end() != Pattern::GOOD_END {
        return Err(Error::InvalidArgument(format!(
            "stroll runs {} -> {}, expected {} -> {}",
            st.start(),
            st.end(),
            Pattern::START,
            Pattern::GOOD_END
        )));
    }
    let mut colours = vec![0u8; 4 * n];
    for i in 0..n {
        let p = st.patterns[i];
        let w = sel.row(i);
        colours[h.vertex(i, w)] = p.pair[0];
        colours[3 * n + i] = p.pair[1];
        colours[h.vertex(i, w + Z3::ONE)] = p.first;
        colours[h.vertex(i, w + Z3::TWO)] = p.second;
    }
    let coloring = Coloring::new(colours, 4);
    let rg = replicate(h.graph(), sel.to_vertex_set(h)?)?;
    validate_coloring(rg.graph(), &coloring).map_err(|e| {
        Error::Falsification(format!(
            "stroll {} yields an improper colouring: {e}",
            st.sigma
        ))
    })?;
    Ok(coloring)
}

/// Pattern of `c` at `X_i` in `repl(H_n, Z)`.
pub fn pattern_at(
    h: &GallaiGraph,
    sel: &ColumnSelection,
    c: &Coloring,
    i: usize,
) -> Result<Pattern> {
    let n = h.n();
    if i >= n || sel.n() != n {
        return Err(Error::InvalidArgument(format!(
            "column {i} or selection size out of range"
        )));
    }
    if c.colours.len() != 4 * n {
        return Err(Error::InvalidArgument(format!(
            "colouring has {} entries, repl(H_{n}, Z) has {}",
            c.colours.len(),
            4 * n
        )));
    }
    let w = sel.row(i);
    let pair = [c.colour(h.vertex(i, w)), c.colour(3 * n + i)];
    let a = c.colour(h.vertex(i, w + Z3::ONE));
    let b = c.colour(h.vertex(i, w + Z3::TWO));
    Pattern::from_parts([&pair, &[a], &[b]])
        .map_err(|_| Error::InvalidArgument(format!("colouring is not proper on X_{i}")))
}
