//! Sign sequences over `Z_3` (written `0`, `+`, `-`) and the one-per-column
//! selections of `H_n` they encode.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gallai::GallaiGraph;
use crate::graph::VertexSet;
use crate::theorem::{classify_subset, SubsetCase};
use crate::z3::Z3;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignSequence(Vec<Z3>);

impl SignSequence {
    pub fn new(symbols: Vec<Z3>) -> Self {
        SignSequence(symbols)
    }

    pub fn symbols(&self) -> &[Z3] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self` then `other`.
    pub fn concat(&self, other: &SignSequence) -> SignSequence {
        SignSequence(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> SignSequence {
        SignSequence(self.0[range].to_vec())
    }

    /// All `3^len` sequences of the given length, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = SignSequence> {
        let total = 3usize.pow(len as u32);
        (0..total).map(move |mut code| {
            let mut s = vec![Z3::ZERO; len];
            for slot in s.iter_mut().rev() {
                *slot = Z3::new((code % 3) as i64);
                code /= 3;
            }
            SignSequence(s)
        })
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0
            .iter()
            .try_for_each(|z| write!(f, "{}", z.sign_char()))
    }
}

impl fmt::Debug for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SignSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| {
                Z3::from_sign_char(c).ok_or_else(|| {
                    Error::Parse(format!("{c:?} is not a sign (expected 0, + or -)"))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(SignSequence)
    }
}

impl Serialize for SignSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A set meeting every column of `H_n` in exactly one vertex, recorded as
/// the row `w_i` chosen in each column `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnSelection {
    rows: Vec<Z3>,
}

impl ColumnSelection {
    pub fn new(rows: Vec<Z3>) -> Self {
        ColumnSelection { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Z3] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> Z3 {
        self.rows[i]
    }

    /// Reads a selection off a vertex set with exactly one vertex per column.
    pub fn from_vertex_set(h: &GallaiGraph, s: VertexSet) -> Result<Self> {
        h.graph().check_set(s)?;
        let rows = (0..h.n())
            .map(|i| {
                let hit = s.intersection(h.column(i)?);
                if hit.len() != 1 {
                    return Err(Error::InvalidArgument(format!(
                        "column {i} contains {} selected vertices, expected exactly one",
                        hit.len()
                    )));
                }
                Ok(h.name(hit.iter().next().expect("one element")).row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ColumnSelection { rows })
    }

    pub fn to_vertex_set(&self, h: &GallaiGraph) -> Result<VertexSet> {
        if self.n() != h.n() {
            return Err(Error::InvalidArgument(format!(
                "selection has {} columns, H_{} has {}",
                self.n(),
                h.n(),
                h.n()
            )));
        }
        Ok(self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &j)| h.vertex(i, j))
            .collect())
    }

    /// All `3^n` selections.
    pub fn all(n: usize) -> impl Iterator<Item = ColumnSelection> {
        SignSequence::all_of_length(n).map(|s| ColumnSelection { rows: s.0 })
    }
}

/// `σ^W`: `s_i = w_{i+1} - w_i` for `i <= n-2` and `s_{n-1} = -w_0 - w_{n-1}`.
pub fn encode_sigma(sel: &ColumnSelection) -> SignSequence {
    let w = sel.rows();
    let n = w.len();
    if n == 0 {
        return SignSequence::default();
    }
    let mut s: Vec<Z3> = w.windows(2).map(|p| p[1] - p[0]).collect();
    s.push(-w[0] - w[n - 1]);
    SignSequence(s)
}

/// Parity of the number of zeros.
pub fn z_parity(s: &SignSequence) -> u8 {
    (s.0.iter().filter(|&&z| z == Z3::ZERO).count() % 2) as u8
}

/// Swaps `+` and `-`.
pub fn negate(s: &SignSequence) -> SignSequence {
    SignSequence(s.0.iter().map(|&z| -z).collect())
}

/// Whether `t ⪯ s`: `t` is a subsequence of `s` such that the prefix before
/// the first matched index and every gap between consecutive matched indices
/// contain an even number of zeros. The empty sequence precedes everything.
pub fn precedes(t: &SignSequence, s: &SignSequence) -> bool {
    let t = t.symbols();
    if t.is_empty() {
        return true;
    }
    // reach[m][p]: m symbols of t matched, current gap has zero-parity p.
    let mut reach = vec![[false; 2]; t.len() + 1];
    reach[0][0] = true;
    for &sym in s.symbols() {
        let mut next = vec![[false; 2]; t.len() + 1];
        for m in 0..=t.len() {
            for (p, &reached) in reach[m].iter().enumerate() {
                if !reached {
                    continue;
                }
                if m == t.len() {
                    next[m][0] = true;
                    continue;
                }
                let skip_p = p ^ (sym == Z3::ZERO) as usize;
                next[m][skip_p] = true;
                if p == 0 && sym == t[m] {
                    next[m + 1][0] = true;
                }
            }
        }
        reach = next;
    }
    reach[t.len()][0]
}

/// Extends `w` (which falls in none of the cases A, B, C) to a set with
/// exactly one vertex per column that still satisfies none of them. Empty
/// columns are filled left to right with row 0, or row 1 when row 0 would
/// trigger a condition.
pub fn complete_selection(h: &GallaiGraph, w: VertexSet) -> Result<ColumnSelection> {
    let case = classify_subset(h, w)?;
    if case != SubsetCase::None {
        return Err(Error::Precondition(format!(
            "{} falls in case {}",
            h.format_set(w),
            case.label()
        )));
    }
    let mut z = w;
    for i in 0..h.n() {
        if !z.intersection(h.column(i)?).is_empty() {
            continue;
        }
        let mut with_zero = z;
        with_zero.insert(h.vertex(i, Z3::ZERO));
        if classify_subset(h, with_zero)? == SubsetCase::None {
            z = with_zero;
            continue;
        }
        let mut with_one = z;
        with_one.insert(h.vertex(i, Z3::ONE));
        if classify_subset(h, with_one)? != SubsetCase::None {
            return Err(Error::Falsification(format!(
                "no admissible vertex in column {i} when extending {}",
                h.format_set(z)
            )));
        }
        z = with_one;
    }
    ColumnSelection::from_vertex_set(h, z)
}
