//! Replication search over a corpus of graph6 lines.

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chromatic::criticality;
use crate::error::Result;
use crate::graph::parse_graph6;
use crate::theorem::{conjecture_check, ConjectureResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanStatus {
    /// The replication search ran.
    Checked,
    /// Dropped by the edge-criticality filter.
    Filtered,
    /// The line did not parse or the graph was outside the search's precondition or caps.
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub line: usize,
    pub graph6: String,
    pub status: ScanStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge_critical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conjecture: Option<ConjectureResult>,
    pub counterexample: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub corpus_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    pub filter_edge_critical: bool,
    pub graphs: usize,
    pub checked: usize,
    pub errors: usize,
    /// graph6 strings of graphs with no `W` making the replication `(k+1)`-critical.
    pub counterexamples: Vec<String>,
    pub entries: Vec<ScanEntry>,
}

fn scan_line(line: usize, text: &str, k: Option<u32>, filter_edge_critical: bool) -> ScanEntry {
    let started = Instant::now();
    let mut entry = ScanEntry {
        line,
        graph6: text.to_string(),
        status: ScanStatus::Error,
        vertices: None,
        k: None,
        edge_critical: None,
        conjecture: None,
        counterexample: false,
        error: None,
        millis: 0,
    };
    let outcome = (|| -> Result<()> {
        let g = parse_graph6(text)?;
        entry.vertices = Some(g.vertex_count());
        let (chi, _) = crate::chromatic::chromatic_number(&g);
        let k = k.unwrap_or(chi);
        entry.k = Some(k);
        let edge_critical = criticality(&g, k, true)?.is_edge_critical == Some(true);
        entry.edge_critical = Some(edge_critical);
        if filter_edge_critical && !edge_critical {
            entry.status = ScanStatus::Filtered;
            return Ok(());
        }
        let result = conjecture_check(&g, k)?;
        entry.counterexample = !result.holds;
        entry.conjecture = Some(result);
        entry.status = ScanStatus::Checked;
        Ok(())
    })();
    if let Err(e) = outcome {
        entry.status = ScanStatus::Error;
        entry.error = Some(e.to_string());
    }
    entry.millis = started.elapsed().as_millis() as u64;
    entry
}

/// Scans corpus text, one graph6 string per non-blank line. Without `k`, each
/// graph is judged against its own chromatic number.
pub fn scan_text(text: &str, k: Option<u32>, filter_edge_critical: bool) -> ScanReport {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let entries: Vec<ScanEntry> = lines
        .par_iter()
        .map(|&(i, l)| scan_line(i, l, k, filter_edge_critical))
        .collect();
    ScanReport {
        corpus_sha256: hex(&Sha256::digest(text.as_bytes())),
        k,
        filter_edge_critical,
        graphs: entries.len(),
        checked: entries
            .iter()
            .filter(|e| e.status == ScanStatus::Checked)
            .count(),
        errors: entries
            .iter()
            .filter(|e| e.status == ScanStatus::Error)
            .count(),
        counterexamples: entries
            .iter()
            .filter(|e| e.counterexample)
            .map(|e| e.graph6.clone())
            .collect(),
        entries,
    }
}

pub fn scan_corpus(path: &Path, k: Option<u32>, filter_edge_critical: bool) -> Result<ScanReport> {
    let text = std::fs::read_to_string(path)?;
    Ok(scan_text(&text, k, filter_edge_critical))
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallai::build_h;
    use crate::graph::{emit_graph6, Graph};

    #[test]
    fn empty_corpus() {
        let r = scan_text("", Some(4), false);
        assert_eq!(r.graphs, 0);
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn k4_and_h4() {
        let k4 = emit_graph6(&Graph::complete(4).unwrap()).unwrap();
        let h4 = emit_graph6(build_h(4).unwrap().graph()).unwrap();
        let r = scan_text(&format!("{k4}\n\n{h4}\nnot-graph6!\n"), Some(4), true);
        assert_eq!(r.graphs, 3);
        assert_eq!(r.checked, 2);
        assert_eq!(r.errors, 1);
        assert_eq!(r.counterexamples, vec![h4]);
        assert_eq!(r.entries[1].line, 3);
        assert_eq!(r.entries[2].status, ScanStatus::Error);
    }

    #[test]
    fn filter_drops_non_edge_critical() {
        // K4 minus an edge is 3-chromatic but not 3-critical.
        let mut g = Graph::complete(4).unwrap();
        g.remove_edge(0, 1).unwrap();
        let r = scan_text(&emit_graph6(&g).unwrap(), None, true);
        assert_eq!(r.entries[0].status, ScanStatus::Filtered);
        let r = scan_text(&emit_graph6(&g).unwrap(), None, false);
        assert_eq!(r.entries[0].status, ScanStatus::Error);
    }
}
