//! Wire formats: tableaux as `{"rows": [[...], ...]}`, subsets as
//! `{"n": ..., "I": [...]}`, words and partitions as plain arrays, plus
//! the ASCII boxed rendering of tableaux.

use orbk_core::oracle::CheckReport;
use orbk_core::{SimpleRootSubset, StandardTableau};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauDoc {
    pub rows: Vec<Vec<u32>>,
}

impl From<&StandardTableau> for TableauDoc {
    fn from(t: &StandardTableau) -> TableauDoc {
        TableauDoc {
            rows: t.rows().to_vec(),
        }
    }
}

/// Parse and validate a tableau document.
pub fn parse_tableau(text: &str) -> Result<StandardTableau, String> {
    let doc: TableauDoc =
        serde_json::from_str(text).map_err(|e| format!("invalid tableau JSON: {e}"))?;
    StandardTableau::new(doc.rows).map_err(|e| format!("invalid tableau: {e}"))
}

pub fn tableau_json(t: &StandardTableau) -> String {
    serde_json::to_string(&TableauDoc::from(t)).expect("tableau serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubsetDoc {
    pub n: usize,
    #[serde(rename = "I")]
    pub indices: Vec<u32>,
}

impl From<&SimpleRootSubset> for SubsetDoc {
    fn from(subset: &SimpleRootSubset) -> SubsetDoc {
        SubsetDoc {
            n: subset.n(),
            indices: subset.indices().iter().copied().collect(),
        }
    }
}

pub fn parse_subset(text: &str) -> Result<SimpleRootSubset, String> {
    let doc: SubsetDoc =
        serde_json::from_str(text).map_err(|e| format!("invalid subset JSON: {e}"))?;
    SimpleRootSubset::new(doc.n, doc.indices).map_err(|e| format!("invalid subset: {e}"))
}

#[derive(Debug, Clone, Serialize)]
pub struct DescendantDoc {
    pub rows: Vec<Vec<u32>>,
    pub shape: Vec<u32>,
    pub codim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DescendantsDoc {
    pub n: usize,
    #[serde(rename = "I")]
    pub indices: Vec<u32>,
    pub descendants: Vec<DescendantDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosureDoc {
    pub n: usize,
    #[serde(rename = "I")]
    pub indices: Vec<u32>,
    pub members: Vec<TableauDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDoc {
    pub check: String,
    pub n: usize,
    pub cases: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl From<&CheckReport> for ReportDoc {
    fn from(r: &CheckReport) -> ReportDoc {
        ReportDoc {
            check: r.check.clone(),
            n: r.n,
            cases: r.cases,
            violation_count: r.violation_count,
            violations: r.violations.clone(),
            notes: r.notes.clone(),
        }
    }
}

/// Boxed ASCII layout, one bordered cell per entry.
pub fn render_tableau_ascii(t: &StandardTableau) -> String {
    if t.is_empty() {
        return String::from("(empty)\n");
    }
    let width = t
        .rows()
        .iter()
        .flatten()
        .map(|e| e.to_string().len())
        .max()
        .unwrap_or(1);
    let border = |cells: usize| {
        let mut line = String::from("+");
        for _ in 0..cells {
            line.push_str(&"-".repeat(width + 2));
            line.push('+');
        }
        line.push('\n');
        line
    };
    let mut out = border(t.rows()[0].len());
    for row in t.rows() {
        for entry in row {
            out.push_str(&format!("| {entry:>width$} "));
        }
        out.push_str("|\n");
        out.push_str(&border(row.len()));
    }
    out
}
