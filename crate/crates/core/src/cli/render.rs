//! Text layout and the machine record shapes emitted by each subcommand.

use serde::{Deserialize, Serialize};

use crate::algebra::{AxiomFailure, LinearMap, TdaFile};
use crate::catalog::Expected;
use crate::exactla::{Rational, SubspaceBasis};
use crate::opspaces::{Comparison, Fingerprint, INVARIANT_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub source: String,
    pub dim: usize,
    pub pass: bool,
    pub failing_axioms: Vec<usize>,
    pub first_failure: Option<AxiomFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub kind: String,
    pub dimension: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl SubspaceRecord {
    pub fn new(kind: &str, s: &SubspaceBasis) -> Self {
        SubspaceRecord {
            kind: kind.to_string(),
            dimension: s.dim(),
            basis: s.vectors().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssocRecord {
    pub source: String,
    pub product: String,
    pub associative: bool,
    /// 1-based basis triple where associativity fails.
    pub witness: Option<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotaBaxterRecord {
    pub algebra: String,
    pub theta: Rational,
    pub holds: bool,
    /// 1-based basis pair where the identity fails.
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructRecord {
    pub algebra: String,
    pub theta: Rational,
    pub axioms_pass: bool,
    pub first_failure: Option<AxiomFailure>,
    pub induced: TdaFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintRecord {
    pub source: String,
    pub fingerprint: Fingerprint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRecord {
    pub left: FingerprintRecord,
    pub right: FingerprintRecord,
    pub comparison: Comparison,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogListing {
    pub id: String,
    pub dim: usize,
    pub params: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableLine {
    pub product: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDetail {
    pub id: String,
    pub dim: usize,
    pub params: Vec<String>,
    pub table: Vec<TableLine>,
    pub der: Expected,
    pub centroid: Expected,
    pub quasi_centroid: Expected,
    pub notes: Vec<String>,
}

pub fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records serialize") + "\n"
}

/// Right-aligned bracketed rows.
pub fn matrix_lines(rows: &[Vec<String>], indent: &str) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(x, w)| format!("{x:>w$}", w = *w)).collect();
        out.push_str(&format!("{indent}[ {} ]\n", cells.join("  ")));
    }
    out
}

pub fn maps_block(basis: &[LinearMap]) -> String {
    if basis.is_empty() {
        return "dimension 0 (only the zero map)\n".into();
    }
    let mut out = format!("dimension {}\n", basis.len());
    for (n, m) in basis.iter().enumerate() {
        out.push_str(&format!("basis {}:\n", n + 1));
        out.push_str(&matrix_lines(&m.to_string_rows(), "  "));
    }
    out
}

pub fn vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn subspace_block(s: &SubspaceBasis) -> String {
    if s.dim() == 0 {
        return "dimension 0 (only the zero vector)\n".into();
    }
    let mut out = format!("dimension {}\n", s.dim());
    for v in s.vectors() {
        out.push_str(&format!("  {}\n", vector(v)));
    }
    out
}

pub fn fingerprint_lines(f: &Fingerprint) -> String {
    let width = INVARIANT_NAMES.iter().map(|n| n.len()).max().unwrap_or(0);
    INVARIANT_NAMES
        .iter()
        .zip(f.values())
        .map(|(n, v)| format!("  {n:<width$}  {v}\n"))
        .collect()
}

/// Aligned columns, two spaces apart, trailing space trimmed.
pub fn columns(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|x| x.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, x)| format!("{x:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn expected_cell(e: &Expected) -> String {
    let s = e.sources();
    if s.is_empty() {
        return "-".into();
    }
    s.iter()
        .map(|(src, v)| format!("{v} ({src})"))
        .collect::<Vec<_>>()
        .join(", ")
}
