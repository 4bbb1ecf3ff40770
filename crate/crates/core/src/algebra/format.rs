//! The TDA file format: UTF-8 JSON with keys `dim`, optional `basis`, and
//! `prec` / `succ` / `vee`, each a list of `[i, j, k, "p/q"]` entries
//! (1-based, meaning `e_i ∘ e_j` has coefficient `p/q` on `e_k`).

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{default_basis_names, ProductTag, StructureTensor, TridendriformAlgebra};
use crate::exactla::Rational;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid {key} entry [{i}, {j}, {k}]: index out of range 1..={dim}")]
    IndexOutOfRange {
        key: String,
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },
    #[error("duplicate {key} entry for (i,j,k) = ({i},{j},{k})")]
    Duplicate { key: String, i: usize, j: usize, k: usize },
    #[error("basis has {found} names but dim is {dim}")]
    BasisLength { dim: usize, found: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Entry = (usize, usize, usize, Rational);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TdaFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub prec: Vec<Entry>,
    #[serde(default)]
    pub succ: Vec<Entry>,
    #[serde(default)]
    pub vee: Vec<Entry>,
}

/// Checks indices and duplicates, then fills a tensor. Shared with the
/// associative-algebra format.
pub(crate) fn fill_tensor(dim: usize, key: &str, entries: &[Entry]) -> Result<StructureTensor, FormatError> {
    let mut seen = BTreeSet::new();
    let mut t = StructureTensor::zero(dim);
    for (i, j, k, c) in entries {
        let (i, j, k) = (*i, *j, *k);
        let in_range = |x: usize| (1..=dim).contains(&x);
        if !(in_range(i) && in_range(j) && in_range(k)) {
            return Err(FormatError::IndexOutOfRange {
                key: key.to_string(),
                i,
                j,
                k,
                dim,
            });
        }
        if !seen.insert((i, j, k)) {
            return Err(FormatError::Duplicate {
                key: key.to_string(),
                i,
                j,
                k,
            });
        }
        t.set(i - 1, j - 1, k - 1, c.clone());
    }
    Ok(t)
}

pub(crate) fn tensor_entries(t: &StructureTensor) -> Vec<Entry> {
    t.nonzero_entries()
        .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, c.clone()))
        .collect()
}

pub(crate) fn resolve_basis(dim: usize, basis: Option<Vec<String>>) -> Result<Vec<String>, FormatError> {
    match basis {
        None => Ok(default_basis_names(dim)),
        Some(names) if names.len() == dim => Ok(names),
        Some(names) => Err(FormatError::BasisLength {
            dim,
            found: names.len(),
        }),
    }
}

impl TdaFile {
    pub fn into_algebra(self) -> Result<TridendriformAlgebra, FormatError> {
        let basis = resolve_basis(self.dim, self.basis)?;
        let prec = fill_tensor(self.dim, "prec", &self.prec)?;
        let succ = fill_tensor(self.dim, "succ", &self.succ)?;
        let vee = fill_tensor(self.dim, "vee", &self.vee)?;
        TridendriformAlgebra::from_tensors(basis, prec, succ, vee).map_err(|e| FormatError::Invalid(e.to_string()))
    }

    pub fn from_algebra(alg: &TridendriformAlgebra) -> Self {
        TdaFile {
            dim: alg.dim(),
            basis: Some(alg.basis_names().to_vec()),
            prec: tensor_entries(alg.tensor(ProductTag::Prec)),
            succ: tensor_entries(alg.tensor(ProductTag::Succ)),
            vee: tensor_entries(alg.tensor(ProductTag::Vee)),
        }
    }
}

/// Writes `[i, j, k, "p/q"]` entries one per line, so diffs stay readable.
pub(crate) fn write_entries(out: &mut String, key: &str, entries: &[Entry], last: bool) {
    out.push_str(&format!("  \"{key}\": ["));
    for (n, (i, j, k, c)) in entries.iter().enumerate() {
        out.push_str(if n == 0 { "\n" } else { ",\n" });
        out.push_str(&format!("    [{i}, {j}, {k}, \"{c}\"]"));
    }
    if !entries.is_empty() {
        out.push_str("\n  ");
    }
    out.push(']');
    out.push_str(if last { "\n" } else { ",\n" });
}

pub(crate) fn write_header(out: &mut String, dim: usize, basis: &[String]) {
    out.push_str("{\n");
    out.push_str(&format!("  \"dim\": {dim},\n"));
    let names = serde_json::to_string(basis).expect("strings serialize");
    out.push_str(&format!("  \"basis\": {names},\n"));
}

impl TridendriformAlgebra {
    pub fn from_tda_str(s: &str) -> Result<Self, FormatError> {
        serde_json::from_str::<TdaFile>(s)?.into_algebra()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, FormatError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_tda_str(&text)
    }

    /// Canonical TDA text: entries in `(i, j, k)` order, zero coefficients omitted.
    pub fn to_tda_string(&self) -> String {
        let file = TdaFile::from_algebra(self);
        let mut out = String::new();
        write_header(&mut out, file.dim, file.basis.as_deref().unwrap_or(&[]));
        write_entries(&mut out, "prec", &file.prec, false);
        write_entries(&mut out, "succ", &file.succ, false);
        write_entries(&mut out, "vee", &file.vee, true);
        out.push_str("}\n");
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), FormatError> {
        let path = path.as_ref();
        std::fs::write(path, self.to_tda_string()).map_err(|source| FormatError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::dt35;
    use super::*;

    #[test]
    fn parses_minimal_file() {
        let alg = TridendriformAlgebra::from_tda_str(
            r#"{"dim": 2, "prec": [[2, 2, 1, "1"]], "succ": [[2, 2, 1, "1"]], "vee": [[2, 2, 1, "1"]]}"#,
        )
        .unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(alg.basis_names(), &["e1", "e2"]);
        assert_eq!(alg.tensor(ProductTag::Vee).get(1, 1, 0), &Rational::one());
    }

    #[test]
    fn missing_product_keys_mean_zero() {
        let alg = TridendriformAlgebra::from_tda_str(r#"{"dim": 3}"#).unwrap();
        assert!(alg.is_zero());
    }

    #[test]
    fn rejects_duplicates_and_bad_indices() {
        let dup = r#"{"dim": 2, "prec": [[1, 1, 1, "1"], [1, 1, 1, "2"]]}"#;
        assert!(matches!(
            TridendriformAlgebra::from_tda_str(dup),
            Err(FormatError::Duplicate { .. })
        ));
        let oob = r#"{"dim": 2, "succ": [[1, 3, 1, "1"]]}"#;
        assert!(matches!(
            TridendriformAlgebra::from_tda_str(oob),
            Err(FormatError::IndexOutOfRange { .. })
        ));
        let zero = r#"{"dim": 2, "succ": [[0, 1, 1, "1"]]}"#;
        assert!(TridendriformAlgebra::from_tda_str(zero).is_err());
        let basis = r#"{"dim": 2, "basis": ["x"]}"#;
        assert!(matches!(
            TridendriformAlgebra::from_tda_str(basis),
            Err(FormatError::BasisLength { .. })
        ));
        let unknown = r#"{"dim": 2, "mu": []}"#;
        assert!(TridendriformAlgebra::from_tda_str(unknown).is_err());
        let bad_coef = r#"{"dim": 1, "vee": [[1, 1, 1, "1/0"]]}"#;
        assert!(TridendriformAlgebra::from_tda_str(bad_coef).is_err());
    }

    #[test]
    fn round_trip_through_text() {
        let alg = dt35()
            .with_basis_names(vec!["x".into(), "y".into(), "z".into()])
            .unwrap();
        let text = alg.to_tda_string();
        assert_eq!(TridendriformAlgebra::from_tda_str(&text).unwrap(), alg);
        assert!(text.contains("[1, 1, 3, \"1\"]"));
    }
}
