use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::entries::{Expected, RANGE_CLAIMS};
use super::{default_params, entries, genericity_tuples, CatalogEntry, Params};
use crate::algebra::AxiomFailure;
use crate::opspaces::{operator_space, OperatorKind};

/// How parameters are chosen for the sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditPolicy {
    /// One binding. Names an entry does not declare are ignored and missing
    /// ones fall back to the default binding.
    Fixed(Params),
    /// The default binding plus two seeded samples. Verdicts use the default;
    /// the samples only raise warnings when a dimension moves.
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "NO-EXPECTATION")]
    NoExpectation,
    /// The recorded sources disagree with each other.
    #[serde(rename = "DISCREPANCY")]
    Discrepancy,
}

impl Verdict {
    pub const ALL: [Verdict; 4] = [
        Verdict::Match,
        Verdict::Mismatch,
        Verdict::NoExpectation,
        Verdict::Discrepancy,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::NoExpectation => "NO-EXPECTATION",
            Verdict::Discrepancy => "DISCREPANCY",
        }
    }
}

/// The audited invariants, with their column headers.
const AUDITED: [(&str, &str, &str); 3] = [
    ("der_dim", "DimDer", "Der"),
    ("centroid_dim", "DimC", "C"),
    ("quasi_centroid_dim", "DimQC", "QC"),
];

/// One cell: an entry and an invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub id: String,
    pub invariant: String,
    pub computed: usize,
    /// The recorded value when all sources agree.
    pub expected: Option<usize>,
    /// Sources joined with `+`, e.g. `table+proof`.
    pub source: Option<String>,
    pub verdict: Verdict,
    /// Every recorded `(source, value)`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<(String, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryAudit {
    pub id: String,
    pub dim: usize,
    pub params: BTreeMap<String, String>,
    pub axioms_pass: bool,
    pub first_failure: Option<AxiomFailure>,
    pub der_dim: usize,
    pub zder_dim: usize,
    pub centroid_dim: usize,
    pub quasi_centroid_dim: usize,
}

impl EntryAudit {
    fn value(&self, invariant: &str) -> usize {
        match invariant {
            "der_dim" => self.der_dim,
            "zder_dim" => self.zder_dim,
            "centroid_dim" => self.centroid_dim,
            "quasi_centroid_dim" => self.quasi_centroid_dim,
            other => unreachable!("not an audited invariant: {other}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeSummary {
    pub family_dim: usize,
    pub invariant: String,
    pub computed_min: usize,
    pub computed_max: usize,
    pub claimed_min: usize,
    pub claimed_max: usize,
    pub source: String,
    pub verdict: Verdict,
}

/// Recorded values that contradict each other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub subject: String,
    /// `(source, value)` in recorded order.
    pub values: Vec<(String, String)>,
    pub computed: String,
}

/// A nonzero derivation space where only trivial derivations were expected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationException {
    pub id: String,
    pub dimension: usize,
    pub basis: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityWarning {
    pub id: String,
    pub invariant: String,
    /// One value per sampled tuple, default binding first.
    pub values: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryNote {
    pub id: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub policy: String,
    pub entries: Vec<EntryAudit>,
    pub records: Vec<AuditRecord>,
    pub ranges: Vec<RangeSummary>,
    pub discrepancies: Vec<Discrepancy>,
    pub derivation_exceptions: Vec<DerivationException>,
    pub genericity_warnings: Vec<GenericityWarning>,
    pub notes: Vec<EntryNote>,
}

struct Computed {
    audit: EntryAudit,
    exception: Option<DerivationException>,
    warnings: Vec<GenericityWarning>,
}

fn display_params(p: &Params) -> BTreeMap<String, String> {
    p.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

fn own_params(entry: &CatalogEntry, base: &Params) -> Params {
    let mut p = default_params();
    p.extend(base.iter().map(|(k, v)| (k.clone(), v.clone())));
    p.retain(|k, _| entry.param_names().contains(&k.as_str()));
    p
}

fn dims(entry: &CatalogEntry, params: &Params) -> [usize; 4] {
    let alg = entry
        .instantiate(params)
        .expect("bindings restricted to declared names");
    [
        OperatorKind::Derivation,
        OperatorKind::CentralDerivation,
        OperatorKind::Centroid,
        OperatorKind::QuasiCentroid,
    ]
    .map(|k| operator_space(&alg, k).dimension())
}

fn compute(entry: CatalogEntry, policy: &AuditPolicy) -> Computed {
    let base = match policy {
        AuditPolicy::Fixed(p) => own_params(&entry, p),
        AuditPolicy::Generic => own_params(&entry, &default_params()),
    };
    let alg = entry.instantiate(&base).expect("bindings restricted to declared names");
    let residuals = alg.axiom_residuals();
    let der = operator_space(&alg, OperatorKind::Derivation);
    let [der_dim, zder_dim, centroid_dim, quasi_centroid_dim] = dims(&entry, &base);
    debug_assert_eq!(der_dim, der.dimension());

    let exception = (entry.expected_der().corollary == Some(0) && der_dim > 0).then(|| DerivationException {
        id: entry.id().to_string(),
        dimension: der_dim,
        basis: der.basis().iter().map(|m| m.to_string_rows()).collect(),
    });

    let mut warnings = Vec::new();
    if *policy == AuditPolicy::Generic && !entry.param_names().is_empty() {
        let samples: Vec<[usize; 4]> = genericity_tuples()
            .iter()
            .map(|t| dims(&entry, &own_params(&entry, t)))
            .collect();
        let names = ["der_dim", "zder_dim", "centroid_dim", "quasi_centroid_dim"];
        for (slot, name) in names.iter().enumerate() {
            let values: Vec<usize> = samples.iter().map(|s| s[slot]).collect();
            if values.iter().any(|&v| v != values[0]) {
                warnings.push(GenericityWarning {
                    id: entry.id().to_string(),
                    invariant: (*name).to_string(),
                    values,
                });
            }
        }
    }

    Computed {
        audit: EntryAudit {
            id: entry.id().to_string(),
            dim: entry.dim(),
            params: display_params(&base),
            axioms_pass: residuals.pass,
            first_failure: residuals.first_failure,
            der_dim,
            zder_dim,
            centroid_dim,
            quasi_centroid_dim,
        },
        exception,
        warnings,
    }
}

fn expected_for(entry: &CatalogEntry, invariant: &str) -> Expected {
    match invariant {
        "der_dim" => entry.expected_der(),
        "centroid_dim" => entry.expected_centroid(),
        "quasi_centroid_dim" => entry.expected_quasi_centroid(),
        other => unreachable!("not an audited invariant: {other}"),
    }
}

fn classify(id: &str, invariant: &str, computed: usize, expected: Expected) -> (AuditRecord, Option<Discrepancy>) {
    let sources = expected.sources();
    let values = sources.iter().map(|&(s, v)| (s.to_string(), v)).collect();
    let mut record = AuditRecord {
        id: id.to_string(),
        invariant: invariant.to_string(),
        computed,
        expected: None,
        source: None,
        verdict: Verdict::NoExpectation,
        values,
        note: None,
    };
    let Some(&(_, first)) = sources.first() else {
        return (record, None);
    };
    record.source = Some(sources.iter().map(|(s, _)| *s).collect::<Vec<_>>().join("+"));
    if sources.iter().all(|&(_, v)| v == first) {
        record.expected = Some(first);
        record.verdict = if computed == first {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        return (record, None);
    }
    record.verdict = Verdict::Discrepancy;
    let agreeing: Vec<&str> = sources
        .iter()
        .filter(|&&(_, v)| v == computed)
        .map(|(s, _)| *s)
        .collect();
    let listed = sources
        .iter()
        .map(|(s, v)| format!("{s} {v}"))
        .collect::<Vec<_>>()
        .join(", ");
    record.note = Some(if agreeing.is_empty() {
        format!("{listed}; solver agrees with neither")
    } else {
        format!("{listed}; solver agrees with {}", agreeing.join("+"))
    });
    let discrepancy = Discrepancy {
        subject: format!("{id} {invariant}"),
        values: sources.iter().map(|&(s, v)| (s.to_string(), v.to_string())).collect(),
        computed: computed.to_string(),
    };
    (record, Some(discrepancy))
}

fn range_summaries(entries: &[EntryAudit]) -> (Vec<RangeSummary>, Vec<Discrepancy>) {
    let mut ranges = Vec::new();
    let mut claims_by_key: BTreeMap<(usize, String), Vec<(String, String)>> = BTreeMap::new();
    let mut computed_by_key: BTreeMap<(usize, String), String> = BTreeMap::new();
    for claim in RANGE_CLAIMS {
        let invariant = format!("{}_dim", claim.invariant);
        let values: Vec<usize> = entries
            .iter()
            .filter(|e| e.dim == claim.family_dim)
            .map(|e| e.value(&invariant))
            .collect();
        let (lo, hi) = (
            values.iter().copied().min().unwrap_or(0),
            values.iter().copied().max().unwrap_or(0),
        );
        let verdict = if (lo, hi) == (claim.min, claim.max) {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        let key = (claim.family_dim, invariant.clone());
        claims_by_key
            .entry(key.clone())
            .or_default()
            .push((claim.source.to_string(), format!("{}..{}", claim.min, claim.max)));
        computed_by_key.insert(key, format!("{lo}..{hi}"));
        ranges.push(RangeSummary {
            family_dim: claim.family_dim,
            invariant,
            computed_min: lo,
            computed_max: hi,
            claimed_min: claim.min,
            claimed_max: claim.max,
            source: claim.source.to_string(),
            verdict,
        });
    }
    let discrepancies = claims_by_key
        .into_iter()
        .filter(|(_, claims)| claims.iter().any(|c| c.1 != claims[0].1))
        .map(|((dim, invariant), values)| Discrepancy {
            subject: format!("dim-{dim} {invariant} range"),
            computed: computed_by_key[&(dim, invariant.clone())].clone(),
            values,
        })
        .collect();
    (ranges, discrepancies)
}

/// Recomputes every operator-space dimension in the catalog and compares it
/// with the recorded values. Entries run in parallel; output order is catalog order.
pub fn audit_tables(policy: &AuditPolicy) -> AuditReport {
    let all: Vec<CatalogEntry> = entries().collect();
    let computed: Vec<Computed> = all.par_iter().map(|e| compute(*e, policy)).collect();

    let mut records = Vec::new();
    let mut discrepancies = Vec::new();
    for (entry, c) in all.iter().zip(&computed) {
        for (invariant, _, _) in AUDITED {
            let (record, d) = classify(
                entry.id(),
                invariant,
                c.audit.value(invariant),
                expected_for(entry, invariant),
            );
            records.push(record);
            discrepancies.extend(d);
        }
    }
    let audits: Vec<EntryAudit> = computed.iter().map(|c| c.audit.clone()).collect();
    let (ranges, range_discrepancies) = range_summaries(&audits);
    discrepancies.extend(range_discrepancies);

    AuditReport {
        policy: match policy {
            AuditPolicy::Fixed(_) => "fixed".into(),
            AuditPolicy::Generic => "generic".into(),
        },
        entries: audits,
        records,
        ranges,
        discrepancies,
        derivation_exceptions: computed.iter().filter_map(|c| c.exception.clone()).collect(),
        genericity_warnings: computed.iter().flat_map(|c| c.warnings.clone()).collect(),
        notes: all
            .iter()
            .flat_map(|e| {
                e.notes().iter().map(|n| EntryNote {
                    id: e.id().to_string(),
                    note: (*n).to_string(),
                })
            })
            .collect(),
    }
}

fn pad(cells: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..cells[0].len())
        .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

impl AuditReport {
    pub fn record(&self, id: &str, invariant: &str) -> Option<&AuditRecord> {
        self.records.iter().find(|r| r.id == id && r.invariant == invariant)
    }

    pub fn entry(&self, id: &str) -> Option<&EntryAudit> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
            + self.ranges.iter().filter(|r| r.verdict == verdict).count()
    }

    pub fn has_mismatch(&self) -> bool {
        self.count(Verdict::Mismatch) > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// The discrepancy section alone.
    pub fn render_discrepancies(&self) -> String {
        if self.discrepancies.is_empty() {
            return "  none\n".into();
        }
        let rows: Vec<Vec<String>> = self
            .discrepancies
            .iter()
            .map(|d| {
                let listed = d
                    .values
                    .iter()
                    .map(|(s, v)| format!("{s} {v}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                vec![format!("  {}", d.subject), listed, format!("computed {}", d.computed)]
            })
            .collect();
        pad(&rows)
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "catalog audit ({} parameters)", self.policy);
        out.push('\n');

        let mut header = vec!["id".to_string(), "axioms".to_string()];
        header.extend(AUDITED.iter().map(|(_, h, _)| h.to_string()));
        header.push("verdicts".into());
        let mut rows = vec![header];
        for e in &self.entries {
            let mut row = vec![e.id.clone(), if e.axioms_pass { "pass" } else { "FAIL" }.to_string()];
            let mut verdicts = Vec::new();
            for (invariant, _, short) in AUDITED {
                let r = self.record(&e.id, invariant).expect("one record per cell");
                let cell = match r.verdict {
                    Verdict::NoExpectation => r.computed.to_string(),
                    Verdict::Discrepancy => {
                        let vs: Vec<String> = r.values.iter().map(|(_, v)| v.to_string()).collect();
                        format!("{} ({})", r.computed, vs.join("|"))
                    }
                    _ => format!("{} ({})", r.computed, r.expected.expect("agreed value")),
                };
                row.push(cell);
                verdicts.push(format!("{short}={}", r.verdict.label()));
            }
            row.push(verdicts.join(" "));
            rows.push(row);
        }
        out.push_str(&pad(&rows));
        out.push_str("\ncells read computed (recorded); a|b lists conflicting records\n");

        out.push_str("\naxiom failures\n");
        let failures: Vec<&EntryAudit> = self.entries.iter().filter(|e| !e.axioms_pass).collect();
        if failures.is_empty() {
            out.push_str("  none\n");
        }
        for e in failures {
            let f = e.first_failure.as_ref().expect("failing entry has a witness");
            let _ = writeln!(out, "  {}  {f}", e.id);
        }

        out.push_str("\nnonzero derivations where only trivial ones were expected\n");
        if self.derivation_exceptions.is_empty() {
            out.push_str("  none\n");
        }
        for x in &self.derivation_exceptions {
            let _ = writeln!(out, "  {}  dimension {}", x.id, x.dimension);
            for m in &x.basis {
                let rows: Vec<String> = m.iter().map(|r| r.join(" ")).collect();
                let _ = writeln!(out, "    [{}]", rows.join("; "));
            }
        }

        out.push_str("\nranges\n");
        let mut rows = Vec::new();
        for r in &self.ranges {
            rows.push(vec![
                format!("  dim {}", r.family_dim),
                r.invariant.clone(),
                format!("computed {}..{}", r.computed_min, r.computed_max),
                format!("claimed {}..{} ({})", r.claimed_min, r.claimed_max, r.source),
                r.verdict.label().to_string(),
            ]);
        }
        out.push_str(&pad(&rows));

        out.push_str("\ndiscrepancies\n");
        out.push_str(&self.render_discrepancies());

        out.push_str("\nnotes\n");
        if self.notes.is_empty() {
            out.push_str("  none\n");
        }
        for n in &self.notes {
            let _ = writeln!(out, "  {}  {}", n.id, n.note);
        }

        if self.policy == "generic" {
            out.push_str("\ngenericity warnings\n");
            if self.genericity_warnings.is_empty() {
                out.push_str("  none\n");
            }
            for w in &self.genericity_warnings {
                let vs: Vec<String> = w.values.iter().map(usize::to_string).collect();
                let _ = writeln!(
                    out,
                    "  {}  {} varies across samples: {}",
                    w.id,
                    w.invariant,
                    vs.join(", ")
                );
            }
        }

        let counts: Vec<String> = Verdict::ALL
            .iter()
            .map(|v| format!("{} {}", self.count(*v), v.label()))
            .collect();
        let _ = writeln!(out, "\nsummary: {}", counts.join(", "));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_cases() {
        let none = Expected::default();
        assert_eq!(classify("X", "der_dim", 3, none).0.verdict, Verdict::NoExpectation);
        let one = Expected {
            table: Some(3),
            ..Expected::default()
        };
        assert_eq!(classify("X", "der_dim", 3, one).0.verdict, Verdict::Match);
        assert_eq!(classify("X", "der_dim", 2, one).0.verdict, Verdict::Mismatch);
        let agree = Expected {
            table: Some(1),
            proof: Some(1),
            corollary: None,
        };
        let (r, d) = classify("X", "centroid_dim", 1, agree);
        assert_eq!(
            (r.verdict, r.source.as_deref(), d),
            (Verdict::Match, Some("table+proof"), None)
        );
        let conflict = Expected {
            table: Some(3),
            proof: Some(1),
            corollary: None,
        };
        let (r, d) = classify("X", "quasi_centroid_dim", 1, conflict);
        assert_eq!(r.verdict, Verdict::Discrepancy);
        assert_eq!(r.note.as_deref(), Some("table 3, proof 1; solver agrees with proof"));
        assert_eq!(d.unwrap().subject, "X quasi_centroid_dim");
    }

    #[test]
    fn verdict_serializes_as_label() {
        for v in Verdict::ALL {
            assert_eq!(serde_json::to_string(&v).unwrap(), format!("\"{}\"", v.label()));
        }
    }
}
