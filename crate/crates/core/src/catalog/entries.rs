//! Multiplication tables and recorded dimensions. Indices are 1-based here, as printed.

use serde::{Deserialize, Serialize};

use crate::algebra::ProductTag::{self, Prec as P, Succ as S, Vee as V};

/// `e_i ∘ e_j = Σ coef · e_k`
pub(crate) type Row = (ProductTag, usize, usize, &'static [(usize, &'static str)]);

/// Recorded values for one invariant. Tables and proofs disagree in places,
/// so each source is kept separately.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub table: Option<usize>,
    pub proof: Option<usize>,
    pub corollary: Option<usize>,
}

impl Expected {
    const NONE: Expected = Expected {
        table: None,
        proof: None,
        corollary: None,
    };

    const fn table(v: usize) -> Self {
        Expected {
            table: Some(v),
            proof: None,
            corollary: None,
        }
    }

    const fn with_proof(self, v: usize) -> Self {
        Expected { proof: Some(v), ..self }
    }

    const fn corollary(v: usize) -> Self {
        Expected {
            table: None,
            proof: None,
            corollary: Some(v),
        }
    }

    /// `(source, value)` pairs in a fixed order.
    pub fn sources(&self) -> Vec<(&'static str, usize)> {
        [
            ("table", self.table),
            ("proof", self.proof),
            ("corollary", self.corollary),
        ]
        .into_iter()
        .filter_map(|(s, v)| v.map(|v| (s, v)))
        .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.sources().is_empty()
    }
}

pub(crate) struct EntryData {
    pub id: &'static str,
    pub dim: usize,
    pub params: &'static [&'static str],
    pub rows: &'static [Row],
    pub der: Expected,
    pub centroid: Expected,
    pub quasi_centroid: Expected,
    pub notes: &'static [&'static str],
}

const E1: &[(usize, &str)] = &[(1, "1")];
const E2: &[(usize, &str)] = &[(2, "1")];
const E3: &[(usize, &str)] = &[(3, "1")];
const E4: &[(usize, &str)] = &[(4, "1")];
const E24: &[(usize, &str)] = &[(2, "1"), (4, "1")];
const E34: &[(usize, &str)] = &[(3, "1"), (4, "1")];

const NO_DER: Expected = Expected::corollary(0);

const fn t(v: usize) -> Expected {
    Expected::table(v)
}

pub(crate) const ENTRIES: &[EntryData] = &[
    EntryData {
        id: "EX2.1",
        dim: 2,
        params: &[],
        rows: &[(P, 2, 2, E1), (S, 2, 2, E1), (V, 2, 2, E1)],
        der: Expected::NONE,
        centroid: Expected::NONE,
        quasi_centroid: Expected::NONE,
        notes: &[],
    },
    EntryData {
        id: "DT3.1",
        dim: 3,
        params: &[],
        rows: &[
            (P, 1, 1, E2),
            (P, 1, 3, E2),
            (P, 3, 1, E2),
            (S, 1, 3, E2),
            (S, 3, 1, E2),
            (S, 3, 3, E2),
            (V, 1, 1, E2),
            (V, 1, 3, E2),
            (V, 3, 3, E2),
        ],
        der: NO_DER,
        centroid: t(1).with_proof(1),
        quasi_centroid: t(3).with_proof(1),
        notes: &[],
    },
    EntryData {
        id: "DT3.2",
        dim: 3,
        params: &[],
        rows: &[
            (P, 1, 1, E2),
            (P, 1, 3, E2),
            (P, 3, 1, E2),
            (P, 3, 3, E2),
            (S, 3, 1, E2),
            (S, 3, 3, E2),
            (V, 1, 3, E2),
            (V, 3, 1, E2),
            (V, 3, 3, E2),
        ],
        der: NO_DER,
        centroid: t(1),
        quasi_centroid: t(4),
        notes: &[],
    },
    EntryData {
        id: "DT3.3",
        dim: 3,
        params: &["a", "b", "c", "d"],
        rows: &[
            (P, 1, 2, &[(3, "a")]),
            (P, 2, 1, E3),
            (P, 2, 2, &[(3, "b")]),
            (S, 2, 1, &[(3, "c")]),
            (S, 2, 2, E3),
            (V, 1, 2, E3),
            (V, 2, 2, &[(3, "d")]),
        ],
        der: NO_DER,
        centroid: t(3),
        quasi_centroid: t(4),
        notes: &[],
    },
    EntryData {
        id: "DT3.4",
        dim: 3,
        params: &[],
        rows: &[
            (P, 1, 2, E3),
            (P, 2, 1, E3),
            (P, 2, 2, E3),
            (S, 1, 2, E3),
            (S, 2, 1, E3),
            (S, 2, 2, E3),
            (V, 2, 2, E3),
        ],
        der: NO_DER,
        centroid: t(3),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT3.5",
        dim: 3,
        params: &[],
        rows: &[
            (P, 1, 1, E3),
            (P, 1, 2, E3),
            (P, 2, 1, E3),
            (S, 1, 1, E3),
            (S, 2, 1, E3),
            (S, 2, 2, E3),
            (V, 2, 1, E3),
            (V, 2, 2, E3),
        ],
        der: NO_DER,
        centroid: t(3),
        quasi_centroid: t(4),
        notes: &[],
    },
    EntryData {
        id: "DT3.6",
        dim: 3,
        params: &["a", "b", "c"],
        rows: &[
            (P, 1, 1, E3),
            (P, 1, 2, &[(3, "a")]),
            (P, 2, 1, E3),
            (P, 2, 2, &[(3, "-1")]),
            (S, 1, 1, &[(3, "b")]),
            (S, 1, 2, &[(3, "c")]),
            (S, 2, 2, E3),
            (V, 1, 1, &[(3, "-c")]),
            (V, 2, 2, E3),
        ],
        der: NO_DER,
        centroid: t(3),
        quasi_centroid: t(4),
        notes: &[],
    },
    EntryData {
        id: "DT4.1",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 1, E1),
            (S, 1, 2, E2),
            (V, 3, 1, E34),
            (V, 3, 3, E34),
            (V, 3, 4, E34),
            (V, 4, 4, E34),
        ],
        der: Expected::NONE,
        centroid: t(1).with_proof(1),
        quasi_centroid: t(1).with_proof(1),
        notes: &[],
    },
    EntryData {
        id: "DT4.2",
        dim: 4,
        params: &[],
        rows: &[
            (P, 2, 1, E3),
            (S, 4, 1, E3),
            (V, 1, 2, E34),
            (V, 2, 1, E2),
            (V, 4, 4, E34),
        ],
        der: Expected::NONE,
        centroid: t(2),
        quasi_centroid: t(6),
        notes: &[],
    },
    EntryData {
        id: "DT4.3",
        dim: 4,
        params: &["a", "b", "d"],
        rows: &[
            (P, 1, 2, &[(3, "1"), (4, "a")]),
            (P, 2, 1, E34),
            (P, 2, 2, &[(3, "b"), (4, "-a")]),
            (S, 1, 2, E3),
            (S, 2, 1, &[(3, "b")]),
            (S, 2, 2, E3),
            (V, 1, 2, E4),
            (V, 2, 1, E4),
            (V, 2, 2, &[(4, "d")]),
        ],
        der: t(3),
        centroid: t(3),
        quasi_centroid: t(10),
        notes: &[],
    },
    EntryData {
        id: "DT4.4",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 2, E34),
            (P, 2, 1, E34),
            (P, 2, 2, E34),
            (S, 1, 2, E3),
            (S, 2, 1, E3),
            (S, 2, 2, E3),
            (V, 1, 2, E34),
            (V, 2, 1, E34),
            (V, 2, 2, E34),
        ],
        der: t(4),
        centroid: t(3),
        quasi_centroid: t(10),
        notes: &[],
    },
    EntryData {
        id: "DT4.5",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 3, E24),
            (P, 3, 1, E24),
            (S, 3, 1, E24),
            (S, 3, 3, E24),
            (V, 3, 3, E24),
        ],
        der: t(2),
        centroid: t(1),
        quasi_centroid: t(9),
        notes: &[],
    },
    EntryData {
        id: "DT4.6",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 3, E24),
            (P, 3, 1, E24),
            (P, 3, 3, E24),
            (S, 1, 3, E24),
            (S, 3, 3, E24),
            (V, 3, 1, E24),
            (V, 3, 3, E24),
        ],
        der: t(2),
        centroid: t(1),
        quasi_centroid: t(9),
        notes: &[],
    },
    EntryData {
        id: "DT4.7",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 3, E24),
            (P, 3, 1, E24),
            (P, 3, 3, E24),
            (S, 1, 3, E24),
            (S, 3, 1, E2),
            (S, 3, 3, E24),
            (V, 1, 3, E24),
            (V, 3, 1, E24),
            (V, 3, 3, E4),
        ],
        der: t(5),
        centroid: t(1),
        quasi_centroid: t(9),
        notes: &[],
    },
    EntryData {
        id: "DT4.8",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 1, E2),
            (P, 1, 3, E2),
            (P, 3, 1, E2),
            (S, 1, 3, E2),
            (S, 3, 1, E2),
            (V, 1, 1, E2),
            (V, 3, 1, E2),
            (V, 3, 3, E2),
        ],
        der: t(4),
        centroid: t(1),
        quasi_centroid: t(9),
        notes: &[],
    },
    EntryData {
        id: "DT4.9",
        dim: 4,
        params: &["a", "b", "c", "d"],
        rows: &[
            (P, 1, 1, E2),
            (P, 1, 3, &[(2, "a")]),
            (P, 3, 3, &[(2, "-a")]),
            (P, 4, 4, E2),
            (S, 3, 1, &[(2, "b")]),
            (S, 3, 3, E2),
            (S, 4, 4, &[(2, "c")]),
            (V, 1, 1, E2),
            (V, 4, 4, &[(2, "d")]),
        ],
        der: t(1).with_proof(1),
        centroid: t(1),
        quasi_centroid: t(8),
        notes: &[],
    },
    EntryData {
        id: "DT4.10",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 3, E2),
            (P, 3, 1, E2),
            (P, 4, 4, E2),
            (S, 3, 1, E2),
            (S, 3, 3, E2),
            (S, 4, 4, E2),
            (V, 1, 1, E2),
            (V, 3, 3, E2),
            (V, 4, 4, E2),
        ],
        der: t(1),
        centroid: t(1),
        quasi_centroid: t(8),
        notes: &[],
    },
    EntryData {
        id: "DT4.11",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 2, E3),
            (P, 2, 1, E3),
            (P, 2, 2, E34),
            (S, 1, 2, E3),
            (S, 2, 1, E3),
            (S, 2, 2, E34),
            (V, 1, 2, E3),
            (V, 2, 1, E3),
            (V, 2, 2, E34),
        ],
        der: t(4),
        centroid: t(1),
        quasi_centroid: t(10),
        notes: &["printed row `e_∨ e_2 = e_3` read as e1 ∨ e2 = e3 (the only index matching the row pattern)"],
    },
    EntryData {
        id: "DT4.12",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 1, E4),
            (P, 2, 1, E4),
            (P, 2, 3, E4),
            (S, 1, 2, E4),
            (S, 2, 2, E4),
            (S, 3, 2, E4),
            (V, 1, 1, E4),
            (V, 2, 2, E4),
            (V, 3, 3, E4),
        ],
        der: Expected::NONE,
        centroid: t(3),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT4.13",
        dim: 4,
        params: &[],
        rows: &[
            (P, 2, 2, E4),
            (P, 2, 3, E4),
            (P, 3, 1, E4),
            (S, 1, 2, E4),
            (S, 3, 1, E4),
            (S, 3, 2, E4),
            (V, 2, 3, E4),
            (V, 3, 1, E4),
            (V, 3, 3, E4),
        ],
        der: t(1),
        centroid: t(3),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT4.14",
        dim: 4,
        params: &["a", "b"],
        rows: &[
            (P, 2, 3, &[(4, "a")]),
            (P, 3, 2, E4),
            (P, 3, 3, &[(4, "-a")]),
            (S, 3, 1, &[(4, "b")]),
            (S, 3, 2, E4),
            (S, 3, 3, E4),
            (V, 1, 1, &[(4, "a")]),
            (V, 3, 1, E4),
            (V, 3, 3, &[(4, "-a")]),
        ],
        der: t(1),
        centroid: t(3),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT4.15",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 2, E4),
            (P, 3, 2, E4),
            (P, 3, 3, E4),
            (S, 1, 1, E4),
            (S, 2, 3, E4),
            (S, 3, 1, E4),
            (V, 2, 2, E4),
            (V, 2, 3, E4),
            (V, 3, 3, E4),
        ],
        der: t(1),
        centroid: t(3),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT4.16",
        dim: 4,
        params: &[],
        rows: &[
            (P, 2, 2, E1),
            (P, 2, 3, E1),
            (P, 2, 4, E1),
            (S, 2, 2, E1),
            (S, 3, 2, E1),
            (S, 3, 4, E1),
            (V, 2, 2, E1),
            (V, 3, 3, E1),
            (V, 4, 2, E1),
        ],
        der: t(1),
        centroid: t(4),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT4.17",
        dim: 4,
        params: &["a", "b"],
        rows: &[
            (P, 2, 3, E1),
            (P, 3, 3, &[(1, "a")]),
            (P, 4, 3, &[(1, "b")]),
            (S, 2, 4, &[(1, "-a")]),
            (S, 4, 3, &[(1, "a")]),
            (S, 4, 4, E1),
            (V, 2, 4, E1),
            (V, 3, 3, E1),
            (V, 4, 4, &[(1, "a")]),
        ],
        der: t(2),
        centroid: t(4),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT4.18",
        dim: 4,
        params: &[],
        rows: &[
            (P, 3, 4, E1),
            (P, 4, 2, E1),
            (P, 4, 4, E1),
            (S, 3, 3, E1),
            (S, 3, 4, E1),
            (S, 4, 4, E1),
            (V, 3, 2, E1),
            (V, 3, 3, E1),
            (V, 4, 3, E1),
        ],
        der: t(2),
        centroid: t(4),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT4.19",
        dim: 4,
        params: &[],
        rows: &[
            (P, 2, 2, E1),
            (P, 3, 2, E1),
            (P, 4, 3, E1),
            (P, 4, 4, E1),
            (S, 2, 4, E1),
            (S, 3, 3, E1),
            (S, 4, 3, E1),
            (S, 4, 4, E1),
            (V, 3, 3, E1),
            (V, 4, 4, E1),
        ],
        der: t(1),
        centroid: t(4),
        quasi_centroid: t(5),
        notes: &[],
    },
    EntryData {
        id: "DT4.20",
        dim: 4,
        params: &["a", "b"],
        rows: &[
            (P, 1, 3, E2),
            (P, 3, 1, &[(4, "a^2")]),
            (P, 3, 3, E2),
            (S, 1, 3, E2),
            (S, 3, 1, E4),
            (S, 3, 3, &[(4, "a")]),
            (V, 1, 3, &[(4, "b")]),
            (V, 3, 1, E4),
            (V, 3, 3, E2),
        ],
        der: t(4),
        centroid: t(5),
        quasi_centroid: t(8),
        notes: &[],
    },
    EntryData {
        id: "DT4.21",
        dim: 4,
        params: &[],
        rows: &[
            (P, 1, 3, E2),
            (P, 3, 1, E2),
            (P, 3, 3, E2),
            (S, 1, 3, E24),
            (S, 3, 1, E24),
            (S, 3, 3, E24),
            (V, 1, 3, E4),
            (V, 3, 1, E4),
            (V, 3, 3, E4),
        ],
        der: t(4),
        centroid: t(5),
        quasi_centroid: t(8),
        notes: &[],
    },
];

/// A claimed range of an invariant over one dimension's classification.
pub(crate) struct RangeClaim {
    pub family_dim: usize,
    pub invariant: &'static str,
    pub min: usize,
    pub max: usize,
    pub source: &'static str,
}

pub(crate) const RANGE_CLAIMS: &[RangeClaim] = &[
    RangeClaim {
        family_dim: 3,
        invariant: "der",
        min: 0,
        max: 0,
        source: "corollary",
    },
    RangeClaim {
        family_dim: 4,
        invariant: "der",
        min: 1,
        max: 8,
        source: "corollary",
    },
    RangeClaim {
        family_dim: 4,
        invariant: "der",
        min: 1,
        max: 5,
        source: "abstract",
    },
    RangeClaim {
        family_dim: 3,
        invariant: "centroid",
        min: 1,
        max: 3,
        source: "corollary",
    },
    RangeClaim {
        family_dim: 4,
        invariant: "centroid",
        min: 1,
        max: 5,
        source: "corollary",
    },
    RangeClaim {
        family_dim: 3,
        invariant: "quasi_centroid",
        min: 3,
        max: 5,
        source: "corollary",
    },
    RangeClaim {
        family_dim: 4,
        invariant: "quasi_centroid",
        min: 1,
        max: 10,
        source: "corollary",
    },
];
