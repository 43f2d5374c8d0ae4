//! The published scan rows and the reference cycles for `(6,3)`.

use rayon::prelude::*;
use serde::Serialize;

use super::{scan_conjecture, ScanOutcome, ScanParams};
use crate::error::Result;
use crate::sequence::Engine;

/// Another `(j, r)` to scan for a row whose labelling is ambiguous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Variant {
    pub j: u64,
    pub r: u32,
}

/// One published row: n0 in table units, period in absolute units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixRow {
    pub mp: u64,
    pub j: u64,
    pub p: u64,
    pub r: u32,
    pub n0: usize,
    pub period: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    pub variants: &'static [Variant],
}

impl AppendixRow {
    pub fn params(&self) -> ScanParams {
        self.params_for(Variant { j: self.j, r: self.r })
    }

    fn params_for(&self, v: Variant) -> ScanParams {
        ScanParams {
            p: self.p,
            m: self.mp / self.p,
            j: v.j,
            r: v.r,
        }
    }
}

const fn row(mp: u64, j: u64, p: u64, r: u32, n0: usize, period: u64) -> AppendixRow {
    AppendixRow {
        mp,
        j,
        p,
        r,
        n0,
        period,
        note: None,
        variants: &[],
    }
}

/// The published rows in their printed order.
pub fn appendix_b_rows() -> Vec<AppendixRow> {
    let mut rows = vec![
        row(6, 1, 3, 1, 1, 6),
        row(6, 1, 3, 2, 1, 18),
        row(6, 3, 3, 1, 1, 6),
        row(6, 3, 3, 2, 1, 18),
        row(6, 3, 3, 3, 2, 54),
        row(6, 3, 3, 4, 2, 162),
        row(6, 3, 3, 5, 3, 486),
        row(10, 4, 5, 1, 1, 20),
        row(10, 4, 5, 2, 1, 100),
        row(10, 7, 5, 3, 2, 500),
        row(20, 13, 5, 1, 0, 20),
        row(20, 13, 5, 2, 1, 100),
        row(20, 13, 5, 3, 2, 500),
        row(21, 8, 7, 1, 1, 42),
        row(21, 8, 7, 2, 1, 294),
        row(21, 16, 7, 1, 0, 21),
        row(21, 16, 7, 2, 1, 294),
        row(42, 9, 7, 1, 1, 21),
        row(42, 9, 7, 2, 1, 294),
        row(42, 9, 7, 2, 1, 2058),
    ];
    rows[9].note = Some("printed among the j=4 rows; j=4 at r=3 scanned as well");
    rows[9].variants = &[Variant { j: 4, r: 3 }];
    rows[19].note = Some("printed with r=2 twice; 2058 = 42*7^2, so r=3 scanned as well");
    rows[19].variants = &[Variant { j: 9, r: 3 }];
    rows
}

/// `(r, n0, cycle)` for `(mp, j) = (6, 3)`, p = 3.
pub fn appendix_b_table2() -> Vec<(u32, usize, Vec<u64>)> {
    vec![
        (1, 1, vec![1]),
        (2, 1, vec![7, 1, 4]),
        (3, 2, vec![10, 13, 16, 19, 22, 25, 1, 4, 7]),
        (
            4,
            2,
            vec![
                37, 13, 16, 46, 22, 25, 55, 31, 34, 64, 40, 43, 73, 49, 52, 1, 58, 61, 10, 67, 70, 19, 76, 79, 28, 4, 7,
            ],
        ),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixComparison {
    pub row: AppendixRow,
    pub observed: ScanOutcome,
    /// Scans of the alternative readings, in the order listed on the row.
    pub variant_outcomes: Vec<(Variant, ScanOutcome)>,
    /// The first reading (printed one first) whose `(n0, period)` matches.
    pub matched: Option<Variant>,
}

impl AppendixComparison {
    pub fn matches_as_printed(&self) -> bool {
        self.matched
            == Some(Variant {
                j: self.row.j,
                r: self.row.r,
            })
    }
}

fn agrees(row: &AppendixRow, outcome: &ScanOutcome) -> bool {
    outcome
        .periodic()
        .is_some_and(|res| res.n0 == row.n0 && res.period_index == row.period)
}

/// Scan every published row (and its alternative readings) with default
/// windows. Output keeps the printed row order.
pub fn compare_appendix_b(engine: &Engine) -> Result<Vec<AppendixComparison>> {
    appendix_b_rows()
        .into_par_iter()
        .map(|row| {
            let observed = scan_conjecture(engine, row.params(), None)?;
            let variant_outcomes = row
                .variants
                .iter()
                .map(|&v| Ok((v, scan_conjecture(engine, row.params_for(v), None)?)))
                .collect::<Result<Vec<_>>>()?;
            let printed = Variant { j: row.j, r: row.r };
            let matched = std::iter::once((printed, &observed))
                .chain(variant_outcomes.iter().map(|(v, o)| (*v, o)))
                .find(|(_, o)| agrees(&row, o))
                .map(|(v, _)| v);
            Ok(AppendixComparison {
                row,
                observed,
                variant_outcomes,
                matched,
            })
        })
        .collect()
}
