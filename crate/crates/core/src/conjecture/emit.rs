use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{sort_key, PeriodScanResult, ScanOutcome, ScanParams};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Tsv,
    Json,
}

const TSV_HEADER: &str = "mp\tj\tp\tm\tr\tn0\tperiod\tconjecture_period\tdivides_conjecture\tn_max\tcycle";

fn label(s: &ScanParams) -> String {
    format!("(mp,j)=({},{})", s.mp(), s.j)
}

fn join(cycle: &[u64]) -> String {
    cycle.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn text_row(out: &mut String, res: &PeriodScanResult) {
    let _ = writeln!(
        out,
        "{:<20} {:>3} {:>3} {:>4} {:>16}  cycle=[{}]",
        label(&res.params()),
        res.p,
        res.r,
        res.n0,
        res.period_index,
        join(&res.cycle)
    );
}

fn tsv_row(out: &mut String, res: &PeriodScanResult) {
    let _ = writeln!(
        out,
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        res.mp(),
        res.j,
        res.p,
        res.m,
        res.r,
        res.n0,
        res.period_index,
        res.conjecture_period,
        res.divides_conjecture,
        res.n_max,
        join(&res.cycle)
    );
}

fn header(format: Format) -> Option<String> {
    match format {
        Format::Text => Some(format!(
            "{:<20} {:>3} {:>3} {:>4} {:>16}  cycle",
            "Parameters", "p", "r", "n0", "Observed period"
        )),
        Format::Tsv => Some(TSV_HEADER.to_string()),
        Format::Json => None,
    }
}

/// Render scan results sorted by `(p, mp, j, r)`. Text and TSV always carry a
/// header line; JSON is one object per line.
pub fn emit_table(results: &[PeriodScanResult], format: Format) -> String {
    let mut rows: Vec<&PeriodScanResult> = results.iter().collect();
    rows.sort_by_key(|res| sort_key(&res.params()));
    let mut out = String::new();
    if let Some(h) = header(format) {
        out.push_str(&h);
        out.push('\n');
    }
    for res in rows {
        match format {
            Format::Text => text_row(&mut out, res),
            Format::Tsv => tsv_row(&mut out, res),
            Format::Json => {
                out.push_str(&serde_json::to_string(res).expect("result serializes"));
                out.push('\n');
            }
        }
    }
    out
}

/// Like [`emit_table`] but also lists tuples without a detected period.
pub fn emit_outcomes(outcomes: &[ScanOutcome], format: Format) -> String {
    let mut rows: Vec<&ScanOutcome> = outcomes.iter().collect();
    rows.sort_by_key(|o| sort_key(&o.params()));
    let mut out = String::new();
    if let Some(h) = header(format) {
        out.push_str(&h);
        out.push('\n');
    }
    for o in rows {
        if format == Format::Json {
            out.push_str(&serde_json::to_string(o).expect("outcome serializes"));
            out.push('\n');
            continue;
        }
        let note = match o {
            ScanOutcome::Periodic(res) => {
                if format == Format::Text {
                    text_row(&mut out, res);
                } else {
                    tsv_row(&mut out, res);
                }
                continue;
            }
            ScanOutcome::NoPeriod { n_max, .. } => format!("no period up to n={n_max}"),
            ScanOutcome::Inconclusive { n_max, .. } => format!("inconclusive up to n={n_max}"),
            ScanOutcome::IntegralityFailed { index, value, .. } => {
                format!("not p-integral at n={index}: {value}")
            }
        };
        let s = o.params();
        if format == Format::Text {
            let _ = writeln!(
                out,
                "{:<20} {:>3} {:>3} {:>4} {:>16}  {note}",
                label(&s),
                s.p,
                s.r,
                "-",
                "-"
            );
        } else {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t-\t-\t-\t-\t-\t{note}",
                s.mp(),
                s.j,
                s.p,
                s.m,
                s.r
            );
        }
    }
    out
}
