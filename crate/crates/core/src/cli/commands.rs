use std::path::Path;

use rayon::prelude::*;
use serde_json::json;

use super::args::{CacheCommand, ComputeArgs, IdentitiesCommand, ScanArgs, VerifyCommand};
use super::{Command, Outcome, Session};
use crate::analytic::{
    check_bernoulli_identity, check_special_values, check_zeta_identity, count_zeros_in_disk, expected_zero_count,
    grid_zero_search, lattice_distance, ratio_radius, BernoulliIdentityId, Family, LocatedZero, ZeroRecord,
    ZetaFormulaId,
};
use crate::congruence::{
    check_gessel, check_komatsu_liu, check_main_theorem, check_prime_power, check_special_40, check_special_60,
    verify_lemma_series, verify_lemma_xm, CongruenceReport, Status,
};
use crate::conjecture::{
    appendix_b_rows, appendix_b_table2, compare_appendix_b, emit_outcomes, scan_conjecture, scan_grid,
    AppendixComparison, Format, ScanOutcome, ScanParams,
};
use crate::error::{Error, Result};
use crate::exact::format_rational;
use crate::sequence::{cache_file_params, cache_load, SeqParams};

pub(super) fn dispatch(command: &Command, s: &Session) -> Result<Outcome> {
    match command {
        Command::Compute(args) => compute(args, s),
        Command::Verify(cmd) => verify(cmd, s),
        Command::Scan(args) => scan(args, s),
        Command::Identities(cmd) => identities(cmd, s),
        Command::Cache(cmd) => cache(cmd, s),
    }
}

fn line(out: &mut String, text: impl AsRef<str>) {
    out.push_str(text.as_ref());
    out.push('\n');
}

fn json_line(out: &mut String, value: &impl serde::Serialize) {
    line(out, serde_json::to_string(value).expect("value serializes"));
}

fn compute(args: &ComputeArgs, s: &Session) -> Result<Outcome> {
    let params = SeqParams::new(args.step, args.j)?;
    let n_max = args.n_max.unwrap_or(s.config.default_n_max);
    s.load(&[params]);
    let table = s.engine.compute_table(params, n_max);
    let mut out = String::new();
    if s.format() == Format::Tsv {
        line(&mut out, "n\tvalue");
    }
    for (n, v) in table.values.iter().enumerate() {
        let v = format_rational(v);
        match s.format() {
            Format::Text => line(&mut out, format!("{n} {v}")),
            Format::Tsv => line(&mut out, format!("{n}\t{v}")),
            Format::Json => json_line(&mut out, &json!({"N": params.step, "j": params.j, "n": n, "value": v})),
        }
    }
    Ok(Outcome::new(out, true))
}

fn render_report(report: &CongruenceReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => line(&mut out, report.to_string()),
        Format::Json => line(&mut out, report.to_json()),
        Format::Tsv => {
            line(
                &mut out,
                "theorem_id\tparams\tinstances_checked\tstatus\tfailure_count\tfirst_failure",
            );
            let first = report
                .failures
                .first()
                .map(|f| format!("{}: lhs={} rhs={}", f.params, f.lhs, f.rhs))
                .unwrap_or_default();
            line(
                &mut out,
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    report.theorem_id,
                    report.params,
                    report.instances_checked,
                    report.status,
                    report.failure_count,
                    first
                ),
            );
        }
    }
    out
}

fn pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .ok_or_else(|| Error::InvalidParams(format!("{p}^{e} overflows")))
}

fn verify(cmd: &VerifyCommand, s: &Session) -> Result<Outcome> {
    let e = &s.engine;
    let report = match cmd {
        VerifyCommand::Main { p, j, r, n } => {
            s.load(&[SeqParams::new(*p, *j)?]);
            check_main_theorem(e, *p, *j, *r, n.clone())?
        }
        VerifyCommand::KomatsuLiu { k, pairs, n } => {
            let mut pairs = pairs.clone();
            if let Some(range) = n {
                let shift = 2 * pow(3, k.saturating_sub(1))? as usize;
                pairs.extend(range.clone().map(|i| (i, i + shift)));
            }
            s.load(&[SeqParams::of(3, 0)]);
            check_komatsu_liu(e, *k, &pairs)?
        }
        VerifyCommand::Gessel { p, m, k, n } => {
            if *k > 0 && *m > 0 {
                let lower = pow(*p, k - 1)?.saturating_mul(*m);
                s.load(&[SeqParams::new(lower, 0)?, SeqParams::new(lower.saturating_mul(*p), 0)?]);
            }
            check_gessel(e, *p, *m, *k, n.clone())?
        }
        VerifyCommand::PrimePower { p, k, r, n } => {
            if *k > 0 {
                s.load(&[SeqParams::new(pow(*p, *k)?, 0)?]);
            }
            check_prime_power(e, *p, *k, *r, n.clone())?
        }
        VerifyCommand::Special40 { r, n } => {
            s.load(&[SeqParams::of(4, 0)]);
            check_special_40(e, *r, n.clone())?
        }
        VerifyCommand::Special60 { r, n_max } => {
            s.load(&[SeqParams::of(6, 0)]);
            check_special_60(e, *r, *n_max)?.1
        }
        VerifyCommand::LemmaXm { p, m, order } => verify_lemma_xm(*p, *m, *order)?,
        VerifyCommand::LemmaSeries { n_max } => verify_lemma_series(*n_max)?,
    };
    Ok(Outcome::new(
        render_report(&report, s.format()),
        report.status == Status::Pass,
    ))
}

fn scan_ok(o: &ScanOutcome) -> bool {
    o.periodic().is_some_and(|r| r.divides_conjecture)
}

fn scan(args: &ScanArgs, s: &Session) -> Result<Outcome> {
    if args.appendix_b {
        return appendix(s);
    }
    let grid = match &args.grid {
        Some(path) => read_grid(path)?,
        None => {
            let (p, m, j, r) = (args.p, args.m, args.j, args.r);
            vec![ScanParams::new(p.unwrap(), m.unwrap(), j.unwrap(), r.unwrap())?]
        }
    };
    let seqs: Vec<SeqParams> = grid.iter().map(ScanParams::seq).collect();
    s.load(&seqs);
    if grid.len() > 1 {
        eprintln!("scanning {} parameter tuples", grid.len());
    }
    let outcomes = if grid.len() == 1 {
        vec![scan_conjecture(&s.engine, grid[0], args.n_max)?]
    } else {
        scan_grid(&s.engine, &grid, args.n_max)
            .into_iter()
            .collect::<Result<Vec<_>>>()?
    };
    let passed = outcomes.iter().all(scan_ok);
    Ok(Outcome::new(emit_outcomes(&outcomes, s.format()), passed))
}

/// Whitespace-separated `p m j r` per line; `#` starts a comment.
fn read_grid(path: &Path) -> Result<Vec<ScanParams>> {
    let text = std::fs::read_to_string(path)?;
    let mut grid = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let bad = || Error::InvalidParams(format!("{}:{}: expected `p m j r`", path.display(), i + 1));
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(bad());
        }
        let num = |k: usize| fields[k].parse::<u64>().map_err(|_| bad());
        let r = u32::try_from(num(3)?).map_err(|_| bad())?;
        grid.push(
            ScanParams::new(num(0)?, num(1)?, num(2)?, r)
                .map_err(|e| Error::InvalidParams(format!("{}:{}: {e}", path.display(), i + 1)))?,
        );
    }
    if grid.is_empty() {
        return Err(Error::InvalidParams(format!("{} lists no parameters", path.display())));
    }
    Ok(grid)
}

fn match_label(c: &AppendixComparison) -> String {
    match c.matched {
        None => "no".into(),
        Some(_) if c.matches_as_printed() => "yes".into(),
        Some(v) => format!("at j={} r={}", v.j, v.r),
    }
}

fn observed(o: &ScanOutcome) -> (String, String) {
    match o {
        ScanOutcome::Periodic(r) => (r.n0.to_string(), r.period_index.to_string()),
        ScanOutcome::NoPeriod { .. } => ("-".into(), "none".into()),
        ScanOutcome::Inconclusive { .. } => ("-".into(), "inconclusive".into()),
        ScanOutcome::IntegralityFailed { index, .. } => ("-".into(), format!("non-integral@{index}")),
    }
}

fn appendix(s: &Session) -> Result<Outcome> {
    let rows = appendix_b_rows();
    let seqs: Vec<SeqParams> = rows
        .iter()
        .flat_map(|r| std::iter::once(r.params().seq()).chain(r.variants.iter().map(move |v| SeqParams::of(r.mp, v.j))))
        .collect();
    s.load(&seqs);
    eprintln!("scanning {} published rows", rows.len());
    let comparisons = compare_appendix_b(&s.engine)?;

    // (r, published n0, published cycle, observed (n0, cycle))
    type CycleRow = (u32, usize, Vec<u64>, Option<(usize, Vec<u64>)>);
    let cycles: Vec<CycleRow> = appendix_b_table2()
        .into_iter()
        .map(|(r, n0, cycle)| {
            let got = comparisons
                .iter()
                .find(|c| c.row.mp == 6 && c.row.j == 3 && c.row.r == r)
                .and_then(|c| c.observed.periodic())
                .map(|res| (res.n0, res.cycle.clone()));
            (r, n0, cycle, got)
        })
        .collect();

    let mut passed = comparisons.iter().all(|c| c.matched.is_some());
    let mut out = String::new();
    match s.format() {
        Format::Text => {
            line(
                &mut out,
                format!(
                    "{:<20} {:>3} {:>3} {:>4} {:>16} {:>13} {:>17}  match",
                    "Parameters", "p", "r", "n0", "Observed period", "published n0", "published period"
                ),
            );
            for c in &comparisons {
                let (n0, period) = observed(&c.observed);
                line(
                    &mut out,
                    format!(
                        "{:<20} {:>3} {:>3} {:>4} {:>16} {:>13} {:>17}  {}",
                        format!("(mp,j)=({},{})", c.row.mp, c.row.j),
                        c.row.p,
                        c.row.r,
                        n0,
                        period,
                        c.row.n0,
                        c.row.period,
                        match_label(c)
                    ),
                );
                if let Some(note) = c.row.note {
                    line(&mut out, format!("    note: {note}"));
                }
                for (v, o) in &c.variant_outcomes {
                    let (n0, period) = observed(o);
                    line(&mut out, format!("    j={} r={}: n0={n0} period={period}", v.j, v.r));
                }
            }
            line(&mut out, "");
            line(&mut out, "Periodic part of E_{6n}^{(6,3)} mod 3^r");
            line(&mut out, "r   n0  match  cycle");
        }
        Format::Tsv => {
            line(
                &mut out,
                "kind\tmp\tj\tp\tr\tn0\tperiod\tpublished_n0\tpublished_period\tmatch\tcycle",
            );
            for c in &comparisons {
                let (n0, period) = observed(&c.observed);
                line(
                    &mut out,
                    format!(
                        "table1\t{}\t{}\t{}\t{}\t{n0}\t{period}\t{}\t{}\t{}\t",
                        c.row.mp,
                        c.row.j,
                        c.row.p,
                        c.row.r,
                        c.row.n0,
                        c.row.period,
                        match_label(c)
                    ),
                );
                for (v, o) in &c.variant_outcomes {
                    let (n0, period) = observed(o);
                    line(
                        &mut out,
                        format!(
                            "variant\t{}\t{}\t{}\t{}\t{n0}\t{period}\t\t\t\t",
                            c.row.mp, v.j, c.row.p, v.r
                        ),
                    );
                }
            }
        }
        Format::Json => {
            for c in &comparisons {
                let mut v = serde_json::to_value(c).expect("comparison serializes");
                v["kind"] = json!("table1");
                v["match"] = json!(match_label(c));
                json_line(&mut out, &v);
            }
        }
    }
    for (r, n0, cycle, got) in &cycles {
        let ok = got.as_ref().is_some_and(|(g0, gc)| g0 == n0 && gc == cycle);
        passed &= ok;
        let (g0, gc) = got.clone().unwrap_or((usize::MAX, Vec::new()));
        let joined = gc.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match s.format() {
            Format::Text => line(
                &mut out,
                format!(
                    "{r:<3} {:>2}  {:<5}  cycle=[{joined}]",
                    if got.is_some() { g0.to_string() } else { "-".into() },
                    if ok { "yes" } else { "no" }
                ),
            ),
            Format::Tsv => line(
                &mut out,
                format!(
                    "table2\t6\t3\t3\t{r}\t{g0}\t\t{n0}\t\t{}\t{joined}",
                    if ok { "yes" } else { "no" }
                ),
            ),
            Format::Json => json_line(
                &mut out,
                &json!({"kind": "table2", "r": r, "n0": got.as_ref().map(|g| g.0), "cycle": gc,
                        "published_n0": n0, "published_cycle": cycle, "match": ok}),
            ),
        }
    }
    Ok(Outcome::new(out, passed))
}

fn families(family: Option<Family>) -> Vec<Family> {
    family.map_or_else(|| Family::ALL.to_vec(), |f| vec![f])
}

fn identities(cmd: &IdentitiesCommand, s: &Session) -> Result<Outcome> {
    let mut out = String::new();
    let format = s.format();
    let passed = match cmd {
        IdentitiesCommand::Zeta { n_max, id } => {
            if *n_max == 0 {
                return Err(Error::InvalidParams("--n-max must be at least 1".into()));
            }
            s.load(&[
                SeqParams::of(4, 0),
                SeqParams::of(4, 2),
                SeqParams::of(6, 3),
                SeqParams::of(1, 1),
            ]);
            let ids: Vec<ZetaFormulaId> = id.map_or_else(|| ZetaFormulaId::ALL.to_vec(), |i| vec![i]);
            if format == Format::Tsv {
                line(
                    &mut out,
                    "formula_id\tn\tdegree\tlhs_coefficient\trhs_coefficient\tequal",
                );
            }
            let mut all = true;
            for id in ids {
                for n in 1..=*n_max {
                    let c = check_zeta_identity(&s.engine, id, n)?;
                    all &= c.equal;
                    let (l, r) = (format_rational(&c.lhs_coefficient), format_rational(&c.rhs_coefficient));
                    match format {
                        Format::Text => line(
                            &mut out,
                            format!(
                                "{id} n={n} π^{}: lhs={l} rhs={r} {}",
                                c.degree,
                                if c.equal { "equal" } else { "DIFFER" }
                            ),
                        ),
                        Format::Tsv => line(&mut out, format!("{id}\t{n}\t{}\t{l}\t{r}\t{}", c.degree, c.equal)),
                        Format::Json => json_line(&mut out, &c),
                    }
                }
            }
            all
        }
        IdentitiesCommand::Bernoulli { n_max, id } => {
            s.load(&[
                SeqParams::of(4, 0),
                SeqParams::of(4, 2),
                SeqParams::of(6, 3),
                SeqParams::of(1, 1),
            ]);
            let ids: Vec<BernoulliIdentityId> = id.map_or_else(|| BernoulliIdentityId::ALL.to_vec(), |i| vec![i]);
            if format == Format::Tsv {
                line(&mut out, "identity_id\tn\tindex\tlhs\trhs\tequal");
            }
            let mut all = true;
            for id in ids {
                for n in id.min_n()..=*n_max {
                    let c = check_bernoulli_identity(&s.engine, id, n)?;
                    all &= c.equal;
                    let (l, r) = (format_rational(&c.lhs), format_rational(&c.rhs));
                    match format {
                        Format::Text => line(
                            &mut out,
                            format!(
                                "{id} n={n} B_{}: lhs={l} rhs={r} {}",
                                c.index,
                                if c.equal { "equal" } else { "DIFFER" }
                            ),
                        ),
                        Format::Tsv => line(&mut out, format!("{id}\t{n}\t{}\t{l}\t{r}\t{}", c.index, c.equal)),
                        Format::Json => json_line(&mut out, &c),
                    }
                }
            }
            all
        }
        IdentitiesCommand::Zeros {
            family,
            count,
            search,
            radius,
        } => {
            if format == Format::Tsv {
                line(&mut out, "family\tk\tl\tre\tim\tresidual\tdistance");
            }
            let mut all = true;
            for f in families(*family) {
                let (n, _) = f.params();
                let picks: Vec<(u64, u64)> = (1..).flat_map(|k| (0..n).map(move |l| (k, l))).take(*count).collect();
                let records = picks
                    .par_iter()
                    .map(|&(k, l)| ZeroRecord::polish(f, k, l))
                    .collect::<Result<Vec<_>>>()?;
                for rec in &records {
                    let ok = rec.residual < 1e-10 && rec.distance < 1e-9;
                    all &= ok;
                    match format {
                        Format::Text => line(
                            &mut out,
                            format!(
                                "({f}) k={} l={}: z={:+.15}{:+.15}i residual={:.3e} distance={:.3e} {}",
                                rec.k,
                                rec.l,
                                rec.zero[0],
                                rec.zero[1],
                                rec.residual,
                                rec.distance,
                                if ok { "ok" } else { "FAIL" }
                            ),
                        ),
                        Format::Tsv => line(
                            &mut out,
                            format!(
                                "{f}\t{}\t{}\t{:.17e}\t{:.17e}\t{:.3e}\t{:.3e}",
                                rec.k, rec.l, rec.zero[0], rec.zero[1], rec.residual, rec.distance
                            ),
                        ),
                        Format::Json => json_line(&mut out, rec),
                    }
                }
                if *search {
                    all &= zero_search(&mut out, f, *radius, format)?;
                }
            }
            all
        }
        IdentitiesCommand::SpecialValues { family, k_max } => {
            if *k_max == 0 {
                return Err(Error::InvalidParams("--k-max must be at least 1".into()));
            }
            if format == Format::Tsv {
                line(&mut out, "family\tk\tl\trelative_error\tok");
            }
            let mut all = true;
            for f in families(*family) {
                let (n, _) = f.params();
                for k in 1..=*k_max {
                    for l in 0..n {
                        let c = check_special_values(f, k, l)?;
                        all &= c.ok;
                        match format {
                            Format::Text => line(
                                &mut out,
                                format!(
                                    "({f}) k={k} l={l}: lhs={:+.9e}{:+.9e}i rhs={:+.9e}{:+.9e}i rel.err={:.2e} {}",
                                    c.lhs[0],
                                    c.lhs[1],
                                    c.rhs[0],
                                    c.rhs[1],
                                    c.relative_error,
                                    if c.ok { "ok" } else { "FAIL" }
                                ),
                            ),
                            Format::Tsv => line(&mut out, format!("{f}\t{k}\t{l}\t{:.3e}\t{}", c.relative_error, c.ok)),
                            Format::Json => json_line(&mut out, &c),
                        }
                    }
                }
            }
            all
        }
        IdentitiesCommand::Radius {
            step,
            j,
            n_max,
            expect,
            tolerance,
        } => {
            let params = SeqParams::new(*step, *j)?;
            s.load(&[params]);
            let value = ratio_radius(&s.engine, params, *n_max)?;
            let ok = expect.is_none_or(|e| ((value - e) / e).abs() <= *tolerance);
            match format {
                Format::Text => line(&mut out, format!("{params} n_max={n_max}: radius/π ≈ {value}")),
                Format::Tsv => {
                    line(&mut out, "N\tj\tn_max\tradius_over_pi");
                    line(&mut out, format!("{step}\t{j}\t{n_max}\t{value}"));
                }
                Format::Json => json_line(
                    &mut out,
                    &json!({"N": step, "j": j, "n_max": n_max, "radius_over_pi": value, "expected": expect, "ok": ok}),
                ),
            }
            ok
        }
    };
    Ok(Outcome::new(out, passed))
}

fn zero_search(out: &mut String, f: Family, radius: f64, format: Format) -> Result<bool> {
    if !(radius > 0.0 && radius <= 20.0) {
        return Err(Error::InvalidParams("--radius must lie in (0, 20]".into()));
    }
    let (n, j) = f.params();
    let r = radius * std::f64::consts::PI;
    let found = grid_zero_search(n, j, r, 0.5);
    let (origin, rest): (Vec<&LocatedZero>, Vec<&LocatedZero>) = found.iter().partition(|z| z.trivial);
    let worst = rest.iter().map(|z| lattice_distance(f, z.z())).fold(0.0, f64::max);
    let winding = count_zeros_in_disk(n, j, r)?;
    let expected = expected_zero_count(f, r);
    let origin_ok = origin.is_empty() || f.origin_multiplicity() > 0;
    let ok = worst < 1e-6 && origin_ok && winding == expected;
    match format {
        Format::Text => line(
            out,
            format!(
                "({f}) |z| <= {radius}π: {} nontrivial zeros found, worst lattice distance {worst:.2e}, origin {}, winding count {winding} (closed form {expected}) {}",
                rest.len(),
                if origin.is_empty() { "not hit" } else { "hit" },
                if ok { "ok" } else { "FAIL" }
            ),
        ),
        Format::Tsv => line(
            out,
            format!("{f}\tsearch\t{radius}\t{}\t{worst:.3e}\t{winding}\t{expected}", rest.len()),
        ),
        Format::Json => json_line(
            out,
            &json!({"family": f.to_string(), "radius_over_pi": radius, "nontrivial_found": rest.len(),
                    "worst_lattice_distance": worst, "origin_hit": !origin.is_empty(),
                    "winding_count": winding, "expected_count": expected, "ok": ok}),
        ),
    }
    Ok(ok)
}

fn cache(cmd: &CacheCommand, s: &Session) -> Result<Outcome> {
    let dir = &s.config.cache_dir;
    let mut entries: Vec<(SeqParams, std::path::PathBuf)> = Vec::new();
    if dir.exists() {
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
            if let Some(p) = cache_file_params(name) {
                entries.push((p, path));
            }
        }
    }
    entries.sort();
    let mut out = String::new();
    match cmd {
        CacheCommand::Inspect => {
            if s.format() == Format::Tsv {
                line(&mut out, "N\tj\tentries\tstatus");
            }
            for (p, path) in &entries {
                let (len, status) = match cache_load(*p, path, None) {
                    Ok(t) => (t.values.len(), "ok".to_string()),
                    Err(e) => (0, e.to_string()),
                };
                match s.format() {
                    Format::Text => line(&mut out, format!("N={} j={} entries={len} {status}", p.step, p.j)),
                    Format::Tsv => line(&mut out, format!("{}\t{}\t{len}\t{status}", p.step, p.j)),
                    Format::Json => json_line(
                        &mut out,
                        &json!({"N": p.step, "j": p.j, "entries": len, "status": status}),
                    ),
                }
            }
        }
        CacheCommand::Clear => {
            for (_, path) in &entries {
                std::fs::remove_file(path)?;
            }
            match s.format() {
                Format::Json => json_line(&mut out, &json!({"removed": entries.len()})),
                _ => line(&mut out, format!("removed {} cached tables", entries.len())),
            }
        }
    }
    Ok(Outcome::new(out, true))
}
