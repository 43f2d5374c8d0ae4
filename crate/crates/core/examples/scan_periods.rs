//! Eventual periods of E_{mpn}^{(mp,j)} mod p^r, for one parameter set, a small
//! grid, and the published table.
//!
//! cargo run --release --example scan_periods

use congruential_euler::conjecture::{
    compare_appendix_b, emit_outcomes, residues, scan_conjecture, scan_grid, Format, ScanParams,
};
use congruential_euler::Engine;

fn main() -> congruential_euler::Result<()> {
    let engine = Engine::new();

    let params = ScanParams::new(3, 2, 3, 2)?;
    let res = residues(&engine, params, 12).expect("p-integral");
    println!("E_6n^(6,3) mod 9, n = 0..12: {res:?}");
    let outcome = scan_conjecture(&engine, params, None)?;
    print!("{}", emit_outcomes(&[outcome], Format::Text));

    let grid: Vec<ScanParams> = [(5, 1, 2, 1), (5, 2, 3, 1), (5, 4, 7, 1), (7, 3, 8, 1), (7, 6, 11, 1)]
        .into_iter()
        .map(|(p, m, j, r)| ScanParams::new(p, m, j, r))
        .collect::<Result<_, _>>()?;
    let outcomes = scan_grid(&engine, &grid, None)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    print!("{}", emit_outcomes(&outcomes, Format::Tsv));

    println!();
    for c in compare_appendix_b(&engine)? {
        let row = &c.row;
        let seen = c
            .observed
            .periodic()
            .map(|r| format!("n0={} period={}", r.n0, r.period_index))
            .unwrap_or_else(|| "no period".into());
        let verdict = match c.matched {
            Some(_) if c.matches_as_printed() => "matches".to_string(),
            Some(v) => format!("matches at j={} r={}", v.j, v.r),
            None => "differs".to_string(),
        };
        println!(
            "({},{}) p={} r={}: published n0={} period={}, observed {seen}: {verdict}",
            row.mp, row.j, row.p, row.r, row.n0, row.period
        );
    }
    Ok(())
}
