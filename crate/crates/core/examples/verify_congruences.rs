//! The anti-period congruence and its relatives, checked over finite windows.
//!
//! cargo run --example verify_congruences

use congruential_euler::congruence::{
    anti_period_valuation, check_gessel, check_komatsu_liu, check_main_theorem, check_prime_power, check_special_40,
    check_special_60, verify_lemma_series, verify_lemma_xm,
};
use congruential_euler::Engine;

fn main() -> congruential_euler::Result<()> {
    let engine = Engine::new();

    for p in [3, 5, 7] {
        for j in 0..p {
            println!("{}", check_main_theorem(&engine, p, j, 2, 0..=20)?);
        }
    }

    // how much room the bound leaves: v_3(E_{3n} + E_{3n+3}) for j = 0
    let vals: Vec<String> = (0..=12)
        .map(|n| match anti_period_valuation(&engine, 3, 0, 1, n) {
            Ok(Some(v)) => v.to_string(),
            Ok(None) => "inf".into(),
            Err(e) => e.to_string(),
        })
        .collect();
    println!("v_3(W_3n + W_3n+3), n = 0..12: {}", vals.join(" "));

    println!("{}", check_komatsu_liu(&engine, 2, &[(0, 6), (1, 7), (2, 8), (3, 21)])?);
    println!("{}", check_gessel(&engine, 2, 1, 2, 0..=10)?);
    println!("{}", check_prime_power(&engine, 3, 2, 3, 0..=10)?);
    println!("{}", check_special_40(&engine, 3, 0..=10)?);
    let (n0, report) = check_special_60(&engine, 2, 30)?;
    println!("{report}");
    if let Some(n0) = n0 {
        println!("  stable from n0 = {n0}");
    }
    println!("{}", verify_lemma_xm(3, 2, 60)?);
    println!("{}", verify_lemma_series(20)?);
    Ok(())
}
