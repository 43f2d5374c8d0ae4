//! Even zeta and lambda values, and Bernoulli numbers, out of the (4,0), (4,2)
//! and (6,3) sequences, with every identity checked as an exact rational.
//!
//! cargo run --example zeta_identities

use congruential_euler::analytic::{
    bernoulli, check_bernoulli_identity, check_zeta_identity, formula_value, zeta_even, BernoulliIdentityId,
    ZetaFormulaId,
};
use congruential_euler::exact::format_rational;
use congruential_euler::Engine;

fn main() -> congruential_euler::Result<()> {
    let engine = Engine::new();

    for k in (2..=12).step_by(2) {
        println!("zeta({k}) = {}", zeta_even(&engine, k)?);
    }

    for &id in ZetaFormulaId::ALL {
        let n = 2;
        let check = check_zeta_identity(&engine, id, n)?;
        println!(
            "{id:<20} n={n}: {}  {}",
            formula_value(&engine, id, n)?,
            if check.equal { "exact" } else { "MISMATCH" }
        );
    }

    for &id in BernoulliIdentityId::ALL {
        let ok = (id.min_n()..=6).all(|n| check_bernoulli_identity(&engine, id, n).is_ok_and(|c| c.equal));
        println!(
            "{id:<14} n = {}..6: {}",
            id.min_n(),
            if ok { "exact" } else { "MISMATCH" }
        );
    }
    println!("B_12 = {}", format_rational(&bernoulli(&engine, 12)));
    Ok(())
}
