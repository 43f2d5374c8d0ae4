//! Radius of convergence of the EGF for (N, j), measured in units of pi, from
//! successive coefficient ratios.
//!
//! cargo run --release --example radius

use congruential_euler::analytic::ratio_radius;
use congruential_euler::{Engine, SeqParams};

fn main() -> congruential_euler::Result<()> {
    let engine = Engine::new();
    for (n, j) in [(2, 0), (3, 0), (4, 0), (4, 2), (6, 3), (10, 5)] {
        let params = SeqParams::of(n, j);
        let estimates: Vec<String> = [10, 20, 40]
            .into_iter()
            .map(|n_max| ratio_radius(&engine, params, n_max).map(|r| format!("{r:.6}")))
            .collect::<Result<_, _>>()?;
        println!("{params}: radius / pi at n_max 10, 20, 40 = {}", estimates.join(", "));
    }
    Ok(())
}
