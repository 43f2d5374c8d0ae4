//! Zeros of H_{N,j} for the three lattice families: Newton-polished closed
//! forms, a grid search, and a winding-number count.
//!
//! cargo run --release --example zeros

use std::f64::consts::PI;

use congruential_euler::analytic::{
    count_zeros_in_disk, expected_zero_count, grid_zero_search, lattice_distance, Family, LocatedZero, ZeroRecord,
};

fn main() -> congruential_euler::Result<()> {
    let radius = 5.0 * PI;
    for family in Family::ALL {
        let (n, j) = family.params();
        println!("H_{{{n},{j}}}");
        for l in 0..3 {
            let rec = ZeroRecord::polish(family, 1, l)?;
            println!(
                "  k=1 l={l}: z = {:+.12} {:+.12}i  |H| = {:.2e}  off lattice by {:.2e}",
                rec.zero[0], rec.zero[1], rec.residual, rec.distance
            );
        }
        let found = grid_zero_search(n, j, radius, 0.5);
        let (origin, rest): (Vec<&LocatedZero>, Vec<_>) = found.iter().partition(|z| z.trivial);
        let worst = rest.iter().map(|z| lattice_distance(family, z.z())).fold(0.0, f64::max);
        let count = count_zeros_in_disk(n, j, radius)?;
        println!(
            "  |z| <= 5π: {} nontrivial zeros by grid search (worst lattice distance {worst:.1e}){}",
            rest.len(),
            if origin.is_empty() { "" } else { " plus the origin" }
        );
        println!(
            "  winding number {count}, closed form predicts {}",
            expected_zero_count(family, radius)
        );
    }
    Ok(())
}
