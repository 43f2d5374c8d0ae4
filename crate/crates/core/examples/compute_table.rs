//! Tables of E_{Nn}^{(N,j)} for the classical cases, cross-checked against the
//! series-inversion route.
//!
//! cargo run --example compute_table

use congruential_euler::exact::format_rational;
use congruential_euler::sequence::oracle_table;
use congruential_euler::{Engine, SeqParams};

fn main() {
    let engine = Engine::new();
    let named = [
        ((2, 0), "Euler"),
        ((3, 0), "Lehmer"),
        ((4, 0), "generalized Euler, N=4"),
        ((4, 2), "N=4, j=2"),
        ((1, 1), "Bernoulli"),
    ];
    for ((n, j), name) in named {
        let params = SeqParams::of(n, j);
        let table = engine.compute_table(params, 8);
        assert_eq!(table, oracle_table(params, 8), "the two routes disagree");
        println!("{name} {params}");
        for (i, v) in table.values.iter().enumerate() {
            println!("  E_{:<3} = {}", n * i as u64, format_rational(v));
        }
    }

    // memoized: a longer table extends the one above instead of starting over
    let euler = engine.compute_table(SeqParams::of(2, 0), 30);
    println!("E_60 = {}", format_rational(euler.get(30)));
}
