//! Minimize the weighted maximum (w3·A3) ∨ (w4·A4) ∨ (w6·A6) over the
//! seven proof parameters, starting from the reference rows plus 32
//! quasi-random points. The objective has many local minima, so the search
//! is a multi-start downhill simplex over a smooth reparametrization of the
//! box; it never regresses below the best seed.
//!
//! Run: `cargo run --release --example optimize_triple [w3 w4 w6]`

use senbe::constants::{default_seeds, optimize_constants, BE_NONIID, DEFAULT_BUDGET};

fn main() {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("weights are reals"))
        .collect();
    let weights = match args.as_slice() {
        [] => (1.0, 1.0, 1.0),
        [w3, w4, w6] => (*w3, *w4, *w6),
        _ => panic!("pass zero or three weights"),
    };
    let seeds = default_seeds();
    let res = optimize_constants(weights, BE_NONIID, &seeds, DEFAULT_BUDGET)
        .expect("valid configuration");
    println!(
        "weights ({}, {}, {}), be {}, budget {}",
        weights.0, weights.1, weights.2, BE_NONIID, DEFAULT_BUDGET
    );
    println!("objective  {:.10}", res.objective);
    println!(
        "triple     ({:.10}, {:.10}, {:.10})",
        res.triple.a3, res.triple.a4, res.triple.a6
    );
    let p = res.params;
    println!(
        "parameters alpha={:.6} eps4={:.6} eps3={:.6} eps2={:.6} kappa={:.6} theta3={:.6} theta4={:.6}",
        p.alpha, p.eps4, p.eps3, p.eps2, p.kappa, p.theta3, p.theta4
    );
    for (i, label) in ["A3", "A4", "A6"].iter().enumerate() {
        println!("{label} attained by case {}", res.triple.attaining_case(i));
    }
}
