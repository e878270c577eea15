//! Tour of the scalar special functions: the normal tail Ψ without
//! cancellation, the Cantelli hybrid ψ(u,v) = (u∧v)/(v²+(u∧v)²), the tail
//! envelope Ψ*(x) (constant 0.17 below the knot 0.752, xΨ(x) above), the
//! improper Student-limit CDF Φₙ, and R(ε) = sup_x (Φ(x)−Φ((1−ε)x))/ε with
//! its closed-form maximizer.
//!
//! Run: `cargo run --release --example special_functions`

use senbe::specfun::{
    big_r, normal_cdf, normal_tail, phi_n, psi_cantelli, psi_star, student_cdf, x_of_t,
};

fn main() {
    println!("normal tail (no cancellation for large x):");
    for x in [1.0, 7.561, 20.0, 37.0] {
        println!("  Psi({x:>6}) = {:.9e}", normal_tail(x));
    }

    println!("\nCantelli hybrid:");
    for (u, v) in [(1.0, 1.0), (2.703, 0.3107), (0.7151, 4.455)] {
        println!("  psi({u}, {v}) = {:.9}", psi_cantelli(u, v).unwrap());
    }

    println!("\ntail envelope (knot at 0.752):");
    for x in [0.5, 0.752, 2.0, 7.561] {
        println!("  Psi*({x}) = {:.9e}", psi_star(x).unwrap());
    }

    println!("\nimproper limit CDF of the Student statistic (z = ±1 fixed):");
    for (z, n) in [(1.0, 10u64), (2.0, 2), (2.0, 1000)] {
        println!(
            "  Phi_n({z}, n={n}) = {:.9}   (Phi({z}) = {:.9})",
            phi_n(z, n).unwrap(),
            normal_cdf(z)
        );
    }

    println!("\nStudent CDF (regularized incomplete beta):");
    for (x, df) in [(1.0, 1.0), (2.0, 9.0), (2.0, 1e6)] {
        println!("  F_{{{df}}}({x}) = {:.9}", student_cdf(x, df).unwrap());
    }

    println!("\nnormal increment supremum R and its maximizer x_t:");
    for t in [0.123, 0.363, 0.5] {
        println!(
            "  t = {t}: x_t = {:.9}, R(t) = {:.9}",
            x_of_t(t).unwrap(),
            big_r(t).unwrap()
        );
    }
}
