//! The moment functionals feeding every bound: the unit-variance triple
//! (ρ3, ρ4, ρ6) for the built-in laws and empirical samples, zero-mean
//! truncation windows, and the split functionals γ2/γ3 at threshold √β2/2.
//!
//! Run: `cargo run --release --example moment_functionals`

use senbe::moments::{
    analytic_moments, empirical_moments, gamma_functionals, truncated_moments, two_point_moments,
    zero_mean_truncation_find_a, DistributionSpec,
};

fn main() {
    println!("closed-form two-point moments (b, rho3, rho4, rho6):");
    for b in [1.0, 2.0, 10.0] {
        let r = two_point_moments(b).unwrap();
        println!("  {b:>4}: {:.6} {:.6} {:.6}", r.rho3, r.rho4, r.rho6);
    }

    println!("\nquadrature moments of the variance-normalized laws:");
    for spec in [
        DistributionSpec::student(10.0),
        DistributionSpec::pareto(8.0),
    ] {
        let r = analytic_moments(&spec).unwrap();
        println!(
            "  {:<14} rho3 = {:.6}, rho4 = {:.6}, rho6 = {:.6}",
            spec.describe(),
            r.rho3,
            r.rho4,
            r.rho6
        );
    }
    match analytic_moments(&DistributionSpec::student(5.0)) {
        Err(e) => println!("  student(d=5):  {e}"),
        Ok(_) => unreachable!("rho6 needs d > 6"),
    }

    println!("\nzero-mean truncation (left cut matching the right cut):");
    let pareto = DistributionSpec::pareto(3.0);
    let b = 10.0;
    let a = zero_mean_truncation_find_a(&pareto, b).unwrap();
    println!("  pareto(s=3), b = {b}: a = {a:.9}");
    let (rho, keep) = truncated_moments(&pareto, a, b).unwrap();
    println!(
        "  truncated moments: rho3 = {:.6}, rho4 = {:.6}, rho6 = {:.6}, keep = {:.6}",
        rho.rho3, rho.rho4, rho.rho6, keep
    );

    println!("\nempirical sample (studentized plug-in estimates):");
    let r = empirical_moments(&[-1.0, -1.0, -1.0, 3.0]).unwrap();
    println!(
        "  {{-1,-1,-1,3}}: rho3 = {:.6}, rho4 = {:.6}, rho6 = {:.6}",
        r.rho3, r.rho4, r.rho6
    );

    println!("\nsplit functionals at threshold sqrt(n)/2:");
    for (spec, n) in [
        (DistributionSpec::two_point(1.0), 9u64),
        (DistributionSpec::two_point(2.0), 1),
        (DistributionSpec::student(8.0), 100),
    ] {
        let g = gamma_functionals(&spec, n).unwrap();
        println!(
            "  {:<16} n = {n:>4}: gamma2 = {:.6e}, gamma3 = {:.6}",
            spec.describe(),
            g.gamma2,
            g.gamma3
        );
    }
}
