//! Compute every bound family for one law and sample size: the two main
//! forms, the Shao comparator 10.2γ2 + 25γ3, and the Nagaev comparators.
//!
//! Run: `cargo run --release --example bound_families`

use senbe::bounds::{bound_iid, bound_noniid, nagaev_bounds, shao_bound};
use senbe::constants::{published_row, ConstantTriple};
use senbe::moments::{analytic_moments, gamma_functionals, DistributionSpec};

fn main() {
    let spec = DistributionSpec::student(10.0);
    let n = 1000u64;
    let p = published_row("t1").unwrap().published;
    let triple = ConstantTriple::bare(p[0], p[1], p[2]);

    let rho = analytic_moments(&spec).expect("moments finite for d = 10");
    println!(
        "law {}, n = {n}: rho3 = {:.6}, rho4 = {:.6}, rho6 = {:.6}\n",
        spec.describe(),
        rho.rho3,
        rho.rho4,
        rho.rho6
    );

    let m = rho.with_n(n).unwrap();
    println!("--- general-case form (triple t1) ---");
    print!("{}", bound_noniid(&m, &triple).unwrap().to_kv());
    println!("\n--- i.i.d. form (triple t1iid published values) ---");
    let p = published_row("t1iid").unwrap().published;
    let t_iid = ConstantTriple::bare(p[0], p[1], p[2]);
    print!("{}", bound_iid(&m, &t_iid).unwrap().to_kv());

    println!("\n--- Shao comparator ---");
    let g = gamma_functionals(&spec, n).unwrap();
    print!("{}", shao_bound(&g).to_kv());

    println!("\n--- Nagaev comparators ---");
    // E X^4 = 3(d-2)/(d-4) for the normalized Student law
    let d = 10.0;
    let ex4 = 3.0 * (d - 2.0) / (d - 4.0);
    let (main, crude) = nagaev_bounds(rho.rho3, ex4, rho.rho6 * rho.rho3, n);
    print!("{}", main.to_kv());
    println!();
    print!("{}", crude.to_kv());
}
