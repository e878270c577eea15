//! Zero-mean truncation of heavy-tailed inputs: minimize the truncated
//! bounds over the cut point b.
//!
//! For the Student law with d = 3, the untruncated bound is infinite (the
//! fourth moment diverges) while every truncated bound is finite; the
//! minimizer trades the failure mass 1 − keep_prob^n against the truncated
//! moments. For light tails (d = 20) truncation does not help and the
//! minimizer settles at b = ∞.
//!
//! Run: `cargo run --release --example truncation_minimization`

use senbe::bounds::{minimize_truncated_bound, TruncFamily};
use senbe::constants::{published_row, ConstantTriple};
use senbe::moments::DistributionSpec;

fn main() {
    let p = published_row("t2").unwrap().published;
    let triple = ConstantTriple::bare(p[0], p[1], p[2]);

    for (spec, n) in [
        (DistributionSpec::student(3.0), 1000u64),
        (DistributionSpec::student(20.0), 10_000),
        (DistributionSpec::pareto(3.0), 10),
        (DistributionSpec::pareto(8.0), 10_000),
    ] {
        println!("=== {} with n = {n} ===", spec.describe());
        match minimize_truncated_bound(&spec, n, Some(&triple), TruncFamily::Thm) {
            Ok((b_star, report)) => {
                println!("main family: b* = {b_star:.6}");
                print!("{}", report.to_kv());
            }
            Err(e) => println!("main family: {e}"),
        }
        match minimize_truncated_bound(&spec, n, None, TruncFamily::Shao) {
            Ok((b_star, report)) => {
                println!("shao family: b* = {b_star:.6}");
                print!("{}", report.to_kv());
            }
            Err(e) => println!("shao family: {e}"),
        }
        println!();
    }
}
