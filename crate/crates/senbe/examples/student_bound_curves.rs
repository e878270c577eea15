//! Bound curves for the Student law: the Shao comparator, its minimized
//! truncation, the main bound (triple t2) and its minimized truncation, for
//! d in [2.5, 20] and n in {10, 100, 1000, 10000}. Emits CSV (`inf` marks a
//! divergent untruncated bound; truncation keeps everything finite).
//!
//! Run: `cargo run --release --example student_bound_curves > student.csv`
//! (a finer d-grid, e.g. 64 points, matches the full picture but takes a
//! few minutes; the CLI `compare` subcommand exposes the same dataset)

use senbe::bounds::{bound_noniid, minimize_truncated_bound, shao_bound, TruncFamily};
use senbe::constants::{published_row, ConstantTriple};
use senbe::fmt_sig;
use senbe::moments::{gamma_functionals, DistributionSpec};

fn main() {
    let p = published_row("t2").unwrap().published;
    let triple = ConstantTriple::bare(p[0], p[1], p[2]);
    println!("dist,param,n,shao,shao_trunc_min,thm,thm_trunc_min");
    let points = 15;
    for i in 0..points {
        let d = 2.5 + (20.0 - 2.5) * i as f64 / (points - 1) as f64;
        let spec = DistributionSpec::student(d);
        for n in [10u64, 100, 1000, 10_000] {
            let shao = gamma_functionals(&spec, n)
                .map(|g| shao_bound(&g).value)
                .unwrap_or(f64::INFINITY);
            let shao_min = minimize_truncated_bound(&spec, n, None, TruncFamily::Shao)
                .map(|(_, r)| r.value)
                .unwrap_or(f64::INFINITY);
            let thm = spec
                .iid_summary(n)
                .and_then(|(m, _)| bound_noniid(&m, &triple))
                .map(|r| r.value)
                .unwrap_or(f64::INFINITY);
            let thm_min = minimize_truncated_bound(&spec, n, Some(&triple), TruncFamily::Thm)
                .map(|(_, r)| r.value)
                .unwrap_or(f64::INFINITY);
            println!(
                "student,{},{},{},{},{},{}",
                fmt_sig(d, 10),
                n,
                fmt_sig(shao, 10),
                fmt_sig(shao_min, 10),
                fmt_sig(thm, 10),
                fmt_sig(thm_min, 10)
            );
        }
    }
}
