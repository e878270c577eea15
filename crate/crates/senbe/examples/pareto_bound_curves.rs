//! Bound curves for the centered Pareto law (density s(x + s/(s−1))^{−s−1}
//! on (−1/(s−1), ∞)), s in [3.5, 20], n in {10, 100, 1000, 10000}. The law
//! is highly right-skewed: even minimized truncated bounds stay near 1
//! unless n is in the thousands.
//!
//! Run: `cargo run --release --example pareto_bound_curves > pareto.csv`

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
        let s = 3.5 + (20.0 - 3.5) * i as f64 / (points - 1) as f64;
        let spec = DistributionSpec::pareto(s);
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
                "pareto,{},{},{},{},{},{}",
                fmt_sig(s, 10),
                n,
                fmt_sig(shao, 10),
                fmt_sig(shao_min, 10),
                fmt_sig(thm, 10),
                fmt_sig(thm_min, 10)
            );
        }
    }
}
