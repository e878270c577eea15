//! Two-point laws P(X ∈ {−1/b, b}) under the main bound vs the Shao
//! comparator. For the symmetric case (b = 1) the main bound with the t4
//! triple is 1.34/√n — 25/1.34 ≈ 18.66 times smaller than the comparator's
//! 25/√n. The comparator only wins once the asymmetry index b² exceeds
//! roughly 220 000 (b ≈ 469.8), which also forces n > (2b)² ≈ 880 000.
//!
//! Run: `cargo run --release --example two_point_comparison`

use senbe::bounds::{bound_iid, shao_bound};
use senbe::constants::{published_row, ConstantTriple};
use senbe::moments::{gamma_functionals, two_point_moments, DistributionSpec};

fn published(name: &str) -> ConstantTriple {
    let p = published_row(name).unwrap().published;
    ConstantTriple::bare(p[0], p[1], p[2])
}

fn main() {
    // symmetric case
    let n = 100u64;
    let m = two_point_moments(1.0).unwrap().with_n(n).unwrap();
    let ours = bound_iid(&m, &published("t4")).unwrap().value;
    let shao = shao_bound(&gamma_functionals(&DistributionSpec::two_point(1.0), n).unwrap()).value;
    println!(
        "symmetric (b=1), n={n}: main {ours:.6}, comparator {shao:.6}, ratio {:.4}\n",
        shao / ours
    );

    // crossover in b with the t3 triple (n large enough that b <= sqrt(n)/2)
    let n = 2_000_000u64;
    let t3 = published("t3");
    let diff = |b: f64| {
        let g = gamma_functionals(&DistributionSpec::two_point(b), n).unwrap();
        let m = two_point_moments(b).unwrap().with_n(n).unwrap();
        shao_bound(&g).value - bound_iid(&m, &t3).unwrap().value
    };
    let (mut lo, mut hi) = (460.0, 480.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if diff(mid) < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let b_star = 0.5 * (lo + hi);
    println!("comparator first beats the t3-triple bound at b = {b_star:.4}");
    println!("asymmetry index b^2 = {:.1}", b_star * b_star);
    println!(
        "implied sample-size threshold (2b)^2 = {:.0}",
        (2.0 * b_star).powi(2)
    );
    for b in [1.0, 10.0, 100.0, 469.0, 470.0, 600.0] {
        println!(
            "  b = {b:>6}: comparator - main = {:+.6e}",
            diff(b) * (n as f64).sqrt()
        );
    }
}
