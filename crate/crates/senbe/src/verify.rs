//! Monte Carlo and analytic self-checks.
//!
//! * [`simulate_delta`] draws i.i.d. matrices, forms the self-normalized sum
//!   `T = S/V` (`T = 0` on `{V = 0}`) and the Student statistic `t`, and
//!   measures the exact Kolmogorov distances of their empirical laws from
//!   Φ and Φₙ at the sample order statistics.
//! * [`check_bound_holds`] compares the measured distance plus a
//!   distribution-free (DKW) confidence half-width against a bound value.
//! * [`gap_constant`] / [`phi_n_gap`] pin down the sharp constant
//!   C = (k−½)e^{−k}√(k/π), k = 1+√3/2, governing sup_z |Φ(z) − Φₙ(z)| <
//!   C/(n−1).
//! * [`envelope_proof_checks`] confirms the derivative and tangent-line
//!   inequalities behind the tail envelope Ψ*, using the log-concavity of Ψ.
//! * [`tail_ratio_data`] tabulates log tail ratios against the Student
//!   distribution.
//!
//! All simulation randomness comes from the counter-based source in
//! [`crate::rng`], so results are identical for any worker count. The
//! worker count is `SENBE_THREADS` when set, else the machine parallelism.

use crate::bounds::{bound_iid, student_stat_transform, BoundReport};
use crate::constants::ConstantTriple;
use crate::fmt::fmt_sig;
use crate::moments::DistributionSpec;
use crate::rng::CounterRng;
use crate::specfun::{normal_cdf, normal_pdf, normal_tail, phi_n, student_cdf};
use crate::{Error, Result};

/// Empirical Kolmogorov distances from one simulation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimResult {
    pub n: u64,
    pub samples: u64,
    pub seed: u64,
    /// sup_z |P̂(T ≤ z) − Φ(z)|.
    pub sup_delta_sn: f64,
    /// sup_z |P̂(t ≤ z) − Φₙ(z)|.
    pub sup_delta_t: f64,
    /// Uniform 99% confidence half-width √(ln(2/0.01)/(2·samples)).
    pub mc_half_width: f64,
}

impl SimResult {
    pub fn csv_header() -> &'static str {
        "n,samples,seed,sup_delta_T,sup_delta_t,mc_half_width"
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.samples,
            self.seed,
            fmt_sig(self.sup_delta_sn, 10),
            fmt_sig(self.sup_delta_t, 10),
            fmt_sig(self.mc_half_width, 10)
        )
    }
}

fn worker_count(samples: u64) -> usize {
    let hw = std::env::var("SENBE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|v| v.get())
                .unwrap_or(1)
        });
    hw.clamp(1, 64).min(((samples / 4096) + 1) as usize)
}

/// DKW uniform 99% confidence half-width for `samples` draws.
pub fn dkw_half_width(samples: u64) -> f64 {
    ((2.0f64 / 0.01).ln() / (2.0 * samples as f64)).sqrt()
}

/// Simulate `samples` realizations of (T, t) for `n` i.i.d. draws of `spec`
/// and return the exact empirical Kolmogorov distances. Deterministic for a
/// fixed seed, independent of the worker count.
pub fn simulate_delta(
    spec: &DistributionSpec,
    n: u64,
    samples: u64,
    seed: u64,
) -> Result<SimResult> {
    if n < 2 {
        return Err(Error::Domain("simulate_delta needs n >= 2".into()));
    }
    if samples < 10_000 {
        return Err(Error::Domain("simulate_delta needs samples >= 10^4".into()));
    }
    if !spec.supports_sampling() {
        return Err(Error::Contract(
            "a moments-only spec cannot be sampled".into(),
        ));
    }
    // resolve the window once so every worker shares it
    let resolved = match spec.resolved_window()? {
        Some((a, b)) => spec
            .clone()
            .with_truncation(crate::moments::Truncation::Window(a, b)),
        None => spec.clone(),
    };
    let rng = CounterRng::new(seed);

    let workers = worker_count(samples);
    let chunk = samples.div_ceil(workers as u64);
    let mut t_sn: Vec<f64> = Vec::with_capacity(samples as usize);
    let mut t_stat: Vec<f64> = Vec::with_capacity(samples as usize);
    std::thread::scope(|scope| -> Result<()> {
        let mut handles = Vec::new();
        for w in 0..workers as u64 {
            let lo = w * chunk;
            let hi = ((w + 1) * chunk).min(samples);
            let resolved = &resolved;
            let rng = &rng;
            handles.push(scope.spawn(move || -> Result<(Vec<f64>, Vec<f64>)> {
                let mut sn = Vec::with_capacity((hi.saturating_sub(lo)) as usize);
                let mut st = Vec::with_capacity(sn.capacity());
                for j in lo..hi {
                    let base = j * n;
                    let mut s = 0.0;
                    let mut v2 = 0.0;
                    for i in 0..n {
                        let x = resolved.sample_at(rng, base + i)?;
                        s += x;
                        v2 += x * x;
                    }
                    let t_val = if v2 > 0.0 { s / v2.sqrt() } else { 0.0 };
                    // |T| <= sqrt(n) by Cauchy-Schwarz; clamp rounding spill
                    let t_val = t_val.clamp(-(n as f64).sqrt(), (n as f64).sqrt());
                    sn.push(t_val);
                    st.push(student_stat_transform(t_val, n)?);
                }
                Ok((sn, st))
            }));
        }
        for h in handles {
            let (sn, st) = h.join().expect("worker panicked")?;
            t_sn.extend(sn);
            t_stat.extend(st);
        }
        Ok(())
    })?;

    t_sn.sort_by(f64::total_cmp);
    t_stat.sort_by(f64::total_cmp);

    let m = samples as f64;
    let mut sup_sn = 0.0f64;
    for (k, &x) in t_sn.iter().enumerate() {
        let target = normal_cdf(x);
        let hi = (k + 1) as f64 / m - target;
        let lo = target - k as f64 / m;
        sup_sn = sup_sn.max(hi.abs()).max(lo.abs());
    }
    let mut sup_t = 0.0f64;
    for (k, &x) in t_stat.iter().enumerate() {
        let target = phi_n(x, n)?;
        let hi = (k + 1) as f64 / m - target;
        let lo = target - k as f64 / m;
        sup_t = sup_t.max(hi.abs()).max(lo.abs());
    }

    Ok(SimResult {
        n,
        samples,
        seed,
        sup_delta_sn: sup_sn,
        sup_delta_t: sup_t,
        mc_half_width: dkw_half_width(samples),
    })
}

/// Outcome of a Monte Carlo bound check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub bound: BoundReport,
    pub sim: SimResult,
    /// bound − (sup_delta_T + half-width); nonnegative on pass.
    pub margin: f64,
    pub pass: bool,
    /// The bound exceeded 1, so the pass is automatic.
    pub vacuous: bool,
}

/// Pass iff `sup_delta_T + mc_half_width ≤ bound` (bounds above 1 pass
/// automatically, flagged vacuous). The bound is the i.i.d.-form value for
/// the law in effect (truncation included).
pub fn check_bound_holds(
    spec: &DistributionSpec,
    n: u64,
    triple: &ConstantTriple,
    samples: u64,
    seed: u64,
) -> Result<CheckReport> {
    let (m, _keep) = spec.iid_summary(n)?;
    let bound = bound_iid(&m, triple)?;
    let sim = simulate_delta(spec, n, samples, seed)?;
    let lhs = sim.sup_delta_sn + sim.mc_half_width;
    let vacuous = bound.vacuous();
    let margin = bound.value - lhs;
    Ok(CheckReport {
        pass: vacuous || margin >= 0.0,
        vacuous,
        margin,
        bound,
        sim,
    })
}

// ---------------------------------------------------------------------------
// The Φ-vs-Φₙ gap constant.
// ---------------------------------------------------------------------------

/// Closed-form constant and its numerically maximized counterpart.
#[derive(Debug, Clone, Copy)]
pub struct GapConstant {
    /// k = 1 + √3/2.
    pub k: f64,
    /// C = (k − 1/2)·e^{−k}·√(k/π).
    pub c: f64,
    /// Numeric supremum of |u(1−u²)φ(u)|; equals 2C.
    pub sup2c: f64,
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if (b - a).abs() < 1e-13 {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// C = (k−1/2)e^{−k}√(k/π) with k = 1+√3/2, and the independent numeric
/// supremum of |u(1−u²)φ(u)| (which equals 2C).
pub fn gap_constant() -> GapConstant {
    let k = 1.0 + 3f64.sqrt() / 2.0;
    let c = (k - 0.5) * (-k).exp() * (k / std::f64::consts::PI).sqrt();
    let g = |u: f64| (u * (1.0 - u * u) * normal_pdf(u)).abs();
    // two local maxima: u² = 2 ∓ √3; the global one lies in (1, 3)
    let (_, inner) = golden_max(g, 0.1, 1.0);
    let (_, outer) = golden_max(g, 1.0, 3.0);
    GapConstant {
        k,
        c,
        sup2c: inner.max(outer),
    }
}

/// Numeric sup over z of |Φ(z) − Φₙ(z)| (grid plus golden refinement plus
/// the z → ∞ limit Ψ(√n)). Satisfies gap·(n−1) < C with equality in the
/// n → ∞ limit.
pub fn phi_n_gap(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain("phi_n_gap needs n >= 2".into()));
    }
    let g = |z: f64| {
        let d = normal_cdf(z) - phi_n(z, n).expect("n checked");
        d.abs()
    };
    // |g| is even in z; scan the positive axis
    let steps = 4800;
    let z_max = 12.0;
    let mut best_z = 0.0;
    let mut best = 0.0f64;
    for i in 1..=steps {
        let z = z_max * i as f64 / steps as f64;
        let v = g(z);
        if v > best {
            best = v;
            best_z = z;
        }
    }
    let h = z_max / steps as f64;
    let (_, refined) = golden_max(g, (best_z - h).max(1e-9), best_z + h);
    Ok(refined.max(best).max(normal_tail((n as f64).sqrt())))
}

// ---------------------------------------------------------------------------
// Tail-envelope proof checks.
// ---------------------------------------------------------------------------

/// The numeric facts behind the envelope Ψ*: with L(x) = ln(xΨ(x)),
/// L'(0.751) > 0 > L'(0.752), the tangent value at 0.752 evaluated back at
/// 0.751 stays below ln 0.17, and L is concave.
#[derive(Debug, Clone, Copy)]
pub struct EnvelopeReport {
    pub lp_751: f64,
    pub lp_752: f64,
    pub tangent_at_751: f64,
    pub ln_017: f64,
    pub concave_on_grid: bool,
    pub pass: bool,
}

/// L'(x) = 1/x − φ(x)/Ψ(x).
fn l_prime(x: f64) -> f64 {
    1.0 / x - normal_pdf(x) / normal_tail(x)
}

fn l_val(x: f64) -> f64 {
    (x * normal_tail(x)).ln()
}

pub fn envelope_proof_checks() -> EnvelopeReport {
    let lp_751 = l_prime(0.751);
    let lp_752 = l_prime(0.752);
    let tangent_at_751 = l_val(0.752) + lp_752 * (0.751 - 0.752);
    let ln_017 = 0.17f64.ln();
    // concavity of L on a grid: nonpositive second differences
    let mut concave = true;
    let h = 0.01;
    let mut x = 0.05;
    while x <= 8.0 {
        let second = l_val(x + h) - 2.0 * l_val(x) + l_val(x - h);
        if second > 1e-10 {
            concave = false;
            break;
        }
        x += 0.05;
    }
    let pass = lp_751 > 0.0 && lp_752 < 0.0 && tangent_at_751 < ln_017 && concave;
    EnvelopeReport {
        lp_751,
        lp_752,
        tangent_at_751,
        ln_017,
        concave_on_grid: concave,
        pass,
    }
}

// ---------------------------------------------------------------------------
// Tail-ratio table.
// ---------------------------------------------------------------------------

/// One row of the tail-ratio table at height `z`: natural logs of the three
/// normal-family tails over the Student tail with n−1 degrees of freedom.
#[derive(Debug, Clone)]
pub struct TailRatioRow {
    pub z: f64,
    /// ln[(1 − Φ(z)) / (1 − F_{n−1}(z))].
    pub log_ratio_normal: f64,
    /// ln[(1 − Φ(z√(n/(n−1)))) / (1 − F_{n−1}(z))].
    pub log_ratio_scaled: f64,
    /// ln[(1 − Φₙ(z)) / (1 − F_{n−1}(z))]; omitted for z ≥ √n.
    pub log_ratio_phi_n: Option<f64>,
    pub note: Option<&'static str>,
}

/// Tail-ratio data for the given grid; `n ≥ 3`.
pub fn tail_ratio_data(n: u64, z_grid: &[f64]) -> Result<Vec<TailRatioRow>> {
    if n < 3 {
        return Err(Error::Domain("tail_ratio_data needs n >= 3".into()));
    }
    let df = (n - 1) as f64;
    let nf = n as f64;
    let mut rows = Vec::with_capacity(z_grid.len());
    for &z in z_grid {
        if !(z > 0.0) {
            return Err(Error::Domain(format!(
                "tail_ratio_data needs z > 0, got {z}"
            )));
        }
        let student_tail = 1.0 - student_cdf(z, df)?;
        let log_ratio_normal = (normal_tail(z) / student_tail).ln();
        let log_ratio_scaled = (normal_tail(z * (nf / (nf - 1.0)).sqrt()) / student_tail).ln();
        let (log_ratio_phi_n, note) = if z < nf.sqrt() {
            (Some(((1.0 - phi_n(z, n)?) / student_tail).ln()), None)
        } else {
            (None, Some("phi_n column omitted: z >= sqrt(n)"))
        };
        rows.push(TailRatioRow {
            z,
            log_ratio_normal,
            log_ratio_scaled,
            log_ratio_phi_n,
            note,
        });
    }
    Ok(rows)
}

/// CSV for the tail-ratio table.
pub fn tail_ratio_csv(rows: &[TailRatioRow]) -> String {
    let mut out = String::from("z,log_ratio_normal,log_ratio_scaled,log_ratio_phi_n,note\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_sig(r.z, 10),
            fmt_sig(r.log_ratio_normal, 10),
            fmt_sig(r.log_ratio_scaled, 10),
            r.log_ratio_phi_n
                .map(|v| fmt_sig(v, 10))
                .unwrap_or_default(),
            r.note.unwrap_or(""),
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// Exact enumeration oracle for the symmetric two-point law.
// ---------------------------------------------------------------------------

/// Exact sup_z |P(T ≤ z) − Φ(z)| for the symmetric two-point (Rademacher)
/// law, by binomial enumeration: T = (2K − n)/√n with K ~ Binomial(n, 1/2).
/// Independent of the simulation path; used to validate it.
pub fn rademacher_exact_sup(n: u64) -> f64 {
    // p_k = C(n,k)/2^n by the stable multiplicative recursion
    let nf = n as f64;
    let mut p = 0.5f64.powi(n as i32);
    let mut cum = 0.0f64;
    let mut sup = 0.0f64;
    for k in 0..=n {
        let t = (2.0 * k as f64 - nf) / nf.sqrt();
        let target = normal_cdf(t);
        sup = sup.max((cum - target).abs());
        cum += p;
        sup = sup.max((cum - target).abs());
        if k < n {
            p *= (nf - k as f64) / (k as f64 + 1.0);
        }
    }
    sup
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::published_row;

    #[test]
    fn gap_constant_match() {
        let p = gap_constant();
        assert!((p.k - 1.8660254037844386).abs() < 1e-15);
        assert!((p.c - 0.16290637489529954).abs() < 1e-12, "C = {}", p.c);
        assert!(
            (p.sup2c - 2.0 * p.c).abs() <= 1e-9,
            "sup {} vs 2C {}",
            p.sup2c,
            2.0 * p.c
        );
    }

    #[test]
    fn gap_reference_values() {
        // 40-digit grid references
        let g2 = phi_n_gap(2).unwrap();
        assert!((g2 - 0.0889344111108).abs() < 1e-7, "gap(2) = {g2}");
        let g10 = phi_n_gap(10).unwrap();
        assert!((g10 - 0.0170261814259).abs() < 1e-8, "gap(10) = {g10}");
        let c = gap_constant().c;
        for n in [2u64, 10, 100, 10_000] {
            let gap = phi_n_gap(n).unwrap();
            assert!(gap < c / (n as f64 - 1.0), "n={n}: {gap}");
        }
        // fixed points kill the gap at z = ±1
        assert!((normal_cdf(1.0) - phi_n(1.0, 7).unwrap()).abs() == 0.0);
    }

    #[test]
    fn gap_sharpening() {
        let c = gap_constant().c;
        let mut last = 0.0;
        for n in [2u64, 10, 100, 10_000] {
            let prod = (n as f64 - 1.0) * phi_n_gap(n).unwrap();
            assert!(prod > last, "product not increasing at n={n}");
            last = prod;
        }
        assert!(last >= 0.995 * c, "limit {last} vs C {c}");
    }

    #[test]
    fn envelope_checks_pass() {
        let r = envelope_proof_checks();
        assert!(r.lp_751 > 0.0, "{}", r.lp_751);
        assert!(r.lp_752 < 0.0, "{}", r.lp_752);
        assert!(r.tangent_at_751 < r.ln_017);
        assert!(r.concave_on_grid);
        assert!(r.pass);
        // reference values
        assert!((r.lp_751 - 0.00201082102617).abs() < 1e-9);
        assert!((r.lp_752 + 0.000529142392872).abs() < 1e-9);
    }

    #[test]
    fn rademacher_oracle_value() {
        // 40-digit enumeration gives 0.0397946186936 at n = 100
        let sup = rademacher_exact_sup(100);
        assert!((sup - 0.0397946186936).abs() < 1e-10, "{sup}");
    }

    #[test]
    fn simulate_rademacher_small() {
        let spec = DistributionSpec::two_point(1.0);
        let r = simulate_delta(&spec, 16, 20_000, 7).unwrap();
        let exact = rademacher_exact_sup(16);
        assert!(
            (r.sup_delta_sn - exact).abs() <= r.mc_half_width,
            "emp {} exact {exact} hw {}",
            r.sup_delta_sn,
            r.mc_half_width
        );
        // determinism
        let r2 = simulate_delta(&spec, 16, 20_000, 7).unwrap();
        assert_eq!(r, r2);
        // thread-count independence
        std::env::set_var("SENBE_THREADS", "1");
        let r1 = simulate_delta(&spec, 16, 20_000, 7).unwrap();
        std::env::remove_var("SENBE_THREADS");
        assert_eq!(r, r1);
    }

    #[test]
    fn simulate_rejects_bad_input() {
        let spec = DistributionSpec::two_point(1.0);
        assert!(simulate_delta(&spec, 1, 20_000, 0).is_err());
        assert!(simulate_delta(&spec, 10, 100, 0).is_err());
        let mom = DistributionSpec::parse("moments:rho3=1,rho4=0,rho6=0").unwrap();
        assert!(simulate_delta(&mom, 10, 20_000, 0).is_err());
    }

    #[test]
    fn check_bound_two_point() {
        let spec = DistributionSpec::two_point(2.0);
        let row = published_row("t1").unwrap();
        let t = crate::constants::ConstantTriple::bare(
            row.published[0],
            row.published[1],
            row.published[2],
        );
        let r = check_bound_holds(&spec, 100, &t, 20_000, 3).unwrap();
        assert!(r.pass, "margin {}", r.margin);
        assert!(!r.vacuous);
        assert!((r.bound.value - 0.9187).abs() < 1e-10); // 9.187/10
    }

    #[test]
    fn tail_ratio_rows() {
        let rows = tail_ratio_data(10, &[0.001, 1.5, 2.0, 3.0, 3.2]).unwrap();
        // z -> 0: all three logs -> ln(0.5/0.5) = 0
        assert!(rows[0].log_ratio_normal.abs() < 5e-3);
        assert!(rows[0].log_ratio_scaled.abs() < 5e-3);
        assert!(rows[0].log_ratio_phi_n.unwrap().abs() < 5e-3);
        // phi_n tail is closer to the Student tail than the plain normal on [1.5, 3]
        for r in &rows[1..4] {
            let phin = r.log_ratio_phi_n.unwrap();
            assert!(
                phin.abs() <= r.log_ratio_normal.abs(),
                "z={}: |{phin}| > |{}|",
                r.z,
                r.log_ratio_normal
            );
        }
        // z >= sqrt(10): column omitted with a note
        let last = &rows[4];
        assert!(last.log_ratio_phi_n.is_none());
        assert!(last.note.is_some());
        assert!(tail_ratio_data(2, &[1.0]).is_err());
        // CSV shape
        let csv = tail_ratio_csv(&rows);
        assert_eq!(csv.lines().count(), 6);
        assert!(csv.starts_with("z,"));
    }
}
