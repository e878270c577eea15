//! Bound assembly and truncation-point minimization.
//!
//! Families:
//!
//! * `thm1` — A₃r₃ + A₄r₄ + A₆r₆ over the reduced functionals of the summed
//!   moments normalized to β₂ = 1 (for n i.i.d. unit-variance copies this is
//!   (A₃ρ₃ + A₄ρ₄ + A₆ρ₆/ρ₃²)/√n);
//! * `thm2` — the i.i.d. form (A₃ρ₃ + A₄ρ₄ + A₆ρ₆)/√n;
//! * `shao` — 10.2γ₂ + 25γ₃;
//! * `nagaev` / `nagaev_crude` — (4.4E|X|³ + EX⁴/E|X|³ + E|X²−1|³)/√n and
//!   (36E|X|³ + 9)/√n, kept as comparators (the original derivation of the
//!   first is disputed);
//! * `thm1_truncated` / `shao_truncated` — failure mass 1 − keep_probⁿ plus
//!   the corresponding bound for the zero-mean-truncated law.
//!
//! Bound values above 1 are returned as-is and flagged vacuous.

use crate::constants::ConstantTriple;
use crate::fmt::fmt_sig;
use crate::moments::{
    gamma_functionals, DistributionSpec, GammaFunctionals, MomentSummary, Truncation,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    Thm1,
    Thm2,
    Shao,
    Nagaev,
    NagaevCrude,
    Thm1Truncated,
    ShaoTruncated,
}

impl BoundFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundFamily::Thm1 => "thm1",
            BoundFamily::Thm2 => "thm2",
            BoundFamily::Shao => "shao",
            BoundFamily::Nagaev => "nagaev",
            BoundFamily::NagaevCrude => "nagaev_crude",
            BoundFamily::Thm1Truncated => "thm1_truncated",
            BoundFamily::ShaoTruncated => "shao_truncated",
        }
    }
}

/// Truncation metadata attached to a truncated-bound report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationInfo {
    pub a: f64,
    pub b: f64,
    pub keep_prob: f64,
    /// 1 − keep_probⁿ.
    pub failure_mass: f64,
}

/// The triple a report was computed with.
#[derive(Debug, Clone, PartialEq)]
pub struct TripleUsed {
    /// Published row name, or "custom".
    pub name: String,
    pub values: [f64; 3],
}

impl TripleUsed {
    pub fn named(name: &str, t: &ConstantTriple) -> Self {
        Self {
            name: name.to_string(),
            values: t.as_array(),
        }
    }
}

/// A bound value with its additive components and provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub family: BoundFamily,
    pub value: f64,
    /// Named addends; they sum to `value`.
    pub components: Vec<(&'static str, f64)>,
    pub triple: Option<TripleUsed>,
    pub truncation: Option<TruncationInfo>,
    pub n: Option<u64>,
    pub dist: Option<String>,
    /// Caveat attached to comparator families.
    pub note: Option<&'static str>,
}

impl BoundReport {
    fn new(family: BoundFamily, components: Vec<(&'static str, f64)>) -> Self {
        let value = components.iter().map(|&(_, v)| v).sum();
        Self {
            family,
            value,
            components,
            triple: None,
            truncation: None,
            n: None,
            dist: None,
            note: None,
        }
    }

    /// A bound above 1 carries no information but is still well-defined.
    pub fn vacuous(&self) -> bool {
        !(self.value <= 1.0)
    }

    /// Flat key-value text block.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("family = {}\n", self.family.as_str()));
        if let Some(n) = self.n {
            out.push_str(&format!("n = {n}\n"));
        }
        if let Some(d) = &self.dist {
            out.push_str(&format!("dist = {d}\n"));
        }
        if let Some(t) = &self.triple {
            out.push_str(&format!(
                "triple = {} ({}, {}, {})\n",
                t.name,
                fmt_sig(t.values[0], 10),
                fmt_sig(t.values[1], 10),
                fmt_sig(t.values[2], 10)
            ));
        }
        out.push_str(&format!("value = {}\n", fmt_sig(self.value, 10)));
        out.push_str(&format!("vacuous = {}\n", self.vacuous()));
        for (name, v) in &self.components {
            out.push_str(&format!("component.{name} = {}\n", fmt_sig(*v, 10)));
        }
        if let Some(tr) = &self.truncation {
            out.push_str(&format!("truncation.a = {}\n", fmt_sig(tr.a, 10)));
            out.push_str(&format!("truncation.b = {}\n", fmt_sig(tr.b, 10)));
            out.push_str(&format!(
                "truncation.keep_prob = {}\n",
                fmt_sig(tr.keep_prob, 10)
            ));
            out.push_str(&format!(
                "truncation.failure_mass = {}\n",
                fmt_sig(tr.failure_mass, 10)
            ));
        }
        if let Some(note) = self.note {
            out.push_str(&format!("note = {note}\n"));
        }
        out
    }

    /// Stable CSV column order.
    pub fn csv_header() -> &'static str {
        "family,n,dist,value,vacuous,components,b_star,keep_prob"
    }

    /// One CSV row in [`Self::csv_header`] order; `components` packs the
    /// named addends as `name=value;…`.
    pub fn to_csv_row(&self) -> String {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|(k, v)| format!("{k}={}", fmt_sig(*v, 10)))
            .collect();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.family.as_str(),
            self.n.map(|n| n.to_string()).unwrap_or_default(),
            self.dist.clone().unwrap_or_default(),
            fmt_sig(self.value, 10),
            self.vacuous(),
            comps.join(";"),
            self.truncation
                .map(|t| fmt_sig(t.b, 10))
                .unwrap_or_default(),
            self.truncation
                .map(|t| fmt_sig(t.keep_prob, 10))
                .unwrap_or_default(),
        )
    }
}

// ---------------------------------------------------------------------------
// Core bound evaluations.
// ---------------------------------------------------------------------------

/// Bound for general independent summands: A₃r₃ + A₄r₄ + A₆r₆ with the
/// reduced functionals taken after normalizing β₂ = 1.
pub fn bound_noniid(m: &MomentSummary, t: &ConstantTriple) -> Result<BoundReport> {
    if !(m.beta2 > 0.0) || !(m.beta3 > 0.0) {
        return Err(Error::DegenerateMoments(format!(
            "bound needs beta2 > 0 and beta3 > 0, got ({}, {})",
            m.beta2, m.beta3
        )));
    }
    let mut r = BoundReport::new(
        BoundFamily::Thm1,
        vec![
            ("A3_r3", t.a3 * m.r3),
            ("A4_r4", t.a4 * m.r4),
            ("A6_r6", t.a6 * m.r6),
        ],
    );
    r.n = m.n;
    Ok(r)
}

/// i.i.d. form (A₃ρ₃ + A₄ρ₄ + A₆ρ₆)/√n. Accepts any triple (comparisons
/// deliberately feed the general-case triples through this form too).
pub fn bound_iid(m: &MomentSummary, t: &ConstantTriple) -> Result<BoundReport> {
    let n =
        m.n.ok_or_else(|| Error::Contract("bound_iid needs an i.i.d. summary with n".into()))?;
    if !(m.rho3.is_finite()) {
        return Err(Error::Contract(
            "bound_iid needs per-variable rho moments".into(),
        ));
    }
    if m.rho3 < 1.0 {
        return Err(Error::Lyapunov(m.rho3));
    }
    let sqn = (n as f64).sqrt();
    let mut r = BoundReport::new(
        BoundFamily::Thm2,
        vec![
            ("A3_rho3", t.a3 * m.rho3 / sqn),
            ("A4_rho4", t.a4 * m.rho4 / sqn),
            ("A6_rho6", t.a6 * m.rho6 / sqn),
        ],
    );
    r.n = Some(n);
    Ok(r)
}

/// Shao's bound 10.2γ₂ + 25γ₃.
pub fn shao_bound(g: &GammaFunctionals) -> BoundReport {
    BoundReport::new(
        BoundFamily::Shao,
        vec![
            ("10.2_gamma2", 10.2 * g.gamma2),
            ("25_gamma3", 25.0 * g.gamma3),
        ],
    )
}

const NAGAEV_NOTE: &str = "comparator; derivation of the source inequality is disputed";

/// Nagaev's stated bound (4.4E|X|³ + EX⁴/E|X|³ + E|X²−1|³)/√n and the crude
/// companion (36E|X|³ + 9)/√n, returned as flagged comparators.
pub fn nagaev_bounds(rho3: f64, ex4: f64, rho6rho3: f64, n: u64) -> (BoundReport, BoundReport) {
    let sqn = (n as f64).sqrt();
    let mut main = BoundReport::new(
        BoundFamily::Nagaev,
        vec![
            ("4.4_rho3", 4.4 * rho3 / sqn),
            ("ex4_over_rho3", ex4 / rho3 / sqn),
            ("e_abs_x2m1_cubed", rho6rho3 / sqn),
        ],
    );
    main.n = Some(n);
    main.note = Some(NAGAEV_NOTE);
    let mut crude = BoundReport::new(
        BoundFamily::NagaevCrude,
        vec![("36_rho3", 36.0 * rho3 / sqn), ("9", 9.0 / sqn)],
    );
    crude.n = Some(n);
    crude.note = Some(NAGAEV_NOTE);
    (main, crude)
}

fn failure_mass(keep: f64, n: u64) -> f64 {
    // 1 - keep^n = -expm1(n·ln(keep)), stable for keep near 1
    if keep >= 1.0 {
        return 0.0;
    }
    if keep <= 0.0 {
        return 1.0;
    }
    -((n as f64) * (-(1.0 - keep)).ln_1p()).exp_m1()
}

/// Corollary-style truncated bound: failure mass plus the `thm1` evaluation
/// of the zero-mean truncation `X·1{−a<X<b}` (the left cut chosen by the
/// zero-mean condition). `b = +∞` reproduces the untruncated bound exactly.
pub fn truncated_bound(
    spec: &DistributionSpec,
    n: u64,
    b: f64,
    t: &ConstantTriple,
) -> Result<BoundReport> {
    truncated_bound_for(&spec.clone().with_truncation(Truncation::AtB(b)), n, t)
}

/// [`truncated_bound`] with the window taken from the spec's own truncation
/// field (which may also be an explicit `(a, b)` pair).
pub fn truncated_bound_for(
    spec: &DistributionSpec,
    n: u64,
    t: &ConstantTriple,
) -> Result<BoundReport> {
    let window = spec
        .resolved_window()?
        .ok_or_else(|| Error::Contract("truncated bound needs a truncation".into()))?;
    let (rho, keep) = spec.rho_moments()?;
    let m = rho.with_n(n)?;
    let fail = failure_mass(keep, n);
    let inner = bound_noniid(&m, t)?;
    let mut comps = vec![("failure_mass", fail)];
    comps.extend(inner.components);
    let mut r = BoundReport::new(BoundFamily::Thm1Truncated, comps);
    r.n = Some(n);
    r.truncation = Some(TruncationInfo {
        a: window.0,
        b: window.1,
        keep_prob: keep,
        failure_mass: fail,
    });
    r.dist = Some(spec.describe());
    Ok(r)
}

/// Truncated Shao bound: failure mass + 10.2γ̃₂ + 25γ̃₃, the γ̃ computed from
/// the truncated law (threshold included).
pub fn truncated_shao_bound(spec: &DistributionSpec, n: u64, b: f64) -> Result<BoundReport> {
    truncated_shao_bound_for(&spec.clone().with_truncation(Truncation::AtB(b)), n)
}

/// [`truncated_shao_bound`] with the window taken from the spec itself.
pub fn truncated_shao_bound_for(spec: &DistributionSpec, n: u64) -> Result<BoundReport> {
    let window = spec
        .resolved_window()?
        .ok_or_else(|| Error::Contract("truncated bound needs a truncation".into()))?;
    let keep = if window.0.is_infinite() && window.1.is_infinite() {
        1.0
    } else {
        spec.rho_moments()?.1
    };
    let g = gamma_functionals(spec, n)?;
    let fail = failure_mass(keep, n);
    let mut r = BoundReport::new(
        BoundFamily::ShaoTruncated,
        vec![
            ("failure_mass", fail),
            ("10.2_gamma2", 10.2 * g.gamma2),
            ("25_gamma3", 25.0 * g.gamma3),
        ],
    );
    r.n = Some(n);
    r.truncation = Some(TruncationInfo {
        a: window.0,
        b: window.1,
        keep_prob: keep,
        failure_mass: fail,
    });
    r.dist = Some(spec.describe());
    Ok(r)
}

/// Which truncated family [`minimize_truncated_bound`] works on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncFamily {
    Thm,
    Shao,
}

/// Minimize the truncated bound over the cut point `b`.
///
/// Probes a 64-point logarithmic grid spanning [0.1·scale, 10⁴·scale]
/// (scale = the raw standard deviation when finite, else 1) plus `b = +∞`,
/// then refines the best finite bracket by golden section on ln b to 1e−6
/// relative tolerance. The returned value never exceeds any probed value.
pub fn minimize_truncated_bound(
    spec: &DistributionSpec,
    n: u64,
    triple: Option<&ConstantTriple>,
    family: TruncFamily,
) -> Result<(f64, BoundReport)> {
    if n < 2 {
        return Err(Error::Domain(
            "minimize_truncated_bound needs n >= 2".into(),
        ));
    }
    if family == TruncFamily::Thm && triple.is_none() {
        return Err(Error::Config(
            "the thm family needs a constant triple".into(),
        ));
    }
    let eval = |b: f64| -> f64 {
        let res = match family {
            TruncFamily::Thm => truncated_bound(spec, n, b, triple.unwrap()),
            TruncFamily::Shao => truncated_shao_bound(spec, n, b),
        };
        res.map(|r| r.value).unwrap_or(f64::INFINITY)
    };

    let scale = spec.raw_sd().unwrap_or(1.0);
    let mut best_b = f64::INFINITY;
    let mut best_v = eval(f64::INFINITY);
    let grid: Vec<f64> = (0..64)
        .map(|k| 0.1 * scale * 1e5f64.powf(k as f64 / 63.0))
        .collect();
    let values: Vec<f64> = grid.iter().map(|&b| eval(b)).collect();
    let mut best_idx = None;
    for (i, (&b, &v)) in grid.iter().zip(&values).enumerate() {
        if v < best_v {
            best_v = v;
            best_b = b;
            best_idx = Some(i);
        }
    }

    if let Some(i) = best_idx {
        // golden-section on ln b over the bracket around the best grid point
        let lo = if i == 0 { grid[0] * 0.5 } else { grid[i - 1] };
        let hi = if i + 1 == grid.len() {
            grid[i] * 2.0
        } else {
            grid[i + 1]
        };
        let (mut a, mut c) = (lo.ln(), hi.ln());
        let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
        let mut x1 = c - inv_phi * (c - a);
        let mut x2 = a + inv_phi * (c - a);
        let mut f1 = eval(x1.exp());
        let mut f2 = eval(x2.exp());
        for _ in 0..120 {
            if (c - a).abs() <= 1e-6 {
                break;
            }
            if f1 <= f2 {
                c = x2;
                x2 = x1;
                f2 = f1;
                x1 = c - inv_phi * (c - a);
                f1 = eval(x1.exp());
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (c - a);
                f2 = eval(x2.exp());
            }
            let (bb, vv) = if f1 <= f2 {
                (x1.exp(), f1)
            } else {
                (x2.exp(), f2)
            };
            if vv < best_v {
                best_v = vv;
                best_b = bb;
            }
        }
    }

    if !best_v.is_finite() {
        return Err(Error::InfeasibleTruncation(format!(
            "no evaluable truncation point for {}",
            spec.describe()
        )));
    }
    let report = match family {
        TruncFamily::Thm => truncated_bound(spec, n, best_b, triple.unwrap())?,
        TruncFamily::Shao => truncated_shao_bound(spec, n, best_b)?,
    };
    Ok((best_b, report))
}

// ---------------------------------------------------------------------------
// The Student-statistic transform.
// ---------------------------------------------------------------------------

/// Monotone map t = √((n−1)/n) · T/√(1 − T²/n) from the self-normalized sum
/// to the Student statistic; requires |T| ≤ √n, with the endpoints mapping
/// to ±∞.
pub fn student_stat_transform(t_value: f64, n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain("transform needs n >= 2".into()));
    }
    let nf = n as f64;
    if t_value * t_value > nf {
        return Err(Error::Domain(format!(
            "|T| = {} exceeds sqrt(n) = {}",
            t_value.abs(),
            nf.sqrt()
        )));
    }
    let denom = 1.0 - t_value * t_value / nf;
    if denom <= 0.0 {
        return Ok(if t_value > 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        });
    }
    Ok(((nf - 1.0) / nf).sqrt() * t_value / denom.sqrt())
}

/// Inverse of [`student_stat_transform`]: T = t·√(n/(t² + n − 1)).
pub fn student_stat_inverse(t_stat: f64, n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain("transform needs n >= 2".into()));
    }
    let nf = n as f64;
    if t_stat.is_infinite() {
        return Ok(if t_stat > 0.0 { nf.sqrt() } else { -nf.sqrt() });
    }
    Ok(t_stat * (nf / (t_stat * t_stat + nf - 1.0)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{published_row, ConstantTriple};
    use crate::moments::two_point_moments;

    fn triple(name: &str) -> ConstantTriple {
        published_row(name).unwrap().triple().unwrap()
    }

    fn published_values(name: &str) -> ConstantTriple {
        let p = published_row(name).unwrap().published;
        ConstantTriple::bare(p[0], p[1], p[2])
    }

    #[test]
    fn rademacher_iid_bound() {
        // symmetric two-point law: rho = (1, 0, 0)
        let m = MomentSummary::from_iid(1.0, 0.0, 0.0, 4).unwrap();
        let t = published_values("t4");
        let r = bound_iid(&m, &t).unwrap();
        assert!((r.value - 0.67).abs() < 1e-12, "{}", r.value);
        let m = MomentSummary::from_iid(1.0, 0.0, 0.0, 100).unwrap();
        let t = published_values("t4iid");
        let r = bound_iid(&m, &t).unwrap();
        assert!((r.value - 0.125).abs() < 1e-12, "{}", r.value);
        assert!(!r.vacuous());
        // components sum to the value
        let s: f64 = r.components.iter().map(|&(_, v)| v).sum();
        assert!((s - r.value).abs() < 1e-12);
        // the 25/sqrt(n) comparator is 25/1.25 = 20 times larger here
        let g = crate::moments::gamma_functionals(&DistributionSpec::two_point(1.0), 100).unwrap();
        let ratio = shao_bound(&g).value / r.value;
        assert!((ratio - 20.0).abs() < 1e-12, "{ratio}");
    }

    #[test]
    fn lyapunov_and_degenerate_errors() {
        let m = MomentSummary::from_iid(0.9, 0.0, 0.0, 4);
        assert!(m.is_err() || bound_iid(&m.unwrap(), &published_values("t1")).is_err());
        let mut m = MomentSummary::from_iid(1.5, 1.0, 1.0, 4).unwrap();
        m.rho3 = 0.5;
        assert!(matches!(
            bound_iid(&m, &published_values("t1")),
            Err(Error::Lyapunov(_))
        ));
        let mut m = MomentSummary::from_iid(1.5, 1.0, 1.0, 4).unwrap();
        m.beta3 = 0.0;
        assert!(bound_noniid(&m, &published_values("t1")).is_err());
    }

    #[test]
    fn noniid_scale_invariance() {
        // scaling X by c = 2 scales (beta2, beta3, tbeta4, tbeta6) by
        // (4, 8, 16, 64) and leaves the bound unchanged
        let m1 = MomentSummary::from_sums(2.0, 3.0, 4.0, 5.0).unwrap();
        let m2 = MomentSummary::from_sums(8.0, 24.0, 64.0, 320.0).unwrap();
        let t = triple("t1");
        let b1 = bound_noniid(&m1, &t).unwrap().value;
        let b2 = bound_noniid(&m2, &t).unwrap().value;
        assert!((b1 - b2).abs() <= 1e-12 * b1);
    }

    #[test]
    fn noniid_linear_in_r3() {
        let t = published_values("t1");
        let m = MomentSummary::from_iid(1.0, 0.0, 0.0, 25).unwrap();
        let r = bound_noniid(&m, &t).unwrap();
        assert!((r.value - t.a3 * m.r3).abs() < 1e-15);
    }

    #[test]
    fn bound_monotone_in_constants() {
        let m = MomentSummary::from_iid(1.7, 1.5, 3.375, 100).unwrap();
        let base = bound_noniid(&m, &ConstantTriple::bare(1.0, 1.0, 1.0))
            .unwrap()
            .value;
        for bumped in [
            ConstantTriple::bare(1.1, 1.0, 1.0),
            ConstantTriple::bare(1.0, 1.1, 1.0),
            ConstantTriple::bare(1.0, 1.0, 1.1),
        ] {
            let v = bound_noniid(&m, &bumped).unwrap().value;
            assert!(v > base, "bump {bumped:?} gave {v} <= {base}");
        }
    }

    #[test]
    fn shao_two_point_regimes() {
        use crate::moments::gamma_functionals;
        // b <= sqrt(n)/2: the bound equals 25 rho3 / sqrt(n)
        let spec = DistributionSpec::two_point(2.0);
        let g = gamma_functionals(&spec, 100).unwrap();
        let r = shao_bound(&g);
        let want = 25.0 * two_point_moments(2.0).unwrap().rho3 / 10.0;
        assert!((r.value - want).abs() < 1e-12, "{} vs {want}", r.value);
        // b > sqrt(n)/2 forces at least 5.1
        for (b, n) in [(2.0f64, 4u64), (5.0, 25), (10.0, 100), (469.0, 4)] {
            if b > (n as f64).sqrt() / 2.0 {
                let g = gamma_functionals(&DistributionSpec::two_point(b), n).unwrap();
                let r = shao_bound(&g);
                assert!(r.value >= 5.1, "b={b} n={n}: {}", r.value);
                assert!(r.vacuous());
            }
        }
        // empty functionals
        let r = shao_bound(&GammaFunctionals {
            gamma2: 0.0,
            gamma3: 0.0,
        });
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn nagaev_values() {
        let (main, crude) = nagaev_bounds(1.0, 1.0, 0.0, 100);
        assert!((main.value - 5.4 / 10.0).abs() < 1e-14);
        assert!((crude.value - 4.5).abs() < 1e-14);
        assert!(main.note.is_some());
        // n = 1: vacuous but still returned
        let (main, _) = nagaev_bounds(1.0, 1.0, 0.0, 1);
        assert!(main.value > 1.0 && main.vacuous());
    }

    #[test]
    fn failure_mass_arithmetic() {
        assert!((failure_mass(0.999, 1000) - 0.63230457522886770).abs() < 1e-12);
        assert_eq!(failure_mass(1.0, 1000), 0.0);
    }

    #[test]
    fn truncated_identity_at_infinite_b() {
        let spec = DistributionSpec::student(8.0);
        let t = triple("t2");
        let r = truncated_bound(&spec, 100, f64::INFINITY, &t).unwrap();
        let (m, _) = spec.iid_summary(100).unwrap();
        let plain = bound_noniid(&m, &t).unwrap();
        assert!((r.value - plain.value).abs() <= 1e-12 * plain.value);
        assert_eq!(r.truncation.unwrap().failure_mass, 0.0);
        // shao side
        let r = truncated_shao_bound(&spec, 100, f64::INFINITY).unwrap();
        let g = gamma_functionals(&spec, 100).unwrap();
        let plain = shao_bound(&g);
        assert!((r.value - plain.value).abs() <= 1e-12 * plain.value);
        assert_eq!(r.truncation.unwrap().failure_mass, 0.0);
    }

    #[test]
    fn truncation_makes_heavy_tail_finite() {
        // untruncated student(3) bound diverges (rho4 infinite); a finite
        // cut gives a finite value at least the failure mass
        let spec = DistributionSpec::student(3.0);
        let t = triple("t2");
        assert!(spec.iid_summary(1000).is_err());
        let r = truncated_bound(&spec, 1000, 8.0, &t).unwrap();
        assert!(r.value.is_finite());
        let info = r.truncation.unwrap();
        assert!(r.value >= info.failure_mass);
        assert!(info.keep_prob < 1.0 && info.keep_prob > 0.9);
    }

    #[test]
    fn minimizer_result_not_worse_than_untruncated() {
        let spec = DistributionSpec::student(8.0);
        let t = triple("t2");
        let (m, _) = spec.iid_summary(400).unwrap();
        let untrunc = bound_noniid(&m, &t).unwrap().value;
        let (b_star, report) =
            minimize_truncated_bound(&spec, 400, Some(&t), TruncFamily::Thm).unwrap();
        assert!(
            report.value <= untrunc + 1e-12,
            "{} vs {untrunc}",
            report.value
        );
        assert!(b_star > 0.0);
    }

    #[test]
    fn minimizer_heavy_tail_near_one_but_finite() {
        // pareto(3), n = 10: heavy tail keeps the bound near 1
        let spec = DistributionSpec::pareto(3.0);
        let t = triple("t2");
        let (_, report) = minimize_truncated_bound(&spec, 10, Some(&t), TruncFamily::Thm).unwrap();
        assert!(report.value.is_finite());
        assert!(report.value >= report.truncation.unwrap().failure_mass);
        assert!(report.value > 0.5, "{}", report.value);
    }

    #[test]
    fn transform_values_and_roundtrip() {
        assert_eq!(student_stat_transform(0.0, 5).unwrap(), 0.0);
        assert!((student_stat_transform(1.0, 2).unwrap() - 1.0).abs() < 1e-14);
        assert_eq!(student_stat_transform(2.0, 4).unwrap(), f64::INFINITY);
        assert!(student_stat_transform(2.1, 4).is_err());
        let n = 50;
        let sq = (n as f64).sqrt();
        let mut tv = -0.99 * sq;
        while tv <= 0.99 * sq {
            let t = student_stat_transform(tv, n).unwrap();
            let back = student_stat_inverse(t, n).unwrap();
            assert!(
                (back - tv).abs() <= 1e-12 * (1.0 + tv.abs()),
                "{tv} -> {t} -> {back}"
            );
            tv += 0.37;
        }
    }

    #[test]
    fn report_serialization_shapes() {
        let m = MomentSummary::from_iid(1.7, 1.5, 3.375, 400).unwrap();
        let mut r = bound_iid(&m, &published_values("t1")).unwrap();
        r.dist = Some("two-point(b=2)".into());
        let kv = r.to_kv();
        assert!(kv.contains("family = thm2"));
        assert!(kv.contains("value = 0.4593"));
        let row = r.to_csv_row();
        assert_eq!(
            row.split(',').count(),
            BoundReport::csv_header().split(',').count()
        );
    }
}
