//! Moment functionals for the built-in laws, empirical samples, and
//! zero-mean truncations.
//!
//! Everything downstream consumes the unit-variance functionals
//!
//! ```text
//! ρ₃ = E|X|³,   ρ₄ = √(E(X²−1)²),   ρ₆ = E|X²−1|³ / E|X|³
//! ```
//!
//! of the variance-normalized law, plus the split functionals entering the
//! Shao comparator,
//!
//! ```text
//! γ₂ = E X²·1{|X| > √β₂/2} / β₂,   γ₃ = Σ E|X|³·1{|X| ≤ √β₂/2} / β₂^{3/2}
//! ```
//!
//! (threshold atoms go to γ₃: the indicators are `>` and `≤`).
//!
//! A zero-mean truncation replaces `X` by `X·1{−a < X < b}` with `a` chosen
//! so the mean stays zero; the truncated variable keeps an implicit atom at
//! zero, which contributes nothing to any of the functionals here — moments
//! integrate over the open window only.

use crate::quad::{integrate, integrate_from, integrate_tail};
use crate::rng::CounterRng;
use crate::specfun::{ln_gamma, student_pdf, student_quantile};
use crate::{Error, Result};

const QUAD_TOL: f64 = 1e-9;

/// The supported input laws. All are zero-mean by construction
/// (samples are shifted on ingestion).
#[derive(Debug, Clone, PartialEq)]
pub enum LawKind {
    /// Two-point law on {−1/b, b}, `b ≥ 1`, normalized to unit variance.
    TwoPoint { b: f64 },
    /// Student-t with `d > 0` degrees of freedom (raw scale).
    Student { d: f64 },
    /// Centered Pareto with density s·(x + s/(s−1))^{−s−1} on
    /// (−1/(s−1), ∞), `s > 1`.
    Pareto { s: f64 },
    /// Empirical sample, mean-shifted to zero.
    Sample { values: Vec<f64> },
    /// Direct unit-variance moment summary.
    Moments { rho3: f64, rho4: f64, rho6: f64 },
}

/// Truncation request attached to a law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Truncation {
    None,
    /// Right cut at `b`; the left cut is determined by the zero-mean
    /// condition.
    AtB(f64),
    /// Explicit window (a, b): the variable is X·1{−a < X < b}.
    Window(f64, f64),
}

/// A zero-mean input law plus an optional truncation window.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSpec {
    pub kind: LawKind,
    pub trunc: Truncation,
}

/// Moment summary of one law (or of `n` i.i.d. copies when `n` is set).
///
/// `beta2/beta3/tbeta4/tbeta6` are the summed functionals
/// Σ E X_i², Σ E|X_i|³, Σ E|X_i²−EX_i²|², Σ E|X_i²−EX_i²|³; the `r_p` are
/// the reduced quantities after normalizing to β₂ = 1. For i.i.d.-built
/// summaries the per-variable `rho` fields are populated, otherwise NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary {
    pub beta2: f64,
    pub beta3: f64,
    pub tbeta4: f64,
    pub tbeta6: f64,
    pub n: Option<u64>,
    pub rho3: f64,
    pub rho4: f64,
    pub rho6: f64,
    pub r3: f64,
    pub r4: f64,
    pub r6: f64,
}

impl MomentSummary {
    /// Summary of `n` i.i.d. copies of a unit-variance law.
    pub fn from_iid(rho3: f64, rho4: f64, rho6: f64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be >= 1".into()));
        }
        if !(rho3 > 0.0) || rho4 < 0.0 || rho6 < 0.0 {
            return Err(Error::DegenerateMoments(format!(
                "need rho3 > 0, rho4 >= 0, rho6 >= 0, got ({rho3}, {rho4}, {rho6})"
            )));
        }
        let nf = n as f64;
        Ok(Self::build(
            nf,
            nf * rho3,
            nf * rho4 * rho4,
            nf * rho6 * rho3,
            Some(n),
            rho3,
            rho4,
            rho6,
        ))
    }

    /// Summary from already-summed functionals (the general non-identical
    /// path); the per-variable `rho` fields stay NaN.
    pub fn from_sums(beta2: f64, beta3: f64, tbeta4: f64, tbeta6: f64) -> Result<Self> {
        if !(beta2 > 0.0) || !(beta3 > 0.0) {
            return Err(Error::DegenerateMoments(format!(
                "beta2 and beta3 must be positive, got ({beta2}, {beta3})"
            )));
        }
        if tbeta4 < 0.0 || tbeta6 < 0.0 {
            return Err(Error::DegenerateMoments(
                "tbeta4 and tbeta6 must be nonnegative".into(),
            ));
        }
        Ok(Self::build(
            beta2,
            beta3,
            tbeta4,
            tbeta6,
            None,
            f64::NAN,
            f64::NAN,
            f64::NAN,
        ))
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        beta2: f64,
        beta3: f64,
        tbeta4: f64,
        tbeta6: f64,
        n: Option<u64>,
        rho3: f64,
        rho4: f64,
        rho6: f64,
    ) -> Self {
        // reduced quantities at the beta2 = 1 normalization
        let r3 = beta3 / beta2.powf(1.5);
        let r4 = tbeta4.sqrt() / beta2;
        let r6 = tbeta6 * beta2.powf(1.5) / (beta3 * beta3 * beta3);
        Self {
            beta2,
            beta3,
            tbeta4,
            tbeta6,
            n,
            rho3,
            rho4,
            rho6,
            r3,
            r4,
            r6,
        }
    }
}

/// Per-variable unit-variance moment triple, before a sample size is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoTriple {
    pub rho3: f64,
    pub rho4: f64,
    pub rho6: f64,
}

impl RhoTriple {
    pub fn with_n(&self, n: u64) -> Result<MomentSummary> {
        MomentSummary::from_iid(self.rho3, self.rho4, self.rho6, n)
    }
}

/// Truncated second/third moment functionals entering the Shao bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaFunctionals {
    pub gamma2: f64,
    pub gamma3: f64,
}

// ---------------------------------------------------------------------------
// Two-point law.
// ---------------------------------------------------------------------------

/// Closed-form moments of the zero-mean unit-variance two-point law
/// P(X = b) = 1/(1+b²), P(X = −1/b) = b²/(1+b²), `b ≥ 1`:
/// ρ₃ = (b⁴+1)/(b(b²+1)), ρ₄ = b − 1/b, ρ₆ = (b − 1/b)³.
pub fn two_point_moments(b: f64) -> Result<RhoTriple> {
    if !(b >= 1.0) {
        return Err(Error::Domain(format!(
            "two-point law requires b >= 1 (normalize with 1/b upstream), got {b}"
        )));
    }
    let rho3 = (b.powi(4) + 1.0) / (b * (b * b + 1.0));
    let rho4 = b - 1.0 / b;
    Ok(RhoTriple {
        rho3,
        rho4,
        rho6: rho4.powi(3),
    })
}

fn two_point_atoms(b: f64) -> [(f64, f64); 2] {
    let p_pos = 1.0 / (1.0 + b * b);
    [(b, p_pos), (-1.0 / b, 1.0 - p_pos)]
}

// ---------------------------------------------------------------------------
// Continuous laws: densities, variances, divergence orders.
// ---------------------------------------------------------------------------

struct ContinuousLaw {
    /// Raw density.
    pdf: Box<dyn Fn(f64) -> f64>,
    /// Left support endpoint (−∞ for Student).
    support_lo: f64,
    /// Raw variance.
    variance: f64,
}

/// Smallest moment order in {2, 3, 4, 6} whose absolute moment diverges,
/// given the tail index (`d` for Student, `s` for Pareto: E|X|^k finite iff
/// k < index).
fn failing_order(tail_index: f64) -> Option<u32> {
    [2u32, 3, 4, 6]
        .into_iter()
        .find(|&order| tail_index <= order as f64)
}

fn continuous_law(kind: &LawKind) -> Result<ContinuousLaw> {
    match kind {
        LawKind::Student { d } => {
            let d = *d;
            if !(d > 0.0) {
                return Err(Error::Domain(format!(
                    "student law requires d > 0, got {d}"
                )));
            }
            let variance = if d > 2.0 {
                d / (d - 2.0)
            } else {
                f64::INFINITY
            };
            Ok(ContinuousLaw {
                pdf: Box::new(move |x| student_pdf(x, d)),
                support_lo: f64::NEG_INFINITY,
                variance,
            })
        }
        LawKind::Pareto { s } => {
            let s = *s;
            if !(s > 1.0) {
                return Err(Error::Domain(format!("pareto law requires s > 1, got {s}")));
            }
            let mu = s / (s - 1.0);
            let lo = -1.0 / (s - 1.0);
            let variance = if s > 2.0 {
                s / ((s - 2.0) * (s - 1.0) * (s - 1.0))
            } else {
                f64::INFINITY
            };
            Ok(ContinuousLaw {
                pdf: Box::new(move |x| {
                    if x > lo {
                        s * (x + mu).powf(-s - 1.0)
                    } else {
                        0.0
                    }
                }),
                support_lo: lo,
                variance,
            })
        }
        _ => Err(Error::Contract("not a continuous law".into())),
    }
}

fn law_name(kind: &LawKind) -> String {
    match kind {
        LawKind::TwoPoint { b } => format!("two-point(b={b})"),
        LawKind::Student { d } => format!("student(d={d})"),
        LawKind::Pareto { s } => format!("pareto(s={s})"),
        LawKind::Sample { values } => format!("sample({} values)", values.len()),
        LawKind::Moments { .. } => "moments".to_string(),
    }
}

fn tail_index(kind: &LawKind) -> Option<f64> {
    match kind {
        LawKind::Student { d } => Some(*d),
        LawKind::Pareto { s } => Some(*s),
        _ => None,
    }
}

/// Integral of `g·pdf` over `(lo, hi) ∩ support`, splitting at the given
/// interior points (kinks of `g`).
fn law_integral(
    law: &ContinuousLaw,
    g: impl Fn(f64) -> f64 + Copy,
    lo: f64,
    hi: f64,
    splits: &[f64],
) -> f64 {
    let lo = lo.max(law.support_lo);
    if lo >= hi {
        return 0.0;
    }
    let f = |x: f64| g(x) * (law.pdf)(x);
    let mut pts: Vec<f64> = splits
        .iter()
        .copied()
        .filter(|&p| p > lo && p < hi && p.is_finite())
        .collect();
    pts.sort_by(f64::total_cmp);
    pts.dedup();

    let mut total = 0.0;
    let mut cur = lo;
    for p in pts {
        total += segment_integral(&f, cur, p);
        cur = p;
    }
    total += segment_integral(&f, cur, hi);
    total
}

/// One smooth segment, either finite or with an infinite endpoint.
fn segment_integral(f: &(impl Fn(f64) -> f64 + Copy), lo: f64, hi: f64) -> f64 {
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => integrate(f, lo, hi, QUAD_TOL),
        (true, false) => integrate_from(*f, lo, QUAD_TOL),
        (false, true) => {
            // mirror onto a right tail
            let g = move |x: f64| f(-x);
            integrate_from(g, -hi, QUAD_TOL)
        }
        (false, false) => {
            let g = move |x: f64| f(-x);
            integrate(f, -1.0, 1.0, QUAD_TOL)
                + integrate_tail(*f, 1.0, QUAD_TOL)
                + integrate_tail(g, 1.0, QUAD_TOL)
        }
    }
}

/// Normalized moment triple of a continuous law restricted to the window
/// `(−a, b)` in raw units (`±∞` for no cut), plus the kept probability mass.
fn continuous_window_moments(law: &ContinuousLaw, a: f64, b: f64) -> Result<(RhoTriple, f64)> {
    let (lo, hi) = (-a, b);
    let keep = law_integral(law, |_| 1.0, lo, hi, &[0.0]);
    let sigma2 = law_integral(law, |x| x * x, lo, hi, &[0.0]);
    if !(sigma2 > 0.0) {
        return Err(Error::DegenerateMoments(
            "truncated law has zero variance".into(),
        ));
    }
    let sigma = sigma2.sqrt();
    let m3 = law_integral(law, |x| x.abs().powi(3), lo, hi, &[0.0]);
    let m4 = law_integral(
        law,
        |x| {
            let y = x * x - sigma2;
            y * y
        },
        lo,
        hi,
        &[0.0],
    );
    let m6 = law_integral(
        law,
        |x| (x * x - sigma2).abs().powi(3),
        lo,
        hi,
        &[-sigma, 0.0, sigma],
    );
    let rho3 = m3 / (sigma2 * sigma);
    let rho4 = m4.sqrt() / sigma2;
    let rho6 = m6 / (sigma2 * sigma * m3);
    Ok((RhoTriple { rho3, rho4, rho6 }, keep))
}

// ---------------------------------------------------------------------------
// Spec-level operations.
// ---------------------------------------------------------------------------

/// Moments of an untruncated built-in continuous law (or the closed-form
/// two-point values), variance-normalized, quadrature tolerance 1e−9.
pub fn analytic_moments(spec: &DistributionSpec) -> Result<RhoTriple> {
    if spec.trunc != Truncation::None {
        return Err(Error::Contract(
            "analytic_moments expects an untruncated spec".into(),
        ));
    }
    match &spec.kind {
        LawKind::TwoPoint { b } => two_point_moments(*b),
        LawKind::Moments { rho3, rho4, rho6 } => Ok(RhoTriple {
            rho3: *rho3,
            rho4: *rho4,
            rho6: *rho6,
        }),
        LawKind::Sample { values } => empirical_moments(values),
        LawKind::Student { .. } | LawKind::Pareto { .. } => {
            let idx = tail_index(&spec.kind).expect("continuous law");
            if let Some(order) = failing_order(idx) {
                return Err(Error::MomentDiverges {
                    order,
                    law: law_name(&spec.kind),
                });
            }
            let law = continuous_law(&spec.kind)?;
            let (rho, _keep) = continuous_window_moments(&law, f64::INFINITY, f64::INFINITY)?;
            Ok(rho)
        }
    }
}

/// Plug-in moment estimates from an i.i.d. sample, after studentizing to
/// mean 0 and variance 1.
pub fn empirical_moments(values: &[f64]) -> Result<RhoTriple> {
    if values.is_empty() {
        return Err(Error::DegenerateSample("empty sample".into()));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    if !(var > 0.0) {
        return Err(Error::DegenerateSample(format!(
            "sample variance is zero ({} values)",
            values.len()
        )));
    }
    let sd = var.sqrt();
    let (mut m3, mut m4, mut m6) = (0.0, 0.0, 0.0);
    for v in values {
        let x = (v - mean) / sd;
        m3 += x.abs().powi(3);
        let y = x * x - 1.0;
        m4 += y * y;
        m6 += y.abs().powi(3);
    }
    m3 /= n;
    m4 /= n;
    m6 /= n;
    Ok(RhoTriple {
        rho3: m3,
        rho4: m4.sqrt(),
        rho6: m6 / m3,
    })
}

/// Left cut `a` making `X·1{−a < X < b}` zero-mean: `a = b` for symmetric
/// laws, bisection on the windowed mean for the Pareto law.
pub fn zero_mean_truncation_find_a(spec: &DistributionSpec, b: f64) -> Result<f64> {
    if !(b > 0.0) {
        return Err(Error::Domain(format!(
            "truncation point b must be > 0, got {b}"
        )));
    }
    match &spec.kind {
        LawKind::Student { .. } => Ok(b),
        LawKind::TwoPoint { b: atom } if *atom == 1.0 => Ok(b),
        LawKind::Pareto { s } => {
            if b == f64::INFINITY {
                return Ok(f64::INFINITY);
            }
            let law = continuous_law(&spec.kind)?;
            let mean_in = |a: f64| law_integral(&law, |x| x, -a, b, &[0.0]);
            let eps = 1e-12;
            let mut lo = eps;
            let mut hi = 1.0 / (s - 1.0) - eps;
            let (mlo, mhi) = (mean_in(lo), mean_in(hi));
            if !(mlo > 0.0 && mhi < 0.0) {
                return Err(Error::InfeasibleTruncation(format!(
                    "no zero-mean left cut for pareto(s={s}) with b={b}"
                )));
            }
            let scale = law.variance.sqrt().max(1.0);
            let mut a = 0.5 * (lo + hi);
            for _ in 0..200 {
                a = 0.5 * (lo + hi);
                let m = mean_in(a);
                if m.abs() <= 1e-12 * scale {
                    return Ok(a);
                }
                if m > 0.0 {
                    lo = a;
                } else {
                    hi = a;
                }
            }
            Ok(a)
        }
        _ => Err(Error::InfeasibleTruncation(format!(
            "zero-mean truncation needs a continuous or symmetric law, got {}",
            law_name(&spec.kind)
        ))),
    }
}

/// Moments of the zero-mean truncation `X·1{−a < X < b}` (normalized to
/// unit variance) and the kept mass P(−a < X < b). The window must be
/// zero-mean within 1e−10 of the law's scale.
pub fn truncated_moments(spec: &DistributionSpec, a: f64, b: f64) -> Result<(RhoTriple, f64)> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::Domain(format!(
            "truncation window needs a > 0 and b > 0, got ({a}, {b})"
        )));
    }
    match &spec.kind {
        LawKind::TwoPoint { b: atom } => {
            let atoms = two_point_atoms(*atom);
            let kept: Vec<(f64, f64)> = atoms
                .iter()
                .copied()
                .filter(|&(x, _)| -a < x && x < b)
                .collect();
            let keep: f64 = kept.iter().map(|&(_, p)| p).sum();
            let mean: f64 = kept.iter().map(|&(x, p)| x * p).sum();
            if mean.abs() > 1e-10 {
                return Err(Error::Contract(format!(
                    "window (−{a}, {b}) cuts an atom of {}: truncated mean {mean} ≠ 0",
                    law_name(&spec.kind)
                )));
            }
            let sigma2: f64 = kept.iter().map(|&(x, p)| x * x * p).sum();
            if !(sigma2 > 0.0) {
                return Err(Error::DegenerateMoments(
                    "window removes the whole two-point support".into(),
                ));
            }
            let sigma = sigma2.sqrt();
            let m3: f64 = kept.iter().map(|&(x, p)| x.abs().powi(3) * p).sum();
            let m4: f64 = kept
                .iter()
                .map(|&(x, p)| {
                    let y = x * x - sigma2;
                    y * y * p
                })
                .sum();
            let m6: f64 = kept
                .iter()
                .map(|&(x, p)| (x * x - sigma2).abs().powi(3) * p)
                .sum();
            Ok((
                RhoTriple {
                    rho3: m3 / (sigma2 * sigma),
                    rho4: m4.sqrt() / sigma2,
                    rho6: m6 / (sigma2 * sigma * m3),
                },
                keep,
            ))
        }
        LawKind::Student { .. } | LawKind::Pareto { .. } => {
            let law = continuous_law(&spec.kind)?;
            // a window leaving an unbounded tail inherits its divergences
            let tail_open = b.is_infinite() || (a.is_infinite() && law.support_lo.is_infinite());
            if tail_open {
                if let Some(order) = failing_order(tail_index(&spec.kind).unwrap()) {
                    return Err(Error::MomentDiverges {
                        order,
                        law: law_name(&spec.kind),
                    });
                }
            }
            let mean = law_integral(&law, |x| x, -a, b, &[0.0]);
            let scale = if law.variance.is_finite() {
                law.variance.sqrt()
            } else {
                1.0
            };
            if mean.abs() > 1e-10 * scale.max(1.0) {
                return Err(Error::Contract(format!(
                    "window (−{a}, {b}) is not zero-mean for {} (mean {mean:e})",
                    law_name(&spec.kind)
                )));
            }
            continuous_window_moments(&law, a, b)
        }
        _ => Err(Error::Contract(format!(
            "truncation is not defined for {}",
            law_name(&spec.kind)
        ))),
    }
}

/// γ₂ and γ₃ for `n` i.i.d. copies of the (possibly truncated) law; the
/// threshold √β₂/2 uses the law actually in effect, truncated variance
/// included.
pub fn gamma_functionals(spec: &DistributionSpec, n: u64) -> Result<GammaFunctionals> {
    if n == 0 {
        return Err(Error::Domain("gamma functionals need n >= 1".into()));
    }
    let nf = n as f64;
    let window = spec.resolved_window()?;
    match &spec.kind {
        LawKind::TwoPoint { b } => {
            let atoms: Vec<(f64, f64)> = two_point_atoms(*b)
                .iter()
                .copied()
                .filter(|&(x, _)| match window {
                    Some((a, bb)) => -a < x && x < bb,
                    None => true,
                })
                .collect();
            if let Some((a, bb)) = window {
                let mean: f64 = atoms.iter().map(|&(x, p)| x * p).sum();
                if mean.abs() > 1e-10 {
                    return Err(Error::Contract(format!(
                        "window (−{a}, {bb}) cuts an atom: truncated mean {mean} ≠ 0"
                    )));
                }
            }
            let sigma2: f64 = atoms.iter().map(|&(x, p)| x * x * p).sum();
            if !(sigma2 > 0.0) {
                return Err(Error::DegenerateMoments("empty truncated support".into()));
            }
            let tau = (nf * sigma2).sqrt() / 2.0;
            let beta2 = nf * sigma2;
            let g2: f64 = atoms
                .iter()
                .filter(|&&(x, _)| x.abs() > tau)
                .map(|&(x, p)| x * x * p)
                .sum::<f64>()
                * nf
                / beta2;
            let g3: f64 = atoms
                .iter()
                .filter(|&&(x, _)| x.abs() <= tau)
                .map(|&(x, p)| x.abs().powi(3) * p)
                .sum::<f64>()
                * nf
                / beta2.powf(1.5);
            Ok(GammaFunctionals {
                gamma2: g2,
                gamma3: g3,
            })
        }
        LawKind::Sample { values } => {
            let rho = empirical_moments(values)?;
            let _ = rho;
            let m = values.len() as f64;
            let mean = values.iter().sum::<f64>() / m;
            let sigma2 = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / m;
            let tau = (nf * sigma2).sqrt() / 2.0;
            let beta2 = nf * sigma2;
            let mut g2 = 0.0;
            let mut g3 = 0.0;
            for v in values {
                let x = v - mean;
                if x.abs() > tau {
                    g2 += x * x / m;
                } else {
                    g3 += x.abs().powi(3) / m;
                }
            }
            Ok(GammaFunctionals {
                gamma2: g2 * nf / beta2,
                gamma3: g3 * nf / beta2.powf(1.5),
            })
        }
        LawKind::Student { .. } | LawKind::Pareto { .. } => {
            let idx = tail_index(&spec.kind).unwrap();
            let (a, b) = window.unwrap_or((f64::INFINITY, f64::INFINITY));
            let law = continuous_law(&spec.kind)?;
            let tail_open = b.is_infinite() || (a.is_infinite() && law.support_lo.is_infinite());
            if tail_open && idx <= 2.0 {
                return Err(Error::MomentDiverges {
                    order: 2,
                    law: law_name(&spec.kind),
                });
            }
            let sigma2 = law_integral(&law, |x| x * x, -a, b, &[0.0]);
            let tau = (nf * sigma2).sqrt() / 2.0;
            let beta2 = nf * sigma2;
            // regions clipped to the window; the zero atom contributes 0
            let g2_raw = law_integral(&law, |x| x * x, -a, (-tau).min(b), &[])
                + law_integral(&law, |x| x * x, tau.max(-a), b, &[]);
            let g3_raw = law_integral(
                &law,
                |x| x.abs().powi(3),
                (-tau).max(-a),
                tau.min(b),
                &[0.0],
            );
            Ok(GammaFunctionals {
                gamma2: g2_raw * nf / beta2,
                gamma3: g3_raw * nf / beta2.powf(1.5),
            })
        }
        LawKind::Moments { .. } => Err(Error::Contract(
            "gamma functionals need a concrete law, not a moment summary".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// DistributionSpec: construction, parsing, dispatch, sampling.
// ---------------------------------------------------------------------------

impl DistributionSpec {
    pub fn two_point(b: f64) -> Self {
        Self {
            kind: LawKind::TwoPoint { b },
            trunc: Truncation::None,
        }
    }

    pub fn student(d: f64) -> Self {
        Self {
            kind: LawKind::Student { d },
            trunc: Truncation::None,
        }
    }

    pub fn pareto(s: f64) -> Self {
        Self {
            kind: LawKind::Pareto { s },
            trunc: Truncation::None,
        }
    }

    /// Sample law; values are mean-shifted to zero on ingestion.
    pub fn sample(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DegenerateSample("empty sample".into()));
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        Ok(Self {
            kind: LawKind::Sample {
                values: values.into_iter().map(|v| v - mean).collect(),
            },
            trunc: Truncation::None,
        })
    }

    pub fn with_truncation(mut self, trunc: Truncation) -> Self {
        self.trunc = trunc;
        self
    }

    /// The truncation window in effect, with the left cut resolved by the
    /// zero-mean condition when only `b` was given.
    pub fn resolved_window(&self) -> Result<Option<(f64, f64)>> {
        match self.trunc {
            Truncation::None => Ok(None),
            Truncation::Window(a, b) => Ok(Some((a, b))),
            Truncation::AtB(b) => {
                let a = zero_mean_truncation_find_a(self, b)?;
                Ok(Some((a, b)))
            }
        }
    }

    /// Unit-variance moment triple of the law in effect (after truncation)
    /// plus the kept probability mass.
    pub fn rho_moments(&self) -> Result<(RhoTriple, f64)> {
        match self.resolved_window()? {
            None => Ok((analytic_moments(self)?, 1.0)),
            Some((a, b)) => {
                if a.is_infinite() && b.is_infinite() {
                    let untrunc = Self {
                        kind: self.kind.clone(),
                        trunc: Truncation::None,
                    };
                    return Ok((analytic_moments(&untrunc)?, 1.0));
                }
                truncated_moments(self, a, b)
            }
        }
    }

    /// Moment summary for `n` i.i.d. copies plus the kept mass.
    pub fn iid_summary(&self, n: u64) -> Result<(MomentSummary, f64)> {
        let (rho, keep) = self.rho_moments()?;
        Ok((rho.with_n(n)?, keep))
    }

    /// Raw standard deviation of the untruncated law when finite.
    pub fn raw_sd(&self) -> Option<f64> {
        match &self.kind {
            LawKind::TwoPoint { .. } | LawKind::Moments { .. } => Some(1.0),
            LawKind::Sample { values } => {
                let n = values.len() as f64;
                let m = values.iter().sum::<f64>() / n;
                let v = values.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / n;
                (v > 0.0).then(|| v.sqrt())
            }
            LawKind::Student { d } => (*d > 2.0).then(|| (d / (d - 2.0)).sqrt()),
            LawKind::Pareto { s } => {
                (*s > 2.0).then(|| (s / ((s - 2.0) * (s - 1.0) * (s - 1.0))).sqrt())
            }
        }
    }

    /// Can [`Self::sample_at`] draw from this spec?
    pub fn supports_sampling(&self) -> bool {
        !matches!(self.kind, LawKind::Moments { .. })
    }

    /// Inverse-CDF draw at stream position `counter` (raw scale). Draws from
    /// a truncated spec return 0 outside the window.
    pub fn sample_at(&self, rng: &CounterRng, counter: u64) -> Result<f64> {
        let u = rng.uniform_at(counter);
        let x = match &self.kind {
            LawKind::TwoPoint { b } => {
                let p_pos = 1.0 / (1.0 + b * b);
                if u < p_pos {
                    *b
                } else {
                    -1.0 / b
                }
            }
            LawKind::Student { d } => student_quantile(u, *d)?,
            LawKind::Pareto { s } => {
                let mu = s / (s - 1.0);
                (1.0 - u).powf(-1.0 / s) - mu
            }
            LawKind::Sample { values } => {
                let idx = ((u * values.len() as f64) as usize).min(values.len() - 1);
                values[idx]
            }
            LawKind::Moments { .. } => {
                return Err(Error::Contract(
                    "a moments-only spec cannot be sampled".into(),
                ))
            }
        };
        Ok(match self.resolved_window()? {
            Some((a, b)) if !(-a < x && x < b) => 0.0,
            _ => x,
        })
    }

    /// Parse the spec grammar:
    /// `two-point:b=<real>` | `student:d=<real>` | `pareto:s=<real>` |
    /// `sample:<path>` | `moments:rho3=..,rho4=..,rho6=..`, with an optional
    /// suffix `|trunc:b=<real>` or `|trunc:a=<real>,b=<real>`.
    pub fn parse(text: &str) -> Result<Self> {
        let (law_part, trunc_part) = match text.split_once('|') {
            Some((l, t)) => (l, Some(t)),
            None => (text, None),
        };
        let mut spec = Self::parse_law(law_part.trim())?;
        if let Some(t) = trunc_part {
            spec.trunc = Self::parse_trunc(t.trim())?;
        }
        Ok(spec)
    }

    fn parse_law(text: &str) -> Result<Self> {
        let (head, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("malformed distribution spec `{text}`")))?;
        match head {
            "two-point" => Ok(Self::two_point(parse_kv(rest, "b")?)),
            "student" => Ok(Self::student(parse_kv(rest, "d")?)),
            "pareto" => Ok(Self::pareto(parse_kv(rest, "s")?)),
            "sample" => {
                let content = std::fs::read_to_string(rest)
                    .map_err(|e| Error::Io(format!("cannot read sample file `{rest}`: {e}")))?;
                let mut values = Vec::new();
                for (i, line) in content.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    values.push(line.parse::<f64>().map_err(|_| {
                        Error::Parse(format!("sample file `{rest}` line {}: `{line}`", i + 1))
                    })?);
                }
                Self::sample(values)
            }
            "moments" => {
                let mut rho3 = None;
                let mut rho4 = None;
                let mut rho6 = None;
                for item in rest.split(',') {
                    let (k, v) = item
                        .split_once('=')
                        .ok_or_else(|| Error::Parse(format!("malformed moments field `{item}`")))?;
                    let v: f64 = parse_real(v)?;
                    match k.trim() {
                        "rho3" => rho3 = Some(v),
                        "rho4" => rho4 = Some(v),
                        "rho6" => rho6 = Some(v),
                        other => {
                            return Err(Error::Parse(format!("unknown moments field `{other}`")))
                        }
                    }
                }
                match (rho3, rho4, rho6) {
                    (Some(rho3), Some(rho4), Some(rho6)) => Ok(Self {
                        kind: LawKind::Moments { rho3, rho4, rho6 },
                        trunc: Truncation::None,
                    }),
                    _ => Err(Error::Parse(
                        "moments spec needs rho3=..,rho4=..,rho6=..".into(),
                    )),
                }
            }
            other => Err(Error::Parse(format!("unknown distribution kind `{other}`"))),
        }
    }

    fn parse_trunc(text: &str) -> Result<Truncation> {
        let rest = text
            .strip_prefix("trunc:")
            .ok_or_else(|| Error::Parse(format!("malformed truncation suffix `{text}`")))?;
        let fields: Vec<&str> = rest.split(',').collect();
        match fields.as_slice() {
            [b] => Ok(Truncation::AtB(parse_kv(b, "b")?)),
            [a, b] => Ok(Truncation::Window(parse_kv(a, "a")?, parse_kv(b, "b")?)),
            _ => Err(Error::Parse(format!("malformed truncation `{text}`"))),
        }
    }

    /// Short display used in CSV rows.
    pub fn describe(&self) -> String {
        let law = law_name(&self.kind);
        match self.trunc {
            Truncation::None => law,
            Truncation::AtB(b) => format!("{law}|trunc:b={b}"),
            Truncation::Window(a, b) => format!("{law}|trunc:a={a},b={b}"),
        }
    }
}

fn parse_kv(text: &str, key: &str) -> Result<f64> {
    let (k, v) = text
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("expected `{key}=<real>`, got `{text}`")))?;
    if k.trim() != key {
        return Err(Error::Parse(format!("expected key `{key}`, got `{k}`")));
    }
    parse_real(v)
}

fn parse_real(v: &str) -> Result<f64> {
    let v = v.trim();
    match v {
        "inf" | "+inf" | "infinity" => Ok(f64::INFINITY),
        _ => v
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("not a real number: `{v}`"))),
    }
}

/// E|Y|^k for the raw (unnormalized) Student law, k < d. Used by tests as a
/// closed-form cross-check of the quadrature route.
pub fn student_abs_moment(k: f64, d: f64) -> f64 {
    (0.5 * k * d.ln() + ln_gamma(0.5 * (k + 1.0)) + ln_gamma(0.5 * (d - k))
        - 0.5 * std::f64::consts::PI.ln()
        - ln_gamma(0.5 * d))
    .exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn two_point_closed_forms() {
        let r = two_point_moments(1.0).unwrap();
        assert_eq!((r.rho3, r.rho4, r.rho6), (1.0, 0.0, 0.0));
        let r = two_point_moments(2.0).unwrap();
        assert!(close(r.rho3, 1.7, 1e-15));
        assert!(close(r.rho4, 1.5, 1e-15));
        assert!(close(r.rho6, 3.375, 1e-15));
        let r = two_point_moments(469.0).unwrap();
        assert!(close(r.rho3, 468.99786782322490, 1e-13), "{}", r.rho3);
        assert!(two_point_moments(0.9).is_err());
    }

    #[test]
    fn two_point_matches_pmf_enumeration() {
        // brute-force expectation over the two atoms
        for b in [1.0, 1.5, 2.0, 10.0, 469.0] {
            let r = two_point_moments(b).unwrap();
            let atoms = two_point_atoms(b);
            let e = |g: &dyn Fn(f64) -> f64| atoms.iter().map(|&(x, p)| g(x) * p).sum::<f64>();
            let ex2 = e(&|x| x * x);
            assert!(close(ex2, 1.0, 1e-12), "EX2 {ex2}");
            let m3 = e(&|x| x.abs().powi(3));
            let m4 = e(&|x| (x * x - 1.0) * (x * x - 1.0));
            let m6 = e(&|x| (x * x - 1.0).abs().powi(3));
            assert!((r.rho3 - m3).abs() <= 1e-12 * m3.abs());
            assert!((r.rho4 - m4.sqrt()).abs() <= 1e-12 * m4.sqrt().max(1e-300));
            assert!((r.rho6 - m6 / m3).abs() <= 1e-12 * (m6 / m3).max(1e-300));
        }
    }

    #[test]
    fn student_moments_match_closed_forms() {
        let d = 10.0;
        let rho = analytic_moments(&DistributionSpec::student(d)).unwrap();
        let c = (d / (d - 2.0)).sqrt();
        let rho3_cf = student_abs_moment(3.0, d) / c.powi(3);
        let rho4_cf = ((2.0 * d - 2.0) / (d - 4.0)).sqrt();
        assert!(close(rho.rho3, rho3_cf, 1e-9), "{} vs {rho3_cf}", rho.rho3);
        assert!(close(rho.rho4, rho4_cf, 1e-9), "{} vs {rho4_cf}", rho.rho4);
        // rho6 numerator via the independent route: the polynomial part in
        // closed form plus a bounded Simpson correction,
        // E|X²−1|³ = E(X²−1)³ + 2·E(1−X²)³·1{|X|<1}
        let ex4 = 3.0 * (d - 2.0) / (d - 4.0);
        let ex6 = 15.0 * (d - 2.0) * (d - 2.0) / ((d - 4.0) * (d - 6.0));
        let signed = ex6 - 3.0 * ex4 + 3.0 - 1.0;
        let law = continuous_law(&LawKind::Student { d }).unwrap();
        let fx = |x: f64| (law.pdf)(x * c) * c;
        let correction = crate::quad::simpson(|x| (1.0 - x * x).powi(3) * fx(x), -1.0, 1.0, 40_000);
        let rho6_cf = (signed + 2.0 * correction) / rho3_cf;
        assert!(close(rho.rho6, rho6_cf, 1e-8), "{} vs {rho6_cf}", rho.rho6);
    }

    #[test]
    fn student_normal_limit() {
        // d -> infinity approaches the normal law
        let rho = analytic_moments(&DistributionSpec::student(1e6)).unwrap();
        assert!(close(rho.rho3, 1.5957691216057307, 1e-5), "{}", rho.rho3);
        assert!(
            close(rho.rho4, std::f64::consts::SQRT_2, 1e-5),
            "{}",
            rho.rho4
        );
        assert!(close(rho.rho6, 5.4466293306764117, 1e-4), "{}", rho.rho6);
    }

    #[test]
    fn student_divergence_orders() {
        let err = analytic_moments(&DistributionSpec::student(5.0)).unwrap_err();
        assert_eq!(
            err,
            Error::MomentDiverges {
                order: 6,
                law: "student(d=5)".into()
            }
        );
        let err = analytic_moments(&DistributionSpec::student(3.5)).unwrap_err();
        assert!(matches!(err, Error::MomentDiverges { order: 4, .. }));
        let err = analytic_moments(&DistributionSpec::student(2.0)).unwrap_err();
        assert!(matches!(err, Error::MomentDiverges { order: 2, .. }));
    }

    #[test]
    fn pareto_moments_match_reference() {
        // 40-digit quadrature reference for s = 8
        let rho = analytic_moments(&DistributionSpec::pareto(8.0)).unwrap();
        assert!(close(rho.rho3, 3.41193341614697, 1e-8), "{}", rho.rho3);
        assert!(close(rho.rho4, 4.66100847456857, 1e-8), "{}", rho.rho4);
        assert!(close(rho.rho6, 1571.92898967269, 1e-7), "{}", rho.rho6);
        // raw-moment cross-check: E(Y^k) = s/(s-k) with Y = X + s/(s-1)
        let law = continuous_law(&LawKind::Pareto { s: 8.0 }).unwrap();
        let mu = 8.0 / 7.0;
        for k in 1..=6 {
            let got = law_integral(&law, |x| (x + mu).powi(k), -1.0 / 7.0, f64::INFINITY, &[]);
            let want = 8.0 / (8.0 - k as f64);
            assert!(close(got, want, 1e-8), "EY^{k}: {got} vs {want}");
        }
    }

    #[test]
    fn empirical_rademacher_and_two_point() {
        let r = empirical_moments(&[-1.0, 1.0, -1.0, 1.0]).unwrap();
        assert!(close(r.rho3, 1.0, 1e-12));
        assert!(r.rho4.abs() < 1e-7 && r.rho6.abs() < 1e-7);
        // {-1,-1,-1,3} studentizes to the b = sqrt(3) two-point shape
        let r = empirical_moments(&[-1.0, -1.0, -1.0, 3.0]).unwrap();
        let want = two_point_moments(3f64.sqrt()).unwrap();
        assert!(close(r.rho3, want.rho3, 1e-12));
        assert!(close(r.rho4, want.rho4, 1e-12));
        assert!(close(r.rho6, want.rho6, 1e-12));
        assert!(matches!(
            empirical_moments(&[5.0]),
            Err(Error::DegenerateSample(_))
        ));
        assert!(empirical_moments(&[]).is_err());
    }

    #[test]
    fn zero_mean_cut_symmetric_and_pareto() {
        let s = DistributionSpec::student(5.0);
        assert_eq!(zero_mean_truncation_find_a(&s, 3.0).unwrap(), 3.0);
        let p = DistributionSpec::pareto(3.0);
        let a = zero_mean_truncation_find_a(&p, 10.0).unwrap();
        assert!(close(a, 0.492949008980464, 1e-9), "a = {a}");
        assert!(a > 0.0 && a < 0.5);
        // verified zero mean
        let law = continuous_law(&p.kind).unwrap();
        let m = law_integral(&law, |x| x, -a, 10.0, &[0.0]);
        assert!(
            m.abs() <= 1e-12 * law.variance.sqrt().max(1.0),
            "mean {m:e}"
        );
        // identity cut
        assert_eq!(
            zero_mean_truncation_find_a(&s, f64::INFINITY).unwrap(),
            f64::INFINITY
        );
        // non-symmetric two-point is rejected
        let tp = DistributionSpec::two_point(2.0);
        assert!(matches!(
            zero_mean_truncation_find_a(&tp, 3.0),
            Err(Error::InfeasibleTruncation(_))
        ));
    }

    #[test]
    fn truncated_moments_basics() {
        // window covering the whole two-point support changes nothing
        let tp = DistributionSpec::two_point(2.0);
        let (rho, keep) = truncated_moments(&tp, 1.0, 3.0).unwrap();
        let want = two_point_moments(2.0).unwrap();
        assert_eq!(keep, 1.0);
        assert!(close(rho.rho3, want.rho3, 1e-14));
        assert!(close(rho.rho4, want.rho4, 1e-14));
        // window cutting one atom violates the zero-mean contract
        assert!(matches!(
            truncated_moments(&tp, 1.0, 1.5),
            Err(Error::Contract(_))
        ));
        // student(3): truncation makes every functional finite
        let st = DistributionSpec::student(3.0);
        let (rho, keep) = truncated_moments(&st, 5.0, 5.0).unwrap();
        assert!(rho.rho3.is_finite() && rho.rho4.is_finite() && rho.rho6.is_finite());
        assert!(rho.rho3 >= 1.0 - 1e-9);
        assert!(keep > 0.9 && keep < 1.0);
        // untruncated rho4 diverges for d = 3
        assert!(analytic_moments(&st).is_err());
    }

    #[test]
    fn truncated_student_against_simpson_oracle() {
        // independent check of the windowed integrals for student(3), a=b=5
        let d = 3.0;
        let (rho, keep) = truncated_moments(&DistributionSpec::student(d), 5.0, 5.0).unwrap();
        let f = |x: f64| student_pdf(x, d);
        let n = 200_000;
        let keep_o = crate::quad::simpson(f, -5.0, 5.0, n);
        let s2_o = crate::quad::simpson(|x| x * x * f(x), -5.0, 5.0, n);
        let m3_o = crate::quad::simpson(|x| x.abs().powi(3) * f(x), -5.0, 5.0, n);
        let m4_o = crate::quad::simpson(|x| (x * x - s2_o) * (x * x - s2_o) * f(x), -5.0, 5.0, n);
        let m6_o = crate::quad::simpson(|x| (x * x - s2_o).abs().powi(3) * f(x), -5.0, 5.0, n);
        assert!(close(keep, keep_o, 1e-9), "{keep} vs {keep_o}");
        assert!(close(rho.rho3, m3_o / s2_o.powf(1.5), 1e-7));
        assert!(close(rho.rho4, m4_o.sqrt() / s2_o, 1e-7));
        assert!(close(rho.rho6, m6_o / (s2_o.powf(1.5) * m3_o), 1e-6));
    }

    #[test]
    fn keep_prob_monotone_in_window() {
        let st = DistributionSpec::student(4.0);
        let mut last = 1.0;
        for b in [20.0, 10.0, 5.0, 2.0, 1.0, 0.5] {
            let (_, keep) = truncated_moments(&st, b, b).unwrap();
            assert!(keep <= last + 1e-12, "keep not monotone at b={b}");
            last = keep;
        }
    }

    #[test]
    fn normalization_unit_variance() {
        // every built-in spec studentizes to EX^2 = 1 within 1e-9
        let checks: Vec<DistributionSpec> = vec![
            DistributionSpec::two_point(3.0),
            DistributionSpec::student(8.0),
            DistributionSpec::pareto(7.5),
        ];
        for spec in checks {
            if let LawKind::TwoPoint { b } = spec.kind {
                let atoms = two_point_atoms(b);
                let ex2: f64 = atoms.iter().map(|&(x, p)| x * x * p).sum();
                assert!(close(ex2, 1.0, 1e-12));
            } else {
                let law = continuous_law(&spec.kind).unwrap();
                let sd = spec.raw_sd().unwrap();
                let ex2 = law_integral(
                    &law,
                    |x| (x / sd) * (x / sd),
                    f64::NEG_INFINITY,
                    f64::INFINITY,
                    &[0.0],
                );
                assert!(close(ex2, 1.0, 1e-9), "{}: EX2 {ex2}", spec.describe());
            }
        }
    }

    #[test]
    fn lyapunov_on_builtin_grid() {
        // rho3 >= 1, equality only for the symmetric two-point law
        for b in [1.0, 1.2, 2.0, 10.0] {
            let r = two_point_moments(b).unwrap();
            if b == 1.0 {
                assert_eq!(r.rho3, 1.0);
            } else {
                assert!(r.rho3 > 1.0);
            }
        }
        for d in [7.0, 10.0, 30.0] {
            let r = analytic_moments(&DistributionSpec::student(d)).unwrap();
            assert!(r.rho3 > 1.0, "student({d}) rho3 = {}", r.rho3);
        }
        for s in [6.5, 8.0, 20.0] {
            let r = analytic_moments(&DistributionSpec::pareto(s)).unwrap();
            assert!(r.rho3 > 1.0, "pareto({s}) rho3 = {}", r.rho3);
        }
    }

    #[test]
    fn gamma_functionals_two_point() {
        // support {±1} inside the threshold 1.5
        let g = gamma_functionals(&DistributionSpec::two_point(1.0), 9).unwrap();
        assert_eq!(g.gamma2, 0.0);
        assert!(close(g.gamma3, 1.0 / 3.0, 1e-15));
        // b <= sqrt(n)/2 keeps every atom below the threshold
        for (b, n) in [(2.0, 16), (2.0, 100), (3.0, 36)] {
            let g = gamma_functionals(&DistributionSpec::two_point(b), n).unwrap();
            let rho3 = two_point_moments(b).unwrap().rho3;
            assert_eq!(g.gamma2, 0.0);
            assert!(close(g.gamma3, rho3 / (n as f64).sqrt(), 1e-12));
        }
        // n = 1, b = 2: threshold 1/2; the -1/2 atom sits exactly on it and
        // belongs to gamma3 (indicator is <=), the b atom exceeds it
        let g = gamma_functionals(&DistributionSpec::two_point(2.0), 1).unwrap();
        assert!(close(g.gamma2, 0.8, 1e-15), "{}", g.gamma2);
        assert!(close(g.gamma3, 0.1, 1e-15), "{}", g.gamma3);
    }

    #[test]
    fn gamma_split_identity() {
        // gamma3*sqrt(n) + E|X|^3 1{|X|>sqrt(n)/2} = rho3
        let spec = DistributionSpec::student(8.0);
        let n = 25u64;
        let g = gamma_functionals(&spec, n).unwrap();
        let rho3 = analytic_moments(&spec).unwrap().rho3;
        let law = continuous_law(&spec.kind).unwrap();
        let sd = spec.raw_sd().unwrap();
        let tau = sd * (n as f64).sqrt() / 2.0;
        let one_side = law_integral(&law, |x| (x.abs() / sd).powi(3), tau, f64::INFINITY, &[]);
        let tail3 = 2.0 * one_side;
        let got = g.gamma3 * (n as f64).sqrt() + tail3;
        assert!(close(got, rho3, 1e-8), "{got} vs {rho3}");
    }

    #[test]
    fn spec_grammar_roundtrip() {
        let s = DistributionSpec::parse("two-point:b=2").unwrap();
        assert_eq!(s.kind, LawKind::TwoPoint { b: 2.0 });
        let s = DistributionSpec::parse("student:d=8|trunc:b=5").unwrap();
        assert_eq!(s.kind, LawKind::Student { d: 8.0 });
        assert_eq!(s.trunc, Truncation::AtB(5.0));
        let s = DistributionSpec::parse("pareto:s=3|trunc:a=0.4,b=10").unwrap();
        assert_eq!(s.trunc, Truncation::Window(0.4, 10.0));
        let s = DistributionSpec::parse("moments:rho3=1.7,rho4=1.5,rho6=3.375").unwrap();
        assert!(matches!(s.kind, LawKind::Moments { .. }));
        assert!(DistributionSpec::parse("normal:m=0").is_err());
        assert!(DistributionSpec::parse("student:q=8").is_err());
        assert!(DistributionSpec::parse("student:d=oops").is_err());
    }

    #[test]
    fn sampling_matches_laws() {
        let rng = CounterRng::new(7);
        let tp = DistributionSpec::two_point(2.0);
        let mut mean = 0.0;
        let m = 40_000;
        for i in 0..m {
            mean += tp.sample_at(&rng, i).unwrap();
        }
        mean /= m as f64;
        assert!(mean.abs() < 0.02, "two-point sample mean {mean}");
        // student draws pass through the quantile; check the median sign split
        let st = DistributionSpec::student(6.0);
        let neg = (0..2000)
            .filter(|&i| st.sample_at(&rng, i).unwrap() < 0.0)
            .count();
        assert!((neg as f64 / 2000.0 - 0.5).abs() < 0.05);
        // truncated draws land in the window or at 0
        let tr = DistributionSpec::student(6.0).with_truncation(Truncation::AtB(2.0));
        for i in 0..2000 {
            let x = tr.sample_at(&rng, i).unwrap();
            assert!(x.abs() < 2.0 || x == 0.0);
        }
        let mom = DistributionSpec::parse("moments:rho3=1,rho4=0,rho6=0").unwrap();
        assert!(mom.sample_at(&rng, 0).is_err());
    }
}
