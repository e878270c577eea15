//! Command-line front end. Every subcommand is a thin adapter over the
//! library; results are byte-identical to the corresponding direct calls.
//!
//! Exit codes: 0 success, 2 usage error, 1 computation error. All numbers
//! print with 10 significant digits.

use std::io::Write;

use crate::bounds::{
    bound_iid, minimize_truncated_bound, shao_bound, truncated_bound_for, BoundReport, TripleUsed,
    TruncFamily,
};
use crate::constants::{
    ceil_to, combined_constants, default_seeds, optimize_constants, published_row, ConstantTriple,
    ParameterVector, TripleCheck, BE_IID, BE_NONIID, DEFAULT_BUDGET, PUBLISHED_ROWS,
};
use crate::fmt::fmt_sig;
use crate::moments::{gamma_functionals, DistributionSpec, Truncation};
use crate::verify::{
    check_bound_holds, envelope_proof_checks, gap_constant, phi_n_gap, tail_ratio_csv,
    tail_ratio_data, SimResult,
};
use crate::{Error, Result};

pub const USAGE: &str = "senbe — explicit Berry-Esseen bounds for self-normalized sums

USAGE:
  senbe constants [--weights w3,w4,w6] [--be 0.56|0.4785] [--budget N] [--seed-table]
  senbe bound     --dist SPEC --n N (--triple NAME | --A a3,a4,a6)
  senbe truncate  --dist SPEC --n N --triple NAME [--family thm|shao]
  senbe compare   --dist student|pareto --param-range lo:hi:points --n list --out csv
  senbe tails     --n N --z lo:hi:points
  senbe verify    --dist SPEC --n N --samples M --seed S --triple NAME
  senbe selfcheck

DISTRIBUTION SPEC:
  two-point:b=<real> | student:d=<real> | pareto:s=<real> |
  sample:<path> (one real per line) | moments:rho3=..,rho4=..,rho6=..
  optional suffix:  |trunc:b=<real>  or  |trunc:a=<real>,b=<real>

TRIPLE NAMES:
  t1 t2 t3 t4 (general case)  t1iid t2.1iid t3iid t4iid t1iid2 t2iid2 (i.i.d.)
  Named triples resolve to their published constant values.

OUTPUT:
  `bound`/`truncate`/`verify` print a flat key-value block. `compare` emits
  CSV with header dist,param,n,shao,shao_trunc_min,thm,thm_trunc_min; `tails`
  emits CSV with header z,log_ratio_normal,log_ratio_scaled,log_ratio_phi_n,
  note (the phi_n column is empty for z >= sqrt(n), with a note). `selfcheck`
  prints one ok/FAIL line per check and exits nonzero on any failure.

ENVIRONMENT:
  SENBE_THREADS caps simulation workers (results are identical regardless).";

/// Run the CLI on `args` (without the program name), writing to `out`.
/// Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    match dispatch(args, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(out, "usage error: {msg}\n\n{USAGE}");
            2
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(out, "error: {e}");
            1
        }
        Err(CliError::Io) => 1,
    }
}

enum CliError {
    Usage(String),
    Compute(Error),
    Io,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        // malformed user input surfaces as a usage problem
        match e {
            Error::Parse(msg) => CliError::Usage(msg),
            other => CliError::Compute(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(_: std::io::Error) -> Self {
        CliError::Io
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// Parsed flag list: every flag takes one value except boolean `--seed-table`.
struct Flags {
    pairs: Vec<(String, String)>,
    seed_table: bool,
}

impl Flags {
    fn parse(args: &[String], allowed: &[&str], allow_seed_table: bool) -> CliResult<Self> {
        let mut pairs = Vec::new();
        let mut seed_table = false;
        let mut i = 0;
        while i < args.len() {
            let flag = &args[i];
            if !flag.starts_with("--") {
                return usage(format!("expected a flag, got `{flag}`"));
            }
            if flag == "--seed-table" && allow_seed_table {
                seed_table = true;
                i += 1;
                continue;
            }
            let name = &flag[2..];
            if !allowed.contains(&name) {
                return usage(format!("unknown flag `{flag}`"));
            }
            let value = args
                .get(i + 1)
                .ok_or_else(|| CliError::Usage(format!("flag `{flag}` needs a value")))?;
            pairs.push((name.to_string(), value.clone()));
            i += 2;
        }
        Ok(Self { pairs, seed_table })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    fn require(&self, name: &str) -> CliResult<&str> {
        self.get(name)
            .ok_or_else(|| CliError::Usage(format!("missing required flag `--{name}`")))
    }
}

fn parse_f64(what: &str, v: &str) -> CliResult<f64> {
    v.parse::<f64>()
        .map_err(|_| CliError::Usage(format!("{what}: not a real number `{v}`")))
}

fn parse_u64(what: &str, v: &str) -> CliResult<u64> {
    v.parse::<u64>()
        .map_err(|_| CliError::Usage(format!("{what}: not an integer `{v}`")))
}

fn parse_triplet(what: &str, v: &str) -> CliResult<(f64, f64, f64)> {
    let parts: Vec<&str> = v.split(',').collect();
    if parts.len() != 3 {
        return usage(format!("{what}: expected three comma-separated reals"));
    }
    Ok((
        parse_f64(what, parts[0])?,
        parse_f64(what, parts[1])?,
        parse_f64(what, parts[2])?,
    ))
}

/// `lo:hi:points` → inclusive linear grid.
fn parse_range(v: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = v.split(':').collect();
    if parts.len() != 3 {
        return usage(format!("range `{v}` must be lo:hi:points"));
    }
    let lo = parse_f64("range lo", parts[0])?;
    let hi = parse_f64("range hi", parts[1])?;
    let points = parse_u64("range points", parts[2])?;
    if points == 0 || hi < lo {
        return usage(format!("range `{v}` is empty"));
    }
    if points == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect())
}

/// Published-triple lookup; named triples carry their published values.
fn resolve_triple(name: &str) -> CliResult<(TripleUsed, ConstantTriple)> {
    match published_row(name) {
        Some(row) => {
            let t = ConstantTriple::bare(row.published[0], row.published[1], row.published[2]);
            Ok((TripleUsed::named(name, &t), t))
        }
        None => usage(format!(
            "unknown triple `{name}` (expected one of t1 t2 t3 t4 t1iid t2.1iid t3iid t4iid t1iid2 t2iid2)"
        )),
    }
}

fn dispatch(args: &[String], out: &mut dyn Write) -> CliResult<i32> {
    let Some(cmd) = args.first() else {
        return usage("no subcommand given");
    };
    let rest = &args[1..];
    match cmd.as_str() {
        "constants" => cmd_constants(rest, out),
        "bound" => cmd_bound(rest, out),
        "truncate" => cmd_truncate(rest, out),
        "compare" => cmd_compare(rest, out),
        "tails" => cmd_tails(rest, out),
        "verify" => cmd_verify(rest, out),
        "selfcheck" => cmd_selfcheck(rest, out),
        "help" | "--help" | "-h" => {
            writeln!(out, "{USAGE}")?;
            Ok(0)
        }
        other => usage(format!("unknown subcommand `{other}`")),
    }
}

fn cmd_constants(args: &[String], out: &mut dyn Write) -> CliResult<i32> {
    let flags = Flags::parse(args, &["weights", "be", "budget"], true)?;
    let weights = match flags.get("weights") {
        Some(v) => parse_triplet("--weights", v)?,
        None => (1.0, 1.0, 1.0),
    };
    let be = match flags.get("be") {
        Some("0.56") => BE_NONIID,
        Some("0.4785") => BE_IID,
        Some(other) => return usage(format!("--be must be 0.56 or 0.4785, got `{other}`")),
        None => BE_NONIID,
    };
    // --seed-table restricts the search to the reference rows and, unless a
    // budget is given, just reports the best row for these weights
    let budget = match flags.get("budget") {
        Some(v) => parse_u64("--budget", v)?.max(1) as usize,
        None if flags.seed_table => 1,
        None => DEFAULT_BUDGET,
    };
    let seeds: Vec<ParameterVector> = if flags.seed_table {
        let mut s: Vec<ParameterVector> = Vec::new();
        for row in &PUBLISHED_ROWS {
            let p = row.parameter_vector();
            if !s.contains(&p) {
                s.push(p);
            }
        }
        s
    } else {
        default_seeds()
    };
    let res = optimize_constants(weights, be, &seeds, budget).map_err(CliError::Compute)?;
    writeln!(
        out,
        "weights = {},{},{}",
        fmt_sig(weights.0, 10),
        fmt_sig(weights.1, 10),
        fmt_sig(weights.2, 10)
    )?;
    writeln!(out, "be = {}", fmt_sig(be, 10))?;
    writeln!(out, "budget = {budget}")?;
    writeln!(out, "objective = {}", fmt_sig(res.objective, 10))?;
    let p = res.params;
    writeln!(out, "alpha = {}", fmt_sig(p.alpha, 10))?;
    writeln!(out, "eps4 = {}", fmt_sig(p.eps4, 10))?;
    writeln!(out, "eps3 = {}", fmt_sig(p.eps3, 10))?;
    writeln!(out, "eps2 = {}", fmt_sig(p.eps2, 10))?;
    writeln!(out, "kappa = {}", fmt_sig(p.kappa, 10))?;
    writeln!(out, "theta3 = {}", fmt_sig(p.theta3, 10))?;
    writeln!(out, "theta4 = {}", fmt_sig(p.theta4, 10))?;
    let t = res.triple;
    writeln!(
        out,
        "A3 = {} (ceil {})",
        fmt_sig(t.a3, 10),
        ceil_to(t.a3, 2)
    )?;
    writeln!(
        out,
        "A4 = {} (ceil {})",
        fmt_sig(t.a4, 10),
        ceil_to(t.a4, 2)
    )?;
    writeln!(
        out,
        "A6 = {} (ceil {})",
        fmt_sig(t.a6, 10),
        ceil_to(t.a6, 2)
    )?;
    Ok(0)
}

fn cmd_bound(args: &[String], out: &mut dyn Write) -> CliResult<i32> {
    let flags = Flags::parse(args, &["dist", "n", "triple", "A"], false)?;
    let spec = DistributionSpec::parse(flags.require("dist")?)?;
    let n = parse_u64("--n", flags.require("n")?)?;
    let (used, triple) = match (flags.get("triple"), flags.get("A")) {
        (Some(name), None) => resolve_triple(name)?,
        (None, Some(v)) => {
            let (a3, a4, a6) = parse_triplet("--A", v)?;
            let t = ConstantTriple::bare(a3, a4, a6);
            (TripleUsed::named("custom", &t), t)
        }
        _ => return usage("give exactly one of --triple NAME or --A a3,a4,a6"),
    };
    let mut report = build_bound_report(&spec, n, &triple)?;
    report.triple = Some(used);
    report.dist = Some(spec.describe());
    write!(out, "{}", report.to_kv())?;
    Ok(0)
}

/// Untruncated specs get the i.i.d.-form bound; truncated specs get the
/// failure-mass-plus-truncated-moments bound.
fn build_bound_report(
    spec: &DistributionSpec,
    n: u64,
    triple: &ConstantTriple,
) -> Result<BoundReport> {
    match spec.trunc {
        Truncation::None => {
            let (m, _) = spec.iid_summary(n)?;
            let mut r = bound_iid(&m, triple)?;
            r.n = Some(n);
            Ok(r)
        }
        _ => truncated_bound_for(spec, n, triple),
    }
}

fn cmd_truncate(args: &[String], out: &mut dyn Write) -> CliResult<i32> {
    let flags = Flags::parse(args, &["dist", "n", "triple", "family"], false)?;
    let spec = DistributionSpec::parse(flags.require("dist")?)?;
    let n = parse_u64("--n", flags.require("n")?)?;
    let family = match flags.get("family") {
        None | Some("thm") => TruncFamily::Thm,
        Some("shao") => TruncFamily::Shao,
        Some(other) => return usage(format!("--family must be thm or shao, got `{other}`")),
    };
    let (used, triple) = match (family, flags.get("triple")) {
        (TruncFamily::Shao, _) => (None, None),
        (TruncFamily::Thm, Some(name)) => {
            let (u, t) = resolve_triple(name)?;
            (Some(u), Some(t))
        }
        (TruncFamily::Thm, None) => return usage("--family thm needs --triple NAME"),
    };
    let (b_star, mut report) =
        minimize_truncated_bound(&spec, n, triple.as_ref(), family).map_err(CliError::Compute)?;
    report.triple = used;
    writeln!(out, "b_star = {}", fmt_sig(b_star, 10))?;
    write!(out, "{}", report.to_kv())?;
    Ok(0)
}

fn cmd_compare(args: &[String], out: &mut dyn Write) -> CliResult<i32> {
    let flags = Flags::parse(args, &["dist", "param-range", "n", "out"], false)?;
    let dist = flags.require("dist")?;
    if dist != "student" && dist != "pareto" {
        return usage(format!("--dist must be student or pareto, got `{dist}`"));
    }
    match flags.require("out")? {
        "csv" => {}
        other => return usage(format!("--out must be csv, got `{other}`")),
    }
    let params = parse_range(flags.require("param-range")?)?;
    let ns: Vec<u64> = flags
        .require("n")?
        .split(',')
        .map(|v| parse_u64("--n", v))
        .collect::<CliResult<_>>()?;
    // the reference comparison uses the t2 triple's published values
    let (_, triple) = resolve_triple("t2")?;
    let dist_name = dist.to_string();
    writeln!(out, "dist,param,n,shao,shao_trunc_min,thm,thm_trunc_min")?;
    for &p in &params {
        let spec = if dist_name == "student" {
            DistributionSpec::student(p)
        } else {
            DistributionSpec::pareto(p)
        };
        for &n in &ns {
            let shao = gamma_functionals(&spec, n)
                .map(|g| shao_bound(&g).value)
                .unwrap_or(f64::INFINITY);
            let shao_min = minimize_truncated_bound(&spec, n, None, TruncFamily::Shao)
                .map(|(_, r)| r.value)
                .unwrap_or(f64::INFINITY);
            let thm = spec
                .iid_summary(n)
                .and_then(|(m, _)| crate::bounds::bound_noniid(&m, &triple))
                .map(|r| r.value)
                .unwrap_or(f64::INFINITY);
            let thm_min = minimize_truncated_bound(&spec, n, Some(&triple), TruncFamily::Thm)
                .map(|(_, r)| r.value)
                .unwrap_or(f64::INFINITY);
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                dist_name,
                fmt_sig(p, 10),
                n,
                fmt_sig(shao, 10),
                fmt_sig(shao_min, 10),
                fmt_sig(thm, 10),
                fmt_sig(thm_min, 10)
            )?;
        }
    }
    Ok(0)
}

fn cmd_tails(args: &[String], out: &mut dyn Write) -> CliResult<i32> {
    let flags = Flags::parse(args, &["n", "z"], false)?;
    let n = parse_u64("--n", flags.require("n")?)?;
    let grid = parse_range(flags.require("z")?)?;
    let rows = tail_ratio_data(n, &grid).map_err(CliError::Compute)?;
    write!(out, "{}", tail_ratio_csv(&rows))?;
    Ok(0)
}

fn cmd_verify(args: &[String], out: &mut dyn Write) -> CliResult<i32> {
    let flags = Flags::parse(args, &["dist", "n", "samples", "seed", "triple"], false)?;
    let spec = DistributionSpec::parse(flags.require("dist")?)?;
    let n = parse_u64("--n", flags.require("n")?)?;
    let samples = parse_u64("--samples", flags.require("samples")?)?;
    let seed = parse_u64("--seed", flags.require("seed")?)?;
    let (used, triple) = resolve_triple(flags.require("triple")?)?;
    let mut report =
        check_bound_holds(&spec, n, &triple, samples, seed).map_err(CliError::Compute)?;
    report.bound.triple = Some(used);
    report.bound.dist = Some(spec.describe());
    writeln!(out, "{}", SimResult::csv_header())?;
    writeln!(out, "{}", report.sim.to_csv_row())?;
    write!(out, "{}", report.bound.to_kv())?;
    writeln!(out, "margin = {}", fmt_sig(report.margin, 10))?;
    writeln!(
        out,
        "result = {}{}",
        if report.pass { "pass" } else { "fail" },
        if report.vacuous { " (vacuous)" } else { "" }
    )?;
    Ok(0)
}

fn cmd_selfcheck(args: &[String], out: &mut dyn Write) -> CliResult<i32> {
    if !args.is_empty() {
        return usage("selfcheck takes no flags");
    }
    let mut failures = 0usize;
    let mut check = |out: &mut dyn Write, name: &str, ok: bool, detail: String| {
        let tag = if ok { "ok  " } else { "FAIL" };
        if !ok {
            failures += 1;
        }
        writeln!(out, "{tag} {name}: {detail}").ok();
    };

    let p1 = gap_constant();
    check(
        out,
        "gap constant",
        (p1.sup2c - 2.0 * p1.c).abs() <= 1e-9,
        format!(
            "C = {}, sup|u(1-u^2)phi(u)| = {} (2C = {})",
            fmt_sig(p1.c, 10),
            fmt_sig(p1.sup2c, 10),
            fmt_sig(2.0 * p1.c, 10)
        ),
    );
    for n in [2u64, 10, 100, 10_000] {
        let gap = match phi_n_gap(n) {
            Ok(g) => g,
            Err(e) => {
                check(out, "gap bound", false, format!("n={n}: {e}"));
                continue;
            }
        };
        let limit = p1.c / (n as f64 - 1.0);
        check(
            out,
            "gap bound",
            gap < limit,
            format!(
                "n={n}: sup|Phi-Phi_n| = {} < C/(n-1) = {}",
                fmt_sig(gap, 10),
                fmt_sig(limit, 10)
            ),
        );
    }
    let l2 = envelope_proof_checks();
    check(
        out,
        "tail envelope derivative signs",
        l2.lp_751 > 0.0 && l2.lp_752 < 0.0,
        format!(
            "L'(0.751) = {}, L'(0.752) = {}",
            fmt_sig(l2.lp_751, 10),
            fmt_sig(l2.lp_752, 10)
        ),
    );
    check(
        out,
        "tail envelope tangent bound",
        l2.tangent_at_751 < l2.ln_017,
        format!(
            "{} < ln 0.17 = {}",
            fmt_sig(l2.tangent_at_751, 10),
            fmt_sig(l2.ln_017, 10)
        ),
    );
    check(
        out,
        "tail log-concavity",
        l2.concave_on_grid,
        "second differences nonpositive on the grid".to_string(),
    );
    for row in &PUBLISHED_ROWS {
        match combined_constants(&row.parameter_vector(), row.be_const) {
            Ok(t) => {
                let ok = t
                    .as_array()
                    .iter()
                    .zip(&row.published)
                    .zip(&row.check)
                    .all(|((&c, &p), chk)| chk.matches(c, p));
                let shown: Vec<String> = t
                    .as_array()
                    .iter()
                    .zip(&row.check)
                    .map(|(&c, chk)| match chk {
                        TripleCheck::CeilDecimals(d) => fmt_sig(ceil_to(c, *d), 10),
                        TripleCheck::Relative(_) => fmt_sig(c, 10),
                    })
                    .collect();
                check(
                    out,
                    &format!("table row {}", row.name),
                    ok,
                    format!(
                        "computed ({}) vs published ({}, {}, {})",
                        shown.join(", "),
                        fmt_sig(row.published[0], 10),
                        fmt_sig(row.published[1], 10),
                        fmt_sig(row.published[2], 10)
                    ),
                );
            }
            Err(e) => check(
                out,
                &format!("table row {}", row.name),
                false,
                e.to_string(),
            ),
        }
    }

    if failures > 0 {
        writeln!(out, "selfcheck: {failures} check(s) FAILED").ok();
        Ok(1)
    } else {
        writeln!(out, "selfcheck: all checks passed").ok();
        Ok(0)
    }
}
