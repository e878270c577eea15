//! Numeric formatting shared by the CLI and the CSV writers.

/// Format `x` with `sig` significant digits, `%g`-style: fixed notation for
/// moderate magnitudes, scientific otherwise, trailing zeros trimmed.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let exp = x.abs().log10().floor() as i32;
    if exp < -4 || exp >= sig as i32 {
        let s = format!("{:.*e}", sig - 1, x);
        trim_exp(&s)
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        trim_fixed(&s)
    }
}

fn trim_fixed(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

fn trim_exp(s: &str) -> String {
    // "1.250000000e-3" -> "1.25e-3"
    match s.split_once('e') {
        Some((mant, exp)) => {
            let m = trim_fixed(mant);
            format!("{m}e{exp}")
        }
        None => s.to_string(),
    }
}
