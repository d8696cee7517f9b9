//! Locale-independent decimal rendering for the text and CSV outputs.

/// Fixed notation with `sig` significant digits; `-0` renders as `0`.
pub fn fixed_sig(x: f64, sig: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return format!("{:.*}", sig.saturating_sub(1), 0.0);
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (sig as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    if s.starts_with('-') && s[1..].chars().all(|ch| ch == '0' || ch == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// 12 significant digits when that reproduces `x` exactly, otherwise the
/// shortest round-trip representation (which then needs more digits).
pub fn exact_decimal(x: f64) -> String {
    let s = fixed_sig(x, 12);
    if s.parse::<f64>().ok() == Some(x) {
        s
    } else {
        format!("{x}")
    }
}
