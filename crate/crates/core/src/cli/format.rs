//! Number formatting shared by every command.
//!
//! Human-readable output uses scientific notation when `0 < |x| < 1e-4` or
//! `|x| ≥ 1e6` and fixed notation otherwise; the number of digits after the
//! point is the same in both. CSV output always uses 17 significant digits so
//! that values round-trip exactly.

/// `x` with `digits` digits after the point, fixed or scientific by magnitude.
pub fn fmt_num(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let m = x.abs();
    if m != 0.0 && !(1e-4..1e6).contains(&m) {
        format!("{x:.digits$e}")
    } else {
        format!("{x:.digits$}")
    }
}

/// Default human-readable precision for values.
pub fn fmt_val(x: f64) -> String {
    fmt_num(x, 10)
}

/// Ratios print with six digits.
pub fn fmt_ratio(r: Option<f64>) -> String {
    match r {
        Some(r) => fmt_num(r, 6),
        None => "inf".to_string(),
    }
}

/// 17 significant digits, round-trip exact.
pub fn csv_num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn fmt_list(xs: &[f64]) -> String {
    let items: Vec<String> = xs.iter().map(|&x| fmt_val(x)).collect();
    format!("[{}]", items.join(", "))
}
