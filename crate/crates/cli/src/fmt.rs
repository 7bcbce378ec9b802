//! Number formatting shared by the reports.

/// Fixed decimals with trailing zeros trimmed and no negative zero.
pub fn num(v: f64, decimals: usize) -> String {
    let s = format!("{:.*}", decimals, v);
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// Fixed decimals without negative zero.
pub fn fixed(v: f64, decimals: usize) -> String {
    let s = format!("{:.*}", decimals, v);
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Rounded integer with explicit sign; zero is unsigned.
pub fn signed_int(v: f64) -> String {
    let r = v.round();
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r:+.0}")
    }
}

/// Nine significant digits, parseable back to within 1e-9 relative.
pub fn sig9(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v:.8e}")
    }
}

pub fn point(components: &[f64]) -> String {
    let parts: Vec<String> = components.iter().map(|&c| num(c, 6)).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(num(-0.0000001, 6), "0");
        assert_eq!(num(2.5, 6), "2.5");
        assert_eq!(num(-20.0, 6), "-20");
        assert_eq!(fixed(-0.00001, 4), "0.0000");
        assert_eq!(fixed(0.19786, 4), "0.1979");
        assert_eq!(signed_int(173.27), "+173");
        assert_eq!(signed_int(-0.2), "0");
        assert_eq!(signed_int(-952.15), "-952");
        assert_eq!(sig9(0.000197864583).parse::<f64>().unwrap(), 1.97864583e-4);
        assert_eq!(point(&[-1.0, 5.0, -20.0]), "(-1, 5, -20)");
    }
}
