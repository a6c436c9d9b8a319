//! Deterministic CSV and JSON emission.

use serde::Serialize;

/// `x` with 9 significant digits; plain notation for exponents in `[-5, 9)`.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (_, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..9).contains(&exp) {
        format!("{:.*}", (8 - exp) as usize, x)
    } else {
        sci
    }
}

pub fn opt9(x: Option<f64>) -> String {
    x.map(sig9).unwrap_or_default()
}

/// Quotes a field if it contains a delimiter, quote or newline.
pub fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.iter().map(|f| field(f)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_digits() {
        assert_eq!(sig9(-4.476013), "-4.47601300");
        assert_eq!(sig9(1713.0), "1713.00000");
        assert_eq!(sig9(-1.2284e-4), "-0.000122840000");
        assert_eq!(sig9(-5.2368e-7), "-5.23680000e-7");
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(123456789.0), "123456789");
        assert_eq!(sig9(1.5e9), "1.50000000e9");
    }

    #[test]
    fn quoting() {
        assert_eq!(field("a,b"), "\"a,b\"");
        assert_eq!(field("plain"), "plain");
    }
}
