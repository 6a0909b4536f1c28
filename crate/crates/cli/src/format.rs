use serde_json::{json, Value};
use zetakit::Complex;

pub const SIG_DIGITS: usize = 15;

/// `%.15g`: fixed notation for moderate exponents, scientific otherwise,
/// trailing zeros dropped.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if exp < -5 || exp >= SIG_DIGITS as i32 {
        let s = format!("{:.*e}", SIG_DIGITS - 1, x);
        let (mant, e) = s.split_once('e').expect("scientific format has an exponent");
        format!("{}e{}", trim_zeros(mant), e)
    } else {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Real part alone when the imaginary part is below 1e−13 of |z|.
pub fn fmt_complex(z: Complex) -> String {
    if z.im.abs() <= 1e-13 * z.norm() {
        return fmt_real(z.re);
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", fmt_real(z.re), sign, fmt_real(z.im.abs()))
}

/// `{re, im}`, with negative zeros cleared.
pub fn cjson(z: Complex) -> Value {
    json!({ "re": z.re + 0.0, "im": z.im + 0.0 })
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(fmt_real(std::f64::consts::PI), "3.14159265358979");
        assert_eq!(fmt_real(-1.0 / 12.0), "-0.0833333333333333");
        assert_eq!(fmt_real(0.25), "0.25");
        assert_eq!(fmt_real(1.5e-9), "1.5e-9");
        assert_eq!(fmt_real(2.0e20), "2e20");
        assert_eq!(fmt_real(0.0), "0");
    }

    #[test]
    fn complex_text() {
        assert_eq!(fmt_complex(Complex::new(0.5, 1e-20)), "0.5");
        assert_eq!(fmt_complex(Complex::new(0.5, -2.0)), "0.5-2i");
    }
}
