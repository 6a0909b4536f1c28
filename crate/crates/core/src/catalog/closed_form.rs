//! Exact values at integers, written out from the closed forms so that the
//! engines can be checked against them.

use serde::Serialize;

use super::ModelSpec;
use crate::numerics::{bernoulli_number, bernoulli_poly, factorial, gamma, Complex};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedForm {
    pub expr: String,
    #[serde(with = "crate::json::complex")]
    pub value: Complex,
}

fn cf(expr: impl Into<String>, value: f64) -> Option<ClosedForm> {
    Some(ClosedForm { expr: expr.into(), value: Complex::new(value, 0.0) })
}

fn g(x: f64) -> f64 {
    gamma(Complex::new(x, 0.0)).re
}

pub(super) fn lookup(spec: &ModelSpec, n: i64) -> Option<ClosedForm> {
    match *spec {
        ModelSpec::Riemann => riemann(n),
        ModelSpec::Hurwitz { a } => hurwitz(a, n),
        ModelSpec::Airy => airy(n),
        ModelSpec::Pcf { a } => pcf(a, n),
        ModelSpec::Chf { a, b } => chf(a, b, n),
    }
}

fn riemann(n: i64) -> Option<ClosedForm> {
    match n {
        0 => cf("-1/2", -0.5),
        n if n < 0 => {
            let k = (1 - n) as usize;
            cf(format!("-B_{k}/{k}"), -bernoulli_number(k).ok()? / k as f64)
        }
        n if n % 2 == 0 => {
            let k = n as usize;
            let v = bernoulli_number(k).ok()?.abs() * (2.0 * std::f64::consts::PI).powi(n as i32)
                / (2.0 * factorial(k));
            cf(format!("|B_{k}|(2π)^{k}/(2·{k}!)"), v)
        }
        _ => None,
    }
}

fn hurwitz(a: f64, n: i64) -> Option<ClosedForm> {
    match n {
        0 => cf("1/2 - a", 0.5 - a),
        n if n < 0 => {
            let k = (1 - n) as usize;
            let v = -bernoulli_poly(k, Complex::new(a, 0.0)).ok()? / k as f64;
            Some(ClosedForm { expr: format!("-B_{k}(a)/{k}"), value: v })
        }
        _ => None,
    }
}

fn airy(n: i64) -> Option<ClosedForm> {
    let r = g(2.0 / 3.0) / g(1.0 / 3.0);
    let c3 = 3f64.cbrt();
    match n {
        0 => cf("-1/4", -0.25),
        1 => cf("-3^(1/3)Γ(2/3)/Γ(1/3)", -c3 * r),
        2 => cf("3^(2/3)Γ²(2/3)/Γ²(1/3)", c3 * c3 * r * r),
        3 => cf("1/2 - 3Γ³(2/3)/Γ³(1/3)", 0.5 - 3.0 * r.powi(3)),
        4 => cf(
            "3^(4/3)Γ⁴(2/3)/Γ⁴(1/3) - Γ(2/3)/(3^(2/3)Γ(1/3))",
            3f64.powf(4.0 / 3.0) * r.powi(4) - r / (c3 * c3),
        ),
        5 => cf(
            "-3^(5/3)Γ⁵(2/3)/Γ⁵(1/3) + (5/4)Γ²(2/3)/(3^(1/3)Γ²(1/3))",
            -3f64.powf(5.0 / 3.0) * r.powi(5) + 1.25 * r * r / c3,
        ),
        -3 => cf("15/64", 15.0 / 64.0),
        -6 => cf("-6·565/2048", -6.0 * 565.0 / 2048.0),
        -9 => cf("9·19675/6144", 9.0 * 19675.0 / 6144.0),
        n if n < 0 && n % 3 != 0 => cf("0", 0.0),
        _ => None,
    }
}

/// h_1..h_6 of the parabolic cylinder expansion.
pub(crate) fn pcf_h(a: f64, k: usize) -> Option<f64> {
    let base = (2.0 * a + 1.0) * (2.0 * a + 3.0);
    let a2 = a * a;
    let a3 = a2 * a;
    let a4 = a3 * a;
    let a5 = a4 * a;
    Some(match k {
        1 => -base / 8.0,
        2 => (2.0 + a) * base / 8.0,
        3 => -base * (20.0 * a2 + 88.0 * a + 99.0) / 96.0,
        4 => base * (28.0 * a3 + 200.0 * a2 + 489.0 * a + 408.0) / 64.0,
        5 => -base * (336.0 * a4 + 3424.0 * a3 + 13480.0 * a2 + 24232.0 * a + 16713.0) / 320.0,
        6 => {
            base * (528.0 * a5 + 7136.0 * a4 + 39848.0 * a3 + 114_632.0 * a2 + 169_245.0 * a + 102_096.0)
                / 192.0
        }
        _ => return None,
    })
}

fn pcf(a: f64, n: i64) -> Option<ClosedForm> {
    let r = g((2.0 * a + 3.0) / 4.0) / g((2.0 * a + 1.0) / 4.0);
    let s2 = 2f64.sqrt();
    match n {
        0 => cf("-a - 1/2", -a - 0.5),
        1 => cf("√2 R, R = Γ((2a+3)/4)/Γ((2a+1)/4)", s2 * r),
        2 => cf("-a - 1/2 + 2R²", -a - 0.5 + 2.0 * r * r),
        3 => cf("2√2 R³ - √2 a R", 2.0 * s2 * r.powi(3) - s2 * a * r),
        4 => cf(
            "4R⁴ - (8a/3)R² + (4a² - 1)/12",
            4.0 * r.powi(4) - 8.0 * a / 3.0 * r * r + (4.0 * a * a - 1.0) / 12.0,
        ),
        5 => cf(
            "4√2 R⁵ - (10√2 a/3)R³ + (√2/24)(16a² - 1)R",
            4.0 * s2 * r.powi(5) - 10.0 * s2 * a / 3.0 * r.powi(3) + s2 / 24.0 * (16.0 * a * a - 1.0) * r,
        ),
        n if n < 0 && n % 2 != 0 => cf("0", 0.0),
        n if n < 0 => {
            let k = (-n / 2) as usize;
            cf(format!("-{}·h_{k}", 2 * k), -2.0 * k as f64 * pcf_h(a, k)?)
        }
        _ => None,
    }
}

/// f_1..f_4 of the confluent expansion.
pub(crate) fn chf_f(a: f64, b: f64, j: usize) -> Option<f64> {
    let base = (a - 1.0) * (a - b);
    Some(match j {
        1 => base,
        2 => -0.5 * base * (2.0 * a - b - 2.0),
        3 => base * (5.0 * a * a - a * (5.0 * b + 11.0) + b * (b + 6.0) + 6.0) / 3.0,
        4 => {
            -0.25
                * base
                * (14.0 * a.powi(3) - a * a * (21.0 * b + 50.0) + a * (9.0 * b * b + 53.0 * b + 60.0)
                    - b * (b * b + 12.0 * b + 34.0)
                    - 24.0)
        }
        _ => return None,
    })
}

fn chf(a: f64, b: f64, n: i64) -> Option<ClosedForm> {
    let p = a * (a - b);
    match n {
        0 => cf("a - b", a - b),
        1 => cf("1 - a/b", 1.0 - a / b),
        2 => cf("a(a-b)/(b²(b+1))", p / (b * b * (b + 1.0))),
        3 => cf("a(a-b)(b-2a)/(b³(b+1)(b+2))", p * (b - 2.0 * a) / (b.powi(3) * (b + 1.0) * (b + 2.0))),
        4 => cf(
            "a(a-b)(a²(5b+6) - ab(5b+6) + b²(b+1))/(b⁴(b+1)²(b+2)(b+3))",
            p * (a * a * (5.0 * b + 6.0) - a * b * (5.0 * b + 6.0) + b * b * (b + 1.0))
                / (b.powi(4) * (b + 1.0).powi(2) * (b + 2.0) * (b + 3.0)),
        ),
        5 => cf(
            "a(a-b)(b-2a)(a²(7b+12) - ab(7b+12) + b²(b+1))/(b⁵(b+1)²(b+2)(b+3)(b+4))",
            p * (b - 2.0 * a) * (a * a * (7.0 * b + 12.0) - a * b * (7.0 * b + 12.0) + b * b * (b + 1.0))
                / (b.powi(5) * (b + 1.0).powi(2) * (b + 2.0) * (b + 3.0) * (b + 4.0)),
        ),
        n if n < 0 => {
            let j = (-n) as usize;
            cf(format!("-{j}·f_{j}"), -(j as f64) * chf_f(a, b, j)?)
        }
        _ => None,
    }
}
