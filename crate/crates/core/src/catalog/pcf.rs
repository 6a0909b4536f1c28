use super::{CatalogModel, CharFn, FValue, ModelSpec, SERIES_ORDER};
use crate::asym::{log_compose, AsymExpansion};
use crate::error::{Result, ZetaError};
use crate::numerics::{factorial, gamma, integrate, integrate_to_infinity, ln_gamma, Complex, Quadrature};
use crate::taylor::PowerSeries;

/// Below this radius the Taylor series is summed directly.
const TAYLOR_RADIUS: f64 = 2.0;

/// Taylor coefficients of U(a, z): even and odd Gamma sums.
fn taylor_coeffs(a: f64, order: usize) -> Vec<f64> {
    let pre = 2f64.powf((2.0 * a - 3.0) / 4.0) / gamma(Complex::new(a + 0.5, 0.0)).re;
    (0..=order)
        .map(|n| {
            let j = n / 2;
            let odd = n % 2 == 1;
            let sum: f64 = (0..=j)
                .map(|l| {
                    let sign = if (j - l) % 2 == 0 { 1.0 } else { -1.0 };
                    let (pow2, fact, shift) = if odd {
                        (2f64.powf(l as f64 + 0.5), factorial(2 * l + 1), (2.0 * a + 3.0) / 4.0)
                    } else {
                        (2f64.powi(l as i32), factorial(2 * l), (2.0 * a + 1.0) / 4.0)
                    };
                    sign * pow2 / (4f64.powi((j - l) as i32) * fact * factorial(j - l))
                        * gamma(Complex::new(l as f64 + shift, 0.0)).re
                })
                .sum();
            if odd {
                -pre * sum
            } else {
                pre * sum
            }
        })
        .collect()
}

/// I_k(z) = ∫_0^∞ t^{a−1/2+k} e^{−t²/2 − zt} dt for k = 0, 1, after
/// t = s·x^{1/p} (p = a + 1/2, s = 1/(1+|z|)) to absorb the endpoint power.
fn moments(a: f64, z: Complex) -> Result<(Complex, Complex)> {
    let p = a + 0.5;
    let s = 1.0 / (1.0 + z.norm());
    let q = Quadrature::with_tol(1e-300, 1e-14);
    let mut out = [Complex::default(); 2];
    for (k, slot) in out.iter_mut().enumerate() {
        let g = |x: f64| {
            let t = s * x.powf(1.0 / p);
            (-(t * t) / 2.0 - z * t).exp() * t.powi(k as i32)
        };
        let head = integrate(g, 0.0, 1.0, q)?.value;
        let tail = integrate_to_infinity(g, 1.0, q)?.value;
        *slot = (head + tail) * s.powf(p) / p;
    }
    Ok((out[0], out[1]))
}

/// (U(a,z), U'(a,z)): Taylor sum for |z| ≤ 2, the integral representation
/// for Re z ≥ 0.
pub(super) fn pcf_f(a: f64, z: Complex) -> Result<FValue> {
    if z.norm() <= TAYLOR_RADIUS {
        let c = taylor_coeffs(a, 60);
        let f = c.iter().rev().fold(Complex::default(), |acc, &cn| acc * z + cn);
        let df = c
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex::default(), |acc, (n, &cn)| acc * z + cn * n as f64);
        return Ok(FValue::plain(f, df));
    }
    if z.re < 0.0 {
        return Err(ZetaError::Domain(format!(
            "U(a, z) is evaluated for |z| ≤ {TAYLOR_RADIUS} or Re z ≥ 0, got {z}"
        )));
    }
    let (i0, i1) = moments(a, z)?;
    Ok(FValue {
        ln_scale: -z * z / 4.0 - ln_gamma(Complex::new(a + 0.5, 0.0)),
        f: i0,
        df: -z * i0 / 2.0 - i1,
    })
}

/// U(a, z) for a > −1/2: α = 2, m = 1, M = 1, Ψ = 0 (no real zeros).
pub fn pcf_model(a: f64, depth: usize) -> Result<CatalogModel> {
    if !(a > -0.5) {
        return Err(ZetaError::Domain(format!("parabolic cylinder model needs a > -1/2, got {a}")));
    }
    let mut t = AsymExpansion::new(2.0, 1, 1, depth, 0.0)?;
    t.set(0, 0, Complex::new(-0.25, 0.0))?;
    t.set(2, 1, Complex::new(-(a + 0.5), 0.0))?;
    // C_n = (−1)ⁿ Γ(2n+a+½) / (2ⁿ n! Γ(a+½))
    let rows = depth.saturating_sub(2) / 2;
    let mut cn = 1.0;
    let raw: Vec<Complex> = (1..=rows)
        .map(|n| {
            let nf = n as f64;
            cn *= -(2.0 * nf + a - 0.5) * (2.0 * nf + a - 1.5) / (2.0 * nf);
            Complex::new(cn, 0.0)
        })
        .collect();
    for (n, h) in log_compose(&raw).into_iter().enumerate() {
        t.set(2 * n + 4, 0, h)?;
    }
    let coeffs = taylor_coeffs(a, SERIES_ORDER);
    t = t.with_ln_f0(Complex::new(coeffs[0].ln(), 0.0));
    Ok(CatalogModel {
        spec: ModelSpec::Pcf { a },
        series: PowerSeries::from_real(&coeffs)?,
        asym: t,
        zeros: None,
        func: CharFn::Pcf { a },
        negatives: None,
        notes: vec!["zeros are complex conjugate pairs and are not generated".into()],
    })
}
