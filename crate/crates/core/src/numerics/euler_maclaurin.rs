use super::quadrature::{integrate_to_infinity, Quadrature};
use super::Complex;
use crate::error::Result;
use std::f64::consts::PI;

/// Σ_{n≥N} f(n) ≈ ∫_N^∞ f + f(N)/2 - f'(N)/12 + f'''(N)/720.
///
/// The integral runs over t = N/u, u ∈ (0, 1], split dyadically toward u = 0.
pub fn euler_maclaurin_tail<F>(f: F, df_at_n: Complex, d3f_at_n: Complex, n: f64) -> Result<Complex>
where
    F: Fn(f64) -> Complex,
{
    let q = Quadrature::with_tol(1e-14, 1e-14);
    let integral = integrate_to_infinity(&f, n, q)?.value;
    Ok(integral + f(n) * 0.5 - df_at_n / 12.0 + d3f_at_n / 720.0)
}

/// Derivatives f^{(k)}(x0), k = 0..=3, of an analytic function from the
/// trapezoid rule on a circle of radius `r` (spectrally accurate).
pub fn cauchy_derivatives<F: Fn(Complex) -> Complex>(f: F, x0: f64, r: f64, points: usize) -> [Complex; 4] {
    let mut acc = [Complex::new(0.0, 0.0); 4];
    for j in 0..points {
        let w = Complex::from_polar(1.0, 2.0 * PI * j as f64 / points as f64);
        let v = f(x0 + r * w);
        let mut wk = Complex::new(1.0, 0.0);
        for a in acc.iter_mut() {
            *a += v * wk;
            wk /= w;
        }
    }
    let mut fact = 1.0;
    let mut out = [Complex::new(0.0, 0.0); 4];
    for (k, a) in acc.iter().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        out[k] = a * fact / (points as f64 * r.powi(k as i32));
    }
    out
}

/// Euler–Maclaurin tail for an `f` analytic in the disc |t - N| < N.
pub fn euler_maclaurin_tail_analytic<F: Fn(Complex) -> Complex>(f: F, n: f64) -> Result<Complex> {
    let d = cauchy_derivatives(&f, n, 0.5 * n, 64);
    euler_maclaurin_tail(|t| f(Complex::new(t, 0.0)), d[1], d[3], n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partial(p: i32, upto: usize) -> f64 {
        (1..=upto).rev().map(|n| (n as f64).powi(-p)).sum()
    }

    #[test]
    fn tail_of_inverse_squares() {
        // Σ_{n≥100} n^{-2} = ζ(2) - H_99^{(2)}
        let n: f64 = 100.0;
        let f = |t: f64| Complex::new(t.powi(-2), 0.0);
        let tail = euler_maclaurin_tail(f, Complex::new(-2.0 / n.powi(3), 0.0), Complex::new(-24.0 / n.powi(5), 0.0), n).unwrap();
        let want = PI * PI / 6.0 - partial(2, 99);
        assert!((tail.re - want).abs() < 1e-12, "{} vs {want}", tail.re);
    }

    #[test]
    fn tail_of_fourth_powers() {
        let n = 50.0;
        let tail = euler_maclaurin_tail_analytic(|t| t.powi(-4), n).unwrap();
        let want = PI.powi(4) / 90.0 - partial(4, 49);
        assert!((tail.re - want).abs() < 1e-13, "{} vs {want}", tail.re);
    }

    #[test]
    fn slow_complex_tail() {
        // Σ_{n≥1000} n^{-s} for s = 1.3 + 2i against a long direct sum plus analytic tail
        let s = Complex::new(1.3, 2.0);
        let f = |t: Complex| (-s * t.ln()).exp();
        let tail = euler_maclaurin_tail_analytic(f, 1000.0).unwrap();
        let mut direct = Complex::new(0.0, 0.0);
        for n in (1000..200_000).rev() {
            direct += f(Complex::new(n as f64, 0.0));
        }
        let rest = euler_maclaurin_tail_analytic(f, 200_000.0).unwrap();
        assert!((tail - direct - rest).norm() < 1e-12);
    }

    #[test]
    fn cauchy_derivatives_of_exp() {
        let d = cauchy_derivatives(|z| z.exp(), 1.0, 0.5, 32);
        for v in d {
            assert!((v.re - 1f64.exp()).abs() < 1e-13 && v.im.abs() < 1e-13);
        }
    }
}
