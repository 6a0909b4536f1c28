use std::f64::consts::PI;

use super::zeros::airy_zero_seed;
use super::{CatalogModel, CharFn, FValue, ModelSpec, ZeroSequence, SERIES_ORDER};
use crate::asym::{log_compose, AsymExpansion};
use crate::error::{Result, ZetaError};
use crate::numerics::{factorial, gamma, ln_gamma, Complex, NeumaierSum};
use crate::taylor::PowerSeries;

pub const AIRY_MAX_DEPTH: usize = 40;
const AIRY_PSI: f64 = 5.0 * PI / 9.0;

/// Radius of the Maclaurin disc.
const MACLAURIN_RADIUS: f64 = 2.0;
/// Beyond this radius the asymptotic forms take over.
const ASYMPTOTIC_RADIUS: f64 = 8.0;
const STEP: f64 = 0.25;

/// Taylor coefficients of Ai(−z): c_{3k}, c_{3k+1} from the Bessel form,
/// c_{3k+2} = 0.
fn maclaurin_coeffs(order: usize) -> Vec<f64> {
    let mut c = vec![0.0; order + 1];
    let mut even = 3f64.powf(-2.0 / 3.0) / gamma(Complex::new(2.0 / 3.0, 0.0)).re;
    let mut odd = 3f64.powf(-4.0 / 3.0) / gamma(Complex::new(4.0 / 3.0, 0.0)).re;
    for k in 0.. {
        if 3 * k > order {
            break;
        }
        c[3 * k] = even;
        if 3 * k < order {
            c[3 * k + 1] = odd;
        }
        let kf = k as f64;
        even *= -1.0 / (9.0 * (kf + 1.0) * (kf + 2.0 / 3.0));
        odd *= -1.0 / (9.0 * (kf + 1.0) * (kf + 4.0 / 3.0));
    }
    c
}

fn maclaurin(z: Complex) -> (Complex, Complex) {
    let c = maclaurin_coeffs(90);
    let mut f = NeumaierSum::new();
    let mut df = NeumaierSum::new();
    let mut pw = Complex::new(1.0, 0.0);
    for (n, &cn) in c.iter().enumerate() {
        if n > 0 {
            df.add(pw * cn * n as f64);
            pw *= z;
        }
        f.add(pw * cn);
    }
    (f.value(), df.value())
}

/// One Taylor step of F'' = −zF from z0 to z0 + h.
fn taylor_step(z0: Complex, f0: Complex, df0: Complex, h: Complex) -> (Complex, Complex) {
    let mut a = vec![f0, df0];
    let mut f = f0 + df0 * h;
    let mut df = df0;
    let mut hp = Complex::new(1.0, 0.0); // hⁿ
    for n in 0..80usize {
        let prev = if n == 0 { Complex::default() } else { a[n - 1] };
        let next = -(z0 * a[n] + prev) / ((n + 2) * (n + 1)) as f64;
        a.push(next);
        let term_f = next * hp * h * h;
        let term_df = next * (n + 2) as f64 * hp * h;
        f += term_f;
        df += term_df;
        hp *= h;
        if n > 4 && term_f.norm() <= 1e-18 * f.norm() && term_df.norm() <= 1e-18 * df.norm() {
            break;
        }
    }
    (f, df)
}

fn walk(from: Complex, mut f: Complex, mut df: Complex, to: Complex) -> (Complex, Complex) {
    let steps = ((to - from).norm() / STEP).ceil().max(1.0) as usize;
    let h = (to - from) / steps as f64;
    for i in 0..steps {
        (f, df) = taylor_step(from + h * i as f64, f, df, h);
    }
    (f, df)
}

/// u_k, v_k of the Airy asymptotic series.
fn uv(k_max: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    for k in 1..=k_max {
        let kf = k as f64;
        let uk = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(uk);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * uk);
    }
    (u, v)
}

/// Partial sums Σ (−1)^k c_k ζ^{−k} over k ≡ parity (mod step), stopped at
/// the smallest term.
fn asym_sum(c: &[f64], zeta: Complex, start: usize, step: usize) -> Complex {
    let inv = zeta.inv();
    let mut acc = Complex::default();
    let mut prev = f64::INFINITY;
    let mut k = start;
    let mut sign = 1.0;
    while k < c.len() {
        let term = inv.powi(k as i32) * c[k] * sign;
        let mag = term.norm();
        if mag > prev {
            break;
        }
        acc += term;
        if mag < 1e-18 * acc.norm() {
            break;
        }
        prev = mag;
        k += step;
        sign = -sign;
    }
    acc
}

/// Asymptotic (F, F') for |z| large.
fn asymptotic(z: Complex) -> FValue {
    let (u, v) = uv(60);
    let sqrt_pi = PI.sqrt();
    if z.arg().abs() > PI / 3.0 {
        // Ai(w), w = −z, short of the Stokes lines |arg w| = 2π/3: Ai(w) ~ e^{−ζ}/(2√π w^{1/4}) Σ (−1)^k u_k ζ^{−k}
        let w = -z;
        let zeta = w.powf(1.5) * (2.0 / 3.0);
        let w4 = w.powf(0.25);
        let su = asym_sum(&u, zeta, 0, 1);
        let sv = asym_sum(&v, zeta, 0, 1);
        return FValue {
            ln_scale: -zeta,
            f: su / (w4 * 2.0 * sqrt_pi),
            // F'(z) = −Ai'(w), Ai'(w) ~ −w^{1/4} e^{−ζ}/(2√π) Σ (−1)^k v_k ζ^{−k}
            df: w4 * sv / (2.0 * sqrt_pi),
        };
    }
    // |arg z| ≤ π/3: both exponentials matter. Ai(−z) ~ (cos θ P_u + sin θ Q_u)/(√π z^{1/4}), θ = ζ − π/4
    let zeta = z.powf(1.5) * (2.0 / 3.0);
    let z4 = z.powf(0.25);
    let theta = zeta - PI / 4.0;
    let i = Complex::i();
    let (ln_scale, cos, sin) = if theta.im >= 0.0 {
        let e = (i * theta * 2.0).exp();
        (-i * theta, (1.0 + e) * 0.5, (e - 1.0) / (i * 2.0))
    } else {
        let e = (-i * theta * 2.0).exp();
        (i * theta, (1.0 + e) * 0.5, (1.0 - e) / (i * 2.0))
    };
    let pu = asym_sum(&u, zeta, 0, 2);
    let qu = asym_sum(&u, zeta, 1, 2);
    let pv = asym_sum(&v, zeta, 0, 2);
    let qv = asym_sum(&v, zeta, 1, 2);
    FValue {
        ln_scale,
        f: (cos * pu + sin * qu) / (z4 * sqrt_pi),
        // F'(z) = −Ai'(−z), Ai'(−z) ~ z^{1/4}(sin θ P_v − cos θ Q_v)/√π
        df: -z4 * (sin * pv - cos * qv) / sqrt_pi,
    }
}

/// Taylor route: Maclaurin near 0, ODE stepping outward, or inward from
/// the asymptotic circle inside the sector where Ai(−z) decays.
fn taylor_route(z: Complex) -> (Complex, Complex) {
    let r = z.norm();
    if r <= MACLAURIN_RADIUS {
        return maclaurin(z);
    }
    let dir = z / r;
    if (-z).arg().abs() < PI / 3.0 {
        let start = dir * ASYMPTOTIC_RADIUS.max(r);
        let a = asymptotic(start);
        walk(start, a.value(), a.derivative(), z)
    } else {
        let start = dir * MACLAURIN_RADIUS;
        let (f, df) = maclaurin(start);
        walk(start, f, df, z)
    }
}

/// F(z) = Ai(−z) and F'(z) = −Ai'(−z).
pub(super) fn airy_f(z: Complex) -> FValue {
    if z.norm() > ASYMPTOTIC_RADIUS {
        asymptotic(z)
    } else {
        let (f, df) = taylor_route(z);
        FValue::plain(f, df)
    }
}

/// C_k of ln(1 + Σ C_k y^k), y = z^{−3/2}, from the Hankel form of Ai(−z).
fn hankel_tail(count: usize) -> Vec<Complex> {
    (1..=count)
        .map(|k| {
            let kf = k as f64;
            Complex::new(0.0, -1.5).powi(k as i32)
                * gamma(Complex::new(kf + 1.0 / 6.0, 0.0))
                * gamma(Complex::new(kf + 5.0 / 6.0, 0.0))
                / (2.0 * PI * (-2.0f64).powi(k as i32) * factorial(k))
        })
        .collect()
}

/// Ai(−z): zeros −i_n > 0, α = 3/2 on the grid m = 2, M = 1, Ψ = 5π/9.
pub fn airy_model(depth: usize) -> Result<CatalogModel> {
    if depth > AIRY_MAX_DEPTH {
        return Err(ZetaError::UnsupportedOrder {
            what: "Airy asymptotic table depth",
            max: AIRY_MAX_DEPTH,
            got: depth,
        });
    }
    let ln_f0 = -(2.0 / 3.0) * 3f64.ln() - ln_gamma(Complex::new(2.0 / 3.0, 0.0));
    let mut t = AsymExpansion::new(1.5, 2, 1, depth, AIRY_PSI)?.with_ln_f0(ln_f0);
    t.set(0, 0, Complex::new(0.0, -2.0 / 3.0))?;
    if depth >= 3 {
        t.set(3, 1, Complex::new(-0.25, 0.0))?;
        t.set(3, 0, Complex::new(-(2.0 * PI.sqrt()).ln(), PI / 4.0))?;
    }
    let rows = depth.saturating_sub(3) / 3;
    for (n, pn) in log_compose(&hankel_tail(rows)).into_iter().enumerate() {
        t.set(3 * n + 6, 0, pn)?;
    }
    let series = PowerSeries::new(
        maclaurin_coeffs(SERIES_ORDER).into_iter().map(|c| Complex::new(c, 0.0)).collect(),
    )?;
    Ok(CatalogModel {
        spec: ModelSpec::Airy,
        series,
        asym: t,
        zeros: Some(airy_zeros(10_000, 1_000)?),
        func: CharFn::Airy,
        negatives: Some(0),
        notes: Vec::new(),
    })
}

/// Newton refinement of the k-th zero of Ai(−x) from the asymptotic seed.
fn refine(k: usize) -> Result<f64> {
    let t = 3.0 * PI / 8.0 * (4 * k - 1) as f64;
    let mut x = airy_zero_seed(Complex::new(t, 0.0)).re;
    for _ in 0..50 {
        let v = airy_f(Complex::new(x, 0.0));
        let dx = (v.f / v.df).re;
        x -= dx;
        if dx.abs() <= 4.0 * f64::EPSILON * x {
            let v = airy_f(Complex::new(x, 0.0));
            if v.value().norm() <= 1e-12 * v.derivative().norm().max(1.0) {
                return Ok(x);
            }
        }
    }
    Err(ZetaError::Refinement { index: k })
}

/// Zeros of Ai(−z): the first `n_exact` refined by Newton, the rest from the
/// asymptotic formula.
pub fn airy_zeros(count: usize, n_exact: usize) -> Result<ZeroSequence> {
    if count < n_exact {
        return Err(ZetaError::Domain(format!("count {count} < n_exact {n_exact}")));
    }
    let exact = (1..=n_exact).map(refine).collect::<Result<Vec<_>>>()?;
    Ok(ZeroSequence::airy(exact, count))
}
