use std::f64::consts::PI;

use super::{CatalogModel, CharFn, FValue, ModelSpec, ZeroSequence, SERIES_ORDER};
use crate::asym::AsymExpansion;
use crate::error::{Result, ZetaError};
use crate::numerics::{
    bernoulli_number, digamma, euler_maclaurin_tail, factorial, ln_gamma, polygamma, Complex,
    EULER_GAMMA,
};
use crate::shift::{ShiftParams, ShiftedZeta};
use crate::taylor::PowerSeries;

const RIEMANN_DEPTH: usize = 30;
const RIEMANN_PSI: f64 = 0.75 * PI;

/// 1/Γ(1 − w) with its derivative ψ(1 − w)/Γ(1 − w). Right of Re w = 1/2
/// the reflection Γ(w) sin(πw)/π keeps the zeros at the positive integers
/// exact.
pub(super) fn inverse_gamma(w: Complex) -> FValue {
    if w.re >= 0.5 {
        let (s, c) = ((w * PI).sin(), (w * PI).cos());
        FValue {
            ln_scale: ln_gamma(w),
            f: s / PI,
            df: (s * digamma(w) + c * PI) / PI,
        }
    } else {
        let u = 1.0 - w;
        FValue {
            ln_scale: -ln_gamma(u),
            f: Complex::new(1.0, 0.0),
            df: digamma(u),
        }
    }
}

/// ζ(k), k ≥ 2, as Σ_{n<100} n^{−k} plus an Euler–Maclaurin tail.
fn zeta_by_summation(k: usize) -> Result<f64> {
    const N: usize = 100;
    let kf = k as f64;
    let head: f64 = (1..N).rev().map(|n| (n as f64).powf(-kf)).sum();
    let nf = N as f64;
    let d1 = -kf * nf.powf(-kf - 1.0);
    let d3 = -kf * (kf + 1.0) * (kf + 2.0) * nf.powf(-kf - 3.0);
    let tail = euler_maclaurin_tail(|t| Complex::new(t.powf(-kf), 0.0), d1.into(), d3.into(), nf)?;
    Ok(head + tail.re)
}

fn riemann_asym() -> Result<AsymExpansion> {
    let mut t = AsymExpansion::new(1.0, 1, 1, RIEMANN_DEPTH, RIEMANN_PSI)?.with_ln_f0(Complex::default());
    t.set(0, 1, Complex::new(1.0, 0.0))?;
    t.set(0, 0, Complex::new(-1.0, -PI))?;
    t.set(1, 1, Complex::new(-0.5, 0.0))?;
    t.set(1, 0, Complex::new(-0.5 * (2.0 * PI).ln(), PI / 2.0))?;
    for j in 2..=RIEMANN_DEPTH {
        t.set(j, 0, Complex::new(bernoulli_number(j)? / (j * (j - 1)) as f64, 0.0))?;
    }
    Ok(t)
}

/// F(z) = 1/Γ(1 − z), zeros at the positive integers.
pub fn riemann_model() -> Result<CatalogModel> {
    let mut g = vec![Complex::default(); SERIES_ORDER + 1];
    g[1] = Complex::new(-EULER_GAMMA, 0.0);
    for (k, gk) in g.iter_mut().enumerate().skip(2) {
        *gk = Complex::new(-zeta_by_summation(k)? / k as f64, 0.0);
    }
    Ok(CatalogModel {
        spec: ModelSpec::Riemann,
        series: PowerSeries::exp_of(&g, SERIES_ORDER),
        asym: riemann_asym()?,
        zeros: Some(ZeroSequence::arithmetic(Complex::new(1.0, 0.0), 10_000)),
        func: CharFn::InverseGamma { offset: Complex::default() },
        negatives: Some(0),
        notes: Vec::new(),
    })
}

/// F(z) = 1/Γ(a − z), zeros at a, a + 1, …: the Riemann table moved by
/// A = 1, B = a − 1.
pub fn hurwitz_model(a: Complex) -> Result<CatalogModel> {
    if a.im == 0.0 && a.re <= 0.0 && a.re == a.re.round() {
        return Err(ZetaError::Domain(format!("a = {} is a nonpositive integer", a.re)));
    }
    let real = a.im == 0.0;
    let params = ShiftParams::new(Complex::new(1.0, 0.0), a - 1.0)?;
    // ln F(−B) = −ln Γ(a)
    let ln_f0 = if real {
        Complex::new(-ln_gamma(a).re, 0.0)
    } else {
        -ln_gamma(a)
    };
    let asym = ShiftedZeta::new(&riemann_asym()?, params, Some(RIEMANN_PSI), Some(ln_f0))
        .omega()
        .clone();

    // ln(Γ(a)/Γ(a − z)) = Σ_n −(−1)^n ψ^{(n−1)}(a) zⁿ/n!
    let mut g = vec![Complex::default(); SERIES_ORDER + 1];
    for (n, gn) in g.iter_mut().enumerate().skip(1) {
        let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
        *gn = polygamma(n - 1, a) * sign / factorial(n);
    }
    let c0 = (-ln_gamma(a)).exp();
    let series = PowerSeries::exp_of(&g, SERIES_ORDER).scale(c0);

    let negatives = real.then(|| if a.re < 0.0 { (-a.re.floor()) as usize } else { 0 });
    let mut notes = Vec::new();
    if !real {
        notes.push("complex a: ln F(0) taken as −lnΓ(a) on the principal log-gamma branch".into());
    }
    Ok(CatalogModel {
        spec: ModelSpec::Hurwitz { a: a.re },
        series,
        asym,
        zeros: Some(ZeroSequence::arithmetic(a, 10_000)),
        func: CharFn::InverseGamma { offset: a - 1.0 },
        negatives,
        notes,
    })
}
