//! Direct evaluation of ζ(s) three ways: the series over the zeros with an
//! Euler–Maclaurin tail, the ray-plus-circle contour integral (Re s > α), and
//! the continued form in which the asymptotic rows are integrated in closed
//! form, valid left of α.

use std::f64::consts::PI;

use crate::catalog::{CatalogModel, CharFn, ZeroSequence};
use crate::error::{Result, ZetaError};
use crate::numerics::{euler_maclaurin_tail_analytic, integrate, BranchedLog, Complex, NeumaierSum, Quadrature};

pub const DEFAULT_T_MAX: f64 = 400.0;
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;
/// The series is only summed for Re s > α + this.
pub const SERIES_MARGIN: f64 = 0.25;
/// |s − pole| below this attaches a conditioning warning.
pub const POLE_WARN_RADIUS: f64 = 1e-3;

const I: Complex = Complex::new(0.0, 1.0);

/// Radius of the small circle, end of the quadrature ray, per-segment
/// absolute tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourParams {
    pub r: f64,
    pub t_max: f64,
    pub tol: f64,
}

impl ContourParams {
    pub fn new(r: f64) -> Self {
        Self { r, t_max: DEFAULT_T_MAX, tol: DEFAULT_QUAD_TOL }
    }

    /// R = |a₁|/2 when the zeros are known, 1/2 otherwise.
    pub fn for_model(model: &CatalogModel) -> Self {
        let r = model.zeros().map_or(0.5, |z| 0.5 * smallest_modulus(z));
        Self::new(r)
    }

    pub fn with_t_max(mut self, t_max: f64) -> Self {
        self.t_max = t_max;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.r > 0.0 && self.t_max > self.r && self.tol > 0.0) {
            return Err(ZetaError::Domain(format!(
                "need 0 < R < t_max and tol > 0 (R = {}, t_max = {}, tol = {})",
                self.r, self.t_max, self.tol
            )));
        }
        Ok(())
    }

    fn quadrature(&self) -> Quadrature {
        Quadrature { abs_tol: self.tol, rel_tol: 1e-13, max_intervals: 4000 }
    }
}

/// min |a_n| over the listed elements (the sequence is ordered by modulus
/// only eventually, so the head is scanned).
pub fn smallest_modulus(zeros: &ZeroSequence) -> f64 {
    zeros.iter().take(1000).map(|z| z.norm()).fold(f64::INFINITY, f64::min)
}

/// Σ_{n ≤ N} a_n^{−s} on the branch cut along Ψ, plus the Euler–Maclaurin
/// tail of the sequence rule from N + 1 on.
pub fn zeta_series(zeros: &ZeroSequence, s: Complex, n_terms: usize, psi: f64) -> Result<Complex> {
    let edge = zeros.alpha() + SERIES_MARGIN;
    if s.re <= edge {
        return Err(ZetaError::Divergence(format!(
            "series converges too slowly at Re s = {} (need Re s > {edge})",
            s.re
        )));
    }
    if n_terms == 0 {
        return Err(ZetaError::Domain("need at least one explicit term".into()));
    }
    let log = BranchedLog::new(psi);
    let mut acc = NeumaierSum::new();
    for n in (1..=n_terms).rev() {
        acc.add(log.pow(zeros.get(n), -s));
    }
    let tail = euler_maclaurin_tail_analytic(|t| log.pow(zeros.formula(t), -s), (n_terms + 1) as f64)?;
    acc.add(tail);
    Ok(acc.value())
}

/// e^{is(π−Ψ)} sin(πs)/π.
pub fn ray_prefactor(s: Complex, psi: f64) -> Complex {
    (I * s * (PI - psi)).exp() * (s * PI).sin() / PI
}

/// d/dt ln F(te^{iΨ}).
fn ray_log_derivative(model: &CatalogModel, t: f64) -> Result<Complex> {
    let rot = Complex::from_polar(1.0, model.psi());
    Ok(rot * model.eval(rot * t)?.log_derivative())
}

/// Segment ends for the ray quadrature. For Airy the subdominant exponential
/// has phase (2/3)t^{3/2}; segments end where it passes a multiple of 2π.
fn ray_breaks(model: &CatalogModel, r: f64, t_max: f64) -> Vec<f64> {
    let mut out = vec![r];
    match model.char_fn() {
        CharFn::Airy => {
            let first = ((2.0 / 3.0) * r.powf(1.5) / (2.0 * PI)).floor() as usize + 1;
            out.extend(
                (first..)
                    .map(|k| (3.0 * PI * k as f64).powf(2.0 / 3.0))
                    .take_while(|&t| t < t_max),
            );
        }
        _ => {
            let mut t = 2.0 * r;
            while t < t_max {
                out.push(t);
                t *= 2.0;
            }
        }
    }
    out.push(t_max);
    out
}

/// Adaptive quadrature of a fallible integrand; the first evaluation error
/// wins over whatever the integrator makes of the resulting NaN.
fn integrate_checked<F>(mut f: F, a: f64, b: f64, q: Quadrature) -> Result<Complex>
where
    F: FnMut(f64) -> Result<Complex>,
{
    let mut failure = None;
    let r = integrate(
        |t| {
            f(t).unwrap_or_else(|e| {
                failure.get_or_insert(e);
                Complex::new(f64::NAN, f64::NAN)
            })
        },
        a,
        b,
        q,
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(r?.value),
    }
}

fn integrate_segments<F>(mut f: F, breaks: &[f64], q: Quadrature) -> Result<Complex>
where
    F: FnMut(f64) -> Result<Complex>,
{
    let mut acc = NeumaierSum::new();
    for w in breaks.windows(2) {
        acc.add(integrate_checked(&mut f, w[0], w[1], q)?);
    }
    Ok(acc.value())
}

/// −(R^{−s}/2πi) ∫_{Ψ−2π}^{Ψ} e^{−isθ} d/dθ ln F(Re^{iθ}) dθ. Errors if the
/// circle winds around a zero.
pub fn circle_term(model: &CatalogModel, s: Complex, params: &ContourParams) -> Result<Complex> {
    params.validate()?;
    let (r, psi) = (params.r, model.psi());
    let q = params.quadrature();
    let dlog = |theta: f64| -> Result<Complex> {
        let z = Complex::from_polar(r, theta);
        Ok(I * z * model.eval(z)?.log_derivative())
    };
    let winding = integrate_checked(dlog, psi - 2.0 * PI, psi, Quadrature::with_tol(1e-6, 1e-6))? / (2.0 * PI * I);
    if winding.norm() > 0.5 {
        return Err(ZetaError::Domain(format!(
            "circle of radius {r} encloses {:.0} zeros; choose R below the smallest zero",
            winding.re
        )));
    }
    let integral = integrate_checked(|theta| Ok((-I * s * theta).exp() * dlog(theta)?), psi - 2.0 * PI, psi, q)?;
    Ok(-(-s * r.ln()).exp() * integral / (2.0 * PI * I))
}

/// Ray integral from R to t_max plus the circle term, for Re s > α. Beyond
/// t_max the integrand is replaced by its asymptotic rows, integrated in
/// closed form.
pub fn contour_zeta(model: &CatalogModel, s: Complex, params: &ContourParams) -> Result<Complex> {
    params.validate()?;
    if s.re <= model.alpha() {
        return Err(ZetaError::Domain(format!(
            "contour form needs Re s > α = {}; use the continued form",
            model.alpha()
        )));
    }
    let asym = model.asym();
    let breaks = ray_breaks(model, params.r, params.t_max);
    let head = integrate_segments(
        |t| Ok(ray_log_derivative(model, t)? * (-s * t.ln()).exp()),
        &breaks,
        params.quadrature(),
    )?;
    let tail = asym.ray_tail(0..asym.depth() + 1, s, params.t_max)?;
    Ok(ray_prefactor(s, model.psi()) * (head + tail) + circle_term(model, s, params)?)
}

/// Value of the continued form with the number of subtracted rows and an
/// optional conditioning warning.
#[derive(Debug, Clone, PartialEq)]
pub struct Continued {
    pub value: Complex,
    pub rows: usize,
    pub warning: Option<String>,
}

/// Rows subtracted on the ray: enough that the remainder integrand decays
/// like t^{−2} or faster, else the whole table if s is still inside the strip.
fn subtraction_rows(model: &CatalogModel, s: Complex) -> Result<usize> {
    let asym = model.asym();
    let n = asym.rows_for_decay(s, 1.0);
    if n < asym.depth() || asym.exponent(n + 1) - s.re < -1.0 {
        return Ok(n);
    }
    if s.re > asym.strip_edge() {
        return Ok(asym.depth());
    }
    Err(ZetaError::InsufficientDepth(format!(
        "Re s = {} is left of the strip edge {} of a depth-{} table",
        s.re,
        asym.strip_edge(),
        asym.depth()
    )))
}

/// Where the continued form stops integrating. Subtraction cancels about
/// |t^{−s} F'/F| worth of digits, so for small Re s the ray is cut at the
/// first t (on a √2 grid, at most t_max) where the last two nonzero rows of
/// the table are decreasing and the last is below tol/100.
fn quadrature_end(model: &CatalogModel, s: Complex, params: &ContourParams) -> f64 {
    let asym = model.asym();
    let rows: Vec<usize> = (0..=asym.depth())
        .filter(|&j| (0..=asym.max_log()).any(|k| asym.coeff(j, k) != Complex::default()))
        .collect();
    let [.., prev, last] = rows[..] else {
        return params.t_max;
    };
    let size = |j: usize, t: f64| {
        let big_l = Complex::new(t.ln(), asym.psi()).norm();
        (0..=asym.max_log())
            .map(|k| asym.coeff(j, k).norm() * (1.0 + big_l).powi(k as i32))
            .fold(0.0, f64::max)
            * t.powf(asym.exponent(j) - s.re)
    };
    let start = (2.0 * params.r).max(4.0);
    std::iter::successors(Some(start), |t| Some(t * std::f64::consts::SQRT_2))
        .take_while(|&t| t < params.t_max)
        .find(|&t| size(last, t) < 1e-2 * params.tol && size(last, t) <= size(prev, t))
        .unwrap_or(params.t_max)
}

/// ζ(s) anywhere in the strip: the asymptotics-subtracted ray integral, the
/// closed-form block of the subtracted rows, and the circle term.
pub fn continued_zeta(model: &CatalogModel, s: Complex, params: &ContourParams) -> Result<Continued> {
    params.validate()?;
    let asym = model.asym();
    let n = subtraction_rows(model, s)?;
    let warning = model
        .poles()
        .poles
        .iter()
        .find(|p| (s - p.location).norm() < POLE_WARN_RADIUS)
        .map(|p| format!("s is within {POLE_WARN_RADIUS} of the pole at {}; result is ill-conditioned", p.location));

    let end = quadrature_end(model, s, params);
    let breaks = ray_breaks(model, params.r, end);
    let head = integrate_segments(
        |t| Ok((ray_log_derivative(model, t)? - asym.ray_derivative(t, n)) * (-s * t.ln()).exp()),
        &breaks,
        params.quadrature(),
    )?;
    let tail = asym.ray_tail(n + 1..asym.depth() + 1, s, end)?;
    let block = asym.truncated(n).l_asy_eval(s, params.r)?;
    let value = ray_prefactor(s, model.psi()) * (head + tail) + block + circle_term(model, s, params)?;
    Ok(Continued { value, rows: n, warning })
}
