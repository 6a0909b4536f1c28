//! Greedy barycentric rational fits (AAA) of real-line samples, evaluation
//! off the sample interval, and location of real zeros and poles.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogModel;
use crate::error::{Result, ZetaError};
use crate::numerics::Complex;
use crate::series::zeta_series;

/// Scan step for [`find_real_features`].
pub const SCAN_STEP: f64 = 1e-3;
/// Bisection width for located features.
pub const FEATURE_TOL: f64 = 1e-10;
/// Half-width of the neighbourhood of a support point skipped by the scan.
pub const SUPPORT_MASK: f64 = 1e-6;

/// r(s) = Σ w_j f_j/(s − z_j) / Σ w_j/(s − z_j).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BarycentricModel {
    pub support: Vec<f64>,
    #[serde(with = "crate::json::complex_vec")]
    pub values: Vec<Complex>,
    #[serde(with = "crate::json::complex_vec")]
    pub weights: Vec<Complex>,
}

impl BarycentricModel {
    /// Number of support points (the type is (m−1, m−1)).
    pub fn m(&self) -> usize {
        self.support.len()
    }

    /// (N(s), D(s)), or the stored value as `Err(j)` at support point j.
    fn parts(&self, s: Complex) -> std::result::Result<(Complex, Complex), usize> {
        let mut n = Complex::default();
        let mut d = Complex::default();
        for (j, ((&z, &f), &w)) in self.support.iter().zip(&self.values).zip(&self.weights).enumerate() {
            let diff = s - z;
            if diff == Complex::default() {
                return Err(j);
            }
            let c = w / diff;
            n += c * f;
            d += c;
        }
        Ok((n, d))
    }
}

/// Outcome of [`aaa_fit`]: the model, the final relative residual on the
/// samples and its value after each greedy step.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AaaFit {
    pub model: BarycentricModel,
    pub residual: f64,
    pub history: Vec<f64>,
    pub converged: bool,
}

/// Minimizer of ‖L w‖ over ‖w‖ = 1, phase-normalized so the largest entry is
/// real and positive.
fn smallest_singular_direction(l: DMatrix<Complex>) -> Result<Vec<Complex>> {
    let cols = l.ncols();
    // pad so the full right singular basis is returned
    let l = if l.nrows() < cols { l.resize_vertically(cols, Complex::default()) } else { l };
    let svd = l.svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| ZetaError::Fit("SVD did not return V".into()))?;
    let k = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(k, _)| k)
        .expect("at least one column");
    let w: Vec<Complex> = v_t.row(k).iter().map(|x| x.conj()).collect();
    let big = w.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap_or_default();
    let phase = if big.norm() > 0.0 { big.conj() / big.norm() } else { Complex::new(1.0, 0.0) };
    Ok(w.into_iter().map(|x| x * phase).collect())
}

/// Greedy AAA: move the worst-fitted sample into the support set, refit the
/// weights, stop at `rel_tol · max|f|` or at `max_degree + 1` support points.
pub fn aaa_fit(points: &[f64], samples: &[Complex], rel_tol: f64, max_degree: usize) -> Result<AaaFit> {
    if points.len() != samples.len() {
        return Err(ZetaError::Fit(format!("{} points but {} samples", points.len(), samples.len())));
    }
    let mut sorted = points.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();
    if sorted.len() != points.len() || points.len() < 4 {
        return Err(ZetaError::Fit("need at least 4 distinct points".into()));
    }
    if points.iter().any(|x| !x.is_finite()) || samples.iter().any(|f| !(f.re.is_finite() && f.im.is_finite())) {
        return Err(ZetaError::Fit("points and samples must be finite".into()));
    }
    let scale = samples.iter().map(|f| f.norm()).fold(0.0, f64::max);
    let n_pts = points.len();
    let mut free: Vec<usize> = (0..n_pts).collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mean = samples.iter().sum::<Complex>() / n_pts as f64;
    let mut approx = vec![mean; n_pts];
    let mut history = Vec::new();
    let mut model = BarycentricModel { support: vec![], values: vec![], weights: vec![] };
    let mut residual = f64::INFINITY;

    while chosen.len() <= max_degree && !free.is_empty() {
        let (pos, _) = free
            .iter()
            .enumerate()
            .map(|(p, &i)| (p, (samples[i] - approx[i]).norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("free set is nonempty");
        chosen.push(free.remove(pos));

        let m = chosen.len();
        // Loewner matrix L_ij = (F_i − f_j)/(Z_i − z_j) over free rows
        let l = DMatrix::from_fn(free.len(), m, |r, c| {
            let (i, j) = (free[r], chosen[c]);
            (samples[i] - samples[j]) / (points[i] - points[j])
        });
        let weights = smallest_singular_direction(l)?;
        model = BarycentricModel {
            support: chosen.iter().map(|&j| points[j]).collect(),
            values: chosen.iter().map(|&j| samples[j]).collect(),
            weights,
        };
        for &i in &free {
            approx[i] = bary_eval(&model, Complex::new(points[i], 0.0));
        }
        for &j in &chosen {
            approx[j] = samples[j];
        }
        residual = free.iter().map(|&i| (samples[i] - approx[i]).norm()).fold(0.0, f64::max);
        if scale > 0.0 {
            residual /= scale;
        }
        history.push(residual);
        if residual <= rel_tol {
            break;
        }
    }
    Ok(AaaFit { model, residual, history, converged: residual <= rel_tol })
}

/// r(s); the stored value at a support point, ∞ + ∞i where D(s) = 0.
pub fn bary_eval(model: &BarycentricModel, s: Complex) -> Complex {
    if let [only] = model.values[..] {
        return only;
    }
    match model.parts(s) {
        Err(j) => model.values[j],
        Ok((_, d)) if d == Complex::default() => Complex::new(f64::INFINITY, f64::INFINITY),
        Ok((n, d)) => n / d,
    }
}

/// (r(s + h) − r(s − h))/(2h).
pub fn derivative_at(model: &BarycentricModel, s: f64, h: f64) -> Complex {
    (bary_eval(model, Complex::new(s + h, 0.0)) - bary_eval(model, Complex::new(s - h, 0.0))) / (2.0 * h)
}

/// Real zeros and poles of a fitted model inside an interval.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Features {
    pub zeros: Vec<f64>,
    pub poles: Vec<f64>,
}

fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    while b - a > FEATURE_TOL {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Scan N and D on a grid of step [`SCAN_STEP`] and bisect their sign
/// changes. A root of N where D ≠ 0 is a zero, a root of D where N ≠ 0 a
/// pole. Real parts are scanned: the weights are phase-normalized, so they
/// are real for real data.
pub fn find_real_features(model: &BarycentricModel, lo: f64, hi: f64) -> Features {
    let mut out = Features::default();
    if !(hi > lo) || model.m() == 0 {
        return out;
    }
    let part = |x: f64, numerator: bool| -> f64 {
        match model.parts(Complex::new(x, 0.0)) {
            Ok((n, d)) => {
                if numerator {
                    n.re
                } else {
                    d.re
                }
            }
            Err(_) => f64::NAN,
        }
    };
    let masked = |a: f64, b: f64| model.support.iter().any(|&z| z > a - SUPPORT_MASK && z < b + SUPPORT_MASK);
    let steps = ((hi - lo) / SCAN_STEP).ceil() as usize;
    let grid: Vec<f64> = (0..=steps).map(|k| (lo + k as f64 * SCAN_STEP).min(hi)).collect();
    let n_scale = grid.iter().map(|&x| part(x, true).abs()).filter(|v| v.is_finite()).fold(0.0, f64::max);
    let d_scale = grid.iter().map(|&x| part(x, false).abs()).filter(|v| v.is_finite()).fold(0.0, f64::max);

    for w in grid.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b <= a || masked(a, b) {
            continue;
        }
        for numerator in [true, false] {
            let (fa, fb) = (part(a, numerator), part(b, numerator));
            if !(fa * fb <= 0.0) || (fa == 0.0 && a != lo) {
                continue;
            }
            let x = bisect(|t| part(t, numerator), a, b);
            if numerator && part(x, false).abs() > 1e-8 * d_scale {
                out.zeros.push(x);
            } else if !numerator && part(x, true).abs() > 1e-8 * n_scale {
                out.poles.push(x);
            }
        }
    }
    out
}

/// Fit of ζ on equispaced real samples plus the values read off it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AaaReport {
    pub fit: AaaFit,
    pub interval: [f64; 2],
    pub scan: [f64; 2],
    pub features: Features,
    #[serde(with = "crate::json::complex")]
    pub zeta_one: Complex,
    #[serde(with = "crate::json::complex")]
    pub zeta_zero: Complex,
    #[serde(with = "crate::json::complex")]
    pub zeta_prime_zero: Complex,
    #[serde(with = "crate::json::complex")]
    pub zeta_minus_half: Complex,
}

/// Sample ζ by the zero series at `n_points` equispaced points of
/// `interval`, fit, and evaluate the approximant at 1, 0, −1/2 (ζ'(0) by a
/// 1e−6 difference quotient); features are scanned on `scan`.
pub fn aaa_report(
    model: &CatalogModel,
    interval: [f64; 2],
    n_points: usize,
    n_terms: usize,
    rel_tol: f64,
    scan: [f64; 2],
) -> Result<AaaReport> {
    let zeros = model
        .zeros()
        .ok_or_else(|| ZetaError::Missing(format!("{} model has no generated zeros to sum", model.name())))?;
    if n_points < 4 {
        return Err(ZetaError::Fit("need at least 4 sample points".into()));
    }
    let [a, b] = interval;
    let points: Vec<f64> = (0..n_points).map(|k| a + (b - a) * k as f64 / (n_points - 1) as f64).collect();
    let samples = points
        .iter()
        .map(|&x| zeta_series(zeros, Complex::new(x, 0.0), n_terms, model.psi()))
        .collect::<Result<Vec<_>>>()?;
    let fit = aaa_fit(&points, &samples, rel_tol, n_points / 2)?;
    let r = |x: f64| bary_eval(&fit.model, Complex::new(x, 0.0));
    Ok(AaaReport {
        interval,
        scan,
        features: find_real_features(&fit.model, scan[0], scan[1]),
        zeta_one: r(1.0),
        zeta_zero: r(0.0),
        zeta_prime_zero: derivative_at(&fit.model, 0.0, 1e-6),
        zeta_minus_half: r(-0.5),
        fit,
    })
}
