//! Adaptive Gauss–Kronrod (7/15) quadrature for complex-valued integrands.

use super::Complex;
use crate::error::{Result, ZetaError};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Tolerances for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_intervals: 2000,
        }
    }
}

impl Quadrature {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        Self {
            abs_tol,
            rel_tol,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: Complex,
    pub error: f64,
    pub evaluations: usize,
}

struct Segment {
    a: f64,
    b: f64,
    value: Complex,
    error: f64,
    abs: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Returns (value, error estimate, ∫|f|).
fn kronrod<F: FnMut(f64) -> Complex>(f: &mut F, a: f64, b: f64) -> (Complex, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    let mut abs_k = fc.norm() * WGK[7];
    let mut vals = [(Complex::new(0.0, 0.0), Complex::new(0.0, 0.0)); 7];
    for (i, v) in vals.iter_mut().enumerate() {
        let dx = h * XGK[i];
        let (f1, f2) = (f(c - dx), f(c + dx));
        k += (f1 + f2) * WGK[i];
        abs_k += (f1.norm() + f2.norm()) * WGK[i];
        if i % 2 == 1 {
            g += (f1 + f2) * WG[i / 2];
        }
        *v = (f1, f2);
    }
    let mean = k * 0.5;
    let mut asc = (fc - mean).norm() * WGK[7];
    for (i, (f1, f2)) in vals.iter().enumerate() {
        asc += ((f1 - mean).norm() + (f2 - mean).norm()) * WGK[i];
    }
    let value = k * h;
    let asc = asc * h.abs();
    let mut err = ((k - g) * h).norm();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * abs_k * h.abs();
    if floor > err {
        err = floor;
    }
    (value, err, abs_k * h.abs())
}

/// Globally adaptive integral of `f` over `[a, b]`.
pub fn integrate<F: FnMut(f64) -> Complex>(
    mut f: F,
    a: f64,
    b: f64,
    q: Quadrature,
) -> Result<QuadratureResult> {
    if a == b {
        return Ok(QuadratureResult {
            value: Complex::new(0.0, 0.0),
            error: 0.0,
            evaluations: 0,
        });
    }
    let (value, error, mut total_abs) = kronrod(&mut f, a, b);
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(ZetaError::Divergence(format!(
            "non-finite integrand on [{a}, {b}]"
        )));
    }
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, error, abs: total_abs });
    let mut total = value;
    let mut total_err = error;
    let mut evals = 15;
    loop {
        // below ~100 ulp of ∫|f| the estimate is roundoff, not truncation
        let target = q
            .abs_tol
            .max(q.rel_tol * total.norm())
            .max(100.0 * f64::EPSILON * total_abs);
        if total_err <= target {
            break;
        }
        if heap.len() >= q.max_intervals {
            return Err(ZetaError::Accuracy(format!(
                "quadrature on [{a}, {b}] stalled at error {total_err:.3e} (target {target:.3e})"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            // interval cannot be split further
            return Err(ZetaError::Accuracy(format!(
                "quadrature cannot resolve integrand near {mid}"
            )));
        }
        let (v1, e1, a1) = kronrod(&mut f, worst.a, mid);
        let (v2, e2, a2) = kronrod(&mut f, mid, worst.b);
        total_abs += a1 + a2 - worst.abs;
        evals += 30;
        if !(v1 + v2).re.is_finite() || !(v1 + v2).im.is_finite() {
            return Err(ZetaError::Divergence(format!("non-finite integrand near {mid}")));
        }
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Segment { a: worst.a, b: mid, value: v1, error: e1, abs: a1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, error: e2, abs: a2 });
    }
    // re-sum to shed drift from the running updates
    let value = heap.iter().map(|s| s.value).sum();
    let error = heap.iter().map(|s| s.error).sum();
    Ok(QuadratureResult { value, error, evaluations: evals })
}

/// ∫_a^∞ f over dyadic panels [a 2^i, a 2^{i+1}] (a > 0). A geometric
/// remainder estimate closes the sum once the panels decay regularly.
pub fn integrate_to_infinity<F: FnMut(f64) -> Complex>(
    mut f: F,
    a: f64,
    q: Quadrature,
) -> Result<QuadratureResult> {
    if a <= 0.0 {
        return Err(ZetaError::Domain(format!(
            "semi-infinite integral needs a positive start, got {a}"
        )));
    }
    const MAX_PANELS: usize = 1000;
    let mut sum = Complex::new(0.0, 0.0);
    let mut err = 0.0;
    let mut evals = 0;
    let mut prev: Option<Complex> = None;
    let mut prev_ratio: Option<Complex> = None;
    let mut growing = 0;
    let mut lo = a;
    for _ in 0..MAX_PANELS {
        let hi = 2.0 * lo;
        let panel_q = Quadrature {
            abs_tol: q.abs_tol * 0.1,
            rel_tol: q.rel_tol,
            max_intervals: q.max_intervals,
        };
        let r = integrate(&mut f, lo, hi, panel_q)?;
        evals += r.evaluations;
        err += r.error;
        sum += r.value;
        lo = hi;
        let target = q.abs_tol.max(q.rel_tol * sum.norm());
        if let Some(p) = prev {
            if r.value.norm() >= p.norm() && r.value.norm() > target {
                growing += 1;
                if growing > 20 {
                    return Err(ZetaError::Divergence(format!(
                        "panel integrals stop decreasing beyond t = {lo:.3e}"
                    )));
                }
            } else {
                growing = 0;
            }
            if p.norm() > 0.0 {
                let ratio = r.value / p;
                let stable = prev_ratio.is_some_and(|pr| (ratio - pr).norm() < 0.01);
                let rn = ratio.norm();
                if r.value.norm() <= target * 1e-3 {
                    return Ok(QuadratureResult { value: sum, error: err + r.value.norm(), evaluations: evals });
                }
                if stable && rn < 0.999 {
                    let tail = r.value * ratio / (1.0 - ratio);
                    // the extrapolated tail is trusted only once the next one is negligible
                    if (tail * (1.0 - rn)).norm() <= target {
                        return Ok(QuadratureResult {
                            value: sum + tail,
                            error: err + (tail * (1.0 - rn)).norm(),
                            evaluations: evals,
                        });
                    }
                }
                prev_ratio = Some(ratio);
            }
        }
        if r.value.norm() == 0.0 && prev.is_some_and(|p| p.norm() == 0.0) {
            return Ok(QuadratureResult { value: sum, error: err, evaluations: evals });
        }
        prev = Some(r.value);
    }
    Err(ZetaError::Divergence(format!(
        "no convergence after {MAX_PANELS} dyadic panels"
    )))
}
