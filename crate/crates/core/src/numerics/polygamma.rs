use super::bernoulli::bernoulli;
use super::combinatorics::factorial;
use super::Complex;
use std::f64::consts::PI;

/// Digamma ψ(z): upward recurrence to Re z ≥ 10, then the asymptotic series.
pub fn digamma(z: Complex) -> Complex {
    if z.re < -5.0 {
        // ψ(z) = ψ(1-z) - π cot(πz)
        let pz = z * PI;
        return digamma(1.0 - z) - PI * pz.cos() / pz.sin();
    }
    let mut w = z;
    let mut acc = Complex::new(0.0, 0.0);
    while w.re < 10.0 {
        acc -= w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv2;
    let mut series = w.ln() - inv * 0.5;
    for j in 1..=12 {
        series -= pow * (bernoulli(2 * j) / (2 * j) as f64);
        pow *= inv2;
    }
    series + acc
}

/// Polygamma ψ^{(k)}(z). The recurrence target grows with k so the
/// asymptotic series converges to working precision.
pub fn polygamma(k: usize, z: Complex) -> Complex {
    if k == 0 {
        return digamma(z);
    }
    let kf = factorial(k);
    let sign = if k.is_multiple_of(2) { -1.0 } else { 1.0 }; // (-1)^{k+1}
    let target = 10.0 + k as f64;
    let mut w = z;
    let mut acc = Complex::new(0.0, 0.0);
    while w.re < target {
        // ψ^{(k)}(w) = ψ^{(k)}(w+1) + (-1)^{k+1} k! / w^{k+1}
        acc += sign * kf * w.powi(-(k as i32) - 1);
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let lead = inv.powi(k as i32);
    let mut series = lead * factorial(k - 1) + lead * inv * (kf / 2.0);
    // ratio = (2j+k-1)!/(2j)!, starting from (k-1)! at j = 0
    let mut ratio = factorial(k - 1);
    let mut pow = lead * inv2;
    let mut prev_mag = f64::INFINITY;
    for j in 1..=25 {
        ratio *= ((2 * j + k - 2) * (2 * j + k - 1)) as f64 / ((2 * j - 1) * (2 * j)) as f64;
        let term = pow * (bernoulli(2 * j) * ratio);
        let mag = term.norm();
        series += term;
        if mag < 1e-17 * series.norm() || mag > prev_mag {
            break;
        }
        prev_mag = mag;
        pow *= inv2;
    }
    sign * series + acc
}
