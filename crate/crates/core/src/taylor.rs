//! Values at positive integers from the Taylor coefficients of F.
//!
//! With ln(F(z)/c₀) = Σ b_j z^j, every n above the convergence exponent α has
//! ζ(n) = −n·b_n. The same numbers come out of ordinary Bell polynomials and
//! out of the universal sum rule, which the tests use as cross-checks.

use crate::error::{Result, ZetaError};
use crate::numerics::{factorial, Complex};
use serde::{Deserialize, Serialize};

/// Truncated Taylor series c₀ + c₁z + … + c_N z^N.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    coeffs: Vec<Complex>,
}

/// Taylor coefficients b₁..b_N of ln(F(z)/c₀); index 0 is unused and zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LogCoeffs {
    b: Vec<Complex>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(ZetaError::Domain("a power series needs at least c₀".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// c_j, or zero past the truncation order.
    pub fn coeff(&self, j: usize) -> Complex {
        self.coeffs.get(j).copied().unwrap_or_default()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Series of F'(z): c̃_m = (m+1)c_{m+1}.
    pub fn derivative(&self) -> Self {
        let coeffs: Vec<Complex> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, &c)| c * m as f64)
            .collect();
        Self {
            coeffs: if coeffs.is_empty() { vec![Complex::default()] } else { coeffs },
        }
    }

    pub fn scale(&self, k: Complex) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Truncated product, keeping the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|i| (0..=i).map(|j| self.coeff(j) * other.coeff(i - j)).sum())
            .collect();
        Self { coeffs }
    }

    /// Series of F(z + h) at the same order, c̃_k = Σ_{j≥k} C(j,k) h^{j−k} c_j.
    /// Only as good as the truncated tail Σ_{j>N} c_j h^{j−k} is small.
    pub fn shifted(&self, h: Complex) -> Self {
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                // C(j,k) h^{j−k} built up from j = k
                let mut w = Complex::new(1.0, 0.0);
                let mut acc = Complex::default();
                for j in k..=n {
                    if j > k {
                        w *= h * j as f64 / (j - k) as f64;
                    }
                    acc += w * self.coeffs[j];
                }
                acc
            })
            .collect();
        Self { coeffs }
    }

    /// exp(Σ_{j≥1} g_j z^j) truncated at order `n`, from g = [0, g₁, g₂, …].
    pub fn exp_of(g: &[Complex], n: usize) -> Self {
        // e' = g' e, so j e_j = Σ_{ℓ=1}^{j} ℓ g_ℓ e_{j−ℓ}
        let g_at = |l: usize| g.get(l).copied().unwrap_or_default();
        let mut e = vec![Complex::new(1.0, 0.0)];
        for j in 1..=n {
            let s: Complex = (1..=j).map(|l| g_at(l) * l as f64 * e[j - l]).sum();
            e.push(s / j as f64);
        }
        Self { coeffs: e }
    }
}

impl LogCoeffs {
    /// From b₁..b_N given directly (e.g. from polygamma values).
    pub fn from_b(b: &[Complex]) -> Self {
        let mut v = Vec::with_capacity(b.len() + 1);
        v.push(Complex::default());
        v.extend_from_slice(b);
        Self { b: v }
    }

    /// b_j for j ≥ 1 (zero past the truncation order).
    pub fn get(&self, j: usize) -> Complex {
        self.b.get(j).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.b.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// [0, b₁, …, b_N].
    pub fn as_slice(&self) -> &[Complex] {
        &self.b
    }

    /// −n·b_n with no check on n.
    pub fn zeta_raw(&self, n: usize) -> Result<Complex> {
        if n == 0 || n > self.len() {
            return Err(ZetaError::InsufficientDepth(format!(
                "b_{n} needs a series of order ≥ {n}, have {}",
                self.len()
            )));
        }
        Ok(-self.b[n] * n as f64)
    }
}

/// b₁ = c₁/c₀, b_j = c_j/c₀ − Σ_{ℓ<j} (ℓ/j)(c_{j−ℓ}/c₀) b_ℓ.
pub fn log_coeffs(series: &PowerSeries) -> Result<LogCoeffs> {
    let c0 = series.coeff(0);
    if c0.norm() == 0.0 {
        return Err(ZetaError::ZeroAtOrigin);
    }
    let hat: Vec<Complex> = series.coeffs.iter().map(|&c| c / c0).collect();
    let mut b = vec![Complex::default(); hat.len()];
    for j in 1..hat.len() {
        let corr: Complex = (1..j).map(|l| hat[j - l] * b[l] * (l as f64 / j as f64)).sum();
        b[j] = hat[j] - corr;
    }
    Ok(LogCoeffs { b })
}

/// ζ(n) = −n b_n for n > α. `allow_extended` admits n ≤ α for functions
/// where the recursion is known to hold at every positive integer.
pub fn zeta_pos_int(series: &PowerSeries, n: usize, alpha: f64, allow_extended: bool) -> Result<Complex> {
    if n == 0 {
        return Err(ZetaError::Range {
            n: 0,
            reason: "the recursion starts at n = 1".into(),
        });
    }
    if n as f64 <= alpha && !allow_extended {
        return Err(ZetaError::Range {
            n: n as i64,
            reason: format!(
                "n ≤ α = {alpha}; use the asymptotic correction n(d_(m(α−n),0) − b_n) instead"
            ),
        });
    }
    log_coeffs(series)?.zeta_raw(n)
}

/// Partitions of n as multiplicity vectors: mult[i] = how often part i occurs.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            cur[part] += 1;
            rec(rest - part, part, cur, out);
            cur[part] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut vec![0; n + 1], &mut out);
    out
}

/// Ordinary Bell polynomial B_{n,k}(c₁, …): coefficient of z^n in (Σ_{j≥1} c_j z^j)^k.
pub fn ordinary_bell(c: &[Complex], n: usize, k: usize) -> Complex {
    let c_at = |i: usize| c.get(i).copied().unwrap_or_default();
    partitions(n)
        .into_iter()
        .filter(|mult| mult.iter().sum::<usize>() == k)
        .map(|mult| {
            let mut term = Complex::new(factorial(k), 0.0);
            for (i, &j) in mult.iter().enumerate().skip(1) {
                if j > 0 {
                    term = term * c_at(i).powi(j as i32) / factorial(j);
                }
            }
            term
        })
        .sum()
}

const MAX_BELL_ORDER: usize = 20;

/// ζ(n) = −n Σ_k ((−1)^{k−1}/(k c₀^k)) B_{n,k}(c₁, …, c_{n−k+1}).
pub fn zeta_via_bell(series: &PowerSeries, n: usize) -> Result<Complex> {
    if n > MAX_BELL_ORDER {
        return Err(ZetaError::UnsupportedOrder {
            what: "Bell-polynomial evaluation",
            max: MAX_BELL_ORDER,
            got: n,
        });
    }
    if n == 0 {
        return Err(ZetaError::Range { n: 0, reason: "n must be positive".into() });
    }
    let c0 = series.coeff(0);
    if c0.norm() == 0.0 {
        return Err(ZetaError::ZeroAtOrigin);
    }
    let c: Vec<Complex> = (0..=n).map(|j| series.coeff(j)).collect();
    let mut sum = Complex::default();
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sum += ordinary_bell(&c, n, k) * sign / (c0.powi(k as i32) * k as f64);
    }
    Ok(-sum * n as f64)
}

/// Ordered compositions of n into 2 ≤ k ≤ max_parts parts, grouped by
/// partition: (parts, number of orderings).
fn compositions_by_partition(n: usize, max_parts: usize) -> Vec<(Vec<usize>, f64)> {
    partitions(n)
        .into_iter()
        .filter_map(|mult| {
            let k: usize = mult.iter().sum();
            if k < 2 || k > max_parts {
                return None;
            }
            let orderings = mult.iter().fold(factorial(k), |acc, &j| acc / factorial(j));
            let parts: Vec<usize> = mult
                .iter()
                .enumerate()
                .flat_map(|(i, &j)| std::iter::repeat_n(i, j))
                .collect();
            Some((parts, orderings))
        })
        .collect()
}

/// Right side of the universal exact sum rule:
/// (−1)^n n(1/n! − c₀^{n−1}c_n/c₁^n) ζ(1)^n + Σ_{j₁+…+j_k=n, n>k≥2} (−1)^k n/(k! j₁⋯j_k) ζ(j₁)⋯ζ(j_k).
///
/// `zeta(j)` must supply ζ(1)..ζ(n−1).
pub fn exact_sum_rule<Z: Fn(usize) -> Complex>(series: &PowerSeries, n: usize, zeta: Z) -> Result<Complex> {
    let c1 = series.coeff(1);
    if c1.norm() == 0.0 {
        return Err(ZetaError::Inapplicable("the exact sum rule needs c₁ ≠ 0".into()));
    }
    if n == 0 {
        return Err(ZetaError::Range { n: 0, reason: "n must be positive".into() });
    }
    let c0 = series.coeff(0);
    let nf = n as f64;
    let sign_n = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let lead = (Complex::new(1.0 / factorial(n), 0.0) - c0.powi(n as i32 - 1) * series.coeff(n) / c1.powi(n as i32))
        * (sign_n * nf);
    let mut total = lead * zeta(1).powi(n as i32);
    for (parts, orderings) in compositions_by_partition(n, n - 1) {
        let k = parts.len();
        let sign_k = if k % 2 == 0 { 1.0 } else { -1.0 };
        let denom = factorial(k) * parts.iter().map(|&j| j as f64).product::<f64>();
        let prod: Complex = parts.iter().map(|&j| zeta(j)).product();
        total += prod * (sign_k * nf * orderings / denom);
    }
    Ok(total)
}

/// Right side of the almost exact sum rule:
/// −n c_n/c₀ + Σ_{k≥2} (−1)^{#{j>α}} (n/k!) Π_{j≤α} b_j Π_{j>α} ζ(j)/j.
///
/// Whether the b_j with j ≤ α may themselves be traded for ζ values is left
/// to the caller.
pub fn almost_exact_sum_rule<Z: Fn(usize) -> Complex>(
    series: &PowerSeries,
    n: usize,
    alpha: f64,
    zeta: Z,
) -> Result<Complex> {
    let logc = log_coeffs(series)?;
    let nf = n as f64;
    let mut total = -series.coeff(n) / series.coeff(0) * nf;
    for (parts, orderings) in compositions_by_partition(n, n) {
        let k = parts.len();
        let mut term = Complex::new(nf * orderings / factorial(k), 0.0);
        for &j in &parts {
            if j as f64 > alpha {
                term *= -zeta(j) / j as f64;
            } else {
                term *= logc.get(j);
            }
        }
        total += term;
    }
    Ok(total)
}

/// Taylor coefficients of c₀⁻¹ F(z) exp(−Σ_{m=1}^{⌊α⌋} b_m z^m).
pub fn hadamardize(series: &PowerSeries, alpha: f64) -> Result<PowerSeries> {
    let logc = log_coeffs(series)?;
    let c0 = series.coeff(0);
    let p = (alpha.floor().max(0.0) as usize).min(series.order());
    let mut g = vec![Complex::default(); p + 1];
    for (m, gm) in g.iter_mut().enumerate().skip(1) {
        *gm = -logc.get(m);
    }
    let factor = PowerSeries::exp_of(&g, series.order());
    Ok(series.scale(c0.inv()).mul(&factor))
}
