//! Linear maps λ_n = A·a_n + B of a sequence. The zeta function factors as
//! `ζ_{A,B}(s) = A^{−s} ζ(s; B/A)`, and the shifted factor is governed by the
//! asymptotic table Ω of ln F(z − B/A), built here from the table d of ln F.

use serde::Serialize;

use crate::asym::{AsymExpansion, Pole, PoleReport, ZeroValue};
use crate::error::{Result, ZetaError};
use crate::numerics::{binomial_general, factorial, stirling_first, Complex, NeumaierSum, MAX_STIRLING};
use crate::taylor::LogCoeffs;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftParams {
    #[serde(rename = "A", with = "crate::json::complex")]
    a: Complex,
    #[serde(rename = "B", with = "crate::json::complex")]
    b: Complex,
}

impl ShiftParams {
    pub fn new(a: Complex, b: Complex) -> Result<Self> {
        if a.norm() == 0.0 {
            return Err(ZetaError::Domain("A must be nonzero".into()));
        }
        Ok(Self { a, b })
    }

    pub fn identity() -> Self {
        Self { a: Complex::new(1.0, 0.0), b: Complex::default() }
    }

    pub fn a(&self) -> Complex {
        self.a
    }

    pub fn b(&self) -> Complex {
        self.b
    }

    /// μ = B/A.
    pub fn shift(&self) -> Complex {
        self.b / self.a
    }
}

/// Coefficient of `z^{e−(k−l+p)} ln^l z` (up to the factor C(k,l)) in the
/// large-z expansion of `(z − shift)^e ln^k(z − shift)`, with `e = α − j/m`:
/// `(−shift)^{k−l+p} Σ_{n=0}^{p} (k−l)!/(k−l+n)! · C(e, p−n) · s(k−l+n, k−l)`.
pub fn mu_coeff(p: usize, l: usize, k: usize, j: usize, shift: Complex, alpha: f64, m: usize) -> Complex {
    assert!(l <= k, "mu_coeff needs l ≤ k");
    let r = k - l;
    assert!(r + p <= MAX_STIRLING, "Stirling table holds n ≤ {MAX_STIRLING}");
    let e = Complex::new(alpha - j as f64 / m as f64, 0.0);
    let mut acc = NeumaierSum::new();
    for n in 0..=p {
        let ratio = factorial(r) / factorial(r + n);
        acc.add(binomial_general(e, p - n) * (ratio * stirling_first(r + n, r)));
    }
    (-shift).powu((r + p) as u32) * acc.value()
}

/// Table Ω of ln F(z − shift) in the same grid (α, m, M, N) as `asym`.
/// Ψ is kept and ln F(0) is cleared: the value ln F(−shift) depends on the
/// continuation path and must be supplied by the caller.
pub fn omega_table(asym: &AsymExpansion, shift: Complex) -> AsymExpansion {
    let (m, big_m, depth) = (asym.m(), asym.max_log(), asym.depth());
    let mut omega = asym.clone();
    for j in 0..=depth {
        for p in 0..=big_m {
            let mut acc = NeumaierSum::new();
            for l in 0..=(j / m).min(big_m - p) {
                for n in 0..=(j / m - l) {
                    let src = j - m * (l + n);
                    let d = asym.coeff(src, l + p);
                    if d == Complex::default() {
                        continue;
                    }
                    let binom = factorial(l + p) / (factorial(l) * factorial(p));
                    acc.add(d * binom * mu_coeff(n, p, l + p, src, shift, asym.alpha(), m));
                }
            }
            omega
                .set(j, p, acc.value())
                .expect("same shape as the source table");
        }
    }
    omega.clear_ln_f0()
}

/// ζ of the transformed sequence A·a_n + B.
#[derive(Debug, Clone)]
pub struct ShiftedZeta {
    params: ShiftParams,
    omega: AsymExpansion,
}

impl ShiftedZeta {
    /// `psi_prime` is the branch angle for the transformed sequence (default
    /// Ψ + Arg A); `ln_f_at_minus_shift` is the continued value ln F(−B/A).
    pub fn new(
        asym: &AsymExpansion,
        params: ShiftParams,
        psi_prime: Option<f64>,
        ln_f_at_minus_shift: Option<Complex>,
    ) -> Self {
        let psi_g = psi_prime.map_or(asym.psi(), |p| p - params.a.arg());
        let mut omega = omega_table(asym, params.shift()).with_psi(psi_g);
        if let Some(v) = ln_f_at_minus_shift {
            omega = omega.with_ln_f0(v);
        }
        Self { params, omega }
    }

    pub fn params(&self) -> ShiftParams {
        self.params
    }

    /// Ω table of the shift-only factor ζ(s; B/A).
    pub fn omega(&self) -> &AsymExpansion {
        &self.omega
    }

    /// Branch angle of the transformed sequence.
    pub fn psi_prime(&self) -> f64 {
        self.omega.psi() + self.params.a.arg()
    }

    fn a_pow(&self, s: f64) -> Complex {
        (-s * self.params.a.ln()).exp()
    }

    pub fn residue_at(&self, j: usize) -> Result<Complex> {
        Ok(self.a_pow(self.omega.exponent(j)) * self.omega.residue_at(j)?)
    }

    /// ζ'(0) = ζ'(0; B/A) − Ω_{j',1} ln A.
    pub fn zeta_prime_zero(&self) -> Result<Complex> {
        let base = self.omega.zeta_prime_zero()?;
        let omega_1 = self
            .omega
            .index_of(0.0)
            .map_or(Complex::default(), |j| self.omega.coeff(j, 1));
        Ok(base - omega_1 * self.params.a.ln())
    }

    /// ζ(n) at a nonzero integer. `logc_shifted` holds the log-Taylor
    /// coefficients of F(z − B/A) about 0 and is needed for n ≥ 1.
    pub fn zeta_at_int(&self, n: i64, logc_shifted: Option<&LogCoeffs>) -> Result<Complex> {
        let inner = if (n as f64) > self.omega.alpha() {
            let logc = logc_shifted.ok_or_else(|| {
                ZetaError::Missing(format!("log coefficient b_{n} of the shifted function"))
            })?;
            logc.zeta_raw(n as usize)?
        } else {
            self.omega.zeta_int_leq_alpha(logc_shifted, n)?
        };
        Ok(self.a_pow(n as f64) * inner)
    }

    /// Poles with residues scaled by A^{−s₀}; ζ(0) is unaffected by A.
    pub fn report(&self) -> PoleReport {
        let base = self.omega.classify_poles();
        let poles = base
            .poles
            .into_iter()
            .map(|p| Pole {
                residue: self.a_pow(p.location) * p.residue,
                ..p
            })
            .collect();
        PoleReport {
            poles,
            zeta0: base.zeta0,
            zeta_prime0: self.zeta_prime_zero().ok(),
        }
    }

    pub fn zeta_at_zero(&self) -> ZeroValue {
        self.omega.zeta_at_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RightmostPole {
    pub order: usize,
    #[serde(with = "crate::json::complex")]
    pub residue: Complex,
    /// Res ζ_{A,B} / Res ζ at s = α; equals A^{−α}.
    #[serde(with = "crate::json::complex")]
    pub residue_ratio: Complex,
}

/// Order and residue of the transformed function at the rightmost pole s = α,
/// which must be a pole of the original.
pub fn rightmost_pole_check(asym: &AsymExpansion, params: ShiftParams) -> Result<RightmostPole> {
    let original = asym.classify_poles();
    let before = original.pole_at(asym.alpha()).ok_or_else(|| {
        ZetaError::Domain(format!("s = alpha = {} is not a pole", asym.alpha()))
    })?;
    let shifted = ShiftedZeta::new(asym, params, None, None).report();
    let after = shifted.pole_at(asym.alpha()).ok_or_else(|| {
        ZetaError::Accuracy("the transformed table lost the rightmost pole".into())
    })?;
    if after.order != before.order {
        return Err(ZetaError::Accuracy(format!(
            "rightmost pole changed order from {} to {}",
            before.order, after.order
        )));
    }
    Ok(RightmostPole {
        order: after.order,
        residue: after.residue,
        residue_ratio: after.residue / before.residue,
    })
}
