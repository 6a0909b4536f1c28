//! Ready-made characteristic functions: Riemann 1/Γ(1−z), Hurwitz 1/Γ(a−z),
//! Airy Ai(−z), parabolic cylinder U(a,z) and confluent hypergeometric
//! M(a,b,z), each with its Taylor series, asymptotic table, zeros (where
//! real) and a pointwise evaluator.

mod airy;
mod chf;
mod closed_form;
mod pcf;
mod riemann;
mod zeros;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::asym::{AsymExpansion, PoleReport, ZeroValue};
use crate::error::{Result, ZetaError};
use crate::numerics::{BranchedLog, Complex};
use crate::taylor::{log_coeffs, zeta_pos_int, LogCoeffs, PowerSeries};

pub use airy::{airy_model, airy_zeros, AIRY_MAX_DEPTH};
pub use chf::chf_model;
pub use closed_form::ClosedForm;
pub use pcf::pcf_model;
pub use riemann::{hurwitz_model, riemann_model};
pub use zeros::ZeroSequence;

/// Taylor order used by every catalog series.
pub const SERIES_ORDER: usize = 40;

/// `F = e^{ln_scale}·f` and `F' = e^{ln_scale}·df`, so values far out on a
/// ray stay representable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FValue {
    pub ln_scale: Complex,
    pub f: Complex,
    pub df: Complex,
}

impl FValue {
    pub fn plain(f: Complex, df: Complex) -> Self {
        Self { ln_scale: Complex::default(), f, df }
    }

    pub fn value(&self) -> Complex {
        self.ln_scale.exp() * self.f
    }

    pub fn derivative(&self) -> Complex {
        self.ln_scale.exp() * self.df
    }

    /// F'/F.
    pub fn log_derivative(&self) -> Complex {
        self.df / self.f
    }

    /// ln F on the principal branch of ln f (defined modulo 2πi).
    pub fn ln_value(&self) -> Complex {
        self.ln_scale + self.f.ln()
    }
}

/// Which closed-form evaluator backs a model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CharFn {
    /// 1/Γ(1 − (z − offset)); offset 0 is Riemann, a − 1 is Hurwitz.
    InverseGamma { offset: Complex },
    /// Ai(−z).
    Airy,
    /// U(a, z).
    Pcf { a: f64 },
    /// M(a, b, z).
    Chf { a: Complex, b: Complex },
}

impl CharFn {
    pub fn eval(&self, z: Complex) -> Result<FValue> {
        match *self {
            CharFn::InverseGamma { offset } => Ok(riemann::inverse_gamma(z - offset)),
            CharFn::Airy => Ok(airy::airy_f(z)),
            CharFn::Pcf { a } => pcf::pcf_f(a, z),
            CharFn::Chf { a, b } => chf::chf_f(a, b, z),
        }
    }
}

/// Model selector as it appears on the command line and in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelSpec {
    Riemann,
    Hurwitz { a: f64 },
    Airy,
    Pcf { a: f64 },
    Chf { a: f64, b: f64 },
}

impl ModelSpec {
    pub fn build(&self) -> Result<CatalogModel> {
        match *self {
            ModelSpec::Riemann => riemann_model(),
            ModelSpec::Hurwitz { a } => hurwitz_model(Complex::new(a, 0.0)),
            ModelSpec::Airy => airy_model(AIRY_MAX_DEPTH),
            ModelSpec::Pcf { a } => pcf_model(a, 30),
            ModelSpec::Chf { a, b } => chf_model(Complex::new(a, 0.0), Complex::new(b, 0.0), 30),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ModelSpec::Riemann => "riemann",
            ModelSpec::Hurwitz { .. } => "hurwitz",
            ModelSpec::Airy => "airy",
            ModelSpec::Pcf { .. } => "pcf",
            ModelSpec::Chf { .. } => "chf",
        }
    }
}

/// How a value at an integer was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// −n·b_n from the Taylor coefficients.
    Recursion,
    /// From the asymptotic table (n ≤ α).
    Continuation,
    /// n < 0 with no matching asymptotic entry.
    StructuralZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntValue {
    pub n: i64,
    #[serde(with = "crate::json::complex")]
    pub value: Complex,
    pub method: Method,
}

/// A characteristic function together with everything the engines need.
#[derive(Debug, Clone)]
pub struct CatalogModel {
    spec: ModelSpec,
    series: PowerSeries,
    asym: AsymExpansion,
    zeros: Option<ZeroSequence>,
    func: CharFn,
    negatives: Option<usize>,
    notes: Vec<String>,
}

impl CatalogModel {
    pub fn spec(&self) -> ModelSpec {
        self.spec
    }

    pub fn name(&self) -> &'static str {
        self.spec.name()
    }

    pub fn series(&self) -> &PowerSeries {
        &self.series
    }

    pub fn asym(&self) -> &AsymExpansion {
        &self.asym
    }

    pub fn alpha(&self) -> f64 {
        self.asym.alpha()
    }

    pub fn psi(&self) -> f64 {
        self.asym.psi()
    }

    /// Zeros, for the models whose zeros are generated.
    pub fn zeros(&self) -> Option<&ZeroSequence> {
        self.zeros.as_ref()
    }

    pub fn char_fn(&self) -> CharFn {
        self.func
    }

    pub fn eval(&self, z: Complex) -> Result<FValue> {
        self.func.eval(z)
    }

    /// Caveats attached at construction (branch choices, unverified rays).
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn log_coeffs(&self) -> Result<LogCoeffs> {
        log_coeffs(&self.series)
    }

    /// ζ(n) for a nonzero integer: the Taylor recursion above α, the
    /// asymptotic table at or below it.
    pub fn zeta_int(&self, n: i64) -> Result<IntValue> {
        if n == 0 {
            return match self.asym.zeta_at_zero() {
                ZeroValue::Value { value } => Ok(IntValue { n, value, method: Method::Continuation }),
                ZeroValue::Pole { residue, .. } => Err(ZetaError::Pole {
                    location: Complex::default(),
                    residue: Some(residue),
                }),
                ZeroValue::Indeterminate => Err(ZetaError::Indeterminate(
                    "log powers at s = 0 cancel".into(),
                )),
                ZeroValue::Unavailable { reason } => Err(ZetaError::Missing(reason)),
            };
        }
        if n as f64 > self.alpha() {
            let value = zeta_pos_int(&self.series, n as usize, self.alpha(), false)?;
            return Ok(IntValue { n, value, method: Method::Recursion });
        }
        let logc = self.log_coeffs()?;
        let value = self.asym.zeta_int_leq_alpha(Some(&logc), n)?;
        let structural = n < 0
            && self
                .asym
                .index_of(n as f64)
                .is_none_or(|j| (0..=self.asym.max_log()).all(|k| self.asym.coeff(j, k) == Complex::default()));
        let method = if structural { Method::StructuralZero } else { Method::Continuation };
        Ok(IntValue { n, value, method })
    }

    /// ζ'(0). Real sequences use the count of negative elements to fix the
    /// imaginary part; others rely on the stored sector value of ln F(0).
    pub fn zeta_prime_zero(&self) -> Result<Complex> {
        match self.negatives {
            Some(k) => self.asym.zeta_prime_zero_real(k),
            None => self.asym.zeta_prime_zero(),
        }
    }

    pub fn poles(&self) -> PoleReport {
        let mut rep = self.asym.classify_poles();
        rep.zeta_prime0 = self.zeta_prime_zero().ok();
        rep
    }

    /// Known exact value at the integer n, if the catalog has one.
    pub fn closed_form(&self, n: i64) -> Option<ClosedForm> {
        closed_form::lookup(&self.spec, n)
    }

    /// Largest discrepancy, relative to the retained terms, between the
    /// asymptotic table and ln F along the ray at radius `t`.
    ///
    /// Rows are kept while their magnitude exceeds `1e-13·|ln F|`; the
    /// result is `|ln F − table| / |last retained term|` (mod 2πi).
    pub fn asymptotic_check(&self, t: f64) -> Result<f64> {
        let z = Complex::from_polar(t, self.psi());
        let exact = self.eval(z)?.ln_value();
        let lz = BranchedLog::new(self.psi()).ln(z);
        let scale = exact.norm().max(1.0);
        let mut acc = Complex::default();
        let mut last = f64::INFINITY;
        for j in 0..=self.asym.depth() {
            let pw = (lz * self.asym.exponent(j)).exp();
            let term: Complex = (0..=self.asym.max_log())
                .map(|k| self.asym.coeff(j, k) * pw * lz.powu(k as u32))
                .sum();
            if term.norm() == 0.0 {
                continue;
            }
            if term.norm() < 1e-13 * scale {
                break;
            }
            acc += term;
            last = term.norm();
        }
        let mut diff = exact - acc;
        diff.im -= 2.0 * PI * (diff.im / (2.0 * PI)).round();
        Ok(diff.norm() / last)
    }
}


#[cfg(test)]
mod value_tests {
    use super::*;

    fn check(spec: ModelSpec, ns: &[i64], tol: f64) {
        let m = spec.build().unwrap();
        for &n in ns {
            let want = m.closed_form(n).unwrap_or_else(|| panic!("{spec:?}: no closed form at {n}"));
            let got = m.zeta_int(n).unwrap().value;
            let err = (got - want.value).norm() / want.value.norm().max(1.0);
            assert!(err <= tol, "{spec:?} n = {n}: {got} vs {} ({})", want.value, want.expr);
        }
    }

    #[test]
    fn engine_matches_closed_forms() {
        check(ModelSpec::Riemann, &[2, 4, 6, 8, 10, 12, 0, -1, -2, -3, -5, -9], 1e-12);
        for a in [0.25, 0.5, 2.0, -2.5] {
            check(ModelSpec::Hurwitz { a }, &[0, -1, -2, -3, -6, -9], 1e-10);
        }
        check(ModelSpec::Airy, &[1, 2, 3, 4, 5, 0, -1, -2, -3, -4, -6, -9], 1e-11);
        for a in [0.0, 1.0, 2.5] {
            check(ModelSpec::Pcf { a }, &[0, 1, 2, 3, 4, 5, -1, -2, -3, -4, -6, -12], 1e-10);
        }
        for (a, b) in [(0.5, 1.5), (1.2, 2.7)] {
            check(ModelSpec::Chf { a, b }, &[0, 1, 2, 3, 4, 5, -1, -2, -3, -4], 1e-10);
        }
    }
}
