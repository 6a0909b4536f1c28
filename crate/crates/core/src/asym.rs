//! Large-|z| asymptotics `ln F(z) ~ Σ d_{j,k} z^{α−j/m} ln^k z` and what they
//! determine: pole locations and residues, ζ(0), ζ'(0), ζ at integers n ≤ α,
//! and the closed-form block 𝓛_asy that carries the poles of the continuation.

use std::f64::consts::PI;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};
use crate::numerics::{factorial, is_integer, BranchedLog, Complex, NeumaierSum};
use crate::taylor::LogCoeffs;

/// Coefficients at or below this magnitude count as absent.
pub const COEFF_THRESHOLD: f64 = 1e-14;
/// Leading coefficients below this are reported as a possible cancellation.
pub const CANCELLATION_WARN: f64 = 1e-10;

const INTEGER_TOL: f64 = 1e-12;
/// |s − pole| below which the closed forms are treated as singular.
const POLE_EPS: f64 = 1e-14;

const I: Complex = Complex::new(0.0, 1.0);
const TWO_PI_I: Complex = Complex::new(0.0, 2.0 * PI);

/// Taylor coefficients of `ln(1 + Σ_{m≥1} C_m y^m)` from `C_1..C_N`.
pub fn log_compose(raw: &[Complex]) -> Vec<Complex> {
    let mut out: Vec<Complex> = Vec::with_capacity(raw.len());
    for j in 1..=raw.len() {
        let mut acc = NeumaierSum::new();
        acc.add(raw[j - 1]);
        for l in 1..j {
            acc.add(-(l as f64 / j as f64) * raw[j - l - 1] * out[l - 1]);
        }
        out.push(acc.value());
    }
    out
}

/// Table of asymptotic coefficients `d_{j,k}` (0 ≤ j ≤ N, 0 ≤ k ≤ M) for the
/// exponents `α − j/m`, with the branch angle Ψ of the cut and the sector
/// value of `ln F(0)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "AsymJson", into = "AsymJson")]
pub struct AsymExpansion {
    alpha: f64,
    m: usize,
    max_log: usize,
    depth: usize,
    psi: f64,
    delta: f64,
    ln_f0: Option<Complex>,
    d: Vec<Vec<Complex>>,
}

impl AsymExpansion {
    /// Empty table; the remainder margin δ defaults to `1/(2m)`.
    pub fn new(alpha: f64, m: usize, max_log: usize, depth: usize, psi: f64) -> Result<Self> {
        if m == 0 {
            return Err(ZetaError::InvalidTable("m must be positive".into()));
        }
        Self::with_parts(alpha, m, max_log, depth, psi, 0.5 / m as f64)
    }

    fn with_parts(alpha: f64, m: usize, max_log: usize, depth: usize, psi: f64, delta: f64) -> Result<Self> {
        if !alpha.is_finite() || !psi.is_finite() {
            return Err(ZetaError::InvalidTable("alpha and psi must be finite".into()));
        }
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(ZetaError::InvalidTable(format!("delta must be positive, got {delta}")));
        }
        if depth as f64 / m as f64 <= alpha - delta {
            return Err(ZetaError::InvalidTable(format!(
                "depth N = {depth} too small: need N/m > alpha - delta = {}",
                alpha - delta
            )));
        }
        Ok(Self {
            alpha,
            m,
            max_log,
            depth,
            psi,
            delta,
            ln_f0: None,
            d: vec![vec![Complex::new(0.0, 0.0); max_log + 1]; depth + 1],
        })
    }

    pub fn with_delta(mut self, delta: f64) -> Result<Self> {
        let fresh = Self::with_parts(self.alpha, self.m, self.max_log, self.depth, self.psi, delta)?;
        self.delta = fresh.delta;
        Ok(self)
    }

    pub fn with_ln_f0(mut self, ln_f0: Complex) -> Self {
        self.ln_f0 = Some(ln_f0);
        self
    }

    pub fn clear_ln_f0(mut self) -> Self {
        self.ln_f0 = None;
        self
    }

    pub fn with_psi(mut self, psi: f64) -> Self {
        self.psi = psi;
        self
    }

    pub fn set(&mut self, j: usize, k: usize, value: Complex) -> Result<()> {
        if j > self.depth || k > self.max_log {
            return Err(ZetaError::InvalidTable(format!(
                "entry ({j},{k}) outside the table 0..={} x 0..={}",
                self.depth, self.max_log
            )));
        }
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(ZetaError::InvalidTable(format!("entry ({j},{k}) is not finite")));
        }
        self.d[j][k] = value;
        Ok(())
    }

    /// Builder form of [`set`](Self::set).
    pub fn with(mut self, j: usize, k: usize, value: Complex) -> Result<Self> {
        self.set(j, k, value)?;
        Ok(self)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn m(&self) -> usize {
        self.m
    }
    /// Largest log power M.
    pub fn max_log(&self) -> usize {
        self.max_log
    }
    /// Depth N.
    pub fn depth(&self) -> usize {
        self.depth
    }
    pub fn psi(&self) -> f64 {
        self.psi
    }
    pub fn delta(&self) -> f64 {
        self.delta
    }
    pub fn ln_f0(&self) -> Option<Complex> {
        self.ln_f0
    }

    /// `d_{j,k}`, zero outside the table.
    pub fn coeff(&self, j: usize, k: usize) -> Complex {
        self.d
            .get(j)
            .and_then(|row| row.get(k))
            .copied()
            .unwrap_or_default()
    }

    /// The exponent `α − j/m`.
    pub fn exponent(&self, j: usize) -> f64 {
        self.alpha - j as f64 / self.m as f64
    }

    /// Left edge `α − N/m − δ` of the strip where the table is valid.
    pub fn strip_edge(&self) -> f64 {
        self.exponent(self.depth) - self.delta
    }

    /// Row index with exponent `e`, if `m(α − e)` is a nonnegative integer
    /// (possibly beyond the table depth).
    pub fn index_of(&self, e: f64) -> Option<usize> {
        let x = self.m as f64 * (self.alpha - e);
        (is_integer(x, 1e-9) && x > -0.5).then(|| x.round() as usize)
    }

    /// Largest k with `|d_{j,k}| > COEFF_THRESHOLD`.
    pub fn kbar(&self, j: usize) -> Option<usize> {
        self.d.get(j)?.iter().rposition(|c| c.norm() > COEFF_THRESHOLD)
    }

    fn zero_row(&self) -> Result<Option<usize>> {
        if self.strip_edge() >= 0.0 {
            return Err(ZetaError::InsufficientDepth(format!(
                "s = 0 lies left of the strip edge {}",
                self.strip_edge()
            )));
        }
        Ok(self.index_of(0.0))
    }

    /// Residue at `α − j/m` from the d-row, valid at every pole including s = 0.
    fn residue_raw(&self, j: usize) -> Complex {
        let e = self.exponent(j);
        let big_e = if is_integer(e, INTEGER_TOL) {
            Complex::new(1.0, 0.0)
        } else {
            (TWO_PI_I * e).exp()
        };
        let tpe = TWO_PI_I * e;
        let mut acc = NeumaierSum::new();
        for (k, &d) in self.d[j].iter().enumerate() {
            if d == Complex::default() {
                continue;
            }
            let term = match k {
                0 => d * e * (big_e - 1.0),
                1 => d * ((tpe + 1.0) * big_e - 1.0),
                _ => d * TWO_PI_I.powu(k as u32 - 1) * big_e * (tpe + k as f64),
            };
            acc.add(term);
        }
        acc.value() / TWO_PI_I
    }

    fn pole_order(&self, j: usize) -> Option<usize> {
        let kbar = self.kbar(j)?;
        let e = self.exponent(j);
        if !is_integer(e, INTEGER_TOL) {
            Some(kbar + 1)
        } else if e.round() != 0.0 {
            (kbar >= 1).then_some(kbar)
        } else if kbar >= 2 && self.residue_raw(j).norm() > COEFF_THRESHOLD {
            Some(kbar - 1)
        } else {
            None
        }
    }

    /// Residue of ζ at the pole `α − j/m`.
    pub fn residue_at(&self, j: usize) -> Result<Complex> {
        if j > self.depth {
            return Err(ZetaError::Range {
                n: j as i64,
                reason: format!("row beyond table depth {}", self.depth),
            });
        }
        match self.pole_order(j) {
            Some(_) => Ok(self.residue_raw(j)),
            None => Err(ZetaError::Domain(format!(
                "s = {} is not a pole",
                self.exponent(j)
            ))),
        }
    }

    /// ζ(0) as fixed by the row with exponent 0, if any.
    pub fn zeta_at_zero(&self) -> ZeroValue {
        let j0 = match self.zero_row() {
            Ok(Some(j)) => j,
            Ok(None) => return ZeroValue::Value { value: Complex::default() },
            Err(e) => return ZeroValue::Unavailable { reason: e.to_string() },
        };
        match self.kbar(j0) {
            None | Some(0) | Some(1) => ZeroValue::Value { value: self.coeff(j0, 1) },
            Some(kbar) => {
                let residue = self.residue_raw(j0);
                if residue.norm() > COEFF_THRESHOLD {
                    ZeroValue::Pole { order: kbar - 1, residue }
                } else {
                    ZeroValue::Indeterminate
                }
            }
        }
    }

    /// All poles in the strip, plus the values at s = 0.
    pub fn classify_poles(&self) -> PoleReport {
        let mut poles = Vec::new();
        for j in 0..=self.depth {
            let Some(order) = self.pole_order(j) else { continue };
            let kbar = self.kbar(j).expect("pole rows are nonzero");
            poles.push(Pole {
                location: self.exponent(j),
                j,
                order,
                residue: self.residue_raw(j),
                possible_cancellation: self.coeff(j, kbar).norm() < CANCELLATION_WARN,
            });
        }
        PoleReport {
            poles,
            zeta0: self.zeta_at_zero(),
            zeta_prime0: self.zeta_prime_zero().ok(),
        }
    }

    fn zero_row_for_derivative(&self) -> Result<(Complex, Option<usize>)> {
        let j0 = self.zero_row()?;
        if let Some(j) = j0 {
            if self.kbar(j).is_some_and(|k| k >= 2) {
                return Err(ZetaError::Pole {
                    location: Complex::default(),
                    residue: Some(self.residue_raw(j)),
                });
            }
        }
        let ln_f0 = self
            .ln_f0
            .ok_or_else(|| ZetaError::Missing("ln F(0) is not set on this table".into()))?;
        Ok((ln_f0, j0))
    }

    /// ζ'(0) = iπ d_{j',1} + d_{j',0} − ln F(0), or −ln F(0) without a j'.
    pub fn zeta_prime_zero(&self) -> Result<Complex> {
        let (ln_f0, j0) = self.zero_row_for_derivative()?;
        Ok(match j0 {
            Some(j) => I * PI * self.coeff(j, 1) + self.coeff(j, 0) - ln_f0,
            None => -ln_f0,
        })
    }

    /// ζ'(0) for a real sequence with `negatives` negative elements, where the
    /// imaginary parts of ln F(0) and of the d-row are fixed by that count.
    pub fn zeta_prime_zero_real(&self, negatives: usize) -> Result<Complex> {
        let (ln_f0, j0) = self.zero_row_for_derivative()?;
        let (d0, d1) = j0.map_or((Complex::default(), Complex::default()), |j| {
            (self.coeff(j, 0), self.coeff(j, 1))
        });
        Ok(Complex::new(d0.re - PI * d1.im - ln_f0.re, PI * negatives as f64))
    }

    /// ζ(n) for a nonzero integer n ≤ α. `logc` (the b_n of ln F about 0) is
    /// needed only for n ≥ 1.
    pub fn zeta_int_leq_alpha(&self, logc: Option<&LogCoeffs>, n: i64) -> Result<Complex> {
        let nf = n as f64;
        if n == 0 {
            return Err(ZetaError::Domain("n = 0 is handled by the value at zero".into()));
        }
        if nf > self.alpha + INTEGER_TOL {
            return Err(ZetaError::Range {
                n,
                reason: format!("n > alpha = {}; use the Taylor recursion", self.alpha),
            });
        }
        if nf <= self.strip_edge() {
            return Err(ZetaError::InsufficientDepth(format!(
                "s = {n} lies left of the strip edge {}",
                self.strip_edge()
            )));
        }
        let d0 = match self.index_of(nf) {
            Some(jt) if jt > self.depth => {
                return Err(ZetaError::InsufficientDepth(format!(
                    "needs row {jt}, table depth is {}",
                    self.depth
                )))
            }
            Some(jt) => {
                if self.kbar(jt).is_some_and(|k| k >= 1) {
                    return Err(ZetaError::Pole {
                        location: Complex::new(nf, 0.0),
                        residue: Some(self.residue_raw(jt)),
                    });
                }
                self.coeff(jt, 0)
            }
            None => Complex::default(),
        };
        if n < 0 {
            return Ok(nf * d0);
        }
        let logc = logc.ok_or_else(|| {
            ZetaError::Missing(format!("log coefficient b_{n} is needed for zeta({n})"))
        })?;
        if n as usize > logc.len() {
            return Err(ZetaError::Missing(format!("log coefficient b_{n} not available")));
        }
        Ok(nf * (d0 - logc.get(n as usize)))
    }

    /// Laurent coefficients `A_p` (index p ≥ 1) of row j in powers of
    /// `w = s − e`, with `L = ln R + iΨ`, so that
    /// `∫_R^∞ t^{−s} d/dt[row(t e^{iΨ})] dt = e^{ieΨ} R^{−w} Σ_p A_p w^{−p}`.
    fn row_laurent(&self, j: usize, big_l: Complex) -> Vec<Complex> {
        let e = self.exponent(j);
        let mut a = vec![Complex::default(); self.max_log + 2];
        for (k, &d) in self.d[j].iter().enumerate() {
            if d == Complex::default() {
                continue;
            }
            let kf = factorial(k);
            a[k + 1] += d * e * kf;
            for l in 0..k {
                let low = big_l.powu((k - 1 - l) as u32) / factorial(k - 1 - l);
                let high = big_l.powu((k - l) as u32) / factorial(k - l) * e;
                a[l + 1] += d * kf * (low + high);
            }
        }
        a
    }

    fn row_is_zero(&self, j: usize) -> bool {
        self.d[j].iter().all(|c| *c == Complex::default())
    }

    fn pole_error(&self, j: usize) -> ZetaError {
        ZetaError::Pole {
            location: Complex::new(self.exponent(j), 0.0),
            residue: self.residue_at(j).ok(),
        }
    }

    /// The closed-form asymptotic block
    /// `𝓛(s) = e^{is(π−Ψ)} sin(πs)/π · Σ_{j,k} d_{j,k} e^{ieΨ} ∫_R^∞ t^{−s} d/dt[t^e ln^k(te^{iΨ})] dt`
    /// continued in s. Removable singularities at integer exponents are
    /// resolved through the sin(πs) factor.
    pub fn l_asy_eval(&self, s: Complex, r: f64) -> Result<Complex> {
        if r <= 0.0 {
            return Err(ZetaError::Domain(format!("radius must be positive, got {r}")));
        }
        let big_l = Complex::new(r.ln(), self.psi);
        let rot = (I * s * (PI - self.psi)).exp();
        let prefactor = rot * (PI * s).sin() / PI;
        let mut acc = NeumaierSum::new();
        for j in 0..=self.depth {
            if self.row_is_zero(j) {
                continue;
            }
            let e = self.exponent(j);
            let w = s - e;
            let a = self.row_laurent(j, big_l);
            let outer = (I * e * self.psi).exp() * (-w * r.ln()).exp();
            let near = w.norm() < POLE_EPS;
            let term = if is_integer(e, INTEGER_TOL) {
                // sin(πs)/π = (−1)^n w sinc(πw) absorbs one power of w
                let sign = if (e.round() as i64) % 2 == 0 { 1.0 } else { -1.0 };
                if near {
                    if self.pole_order(j).is_some() {
                        return Err(self.pole_error(j));
                    }
                    rot * sign * a[1]
                } else {
                    let laurent: Complex = a
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(p, ap)| ap * w.powi(1 - p as i32))
                        .sum();
                    rot * sign * sinc(PI * w) * laurent
                }
            } else {
                if near {
                    return Err(self.pole_error(j));
                }
                let laurent: Complex = a
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(p, ap)| ap * w.powi(-(p as i32)))
                    .sum();
                prefactor * laurent
            };
            acc.add(outer * term);
        }
        Ok(acc.value())
    }

    /// `Σ_{j ∈ rows} Σ_k d_{j,k} e^{ieΨ} ∫_T^∞ t^{−s} d/dt[t^e ln^k(te^{iΨ})] dt`
    /// in closed form (continued in s), without the sin(πs) prefactor.
    pub fn ray_tail(&self, rows: Range<usize>, s: Complex, t: f64) -> Result<Complex> {
        let big_l = Complex::new(t.ln(), self.psi);
        let mut acc = NeumaierSum::new();
        for j in rows.start..rows.end.min(self.depth + 1) {
            if self.row_is_zero(j) {
                continue;
            }
            let e = self.exponent(j);
            let w = s - e;
            if w.norm() < POLE_EPS {
                return Err(ZetaError::Domain(format!(
                    "ray integral diverges logarithmically at s = {e}"
                )));
            }
            let a = self.row_laurent(j, big_l);
            let laurent: Complex = a
                .iter()
                .enumerate()
                .skip(1)
                .map(|(p, ap)| ap * w.powi(-(p as i32)))
                .sum();
            acc.add((I * e * self.psi).exp() * (-w * t.ln()).exp() * laurent);
        }
        Ok(acc.value())
    }

    /// `d/dt` of the asymptotic sum over rows `0..=upto` along the ray,
    /// `Σ d_{j,k} e^{ieΨ} t^{e−1} ln^{k−1}(te^{iΨ}) [k + e ln(te^{iΨ})]`.
    pub fn ray_derivative(&self, t: f64, upto: usize) -> Complex {
        let big_l = Complex::new(t.ln(), self.psi);
        let mut acc = NeumaierSum::new();
        for j in 0..=upto.min(self.depth) {
            let e = self.exponent(j);
            let base = (I * e * self.psi).exp() * t.powf(e - 1.0);
            for (k, &d) in self.d[j].iter().enumerate() {
                if d == Complex::default() {
                    continue;
                }
                let bracket = if k == 0 {
                    Complex::new(e, 0.0)
                } else {
                    big_l.powu(k as u32 - 1) * (k as f64 + e * big_l)
                };
                acc.add(d * base * bracket);
            }
        }
        acc.value()
    }

    /// `Σ_{j ≤ upto} d_{j,k} z^{α−j/m} ln^k z` on the branch with cut along Ψ.
    pub fn ln_f(&self, z: Complex, upto: usize) -> Complex {
        let lz = BranchedLog::new(self.psi).ln(z);
        let mut acc = NeumaierSum::new();
        for j in 0..=upto.min(self.depth) {
            let pw = (lz * self.exponent(j)).exp();
            for (k, &d) in self.d[j].iter().enumerate() {
                if d != Complex::default() {
                    acc.add(d * pw * lz.powu(k as u32));
                }
            }
        }
        acc.value()
    }

    /// Number of rows that must be kept so the subtracted ray integrand
    /// decays at least like `t^{−1−margin}` for this s.
    pub fn rows_for_decay(&self, s: Complex, margin: f64) -> usize {
        // remainder after rows 0..=n behaves like t^{e_{n+1} − 1 − Re s}
        (0..=self.depth)
            .find(|&n| self.exponent(n + 1) - s.re < -margin)
            .unwrap_or(self.depth)
    }

    /// Copy with rows beyond `upto` zeroed (same depth and branch data).
    pub fn truncated(&self, upto: usize) -> Self {
        let mut t = self.clone();
        for row in t.d.iter_mut().skip(upto + 1) {
            row.fill(Complex::new(0.0, 0.0));
        }
        t
    }
}

fn sinc(z: Complex) -> Complex {
    if z.norm() < 1e-3 {
        let z2 = z * z;
        1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0
    } else {
        z.sin() / z
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Pole {
    pub location: f64,
    pub j: usize,
    pub order: usize,
    #[serde(with = "crate::json::complex")]
    pub residue: Complex,
    pub possible_cancellation: bool,
}

/// ζ(0), which can be a value, a pole, or undecidable from the table.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ZeroValue {
    Value {
        #[serde(with = "crate::json::complex")]
        value: Complex,
    },
    Pole {
        order: usize,
        #[serde(with = "crate::json::complex")]
        residue: Complex,
    },
    /// The s = 0 row has log powers ≥ 2 but they cancel in the residue.
    Indeterminate,
    Unavailable {
        reason: String,
    },
}

impl ZeroValue {
    pub fn value(&self) -> Option<Complex> {
        match self {
            ZeroValue::Value { value } => Some(*value),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoleReport {
    pub poles: Vec<Pole>,
    pub zeta0: ZeroValue,
    #[serde(with = "crate::json::complex_opt")]
    pub zeta_prime0: Option<Complex>,
}

impl PoleReport {
    pub fn pole_at(&self, location: f64) -> Option<&Pole> {
        self.poles.iter().find(|p| (p.location - location).abs() < 1e-9)
    }
}

#[derive(Serialize, Deserialize)]
struct DEntry {
    j: usize,
    k: usize,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct AsymJson {
    alpha: f64,
    m: usize,
    #[serde(rename = "M")]
    max_log: usize,
    #[serde(rename = "N")]
    depth: usize,
    psi: f64,
    #[serde(rename = "lnF0", with = "crate::json::complex_opt", default)]
    ln_f0: Option<Complex>,
    #[serde(default)]
    delta: Option<f64>,
    d: Vec<DEntry>,
}

impl TryFrom<AsymJson> for AsymExpansion {
    type Error = ZetaError;

    fn try_from(js: AsymJson) -> Result<Self> {
        let mut table = Self::new(js.alpha, js.m, js.max_log, js.depth, js.psi)?;
        if let Some(delta) = js.delta {
            table = table.with_delta(delta)?;
        }
        table.ln_f0 = js.ln_f0;
        for e in js.d {
            table.set(e.j, e.k, Complex::new(e.re, e.im))?;
        }
        Ok(table)
    }
}

impl From<AsymExpansion> for AsymJson {
    fn from(t: AsymExpansion) -> Self {
        let mut d = Vec::new();
        for (j, row) in t.d.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if *c != Complex::default() {
                    d.push(DEntry { j, k, re: c.re, im: c.im });
                }
            }
        }
        AsymJson {
            alpha: t.alpha,
            m: t.m,
            max_log: t.max_log,
            depth: t.depth,
            psi: t.psi,
            ln_f0: t.ln_f0,
            delta: Some(t.delta),
            d,
        }
    }
}
