use super::{CatalogModel, CharFn, FValue, ModelSpec, SERIES_ORDER};
use crate::asym::{log_compose, AsymExpansion};
use crate::error::{Result, ZetaError};
use crate::numerics::{ln_gamma, Complex, NeumaierSum};
use crate::taylor::PowerSeries;

const MAX_MODULUS: f64 = 600.0;

fn nonpositive_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Maclaurin sums of M(a,b,z) and M'(a,b,z).
fn kummer_series(a: Complex, b: Complex, z: Complex) -> (Complex, Complex) {
    let mut f = NeumaierSum::new();
    let mut df = NeumaierSum::new();
    let mut term = Complex::new(1.0, 0.0); // c_n zⁿ
    f.add(term);
    for n in 0..10_000usize {
        let nf = n as f64;
        // n c_n z^{n−1} summed as (n+1) c_{n+1} zⁿ = c_n zⁿ (a+n)/(b+n)
        let dterm = term * (a + nf) / (b + nf);
        df.add(dterm);
        term = dterm * z / (nf + 1.0);
        f.add(term);
        if nf > z.norm() && term.norm() <= 1e-18 * f.value().norm() && dterm.norm() <= 1e-18 * df.value().norm() {
            break;
        }
    }
    (f.value(), df.value())
}

/// (M(a,b,z), M'(a,b,z)); left of the imaginary axis via Kummer's
/// transformation M(a,b,z) = e^z M(b−a,b,−z).
pub(super) fn chf_f(a: Complex, b: Complex, z: Complex) -> Result<FValue> {
    if z.norm() > MAX_MODULUS {
        return Err(ZetaError::Domain(format!("M(a, b, z) is evaluated for |z| ≤ {MAX_MODULUS}")));
    }
    if z.re >= 0.0 {
        let (f, df) = kummer_series(a, b, z);
        return Ok(FValue::plain(f, df));
    }
    let (g, dg) = kummer_series(b - a, b, -z);
    Ok(FValue { ln_scale: z, f: g, df: g - dg })
}

/// M(a, b, z): α = 1, m = 1, M = 1, ray Ψ = 0, ln F(0) = 0.
pub fn chf_model(a: Complex, b: Complex, depth: usize) -> Result<CatalogModel> {
    if nonpositive_integer(a) || nonpositive_integer(b) || nonpositive_integer(b - a) {
        return Err(ZetaError::Domain(format!(
            "confluent model needs a, b, b − a outside the nonpositive integers (a = {a}, b = {b})"
        )));
    }
    let mut t = AsymExpansion::new(1.0, 1, 1, depth, 0.0)?.with_ln_f0(Complex::default());
    t.set(0, 0, Complex::new(1.0, 0.0))?;
    t.set(1, 1, a - b)?;
    t.set(1, 0, ln_gamma(b) - ln_gamma(a))?;
    // C_n = (1−a)_n (b−a)_n / n!
    let mut cn = Complex::new(1.0, 0.0);
    let raw: Vec<Complex> = (1..=depth.saturating_sub(1))
        .map(|n| {
            let nf = n as f64;
            cn *= (nf - a) * (b - a + nf - 1.0) / nf;
            cn
        })
        .collect();
    for (j, f) in log_compose(&raw).into_iter().enumerate() {
        t.set(j + 2, 0, f)?;
    }
    // c_{n+1}/c_n = (a+n)/((b+n)(n+1))
    let mut c = vec![Complex::new(1.0, 0.0)];
    for n in 0..SERIES_ORDER {
        let nf = n as f64;
        let next = c[n] * (a + nf) / ((b + nf) * (nf + 1.0));
        c.push(next);
    }
    let mut notes = vec![
        "ln F(0) = 2πik is taken with k = 0; other continuation paths shift ζ'(0) by 2πik".to_string(),
    ];
    let positive_axis_clear = a.im == 0.0 && b.im == 0.0 && a.re > 0.0 && b.re > 0.0;
    if !positive_axis_clear {
        notes.push("ray Ψ = 0 is not verified to avoid the zeros (zeros are not generated)".into());
    }
    Ok(CatalogModel {
        spec: ModelSpec::Chf { a: a.re, b: b.re },
        series: PowerSeries::new(c)?,
        asym: t,
        zeros: None,
        func: CharFn::Chf { a, b },
        negatives: None,
        notes,
    })
}
