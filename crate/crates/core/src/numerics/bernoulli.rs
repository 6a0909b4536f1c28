use super::combinatorics::binomial;
use super::Complex;
use crate::error::{Result, ZetaError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::sync::OnceLock;

/// Largest index held in the Bernoulli table.
pub const MAX_BERNOULLI: usize = 60;

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // exact rationals from Σ_{k<m} C(m+1, k) B_k = -(m+1) B_m
        let mut exact: Vec<BigRational> = Vec::with_capacity(MAX_BERNOULLI + 1);
        exact.push(BigRational::from_integer(BigInt::from(1)));
        for m in 1..=MAX_BERNOULLI {
            let mut acc = BigRational::zero();
            let mut c = BigInt::from(1);
            for (k, bk) in exact.iter().enumerate() {
                acc += bk * BigRational::from_integer(c.clone());
                c = c * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            exact.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        exact.iter().map(|b| b.to_f64().unwrap_or(f64::NAN)).collect()
    })
}

/// Table lookup for callers that already bound n.
pub(crate) fn bernoulli(n: usize) -> f64 {
    table()[n]
}

fn check(n: usize) -> Result<()> {
    if n > MAX_BERNOULLI {
        return Err(ZetaError::UnsupportedOrder {
            what: "Bernoulli numbers",
            max: MAX_BERNOULLI,
            got: n,
        });
    }
    Ok(())
}

/// Bernoulli number B_n with B_1 = -1/2, for n ≤ 60.
pub fn bernoulli_number(n: usize) -> Result<f64> {
    check(n)?;
    Ok(table()[n])
}

/// Bernoulli polynomial B_n(a) = Σ_k C(n,k) B_k a^{n-k}.
pub fn bernoulli_poly(n: usize, a: Complex) -> Result<Complex> {
    check(n)?;
    // Horner in a, from the constant term B_n upward
    let mut acc = Complex::new(0.0, 0.0);
    for k in 0..=n {
        acc = acc * a + binomial(n, k) * table()[k];
    }
    Ok(acc)
}
