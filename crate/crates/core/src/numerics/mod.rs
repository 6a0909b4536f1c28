//! Special functions, combinatorics and quadrature shared by the engines.

mod bernoulli;
mod branch;
mod combinatorics;
mod euler_maclaurin;
mod gamma;
mod polygamma;
mod quadrature;
mod summation;

pub use bernoulli::{bernoulli_number, bernoulli_poly, MAX_BERNOULLI};
pub use branch::BranchedLog;
pub use combinatorics::{binomial_general, factorial, stirling_first, MAX_STIRLING};
pub use euler_maclaurin::{cauchy_derivatives, euler_maclaurin_tail, euler_maclaurin_tail_analytic};
pub use gamma::{gamma, ln_gamma, ln_gamma_real, EULER_GAMMA};
pub use polygamma::{digamma, polygamma};
pub use quadrature::{integrate, integrate_to_infinity, Quadrature, QuadratureResult};
pub use summation::NeumaierSum;

pub use num_complex::Complex64 as Complex;

/// True when `x` is within `tol` of an integer.
pub fn is_integer(x: f64, tol: f64) -> bool {
    (x - x.round()).abs() <= tol
}
