use super::Complex;
use std::f64::consts::PI;

/// Logarithm with the cut along the ray at angle ψ: arguments lie in (ψ-2π, ψ].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchedLog {
    pub psi: f64,
}

impl BranchedLog {
    pub fn new(psi: f64) -> Self {
        Self { psi }
    }

    pub fn arg(&self, z: Complex) -> f64 {
        let mut theta = z.im.atan2(z.re);
        while theta > self.psi {
            theta -= 2.0 * PI;
        }
        while theta <= self.psi - 2.0 * PI {
            theta += 2.0 * PI;
        }
        theta
    }

    pub fn ln(&self, z: Complex) -> Complex {
        Complex::new(z.norm().ln(), self.arg(z))
    }

    /// z^s = exp(s ln_ψ z).
    pub fn pow(&self, z: Complex, s: Complex) -> Complex {
        (s * self.ln(z)).exp()
    }
}
