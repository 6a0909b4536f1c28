use std::f64::consts::PI;

use crate::numerics::Complex;

/// Continuous formula a(t) behind a sequence; a(n) is the n-th element
/// (exact for the arithmetic rule, asymptotic for Airy).
#[derive(Debug, Clone, Copy, PartialEq)]
enum Rule {
    /// a_n = first + (n − 1).
    Arithmetic { first: Complex },
    /// a_n = T(3π/8·(4n − 1)) for the zeros of Ai(−z).
    AiryAsymptotic,
}

/// The sequence {a_n}: refined zeros for n ≤ n_exact, the rule beyond.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSequence {
    alpha: f64,
    exact: Vec<Complex>,
    count: usize,
    rule: Rule,
    scale: Complex,
    offset: Complex,
}

impl ZeroSequence {
    pub(crate) fn arithmetic(first: Complex, count: usize) -> Self {
        Self {
            alpha: 1.0,
            exact: Vec::new(),
            count,
            rule: Rule::Arithmetic { first },
            scale: Complex::new(1.0, 0.0),
            offset: Complex::default(),
        }
    }

    pub(crate) fn airy(exact: Vec<f64>, count: usize) -> Self {
        Self {
            alpha: 1.5,
            exact: exact.into_iter().map(|x| Complex::new(x, 0.0)).collect(),
            count,
            rule: Rule::AiryAsymptotic,
            scale: Complex::new(1.0, 0.0),
            offset: Complex::default(),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Number of refined (numerically solved) zeros.
    pub fn n_exact(&self) -> usize {
        self.exact.len()
    }

    /// Number of elements listed by [`iter`](Self::iter).
    pub fn count(&self) -> usize {
        self.count
    }

    /// Same sequence, listing `count` elements.
    pub fn with_count(mut self, count: usize) -> Self {
        self.count = count.max(self.exact.len());
        self
    }

    /// The sequence A·a_n + B.
    pub fn affine(mut self, a: Complex, b: Complex) -> Self {
        self.offset = a * self.offset + b;
        self.scale *= a;
        self
    }

    /// a_n for n ≥ 1 (any n, not only n ≤ count).
    pub fn get(&self, n: usize) -> Complex {
        assert!(n >= 1, "sequence index starts at 1");
        match self.exact.get(n - 1) {
            Some(&z) => self.scale * z + self.offset,
            None => self.formula(Complex::new(n as f64, 0.0)),
        }
    }

    /// The rule continued to real or complex index t, analytic near the
    /// positive axis; used for Euler–Maclaurin tails.
    pub fn formula(&self, t: Complex) -> Complex {
        let raw = match self.rule {
            Rule::Arithmetic { first } => first + t - 1.0,
            Rule::AiryAsymptotic => airy_t(t * 4.0 - 1.0),
        };
        self.scale * raw + self.offset
    }

    pub fn iter(&self) -> impl Iterator<Item = Complex> + '_ {
        (1..=self.count).map(|n| self.get(n))
    }
}

/// T(3π/8·x): −T is the x-th zero of Ai, with x = 4n − 1.
fn airy_t(x: Complex) -> Complex {
    let t = x * (3.0 * PI / 8.0);
    airy_zero_seed(t)
}

/// t^{2/3}(1 + 5/48 t^{−2} − 5/36 t^{−4} + 77125/82944 t^{−6} − 108056875/6967296 t^{−8}).
pub(crate) fn airy_zero_seed(t: Complex) -> Complex {
    let u = t.powi(-2);
    let poly = 1.0
        + u * (5.0 / 48.0 + u * (-5.0 / 36.0 + u * (77125.0 / 82944.0 + u * (-108_056_875.0 / 6_967_296.0))));
    t.powf(2.0 / 3.0) * poly
}
