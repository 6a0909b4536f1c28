use super::Complex;

/// Neumaier-compensated accumulator for complex sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    re: (f64, f64),
    im: (f64, f64),
}

fn step((sum, comp): (f64, f64), x: f64) -> (f64, f64) {
    let t = sum + x;
    let c = if sum.abs() >= x.abs() {
        (sum - t) + x
    } else {
        (x - t) + sum
    };
    (t, comp + c)
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: Complex) {
        self.re = step(self.re, x.re);
        self.im = step(self.im, x.im);
    }

    pub fn value(&self) -> Complex {
        Complex::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

impl Extend<Complex> for NeumaierSum {
    fn extend<I: IntoIterator<Item = Complex>>(&mut self, iter: I) {
        iter.into_iter().for_each(|x| self.add(x));
    }
}

impl FromIterator<Complex> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = Complex>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}
