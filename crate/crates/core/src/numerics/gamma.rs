use super::bernoulli::bernoulli;
use super::Complex;
use std::f64::consts::PI;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Complex gamma function (Lanczos, g = 7, with reflection for Re z < 1/2).
pub fn gamma(z: Complex) -> Complex {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        if s == Complex::new(0.0, 0.0) {
            return Complex::new(f64::INFINITY, 0.0);
        }
        return Complex::new(PI, 0.0) / (s * gamma(Complex::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut x = Complex::new(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    ((z + 0.5) * t.ln() - t + LN_SQRT_2PI + x.ln()).exp()
}

/// Log-gamma on the branch that is analytic off the cut (-inf, 0] and real on
/// the positive axis. On the cut itself the limit from above is returned.
pub fn ln_gamma(z: Complex) -> Complex {
    const SHIFT_TO: f64 = 15.0;
    let mut w = z;
    let mut acc = Complex::new(0.0, 0.0);
    // exact zero imaginary part keeps Ln on the upper side of the cut
    if w.im == 0.0 {
        w.im = 0.0;
    }
    while w.re < SHIFT_TO {
        acc += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex::new(0.0, 0.0);
    let mut pow = inv;
    for k in 1..=10 {
        let b = bernoulli(2 * k);
        series += pow * (b / ((2 * k) as f64 * (2 * k - 1) as f64));
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - acc
}

/// ln |Γ(x)| for real x away from the poles.
pub fn ln_gamma_real(x: f64) -> f64 {
    ln_gamma(Complex::new(x, 0.0)).re
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Complex, b: Complex) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn gamma_two_thirds() {
        let g = gamma(Complex::new(2.0 / 3.0, 0.0));
        assert!((g.re - 1.354_117_939_426_400_4).abs() < 1e-14);
        assert_eq!(g.im, 0.0);
    }

    #[test]
    fn gamma_reference_values() {
        // 30-digit reference values
        let cases = [
            ((0.5, 0.0), (1.772_453_850_905_516, 0.0)),
            ((-2.5, 0.0), (-0.945_308_720_482_941_9, 0.0)),
            ((1.0 / 3.0, 0.0), (2.678_938_534_707_747_6, 0.0)),
            ((3.0, 4.0), (0.005_225_538_471_369_214, -0.172_547_079_294_300_19)),
            ((-1.5, 2.0), (-0.001_884_396_541_152_095_7, 0.020_932_721_986_921_831)),
            ((30.5, 0.0), (4.822_696_933_490_908_6e31, 0.0)),
            ((10.0, -20.0), (-0.133_713_977_828_472_03, -0.123_674_975_271_245_25)),
        ];
        for ((zr, zi), (gr, gi)) in cases {
            let got = gamma(Complex::new(zr, zi));
            let want = Complex::new(gr, gi);
            assert!(rel(got, want) < 1e-13, "Γ({zr}+{zi}i) = {got}, want {want}");
        }
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for &(zr, zi) in &[(0.3, 0.2), (2.5, -7.0), (-3.7, 0.4), (12.0, 30.0), (0.25, 0.0)] {
            let z = Complex::new(zr, zi);
            let g = gamma(z);
            let lg = ln_gamma(z);
            assert!(rel(lg.exp(), g) < 1e-12, "z = {z}");
        }
    }

    #[test]
    fn ln_gamma_branch_on_negative_axis() {
        // limit from above: Im = π⌊x⌋
        let lg = ln_gamma(Complex::new(-2.5, 0.0));
        assert!((lg.re - 0.945_308_720_482_941_9f64.ln()).abs() < 1e-13);
        assert!((lg.im - (-3.0 * PI)).abs() < 1e-12);
        let lg = ln_gamma(Complex::new(-0.5, 0.0));
        assert!((lg.im + PI).abs() < 1e-12);
    }

    #[test]
    fn ln_gamma_continuous_across_upper_half_plane() {
        let mut prev = ln_gamma(Complex::new(5.0, 0.3));
        for i in 1..=1000 {
            let z = Complex::new(5.0 - 0.01 * i as f64, 0.3);
            let cur = ln_gamma(z);
            assert!((cur.im - prev.im).abs() < 0.5, "jump at {z}");
            prev = cur;
        }
    }
}
