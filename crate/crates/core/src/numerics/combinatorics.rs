use super::Complex;
use std::sync::OnceLock;

/// Largest n for which the Stirling table is built.
pub const MAX_STIRLING: usize = 40;

pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Integer binomial coefficient as f64.
pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Generalized binomial coefficient C(x, n) = x(x-1)...(x-n+1)/n!.
pub fn binomial_general(x: Complex, n: usize) -> Complex {
    (0..n).fold(Complex::new(1.0, 0.0), |acc, i| {
        acc * (x - i as f64) / (i + 1) as f64
    })
}

fn stirling_table() -> &'static Vec<Vec<f64>> {
    static TABLE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows = vec![vec![1.0]];
        for n in 0..MAX_STIRLING {
            let prev = &rows[n];
            let mut row = vec![0.0; n + 2];
            for k in 1..=n + 1 {
                let left = prev[k - 1];
                let here = if k <= n { prev[k] } else { 0.0 };
                // both terms carry the sign (-1)^{n+1-k}, so no cancellation
                row[k] = left - n as f64 * here;
            }
            rows.push(row);
        }
        rows
    })
}

/// Signed Stirling number of the first kind s(n, k), n ≤ 40.
pub fn stirling_first(n: usize, k: usize) -> f64 {
    assert!(n <= MAX_STIRLING, "Stirling table holds n ≤ {MAX_STIRLING}");
    if k > n {
        return 0.0;
    }
    stirling_table()[n][k]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_values() {
        assert_eq!(stirling_first(0, 0), 1.0);
        assert_eq!(stirling_first(5, 0), 0.0);
        assert_eq!(stirling_first(4, 2), 11.0);
        assert_eq!(stirling_first(5, 2), -50.0);
        assert_eq!(stirling_first(6, 3), -225.0);
        assert_eq!(stirling_first(10, 1), -362_880.0);
    }

    #[test]
    fn row_sums_vanish() {
        // Σ_k s(n,k) = 0 for n ≥ 2
        for n in 2..=25 {
            let s: f64 = (0..=n).map(|k| stirling_first(n, k)).sum();
            let scale: f64 = (0..=n).map(|k| stirling_first(n, k).abs()).sum();
            assert!(s.abs() <= 1e-15 * scale, "n = {n}");
        }
    }

    #[test]
    fn large_entry() {
        // |s(40, 1)| = 39!
        assert!((stirling_first(40, 1).abs() / factorial(39) - 1.0).abs() < 1e-14);
        assert!(stirling_first(40, 1) < 0.0);
    }

    #[test]
    fn binomial_general_matches_integer() {
        for n in 0..10 {
            for k in 0..=n {
                let g = binomial_general(Complex::new(n as f64, 0.0), k);
                assert_eq!(g.re, binomial(n, k));
            }
        }
        let half = binomial_general(Complex::new(0.5, 0.0), 3);
        assert!((half.re - 1.0 / 16.0).abs() < 1e-16);
    }

    proptest! {
        #[test]
        fn rising_factorial_expansion(x in -3.0f64..3.0, n in 1usize..12) {
            // x(x+1)...(x+n-1) = Σ_k |s(n,k)| x^k
            let direct: f64 = (0..n).map(|i| x + i as f64).product();
            let via: f64 = (0..=n).map(|k| stirling_first(n, k).abs() * x.powi(k as i32)).sum();
            let scale = (0..n).map(|i| x.abs() + i as f64).product::<f64>().max(1.0);
            prop_assert!((direct - via).abs() <= 1e-12 * scale);
        }
    }
}
