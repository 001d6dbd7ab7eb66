//! The geometric consistency index: mean squared log-error between the
//! matrix and the ratios of its geometric-mean priority vector.

use crate::pcm::{geometric_mean_weights, Pcm};

/// `GCI = 2/((n-1)(n-2)) * sum_{i<j} ln^2(a_ij * w_j / w_i)`.
/// Returns 0 for n = 2, where the normalizer vanishes and every matrix is
/// consistent anyway.
pub fn gci(a: &Pcm) -> f64 {
    let n = a.order();
    if n < 3 {
        return 0.0;
    }
    let w = geometric_mean_weights(a);
    let ws = w.as_slice();
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += (a.get(i, j) * ws[j] / ws[i]).ln().powi(2);
        }
    }
    2.0 * sum / ((n - 1) as f64 * (n - 2) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcm::random_consistent;

    #[test]
    fn zero_on_consistent() {
        for seed in 0..20 {
            assert!(gci(&random_consistent(5, seed)) < 1e-12);
        }
    }

    #[test]
    fn hand_evaluated_3x3() {
        // Log-errors of [2,1,2] are (+-2/3) ln 2 three times.
        let a = Pcm::from_upper(3, &[2.0, 1.0, 2.0]).unwrap();
        let expected = 4.0 / 3.0 * 2f64.ln().powi(2);
        assert!((gci(&a) - expected).abs() < 1e-14);
        assert!((gci(&a) - 0.6405).abs() < 1e-4);
    }

    #[test]
    fn permutation_invariant() {
        let a = Pcm::from_upper(4, &[3.0, 0.5, 2.0, 7.0, 1.0, 0.25]).unwrap();
        let p = a.permute(&[2, 0, 3, 1]).unwrap();
        assert!((gci(&a) - gci(&p)).abs() < 1e-12);
    }
}
