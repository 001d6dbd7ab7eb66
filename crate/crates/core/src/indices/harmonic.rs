//! The harmonic consistency index of Stein and Mizzi, built from the
//! harmonic mean of the column sums.

use crate::pcm::Pcm;

/// `HCI = (HM - n)(n + 1) / (n(n - 1))` where `HM = n / sum_j(1/s_j)` and
/// `s_j` are the column sums. For a consistent matrix `sum_j 1/s_j = 1`
/// exactly, so HCI = 0.
pub fn hci(a: &Pcm) -> f64 {
    let n = a.order();
    let nf = n as f64;
    let mut recip_sum = 0.0;
    for j in 0..n {
        let s: f64 = (0..n).map(|i| a.get(i, j)).sum();
        recip_sum += 1.0 / s;
    }
    let hm = nf / recip_sum;
    (hm - nf) * (nf + 1.0) / (nf * (nf - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcm::random_consistent;

    #[test]
    fn zero_on_consistent() {
        for seed in 0..20 {
            assert!(hci(&random_consistent(5, seed)).abs() < 1e-12);
        }
        let ones = Pcm::from_upper(4, &[1.0; 6]).unwrap();
        assert!(hci(&ones).abs() < 1e-15);
    }

    #[test]
    fn hand_evaluated_3x3() {
        // Column sums of [2,1,2] are (2.5, 3.5, 4); HM = 420/131 and
        // HCI = 18/131.
        let a = Pcm::from_upper(3, &[2.0, 1.0, 2.0]).unwrap();
        assert!((hci(&a) - 18.0 / 131.0).abs() < 1e-14);
        assert!(hci(&a) > 0.0);
    }
}
