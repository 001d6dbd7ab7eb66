//! Barzilai's relative-error index: the share of the log-matrix energy that
//! lies outside the space of consistent (row-difference) matrices.

use crate::pcm::Pcm;

/// With `d_ij = ln a_ij`, `r_i` the row means of `d`, `c_ij = r_i - r_j` and
/// `e = d - c`: `RE = sum e^2 / sum d^2`, defined as 0 when `sum d^2 = 0`
/// (the all-ones matrix, which is consistent). Always in [0, 1].
pub fn re_barzilai(a: &Pcm) -> f64 {
    let n = a.order();
    let d: Vec<Vec<f64>> =
        (0..n).map(|i| (0..n).map(|j| a.get(i, j).ln()).collect()).collect();
    let d_sq: f64 = d.iter().flatten().map(|v| v * v).sum();
    if d_sq == 0.0 {
        return 0.0;
    }
    let r: Vec<f64> = d.iter().map(|row| row.iter().sum::<f64>() / n as f64).collect();
    let mut e_sq = 0.0;
    for i in 0..n {
        for j in 0..n {
            let e = d[i][j] - (r[i] - r[j]);
            e_sq += e * e;
        }
    }
    e_sq / d_sq
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcm::random_consistent;

    #[test]
    fn zero_on_consistent_and_at_the_singular_point() {
        for seed in 0..20 {
            assert!(re_barzilai(&random_consistent(4, seed)) < 1e-20);
        }
        let ones = Pcm::from_upper(5, &[1.0; 10]).unwrap();
        assert_eq!(re_barzilai(&ones), 0.0);
    }

    #[test]
    fn hand_evaluated_3x3() {
        // All six off-diagonal log-errors of [2,1,2] have equal magnitude,
        // which puts exactly 2/3 of the energy outside the consistent space.
        let a = Pcm::from_upper(3, &[2.0, 1.0, 2.0]).unwrap();
        assert!((re_barzilai(&a) - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn bounded_by_one_and_scale_invariant() {
        for seed in 0..50 {
            let a = crate::pcm::random_pcm(5, seed);
            let v = re_barzilai(&a);
            assert!((0.0..=1.0).contains(&v));
            let intensified = a.intensify(3.0);
            assert!((re_barzilai(&intensified) - v).abs() < 1e-12);
        }
    }
}
