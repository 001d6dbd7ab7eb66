use crate::error::PcmError;
use crate::pcm::weights::geometric_mean_weights;
use crate::pcm::{Pcm, DEFAULT_EIGEN_MAX_ITER};

/// The four equivalent characterizations of a consistent PCM, each evaluated
/// by its own independent routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop1Report {
    /// Direct triad scan of `a_ij * a_jk = a_ik`.
    pub consistent: bool,
    /// `|lambda_max - n| <= tol`.
    pub lambda_is_n: bool,
    /// Numerical rank 1 via pivoted elimination with threshold `tol * |A|`.
    pub rank_is_one: bool,
    /// `a_ij = w_i / w_j` within tol (relative), geometric-mean weights.
    pub ratio_representable: bool,
}

impl Prop1Report {
    /// The four booleans must agree for the report to be coherent.
    pub fn coherent(&self) -> bool {
        self.consistent == self.lambda_is_n
            && self.consistent == self.rank_is_one
            && self.consistent == self.ratio_representable
    }

    pub fn all_true(&self) -> bool {
        self.consistent && self.lambda_is_n && self.rank_is_one && self.ratio_representable
    }
}

/// Numerical rank by Gaussian elimination with partial pivoting; a pivot
/// counts while its magnitude exceeds `threshold`.
fn numerical_rank(a: &Pcm, threshold: f64) -> usize {
    let n = a.order();
    let mut m: Vec<Vec<f64>> = a.to_full();
    let mut rank = 0;
    for col in 0..n {
        let (best_row, best) = (rank..n)
            .map(|r| (r, m[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap_or((rank, 0.0));
        if best <= threshold {
            continue;
        }
        m.swap(rank, best_row);
        for r in (rank + 1)..n {
            let factor = m[r][col] / m[rank][col];
            for c in col..n {
                m[r][c] -= factor * m[rank][c];
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

impl Pcm {
    /// Evaluates all four consistency characterizations independently.
    pub fn verify_prop1(&self, tol: f64) -> Result<Prop1Report, PcmError> {
        let consistent = self.is_consistent(tol);

        let eigen = self.principal_eigen(1e-13, 2 * DEFAULT_EIGEN_MAX_ITER)?;
        let lambda_is_n = (eigen.lambda_max - self.order() as f64).abs() <= tol;

        let norm = (0..self.order())
            .map(|i| (0..self.order()).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max);
        let rank_is_one = numerical_rank(self, tol * norm) == 1;

        let w = geometric_mean_weights(self);
        let ws = w.as_slice();
        let mut max_dev: f64 = 0.0;
        for i in 0..self.order() {
            for j in 0..self.order() {
                max_dev = max_dev.max((self.get(i, j) * ws[j] / ws[i] - 1.0).abs());
            }
        }
        let ratio_representable = max_dev <= tol;

        Ok(Prop1Report { consistent, lambda_is_n, rank_is_one, ratio_representable })
    }
}
