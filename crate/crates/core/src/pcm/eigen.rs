use crate::error::PcmError;
use crate::pcm::{Pcm, WeightVector};

/// Default convergence tolerance for [`Pcm::principal_eigen`].
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;

/// Default iteration cap. Corner-style matrices with one extreme entry have
/// a spectral gap that shrinks like `x^(-1/3)`, so the cap must be far above
/// what ordinary matrices need (a few hundred iterations).
pub const DEFAULT_EIGEN_MAX_ITER: usize = 1_000_000;

/// Dominant eigenpair of a positive reciprocal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// The Perron root, real and >= n for a reciprocal PCM.
    pub lambda_max: f64,
    /// The Perron vector normalized to sum 1.
    pub vector: WeightVector,
    /// Power-iteration steps taken.
    pub iterations: usize,
    /// Max-norm of `A v - lambda v` at the returned pair.
    pub residual: f64,
}

impl Pcm {
    /// Power iteration from the uniform vector with Rayleigh-quotient
    /// eigenvalue estimates.
    ///
    /// Converged when successive Rayleigh quotients differ by at most
    /// `tol * max(1, |lambda|)` and the residual max-norm is within
    /// `10 * tol * max(1, lambda * |v|_inf)`. Both criteria are scaled
    /// because the Perron root of this matrix family is unbounded and an
    /// absolute threshold below one ulp of lambda can never be met.
    pub fn principal_eigen(&self, tol: f64, max_iter: usize) -> Result<EigenResult, PcmError> {
        assert!(tol > 0.0, "tol must be > 0");
        assert!(max_iter >= 1, "max_iter must be >= 1");
        let n = self.order();
        let dense: Vec<f64> = {
            let mut d = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    d.push(self.get(i, j));
                }
            }
            d
        };
        let matvec = |v: &[f64], out: &mut [f64]| {
            for i in 0..n {
                let row = &dense[i * n..(i + 1) * n];
                out[i] = row.iter().zip(v).map(|(a, x)| a * x).sum();
            }
        };

        let mut v = vec![1.0 / n as f64; n];
        let mut u = vec![0.0; n];
        let mut lambda_prev = f64::NAN;
        let mut last_rel_residual = f64::INFINITY;
        for it in 1..=max_iter {
            matvec(&v, &mut u);
            let vv: f64 = v.iter().map(|x| x * x).sum();
            let vu: f64 = v.iter().zip(&u).map(|(x, y)| x * y).sum();
            let lambda = vu / vv;
            let v_max = v.iter().cloned().fold(0.0, f64::max);
            let residual = v
                .iter()
                .zip(&u)
                .map(|(x, y)| (y - lambda * x).abs())
                .fold(0.0, f64::max);
            let scale = (lambda * v_max).max(1.0);
            last_rel_residual = residual / scale;
            let lambda_settled = (lambda - lambda_prev).abs() <= tol * lambda.abs().max(1.0);
            if lambda_settled && residual <= 10.0 * tol * scale {
                if lambda < n as f64 - 1e-9 {
                    return Err(PcmError::NoConvergence { iterations: it, residual });
                }
                let vector = WeightVector::normalized(&v).expect("positive iterate");
                return Ok(EigenResult { lambda_max: lambda, vector, iterations: it, residual });
            }
            lambda_prev = lambda;
            let sum: f64 = u.iter().sum();
            for (dst, src) in v.iter_mut().zip(&u) {
                *dst = src / sum;
            }
        }
        Err(PcmError::NoConvergence { iterations: max_iter, residual: last_rel_residual })
    }

    /// The Perron root at near machine precision, as used by the
    /// eigenvalue-based indices.
    pub fn lambda_max(&self) -> Result<f64, PcmError> {
        Ok(self.principal_eigen(1e-14, 2 * DEFAULT_EIGEN_MAX_ITER)?.lambda_max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcm::generate::corner_matrix;

    #[test]
    fn consistent_matrix_has_lambda_n() {
        let p = Pcm::from_upper(3, &[2.0, 4.0, 2.0]).unwrap();
        let e = p.principal_eigen(DEFAULT_EIGEN_TOL, DEFAULT_EIGEN_MAX_ITER).unwrap();
        assert!((e.lambda_max - 3.0).abs() < 1e-8, "lambda = {}", e.lambda_max);
    }

    #[test]
    fn known_inconsistent_3x3_root() {
        // Root of the characteristic polynomial: 1 + t + 1/t with t = 4^(1/3).
        let p = Pcm::from_upper(3, &[2.0, 1.0, 2.0]).unwrap();
        let e = p.principal_eigen(DEFAULT_EIGEN_TOL, DEFAULT_EIGEN_MAX_ITER).unwrap();
        let t = 4f64.powf(1.0 / 3.0);
        assert!((e.lambda_max - (1.0 + t + 1.0 / t)).abs() < 1e-10);
        assert!((e.lambda_max - 3.2174).abs() < 1e-4);
    }

    #[test]
    fn all_ones_rank_one_matrix() {
        let p = Pcm::from_upper(4, &[1.0; 6]).unwrap();
        let e = p.principal_eigen(DEFAULT_EIGEN_TOL, DEFAULT_EIGEN_MAX_ITER).unwrap();
        assert!((e.lambda_max - 4.0).abs() < 1e-12);
        assert_eq!(e.iterations, 1);
    }

    #[test]
    fn vector_is_normalized_and_residual_small() {
        let p = Pcm::from_upper(4, &[3.0, 0.2, 7.0, 1.0, 0.5, 4.0]).unwrap();
        let e = p.principal_eigen(DEFAULT_EIGEN_TOL, DEFAULT_EIGEN_MAX_ITER).unwrap();
        let sum: f64 = e.vector.as_slice().iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
        assert!(e.lambda_max >= 4.0);
        assert!(e.residual <= 1e-9);
    }

    #[test]
    fn no_convergence_error_carries_iteration_count() {
        let p = Pcm::from_upper(3, &[2.0, 1.0, 2.0]).unwrap();
        let err = p.principal_eigen(1e-14, 2).unwrap_err();
        assert!(matches!(err, PcmError::NoConvergence { iterations: 2, .. }));
    }

    #[test]
    fn extreme_corner_matrix_converges() {
        // Spectral gap ~ x^(-1/3): the slowest case the toolkit evaluates.
        let p = corner_matrix(3, 1e12).unwrap();
        let lam = p.lambda_max().unwrap();
        let t = 1e12f64.powf(1.0 / 3.0);
        assert!((lam / (1.0 + t + 1.0 / t) - 1.0).abs() < 1e-9, "lambda = {lam}");
    }
}
