//! Pairwise comparison matrices with exact reciprocity.
//!
//! A [`Pcm`] stores only the upper triangle of a positive reciprocal matrix.
//! The diagonal is implicitly 1 and every lower-triangle entry is derived as
//! `1.0 / a_ij` on read, so `a_ij * a_ji = 1` can never drift under
//! arithmetic, no matter how the matrix was produced.

mod consistency;
mod eigen;
mod generate;
mod prop1;
mod weights;

pub use consistency::Triad;
pub use eigen::{EigenResult, DEFAULT_EIGEN_MAX_ITER, DEFAULT_EIGEN_TOL};
pub use generate::{corner_matrix, random_consistent, random_pcm, PcmSampler, SAATY_SCALE};
pub use prop1::Prop1Report;
pub use weights::{geometric_mean_weights, WeightVector};

use crate::error::PcmError;

/// A positive reciprocal pairwise comparison matrix of order `n >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pcm {
    n: usize,
    /// Row-major upper triangle: entries (i,j) with i < j.
    upper: Vec<f64>,
}

fn check_positive(i: usize, j: usize, v: f64) -> Result<(), PcmError> {
    if !v.is_finite() || v <= 0.0 {
        return Err(PcmError::NonPositiveEntry { i, j, value: v });
    }
    Ok(())
}

impl Pcm {
    /// Validates a full square matrix and stores its upper triangle.
    ///
    /// Reciprocity is accepted when `|a_ij * a_ji - 1| <= tol`, or when the
    /// lower entry is bit-equal to `1.0 / a_ij` (the exact one-division
    /// reciprocal, so `tol = 0` accepts matrices reconstructed from a `Pcm`
    /// even where `x * (1/x)` rounds away from 1).
    pub fn new(full: &[Vec<f64>], tol: f64) -> Result<Self, PcmError> {
        let n = full.len();
        for (i, row) in full.iter().enumerate() {
            if row.len() != n {
                return Err(PcmError::NonSquare { rows: n, cols: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                check_positive(i, j, v)?;
            }
        }
        if n < 2 {
            return Err(PcmError::OrderTooSmall { n, min: 2 });
        }
        for (i, row) in full.iter().enumerate() {
            let dev = (row[i] - 1.0).abs();
            if dev > tol {
                return Err(PcmError::ReciprocityViolation { i, j: i, deviation: dev });
            }
        }
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let dev = (full[i][j] * full[j][i] - 1.0).abs();
                if dev > tol && full[j][i] != 1.0 / full[i][j] {
                    return Err(PcmError::ReciprocityViolation { i, j, deviation: dev });
                }
                upper.push(full[i][j]);
            }
        }
        Ok(Pcm { n, upper })
    }

    /// Builds a `Pcm` directly from an upper triangle, reciprocal by
    /// construction.
    pub fn from_upper(n: usize, upper: &[f64]) -> Result<Self, PcmError> {
        if n < 2 {
            return Err(PcmError::OrderTooSmall { n, min: 2 });
        }
        let expected = n * (n - 1) / 2;
        if upper.len() != expected {
            return Err(PcmError::LengthMismatch { expected, got: upper.len() });
        }
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                check_positive(i, j, upper[k])?;
                k += 1;
            }
        }
        Ok(Pcm { n, upper: upper.to_vec() })
    }

    /// The consistent matrix `a_ij = w_i / w_j` of a weight vector.
    pub fn from_weights(w: &WeightVector) -> Self {
        let ws = w.as_slice();
        let n = ws.len();
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                upper.push(ws[i] / ws[j]);
            }
        }
        Pcm { n, upper }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    fn upper_idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    /// Entry `a_ij`; the lower triangle is one floating division away from
    /// the stored upper triangle.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n, "index ({i},{j}) out of range");
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => 1.0,
            Less => self.upper[self.upper_idx(i, j)],
            Greater => 1.0 / self.upper[self.upper_idx(j, i)],
        }
    }

    /// Reconstructs the full matrix.
    pub fn to_full(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Returns a copy with `a_ij = value` (and `a_ji = 1/value`).
    pub fn perturb_entry(&self, i: usize, j: usize, value: f64) -> Result<Self, PcmError> {
        if i >= self.n || j >= self.n || i >= j {
            return Err(PcmError::IndexOutOfRange { i, j, n: self.n });
        }
        check_positive(i, j, value)?;
        let mut out = self.clone();
        let idx = out.upper_idx(i, j);
        out.upper[idx] = value;
        Ok(out)
    }

    /// Entrywise power `a_ij -> a_ij^k`, the preference-intensification map.
    pub fn intensify(&self, k: f64) -> Self {
        if k == 1.0 {
            return self.clone();
        }
        let upper = self.upper.iter().map(|a| a.powf(k)).collect();
        Pcm { n: self.n, upper }
    }

    /// Relabels the alternatives: entry (i,j) of the result is
    /// `a_{sigma(i), sigma(j)}`.
    pub fn permute(&self, sigma: &[usize]) -> Result<Self, PcmError> {
        let n = self.n;
        if sigma.len() != n {
            return Err(PcmError::InvalidPermutation { n });
        }
        let mut seen = vec![false; n];
        for &s in sigma {
            if s >= n || seen[s] {
                return Err(PcmError::InvalidPermutation { n });
            }
            seen[s] = true;
        }
        let mut upper = Vec::with_capacity(self.upper.len());
        for i in 0..n {
            for j in (i + 1)..n {
                upper.push(self.get(sigma[i], sigma[j]));
            }
        }
        Ok(Pcm { n, upper })
    }

    /// The transposed matrix, i.e. all preferences inverted.
    pub fn transpose(&self) -> Self {
        let upper = self.upper.iter().map(|a| 1.0 / a).collect();
        Pcm { n: self.n, upper }
    }

    /// Restriction to a subset of alternatives. Indices are deduplicated and
    /// taken in ascending order.
    pub fn submatrix(&self, subset: &[usize]) -> Result<Self, PcmError> {
        let mut idx: Vec<usize> = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.len() < 2 {
            return Err(PcmError::SubsetTooSmall { size: idx.len() });
        }
        if let Some(&bad) = idx.iter().find(|&&v| v >= self.n) {
            return Err(PcmError::IndexOutOfRange { i: bad, j: bad, n: self.n });
        }
        let m = idx.len();
        let mut upper = Vec::with_capacity(m * (m - 1) / 2);
        for a in 0..m {
            for b in (a + 1)..m {
                upper.push(self.get(idx[a], idx[b]));
            }
        }
        Ok(Pcm { n: m, upper })
    }
}
