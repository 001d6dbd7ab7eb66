use crate::error::PcmError;
use crate::pcm::Pcm;

/// A positive priority vector normalized to sum 1.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    w: Vec<f64>,
}

impl WeightVector {
    /// Validates positivity and normalization (sum within 1e-12 of 1).
    pub fn new(w: &[f64]) -> Result<Self, PcmError> {
        if w.len() < 2 {
            return Err(PcmError::OrderTooSmall { n: w.len(), min: 2 });
        }
        if let Some(&bad) = w.iter().find(|&&v| !v.is_finite() || v <= 0.0) {
            return Err(PcmError::InvalidWeights { reason: format!("non-positive weight {bad}") });
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(PcmError::InvalidWeights { reason: format!("weights sum to {sum}, not 1") });
        }
        Ok(WeightVector { w: w.to_vec() })
    }

    /// Normalizes arbitrary positive values to sum 1.
    pub fn normalized(raw: &[f64]) -> Result<Self, PcmError> {
        if raw.len() < 2 {
            return Err(PcmError::OrderTooSmall { n: raw.len(), min: 2 });
        }
        if let Some(&bad) = raw.iter().find(|&&v| !v.is_finite() || v <= 0.0) {
            return Err(PcmError::InvalidWeights { reason: format!("non-positive weight {bad}") });
        }
        let sum: f64 = raw.iter().sum();
        Ok(WeightVector { w: raw.iter().map(|v| v / sum).collect() })
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector { w: vec![1.0 / n as f64; n] }
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.w
    }
}

/// Geometric-mean priority vector: `w_i` proportional to the geometric mean
/// of row i, normalized to sum 1.
pub fn geometric_mean_weights(a: &Pcm) -> WeightVector {
    let n = a.order();
    let logs: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).ln()).sum::<f64>() / n as f64)
        .collect();
    // Subtract the max log before exponentiating so huge entries cannot
    // overflow the row products.
    let m = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let raw: Vec<f64> = logs.iter().map(|l| (l - m).exp()).collect();
    let sum: f64 = raw.iter().sum();
    WeightVector { w: raw.iter().map(|v| v / sum).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcm::generate::random_consistent;

    #[test]
    fn geometric_weights_recover_generating_weights() {
        for seed in 0..20 {
            let a = random_consistent(5, seed);
            let w = geometric_mean_weights(&a);
            let b = Pcm::from_weights(&w);
            for (x, y) in a.upper().iter().zip(b.upper()) {
                assert!((x / y - 1.0).abs() < 1e-12, "ratio {x} vs {y}");
            }
        }
    }

    #[test]
    fn all_ones_gives_uniform_weights() {
        let a = Pcm::from_upper(4, &[1.0; 6]).unwrap();
        let w = geometric_mean_weights(&a);
        for &v in w.as_slice() {
            assert!((v - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn hand_evaluated_cube_root_products() {
        // Row products of [2,1,2] are (2, 1, 1/2); cube roots normalized.
        let a = Pcm::from_upper(3, &[2.0, 1.0, 2.0]).unwrap();
        let w = geometric_mean_weights(&a);
        let t = 2f64.powf(1.0 / 3.0);
        let s = t + 1.0 + 1.0 / t;
        let expect = [t / s, 1.0 / s, 1.0 / (t * s)];
        for (got, want) in w.as_slice().iter().zip(expect) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
        assert!((w.as_slice()[0] - 0.4126).abs() < 5e-5);
        assert!((w.as_slice()[1] - 0.3275).abs() < 5e-5);
        assert!((w.as_slice()[2] - 0.2599).abs() < 5e-5);
    }

    #[test]
    fn weight_vector_validation() {
        assert!(WeightVector::new(&[0.5, 0.5]).is_ok());
        assert!(WeightVector::new(&[0.5, 0.6]).is_err());
        assert!(WeightVector::new(&[1.5, -0.5]).is_err());
        assert!(WeightVector::new(&[1.0]).is_err());
    }
}
