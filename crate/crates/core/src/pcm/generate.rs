use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::PcmError;
use crate::pcm::{Pcm, WeightVector};

/// The 17-value multiplicative judgment scale {1/9, ..., 1/2, 1, 2, ..., 9}.
pub const SAATY_SCALE: [f64; 17] = [
    1.0 / 9.0,
    1.0 / 8.0,
    1.0 / 7.0,
    1.0 / 6.0,
    1.0 / 5.0,
    1.0 / 4.0,
    1.0 / 3.0,
    1.0 / 2.0,
    1.0,
    2.0,
    3.0,
    4.0,
    5.0,
    6.0,
    7.0,
    8.0,
    9.0,
];

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn random_pcm_with(n: usize, rng: &mut ChaCha12Rng) -> Pcm {
    let mut upper = Vec::with_capacity(n * (n - 1) / 2);
    for _ in 0..n * (n - 1) / 2 {
        upper.push(SAATY_SCALE[rng.gen_range(0..SAATY_SCALE.len())]);
    }
    Pcm::from_upper(n, &upper).expect("scale entries are positive")
}

fn random_consistent_with(n: usize, rng: &mut ChaCha12Rng) -> Pcm {
    let bound = 9f64.ln();
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(-bound..=bound).exp()).collect();
    let w = WeightVector::normalized(&raw).expect("positive weights");
    Pcm::from_weights(&w)
}

/// A matrix with every upper entry drawn uniformly from [`SAATY_SCALE`].
/// Fully determined by the seed.
pub fn random_pcm(n: usize, seed: u64) -> Pcm {
    random_pcm_with(n, &mut rng_from_seed(seed))
}

/// A consistent matrix built from log-uniform weights on [-ln 9, ln 9].
/// Fully determined by the seed.
pub fn random_consistent(n: usize, seed: u64) -> Pcm {
    random_consistent_with(n, &mut rng_from_seed(seed))
}

/// Streams of seeded random matrices, for Monte Carlo and falsification
/// sampling that must stay reproducible.
pub struct PcmSampler {
    rng: ChaCha12Rng,
}

impl PcmSampler {
    pub fn new(seed: u64) -> Self {
        PcmSampler { rng: rng_from_seed(seed) }
    }

    pub fn random_pcm(&mut self, n: usize) -> Pcm {
        random_pcm_with(n, &mut self.rng)
    }

    pub fn random_consistent(&mut self, n: usize) -> Pcm {
        random_consistent_with(n, &mut self.rng)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Log-uniform value in [1/bound, bound].
    pub fn log_uniform(&mut self, bound: f64) -> f64 {
        self.rng.gen_range(-bound.ln()..=bound.ln()).exp()
    }

    pub fn pick(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut sigma: Vec<usize> = (0..n).collect();
        // Fisher-Yates
        for i in (1..n).rev() {
            let j = self.rng.gen_range(0..=i);
            sigma.swap(i, j);
        }
        sigma
    }
}

/// The near-identity matrix that is all ones except `a_1n = x`
/// (and `a_n1 = 1/x`), the standard probe for index boundedness.
pub fn corner_matrix(n: usize, x: f64) -> Result<Pcm, PcmError> {
    if n < 3 {
        return Err(PcmError::OrderTooSmall { n, min: 3 });
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(PcmError::NonPositiveEntry { i: 0, j: n - 1, value: x });
    }
    let mut upper = vec![1.0; n * (n - 1) / 2];
    upper[n - 2] = x; // position of (0, n-1) in the row-major upper triangle
    Pcm::from_upper(n, &upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_matrix() {
        assert_eq!(random_pcm(5, 123), random_pcm(5, 123));
        assert_eq!(random_consistent(6, 9), random_consistent(6, 9));
        assert_ne!(random_pcm(5, 123), random_pcm(5, 124));
    }

    #[test]
    fn random_pcm_entries_are_on_the_scale() {
        let p = random_pcm(3, 77);
        for v in p.upper() {
            assert!(SAATY_SCALE.contains(v), "{v} not on scale");
        }
    }

    #[test]
    fn random_consistent_is_consistent() {
        for seed in 0..50 {
            assert!(random_consistent(4, seed).is_consistent(1e-9));
        }
    }

    #[test]
    fn corner_matrix_shape() {
        let c = corner_matrix(3, 1.0).unwrap();
        assert!(c.upper().iter().all(|&v| v == 1.0));
        assert!(c.is_consistent(0.0));

        let c8 = corner_matrix(3, 8.0).unwrap();
        let triads = c8.triads().unwrap();
        assert_eq!(triads[0].1.t13, 8.0);
        assert_eq!(triads[0].1.cycle_ratio(), 0.125);

        let c4 = corner_matrix(4, 5.0).unwrap();
        assert_eq!(c4.get(0, 3), 5.0);
        assert_eq!(c4.get(3, 0), 0.2);
        assert_eq!(c4.get(0, 1), 1.0);
        assert_eq!(c4.get(1, 3), 1.0);

        assert!(corner_matrix(2, 3.0).is_err());
    }

    #[test]
    fn permutation_sampler_is_a_bijection() {
        let mut s = PcmSampler::new(4);
        for n in 2..8 {
            let sigma = s.permutation(n);
            let mut sorted = sigma.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..n).collect::<Vec<_>>());
        }
    }
}
