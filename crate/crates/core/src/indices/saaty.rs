//! The eigenvalue-based consistency index CI = (lambda_max - n)/(n - 1),
//! the Monte Carlo random index RI, and the consistency ratio CR = CI/RI.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::IndexError;
use crate::pcm::{random_pcm, Pcm};

pub fn ci_saaty(a: &Pcm) -> Result<f64, IndexError> {
    let n = a.order() as f64;
    Ok((a.lambda_max()? - n) / (n - 1.0))
}

/// Mean CI of `samples` seeded scale-random matrices of order n.
pub fn random_index(n: usize, samples: usize, seed: u64) -> Result<f64, IndexError> {
    assert!(samples >= 1, "samples must be >= 1");
    let mut total = 0.0;
    for k in 0..samples {
        // One independent stream per draw keeps the estimate independent of
        // sample count prefixes.
        let a = random_pcm(n, seed.wrapping_add(k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        total += ci_saaty(&a)?;
    }
    Ok(total / samples as f64)
}

/// Average-CI lookup per matrix order.
#[derive(Debug, Clone, PartialEq)]
pub struct RiTable {
    entries: BTreeMap<usize, f64>,
}

impl RiTable {
    pub fn new(entries: impl IntoIterator<Item = (usize, f64)>) -> Self {
        RiTable { entries: entries.into_iter().collect() }
    }

    /// Monte Carlo table over an order range, fully determined by the seed.
    pub fn monte_carlo(
        orders: impl IntoIterator<Item = usize>,
        samples: usize,
        seed: u64,
    ) -> Result<Self, IndexError> {
        let mut entries = BTreeMap::new();
        for n in orders {
            entries.insert(n, random_index(n, samples, seed ^ (n as u64) << 32)?);
        }
        Ok(RiTable { entries })
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        self.entries.get(&n).copied()
    }

    pub fn orders(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.entries.iter().map(|(&n, &v)| (n, v))
    }
}

const DEFAULT_RI_SAMPLES: usize = 100_000;
const DEFAULT_RI_SEED: u64 = 7_777;
const DEFAULT_RI_MAX_ORDER: usize = 12;

/// The table backing the registry's `cr` handle: lazily computed per order
/// (1e5 samples, fixed seed) for n up to 12.
pub fn default_ri_table() -> &'static DefaultRiTable {
    static TABLE: OnceLock<DefaultRiTable> = OnceLock::new();
    TABLE.get_or_init(DefaultRiTable::default)
}

#[derive(Debug, Default)]
pub struct DefaultRiTable {
    cells: [OnceLock<f64>; DEFAULT_RI_MAX_ORDER + 1],
}

impl DefaultRiTable {
    pub fn get(&self, n: usize) -> Option<f64> {
        if !(3..=DEFAULT_RI_MAX_ORDER).contains(&n) {
            return None;
        }
        Some(*self.cells[n].get_or_init(|| {
            random_index(n, DEFAULT_RI_SAMPLES, DEFAULT_RI_SEED ^ (n as u64) << 32)
                .expect("scale matrices converge")
        }))
    }
}

pub trait RiLookup {
    fn ri(&self, n: usize) -> Option<f64>;
}

impl RiLookup for RiTable {
    fn ri(&self, n: usize) -> Option<f64> {
        self.get(n)
    }
}

impl RiLookup for DefaultRiTable {
    fn ri(&self, n: usize) -> Option<f64> {
        self.get(n)
    }
}

/// CR = CI / RI(n). A consistent matrix has CR = 0.
pub fn cr_saaty<T: RiLookup + ?Sized>(a: &Pcm, table: &T) -> Result<f64, IndexError> {
    let n = a.order();
    let ri = table.ri(n).ok_or(IndexError::MissingRiEntry(n))?;
    Ok(ci_saaty(a)? / ri)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcm::{corner_matrix, random_consistent};

    #[test]
    fn ci_of_consistent_is_zero() {
        let a = Pcm::from_upper(3, &[2.0, 4.0, 2.0]).unwrap();
        assert!(ci_saaty(&a).unwrap().abs() < 1e-8);
    }

    #[test]
    fn ci_of_known_inconsistent_3x3() {
        let a = Pcm::from_upper(3, &[2.0, 1.0, 2.0]).unwrap();
        let t = 4f64.powf(1.0 / 3.0);
        let expected = (1.0 + t + 1.0 / t - 3.0) / 2.0;
        let got = ci_saaty(&a).unwrap();
        assert!((got - expected).abs() < 1e-10);
        assert!((got - 0.1087).abs() < 1e-4);
    }

    #[test]
    fn ci_of_extreme_corner_exceeds_ten() {
        let a = corner_matrix(4, 1e6).unwrap();
        assert!(ci_saaty(&a).unwrap() > 10.0);
    }

    #[test]
    fn cr_of_consistent_is_zero_and_missing_entry_errors() {
        let a = random_consistent(4, 11);
        let table = RiTable::new([(4, 0.88)]);
        assert!(cr_saaty(&a, &table).unwrap().abs() < 1e-8);

        let six = random_consistent(6, 3);
        assert_eq!(cr_saaty(&six, &table).unwrap_err(), IndexError::MissingRiEntry(6));
    }

    #[test]
    fn random_index_two_seeds_agree() {
        let a = random_index(3, 4_000, 1).unwrap();
        let b = random_index(3, 4_000, 2).unwrap();
        assert!((a - b).abs() < 0.02, "{a} vs {b}");
        // Classic scale-random 3x3 average is near 0.52.
        assert!((a - 0.525).abs() < 0.05, "{a}");
    }

    #[test]
    fn random_index_is_deterministic() {
        assert_eq!(random_index(3, 500, 9).unwrap(), random_index(3, 500, 9).unwrap());
    }
}
