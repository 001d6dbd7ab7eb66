//! Generic triad-aggregation indices: a local inconsistency function applied
//! to every cycle ratio `eta_ijk = a_ij * a_jk * a_ki`, folded by a
//! symmetric monotone aggregator.

use std::sync::Arc;

use crate::axioms::{check_generator_properties, CheckConfig, VerdictKind};
use crate::error::IndexError;
use crate::indices::{ClaimedRange, IndexHandle};
use crate::pcm::Pcm;

/// How per-triad values are folded into one number.
#[derive(Clone)]
pub enum Aggregator {
    Max,
    Mean,
    Sum,
    Custom { name: String, f: Arc<dyn Fn(&[f64]) -> f64 + Send + Sync> },
}

impl Aggregator {
    pub fn apply(&self, vals: &[f64]) -> f64 {
        match self {
            Aggregator::Max => vals.iter().cloned().fold(0.0, f64::max),
            Aggregator::Mean => {
                if vals.is_empty() {
                    0.0
                } else {
                    vals.iter().sum::<f64>() / vals.len() as f64
                }
            }
            Aggregator::Sum => vals.iter().sum(),
            Aggregator::Custom { f, .. } => f(vals),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Aggregator::Max => "max",
            Aggregator::Mean => "mean",
            Aggregator::Sum => "sum",
            Aggregator::Custom { name, .. } => name,
        }
    }
}

impl std::fmt::Debug for Aggregator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Aggregator({})", self.name())
    }
}

/// A candidate (F, aggregator) pair. F must be minimal at 1, symmetric under
/// `x -> 1/x`, and quasi-convex along log-segments; the aggregator must be
/// permutation-symmetric and monotone. [`check_generator_properties`] probes
/// these on sampled grids.
#[derive(Clone)]
pub struct TriadGenerator {
    local: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    agg: Aggregator,
}

impl TriadGenerator {
    pub fn new(local: impl Fn(f64) -> f64 + Send + Sync + 'static, agg: Aggregator) -> Self {
        TriadGenerator { local: Arc::new(local), agg }
    }

    /// F evaluated at a cycle ratio.
    pub fn local(&self, x: f64) -> f64 {
        (self.local)(x)
    }

    pub fn aggregator(&self) -> &Aggregator {
        &self.agg
    }

    pub fn aggregate(&self, vals: &[f64]) -> f64 {
        self.agg.apply(vals)
    }

    /// The generator whose built index is extensionally the Koczkodaj index.
    pub fn koczkodaj() -> Self {
        TriadGenerator::new(|x| (1.0 - x).abs().min((1.0 - 1.0 / x).abs()), Aggregator::Max)
    }

    /// Squared log deviation with mean aggregation.
    pub fn log_quadratic() -> Self {
        TriadGenerator::new(|x| x.ln().powi(2), Aggregator::Mean)
    }

    /// Evaluates the induced index directly (0 below order 3).
    pub fn eval(&self, a: &Pcm) -> f64 {
        if a.order() < 3 {
            return 0.0;
        }
        let vals: Vec<f64> = a
            .triads()
            .expect("order checked")
            .iter()
            .map(|(_, t)| self.local(t.cycle_ratio()))
            .collect();
        self.aggregate(&vals)
    }
}

impl std::fmt::Debug for TriadGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TriadGenerator").field("agg", &self.agg).finish()
    }
}

/// Validates the generator's sampled properties and wraps it as a registered
/// index handle. Rejected generators never become handles.
pub fn build_triad_index(
    gen: TriadGenerator,
    name: impl Into<String>,
) -> Result<IndexHandle, IndexError> {
    let verdict = check_generator_properties(&gen, &CheckConfig::default());
    if verdict.kind == VerdictKind::Falsified {
        return Err(IndexError::GeneratorRejected(verdict.describe()));
    }
    Ok(IndexHandle::new(name, 3, ClaimedRange::NONNEGATIVE, true, move |a| Ok(gen.eval(a))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::ki_koczkodaj;
    use crate::pcm::{random_consistent, random_pcm};

    #[test]
    fn log_quadratic_mean_is_zero_on_consistent() {
        let h = build_triad_index(TriadGenerator::log_quadratic(), "lq").unwrap();
        for seed in 0..10 {
            assert!(h.eval(&random_consistent(5, seed)).unwrap() < 1e-12);
        }
    }

    #[test]
    fn koczkodaj_generator_reproduces_ki() {
        let h = build_triad_index(TriadGenerator::koczkodaj(), "ki2").unwrap();
        for seed in 0..100 {
            let a = random_pcm(3 + (seed as usize % 4), seed);
            let built = h.eval(&a).unwrap();
            let direct = ki_koczkodaj(&a);
            assert!((built - direct).abs() <= 1e-12, "{built} vs {direct}");
        }
    }

    #[test]
    fn asymmetric_local_function_is_rejected() {
        let gen = TriadGenerator::new(|x| x, Aggregator::Mean);
        assert!(matches!(
            build_triad_index(gen, "bad"),
            Err(IndexError::GeneratorRejected(_))
        ));
    }

    #[test]
    fn non_symmetric_aggregator_is_rejected() {
        let gen = TriadGenerator::new(
            |x| x.ln().powi(2),
            Aggregator::Custom {
                name: "first".into(),
                f: Arc::new(|vals: &[f64]| vals.first().copied().unwrap_or(0.0)),
            },
        );
        assert!(matches!(
            build_triad_index(gen, "bad"),
            Err(IndexError::GeneratorRejected(_))
        ));
    }
}
