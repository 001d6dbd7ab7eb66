//! Boundedness from above, probed on the corner-matrix ladder
//! `corner(n, x)` for x = 10^1 .. 10^12.
//!
//! An unbounded index grows strictly along the whole ladder and clears the
//! divergence threshold by orders of magnitude (CI tops near 5e3, the
//! determinant mean near 1e12); every bounded built-in stays below 2 on the
//! same family. The exponent stops at 12 because the eigenvalue gap of the
//! corner family closes like x^(-1/3) and larger corners buy no sharper a
//! separation.

use crate::axioms::{AxiomVerdict, CheckConfig, Witness};
use crate::error::IndexError;
use crate::indices::IndexHandle;
use crate::pcm::corner_matrix;

pub fn check_bounded_above(
    index: &IndexHandle,
    cfg: &CheckConfig,
) -> Result<AxiomVerdict, IndexError> {
    let xs: Vec<f64> = (1..=12).map(|k| 10f64.powi(k)).collect();
    let mut trials_run = 0;
    let mut max_seen = f64::NEG_INFINITY;
    for &n in &cfg.orders {
        if n < 3 {
            continue;
        }
        let mut values = Vec::with_capacity(xs.len());
        for &x in &xs {
            values.push(index.eval(&corner_matrix(n, x)?)?);
            trials_run += 1;
        }
        max_seen = max_seen.max(values.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
        let strictly_increasing = values.windows(2).all(|w| w[1] > w[0]);
        let last = *values.last().expect("ladder nonempty");
        if strictly_increasing && last > cfg.unbounded_threshold {
            return Ok(AxiomVerdict::falsified(
                Witness::UnboundedGrowth {
                    order: n,
                    xs: xs.clone(),
                    values,
                    threshold: cfg.unbounded_threshold,
                },
                trials_run,
            ));
        }
    }
    let range = index.claimed_range();
    let note = match range.hi {
        Some(hi) if max_seen <= hi => {
            format!("all ladder values within the claimed range {range} (max {max_seen:.6e})")
        }
        Some(hi) => format!("ladder max {max_seen:.6e} exceeds the claimed bound {hi}"),
        None => format!("no claimed upper bound; ladder max {max_seen:.6e} stayed below the divergence threshold"),
    };
    Ok(AxiomVerdict::not_falsified(trials_run).with_note(note))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::VerdictKind;
    use crate::indices::lookup;

    #[test]
    fn eigenvalue_and_triad_mean_indices_diverge() {
        let cfg = CheckConfig::default();
        for name in ["ci", "gci", "ci_star", "cr"] {
            let v = check_bounded_above(&lookup(name).unwrap(), &cfg).unwrap();
            assert_eq!(v.kind, VerdictKind::Falsified, "{name}: {}", v.describe());
        }
    }

    #[test]
    fn bounded_indices_stay_put() {
        let cfg = CheckConfig::default();
        for name in ["ki", "re", "gw", "hci"] {
            let v = check_bounded_above(&lookup(name).unwrap(), &cfg).unwrap();
            assert_eq!(v.kind, VerdictKind::NotFalsified, "{name}: {}", v.describe());
        }
    }

    #[test]
    fn ki_ladder_values_stay_below_one() {
        let ki = lookup("ki").unwrap();
        for k in 1..=12 {
            for n in [3, 4, 5, 6] {
                let v = ki.eval(&corner_matrix(n, 10f64.powi(k)).unwrap()).unwrap();
                assert!(v < 1.0, "ki(corner({n}, 1e{k})) = {v}");
            }
        }
    }
}
