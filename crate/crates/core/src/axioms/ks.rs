//! The three-axiom triad system: zero on consistent triads, codomain [0,1),
//! and sensitivity to any alteration of a consistent triad. The third axiom
//! also carries the quasi-convexity restatement, probed along log-space
//! segment midpoints (the consistent triads form a linear subspace in log
//! coordinates, so arithmetic midpoints would declare every index
//! non-quasi-convex between two consistent endpoints).

use crate::axioms::sampling::{
    battery_triads, offset_multiplier, random_consistent_triad, random_triad,
};
use crate::axioms::{derive_seed, exceeds, AxiomVerdict, CheckConfig, Witness};
use crate::error::IndexError;
use crate::indices::IndexHandle;
use crate::pcm::{PcmSampler, Triad};

pub fn check_ks(
    index: &IndexHandle,
    axiom_id: u8,
    cfg: &CheckConfig,
) -> Result<AxiomVerdict, IndexError> {
    assert!((1..=3).contains(&axiom_id), "KS axioms are 1..3");
    if index.min_order() > 3 {
        return Ok(AxiomVerdict::inapplicable(format!(
            "{} needs order >= {}, triads have order 3",
            index.name(),
            index.min_order()
        )));
    }
    let axiom = ["ks_a1", "ks_a2", "ks_a3"][(axiom_id - 1) as usize];
    let mut s = PcmSampler::new(derive_seed(cfg.seed, index.name(), axiom));
    match axiom_id {
        1 => ks1(index, cfg, &mut s),
        2 => ks2(index, cfg, &mut s),
        _ => ks3(index, cfg, &mut s),
    }
}

fn eval_triad(index: &IndexHandle, t: &Triad) -> Result<f64, IndexError> {
    index.eval(&t.to_pcm())
}

/// Consistent triads must map to 0.
fn ks1(
    index: &IndexHandle,
    cfg: &CheckConfig,
    s: &mut PcmSampler,
) -> Result<AxiomVerdict, IndexError> {
    for _ in 0..cfg.trials {
        let t = random_consistent_triad(s);
        let v = eval_triad(index, &t)?;
        if v.abs() > cfg.tol {
            return Ok(AxiomVerdict::falsified(
                Witness::ConsistentNotOmega {
                    matrix: (&t.to_pcm()).into(),
                    value: v,
                    omega: 0.0,
                },
                cfg.trials,
            ));
        }
    }
    Ok(AxiomVerdict::not_falsified(cfg.trials))
}

/// Codomain scan for [0, 1).
fn ks2(
    index: &IndexHandle,
    cfg: &CheckConfig,
    s: &mut PcmSampler,
) -> Result<AxiomVerdict, IndexError> {
    let mut probes = battery_triads();
    for _ in 0..cfg.trials {
        probes.push(random_triad(s));
    }
    let trials = probes.len();
    for t in probes {
        let v = eval_triad(index, &t)?;
        let reason = if v < -cfg.tol {
            Some("below 0")
        } else if v >= 1.0 {
            Some("at or above 1")
        } else {
            None
        };
        if let Some(reason) = reason {
            return Ok(AxiomVerdict::falsified(
                Witness::RangeViolation {
                    matrix: (&t.to_pcm()).into(),
                    value: v,
                    range: "[0, 1)".into(),
                    reason: reason.into(),
                },
                trials,
            ));
        }
    }
    Ok(AxiomVerdict::not_falsified(trials)
        .with_note("supremum attainment is untestable; only range membership was scanned"))
}

/// Altering any coordinate of a consistent triad must yield a positive
/// value, and the index must be quasi-convex along log-space segments.
fn ks3(
    index: &IndexHandle,
    cfg: &CheckConfig,
    s: &mut PcmSampler,
) -> Result<AxiomVerdict, IndexError> {
    let mut trials_run = 0;
    for _ in 0..cfg.trials {
        trials_run += 1;
        let t = random_consistent_triad(s);
        let mut coords = [t.t12, t.t13, t.t23];
        let which = s.pick(3);
        coords[which] *= offset_multiplier(s);
        let altered = Triad::new(coords[0], coords[1], coords[2]).map_err(IndexError::Pcm)?;
        let v = eval_triad(index, &altered)?;
        if v <= cfg.tol {
            return Ok(AxiomVerdict::falsified(
                Witness::AlteredStillConsistentValue {
                    triad: [t.t12, t.t13, t.t23],
                    altered: coords,
                    value: v,
                },
                trials_run,
            ));
        }
    }
    // Quasi-convexity probe: geometric midpoints of sampled pairs.
    for k in 0..cfg.trials {
        trials_run += 1;
        let p = if k % 3 == 0 { random_consistent_triad(s) } else { random_triad(s) };
        let q = random_triad(s);
        let mid = Triad::new(
            (p.t12 * q.t12).sqrt(),
            (p.t13 * q.t13).sqrt(),
            (p.t23 * q.t23).sqrt(),
        )
        .map_err(IndexError::Pcm)?;
        let (fp, fq, fm) =
            (eval_triad(index, &p)?, eval_triad(index, &q)?, eval_triad(index, &mid)?);
        if exceeds(fm, fp.max(fq), cfg.tol) {
            return Ok(AxiomVerdict::falsified(
                Witness::QuasiConvexity {
                    p: [p.t12, p.t13, p.t23],
                    q: [q.t12, q.t13, q.t23],
                    mid: [mid.t12, mid.t13, mid.t23],
                    value_p: fp,
                    value_q: fq,
                    value_mid: fm,
                },
                trials_run,
            ));
        }
    }
    Ok(AxiomVerdict::not_falsified(trials_run))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::VerdictKind;
    use crate::indices::lookup;

    fn cfg() -> CheckConfig {
        CheckConfig { trials: 400, ..CheckConfig::default() }
    }

    #[test]
    fn ki_passes_all_three() {
        let ki = lookup("ki").unwrap();
        for ax in 1..=3 {
            let v = check_ks(&ki, ax, &cfg()).unwrap();
            assert_eq!(v.kind, VerdictKind::NotFalsified, "ks{ax}: {}", v.describe());
        }
    }

    #[test]
    fn ci_violates_the_range_axiom() {
        let ci = lookup("ci").unwrap();
        let v = check_ks(&ci, 2, &cfg()).unwrap();
        assert_eq!(v.kind, VerdictKind::Falsified);
        match v.witness.unwrap() {
            Witness::RangeViolation { value, .. } => assert!(value >= 1.0),
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn verdicts_are_deterministic() {
        let ci = lookup("ci").unwrap();
        assert_eq!(check_ks(&ci, 2, &cfg()).unwrap(), check_ks(&ci, 2, &cfg()).unwrap());
    }
}
