//! Koczkodaj's triad-maximum inconsistency index: the worst relative
//! deviation from transitivity over all triads, always in [0, 1).

use crate::pcm::{Pcm, Triad};

/// Local inconsistency of one triad: `min(|1 - b/(ac)|, |1 - ac/b|)` for
/// `(a, b, c) = (t12, t13, t23)`. Zero iff the triad is consistent.
pub fn triad_inconsistency(t: &Triad) -> f64 {
    let rho = t.cycle_ratio();
    (1.0 - rho).abs().min((1.0 - 1.0 / rho).abs())
}

/// Maximum local triad inconsistency; 0 for orders below 3.
pub fn ki_koczkodaj(a: &Pcm) -> f64 {
    if a.order() < 3 {
        return 0.0;
    }
    a.triads()
        .expect("order checked")
        .iter()
        .map(|(_, t)| triad_inconsistency(t))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triad(a: f64, b: f64, c: f64) -> Pcm {
        Pcm::from_upper(3, &[a, b, c]).unwrap()
    }

    #[test]
    fn consistent_triad_scores_zero() {
        assert_eq!(ki_koczkodaj(&triad(2.0, 4.0, 2.0)), 0.0);
    }

    #[test]
    fn hand_evaluated_triads() {
        // (2,1,2): ac/b = 4 -> min(|1-1/4|, |1-4|) = 0.75
        assert!((ki_koczkodaj(&triad(2.0, 1.0, 2.0)) - 0.75).abs() < 1e-15);
        // (1,2,1): ac/b = 1/2 -> min(|1-2|, |1-1/2|) = 0.5
        assert!((ki_koczkodaj(&triad(1.0, 2.0, 1.0)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn value_stays_below_one() {
        for seed in 0..200 {
            let a = crate::pcm::random_pcm(5, seed);
            let v = ki_koczkodaj(&a);
            assert!((0.0..1.0).contains(&v), "ki = {v}");
        }
        let extreme = crate::pcm::corner_matrix(4, 1e12).unwrap();
        assert!(ki_koczkodaj(&extreme) < 1.0);
    }
}
