//! Shared sample sources for the checkers: a deterministic battery of
//! designed probes (extreme corners, mild cycles) that guarantee the known
//! violations are found without luck, followed by seeded random sampling.

use crate::pcm::{corner_matrix, Pcm, PcmSampler, Triad};

/// Designed probe matrices per order: corners of growing sharpness, the
/// all-ones matrix, and a mild preference cycle.
pub fn battery_matrices(orders: &[usize]) -> Vec<Pcm> {
    let mut out = Vec::new();
    for &n in orders {
        if n < 3 {
            continue;
        }
        out.push(Pcm::from_upper(n, &vec![1.0; n * (n - 1) / 2]).expect("valid"));
        for x in [10.0, 100.0, 1000.0] {
            out.push(corner_matrix(n, x).expect("n >= 3"));
        }
        out.push(mild_cycle(n));
    }
    out
}

/// A near-indifferent matrix with one intransitive triple: a_12 = a_23 = t,
/// a_13 = 1/t for small t > 1.
pub fn mild_cycle(n: usize) -> Pcm {
    let t = 1.1;
    let mut full = vec![vec![1.0; n]; n];
    full[0][1] = t;
    full[1][0] = 1.0 / t;
    full[1][2] = t;
    full[2][1] = 1.0 / t;
    full[0][2] = 1.0 / t;
    full[2][0] = t;
    Pcm::new(&full, 1e-12).expect("valid cycle")
}

/// Designed probe triads: consistent ones, hand-picked inconsistent ones,
/// and the corner ladder (1, 10^k, 1) whose index values grow without bound
/// for the unbounded indices.
pub fn battery_triads() -> Vec<Triad> {
    let mut out = vec![
        Triad::new(2.0, 4.0, 2.0).expect("valid"),
        Triad::new(2.0, 1.0, 2.0).expect("valid"),
        Triad::new(1.0, 2.0, 1.0).expect("valid"),
        Triad::new(9.0, 1.0 / 9.0, 9.0).expect("valid"),
        Triad::new(1.0 / 9.0, 9.0, 1.0 / 9.0).expect("valid"),
    ];
    for k in 1..=12 {
        out.push(Triad::new(1.0, 10f64.powi(k), 1.0).expect("valid"));
    }
    out
}

/// Random triad with log-uniform coordinates in [1/9, 9].
pub fn random_triad(s: &mut PcmSampler) -> Triad {
    Triad::new(s.log_uniform(9.0), s.log_uniform(9.0), s.log_uniform(9.0)).expect("positive")
}

/// Random consistent triad (a, ac, c).
pub fn random_consistent_triad(s: &mut PcmSampler) -> Triad {
    let a = s.log_uniform(9.0);
    let c = s.log_uniform(9.0);
    Triad::new(a, a * c, c).expect("positive")
}

/// A multiplier bounded away from 1: `exp(sign * uniform(ln 1.1, ln 9))`.
pub fn offset_multiplier(s: &mut PcmSampler) -> f64 {
    let mag = s.uniform(1.1f64.ln(), 9f64.ln());
    if s.pick(2) == 0 {
        mag.exp()
    } else {
        (-mag).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_is_deterministic_and_valid() {
        let a = battery_matrices(&[3, 4]);
        let b = battery_matrices(&[3, 4]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
    }

    #[test]
    fn mild_cycle_is_intransitive_but_barely_inconsistent() {
        let c = mild_cycle(4);
        assert_eq!(c.count_intransitive(), 1);
        assert!(crate::indices::ki_koczkodaj(&c) < 0.3);
    }

    #[test]
    fn offset_multiplier_avoids_the_identity() {
        let mut s = PcmSampler::new(1);
        for _ in 0..100 {
            let m = offset_multiplier(&mut s);
            assert!(m.ln().abs() >= 1.1f64.ln() - 1e-12);
        }
    }
}
