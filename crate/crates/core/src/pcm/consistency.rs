use crate::error::PcmError;
use crate::pcm::Pcm;

/// One i<j<k pattern of a PCM: the entries `(a_ij, a_ik, a_jk)`.
/// The triad is consistent when `t12 * t23 = t13`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triad {
    pub t12: f64,
    pub t13: f64,
    pub t23: f64,
}

impl Triad {
    pub fn new(t12: f64, t13: f64, t23: f64) -> Result<Self, PcmError> {
        for (k, v) in [(0usize, t12), (1, t13), (2, t23)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(PcmError::NonPositiveEntry { i: 0, j: k, value: v });
            }
        }
        Ok(Triad { t12, t13, t23 })
    }

    /// The cycle ratio `t12 * t23 / t13`; 1 iff the triad is consistent.
    pub fn cycle_ratio(&self) -> f64 {
        self.t12 * self.t23 / self.t13
    }

    /// Embeds the triad as a 3x3 PCM.
    pub fn to_pcm(&self) -> Pcm {
        Pcm::from_upper(3, &[self.t12, self.t13, self.t23]).expect("positive triad")
    }
}

impl Pcm {
    /// Cardinal consistency: every triad satisfies `|a_ij*a_jk/a_ik - 1| <= tol`.
    /// Matrices of order 2 have no triads and are always consistent.
    pub fn is_consistent(&self, tol: f64) -> bool {
        let n = self.order();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let ratio = self.get(i, j) * self.get(j, k) / self.get(i, k);
                    if (ratio - 1.0).abs() > tol {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All C(n,3) triads in lexicographic order of (i,j,k). Zero-based indices.
    pub fn triads(&self) -> Result<Vec<((usize, usize, usize), Triad)>, PcmError> {
        let n = self.order();
        if n < 3 {
            return Err(PcmError::OrderTooSmall { n, min: 3 });
        }
        let mut out = Vec::with_capacity(n * (n - 1) * (n - 2) / 6);
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let t = Triad {
                        t12: self.get(i, j),
                        t13: self.get(i, k),
                        t23: self.get(j, k),
                    };
                    out.push(((i, j, k), t));
                }
            }
        }
        Ok(out)
    }

    /// Number of unordered triples {i,j,k} where some labeling has both
    /// strict preferences `a_xy > 1`, `a_yz > 1` but `a_xz <= 1`. Ties
    /// (entries equal to 1) never count as preferences.
    pub fn count_intransitive(&self) -> usize {
        let n = self.order();
        if n < 3 {
            return 0;
        }
        let mut count = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if self.triple_is_intransitive(i, j, k) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    fn triple_is_intransitive(&self, i: usize, j: usize, k: usize) -> bool {
        let idx = [i, j, k];
        // All 6 labelings (x,y,z) of the triple.
        const PERMS: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        PERMS.iter().any(|p| {
            let (x, y, z) = (idx[p[0]], idx[p[1]], idx[p[2]]);
            self.get(x, y) > 1.0 && self.get(y, z) > 1.0 && self.get(x, z) <= 1.0
        })
    }

    /// Ordinal consistency: no intransitive triple of strict preferences.
    pub fn is_ordinally_consistent(&self) -> bool {
        self.count_intransitive() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistency_examples() {
        assert!(Pcm::from_upper(3, &[2.0, 4.0, 2.0]).unwrap().is_consistent(1e-9));
        assert!(!Pcm::from_upper(3, &[2.0, 1.0, 2.0]).unwrap().is_consistent(1e-9));
        // n = 2: no triads exist.
        assert!(Pcm::from_upper(2, &[7.0]).unwrap().is_consistent(0.0));
    }

    #[test]
    fn triad_enumeration() {
        let p = Pcm::from_upper(3, &[2.0, 4.0, 2.0]).unwrap();
        let ts = p.triads().unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].0, (0, 1, 2));
        assert_eq!(ts[0].1, Triad { t12: 2.0, t13: 4.0, t23: 2.0 });

        let p5 = Pcm::from_upper(5, &[1.0; 10]).unwrap();
        assert_eq!(p5.triads().unwrap().len(), 10);

        let p2 = Pcm::from_upper(2, &[3.0]).unwrap();
        assert!(matches!(p2.triads(), Err(PcmError::OrderTooSmall { .. })));
    }

    #[test]
    fn triads_are_lexicographic() {
        let p = Pcm::from_upper(4, &[2.0, 3.0, 4.0, 5.0, 6.0, 7.0]).unwrap();
        let keys: Vec<_> = p.triads().unwrap().into_iter().map(|(k, _)| k).collect();
        assert_eq!(keys, vec![(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]);
    }

    #[test]
    fn intransitivity_counting() {
        // 1 > 2, 2 > 3 but 3 > 1.
        let cyc = Pcm::from_upper(3, &[2.0, 0.5, 2.0]).unwrap();
        assert_eq!(cyc.count_intransitive(), 1);
        assert!(!cyc.is_ordinally_consistent());

        let consistent = Pcm::from_upper(3, &[2.0, 4.0, 2.0]).unwrap();
        assert_eq!(consistent.count_intransitive(), 0);

        let ones = Pcm::from_upper(4, &[1.0; 6]).unwrap();
        assert_eq!(ones.count_intransitive(), 0);

        let two = Pcm::from_upper(2, &[5.0]).unwrap();
        assert_eq!(two.count_intransitive(), 0);
        assert!(two.is_ordinally_consistent());
    }

    #[test]
    fn cycle_ratio_detects_consistency() {
        let t = Triad::new(2.0, 4.0, 2.0).unwrap();
        assert_eq!(t.cycle_ratio(), 1.0);
        let u = Triad::new(2.0, 1.0, 2.0).unwrap();
        assert_eq!(u.cycle_ratio(), 4.0);
        assert!(Triad::new(1.0, 0.0, 1.0).is_err());
    }
}
