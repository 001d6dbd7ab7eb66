//! The inconsistency-index registry.
//!
//! An inconsistency index is a function from PCMs to the reals that is zero
//! exactly on consistent matrices and positive otherwise. The eight built-ins
//! are registered under frozen names: `ci`, `cr`, `ki`, `gci`, `ci_star`,
//! `hci`, `gw`, `re`.

mod barzilai;
mod framework;
mod geometric;
mod golden_wang;
mod harmonic;
mod koczkodaj;
mod pelaez_lamata;
mod saaty;

pub use barzilai::re_barzilai;
pub use framework::{build_triad_index, Aggregator, TriadGenerator};
pub use geometric::gci;
pub use golden_wang::gw;
pub use harmonic::hci;
pub use koczkodaj::{ki_koczkodaj, triad_inconsistency};
pub use pelaez_lamata::ci_star;
pub use saaty::{ci_saaty, cr_saaty, default_ri_table, random_index, RiTable};

use std::fmt;
use std::sync::Arc;

use crate::error::IndexError;
use crate::pcm::Pcm;

/// The value range an index claims for itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClaimedRange {
    pub lo: f64,
    /// `None` means unbounded above.
    pub hi: Option<f64>,
    pub hi_inclusive: bool,
}

impl ClaimedRange {
    pub const NONNEGATIVE: ClaimedRange = ClaimedRange { lo: 0.0, hi: None, hi_inclusive: false };
    pub const UNIT_HALF_OPEN: ClaimedRange =
        ClaimedRange { lo: 0.0, hi: Some(1.0), hi_inclusive: false };
    pub const UNIT_CLOSED: ClaimedRange =
        ClaimedRange { lo: 0.0, hi: Some(1.0), hi_inclusive: true };
}

impl fmt::Display for ClaimedRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            None => write!(f, "[{}, inf)", self.lo),
            Some(hi) => write!(f, "[{}, {}{}", self.lo, hi, if self.hi_inclusive { "]" } else { ")" }),
        }
    }
}

type EvalFn = Arc<dyn Fn(&Pcm) -> Result<f64, IndexError> + Send + Sync>;

/// A named inconsistency index: a pure evaluation function plus metadata.
/// Handles are immutable and cheap to clone.
#[derive(Clone)]
pub struct IndexHandle {
    name: String,
    eval: EvalFn,
    min_order: usize,
    claimed_range: ClaimedRange,
    triad_decomposable: bool,
}

impl IndexHandle {
    pub fn new(
        name: impl Into<String>,
        min_order: usize,
        claimed_range: ClaimedRange,
        triad_decomposable: bool,
        eval: impl Fn(&Pcm) -> Result<f64, IndexError> + Send + Sync + 'static,
    ) -> Self {
        IndexHandle {
            name: name.into(),
            eval: Arc::new(eval),
            min_order,
            claimed_range,
            triad_decomposable,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Smallest order the index is defined for. Orders below it evaluate to
    /// 0 (every 2x2 PCM is consistent) rather than erroring.
    pub fn min_order(&self) -> usize {
        self.min_order
    }

    pub fn claimed_range(&self) -> ClaimedRange {
        self.claimed_range
    }

    pub fn triad_decomposable(&self) -> bool {
        self.triad_decomposable
    }

    pub fn eval(&self, a: &Pcm) -> Result<f64, IndexError> {
        (self.eval)(a)
    }
}

impl fmt::Debug for IndexHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndexHandle")
            .field("name", &self.name)
            .field("min_order", &self.min_order)
            .field("claimed_range", &self.claimed_range)
            .field("triad_decomposable", &self.triad_decomposable)
            .finish()
    }
}

/// Index names that are reserved for indices known from the literature but
/// not implemented here; `lookup` reports them as such instead of "unknown".
pub const RESERVED_NAMES: [&str; 10] =
    ["cm", "cci", "ni_g", "ci_h", "s", "i_chi2", "fg", "ati", "i_cp", "ci_beta"];

/// The eight built-in indices in their fixed documented order.
pub fn registry() -> Vec<IndexHandle> {
    vec![
        IndexHandle::new("ci", 2, ClaimedRange::NONNEGATIVE, false, |a| ci_saaty(a)),
        IndexHandle::new("cr", 3, ClaimedRange::NONNEGATIVE, false, |a| {
            if a.order() < 3 {
                return Ok(0.0);
            }
            cr_saaty(a, default_ri_table())
        }),
        IndexHandle::new("ki", 3, ClaimedRange::UNIT_HALF_OPEN, true, |a| Ok(ki_koczkodaj(a))),
        IndexHandle::new("gci", 3, ClaimedRange::NONNEGATIVE, true, |a| Ok(gci(a))),
        IndexHandle::new("ci_star", 3, ClaimedRange::NONNEGATIVE, true, |a| Ok(ci_star(a))),
        IndexHandle::new("hci", 2, ClaimedRange::NONNEGATIVE, false, |a| Ok(hci(a))),
        IndexHandle::new(
            "gw",
            2,
            ClaimedRange { lo: 0.0, hi: Some(2.0), hi_inclusive: true },
            false,
            |a| Ok(gw(a)),
        ),
        IndexHandle::new("re", 2, ClaimedRange::UNIT_CLOSED, false, |a| Ok(re_barzilai(a))),
    ]
}

/// Finds a built-in handle by its frozen name.
pub fn lookup(name: &str) -> Result<IndexHandle, IndexError> {
    if let Some(h) = registry().into_iter().find(|h| h.name() == name) {
        return Ok(h);
    }
    if RESERVED_NAMES.contains(&name) {
        return Err(IndexError::NotImplemented(name.to_string()));
    }
    Err(IndexError::UnknownIndex(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_the_eight_builtins_in_order() {
        let names: Vec<_> = registry().iter().map(|h| h.name().to_string()).collect();
        assert_eq!(names, vec!["ci", "cr", "ki", "gci", "ci_star", "hci", "gw", "re"]);
    }

    #[test]
    fn lookup_distinguishes_reserved_from_unknown() {
        assert_eq!(lookup("ci").unwrap().name(), "ci");
        assert!(matches!(lookup("cci"), Err(IndexError::NotImplemented(_))));
        assert!(matches!(lookup("nope"), Err(IndexError::UnknownIndex(_))));
    }

    #[test]
    fn handles_evaluate_to_zero_on_consistent_input() {
        let a = Pcm::from_upper(3, &[2.0, 4.0, 2.0]).unwrap();
        for h in registry() {
            let v = h.eval(&a).unwrap();
            assert!(v.abs() < 1e-9, "{} = {v}", h.name());
        }
    }

    #[test]
    fn order_two_evaluates_to_zero_everywhere() {
        let a = Pcm::from_upper(2, &[7.0]).unwrap();
        for h in registry() {
            let v = h.eval(&a).unwrap();
            assert!(v.abs() < 1e-12, "{} = {v}", h.name());
        }
    }

    #[test]
    fn claimed_range_display() {
        assert_eq!(ClaimedRange::NONNEGATIVE.to_string(), "[0, inf)");
        assert_eq!(ClaimedRange::UNIT_HALF_OPEN.to_string(), "[0, 1)");
        assert_eq!(ClaimedRange::UNIT_CLOSED.to_string(), "[0, 1]");
    }
}
