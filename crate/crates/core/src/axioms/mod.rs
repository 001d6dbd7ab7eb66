//! Executable checkers for the published axiom systems.
//!
//! Every checker is a seeded falsification search: it can prove an axiom
//! violated by exhibiting a replayable witness, but it can never prove
//! satisfaction. The asymmetry is encoded in [`VerdictKind`]: `Falsified`
//! carries a witness, `NotFalsified` only says "no counterexample in N
//! trials", `Heuristic` marks properties (continuity) that finite sampling
//! can neither falsify nor verify, and `Inapplicable` marks index/axiom
//! pairs that do not type-check (e.g. a triad axiom for an index undefined
//! on order 3).
//!
//! Checks are deterministic: each (index, axiom) cell derives its own RNG
//! seed from the master seed, so cells can run in any order or concurrently
//! and still reproduce bit-identical verdicts.

mod bf;
mod brunelli7;
mod cs;
mod generator;
mod ks;
mod ku;
mod mazurek;
mod sampling;
mod witness;
mod worsen;

pub use bf::check_bf;
pub use brunelli7::check_axiom7;
pub use cs::check_cs;
pub use generator::{check_generator_properties, replay_generator_witness};
pub use ks::check_ks;
pub use ku::check_ku;
pub use mazurek::check_bounded_above;
pub use witness::Witness;
pub use worsen::search_triad_worsening;

use serde::{Deserialize, Serialize};

use crate::error::IndexError;
use crate::indices::IndexHandle;

/// Which deviation-from-transitivity measure the KU monotonicity axiom uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EimMode {
    /// `max(ac/b, b/ac)`: the multiplicative form. This is the default; the
    /// plain difference orders triads in a way no ratio-scale index follows
    /// (a tiny relative error on large entries outweighs a huge relative
    /// error on small ones).
    MaxRatio,
    /// `|ac - b|`: the literal displayed inequality.
    AbsoluteDifference,
}

/// Shared configuration for all checkers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Randomized trials per check.
    pub trials: usize,
    /// Matrix orders sampled by matrix-level checks.
    pub orders: Vec<usize>,
    /// Master seed; each cell derives its own stream from it.
    pub seed: u64,
    /// Tolerance for the checked inequalities.
    pub tol: f64,
    /// Evaluation budget for hill-climbing searches.
    pub search_budget: usize,
    /// Deviation measure for the KU triad-monotonicity axiom.
    pub eim: EimMode,
    /// A boundedness check reports "unbounded" when values grow strictly
    /// along the corner ladder and exceed this threshold. The ladder tops
    /// out at x = 1e12 where CI reaches ~5e3 and GCI ~254, while every
    /// bounded built-in stays below 2, so 100 separates the two regimes
    /// with a wide margin on both sides.
    pub unbounded_threshold: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            trials: 10_000,
            orders: vec![3, 4, 5, 6],
            seed: 42,
            tol: 1e-9,
            search_budget: 100_000,
            eim: EimMode::MaxRatio,
            unbounded_threshold: 100.0,
        }
    }
}

impl CheckConfig {
    pub fn with_seed(seed: u64) -> Self {
        CheckConfig { seed, ..CheckConfig::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Falsified,
    NotFalsified,
    Heuristic,
    Inapplicable,
}

/// Outcome of one (index, axiom) check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub kind: VerdictKind,
    /// Present exactly when `kind == Falsified`; replaying it reproduces the
    /// violated inequality.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Candidate evaluations performed.
    pub trials_run: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl AxiomVerdict {
    pub fn falsified(witness: Witness, trials_run: usize) -> Self {
        AxiomVerdict { kind: VerdictKind::Falsified, witness: Some(witness), trials_run, notes: vec![] }
    }

    pub fn not_falsified(trials_run: usize) -> Self {
        AxiomVerdict { kind: VerdictKind::NotFalsified, witness: None, trials_run, notes: vec![] }
    }

    pub fn heuristic(trials_run: usize, notes: Vec<String>) -> Self {
        AxiomVerdict { kind: VerdictKind::Heuristic, witness: None, trials_run, notes }
    }

    pub fn inapplicable(reason: impl Into<String>) -> Self {
        AxiomVerdict {
            kind: VerdictKind::Inapplicable,
            witness: None,
            trials_run: 0,
            notes: vec![reason.into()],
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// One-line human description. A NotFalsified verdict is always rendered
    /// as "no counterexample", never as "satisfied".
    pub fn describe(&self) -> String {
        match self.kind {
            VerdictKind::Falsified => {
                let w = self.witness.as_ref().map(|w| w.summary()).unwrap_or_default();
                format!("falsified: {w}")
            }
            VerdictKind::NotFalsified => {
                format!("no counterexample in {} trials", self.trials_run)
            }
            VerdictKind::Heuristic => format!("heuristic evidence: {}", self.notes.join("; ")),
            VerdictKind::Inapplicable => format!("inapplicable: {}", self.notes.join("; ")),
        }
    }
}

/// Stable identifiers for every checkable axiom. The two distinct sixth
/// axioms around the BF system get separate identifiers: `mz_bounded` is
/// boundedness from above, `bf_a6` is transpose invariance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomId {
    BfA1,
    BfA2,
    BfA3,
    BfA4,
    BfA5,
    Bf6Transpose,
    MzBounded,
    KuA1,
    KuA2,
    KuA3,
    KuA4,
    KsA1,
    KsA2,
    KsA3,
    CsI,
    CsIi,
    CsIii,
    CsIv,
    CsV,
    CsVi,
    A7Intransitivity,
}

impl AxiomId {
    pub const ALL: [AxiomId; 21] = [
        AxiomId::BfA1,
        AxiomId::BfA2,
        AxiomId::BfA3,
        AxiomId::BfA4,
        AxiomId::BfA5,
        AxiomId::Bf6Transpose,
        AxiomId::MzBounded,
        AxiomId::KuA1,
        AxiomId::KuA2,
        AxiomId::KuA3,
        AxiomId::KuA4,
        AxiomId::KsA1,
        AxiomId::KsA2,
        AxiomId::KsA3,
        AxiomId::CsI,
        AxiomId::CsIi,
        AxiomId::CsIii,
        AxiomId::CsIv,
        AxiomId::CsV,
        AxiomId::CsVi,
        AxiomId::A7Intransitivity,
    ];

    /// The 20 axioms the default compliance grid runs (everything except the
    /// standalone intransitivity axiom).
    pub fn default_grid() -> Vec<AxiomId> {
        AxiomId::ALL.iter().copied().filter(|a| *a != AxiomId::A7Intransitivity).collect()
    }

    pub fn id(&self) -> &'static str {
        match self {
            AxiomId::BfA1 => "bf_a1",
            AxiomId::BfA2 => "bf_a2",
            AxiomId::BfA3 => "bf_a3",
            AxiomId::BfA4 => "bf_a4",
            AxiomId::BfA5 => "bf_a5",
            AxiomId::Bf6Transpose => "bf_a6",
            AxiomId::MzBounded => "mz_bounded",
            AxiomId::KuA1 => "ku_a1",
            AxiomId::KuA2 => "ku_a2",
            AxiomId::KuA3 => "ku_a3",
            AxiomId::KuA4 => "ku_a4",
            AxiomId::KsA1 => "ks_a1",
            AxiomId::KsA2 => "ks_a2",
            AxiomId::KsA3 => "ks_a3",
            AxiomId::CsI => "cs_i",
            AxiomId::CsIi => "cs_ii",
            AxiomId::CsIii => "cs_iii",
            AxiomId::CsIv => "cs_iv",
            AxiomId::CsV => "cs_v",
            AxiomId::CsVi => "cs_vi",
            AxiomId::A7Intransitivity => "a7_intransitivity",
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            AxiomId::BfA1 => "BF A1: unique value exactly at consistency",
            AxiomId::BfA2 => "BF A2: invariance under row/column permutation",
            AxiomId::BfA3 => "BF A3: monotone under preference intensification",
            AxiomId::BfA4 => "BF A4: monotone on single-entry deviations",
            AxiomId::BfA5 => "BF A5: continuity (heuristic probe)",
            AxiomId::Bf6Transpose => "BF A6: invariance under transposition",
            AxiomId::MzBounded => "MZ: bounded from above",
            AxiomId::KuA1 => "KU A1: zero exactly at consistency",
            AxiomId::KuA2 => "KU A2: range (0, 1] on inconsistent matrices",
            AxiomId::KuA3 => "KU A3: monotone in triad deviation",
            AxiomId::KuA4 => "KU A4: no submatrix more inconsistent",
            AxiomId::KsA1 => "KS A1: consistent triads map to 0",
            AxiomId::KsA2 => "KS A2: codomain [0, 1)",
            AxiomId::KsA3 => "KS A3: altered consistent triad is inconsistent",
            AxiomId::CsI => "CS I: positive responsiveness",
            AxiomId::CsIi => "CS II: invariance under preference inversion",
            AxiomId::CsIii => "CS III: homogeneous treatment of entities",
            AxiomId::CsIv => "CS IV: scale invariance",
            AxiomId::CsV => "CS V: monotony (triads bound the matrix)",
            AxiomId::CsVi => "CS VI: reducibility",
            AxiomId::A7Intransitivity => "A7: monotone in intransitive triple count",
        }
    }

    pub fn parse(s: &str) -> Option<AxiomId> {
        AxiomId::ALL.iter().copied().find(|a| a.id() == s)
    }
}

impl std::fmt::Display for AxiomId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

/// FNV-1a over the master seed and the cell coordinates; gives every
/// (index, axiom) cell an independent deterministic stream.
pub fn derive_seed(master: u64, index_name: &str, axiom: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(&master.to_le_bytes());
    eat(index_name.as_bytes());
    eat(b"/");
    eat(axiom.as_bytes());
    h
}

/// Runs the checker for one axiom against one index.
pub fn check(
    index: &IndexHandle,
    axiom: AxiomId,
    cfg: &CheckConfig,
) -> Result<AxiomVerdict, IndexError> {
    match axiom {
        AxiomId::BfA1 => check_bf(index, 1, cfg),
        AxiomId::BfA2 => check_bf(index, 2, cfg),
        AxiomId::BfA3 => check_bf(index, 3, cfg),
        AxiomId::BfA4 => check_bf(index, 4, cfg),
        AxiomId::BfA5 => check_bf(index, 5, cfg),
        AxiomId::Bf6Transpose => check_bf(index, 6, cfg),
        AxiomId::MzBounded => check_bounded_above(index, cfg),
        AxiomId::KuA1 => check_ku(index, 1, cfg),
        AxiomId::KuA2 => check_ku(index, 2, cfg),
        AxiomId::KuA3 => check_ku(index, 3, cfg),
        AxiomId::KuA4 => check_ku(index, 4, cfg),
        AxiomId::KsA1 => check_ks(index, 1, cfg),
        AxiomId::KsA2 => check_ks(index, 2, cfg),
        AxiomId::KsA3 => check_ks(index, 3, cfg),
        AxiomId::CsI => check_cs(index, 1, cfg),
        AxiomId::CsIi => check_cs(index, 2, cfg),
        AxiomId::CsIii => check_cs(index, 3, cfg),
        AxiomId::CsIv => check_cs(index, 4, cfg),
        AxiomId::CsV => check_cs(index, 5, cfg),
        AxiomId::CsVi => check_cs(index, 6, cfg),
        AxiomId::A7Intransitivity => check_axiom7(index, cfg),
    }
}

/// `|a - b| <= rel * max(1, |a|, |b|)`: the scale-aware equality used by the
/// invariance checks.
pub(crate) fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

/// `a > b + tol * max(1, |a|, |b|)`: scale-aware strict violation test.
pub(crate) fn exceeds(a: f64, b: f64, tol: f64) -> bool {
    a > b + tol * a.abs().max(b.abs()).max(1.0)
}
