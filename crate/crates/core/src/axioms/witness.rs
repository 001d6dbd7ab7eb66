//! Falsification witnesses: enough full-precision data to re-evaluate the
//! violated inequality from scratch. Matrices use the same JSON document
//! format as the CLI, so a witness file can be fed back into `eval`.

use serde::{Deserialize, Serialize};

use crate::axioms::EimMode;
use crate::document::MatrixDocument;
use crate::error::IndexError;
use crate::indices::{triad_inconsistency, IndexHandle};
use crate::pcm::Triad;

fn triad_pcm(t: &[f64; 3]) -> Result<crate::pcm::Pcm, IndexError> {
    Ok(Triad::new(t[0], t[1], t[2]).map_err(IndexError::Pcm)?.to_pcm())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An inconsistent matrix whose index value coincides with the
    /// consistent value omega.
    InconsistentAtOmega { matrix: MatrixDocument, value: f64, omega: f64 },
    /// A consistent matrix mapped away from omega.
    ConsistentNotOmega { matrix: MatrixDocument, value: f64, omega: f64 },
    /// A value outside the claimed codomain.
    RangeViolation { matrix: MatrixDocument, value: f64, range: String, reason: String },
    PermutationMismatch { matrix: MatrixDocument, sigma: Vec<usize>, value: f64, permuted_value: f64 },
    IntensificationDecrease { matrix: MatrixDocument, exponent: f64, value: f64, intensified_value: f64 },
    /// `values[step+1] < values[step] - tol` along a single-entry chain away
    /// from a consistent base; `entries` are the probed a_ij values.
    NonMonotoneChain {
        base: MatrixDocument,
        i: usize,
        j: usize,
        entries: Vec<f64>,
        values: Vec<f64>,
        step: usize,
    },
    TransposeMismatch { matrix: MatrixDocument, value: f64, transposed_value: f64 },
    /// Strictly increasing values along the corner x-ladder, final value
    /// above the divergence threshold.
    UnboundedGrowth { order: usize, xs: Vec<f64>, values: Vec<f64>, threshold: f64 },
    /// C(a) >= C(b) but index(a) < index(b).
    IntransitivityOrder {
        a: MatrixDocument,
        b: MatrixDocument,
        count_a: usize,
        count_b: usize,
        value_a: f64,
        value_b: f64,
    },
    SubmatrixExceeds { matrix: MatrixDocument, subset: Vec<usize>, value: f64, submatrix_value: f64 },
    /// Triad pair ordered by deviation-from-transitivity whose index values
    /// are ordered the other way.
    DeviationOrder {
        t1: [f64; 3],
        t2: [f64; 3],
        dev1: f64,
        dev2: f64,
        value1: f64,
        value2: f64,
        eim: EimMode,
    },
    /// f at the log-segment midpoint exceeds f at both endpoints.
    QuasiConvexity {
        p: [f64; 3],
        q: [f64; 3],
        mid: [f64; 3],
        value_p: f64,
        value_q: f64,
        value_mid: f64,
    },
    /// Altering one coordinate of a consistent triad left the index at zero.
    AlteredStillConsistentValue { triad: [f64; 3], altered: [f64; 3], value: f64 },
    /// (1,a,1) vs (1,b,1) with a <= b but f ordered strictly the other way.
    PositiveResponsiveness { a: f64, b: f64, value_a: f64, value_b: f64 },
    /// Two triads an invariance axiom requires to have equal values.
    TriadValueMismatch { label: String, t1: [f64; 3], t2: [f64; 3], value1: f64, value2: f64 },
    TriadExceedsMatrix {
        matrix: MatrixDocument,
        triad_idx: [usize; 3],
        triad_value: f64,
        matrix_value: f64,
    },
    /// No triad value comes within tol of the matrix value.
    NoReducingTriad { matrix: MatrixDocument, matrix_value: f64, closest_triad_value: f64 },
    /// One triad got locally worse while the whole-matrix index improved.
    TriadWorsening {
        base: MatrixDocument,
        perturbed: MatrixDocument,
        triad: [usize; 3],
        local_before: f64,
        local_after: f64,
        value_before: f64,
        value_after: f64,
    },
    /// A triad-generator property violated at sampled points.
    GeneratorProperty { reason: String, points: Vec<f64>, values: Vec<f64> },
}

impl Witness {
    pub fn summary(&self) -> String {
        match self {
            Witness::InconsistentAtOmega { value, omega, .. } => {
                format!("inconsistent matrix evaluates to {value:.6e} = omega {omega:.6e}")
            }
            Witness::ConsistentNotOmega { value, omega, .. } => {
                format!("consistent matrix evaluates to {value:.6e}, omega = {omega:.6e}")
            }
            Witness::RangeViolation { value, range, reason, .. } => {
                format!("value {value:.6e} outside {range} ({reason})")
            }
            Witness::PermutationMismatch { value, permuted_value, .. } => {
                format!("f(A) = {value:.12e} but f(P^T A P) = {permuted_value:.12e}")
            }
            Witness::IntensificationDecrease { exponent, value, intensified_value, .. } => {
                format!("f(A^{exponent:.4}) = {intensified_value:.6e} < f(A) = {value:.6e}")
            }
            Witness::NonMonotoneChain { i, j, step, values, .. } => format!(
                "chain on entry ({i},{j}) decreases at step {step}: {:.6e} -> {:.6e}",
                values[*step],
                values[*step + 1]
            ),
            Witness::TransposeMismatch { value, transposed_value, .. } => {
                format!("f(A) = {value:.12e} but f(A^T) = {transposed_value:.12e}")
            }
            Witness::UnboundedGrowth { order, values, threshold, .. } => format!(
                "order {order}: strictly increasing ladder tops at {:.6e} > {threshold}",
                values.last().copied().unwrap_or(f64::NAN)
            ),
            Witness::IntransitivityOrder { count_a, count_b, value_a, value_b, .. } => format!(
                "C(A) = {count_a} >= C(B) = {count_b} but f(A) = {value_a:.6e} < f(B) = {value_b:.6e}"
            ),
            Witness::SubmatrixExceeds { subset, value, submatrix_value, .. } => format!(
                "f(submatrix {subset:?}) = {submatrix_value:.6e} > f(A) = {value:.6e}"
            ),
            Witness::DeviationOrder { dev1, dev2, value1, value2, .. } => format!(
                "dev {dev1:.6e} <= {dev2:.6e} but f {value1:.6e} > {value2:.6e}"
            ),
            Witness::QuasiConvexity { value_p, value_q, value_mid, .. } => format!(
                "f(mid) = {value_mid:.6e} > max(f(p), f(q)) = {:.6e}",
                value_p.max(*value_q)
            ),
            Witness::AlteredStillConsistentValue { value, .. } => {
                format!("altered consistent triad still evaluates to {value:.6e}")
            }
            Witness::PositiveResponsiveness { a, b, value_a, value_b } => format!(
                "a = {a:.6} <= b = {b:.6} but f(1,a,1) = {value_a:.6e} > f(1,b,1) = {value_b:.6e}"
            ),
            Witness::TriadValueMismatch { label, value1, value2, .. } => {
                format!("{label}: {value1:.12e} != {value2:.12e}")
            }
            Witness::TriadExceedsMatrix { triad_idx, triad_value, matrix_value, .. } => format!(
                "triad {triad_idx:?} evaluates to {triad_value:.6e} > matrix value {matrix_value:.6e}"
            ),
            Witness::NoReducingTriad { matrix_value, closest_triad_value, .. } => format!(
                "no triad within tol of matrix value {matrix_value:.6e} (closest {closest_triad_value:.6e})"
            ),
            Witness::TriadWorsening { triad, local_before, local_after, value_before, value_after, .. } => {
                format!(
                    "triad {triad:?} worsened {local_before:.6} -> {local_after:.6} while index improved {value_before:.6e} -> {value_after:.6e}"
                )
            }
            Witness::GeneratorProperty { reason, .. } => reason.clone(),
        }
    }

    /// Re-evaluates the violated inequality from the stored inputs. Returns
    /// `None` for witnesses that do not involve an index (generator
    /// property violations; replay those with [`super::replay_generator_witness`]).
    pub fn replay(&self, index: &IndexHandle, tol: f64) -> Result<Option<bool>, IndexError> {
        use crate::axioms::{close, exceeds};
        let ok = match self {
            Witness::InconsistentAtOmega { matrix, omega, .. } => {
                let a = matrix.to_pcm()?;
                !a.is_consistent(tol) && (index.eval(&a)? - omega).abs() <= tol
            }
            Witness::ConsistentNotOmega { matrix, omega, .. } => {
                let a = matrix.to_pcm()?;
                a.is_consistent(tol) && (index.eval(&a)? - omega).abs() > tol
            }
            Witness::RangeViolation { matrix, value, .. } => {
                let v = index.eval(&matrix.to_pcm()?)?;
                v == *value
            }
            Witness::PermutationMismatch { matrix, sigma, .. } => {
                let a = matrix.to_pcm()?;
                let p = a.permute(sigma)?;
                !close(index.eval(&a)?, index.eval(&p)?, 1e-12)
            }
            Witness::IntensificationDecrease { matrix, exponent, .. } => {
                let a = matrix.to_pcm()?;
                let fa = index.eval(&a)?;
                let fk = index.eval(&a.intensify(*exponent))?;
                fk < fa - tol * fa.abs().max(fk.abs()).max(1.0)
            }
            Witness::NonMonotoneChain { base, i, j, entries, step, .. } => {
                let a = base.to_pcm()?;
                let f_lo = index.eval(&a.perturb_entry(*i, *j, entries[*step])?)?;
                let f_hi = index.eval(&a.perturb_entry(*i, *j, entries[*step + 1])?)?;
                f_hi < f_lo - tol * f_lo.abs().max(f_hi.abs()).max(1.0)
            }
            Witness::TransposeMismatch { matrix, .. } => {
                let a = matrix.to_pcm()?;
                !close(index.eval(&a)?, index.eval(&a.transpose())?, 1e-12)
            }
            Witness::UnboundedGrowth { order, xs, threshold, .. } => {
                let mut vals = Vec::with_capacity(xs.len());
                for &x in xs {
                    vals.push(index.eval(&crate::pcm::corner_matrix(*order, x)?)?);
                }
                let increasing = vals.windows(2).all(|w| w[1] > w[0]);
                increasing && vals.last().copied().unwrap_or(0.0) > *threshold
            }
            Witness::IntransitivityOrder { a, b, .. } => {
                let (pa, pb) = (a.to_pcm()?, b.to_pcm()?);
                let (fa, fb) = (index.eval(&pa)?, index.eval(&pb)?);
                pa.count_intransitive() >= pb.count_intransitive()
                    && fb > fa + tol * fa.abs().max(fb.abs()).max(1.0)
            }
            Witness::SubmatrixExceeds { matrix, subset, .. } => {
                let a = matrix.to_pcm()?;
                let sub = a.submatrix(subset)?;
                exceeds(index.eval(&sub)?, index.eval(&a)?, tol)
            }
            Witness::DeviationOrder { t1, t2, eim, .. } => {
                let (p1, p2) = (triad_pcm(t1)?, triad_pcm(t2)?);
                let dev = |t: &[f64; 3]| {
                    let rho = t[0] * t[2] / t[1];
                    match eim {
                        EimMode::MaxRatio => rho.max(1.0 / rho),
                        EimMode::AbsoluteDifference => (t[0] * t[2] - t[1]).abs(),
                    }
                };
                dev(t1) <= dev(t2) && exceeds(index.eval(&p1)?, index.eval(&p2)?, tol)
            }
            Witness::QuasiConvexity { p, q, mid, .. } => {
                let f_p = index.eval(&triad_pcm(p)?)?;
                let f_q = index.eval(&triad_pcm(q)?)?;
                let f_m = index.eval(&triad_pcm(mid)?)?;
                exceeds(f_m, f_p.max(f_q), tol)
            }
            Witness::AlteredStillConsistentValue { triad, altered, .. } => {
                let base = triad_pcm(triad)?;
                let alt = triad_pcm(altered)?;
                base.is_consistent(tol) && index.eval(&alt)?.abs() <= tol
            }
            Witness::PositiveResponsiveness { a, b, .. } => {
                let f_a = index.eval(&triad_pcm(&[1.0, *a, 1.0])?)?;
                let f_b = index.eval(&triad_pcm(&[1.0, *b, 1.0])?)?;
                a <= b && exceeds(f_a, f_b, tol)
            }
            Witness::TriadValueMismatch { t1, t2, .. } => {
                let f1 = index.eval(&triad_pcm(t1)?)?;
                let f2 = index.eval(&triad_pcm(t2)?)?;
                !close(f1, f2, 1e-12)
            }
            Witness::TriadExceedsMatrix { matrix, triad_idx, .. } => {
                let a = matrix.to_pcm()?;
                let sub = a.submatrix(&triad_idx[..])?;
                exceeds(index.eval(&sub)?, index.eval(&a)?, tol)
            }
            Witness::NoReducingTriad { matrix, .. } => {
                let a = matrix.to_pcm()?;
                let fa = index.eval(&a)?;
                let mut closest = f64::INFINITY;
                for (idx, _) in a.triads()? {
                    let sub = a.submatrix(&[idx.0, idx.1, idx.2])?;
                    let d = (index.eval(&sub)? - fa).abs();
                    closest = closest.min(d);
                }
                closest > tol * fa.abs().max(1.0)
            }
            Witness::TriadWorsening { base, perturbed, triad, .. } => {
                let a = base.to_pcm()?;
                let b = perturbed.to_pcm()?;
                let local = |m: &crate::pcm::Pcm| {
                    let t = Triad::new(
                        m.get(triad[0], triad[1]),
                        m.get(triad[0], triad[2]),
                        m.get(triad[1], triad[2]),
                    )
                    .expect("positive entries");
                    triad_inconsistency(&t)
                };
                let (fa, fb) = (index.eval(&a)?, index.eval(&b)?);
                local(&b) > local(&a) + tol && fb < fa - tol * fa.abs().max(fb.abs()).max(1.0)
            }
            Witness::GeneratorProperty { .. } => return Ok(None),
        };
        Ok(Some(ok))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
