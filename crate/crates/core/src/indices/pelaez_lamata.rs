//! The determinant-based index of Pelaez and Lamata: the average 3x3
//! subdeterminant over all triads.

use crate::pcm::Pcm;

/// `CI* = mean over i<j<k of (eta + 1/eta - 2)` with
/// `eta = a_ik / (a_ij * a_jk)`, which equals the determinant of the 3x3
/// submatrix on {i,j,k}. Returns 0 for n = 2.
pub fn ci_star(a: &Pcm) -> f64 {
    let n = a.order();
    if n < 3 {
        return 0.0;
    }
    let triads = a.triads().expect("order checked");
    let sum: f64 = triads
        .iter()
        .map(|(_, t)| {
            let eta = t.t13 / (t.t12 * t.t23);
            eta + 1.0 / eta - 2.0
        })
        .sum();
    sum / triads.len() as f64
}
