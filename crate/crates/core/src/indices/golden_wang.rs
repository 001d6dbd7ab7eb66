//! The Golden-Wang index: total variation between the column-normalized
//! matrix and the geometric-mean priority vector.

use crate::pcm::{geometric_mean_weights, Pcm};

/// `GW = (1/n) * sum_ij |abar_ij - w_i|` where `abar` is A with each column
/// normalized to sum 1. Both `abar` columns and `w` are probability vectors,
/// so GW is bounded by 2.
pub fn gw(a: &Pcm) -> f64 {
    let n = a.order();
    let w = geometric_mean_weights(a);
    let ws = w.as_slice();
    let mut total = 0.0;
    for j in 0..n {
        let s: f64 = (0..n).map(|i| a.get(i, j)).sum();
        for i in 0..n {
            total += (a.get(i, j) / s - ws[i]).abs();
        }
    }
    total / n as f64
}
