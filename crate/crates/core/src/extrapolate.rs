//! Limit extraction from sequences sampled along geometric grids.
//!
//! Every `t -> 0+` and `u -> infinity` limit in this crate is evaluated on a
//! geometric sequence (default ratio 2) and accelerated with iterated Aitken
//! delta-squared. A limit counts as stabilized when the last three values of
//! the best accelerated row agree to the requested relative tolerance.

/// Default relative tolerance for declaring a sequence stabilized.
pub const STABILIZATION_RTOL: f64 = 1e-6;

/// Outcome of accelerating a sequence.
#[derive(Debug, Clone, Copy)]
pub struct LimitEstimate {
    /// Best available estimate of the limit.
    pub value: f64,
    /// Relative spread of the trailing values of the selected Aitken row.
    pub spread: f64,
    /// Whether the spread met the stabilization tolerance.
    pub stabilized: bool,
}

fn tail_spread(row: &[f64]) -> f64 {
    let n = row.len();
    if n < 2 {
        return f64::INFINITY;
    }
    let tail = &row[n.saturating_sub(3)..];
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in tail {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let scale = tail.iter().fold(0.0_f64, |m, &v| m.max(v.abs())).max(1.0);
    (hi - lo) / scale
}

fn aitken_row(row: &[f64]) -> Vec<f64> {
    let mut next = Vec::with_capacity(row.len().saturating_sub(2));
    for w in row.windows(3) {
        let (a, b, c) = (w[0], w[1], w[2]);
        let den = c - 2.0 * b + a;
        let num = c - b;
        // Locally linear or fully converged: keep the newest value rather
        // than dividing by a vanishing second difference.
        let scale = a.abs().max(b.abs()).max(c.abs()).max(f64::MIN_POSITIVE);
        if den.abs() <= 1e-14 * scale {
            next.push(c);
        } else {
            next.push(c - num * num / den);
        }
    }
    next
}

/// Iterated Aitken delta-squared acceleration.
///
/// Returns the value from the acceleration depth with the smallest trailing
/// spread. Sequences shorter than 3 are passed through with `stabilized`
/// decided by the last difference.
pub fn aitken_limit(seq: &[f64], rtol: f64) -> LimitEstimate {
    assert!(!seq.is_empty(), "aitken_limit needs at least one sample");
    let mut row = seq.to_vec();
    let mut best_value = *row.last().unwrap();
    let mut best_spread = tail_spread(&row);
    while row.len() >= 3 {
        let next = aitken_row(&row);
        if next.iter().any(|v| !v.is_finite()) {
            break;
        }
        let spread = tail_spread(&next);
        if spread < best_spread {
            best_spread = spread;
            best_value = *next.last().unwrap();
        }
        row = next;
    }
    LimitEstimate {
        value: best_value,
        spread: best_spread,
        stabilized: best_spread < rtol,
    }
}

/// True when the sequence is marching away instead of settling: the last
/// few absolute increments grow and the final one is not negligible.
pub fn looks_divergent(seq: &[f64]) -> bool {
    if seq.len() < 4 {
        return false;
    }
    let n = seq.len();
    let d1 = (seq[n - 3] - seq[n - 4]).abs();
    let d2 = (seq[n - 2] - seq[n - 3]).abs();
    let d3 = (seq[n - 1] - seq[n - 2]).abs();
    let scale = seq[n - 1].abs().max(1.0);
    d3 > d2 && d2 > d1 && d3 > 1e-6 * scale
}

/// Geometric sequence `start, start*ratio, ...` capped at `limit` (inclusive
/// within floating slack) and at `max_len` entries.
pub fn geometric_sequence(start: f64, ratio: f64, limit: f64, max_len: usize) -> Vec<f64> {
    assert!(start > 0.0 && ratio > 0.0 && ratio != 1.0);
    let mut out = Vec::new();
    let mut v = start;
    let ascend = ratio > 1.0;
    while out.len() < max_len {
        if ascend && v > limit * (1.0 + 1e-12) {
            break;
        }
        if !ascend && v < limit * (1.0 - 1e-12) {
            break;
        }
        out.push(v);
        v *= ratio;
    }
    out
}

/// `n` geometrically spaced points spanning `[lo, hi]`, endpoints included.
pub fn geometric_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2);
    let step = (hi / lo).ln() / (n - 1) as f64;
    (0..n).map(|i| lo * (step * i as f64).exp()).collect()
}
