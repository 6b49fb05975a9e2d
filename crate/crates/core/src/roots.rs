//! Bracketing root finding for strictly monotone functions.
//!
//! The profile equation inverts a strictly decreasing map, so bracketing is
//! globally safe: grow the bracket geometrically, then alternate secant steps
//! (accepted only inside the bracket) with bisection.

use crate::error::{Error, Result};

const BRACKET_GROWTH: f64 = 4.0;
const MAX_BRACKET_STEPS: usize = 400;
const MAX_ITER: usize = 200;

/// Solve `f(v) = target` for strictly decreasing `f`, starting the bracket
/// search at `v0 > 0`. Terminates when the residual is below
/// `rtol * |target|` or the bracket collapses to rounding width.
pub fn solve_decreasing<F>(mut f: F, target: f64, v0: f64, rtol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(v0 > 0.0 && v0.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "bracket seed must be positive and finite, got {v0}"
        )));
    }
    if !target.is_finite() {
        return Err(Error::InvalidInput(format!("target must be finite, got {target}")));
    }

    // lo: f(lo) > target, hi: f(hi) < target.
    let mut lo = v0;
    let mut flo = f(lo)?;
    let mut steps = 0;
    while flo <= target {
        lo /= BRACKET_GROWTH;
        steps += 1;
        if lo < 1e-300 || steps > MAX_BRACKET_STEPS {
            return Err(Error::Domain(format!(
                "target {target:e} is at or above the supremum of the function"
            )));
        }
        flo = f(lo)?;
    }
    let mut hi = v0.max(lo * BRACKET_GROWTH);
    let mut fhi = f(hi)?;
    steps = 0;
    while fhi >= target {
        hi *= BRACKET_GROWTH;
        steps += 1;
        if hi > 1e300 || steps > MAX_BRACKET_STEPS {
            return Err(Error::Domain(format!(
                "target {target:e} is at or below the infimum of the function"
            )));
        }
        fhi = f(hi)?;
    }

    // Hybrid secant/bisection on g(v) = f(v) - target.
    let scale = target.abs().max(f64::MIN_POSITIVE);
    let (mut a, mut ga) = (lo, flo - target);
    let (mut b, mut gb) = (hi, fhi - target);
    let mut x = 0.5 * (a + b);
    for _ in 0..MAX_ITER {
        // Secant proposal from the current bracket endpoints.
        let mut cand = if (gb - ga).abs() > 0.0 {
            b - gb * (b - a) / (gb - ga)
        } else {
            0.5 * (a + b)
        };
        let margin = 0.01 * (b - a);
        if !(cand.is_finite() && cand > a + margin && cand < b - margin) {
            cand = 0.5 * (a + b);
        }
        x = cand;
        let gx = f(x)? - target;
        if gx.abs() <= rtol * scale {
            return Ok(x);
        }
        // f decreasing: g > 0 on the low side.
        if gx > 0.0 {
            a = x;
            ga = gx;
        } else {
            b = x;
            gb = gx;
        }
        if b - a <= 4.0 * f64::EPSILON * x.abs() {
            return Ok(x);
        }
    }
    Err(Error::Numeric(format!(
        "root iteration failed to reach tolerance (bracket [{a:e}, {b:e}])"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_power() {
        // f(v) = 2/v, target 0.5 => v = 4.
        let v = solve_decreasing(|v| Ok(2.0 / v), 0.5, 1.0, 1e-12).unwrap();
        assert!((v - 4.0).abs() < 1e-10);
    }

    #[test]
    fn steep_power() {
        // f(v) = v^{-8}, target 1e-16 => v = 100.
        let v = solve_decreasing(|v: f64| Ok(v.powi(-8)), 1e-16, 1.0, 1e-12).unwrap();
        assert!((v - 100.0).abs() < 1e-8 * 100.0);
    }

    #[test]
    fn far_bracket() {
        let v = solve_decreasing(|v| Ok(2.0 / v), 1e-110, 1.0, 1e-10).unwrap();
        assert!((v - 2e110).abs() < 1e-6 * 2e110);
    }

    #[test]
    fn unreachable_target_errors() {
        // f(v) = exp(-v) has supremum 1 on v > 0 reachable only at v -> 0,
        // and infimum 0: a target >= 1 cannot be bracketed.
        let r = solve_decreasing(|v: f64| Ok((-v).exp()), 2.0, 1.0, 1e-10);
        assert!(r.is_err());
    }
}
