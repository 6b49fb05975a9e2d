//! Adaptive quadrature on finite intervals.
//!
//! Recursive Simpson subdivision with a mixed absolute/relative budget. The
//! relative part is measured against a coarse composite estimate of the whole
//! integral, so integrals of tiny magnitude (e.g. primitives of boundary
//! weights that are flat to all orders at 0) are still resolved to relative
//! accuracy. Integrands must be finite on the closed interval; integrable
//! endpoint behavior is handled by subdivision toward the endpoint.

use crate::error::{Error, Result};

/// Tolerances and depth cap for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct QuadOpts {
    /// Relative tolerance against the whole-integral estimate.
    pub rel_tol: f64,
    /// Absolute floor below which refinement stops.
    pub abs_tol: f64,
    /// Maximum bisection depth.
    pub max_depth: usize,
}

impl Default for QuadOpts {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-300,
            max_depth: 60,
        }
    }
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

struct AdaptState<'f> {
    f: &'f dyn Fn(f64) -> f64,
    max_depth: usize,
    /// Worst subinterval that exhausted the depth budget.
    worst: Option<(f64, f64, f64)>,
}

impl<'f> AdaptState<'f> {
    fn eval(&self, x: f64) -> Result<f64> {
        let y = (self.f)(x);
        if y.is_nan() || y.is_infinite() {
            return Err(Error::Quadrature {
                lo: x,
                hi: x,
                reason: format!("integrand returned {y} at x = {x:e}"),
            });
        }
        Ok(y)
    }

    fn recurse(
        &mut self,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        eps: f64,
        depth: usize,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(lm)?;
        let frm = self.eval(rm)?;
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        let split_possible = depth < self.max_depth && m > a && m < b;
        if delta.abs() <= 15.0 * eps || !split_possible {
            if delta.abs() > 15.0 * eps {
                let record = match self.worst {
                    Some((_, _, w)) => delta.abs() > w,
                    None => true,
                };
                if record {
                    self.worst = Some((a, b, delta.abs()));
                }
            }
            // Richardson tail correction.
            return Ok(left + right + delta / 15.0);
        }
        let l = self.recurse(a, m, fa, flm, fm, left, 0.5 * eps, depth + 1)?;
        let r = self.recurse(m, b, fm, frm, fb, right, 0.5 * eps, depth + 1)?;
        Ok(l + r)
    }
}

/// Adaptive Simpson integration of `f` over `[lo, hi]`.
pub fn integrate(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, opts: QuadOpts) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "integration bounds must be finite, got [{lo}, {hi}]"
        )));
    }
    if lo == hi {
        return Ok(0.0);
    }
    if lo > hi {
        return Err(Error::InvalidInput(format!(
            "integration bounds out of order: [{lo}, {hi}]"
        )));
    }

    let mut state = AdaptState {
        f,
        max_depth: opts.max_depth,
        worst: None,
    };

    // Coarse composite pass to set the relative scale.
    let panels = 64;
    let h = (hi - lo) / panels as f64;
    let mut coarse = 0.0;
    for i in 0..panels {
        let a = lo + i as f64 * h;
        let b = a + h;
        coarse += simpson(state.eval(a)?, state.eval(0.5 * (a + b))?, state.eval(b)?, h);
    }
    let eps = opts.abs_tol.max(opts.rel_tol * coarse.abs());

    let fa = state.eval(lo)?;
    let fb = state.eval(hi)?;
    let fm = state.eval(0.5 * (lo + hi))?;
    let whole = simpson(fa, fm, fb, hi - lo);
    let value = state.recurse(lo, hi, fa, fm, fb, whole, eps, 0)?;

    if let Some((a, b, excess)) = state.worst {
        if excess > 1e3 * 15.0 * eps {
            return Err(Error::Quadrature {
                lo: a,
                hi: b,
                reason: format!("depth budget exhausted with local error {excess:e}"),
            });
        }
    }
    Ok(value)
}

/// Non-adaptive composite Simpson with `panels` panels. Used as a coarse
/// scale estimate here and as an independent cross-check in tests.
pub fn composite_simpson(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, panels: usize) -> f64 {
    assert!(panels >= 1 && hi >= lo);
    let h = (hi - lo) / panels as f64;
    let mut sum = 0.0;
    for i in 0..panels {
        let a = lo + i as f64 * h;
        sum += simpson(f(a), f(a + 0.5 * h), f(a + h), h);
    }
    sum
}
