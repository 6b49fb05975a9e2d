//! Regular-variation toolkit.
//!
//! A positive function `R` on `[A, inf)` is regularly varying with index `q`
//! when `R(xi u)/R(u) -> xi^q` for every `xi > 0`. This module estimates the
//! index numerically, evaluates the Karamata integral limit
//! `u^{j+1} R(u) / int_D^u x^j R(x) dx -> q + j + 1`, and implements the
//! class of boundary weights `k` on `(0, nu)` (positive, nondecreasing, C^1)
//! together with the limits
//! `ell_0 = lim_{t->0} K(t)/k(t) = 0` and `ell_1 = lim_{t->0} (K/k)'(t)`
//! with `K(t) = int_0^t k`, where `ell_1` always lands in `[0, 1]`.

use crate::error::{Error, Result};
use crate::extrapolate::{
    aitken_limit, geometric_points, geometric_sequence, looks_divergent, LimitEstimate,
    STABILIZATION_RTOL,
};
use crate::quad::{integrate, QuadOpts};
use crate::ScalarFn;

/// Spread threshold beyond which index estimates are declared non-regular.
pub const RV_SPREAD_THRESHOLD: f64 = 0.05;

/// Tolerance on the required `ell_0 = 0` and on the `[0, 1]` window for
/// `ell_1` before clamping.
pub const ELL_TOL: f64 = 1e-3;

/// Positive function on `[A, inf)` probed for regular variation.
#[derive(Clone)]
pub struct RVFunction {
    evaluator: ScalarFn,
    /// Lower edge of the domain of definition (> 0).
    pub lower_bound: f64,
    /// Index the caller believes the function has, if any.
    pub declared_index: Option<f64>,
}

impl RVFunction {
    pub fn new(evaluator: ScalarFn, lower_bound: f64, declared_index: Option<f64>) -> Result<Self> {
        if !(lower_bound > 0.0 && lower_bound.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "lower bound must be positive and finite, got {lower_bound}"
            )));
        }
        let probe = RVFunction {
            evaluator,
            lower_bound,
            declared_index,
        };
        // Evaluations must be positive and finite near the lower edge.
        for &u in &[lower_bound, 2.0 * lower_bound, 10.0 * lower_bound] {
            probe.eval_checked(u)?;
        }
        Ok(probe)
    }

    /// `C u^m`, the simplest regularly varying family.
    pub fn power(coeff: f64, index: f64, lower_bound: f64) -> Result<Self> {
        if !(coeff > 0.0) {
            return Err(Error::InvalidInput(format!("coefficient must be positive, got {coeff}")));
        }
        Self::new(
            std::sync::Arc::new(move |u: f64| coeff * u.powf(index)),
            lower_bound,
            Some(index),
        )
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.evaluator)(u)
    }

    fn eval_checked(&self, u: f64) -> Result<f64> {
        let v = self.eval(u);
        if v.is_nan() || v <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "evaluator must be positive and finite, got {v} at u = {u:e}"
            )));
        }
        Ok(v)
    }
}

/// Result of probing a function for regular variation.
#[derive(Debug, Clone, PartialEq)]
pub enum RvIndex {
    /// The per-`xi` estimates stabilized and agree.
    Regular {
        index: f64,
        /// Spread of the per-`xi` estimates around the mean.
        per_xi_spread: f64,
    },
    /// The estimates diverge with `u` or disagree across `xi`: the function
    /// does not vary regularly (as far as the probe can tell).
    NonRegular { reason: String },
}

/// Estimate the regular-variation index of `r` by evaluating
/// `log(R(xi u)/R(u)) / log(xi)` along `u = A, 2A, 4A, ... <= u_max` and
/// accelerating the limit.
///
/// Divergence of the per-`xi` sequences or a cross-`xi` spread above
/// [`RV_SPREAD_THRESHOLD`] yields [`RvIndex::NonRegular`]; that is a result,
/// not an error. Non-positive or NaN evaluations are an error.
pub fn rv_index_estimate(r: &RVFunction, u_max: f64, xi_set: &[f64]) -> Result<RvIndex> {
    if xi_set.is_empty() {
        return Err(Error::InvalidInput("xi_set must be nonempty".into()));
    }
    if xi_set.iter().any(|&x| !(x > 1.0) || !x.is_finite()) {
        return Err(Error::InvalidInput("every xi must be finite and > 1".into()));
    }
    if u_max < 10.0 * r.lower_bound {
        return Err(Error::InvalidInput(format!(
            "u_max must be at least 10 * lower_bound = {:e}",
            10.0 * r.lower_bound
        )));
    }

    let start = r.lower_bound.max(1.0).min(u_max / 8.0);
    let us = geometric_sequence(start, 2.0, u_max, 64);

    let mut estimates = Vec::with_capacity(xi_set.len());
    for &xi in xi_set {
        let log_xi = xi.ln();
        let mut seq = Vec::new();
        for &u in &us {
            let base = r.eval_checked(u)?;
            let scaled = r.eval(xi * u);
            if scaled.is_nan() || scaled < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "evaluator must be positive and finite, got {scaled} at u = {:e}",
                    xi * u
                )));
            }
            if scaled.is_infinite() {
                break; // overflow: usable prefix only
            }
            let g = (scaled / base).ln() / log_xi;
            if !g.is_finite() {
                break;
            }
            seq.push(g);
        }
        if seq.len() < 4 {
            return Ok(RvIndex::NonRegular {
                reason: format!("ratio sequence for xi = {xi} left f64 range after {} samples", seq.len()),
            });
        }
        if looks_divergent(&seq) {
            return Ok(RvIndex::NonRegular {
                reason: format!("index estimates diverge with u for xi = {xi}"),
            });
        }
        let est = aitken_limit(&seq, STABILIZATION_RTOL);
        if est.spread > RV_SPREAD_THRESHOLD {
            return Ok(RvIndex::NonRegular {
                reason: format!(
                    "index estimates for xi = {xi} failed to stabilize (spread {:.3e})",
                    est.spread
                ),
            });
        }
        estimates.push(est.value);
    }

    let mean = estimates.iter().sum::<f64>() / estimates.len() as f64;
    let spread = estimates
        .iter()
        .fold(0.0_f64, |m, &e| m.max((e - mean).abs()))
        * 2.0;
    if spread > RV_SPREAD_THRESHOLD {
        return Ok(RvIndex::NonRegular {
            reason: format!("per-xi estimates disagree (spread {spread:.3e})"),
        });
    }
    Ok(RvIndex::Regular {
        index: mean,
        per_xi_spread: spread,
    })
}

/// Karamata integral limit: `u^{j+1} R(u) / int_D^u x^j R(x) dx` as
/// `u -> u_max`, extrapolated. For `R` of index `q` and `j > -q - 1` the
/// theorem gives `q + j + 1`.
pub fn karamata_limit(r: &RVFunction, moment: f64, d: f64, u_max: f64) -> Result<f64> {
    if !(d >= r.lower_bound) {
        return Err(Error::InvalidInput(format!(
            "integration base D = {d} must be >= the lower bound {}",
            r.lower_bound
        )));
    }
    if u_max < 10.0 * d {
        return Err(Error::InvalidInput("u_max must be at least 10 * D".into()));
    }
    let integrand = |x: f64| r.eval(x) * x.powf(moment);
    let us = geometric_sequence(2.0 * d, 2.0, u_max, 64);
    let mut denom = 0.0;
    let mut prev = d;
    let mut seq = Vec::new();
    for &u in &us {
        denom += integrate(&integrand, prev, u, QuadOpts::default())?;
        prev = u;
        if !denom.is_finite() || denom <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "denominator integral is not positive and finite ({denom}) at u = {u:e}"
            )));
        }
        let ratio = u.powf(moment + 1.0) * r.eval_checked(u)? / denom;
        if !ratio.is_finite() {
            break;
        }
        seq.push(ratio);
    }
    if seq.len() < 4 {
        return Err(Error::NonConvergence(
            "too few finite samples of the Karamata ratio".into(),
        ));
    }
    let est = aitken_limit(&seq, STABILIZATION_RTOL);
    if est.spread > 1e-2 {
        return Err(Error::NonConvergence(format!(
            "Karamata ratio failed to stabilize (spread {:.3e}); is j > -q - 1?",
            est.spread
        )));
    }
    Ok(est.value)
}

/// Built-in boundary weight families.
#[derive(Clone)]
pub enum KWeightKind {
    /// `k(t) = t^gamma`, `gamma >= 0`. The constant weight is `gamma = 0`.
    Power { gamma: f64 },
    /// `k(t) = exp(-1/t)`: positive, increasing, flat to all orders at 0.
    ExpFlat,
    /// User-supplied weight. The derivative must be supplied analytically;
    /// numerical differentiation of user weights silently degrades `ell_1`.
    Custom { k: ScalarFn, dk: ScalarFn },
}

/// A boundary weight `k` on `(0, nu)`: positive, nondecreasing, C^1, with
/// `K(t)/k(t) -> 0` and `(K/k)'(t) -> ell_1 in [0, 1]` as `t -> 0`.
///
/// The constant weight (`gamma = 0`) is admitted as the `ell_1 = 1` limit
/// case of the class.
#[derive(Clone)]
pub struct KWeight {
    pub kind: KWeightKind,
    /// Domain radius: the weight lives on `(0, nu)`.
    pub nu: f64,
    /// `lim_{t->0} K(t)/k(t)`: always 0 for admissible weights.
    pub ell0: f64,
    /// `lim_{t->0} (K/k)'(t)`, in `[0, 1]`.
    pub ell1: f64,
}

impl KWeight {
    pub fn power(gamma: f64, nu: f64) -> Result<Self> {
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(Error::InvalidInput(format!("gamma must be >= 0, got {gamma}")));
        }
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(Error::InvalidInput(format!("nu must be positive, got {nu}")));
        }
        Ok(KWeight {
            kind: KWeightKind::Power { gamma },
            nu,
            ell0: 0.0,
            ell1: 1.0 / (gamma + 1.0),
        })
    }

    pub fn exp_flat(nu: f64) -> Result<Self> {
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(Error::InvalidInput(format!("nu must be positive, got {nu}")));
        }
        Ok(KWeight {
            kind: KWeightKind::ExpFlat,
            nu,
            ell0: 0.0,
            ell1: 0.0,
        })
    }

    /// Custom weight with analytic derivative. Positivity and monotonicity
    /// are checked by sampling; `ell_0`/`ell_1` are computed numerically and
    /// cross-checked against `declared_ell1` when given.
    pub fn custom(k: ScalarFn, dk: ScalarFn, nu: f64, declared_ell1: Option<f64>) -> Result<Self> {
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(Error::InvalidInput(format!("nu must be positive, got {nu}")));
        }
        let candidate = KWeight {
            kind: KWeightKind::Custom { k, dk },
            nu,
            ell0: 0.0,
            ell1: f64::NAN,
        };
        for t in geometric_points(nu * 1e-6, nu * (1.0 - 1e-9), 64) {
            let v = candidate.eval(t);
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "weight must be positive and finite on (0, nu); got {v} at t = {t:e}"
                )));
            }
            let dv = candidate.deriv(t);
            if !(dv >= 0.0) || !dv.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "weight must be nondecreasing on (0, nu); k'({t:e}) = {dv}"
                )));
            }
        }
        let (ell0, ell1) = ell_limits(&candidate)?;
        if let Some(declared) = declared_ell1 {
            if (declared - ell1).abs() > ELL_TOL {
                return Err(Error::Config(format!(
                    "declared ell_1 = {declared} but computed {ell1}"
                )));
            }
        }
        Ok(KWeight { ell0, ell1, ..candidate })
    }

    pub fn eval(&self, t: f64) -> f64 {
        match &self.kind {
            KWeightKind::Power { gamma } => {
                if *gamma == 0.0 {
                    1.0
                } else {
                    t.powf(*gamma)
                }
            }
            KWeightKind::ExpFlat => (-1.0 / t).exp(),
            KWeightKind::Custom { k, .. } => k(t),
        }
    }

    pub fn deriv(&self, t: f64) -> f64 {
        match &self.kind {
            KWeightKind::Power { gamma } => {
                if *gamma == 0.0 {
                    0.0
                } else {
                    gamma * t.powf(gamma - 1.0)
                }
            }
            KWeightKind::ExpFlat => (-1.0 / t).exp() / (t * t),
            KWeightKind::Custom { dk, .. } => dk(t),
        }
    }

    /// `K(t) = int_0^t k(s) ds`: closed form for the power family, adaptive
    /// quadrature otherwise. Strictly increasing in `t`.
    pub fn primitive(&self, t: f64) -> Result<f64> {
        if !(t > 0.0 && t < self.nu) {
            return Err(Error::Domain(format!(
                "t = {t} outside the weight domain (0, {})",
                self.nu
            )));
        }
        match &self.kind {
            KWeightKind::Power { gamma } => Ok(t.powf(gamma + 1.0) / (gamma + 1.0)),
            _ => integrate(&|s| self.eval(s), 0.0, t, QuadOpts::default()),
        }
    }

    /// `ln k(t)`, in closed form for the built-in families. Used by the
    /// profile convexity scan where direct values leave f64 range.
    pub(crate) fn ln_eval(&self, t: f64) -> f64 {
        match &self.kind {
            KWeightKind::Power { gamma } => gamma * t.ln(),
            KWeightKind::ExpFlat => -1.0 / t,
            KWeightKind::Custom { k, .. } => k(t).ln(),
        }
    }

    /// `ln k'(t)`; `None` when the derivative vanishes identically.
    pub(crate) fn ln_deriv(&self, t: f64) -> Option<f64> {
        match &self.kind {
            KWeightKind::Power { gamma } => {
                if *gamma == 0.0 {
                    None
                } else {
                    Some(gamma.ln() + (gamma - 1.0) * t.ln())
                }
            }
            KWeightKind::ExpFlat => Some(-1.0 / t - 2.0 * t.ln()),
            KWeightKind::Custom { dk, .. } => {
                let d = dk(t);
                if d == 0.0 {
                    None
                } else {
                    Some(d.ln())
                }
            }
        }
    }
}

/// Compute `(ell_0, ell_1)` for a weight by evaluating `K(t)/k(t)` and its
/// central-difference derivative (step `t/100`) along `t = nu/2, nu/4, ...`
/// and accelerating both limits.
///
/// Errors when `K` cannot be integrated, when the limits fail to stabilize,
/// or when they land outside the admissible window (`ell_0` near 0, `ell_1`
/// within [`ELL_TOL`] of `[0, 1]`; the returned `ell_1` is clamped).
pub fn ell_limits(k: &KWeight) -> Result<(f64, f64)> {
    let ratio = |t: f64| -> Result<f64> {
        let kt = k.eval(t);
        if !(kt > 0.0 && kt.is_finite()) {
            return Err(Error::InvalidInput(format!("weight not positive at t = {t:e}")));
        }
        Ok(k.primitive(t)? / kt)
    };

    let mut g_seq = Vec::new();
    let mut d_seq = Vec::new();
    let t0 = k.nu / 2.0 * (1.0 - 1e-9);
    for t in geometric_sequence(t0, 0.5, t0 * 2.0_f64.powi(-24), 25) {
        // Stop before the weight underflows (flat weights reach 1e-250 fast).
        if k.eval(t) < 1e-250 {
            break;
        }
        let h = t / 100.0;
        let g = ratio(t)?;
        let gp = (ratio(t + h)? - ratio(t - h)?) / (2.0 * h);
        if !g.is_finite() || !gp.is_finite() {
            break;
        }
        g_seq.push(g);
        d_seq.push(gp);
    }
    if g_seq.len() < 5 {
        return Err(Error::InvalidInput(
            "weight leaves f64 range too fast to take t -> 0 limits".into(),
        ));
    }

    let ell0 = aitken_limit(&g_seq, STABILIZATION_RTOL);
    let ell1 = aitken_limit(&d_seq, STABILIZATION_RTOL);
    let stable = |e: &LimitEstimate| e.stabilized || e.spread < ELL_TOL;
    if !stable(&ell0) || !stable(&ell1) {
        return Err(Error::NonConvergence(format!(
            "ell limits failed to stabilize (spreads {:.3e}, {:.3e})",
            ell0.spread, ell1.spread
        )));
    }
    if ell0.value.abs() > ELL_TOL {
        return Err(Error::InvalidInput(format!(
            "ell_0 = {:.3e} is not 0: weight is outside the admissible class",
            ell0.value
        )));
    }
    if ell1.value < -ELL_TOL || ell1.value > 1.0 + ELL_TOL {
        return Err(Error::InvalidInput(format!(
            "ell_1 = {} lies outside [0, 1]",
            ell1.value
        )));
    }
    Ok((ell0.value, ell1.value.clamp(0.0, 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn rv(f: impl Fn(f64) -> f64 + Send + Sync + 'static, a: f64) -> RVFunction {
        RVFunction::new(Arc::new(f), a, None).unwrap()
    }

    #[test]
    fn pure_power_index_is_exact() {
        let r = rv(|u| u.powf(2.5), 1.0);
        match rv_index_estimate(&r, 1e8, &[2.0, 4.0, 8.0]).unwrap() {
            RvIndex::Regular { index, .. } => assert!((index - 2.5).abs() < 1e-6, "{index}"),
            other => panic!("expected regular, got {other:?}"),
        }
    }

    #[test]
    fn slowly_varying_factor_converges_to_base_index() {
        // log(R(xi u)/R(u))/log(xi) -> 2 since ln(xi u)/ln(u) -> 1.
        let r = rv(|u| u * u * u.ln(), 10.0);
        match rv_index_estimate(&r, 1e12, &[2.0, 4.0, 8.0]).unwrap() {
            RvIndex::Regular { index, .. } => assert!((index - 2.0).abs() < 1e-3, "{index}"),
            other => panic!("expected regular, got {other:?}"),
        }
    }

    #[test]
    fn exponential_is_not_regularly_varying() {
        let r = rv(|u| u.exp(), 1.0);
        match rv_index_estimate(&r, 1e8, &[2.0]).unwrap() {
            RvIndex::NonRegular { .. } => {}
            other => panic!("expected non-regular, got {other:?}"),
        }
    }

    #[test]
    fn representation_theorem_form_recovers_index() {
        // C u^m exp(int_B^u y(t)/t dt) with y(u) = 1/ln(u) gives
        // C u^m ln(u)/ln(B); the probe must recover m within 1e-2.
        let (c, m, b) = (3.0, 1.7, std::f64::consts::E * std::f64::consts::E);
        let r = rv(move |u: f64| c * u.powf(m) * u.ln() / b.ln(), b);
        match rv_index_estimate(&r, 1e12, &[2.0, 4.0]).unwrap() {
            RvIndex::Regular { index, .. } => assert!((index - m).abs() < 1e-2, "{index}"),
            other => panic!("expected regular, got {other:?}"),
        }
    }

    #[test]
    fn nonpositive_evaluator_is_an_error() {
        let r = RVFunction::new(Arc::new(|u: f64| u - 5.0), 1.0, None);
        assert!(r.is_err());
    }

    #[test]
    fn karamata_limit_for_square() {
        // int_1^u x^2 dx = (u^3 - 1)/3, ratio -> 3.
        let r = rv(|u| u * u, 1.0);
        let l = karamata_limit(&r, 0.0, 1.0, 1e6).unwrap();
        assert!((l - 3.0).abs() < 1e-6, "{l}");
    }

    #[test]
    fn karamata_limit_power_with_moment() {
        let r = rv(|u| u.powf(1.5), 1.0);
        let l = karamata_limit(&r, 1.0, 1.0, 1e6).unwrap();
        assert!((l - 3.5).abs() < 1e-6, "{l}");
    }

    #[test]
    fn karamata_limit_slowly_varying() {
        // Denominator closed form on [1, u]: u^3 ln(u)/3 - (u^3 - 1)/9;
        // cross-check our incremental quadrature against it, then the limit.
        let r = rv(|u| u * u * u.ln(), 1.0);
        let u = 1e6_f64;
        let denom = integrate(&|x: f64| x * x * x.ln(), 1.0, u, QuadOpts::default()).unwrap();
        let closed = u.powi(3) * u.ln() / 3.0 - (u.powi(3) - 1.0) / 9.0;
        assert!((denom - closed).abs() < 1e-8 * closed, "{denom} vs {closed}");
        let l = karamata_limit(&r, 0.0, 1.0, 1e8).unwrap();
        assert!((l - 3.0).abs() < 1e-3, "{l}");
    }

    #[test]
    fn karamata_limit_is_shift_invariant_in_the_moment() {
        let r = rv(|u| u * u * u.ln(), 1.0);
        let l0 = karamata_limit(&r, 0.0, 1.0, 1e8).unwrap();
        let l1 = karamata_limit(&r, 1.0, 1.0, 1e8).unwrap();
        assert!((l1 - l0 - 1.0).abs() < 2e-3, "{l0} vs {l1}");
    }

    #[test]
    fn ell_limits_power_family() {
        for gamma in [0.0, 0.5, 1.0, 2.0, 5.0] {
            let k = KWeight::power(gamma, 1.0).unwrap();
            let (l0, l1) = ell_limits(&k).unwrap();
            assert!(l0.abs() < 1e-6, "gamma = {gamma}: ell0 = {l0}");
            let expect = 1.0 / (gamma + 1.0);
            assert!((l1 - expect).abs() < 1e-6, "gamma = {gamma}: ell1 = {l1}");
        }
    }

    #[test]
    fn ell_limits_constant_weight_is_the_limit_case() {
        let k = KWeight::power(0.0, 1.0).unwrap();
        let (l0, l1) = ell_limits(&k).unwrap();
        assert!(l0.abs() < 1e-9);
        assert!((l1 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ell_limits_flat_weight() {
        // K(t) ~ t^2 exp(-1/t), so K/k ~ t^2 and both limits vanish.
        let k = KWeight::exp_flat(0.5).unwrap();
        let (l0, l1) = ell_limits(&k).unwrap();
        assert!(l0.abs() < 1e-3, "ell0 = {l0}");
        assert!(l1.abs() < 1e-3, "ell1 = {l1}");
    }

    #[test]
    fn custom_weight_validates_and_computes_ell1() {
        // k(t) = t + t^2 behaves like t at 0, so ell1 = 1/2.
        let k = KWeight::custom(
            Arc::new(|t: f64| t + t * t),
            Arc::new(|t: f64| 1.0 + 2.0 * t),
            1.0,
            Some(0.5),
        )
        .unwrap();
        assert!((k.ell1 - 0.5).abs() < 1e-3);
        // Declaring the wrong ell1 is a configuration error.
        let bad = KWeight::custom(
            Arc::new(|t: f64| t + t * t),
            Arc::new(|t: f64| 1.0 + 2.0 * t),
            1.0,
            Some(0.9),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn decreasing_custom_weight_is_rejected() {
        let bad = KWeight::custom(
            Arc::new(|t: f64| 1.0 - 0.5 * t),
            Arc::new(|_| -0.5),
            1.0,
            None,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn primitive_spot_values() {
        let k2 = KWeight::power(2.0, 1.0).unwrap();
        assert!((k2.primitive(0.3).unwrap() - 0.009).abs() < 1e-15);
        let k0 = KWeight::power(0.0, 1.0).unwrap();
        assert!((k0.primitive(0.5).unwrap() - 0.5).abs() < 1e-15);
        assert!(k0.primitive(1.5).is_err());
        assert!(k0.primitive(0.0).is_err());
    }

    #[test]
    fn primitive_flat_weight_matches_independent_quadrature() {
        let k = KWeight::exp_flat(0.5).unwrap();
        let ours = k.primitive(0.2).unwrap();
        // Independent oracle: composite Simpson refined until stationary.
        let f = |s: f64| (-1.0 / s).exp();
        let mut panels = 1 << 12;
        let mut prev = crate::quad::composite_simpson(&f, 0.0, 0.2, panels);
        loop {
            panels *= 2;
            let next = crate::quad::composite_simpson(&f, 0.0, 0.2, panels);
            if (next - prev).abs() <= 1e-16 * next.abs() || panels > 1 << 22 {
                prev = next;
                break;
            }
            prev = next;
        }
        assert!((ours - prev).abs() < 1e-10 * prev, "{ours} vs {prev}");
    }

    proptest! {
        #[test]
        fn primitive_is_monotone(gamma in 0.0..4.0f64, t1 in 1e-4..0.98f64, t2 in 1e-4..0.98f64) {
            prop_assume!((t1 - t2).abs() > 1e-9);
            let k = KWeight::power(gamma, 1.0).unwrap();
            let (lo, hi) = if t1 < t2 { (t1, t2) } else { (t2, t1) };
            prop_assert!(k.primitive(lo).unwrap() < k.primitive(hi).unwrap());
        }

        #[test]
        fn flat_primitive_is_monotone(t1 in 0.02..0.45f64, t2 in 0.02..0.45f64) {
            prop_assume!((t1 - t2).abs() > 1e-6);
            let k = KWeight::exp_flat(0.5).unwrap();
            let (lo, hi) = if t1 < t2 { (t1, t2) } else { (t2, t1) };
            prop_assert!(k.primitive(lo).unwrap() < k.primitive(hi).unwrap());
        }
    }
}
