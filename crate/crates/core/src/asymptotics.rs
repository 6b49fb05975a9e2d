//! Blow-up profile and rate constants.
//!
//! The profile `h` is the decreasing function defined implicitly by
//!
//! ```text
//! int_{h(t)}^inf ds/sqrt(F(s)) = sqrt(2) int_0^t k(s) ds,
//! ```
//!
//! so `u ~ xi_0 h(d)` near the boundary with
//! `xi_0 = ((2 + rho ell_1)/((2 + rho) c))^{1/rho}`. Differentiating the
//! defining relation gives the closed identities
//! `h' = -sqrt(2) k sqrt(F(h))` and `h'' = k^2 f(h) - sqrt(2) k' sqrt(F(h))`,
//! which this module uses for derivative values, the convexity window, and
//! the limit diagnostics of the rate proof.

use crate::error::{Error, Result};
use crate::extrapolate::{aitken_limit, geometric_points, STABILIZATION_RTOL};
use crate::karamata::KWeight;
use crate::nonlinearity::{keller_osserman, phi_tail, KoVerdict, Nonlinearity};
use crate::roots::solve_decreasing;

/// Profiles with `rho` below this are rejected: the `1/rho` exponent in
/// `xi_0` leaves the regime the rate theory covers.
pub const MIN_RHO: f64 = 1e-3;

/// Relative residual demanded of the profile inversion.
const H_RTOL: f64 = 1e-10;

/// `xi_0 = ((2 + rho ell_1)/((2 + rho) c))^{1/rho}`.
pub fn xi0(rho: f64, ell1: f64, c: f64) -> Result<f64> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::Domain(format!("xi_0 requires rho > 0, got {rho}")));
    }
    if !(0.0..=1.0).contains(&ell1) {
        return Err(Error::Domain(format!("ell_1 must lie in [0, 1], got {ell1}")));
    }
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::Domain(format!("potential amplitude must be positive, got {c}")));
    }
    Ok(((2.0 + rho * ell1) / ((2.0 + rho) * c)).powf(1.0 / rho))
}

/// Bracket constants `xi^- < xi_0 < xi^+` for a potential pinched between
/// `(c - eps) k^2` and `(c + eps) k^2`: the minus branch uses `c + 2 eps`,
/// the plus branch `c - 2 eps`, and both collapse to `xi_0` as `eps -> 0`.
pub fn xi_pm(rho: f64, ell1: f64, c: f64, eps: f64) -> Result<(f64, f64)> {
    if !(eps > 0.0 && 2.0 * eps < c) {
        return Err(Error::Domain(format!(
            "bracket requires 0 < 2 eps < c, got eps = {eps}, c = {c}"
        )));
    }
    let minus = xi0(rho, ell1, c + 2.0 * eps)?;
    let plus = xi0(rho, ell1, c - 2.0 * eps)?;
    Ok((minus, plus))
}

/// Extrapolated limit diagnostics from the rate proof.
#[derive(Debug, Clone)]
pub struct HLimitCheck {
    /// Extrapolated value of `h''(t) / (k^2(t) f(h(t) xi))`.
    pub estimate: f64,
    /// Theoretical target `(2 + rho ell_1)/((2 + rho) xi^{1 + rho})`.
    pub target: f64,
    /// Extrapolated `h(t)/h''(t)` (must tend to 0).
    pub h_over_hpp: f64,
    /// Extrapolated `h'(t)/h''(t)` (must tend to 0).
    pub hp_over_hpp: f64,
    pub stabilized: bool,
}

/// The blow-up profile of a reaction/weight/amplitude triple.
#[derive(Clone)]
pub struct BlowupProfile {
    pub f: Nonlinearity,
    pub k: KWeight,
    /// Potential amplitude: `b ~ c k^2(d)` at the boundary.
    pub c: f64,
    pub rho: f64,
    pub ell1: f64,
    pub xi0: f64,
    /// Some `delta > 0` with `h'' > 0 on `(0, delta)`.
    pub convexity_delta: f64,
    /// Finite supremum of `phi` at `0+` when the tail integral converges at
    /// zero (exponential-type reactions); `None` means unbounded.
    phi_sup: Option<f64>,
}

impl BlowupProfile {
    pub fn new(f: Nonlinearity, k: KWeight, c: f64) -> Result<Self> {
        let rho = f.rho.ok_or_else(|| {
            Error::Domain("profile requires a regularly varying reaction (rho > 0)".into())
        })?;
        if rho < MIN_RHO {
            return Err(Error::Domain(format!(
                "rho = {rho} below the supported range (>= {MIN_RHO})"
            )));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Domain(format!("potential amplitude must be positive, got {c}")));
        }
        let ko = keller_osserman(&f)?;
        if ko.verdict != KoVerdict::Holds {
            return Err(Error::InvalidInput(format!(
                "profile requires the Keller-Osserman condition; classifier said {:?}",
                ko.verdict
            )));
        }
        let ell1 = k.ell1;
        let xi0 = xi0(rho, ell1, c)?;
        // Probe the supremum of phi at 0+: finite means the profile domain
        // is truncated to sqrt(2) K(t) < phi(0+).
        let probe = phi_tail(&f, 1e-9)?;
        let phi_sup = (probe < 1e50).then_some(probe);
        let mut profile = BlowupProfile {
            f,
            k,
            c,
            rho,
            ell1,
            xi0,
            convexity_delta: f64::NAN,
            phi_sup,
        };
        profile.convexity_delta = convexity_window(&profile)?;
        Ok(profile)
    }

    /// Largest admissible `t`: stays inside the weight domain and, when
    /// `phi(0+)` is finite, inside `sqrt(2) K(t) < phi(0+)`.
    pub fn domain_t_max(&self) -> f64 {
        let nu_edge = self.k.nu * (1.0 - 1e-9);
        match self.phi_sup {
            None => nu_edge,
            Some(sup) => {
                let target = sup * (1.0 - 1e-9) / std::f64::consts::SQRT_2;
                if self.k.primitive(nu_edge).map(|v| v < target).unwrap_or(false) {
                    return nu_edge;
                }
                // K is strictly increasing: bisect K(t) = target.
                let (mut lo, mut hi) = (nu_edge * 1e-12, nu_edge);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    match self.k.primitive(mid) {
                        Ok(v) if v < target => lo = mid,
                        _ => hi = mid,
                    }
                }
                lo
            }
        }
    }

    /// Solve the defining relation for `h(t)`; the root is bracketed
    /// geometrically and polished to relative residual below `1e-10`.
    pub fn compute_h(&self, t: f64) -> Result<f64> {
        if !(t > 0.0 && t < self.k.nu) {
            return Err(Error::Domain(format!(
                "t = {t} outside the profile domain (0, {})",
                self.k.nu
            )));
        }
        let target = std::f64::consts::SQRT_2 * self.k.primitive(t)?;
        if let Some(sup) = self.phi_sup {
            if target >= sup {
                return Err(Error::Domain(format!(
                    "t = {t} too large: sqrt(2) K(t) = {target:e} reaches phi(0+) = {sup:e}"
                )));
            }
        }
        solve_decreasing(|v| phi_tail(&self.f, v), target, 1.0, H_RTOL)
    }

    /// `(h'(t), h''(t))` from the closed identities. `h' < 0` always.
    pub fn h_derivatives(&self, t: f64) -> Result<(f64, f64)> {
        let h = self.compute_h(t)?;
        let kt = self.k.eval(t);
        let dkt = self.k.deriv(t);
        let sqrt_f = self.f.primitive(h)?.sqrt();
        let hp = -std::f64::consts::SQRT_2 * kt * sqrt_f;
        let hpp = kt * kt * self.f.eval(h) - std::f64::consts::SQRT_2 * dkt * sqrt_f;
        if !hp.is_finite() || !hpp.is_finite() {
            return Err(Error::Numeric(format!(
                "profile derivatives left f64 range at t = {t:e} (h = {h:e})"
            )));
        }
        Ok((hp, hpp))
    }

    /// Sign of `h''(t)`, stable far outside the range where the identity can
    /// be evaluated directly: `h'' > 0` iff
    /// `ln(sqrt(2)) + ln k' - 2 ln k + ln(sqrt(F(h))/f(h)) < 0`.
    fn h_second_positive(&self, t: f64) -> Result<bool> {
        if let Ok((_, hpp)) = self.h_derivatives(t) {
            return Ok(hpp > 0.0);
        }
        let h = self.compute_h(t)?;
        let ln_dk = match self.k.ln_deriv(t) {
            // k' = 0 reduces the identity to k^2 f(h) > 0.
            None => return Ok(true),
            Some(v) => v,
        };
        let lhs = 0.5 * std::f64::consts::LN_2 + ln_dk - 2.0 * self.k.ln_eval(t)
            + self.f.log_sqrt_f_ratio(h)?;
        Ok(lhs < 0.0)
    }

    /// Evaluate `h''/(k^2 f(h xi))` along a decreasing sequence, extrapolate,
    /// and also extrapolate `h/h''` and `h'/h''` (both must tend to 0).
    pub fn verify_h_limit(&self, xi: f64, t_sequence: &[f64]) -> Result<HLimitCheck> {
        if !(xi > 0.0 && xi.is_finite()) {
            return Err(Error::Domain(format!("xi must be positive, got {xi}")));
        }
        if t_sequence.len() < 4 || t_sequence.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::InvalidInput(
                "t_sequence must be strictly decreasing with at least 4 entries".into(),
            ));
        }
        let mut ratio_seq = Vec::new();
        let mut h_ratio_seq = Vec::new();
        let mut hp_ratio_seq = Vec::new();
        for &t in t_sequence {
            let h = self.compute_h(t)?;
            let (hp, hpp) = self.h_derivatives(t)?;
            let kt = self.k.eval(t);
            let denom = kt * kt * self.f.eval(h * xi);
            if !(denom.is_finite() && denom > 0.0) {
                break;
            }
            ratio_seq.push(hpp / denom);
            h_ratio_seq.push(h / hpp);
            hp_ratio_seq.push(hp / hpp);
        }
        if ratio_seq.len() < 4 {
            return Err(Error::NonConvergence(
                "too few evaluable points in the t sequence".into(),
            ));
        }
        let est = aitken_limit(&ratio_seq, STABILIZATION_RTOL);
        if !est.stabilized && est.spread > 1e-2 {
            return Err(Error::NonConvergence(format!(
                "h'' ratio failed to stabilize (spread {:.3e})",
                est.spread
            )));
        }
        let target = (2.0 + self.rho * self.ell1)
            / ((2.0 + self.rho) * xi.powf(1.0 + self.rho));
        Ok(HLimitCheck {
            estimate: est.value,
            target,
            h_over_hpp: aitken_limit(&h_ratio_seq, STABILIZATION_RTOL).value,
            hp_over_hpp: aitken_limit(&hp_ratio_seq, STABILIZATION_RTOL).value,
            stabilized: est.stabilized,
        })
    }

    /// Tabulate `(t, h(t))` on a decade-anchored geometric grid with 64
    /// points per decade, clipped to the profile domain.
    pub fn tabulate(&self, t_min: f64, t_max: f64) -> Result<Vec<(f64, f64)>> {
        if !(t_min > 0.0 && t_max > t_min) {
            return Err(Error::InvalidInput(format!(
                "need 0 < t_min < t_max, got [{t_min}, {t_max}]"
            )));
        }
        let hi = t_max.min(self.domain_t_max());
        let i_lo = (64.0 * t_min.log10()).ceil() as i64;
        let i_hi = (64.0 * hi.log10()).floor() as i64;
        let mut rows = Vec::new();
        for i in i_lo..=i_hi {
            let t = 10f64.powf(i as f64 / 64.0);
            if t <= 0.0 || t > hi {
                continue;
            }
            rows.push((t, self.compute_h(t)?));
        }
        if rows.is_empty() {
            return Err(Error::InvalidInput(
                "tabulation range contains no grid points inside the domain".into(),
            ));
        }
        Ok(rows)
    }
}

/// Largest dyadic `delta <= min(nu/2, t_max)` such that `h'' > 0` on a
/// geometric test grid spanning six octaves below `delta`.
pub fn convexity_window(profile: &BlowupProfile) -> Result<f64> {
    let cap = (profile.k.nu / 2.0).min(profile.domain_t_max() * 0.999);
    for level in 0..=40 {
        let delta = cap * 0.5f64.powi(level);
        let grid = geometric_points(delta / 64.0, delta, 48);
        let all_convex = grid
            .iter()
            .all(|&t| profile.h_second_positive(t).unwrap_or(false));
        if all_convex {
            return Ok(delta);
        }
    }
    Err(Error::Numeric(
        "h'' not positive on any dyadic window: profile is not admissible".into(),
    ))
}
