//! Reaction-term library.
//!
//! Built-in superlinear families, their primitives `F(u) = int_0^u f`, the
//! Keller-Osserman classifier (`int^inf du/sqrt(F) < inf` decides existence
//! of boundary blow-up solutions), the sublinear-dominance check
//! `u -> f(u)/u^p` increasing, the tail integral
//! `phi(v) = int_v^inf ds/sqrt(F(s))`, and the density-dependent population
//! model substitution `(p, q) = (1/m, 2/m)`.

use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::extrapolate::geometric_points;
use crate::quad::{integrate, QuadOpts};
use crate::ScalarFn;

/// Number of dyadic panels `[2^n, 2^{n+1}]` probed by the classifier.
/// Ten panels keep slowly-decaying admissible tails (iterated logarithms)
/// clear of the geometric-ratio threshold.
const KO_PANELS: usize = 10;
/// Panel-ratio bound: `holds` needs every ratio over the last five panels
/// below this.
const KO_HOLD_RATIO: f64 = 0.9;
/// `fails` needs every one of the last five panel sums above this fraction
/// of the first panel.
const KO_FAIL_FRACTION: f64 = 0.5;

/// Built-in reaction families.
#[derive(Clone)]
pub enum NonlinearityKind {
    /// `f(u) = u^q`.
    Power { q: f64 },
    /// `f(u) = e^u`, the classical blow-up nonlinearity. Note `f(0) = 1`:
    /// this family violates the strict `f(0) = 0` normalization and
    /// [`Nonlinearity::satisfies_h1`] reports that honestly.
    Exponential,
    /// `f(u) = u^q ln(1 + u)`.
    PowerLog { q: f64 },
    /// `f(u) = u ln^p(1 + u)`.
    LogPower { p: f64 },
    /// User-supplied term. The derivative must be analytic (it feeds Newton
    /// Jacobians); the primitive may be left to quadrature.
    Custom {
        f: ScalarFn,
        df: ScalarFn,
        big_f: Option<ScalarFn>,
    },
}

/// A reaction term `f` with primitive `F` and regular-variation parameter.
#[derive(Clone)]
pub struct Nonlinearity {
    pub kind: NonlinearityKind,
    /// `f` varies regularly with index `rho + 1`; `None` when the index is
    /// not positive (linear-range powers) or does not exist (exponential).
    pub rho: Option<f64>,
    /// Sorted `(u, F(u))` knots reused by quadrature-backed primitives.
    cache: Arc<Mutex<Vec<(f64, f64)>>>,
}

impl Nonlinearity {
    fn from_kind(kind: NonlinearityKind, rho: Option<f64>) -> Self {
        Nonlinearity {
            kind,
            rho,
            cache: Arc::new(Mutex::new(vec![(0.0, 0.0)])),
        }
    }

    pub fn power(q: f64) -> Result<Self> {
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::InvalidInput(format!("power exponent must be > 0, got {q}")));
        }
        let rho = (q > 1.0).then_some(q - 1.0);
        Ok(Self::from_kind(NonlinearityKind::Power { q }, rho))
    }

    pub fn exponential() -> Self {
        Self::from_kind(NonlinearityKind::Exponential, None)
    }

    pub fn power_log(q: f64) -> Result<Self> {
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::InvalidInput(format!("power exponent must be > 0, got {q}")));
        }
        let rho = (q > 1.0).then_some(q - 1.0);
        Ok(Self::from_kind(NonlinearityKind::PowerLog { q }, rho))
    }

    pub fn log_power(p: f64) -> Result<Self> {
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::InvalidInput(format!("log exponent must be > 0, got {p}")));
        }
        // u ln^p(1+u) has index 1, i.e. rho = 0: no admissible profile.
        Ok(Self::from_kind(NonlinearityKind::LogPower { p }, None))
    }

    pub fn custom(f: ScalarFn, df: ScalarFn, big_f: Option<ScalarFn>, rho: Option<f64>) -> Result<Self> {
        if let Some(r) = rho {
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::InvalidInput(format!("rho must be > 0 when given, got {r}")));
            }
        }
        let n = Self::from_kind(NonlinearityKind::Custom { f, df, big_f }, rho);
        // Positivity on (0, inf) sampled; finiteness at moderate arguments.
        for u in geometric_points(1e-6, 1e3, 32) {
            let v = n.eval(u);
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "custom nonlinearity must be positive on (0, inf); f({u:e}) = {v}"
                )));
            }
        }
        Ok(n)
    }

    pub fn eval(&self, u: f64) -> f64 {
        match &self.kind {
            NonlinearityKind::Power { q } => u.powf(*q),
            NonlinearityKind::Exponential => u.exp(),
            NonlinearityKind::PowerLog { q } => u.powf(*q) * u.ln_1p(),
            NonlinearityKind::LogPower { p } => u * u.ln_1p().powf(*p),
            NonlinearityKind::Custom { f, .. } => f(u),
        }
    }

    pub fn deriv(&self, u: f64) -> f64 {
        match &self.kind {
            NonlinearityKind::Power { q } => q * u.powf(q - 1.0),
            NonlinearityKind::Exponential => u.exp(),
            NonlinearityKind::PowerLog { q } => {
                q * u.powf(q - 1.0) * u.ln_1p() + u.powf(*q) / (1.0 + u)
            }
            NonlinearityKind::LogPower { p } => {
                u.ln_1p().powf(*p) + u * p * u.ln_1p().powf(p - 1.0) / (1.0 + u)
            }
            NonlinearityKind::Custom { df, .. } => df(u),
        }
    }

    /// `F(u) = int_0^u f(s) ds`, closed form where available, cached
    /// adaptive quadrature otherwise.
    pub fn primitive(&self, u: f64) -> Result<f64> {
        if !(u >= 0.0 && u.is_finite()) {
            return Err(Error::Domain(format!("primitive needs u >= 0 finite, got {u}")));
        }
        match &self.kind {
            NonlinearityKind::Power { q } => Ok(u.powf(q + 1.0) / (q + 1.0)),
            NonlinearityKind::Exponential => Ok(u.exp_m1()),
            NonlinearityKind::Custom { big_f: Some(bf), .. } => Ok(bf(u)),
            _ => self.primitive_cached(u),
        }
    }

    fn primitive_cached(&self, u: f64) -> Result<f64> {
        if u == 0.0 {
            return Ok(0.0);
        }
        let mut cache = self.cache.lock().expect("primitive cache poisoned");
        // Greatest cached knot at or below u.
        let idx = cache.partition_point(|&(k, _)| k <= u) - 1;
        let (u0, f0) = cache[idx];
        if u0 == u {
            return Ok(f0);
        }
        let inc = integrate(&|s| self.eval(s), u0, u, QuadOpts::default())?;
        let val = f0 + inc;
        if cache.len() < 4096 {
            cache.insert(idx + 1, (u, val));
        }
        Ok(val)
    }

    /// Strict positivity normalization: `f(0) = 0` and `f > 0` on `(0, inf)`
    /// (sampled). The exponential family reports `false` since `f(0) = 1`.
    pub fn satisfies_h1(&self) -> bool {
        if self.eval(0.0) != 0.0 {
            return false;
        }
        geometric_points(1e-8, 1e6, 64)
            .into_iter()
            .all(|u| self.eval(u) > 0.0)
    }

    /// Sampled monotonicity of `f` itself. Not required by the rate theory;
    /// callers may warn when this is false.
    pub fn is_nondecreasing_sampled(&self) -> bool {
        let pts = geometric_points(1e-6, 1e6, 128);
        pts.windows(2).all(|w| self.eval(w[1]) >= self.eval(w[0]))
    }

    /// Local log-derivative index `u f'(u)/f(u) - 1` used to extend tail
    /// integrals past the quadrature cutoff.
    fn local_rho(&self, u: f64) -> f64 {
        match self.rho {
            Some(r) => r,
            None => u * self.deriv(u) / self.eval(u) - 1.0,
        }
    }

    /// `ln(sqrt(F(u))/f(u))` stable for arguments far outside f64 range of
    /// `f` itself (power and exponential families have closed forms).
    pub(crate) fn log_sqrt_f_ratio(&self, u: f64) -> Result<f64> {
        match &self.kind {
            NonlinearityKind::Power { q } => {
                Ok(0.5 * (1.0 - q) * u.ln() - 0.5 * (q + 1.0).ln())
            }
            NonlinearityKind::Exponential => {
                // ln sqrt(e^u - 1) - u = -u/2 + ln(1 - e^{-u})/2
                Ok(-0.5 * u + 0.5 * (-(-u).exp()).ln_1p())
            }
            _ => {
                let f = self.eval(u);
                let big = self.primitive(u)?;
                if !(f.is_finite() && big.is_finite() && f > 0.0 && big > 0.0) {
                    return Err(Error::Numeric(format!(
                        "cannot form sqrt(F)/f at u = {u:e} (f = {f}, F = {big})"
                    )));
                }
                Ok(0.5 * big.ln() - f.ln())
            }
        }
    }
}

/// Verdict of the Keller-Osserman probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KoVerdict {
    Holds,
    Fails,
    Inconclusive,
}

/// Classification plus the panel sums it was based on.
#[derive(Debug, Clone, serde::Serialize)]
pub struct KoClassification {
    pub verdict: KoVerdict,
    /// `int_{2^n}^{2^{n+1}} du/sqrt(F(u))` for each probed panel.
    pub panel_sums: Vec<f64>,
}

/// Classify the convergence of `int^inf du/sqrt(F(u))` from dyadic panel
/// sums: geometric decay of the tail panels means `holds`, panels bounded
/// away from zero mean `fails`. Near-critical growth (regular-variation
/// index barely above 1) lands in `inconclusive`; this is a numeric probe,
/// not a proof.
pub fn keller_osserman(f: &Nonlinearity) -> Result<KoClassification> {
    let mut sums = Vec::with_capacity(KO_PANELS);
    for n in 0..KO_PANELS {
        let lo = 2f64.powi(n as i32);
        let hi = 2.0 * lo;
        let base = f.primitive(lo)?;
        if !(base > 0.0) {
            return Err(Error::InvalidInput(format!(
                "F({lo}) = {base}: primitive must be positive for u > 0"
            )));
        }
        let p = integrate(
            &|u| {
                let big = f.primitive(u).unwrap_or(f64::NAN);
                1.0 / big.sqrt()
            },
            lo,
            hi,
            QuadOpts::default(),
        )?;
        sums.push(p);
    }

    let tail = &sums[KO_PANELS - 5..];
    let prev = &sums[KO_PANELS - 6..KO_PANELS - 1];
    let ratios_decay = tail
        .iter()
        .zip(prev)
        .all(|(&cur, &before)| before == 0.0 || cur / before < KO_HOLD_RATIO);
    let bounded_away = tail.iter().all(|&p| p > KO_FAIL_FRACTION * sums[0]);

    let verdict = if ratios_decay {
        KoVerdict::Holds
    } else if bounded_away {
        KoVerdict::Fails
    } else {
        KoVerdict::Inconclusive
    };
    Ok(KoClassification {
        verdict,
        panel_sums: sums,
    })
}

/// Outcome of the sampled `f(u)/u^p` monotonicity check.
#[derive(Debug, Clone)]
pub struct H4Report {
    pub increasing: bool,
    /// First adjacent pair `(u_i, u_{i+1})` where the quotient decreased.
    pub violation: Option<(f64, f64)>,
}

/// Check that `u -> f(u)/u^p` is increasing on the given sample grid.
/// Sampling evidence only, not a proof.
pub fn check_h4(f: &Nonlinearity, p: f64, sample_grid: &[f64]) -> Result<H4Report> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("p must lie in (0, 1), got {p}")));
    }
    if sample_grid.len() < 2 || sample_grid.windows(2).any(|w| w[1] <= w[0] || w[0] <= 0.0) {
        return Err(Error::InvalidInput(
            "sample grid must be strictly increasing and positive".into(),
        ));
    }
    let quot = |u: f64| f.eval(u) / u.powf(p);
    for w in sample_grid.windows(2) {
        if quot(w[1]) <= quot(w[0]) {
            return Ok(H4Report {
                increasing: false,
                violation: Some((w[0], w[1])),
            });
        }
    }
    Ok(H4Report {
        increasing: true,
        violation: None,
    })
}

/// `phi(v) = int_v^inf ds/sqrt(F(s))`: closed form for powers, octave-panel
/// quadrature to `V* = max(1e6, 1e4 v)` plus a fitted power-law tail beyond.
/// Strictly decreasing with `phi -> 0` at infinity; only defined when the
/// Keller-Osserman integral converges.
pub fn phi_tail(f: &Nonlinearity, v: f64) -> Result<f64> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::Domain(format!("phi needs v > 0, got {v}")));
    }
    if let NonlinearityKind::Power { q } = f.kind {
        if q <= 1.0 {
            return Err(Error::InvalidInput(format!(
                "tail integral diverges for f(u) = u^{q}: Keller-Osserman fails"
            )));
        }
        return Ok(2.0 * (q + 1.0).sqrt() / ((q - 1.0) * v.powf((q - 1.0) / 2.0)));
    }
    phi_tail_quadrature(f, v)
}

/// Generic quadrature route of [`phi_tail`]; exposed separately so the
/// closed-form powers can be cross-checked against it.
pub fn phi_tail_quadrature(f: &Nonlinearity, v: f64) -> Result<f64> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::Domain(format!("phi needs v > 0, got {v}")));
    }
    let v_star = (1e6_f64).max(1e4 * v);
    let integrand = |s: f64| {
        let big = f.primitive(s).unwrap_or(f64::NAN);
        1.0 / big.sqrt()
    };
    let mut total = 0.0;
    let mut lo = v;
    while lo < v_star {
        let hi = (2.0 * lo).min(v_star);
        total += integrate(&integrand, lo, hi, QuadOpts::default())?;
        lo = hi;
    }

    // Fitted power-law continuation past V*: 1/sqrt(F) ~ (s/V*)^{-(rho+2)/2}.
    let rho = f.local_rho(v_star);
    let big_star = f.primitive(v_star)?;
    let tail = if big_star.is_infinite() {
        0.0
    } else {
        if rho <= 1e-3 {
            return Err(Error::InvalidInput(format!(
                "tail decays too slowly past {v_star:e} (local rho = {rho:.3e}): \
                 Keller-Osserman violation"
            )));
        }
        2.0 * v_star / (rho * big_star.sqrt())
    };
    Ok(total + tail)
}

/// Density-dependent population model substitution `u = w^m`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct GurtinMaccamy {
    pub p: f64,
    pub q: f64,
    /// The transformed reaction is superlinear only for `m < 2`.
    pub superlinear_admissible: bool,
}

/// Map the mobility exponent `m > 1` to `(p, q) = (1/m, 2/m)`.
pub fn gurtin_maccamy_transform(m: f64) -> Result<GurtinMaccamy> {
    if !(m > 1.0 && m.is_finite()) {
        return Err(Error::Domain(format!("mobility exponent must be > 1, got {m}")));
    }
    Ok(GurtinMaccamy {
        p: 1.0 / m,
        q: 2.0 / m,
        superlinear_admissible: m < 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::karamata::{rv_index_estimate, RVFunction, RvIndex};
    use proptest::prelude::*;
    use std::sync::Arc;

    #[test]
    fn primitive_closed_forms() {
        let cube = Nonlinearity::power(3.0).unwrap();
        assert!((cube.primitive(2.0).unwrap() - 4.0).abs() < 1e-14);
        let exp = Nonlinearity::exponential();
        assert_eq!(exp.primitive(0.0).unwrap(), 0.0);
        assert!((exp.primitive(1.0).unwrap() - (std::f64::consts::E - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn primitive_quadrature_matches_symbolic_antiderivative() {
        // F(1) for u^2 ln(1+u): (u^3/3) ln(1+u) - (1/3)(u^3/3 - u^2/2 + u - ln(1+u))
        // evaluated at 1 gives (2 ln 2)/3 - 5/18.
        let f = Nonlinearity::power_log(2.0).unwrap();
        let expect = 2.0 * std::f64::consts::LN_2 / 3.0 - 5.0 / 18.0;
        let got = f.primitive(1.0).unwrap();
        assert!((got - expect).abs() < 1e-10, "{got} vs {expect}");
    }

    #[test]
    fn primitive_cache_is_consistent_under_mixed_order() {
        let f = Nonlinearity::log_power(3.0).unwrap();
        let fresh = Nonlinearity::log_power(3.0).unwrap();
        let a = f.primitive(7.0).unwrap();
        let b = f.primitive(2.0).unwrap();
        let c = f.primitive(11.0).unwrap();
        assert!((a - fresh.primitive(7.0).unwrap()).abs() < 1e-11 * a);
        assert!((b - fresh.primitive(2.0).unwrap()).abs() < 1e-11 * b.max(1.0));
        assert!((c - fresh.primitive(11.0).unwrap()).abs() < 1e-11 * c);
    }

    #[test]
    fn primitive_differentiates_back_to_f() {
        for f in [
            Nonlinearity::power(2.0).unwrap(),
            Nonlinearity::power_log(2.0).unwrap(),
            Nonlinearity::log_power(3.0).unwrap(),
            Nonlinearity::exponential(),
        ] {
            for u in geometric_points(0.1, 100.0, 16) {
                let h = 1e-4 * u.max(1.0);
                let fd =
                    (f.primitive(u + h).unwrap() - f.primitive(u - h).unwrap()) / (2.0 * h);
                let exact = f.eval(u);
                assert!(
                    (fd - exact).abs() < 1e-6 * exact.abs().max(1e-12),
                    "u = {u}: {fd} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn h1_flags() {
        assert!(Nonlinearity::power(2.0).unwrap().satisfies_h1());
        assert!(Nonlinearity::power_log(1.5).unwrap().satisfies_h1());
        // f(0) = 1 for the exponential family.
        assert!(!Nonlinearity::exponential().satisfies_h1());
    }

    #[test]
    fn declared_rho_matches_probed_rv_index() {
        for (f, expect) in [
            (Nonlinearity::power(3.0).unwrap(), 3.0),
            (Nonlinearity::power_log(2.0).unwrap(), 2.0),
        ] {
            let rho = f.rho.unwrap();
            assert!((rho + 1.0 - expect).abs() < 1e-12);
            let probe =
                RVFunction::new(Arc::new(move |u: f64| f.eval(u)), 2.0, None).unwrap();
            match rv_index_estimate(&probe, 1e12, &[2.0, 4.0]).unwrap() {
                RvIndex::Regular { index, .. } => {
                    assert!((index - expect).abs() < 1e-2, "{index} vs {expect}")
                }
                other => panic!("expected regular, got {other:?}"),
            }
        }
    }

    #[test]
    fn keller_osserman_on_the_classical_families() {
        // Superlinear families: classification must come out `holds`.
        for f in [
            Nonlinearity::power(2.0).unwrap(),
            Nonlinearity::exponential(),
            Nonlinearity::power_log(1.5).unwrap(),
            Nonlinearity::log_power(3.0).unwrap(),
        ] {
            let ko = keller_osserman(&f).unwrap();
            assert_eq!(ko.verdict, KoVerdict::Holds, "panels {:?}", ko.panel_sums);
        }
        // Linear and sublinear growth: no blow-up solutions.
        for f in [
            Nonlinearity::power(1.0).unwrap(),
            Nonlinearity::power(0.5).unwrap(),
        ] {
            let ko = keller_osserman(&f).unwrap();
            assert_eq!(ko.verdict, KoVerdict::Fails, "panels {:?}", ko.panel_sums);
        }
    }

    #[test]
    fn h4_check() {
        let grid = geometric_points(1e-3, 1e3, 64);
        let f2 = Nonlinearity::power(2.0).unwrap();
        assert!(check_h4(&f2, 0.5, &grid).unwrap().increasing);
        let f03 = Nonlinearity::power(0.3).unwrap();
        let rep = check_h4(&f03, 0.5, &grid).unwrap();
        assert!(!rep.increasing);
        assert!(rep.violation.is_some());
        // f(u)/u^0.9 = u^0.1 ln^3(1+u): derivative is positive, so the
        // sampled check must agree with the analytic sign.
        let f_log = Nonlinearity::log_power(3.0).unwrap();
        assert!(check_h4(&f_log, 0.9, &grid).unwrap().increasing);
        for w in grid.windows(2) {
            let g = |u: f64| 0.1 * u.powf(-0.9) * u.ln_1p().powi(3)
                + u.powf(0.1) * 3.0 * u.ln_1p().powi(2) / (1.0 + u);
            assert!(g(w[0]) > 0.0);
        }
        assert!(check_h4(&f2, 1.2, &grid).is_err());
    }

    #[test]
    fn phi_tail_closed_form_spot_values() {
        let cube = Nonlinearity::power(3.0).unwrap();
        // F = u^4/4, 1/sqrt(F) = 2/u^2, phi(v) = 2/v.
        assert!((phi_tail(&cube, 1.0).unwrap() - 2.0).abs() < 1e-12);
        assert!((phi_tail(&cube, 100.0).unwrap() - 0.02).abs() < 1e-14);
        let sq = Nonlinearity::power(2.0).unwrap();
        assert!((phi_tail(&sq, 1.0).unwrap() - 2.0 * 3.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn phi_tail_quadrature_matches_closed_form() {
        for q in [2.0, 3.0, 4.0] {
            let f = Nonlinearity::power(q).unwrap();
            for v in [0.1, 1.0, 31.0, 1e3] {
                let closed = phi_tail(&f, v).unwrap();
                let quad = phi_tail_quadrature(&f, v).unwrap();
                assert!(
                    (quad - closed).abs() < 1e-8 * closed,
                    "q = {q}, v = {v}: {quad} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn phi_tail_diverges_for_linear_growth() {
        assert!(phi_tail(&Nonlinearity::power(1.0).unwrap(), 1.0).is_err());
        assert!(phi_tail_quadrature(&Nonlinearity::power(1.0).unwrap(), 1.0).is_err());
    }

    #[test]
    fn gurtin_maccamy_spot_values() {
        let g = gurtin_maccamy_transform(2.0).unwrap();
        assert_eq!((g.p, g.q), (0.5, 1.0));
        assert!(!g.superlinear_admissible);
        let g = gurtin_maccamy_transform(1.25).unwrap();
        assert!((g.p - 0.8).abs() < 1e-15 && (g.q - 1.6).abs() < 1e-15);
        assert!(g.superlinear_admissible);
        let g = gurtin_maccamy_transform(4.0 / 3.0).unwrap();
        assert!((g.p - 0.75).abs() < 1e-15 && (g.q - 1.5).abs() < 1e-15);
        assert!(g.superlinear_admissible);
        assert!(gurtin_maccamy_transform(1.0).is_err());
        assert!(gurtin_maccamy_transform(0.5).is_err());
    }

    proptest! {
        #[test]
        fn phi_is_strictly_decreasing(v1 in 0.1..500.0f64, v2 in 0.1..500.0f64) {
            prop_assume!((v1 - v2).abs() > 1e-6);
            let f = Nonlinearity::power_log(2.0).unwrap();
            let (lo, hi) = if v1 < v2 { (v1, v2) } else { (v2, v1) };
            prop_assert!(phi_tail(&f, lo).unwrap() > phi_tail(&f, hi).unwrap());
        }

        #[test]
        fn power_phi_decreasing(q in 1.5..4.0f64, v1 in 0.1..100.0f64, v2 in 0.1..100.0f64) {
            prop_assume!((v1 - v2).abs() > 1e-6);
            let f = Nonlinearity::power(q).unwrap();
            let (lo, hi) = if v1 < v2 { (v1, v2) } else { (v2, v1) };
            prop_assert!(phi_tail(&f, lo).unwrap() > phi_tail(&f, hi).unwrap());
        }
    }
}
