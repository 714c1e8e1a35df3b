//! The constructive Carleman weight family
//!     h(t) = τt + 4δτ e^{-t/2},  h'(t) = τ - 2δτ e^{-t/2},  h''(t) = δτ e^{-t/2},
//! its tilde companion h̃ = h - t - ½ln(1+h''), and numerical certification of
//! the conditions the downstream estimates require:
//!   (i)  c_low τ ≤ h' ≤ c_high τ,
//!   (ii) dist(2h', ℤ) + h'' ≥ c_spectral,
//!   (iii) C|x|τ ≤ 1 + h''(-ln|x|) for |x| ≤ r*.
//! The admissible large parameters are τ ∈ ℕ + 5/4; τ integer with δ → 0 is
//! the counterexample family (the spectral margin collapses for large t).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightVariant {
    Base,
    Tilde,
}

/// A member of the weight family, evaluated in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarlemanWeight {
    pub tau: f64,
    pub delta: f64,
    pub variant: WeightVariant,
}

pub const TAU_MIN: f64 = 2.25;

/// Smallest member of ℕ + 5/4 that is ≥ x (and ≥ 2.25).
pub fn snap_to_admissible(x: f64) -> f64 {
    let k = ((x - 1.25).ceil()).max(1.0);
    1.25 + k
}

impl CarlemanWeight {
    pub fn new(tau: f64, delta: f64) -> Result<Self> {
        if !(tau >= TAU_MIN) {
            return Err(Error::Usage(format!("tau must be at least {TAU_MIN}, got {tau}")));
        }
        if !(delta >= 0.0 && delta <= 1.0 / 16.0) {
            return Err(Error::Usage(format!("delta must lie in [0, 1/16], got {delta}")));
        }
        Ok(Self { tau, delta, variant: WeightVariant::Base })
    }

    /// Relaxed constructor for counterexample studies (integer τ, tiny or
    /// large δ); skips the admissibility snap deliberately.
    pub fn unchecked(tau: f64, delta: f64, variant: WeightVariant) -> Self {
        Self { tau, delta, variant }
    }

    /// Regime boundary a = 2 ln τ: τ e^{-t/2} ≤ 1 exactly when t ≥ a.
    pub fn regime_boundary(&self) -> f64 {
        2.0 * self.tau.ln()
    }

    /// (h, h', h'') at t, closed form.
    pub fn eval(&self, t: f64) -> (f64, f64, f64) {
        let (tau, delta) = (self.tau, self.delta);
        let e = (-t / 2.0).exp();
        let v = delta * tau * e; // = base h''
        match self.variant {
            WeightVariant::Base => (tau * t + 4.0 * v, tau - 2.0 * v, v),
            WeightVariant::Tilde => {
                let h = tau * t + 4.0 * v - t - 0.5 * (1.0 + v).ln();
                let hp = tau - 2.0 * v - 1.0 + 0.25 * v / (1.0 + v);
                let hpp = v - 0.125 * v / (1.0 + v) + 0.125 * v * v / ((1.0 + v) * (1.0 + v));
                (h, hp, hpp)
            }
        }
    }

    pub fn h(&self, t: f64) -> f64 {
        self.eval(t).0
    }

    pub fn h_prime(&self, t: f64) -> f64 {
        self.eval(t).1
    }

    pub fn h_second(&self, t: f64) -> f64 {
        self.eval(t).2
    }

    /// The companion weight h̃ = h - t - ½ ln(1 + h'').
    pub fn tilde(&self) -> Result<CarlemanWeight> {
        match self.variant {
            WeightVariant::Base => {
                Ok(CarlemanWeight { variant: WeightVariant::Tilde, ..*self })
            }
            WeightVariant::Tilde => {
                Err(Error::Usage("tilde weight is only derived from the base variant".into()))
            }
        }
    }
}

/// Outcome of one scanned condition.
#[derive(Debug, Clone)]
pub struct WeightReport {
    pub condition: &'static str,
    pub t_range: (f64, f64),
    /// Minimum of the scanned quantity over the range.
    pub min_margin: f64,
    pub argmin_t: f64,
    /// Margin required for a pass.
    pub threshold: f64,
    pub pass: bool,
}

fn dist_to_integers(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// Number of interior scan points (the regime boundary t = a is always added).
const SCAN_POINTS: usize = 4096;

/// Scan (weight): h'/τ within [c_low, c_high] and dist(2h', ℤ) + h'' ≥
/// c_spectral over t ∈ [0, T]. Requires T ≥ 2 ln τ + 4 so both regimes are
/// covered.
pub fn check_weight_conditions(
    w: &CarlemanWeight,
    t_max: f64,
    c_low: f64,
    c_high: f64,
    c_spectral: f64,
) -> Result<Vec<WeightReport>> {
    let needed = 2.0 * w.tau.ln() + 4.0;
    if t_max < needed {
        return Err(Error::Usage(format!(
            "t_max = {t_max} does not cover both weight regimes (need at least {needed:.3})"
        )));
    }
    let mut ts: Vec<f64> =
        (0..=SCAN_POINTS).map(|i| t_max * i as f64 / SCAN_POINTS as f64).collect();
    let a = w.regime_boundary();
    if a > 0.0 && a < t_max {
        ts.push(a);
    }

    let mut lower = (f64::INFINITY, 0.0);
    let mut upper = (f64::INFINITY, 0.0);
    let mut spectral = (f64::INFINITY, 0.0);
    for &t in &ts {
        let (_, hp, hpp) = w.eval(t);
        let lo = hp / w.tau;
        if lo < lower.0 {
            lower = (lo, t);
        }
        let up = (c_high * w.tau - hp) / w.tau;
        if up < upper.0 {
            upper = (up, t);
        }
        let sp = dist_to_integers(2.0 * hp) + hpp;
        if sp < spectral.0 {
            spectral = (sp, t);
        }
    }

    Ok(vec![
        WeightReport {
            condition: "h_prime_lower",
            t_range: (0.0, t_max),
            min_margin: lower.0,
            argmin_t: lower.1,
            threshold: c_low,
            pass: lower.0 >= c_low,
        },
        WeightReport {
            condition: "h_prime_upper",
            t_range: (0.0, t_max),
            min_margin: upper.0,
            argmin_t: upper.1,
            threshold: 0.0,
            pass: upper.0 >= 0.0,
        },
        WeightReport {
            condition: "spectral",
            t_range: (0.0, t_max),
            min_margin: spectral.0,
            argmin_t: spectral.1,
            threshold: c_spectral,
            pass: spectral.0 >= c_spectral,
        },
    ])
}

/// Largest r* in `r_grid` such that C|x|τ ≤ 1 + h''(-ln|x|) for every grid
/// point |x| ≤ r*. Returns 0 when the condition fails at the smallest radius.
pub fn check_decay_condition(w: &CarlemanWeight, c: f64, r_grid: &[f64]) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::Usage(format!("decay constant C must be positive, got {c}")));
    }
    let mut rs: Vec<f64> = r_grid.to_vec();
    rs.retain(|r| *r > 0.0 && *r <= 1.0);
    if rs.is_empty() {
        return Err(Error::Usage("r_grid must contain radii in (0, 1]".into()));
    }
    rs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut r_star = 0.0;
    for &r in &rs {
        let (_, _, hpp) = w.eval(-r.ln());
        if c * r * w.tau <= 1.0 + hpp {
            r_star = r;
        } else {
            break;
        }
    }
    Ok(r_star)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(tau: f64, delta: f64) -> CarlemanWeight {
        CarlemanWeight::new(tau, delta).unwrap()
    }

    #[test]
    fn closed_form_values_at_zero() {
        let w = base(101.25, 1.0 / 16.0);
        let (h, hp, hpp) = w.eval(0.0);
        assert_eq!(h, 25.3125);
        assert_eq!(hp, 88.59375);
        assert_eq!(hpp, 6.328125);
    }

    #[test]
    fn large_t_limits() {
        let w = base(33.25, 1.0 / 32.0);
        let (_, hp, hpp) = w.eval(200.0);
        assert!((hp - w.tau).abs() < 1e-12);
        assert!(hpp.abs() < 1e-12);
    }

    #[test]
    fn tilde_value_at_zero_matches_formula() {
        let w = base(101.25, 1.0 / 16.0).tilde().unwrap();
        let expect = 25.3125 - 0.0 - 0.5 * (1.0 + 6.328125f64).ln();
        assert!((w.h(0.0) - expect).abs() < 1e-12);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for variant in [WeightVariant::Base, WeightVariant::Tilde] {
            let w = CarlemanWeight::unchecked(101.25, 1.0 / 16.0, variant);
            let eps = 1e-6;
            let mut t = 0.0;
            while t <= 20.0 {
                let (_, hp, hpp) = w.eval(t);
                let hp_fd = (w.h(t + eps) - w.h(t - eps)) / (2.0 * eps);
                let hpp_fd = (w.h_prime(t + eps) - w.h_prime(t - eps)) / (2.0 * eps);
                assert!((hp - hp_fd).abs() / hp.abs().max(1.0) < 1e-8, "h' at t={t}");
                assert!((hpp - hpp_fd).abs() / hpp.abs().max(1.0) < 1e-8, "h'' at t={t}");
                t += 0.25;
            }
        }
    }

    #[test]
    fn base_is_convex_for_admissible_parameters() {
        for &tau in &[2.25, 16.25, 101.25] {
            for &delta in &[1e-6, 1.0 / 64.0, 1.0 / 16.0] {
                let w = base(tau, delta);
                let mut t = 0.0;
                while t <= 40.0 {
                    if delta > 0.0 {
                        assert!(w.h_second(t) > 0.0);
                    }
                    t += 0.37;
                }
            }
        }
    }

    #[test]
    fn regime_identity_holds_at_machine_precision() {
        for &tau in &[16.25f64, 32.25, 64.25, 101.25] {
            let a = 2.0 * tau.ln();
            assert!(tau * (-(a + 1e-12) / 2.0).exp() <= 1.0);
            assert!(tau * (-(a - 1e-9) / 2.0).exp() >= 1.0 - 1e-9);
        }
    }

    #[test]
    fn admissible_snap() {
        assert_eq!(snap_to_admissible(0.0), 2.25);
        assert_eq!(snap_to_admissible(2.25), 2.25);
        assert_eq!(snap_to_admissible(2.26), 3.25);
        assert_eq!(snap_to_admissible(10.0), 10.25);
    }
}
