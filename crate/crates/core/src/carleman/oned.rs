//! One-dimensional estimate verifiers. Everything is evaluated in the
//! weighted variable w = e^h u (see the module docs): the caller's test
//! profile is the weighted profile, so
//!   e^{2h}|u|²            = w²,
//!   e^{2h}|(∂_t ∓ σ)u|²   = |w' - (h' ± σ)w|²,
//! and no exponential ever has to be formed.

use super::bump::TestFunction1D;
use super::quad::{simpson, simpson_sum};
use super::{EstimateKind, ModeIndex, RatioReport};
use crate::error::{Error, Result};
use crate::weights::CarlemanWeight;

/// Default 1-D quadrature resolution (Simpson subintervals).
pub const RESOLUTION_1D: usize = 1 << 16;

/// Weight used by the 1-D verifiers: the constructive family or the plain
/// linear weight h = τt.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFn {
    Carleman(CarlemanWeight),
    Linear { tau: f64 },
}

impl WeightFn {
    pub fn tau(&self) -> f64 {
        match self {
            WeightFn::Carleman(w) => w.tau,
            WeightFn::Linear { tau } => *tau,
        }
    }

    /// (h, h', h'') at t.
    pub fn eval(&self, t: f64) -> (f64, f64, f64) {
        match self {
            WeightFn::Carleman(w) => w.eval(t),
            WeightFn::Linear { tau } => (tau * t, *tau, 0.0),
        }
    }
}

/// Factor estimate: e^{2h}-weighted control of (|u'|² + (τ²+σ²)|u|²) by
/// |(∂_t - σ)u|², evaluated for u = e^{-h} v.
pub fn verify_factor_estimate(
    h: &WeightFn,
    sigma: f64,
    v: &TestFunction1D,
) -> Result<RatioReport> {
    let (t0, t1) = v.support();
    let tau = h.tau();
    let lhs = simpson(
        |t| {
            let (_, hp, _) = h.eval(t);
            let w = v.eval(t);
            let wp = v.deriv(t);
            let du = wp - hp * w; // e^h u'
            du * du + (tau * tau + sigma * sigma) * w * w
        },
        t0,
        t1,
        RESOLUTION_1D,
    );
    let rhs = simpson(
        |t| {
            let (_, hp, _) = h.eval(t);
            let g = v.deriv(t) - (hp + sigma) * v.eval(t); // e^h (∂_t - σ)u
            g * g
        },
        t0,
        t1,
        RESOLUTION_1D,
    );
    RatioReport::from_sides(EstimateKind::Factor, tau, sigma, lhs, rhs, RESOLUTION_1D)
}

/// Commutator estimate: e^{2h}-weighted control of (1+h'')|u|² by
/// |(∂_t + σ)u|², evaluated for u = e^{-h} v. The spectral condition on the
/// weight is what keeps h' - σ away from zero for spectrum-valued σ.
pub fn verify_commutator_estimate(
    w: &CarlemanWeight,
    sigma: f64,
    v: &TestFunction1D,
) -> Result<RatioReport> {
    let (t0, t1) = v.support();
    let lhs = simpson(
        |t| {
            let (_, _, hpp) = w.eval(t);
            let val = v.eval(t);
            (1.0 + hpp) * val * val
        },
        t0,
        t1,
        RESOLUTION_1D,
    );
    let rhs = simpson(
        |t| {
            let (_, hp, _) = w.eval(t);
            let g = v.deriv(t) - (hp - sigma) * v.eval(t); // e^h (∂_t + σ)u
            g * g
        },
        t0,
        t1,
        RESOLUTION_1D,
    );
    RatioReport::from_sides(EstimateKind::Commutator, w.tau, sigma, lhs, rhs, RESOLUTION_1D)
}

/// Conjugated mode operator: L_h v = v'' - 2h'v' + (h'² - h'' - σ²) v.
/// Solves L_h v = rhs with decay appropriate to the weighted problem and
/// returns (v, v') sampled on the uniform mesh.
fn solve_conjugated_mode(
    h: &WeightFn,
    sigma: f64,
    rhs: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    intervals: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let m = intervals;
    let dt = (b - a) / m as f64;
    let mut hp_min = f64::INFINITY;
    let mut hp_max = f64::NEG_INFINITY;
    for i in 0..=m {
        let (_, hp, _) = h.eval(a + i as f64 * dt);
        hp_min = hp_min.min(hp);
        hp_max = hp_max.max(hp);
    }
    if hp_min <= 0.0 {
        return Err(Error::Usage(format!(
            "h' reaches {hp_min:.3} on the solve interval; move the support right or shrink delta"
        )));
    }
    let margin = 0.05;

    if sigma <= hp_min - margin {
        // Weighted-decay branch: the solution vanishes identically to the
        // right of the forcing and decays leftward at rates h' ± σ, so a
        // leftward RK4 march from v(b) = v'(b) = 0 is stable and picks the
        // correct solution.
        let f = |t: f64, y: [f64; 2]| {
            let (_, hp, hpp) = h.eval(t);
            [y[1], 2.0 * hp * y[1] - (hp * hp - hpp - sigma * sigma) * y[0] + rhs(t)]
        };
        let mut v = vec![0.0; m + 1];
        let mut vp = vec![0.0; m + 1];
        let mut y = [0.0, 0.0];
        let hstep = -dt;
        for i in (0..m).rev() {
            let t = a + (i + 1) as f64 * dt;
            let k1 = f(t, y);
            let k2 = f(t + 0.5 * hstep, [y[0] + 0.5 * hstep * k1[0], y[1] + 0.5 * hstep * k1[1]]);
            let k3 = f(t + 0.5 * hstep, [y[0] + 0.5 * hstep * k2[0], y[1] + 0.5 * hstep * k2[1]]);
            let k4 = f(t + hstep, [y[0] + hstep * k3[0], y[1] + hstep * k3[1]]);
            for c in 0..2 {
                y[c] += hstep / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
            }
            v[i] = y[0];
            vp[i] = y[1];
        }
        if !v.iter().chain(vp.iter()).all(|x| x.is_finite()) {
            return Err(Error::Numerical("mode march diverged".into()));
        }
        Ok((v, vp))
    } else if sigma >= hp_max + margin {
        // Elliptic branch (σ > h'): the conjugated operator is dominated by
        // the negative zeroth-order term; the two-point Dirichlet problem is
        // diagonally dominant and its tails decay both ways.
        let n_in = m - 1;
        let mut sub = vec![0.0; n_in];
        let mut diag = vec![0.0; n_in];
        let mut sup = vec![0.0; n_in];
        let mut r = vec![0.0; n_in];
        for i in 0..n_in {
            let t = a + (i + 1) as f64 * dt;
            let (_, hp, hpp) = h.eval(t);
            sub[i] = 1.0 / (dt * dt) + hp / dt;
            diag[i] = -2.0 / (dt * dt) + (hp * hp - hpp - sigma * sigma);
            sup[i] = 1.0 / (dt * dt) - hp / dt;
            r[i] = rhs(t);
        }
        // Thomas sweep
        for i in 1..n_in {
            let w = sub[i] / diag[i - 1];
            diag[i] -= w * sup[i - 1];
            r[i] -= w * r[i - 1];
        }
        let mut v = vec![0.0; m + 1];
        v[n_in] = r[n_in - 1] / diag[n_in - 1];
        for i in (0..n_in - 1).rev() {
            v[i + 1] = (r[i] - sup[i] * v[i + 2]) / diag[i];
        }
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::Numerical("mode solve produced non-finite values".into()));
        }
        let mut vp = vec![0.0; m + 1];
        for i in 0..=m {
            vp[i] = if i == 0 {
                (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt)
            } else if i == m {
                (3.0 * v[m] - 4.0 * v[m - 1] + v[m - 2]) / (2.0 * dt)
            } else {
                (v[i + 1] - v[i - 1]) / (2.0 * dt)
            };
        }
        Ok((v, vp))
    } else {
        Err(Error::Numerical(format!(
            "sigma = {sigma} resonates with h' in [{hp_min:.3}, {hp_max:.3}] on the solve interval"
        )))
    }
}

/// Mode-ODE verifier: solves the conjugated mode equation for the profile
/// forced by g (interpreted as the weighted right-hand side e^{h-2t} g of the
/// plain mode ODE) and checks the composite estimate
///   ∫ e^{2h}(1+h'')(|u_t|² + (1+k²)|u|² + |h'|²|u|²) ≤ C ∫ e^{2h-4t}|g|².
pub fn verify_mode_ode(
    w: &CarlemanWeight,
    mode: ModeIndex,
    g: &TestFunction1D,
) -> Result<RatioReport> {
    let sigma = mode.sigma();
    let k = mode.k as f64;
    let (s0, s1) = g.support();
    let width = s1 - s0;
    let (a, b) = (s0 - 2.0 * width, s1 + 2.0 * width);
    let m = RESOLUTION_1D;
    let h = WeightFn::Carleman(*w);
    let (v, vp) = solve_conjugated_mode(&h, sigma, &|t| g.eval(t), a, b, m)?;

    let dt = (b - a) / m as f64;
    let lhs_samples: Vec<f64> = (0..=m)
        .map(|i| {
            let t = a + i as f64 * dt;
            let (_, hp, hpp) = w.eval(t);
            let du = vp[i] - hp * v[i];
            (1.0 + hpp) * (du * du + (1.0 + k * k + hp * hp) * v[i] * v[i])
        })
        .collect();
    let lhs = simpson_sum(&lhs_samples, dt);
    let rhs = simpson(|t| g.eval(t) * g.eval(t), a, b, m);
    RatioReport::from_sides(EstimateKind::ModeOde, w.tau, sigma, lhs, rhs, m)
}

/// Angular L² weight of cos(mθ) / sin(mθ) over the circle.
fn angular_weight(m: i64, is_sin: bool) -> f64 {
    use std::f64::consts::PI;
    if m == 0 {
        if is_sin {
            0.0
        } else {
            2.0 * PI
        }
    } else {
        PI
    }
}

/// Elliptic reduction verifier: per angular mode of f, solves
/// -Δw + Kτ²|x|⁻²w = ∇f (in the conjugated variable, with the linear weight
/// h = τt) and checks ∫ e^{2h}(|∇w|² + τ²|w|²/|x|²) ≤ C ∫ e^{2h}|f|².
/// `f_modes` lists cos-modes (k, F) of the weighted profile e^h f.
pub fn verify_weighted_reduction(
    k_reduction: f64,
    tau: f64,
    f_modes: &[(u32, TestFunction1D)],
) -> Result<RatioReport> {
    if !(k_reduction >= 4.0) {
        return Err(Error::Usage(format!(
            "reduction constant K must be at least 4, got {k_reduction}"
        )));
    }
    if f_modes.is_empty() {
        return Err(Error::Usage("need at least one angular mode".into()));
    }
    let m_res = RESOLUTION_1D;
    let h = WeightFn::Linear { tau };
    let (mut lo, mut hi, mut wmax) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
    for (_, f) in f_modes {
        let (s0, s1) = f.support();
        lo = lo.min(s0);
        hi = hi.max(s1);
        wmax = wmax.max(s1 - s0);
    }
    let (a, b) = (lo - 2.0 * wmax, hi + 2.0 * wmax);
    let dt = (b - a) / m_res as f64;

    let mut lhs = 0.0;
    let mut rhs = 0.0;
    for &(k, ref f) in f_modes {
        let ki = k as i64;
        rhs += angular_weight(ki, false)
            * simpson(|t| (-2.0 * t).exp() * f.eval(t) * f.eval(t), a, b, m_res);

        // Cartesian components of ∇f split the cos-k mode into modes k∓1:
        //   ∂₁f: cos-modes, ∂₂f: sin-modes, with radial data
        //   A∓(t) = -(e^t/2)((F' - τF) ∓ kF) after stripping e^{-h}.
        let a_minus = |t: f64| -0.5 * t.exp() * ((f.deriv(t) - tau * f.eval(t)) - k as f64 * f.eval(t));
        let a_plus = |t: f64| -0.5 * t.exp() * ((f.deriv(t) - tau * f.eval(t)) + k as f64 * f.eval(t));

        let mut pieces: Vec<(i64, bool, Box<dyn Fn(f64) -> f64>)> = Vec::new();
        if k == 0 {
            // ∂₁f = -e^t φ' cosθ, ∂₂f = -e^t φ' sinθ
            let d = |t: f64| -t.exp() * (f.deriv(t) - tau * f.eval(t));
            pieces.push((1, false, Box::new(d)));
            pieces.push((1, true, Box::new(d)));
        } else {
            pieces.push((ki - 1, false, Box::new(a_minus)));
            pieces.push((ki + 1, false, Box::new(a_plus)));
            pieces.push((ki + 1, true, Box::new(a_plus)));
            pieces.push((ki - 1, true, Box::new(move |t| -a_minus(t))));
        }

        for (mode_m, is_sin, data) in pieces {
            let ang = angular_weight(mode_m, is_sin);
            if ang == 0.0 {
                continue;
            }
            let sigma_eff = ((mode_m * mode_m) as f64 + k_reduction * tau * tau).sqrt();
            let rhs_fn = move |t: f64| -(-2.0 * t).exp() * data(t);
            let (v, vp) = solve_conjugated_mode(&h, sigma_eff, &rhs_fn, a, b, m_res)?;
            let samples: Vec<f64> = (0..=m_res)
                .map(|i| {
                    let vi = v[i];
                    let du = vp[i] - tau * vi;
                    du * du + ((mode_m * mode_m) as f64 + tau * tau) * vi * vi
                })
                .collect();
            lhs += ang * simpson_sum(&samples, dt);
        }
    }
    RatioReport::from_sides(EstimateKind::WeightedReduction, tau, 0.0, lhs, rhs, m_res)
}
