//! Two-dimensional checks on the log-polar grid: the conjugated-coordinate
//! identity |x|²Δu = u_tt + u_θθ (n = 2) compared through two independent
//! discrete routes, and the full estimate for Δu + ∇f = g with manufactured g.

use super::{EstimateKind, RatioReport};
use crate::error::{Error, Result};
use crate::fields::{PolarScalarField, PolarVectorField};
use crate::weights::CarlemanWeight;

/// Rings required to vanish at each t-edge of the grid.
const SUPPORT_MARGIN: usize = 4;

fn check_support_margin(values_nonzero: impl Fn(usize) -> bool, nt: usize) -> Result<()> {
    for it in 0..nt {
        let at_edge = it < SUPPORT_MARGIN || it + SUPPORT_MARGIN >= nt;
        if at_edge && values_nonzero(it) {
            return Err(Error::Domain(format!(
                "field support touches the t-grid edge (ring {it}); leave {SUPPORT_MARGIN} empty rings"
            )));
        }
    }
    Ok(())
}

/// Cartesian gradient of a scalar field given in (t, θ):
///   ∂₁ = -e^t (cosθ ∂_t + sinθ ∂_θ),  ∂₂ = e^t (-sinθ ∂_t + cosθ ∂_θ).
pub(crate) fn cart_gradient(f: &PolarScalarField) -> (PolarScalarField, PolarScalarField) {
    let g = f.grid();
    let ft = f.d_t();
    let fth = f.d_theta();
    let mut g1 = Vec::with_capacity(g.node_count());
    let mut g2 = Vec::with_capacity(g.node_count());
    for it in 0..g.t_count() {
        let et = g.t(it).exp();
        for ith in 0..g.theta_count() {
            let (s, c) = g.theta(ith).sin_cos();
            let (dt, dth) = (ft.at(it, ith), fth.at(it, ith));
            g1.push(-et * (c * dt + s * dth));
            g2.push(et * (-s * dt + c * dth));
        }
    }
    (
        PolarScalarField::from_values(g, g1).expect("same grid"),
        PolarScalarField::from_values(g, g2).expect("same grid"),
    )
}

/// Laplacian in the log-polar chart: Δf = e^{2t}(f_tt + f_θθ).
pub(crate) fn polar_laplacian(f: &PolarScalarField) -> PolarScalarField {
    let g = f.grid();
    let ftt = f.d_tt();
    let fthth = f.d_theta_theta();
    let mut vals = Vec::with_capacity(g.node_count());
    for it in 0..g.t_count() {
        let e2t = (2.0 * g.t(it)).exp();
        for ith in 0..g.theta_count() {
            vals.push(e2t * (ftt.at(it, ith) + fthth.at(it, ith)));
        }
    }
    PolarScalarField::from_values(g, vals).expect("same grid")
}

/// Two-route check of the conjugated-coordinate identity
/// |x|² Δu = u_tt + u_θθ (n = 2; the zeroth-order term vanishes).
///
/// Route A composes the physical radial derivatives (∂_r = -e^t ∂_t applied
/// twice plus the first-order term); route B is the flat (t, θ) Laplacian.
/// Returns the L²(dx) norm of their difference over the grid annulus.
pub fn conjugated_operator_check(u: &PolarScalarField) -> Result<f64> {
    let g = u.grid();
    let nt = g.t_count();
    check_support_margin(
        |it| (0..g.theta_count()).any(|ith| u.at(it, ith) != 0.0),
        nt,
    )?;

    // route A: r²(u_rr + u_r/r) + u_θθ with u_r = -e^t D_t u
    let u_r = {
        let ut = u.d_t();
        PolarScalarField::from_values(
            g,
            (0..nt)
                .flat_map(|it| {
                    let et = g.t(it).exp();
                    (0..g.theta_count()).map(move |ith| (it, ith, et))
                })
                .map(|(it, ith, et)| -et * ut.at(it, ith))
                .collect(),
        )?
    };
    let u_rr = {
        let urt = u_r.d_t();
        PolarScalarField::from_values(
            g,
            (0..nt)
                .flat_map(|it| {
                    let et = g.t(it).exp();
                    (0..g.theta_count()).map(move |ith| (it, ith, et))
                })
                .map(|(it, ith, et)| -et * urt.at(it, ith))
                .collect(),
        )?
    };
    let uthth = u.d_theta_theta();
    let route_a = PolarScalarField::from_values(
        g,
        (0..nt)
            .flat_map(|it| (0..g.theta_count()).map(move |ith| (it, ith)))
            .map(|(it, ith)| {
                let t = g.t(it);
                let r = (-t).exp();
                r * r * u_rr.at(it, ith) + r * u_r.at(it, ith) + uthth.at(it, ith)
            })
            .collect(),
    )?;

    // route B: flat Laplacian in (t, θ)
    let route_b = u.d_tt().zip_map(&uthth, |a, b| a + b)?;

    let diff = route_a.zip_map(&route_b, |a, b| a - b)?;
    // L²(dx) with the e^{-2t} Jacobian, interior rings only
    let mut sum = 0.0;
    let (dt, dth) = (g.dt(), g.dtheta());
    for it in SUPPORT_MARGIN..nt - SUPPORT_MARGIN {
        let w = (-2.0 * g.t(it)).exp() * dt * dth;
        for ith in 0..g.theta_count() {
            let v = diff.at(it, ith);
            sum += w * v * v;
        }
    }
    Ok(sum.sqrt())
}

/// Full-estimate verifier on the log-polar grid: with g := Δu + ∇f computed
/// discretely (so the constraint equation holds exactly at the nodes),
/// compares
///   τ‖|x|⁻²(1+h'')^{1/2} e^h u‖ + ‖|x|⁻¹(1+h'')^{1/2} e^h ∇u‖
/// against
///   τ‖|x|⁻¹ e^h f‖ + ‖e^h g‖.
/// Weighted integrands are shifted by max 2h over the data support.
pub fn verify_full_carleman(
    w: &CarlemanWeight,
    u: &PolarVectorField,
    f: &PolarScalarField,
) -> Result<RatioReport> {
    let g = u.component(0).grid();
    if f.grid() != g {
        return Err(Error::Usage("u and f live on different grids".into()));
    }
    let nt = g.t_count();
    let nth = g.theta_count();
    check_support_margin(
        |it| {
            (0..nth).any(|ith| {
                let uv = u.at(it, ith);
                uv[0] != 0.0 || uv[1] != 0.0 || f.at(it, ith) != 0.0
            })
        },
        nt,
    )?;

    let u0 = u.component(0);
    let u1 = u.component(1);
    let (f1, f2) = cart_gradient(f);
    let g0 = polar_laplacian(&u0).zip_map(&f1, |a, b| a + b)?;
    let g1 = polar_laplacian(&u1).zip_map(&f2, |a, b| a + b)?;
    let (du0_1, du0_2) = cart_gradient(&u0);
    let (du1_1, du1_2) = cart_gradient(&u1);

    // shift: max of 2h over rings where data (or its one-ring smear) lives;
    // dead rings are skipped outright so the shifted exponential can never
    // overflow against a zero integrand
    let live: Vec<bool> = (0..nt)
        .map(|it| {
            (0..nth).any(|ith| {
                let uv = u.at(it, ith);
                uv[0] != 0.0
                    || uv[1] != 0.0
                    || f.at(it, ith) != 0.0
                    || g0.at(it, ith) != 0.0
                    || g1.at(it, ith) != 0.0
            })
        })
        .collect();
    let mut shift = f64::NEG_INFINITY;
    for it in 0..nt {
        if live[it] {
            shift = shift.max(2.0 * w.h(g.t(it)));
        }
    }
    if !shift.is_finite() {
        // all-zero data
        return RatioReport::from_sides(EstimateKind::FullCarleman, w.tau, 0.0, 0.0, 0.0, nt * nth);
    }

    let (dt, dth) = (g.dt(), g.dtheta());
    let mut lhs_u = 0.0; // ∫ e^{2t}(1+h'') E |u|²
    let mut lhs_grad = 0.0; // ∫ (1+h'') E |∇u|²
    let mut rhs_f = 0.0; // ∫ E f²
    let mut rhs_g = 0.0; // ∫ e^{-2t} E |g|²
    for it in 0..nt {
        let t = g.t(it);
        let (h, _, hpp) = w.eval(t);
        let e = (2.0 * h - shift).exp();
        let cell = if it == 0 || it == nt - 1 { 0.5 * dt } else { dt } * dth;
        let e2t = (2.0 * t).exp();
        for ith in 0..nth {
            let uu = u.at(it, ith);
            let usq = uu[0] * uu[0] + uu[1] * uu[1];
            let gsq = du0_1.at(it, ith).powi(2)
                + du0_2.at(it, ith).powi(2)
                + du1_1.at(it, ith).powi(2)
                + du1_2.at(it, ith).powi(2);
            let fv = f.at(it, ith);
            let gv = g0.at(it, ith).powi(2) + g1.at(it, ith).powi(2);
            lhs_u += cell * e2t * (1.0 + hpp) * e * usq;
            lhs_grad += cell * (1.0 + hpp) * e * gsq;
            rhs_f += cell * e * fv * fv;
            rhs_g += cell * (-2.0 * t).exp() * e * gv;
        }
    }

    let lhs = w.tau * lhs_u.sqrt() + lhs_grad.sqrt();
    let rhs = w.tau * rhs_f.sqrt() + rhs_g.sqrt();
    RatioReport::from_sides(EstimateKind::FullCarleman, w.tau, 0.0, lhs, rhs, nt * nth)
}
