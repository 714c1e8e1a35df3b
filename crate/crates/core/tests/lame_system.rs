//! Residual, reduced-system and interior-estimate checks against hand
//! computations and the closed-form solution family.

use ucplab_core::lame::{
    caccioppoli_ratio, reduced_quantities, reduced_residuals, residual_divergence,
    validate_coefficients, CoefficientProfile, LameCoefficients,
};
use ucplab_core::{AnnulusSpec, CartesianGrid, LibraryField, ScalarField, VectorField};

fn grid(n: usize) -> CartesianGrid {
    CartesianGrid::new(1.0, n).unwrap()
}

fn constant_coeffs(g: CartesianGrid, mu: f64, lambda: f64, rho: f64, delta0: f64) -> LameCoefficients {
    LameCoefficients::new(
        ScalarField::constant(g, mu),
        ScalarField::constant(g, lambda),
        ScalarField::constant(g, rho),
        delta0,
        10.0,
    )
    .unwrap()
}

#[test]
fn unit_coefficients_pass_ellipticity_and_convexity() {
    let c = constant_coeffs(grid(17), 1.0, 1.0, 0.0, 1.0);
    let report = validate_coefficients(&c, true);
    assert!(report.passed(), "{:?}", report.checks);
    assert!(report.check("convexity_trace").unwrap().margin >= 3.0 - 1e-12);
}

#[test]
fn near_incompressible_negative_lambda_fails_convexity_only() {
    let c = constant_coeffs(grid(17), 1.0, -1.9, 0.0, 0.1);
    let report = validate_coefficients(&c, true);
    assert!(report.check("ellipticity").unwrap().passed);
    let conv = report.check("convexity_trace").unwrap();
    assert!(!conv.passed);
    assert!((conv.margin - (-1.8 - 0.1)).abs() < 1e-12);
}

#[test]
fn vanishing_mu_fails_with_witness() {
    let c = constant_coeffs(grid(17), 0.0, 1.0, 0.0, 0.5);
    let report = validate_coefficients(&c, false);
    let mu_check = report.check("mu_lower").unwrap();
    assert!(!mu_check.passed);
    assert!(mu_check.witness.is_some());
}

#[test]
fn profiles_validate_with_their_declared_constants() {
    let g = grid(33);
    let profiles = [
        CoefficientProfile::Constant { mu: 1.0, lambda: 1.0, rho: 0.0 },
        CoefficientProfile::Affine { mu0: 1.0, mu_grad: [0.3, 0.0], lambda0: 1.0, rho0: 0.0 },
        CoefficientProfile::RadialLipschitz { mu0: 1.0, slope: 0.25, lambda0: 0.5 },
        CoefficientProfile::BoundedOscillatory { mu0: 1.0, lambda0: 0.8, amp: 0.2, freq: 3.0 },
    ];
    for p in profiles {
        let c = p.realize(g).unwrap_or_else(|e| panic!("{} failed: {e}", p.name()));
        assert!(validate_coefficients(&c, false).passed(), "{}", p.name());
    }
}

#[test]
fn harmonic_gradient_solves_constant_system_to_machine_precision() {
    let g = grid(33);
    let c = constant_coeffs(g, 1.5, 0.7, 0.0, 0.7);
    let u = VectorField::from_fn(g, |p| [2.0 * p[0], -2.0 * p[1]]);
    let res = residual_divergence(&u, &c).unwrap();
    let norm = res.l2_norm_domain();
    assert!(norm < 1e-12, "residual norm {norm}");
}

#[test]
fn rigid_motion_residual_is_exactly_zero() {
    let g = grid(33);
    let c = constant_coeffs(g, 1.0, 1.0, 0.0, 1.0);
    let u = LibraryField::Rigid { c: [0.3, -0.1], w: 0.8 }.sample(g);
    let res = residual_divergence(&u, &c).unwrap();
    // zero in exact arithmetic; node coordinates round, so allow eps-level
    assert!(res.l2_norm_domain() < 1e-12);
}

#[test]
fn lipschitz_mu_residual_matches_symbolic_oracle() {
    // mu = 1 + 0.3 x1, u = (x2^2, 0), lambda = 1, rho = 0:
    //   div(mu S)_1 = d/dx2 (2 mu x2) = 2 mu
    //   div(mu S)_2 = d/dx1 (2 mu x2) = 0.6 x2, and div u = 0.
    let g = grid(65);
    let c = LameCoefficients::new(
        ScalarField::from_fn(g, |p| 1.0 + 0.3 * p[0]),
        ScalarField::constant(g, 1.0),
        ScalarField::constant(g, 0.0),
        0.7,
        10.0,
    )
    .unwrap();
    let u = VectorField::from_fn(g, |p| [p[1] * p[1], 0.0]);
    let res = residual_divergence(&u, &c).unwrap();
    let exact = VectorField::from_fn(g, |p| [2.0 * (1.0 + 0.3 * p[0]), 0.6 * p[1]]);
    let diff = res.zip_map(&exact, |a, b| [a[0] - b[0], a[1] - b[1]]).unwrap();
    assert!(diff.l2_norm_domain() < 1e-11, "oracle mismatch {}", diff.l2_norm_domain());
}

#[test]
fn reduced_quantities_constant_case() {
    let g = grid(33);
    let c = constant_coeffs(g, 1.0, 1.0, 0.0, 1.0);
    let u = VectorField::from_fn(g, |p| [p[0], p[1]]);
    let state = reduced_quantities(&u, &c).unwrap();
    assert!(state.g.l2_norm_domain() < 1e-13);
    for &v in state.a.values() {
        assert!((v - 2.0 / 3.0).abs() < 1e-14);
    }
    for &v in state.p.values() {
        assert!((v - 6.0).abs() < 1e-12);
    }
}

#[test]
fn poisson_like_profile_pins_a_at_two_thirds() {
    // lambda = mu pointwise => a = 2mu/(3mu) = 2/3 whatever the profile
    let g = grid(33);
    let mu = ScalarField::from_fn(g, |p| 1.0 + 0.2 * p[0] + 0.1 * p[1]);
    let c = LameCoefficients::new(mu.clone(), mu, ScalarField::constant(g, 0.0), 0.5, 10.0).unwrap();
    let u = VectorField::from_fn(g, |p| [p[0] * p[1], p[1]]);
    let state = reduced_quantities(&u, &c).unwrap();
    for &v in state.a.values() {
        assert!((v - 2.0 / 3.0).abs() < 1e-14);
    }
}

#[test]
fn reduced_residuals_vanish_for_cubic_harmonic_gradient() {
    let g = CartesianGrid::new(1.0, 257).unwrap();
    let c = constant_coeffs(g, 1.0, 1.0, 0.0, 1.0);
    let u = LibraryField::HarmonicGradient { m: 4, imaginary: false }.sample(g);
    let state = reduced_quantities(&u, &c).unwrap();
    let (res_u, res_p) = reduced_residuals(&u, &state).unwrap();
    // one-sided rim stencils carry the O(dx) part; the interior ball is the
    // contract region
    let region = AnnulusSpec::ball([0.0, 0.0], 0.8).unwrap();
    let scale = u.l2_norm(&region).unwrap();
    let ru = res_u.l2_norm(&region).unwrap();
    let rp = res_p.l2_norm(&region).unwrap();
    assert!(ru / scale < 1e-8, "res_u {ru}");
    assert!(rp / scale < 1e-8, "res_p {rp}");
}

#[test]
fn reduced_residuals_exactly_zero_for_rigid_motion() {
    let g = grid(33);
    let c = constant_coeffs(g, 1.0, 1.0, 0.0, 1.0);
    let u = LibraryField::Rigid { c: [1.0, 2.0], w: -0.5 }.sample(g);
    let state = reduced_quantities(&u, &c).unwrap();
    let (res_u, res_p) = reduced_residuals(&u, &state).unwrap();
    assert!(res_u.l2_norm_domain() < 1e-12);
    assert!(res_p.l2_norm_domain() < 1e-12);
}

#[test]
fn res_p_agrees_between_direct_form_and_divergence_route() {
    // Two discrete routes to the same continuum quantity must agree to
    // truncation order: direct Δp + div G, versus div(Δu + ∇(ap)) + div G.
    let mut defects = Vec::new();
    for &n in &[65usize, 129] {
        let g = grid(n);
        let c = LameCoefficients::new(
            ScalarField::from_fn(g, |p| 1.0 + 0.3 * p[0]),
            ScalarField::constant(g, 1.0),
            ScalarField::constant(g, 0.0),
            0.7,
            10.0,
        )
        .unwrap();
        let u = VectorField::from_fn(g, |p| [(p[0]).sin() * (p[1]).sin(), p[0] * p[1]]);
        let state = reduced_quantities(&u, &c).unwrap();
        let (_res_u, res_p) = reduced_residuals(&u, &state).unwrap();
        let ap = state.a.zip_map(&state.p, |a, p| a * p).unwrap();
        let route_b = u
            .laplacian()
            .zip_map(&ap.gradient(), |l, gr| [l[0] + gr[0], l[1] + gr[1]])
            .unwrap()
            .divergence()
            .zip_map(&state.g.divergence(), |a, b| a + b)
            .unwrap();
        // compare over the interior ball to keep one-sided rim stencils out
        let region = AnnulusSpec::ball([0.0, 0.0], 0.8).unwrap();
        let diff = res_p.zip_map(&route_b, |a, b| a - b).unwrap();
        defects.push(diff.l2_norm(&region).unwrap());
    }
    assert!(defects[0] < 0.05, "coarse defect {}", defects[0]);
    assert!(defects[0] / defects[1] > 3.0, "defects {defects:?} should shrink at O(dx^2)");
}

#[test]
fn caccioppoli_matches_closed_form_radial_integrals() {
    // u = (2x, -2y), p = 0, factors (1/4, 1/3, 1/2, 2/3), r = 1:
    // numerator 65π/216, denominator 4015π/10368, ratio 624/803.
    let g = CartesianGrid::new(1.0, 257).unwrap();
    let u = VectorField::from_fn(g, |p| [2.0 * p[0], -2.0 * p[1]]);
    let p = ScalarField::constant(g, 0.0);
    let ratio = caccioppoli_ratio(&u, &p, 1.0, 1.0 / 3.0, 0.5, 0.25, 2.0 / 3.0).unwrap();
    let exact = 624.0 / 803.0;
    assert!((ratio - exact).abs() / exact < 2e-3, "ratio {ratio} vs {exact}");
}

#[test]
fn caccioppoli_scale_invariant_and_monotone_in_denominator() {
    let g = grid(129);
    let u = VectorField::from_fn(g, |p| [2.0 * p[0], -2.0 * p[1]]);
    let p = ScalarField::constant(g, 0.0);
    let base = caccioppoli_ratio(&u, &p, 1.0, 1.0 / 3.0, 0.5, 0.25, 2.0 / 3.0).unwrap();
    let scaled = caccioppoli_ratio(&u.scale(2.0), &p, 1.0, 1.0 / 3.0, 0.5, 0.25, 2.0 / 3.0).unwrap();
    assert_eq!(base, scaled);
    let wider = caccioppoli_ratio(&u, &p, 1.0, 1.0 / 3.0, 0.5, 0.2, 0.75).unwrap();
    assert!(wider < base);
}

#[test]
fn caccioppoli_rejects_bad_factor_order_and_zero_denominator() {
    let g = grid(65);
    let u = VectorField::from_fn(g, |p| [2.0 * p[0], -2.0 * p[1]]);
    let p = ScalarField::constant(g, 0.0);
    assert!(caccioppoli_ratio(&u, &p, 1.0, 0.5, 0.3, 0.25, 0.6).is_err());
    let zero = VectorField::zeros(g);
    assert!(caccioppoli_ratio(&zero, &p, 1.0, 1.0 / 3.0, 0.5, 0.25, 2.0 / 3.0).is_err());
}

#[test]
fn caccioppoli_bounded_over_library_and_radii() {
    let mut per_grid = Vec::new();
    for &n in &[129usize, 257] {
        let g = grid(n);
        let p = ScalarField::constant(g, 0.0);
        let mut worst = 0.0f64;
        for field in ucplab_core::harmonic_gradient_library(4) {
            let u = field.sample(g);
            for &r in &[0.2, 0.4, 0.8] {
                let ratio =
                    caccioppoli_ratio(&u, &p, r, 1.0 / 3.0, 0.5, 0.25, 2.0 / 3.0).unwrap();
                worst = worst.max(ratio);
            }
        }
        per_grid.push(worst);
    }
    assert!(per_grid[1] <= per_grid[0] * 1.05, "max ratio grew under refinement: {per_grid:?}");
}
