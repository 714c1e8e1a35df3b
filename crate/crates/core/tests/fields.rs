//! Quadrature, discrete calculus and interpolation checks, anchored on
//! closed-form areas and radial integrals.

use std::f64::consts::PI;
use ucplab_core::{AnnulusSpec, CartesianGrid, ScalarField, VectorField};

fn grid(l: f64, n: usize) -> CartesianGrid {
    CartesianGrid::new(l, n).unwrap()
}

#[test]
fn constant_on_annulus_matches_area_exactly() {
    let g = grid(2.5, 129);
    let f = ScalarField::constant(g, 1.0);
    let region = AnnulusSpec::new([0.0, 0.0], 1.0, 2.0).unwrap();
    let norm = f.l2_norm(&region).unwrap();
    // area 3π, clipped cells are exact
    assert!((norm - (3.0 * PI).sqrt()).abs() < 1e-12, "norm = {norm}");
}

#[test]
fn radial_identity_field_on_unit_ball() {
    // |u| = |x|: ∫_0^1 r^2 2πr dr = π/2
    let g = grid(1.25, 257);
    let u = VectorField::from_fn(g, |p| p);
    let ball = AnnulusSpec::ball([0.0, 0.0], 1.0).unwrap();
    let norm = u.l2_norm(&ball).unwrap();
    let exact = (PI / 2.0).sqrt();
    assert!((norm - exact).abs() / exact < 1e-4, "norm = {norm}, exact = {exact}");
}

#[test]
fn zero_measure_region_gives_zero() {
    let g = grid(1.0, 33);
    let f = ScalarField::from_fn(g, |p| 1.0 + p[0]);
    let region = AnnulusSpec::new([0.0, 0.0], 0.5, 0.5).unwrap();
    assert_eq!(f.l2_norm(&region).unwrap(), 0.0);
}

#[test]
fn region_outside_grid_is_domain_error() {
    let g = grid(1.0, 33);
    let f = ScalarField::constant(g, 1.0);
    let region = AnnulusSpec::ball([0.5, 0.0], 0.75).unwrap();
    assert!(f.l2_norm(&region).is_err());
}

#[test]
fn ball_area_consistency_within_2_over_n() {
    for &n in &[33usize, 65, 129] {
        let g = grid(1.0, n);
        let f = ScalarField::constant(g, 1.0);
        let dx = g.spacing();
        for &r in &[0.3, 0.5, 0.77, 0.97] {
            if r < 10.0 * dx {
                continue;
            }
            let ball = AnnulusSpec::ball([0.0, 0.0], r).unwrap();
            let norm = f.l2_norm(&ball).unwrap();
            let exact = PI.sqrt() * r;
            assert!(
                (norm - exact).abs() / exact <= 2.0 / n as f64,
                "n = {n}, r = {r}: {norm} vs {exact}"
            );
        }
    }
}

#[test]
fn squared_norms_are_additive_across_nested_regions() {
    let g = grid(1.0, 65);
    let f = ScalarField::from_fn(g, |p| (3.0 * p[0]).sin() + 0.5 * p[1]);
    let (r1, r2) = (0.4, 0.9);
    let inner = AnnulusSpec::ball([0.0, 0.0], r1).unwrap();
    let outer = AnnulusSpec::ball([0.0, 0.0], r2).unwrap();
    let ring = AnnulusSpec::new([0.0, 0.0], r1, r2).unwrap();
    let a = f.l2_norm(&inner).unwrap().powi(2);
    let b = f.l2_norm(&ring).unwrap().powi(2);
    let c = f.l2_norm(&outer).unwrap().powi(2);
    assert!((a + b - c).abs() <= 1e-12 * c, "additivity defect {}", (a + b - c).abs());
}

#[test]
fn norms_converge_at_second_order_under_refinement() {
    // smooth analytic field, fixed region
    let exact = {
        // ∫_B(0.8) sin²(2x) cos²(y) dx via fine reference grid
        let g = grid(1.0, 1025);
        let f = ScalarField::from_fn(g, |p| (2.0 * p[0]).sin() * p[1].cos());
        f.l2_norm(&AnnulusSpec::ball([0.0, 0.0], 0.8).unwrap()).unwrap()
    };
    let mut errs = Vec::new();
    for &n in &[65usize, 129, 257] {
        let g = grid(1.0, n);
        let f = ScalarField::from_fn(g, |p| (2.0 * p[0]).sin() * p[1].cos());
        let v = f.l2_norm(&AnnulusSpec::ball([0.0, 0.0], 0.8).unwrap()).unwrap();
        errs.push((v - exact).abs());
    }
    let rate01 = (errs[0] / errs[1]).log2();
    let rate12 = (errs[1] / errs[2]).log2();
    assert!(rate01 > 1.6 && rate12 > 1.6, "rates {rate01:.2}, {rate12:.2}, errs {errs:?}");
}

#[test]
fn divergence_of_linear_field_is_machine_zero() {
    let g = grid(1.0, 33);
    let u = VectorField::from_fn(g, |p| [p[0], -p[1]]);
    let div = u.divergence();
    assert!(div.max_abs() < 1e-13, "max |div| = {}", div.max_abs());
}

#[test]
fn gradient_exact_on_quadratics_at_interior_nodes() {
    let g = grid(1.0, 33);
    let f = ScalarField::from_fn(g, |p| p[0] * p[0]);
    let gx = f.dx();
    for iy in 1..g.n() - 1 {
        for ix in 1..g.n() - 1 {
            let x = g.node(ix, iy)[0];
            assert!((gx.at(ix, iy) - 2.0 * x).abs() < 1e-13);
        }
    }
}

#[test]
fn gradient_error_shrinks_at_second_order_for_sine() {
    let mut errs = Vec::new();
    for &n in &[33usize, 65] {
        let g = grid(1.0, n);
        let f = ScalarField::from_fn(g, |p| p[0].sin());
        let gx = f.dx();
        let mut emax = 0.0f64;
        for iy in 1..n - 1 {
            for ix in 1..n - 1 {
                let x = g.node(ix, iy)[0];
                emax = emax.max((gx.at(ix, iy) - x.cos()).abs());
            }
        }
        errs.push(emax);
    }
    let factor = errs[0] / errs[1];
    assert!(factor > 3.5 && factor < 4.5, "halving dx gave error factor {factor}");
}

#[test]
fn interpolation_reproduces_nodes_and_affine_fields() {
    let g = grid(1.0, 17);
    let f = ScalarField::from_fn(g, |p| 2.0 - 3.0 * p[0] + 0.25 * p[1]);
    // node
    let p = g.node(5, 11);
    assert_eq!(f.interpolate(p).unwrap(), f.at(5, 11));
    // affine at a cell center
    let h = g.spacing();
    let q = [g.node(3, 4)[0] + 0.5 * h, g.node(3, 4)[1] + 0.5 * h];
    let exact = 2.0 - 3.0 * q[0] + 0.25 * q[1];
    assert!((f.interpolate(q).unwrap() - exact).abs() < 1e-13);
    // outside hull
    assert!(f.interpolate([1.5, 0.0]).is_err());
}

#[test]
fn interpolation_quadratic_error_is_second_order() {
    let mut errs = Vec::new();
    for &n in &[17usize, 33] {
        let g = grid(1.0, n);
        let f = ScalarField::from_fn(g, |p| p[0] * p[0]);
        let h = g.spacing();
        let q = [g.node(n / 2, n / 2)[0] + 0.5 * h, g.node(n / 2, n / 2)[1] + 0.5 * h];
        errs.push((f.interpolate(q).unwrap() - q[0] * q[0]).abs());
    }
    assert!(errs[0] / errs[1] > 3.0, "errors {errs:?}");
}

#[test]
fn csv_has_grid_header_and_node_rows() {
    let g = grid(1.0, 16);
    let u = VectorField::from_fn(g, |p| p);
    let mut buf = Vec::new();
    u.write_csv(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "# grid: cartesian");
    assert!(text.contains("# points_per_side: 16"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 1 + 16 * 16);
}
