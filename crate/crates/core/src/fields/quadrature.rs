//! Annulus quadrature: midpoint rule over the dual cells of the grid nodes,
//! with cells that straddle the annulus boundary weighted by the exact area
//! fraction of the cell inside the region. Constant fields therefore
//! integrate to the exact annulus area, and nested-region additivity holds to
//! rounding.

use super::{AnnulusSpec, CartesianGrid, ScalarField, VectorField};
use crate::error::{Error, Result};

/// ∫ sqrt(r² - s²) ds antiderivative, clamped for roundoff at |s| ≈ r.
#[inline]
fn circle_prim(s: f64, r: f64) -> f64 {
    let s = s.clamp(-r, r);
    0.5 * (s * (r * r - s * s).max(0.0).sqrt() + r * r * (s / r).asin())
}

/// Area of disk(0, r) ∩ [0, x] × [0, y] for x, y ≥ 0.
fn quadrant_area(x: f64, y: f64, r: f64) -> f64 {
    let x = x.min(r);
    let y = y.min(r);
    if x <= 0.0 || y <= 0.0 || r <= 0.0 {
        return 0.0;
    }
    if x * x + y * y <= r * r {
        return x * y;
    }
    // Arc enters the rectangle: below s* the strip has full height y.
    let s_star = (r * r - y * y).max(0.0).sqrt();
    s_star * y + circle_prim(x, r) - circle_prim(s_star, r)
}

#[inline]
fn signed_quadrant(x: f64, y: f64, r: f64) -> f64 {
    x.signum() * y.signum() * quadrant_area(x.abs(), y.abs(), r)
}

/// Exact area of disk(center, r) ∩ [x0, x1] × [y0, y1].
pub fn disk_rect_area(center: [f64; 2], r: f64, x0: f64, x1: f64, y0: f64, y1: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    let (a0, a1) = (x0 - center[0], x1 - center[0]);
    let (b0, b1) = (y0 - center[1], y1 - center[1]);
    (signed_quadrant(a1, b1, r) - signed_quadrant(a0, b1, r) - signed_quadrant(a1, b0, r)
        + signed_quadrant(a0, b0, r))
    .max(0.0)
}

/// Per-node quadrature weights for an annulus region. A weight is the exact
/// area of (dual cell) ∩ (annulus).
pub(crate) fn annulus_weights(grid: CartesianGrid, region: &AnnulusSpec) -> Result<Vec<(usize, f64)>> {
    if !grid.contains_ball(region.center, region.r_outer) {
        return Err(Error::Domain(format!(
            "annulus (center ({}, {}), r_outer {}) exceeds grid domain of half-width {}",
            region.center[0],
            region.center[1],
            region.r_outer,
            grid.half_width()
        )));
    }
    let n = grid.n();
    let h = grid.spacing();
    let half = 0.5 * h;
    let half_diag = half * std::f64::consts::SQRT_2;
    let mut weights = Vec::new();
    if region.r_outer <= region.r_inner {
        return Ok(weights); // zero-measure region
    }
    for iy in 0..n {
        let y = grid.coord(iy);
        let dy_min = (y - region.center[1]).abs() - half;
        if dy_min > region.r_outer + half {
            continue;
        }
        for ix in 0..n {
            let p = [grid.coord(ix), y];
            let d = ((p[0] - region.center[0]).powi(2) + (p[1] - region.center[1]).powi(2)).sqrt();
            // fast paths: cell fully inside / fully outside
            if d + half_diag <= region.r_outer && d - half_diag >= region.r_inner {
                weights.push((grid.idx(ix, iy), h * h));
                continue;
            }
            if d - half_diag > region.r_outer || d + half_diag < region.r_inner {
                continue;
            }
            let (x0, x1) = (p[0] - half, p[0] + half);
            let (y0, y1) = (y - half, y + half);
            let w = disk_rect_area(region.center, region.r_outer, x0, x1, y0, y1)
                - disk_rect_area(region.center, region.r_inner, x0, x1, y0, y1);
            if w > 0.0 {
                weights.push((grid.idx(ix, iy), w));
            }
        }
    }
    Ok(weights)
}

/// Trapezoid-consistent weights over the whole square (dual cells clipped to
/// the domain): Δ² inside, Δ²/2 on edges, Δ²/4 at corners.
pub(crate) fn domain_weights(grid: CartesianGrid) -> Vec<f64> {
    let n = grid.n();
    let h2 = grid.spacing() * grid.spacing();
    let mut w = vec![0.0; grid.node_count()];
    for iy in 0..n {
        for ix in 0..n {
            let fx = if ix == 0 || ix == n - 1 { 0.5 } else { 1.0 };
            let fy = if iy == 0 || iy == n - 1 { 0.5 } else { 1.0 };
            w[grid.idx(ix, iy)] = h2 * fx * fy;
        }
    }
    w
}

impl ScalarField {
    /// ∫_region w(x) f(x)² dx by the clipped-cell midpoint rule.
    pub fn weighted_sq_integral(
        &self,
        region: &AnnulusSpec,
        weight: impl Fn([f64; 2]) -> f64,
    ) -> Result<f64> {
        let grid = self.grid();
        let n = grid.n();
        let mut sum = 0.0;
        for (idx, w) in annulus_weights(grid, region)? {
            let p = grid.node(idx % n, idx / n);
            let v = self.values()[idx];
            sum += w * weight(p) * v * v;
        }
        Ok(sum)
    }

    pub fn l2_norm(&self, region: &AnnulusSpec) -> Result<f64> {
        Ok(self.weighted_sq_integral(region, |_| 1.0)?.sqrt())
    }

    /// ∫_Ω f² dx over the whole square.
    pub fn l2_norm_domain(&self) -> f64 {
        let w = domain_weights(self.grid());
        self.values()
            .iter()
            .zip(&w)
            .map(|(&v, &wi)| wi * v * v)
            .sum::<f64>()
            .sqrt()
    }
}

impl VectorField {
    pub fn weighted_sq_integral(
        &self,
        region: &AnnulusSpec,
        weight: impl Fn([f64; 2]) -> f64,
    ) -> Result<f64> {
        let grid = self.grid();
        let n = grid.n();
        let mut sum = 0.0;
        for (idx, w) in annulus_weights(grid, region)? {
            let p = grid.node(idx % n, idx / n);
            let v = self.values()[idx];
            sum += w * weight(p) * (v[0] * v[0] + v[1] * v[1]);
        }
        Ok(sum)
    }

    pub fn l2_norm(&self, region: &AnnulusSpec) -> Result<f64> {
        Ok(self.weighted_sq_integral(region, |_| 1.0)?.sqrt())
    }

    pub fn l2_norm_domain(&self) -> f64 {
        let w = domain_weights(self.grid());
        self.values()
            .iter()
            .zip(&w)
            .map(|(&v, &wi)| wi * (v[0] * v[0] + v[1] * v[1]))
            .sum::<f64>()
            .sqrt()
    }
}
