//! Grids, discrete calculus, interpolation and L² quadrature over balls and
//! annuli — the measurement substrate for every other module.
//!
//! Fields are immutable after construction; every derived quantity is a new
//! value, so everything here is safe to share across threads.

mod calculus;
mod csv;
mod polar;
mod quadrature;

pub use polar::{LogPolarGrid, PolarScalarField, PolarVectorField};
pub use quadrature::disk_rect_area;

use crate::error::{Error, Result};

/// Uniform tensor grid on the square [-L, L]².
///
/// Nodes sit at `x_i = -L + i * spacing`, `i = 0..n-1`; the origin is a node
/// whenever `n` is odd.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianGrid {
    half_width: f64,
    n: usize,
}

impl CartesianGrid {
    pub const MIN_POINTS: usize = 16;

    pub fn new(half_width: f64, points_per_side: usize) -> Result<Self> {
        if !(half_width > 0.0) || !half_width.is_finite() {
            return Err(Error::Usage(format!("half_width must be positive, got {half_width}")));
        }
        if points_per_side < Self::MIN_POINTS {
            return Err(Error::Usage(format!(
                "points_per_side must be at least {}, got {points_per_side}",
                Self::MIN_POINTS
            )));
        }
        Ok(Self { half_width, n: points_per_side })
    }

    #[inline]
    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.n * self.n
    }

    #[inline]
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.n - 1) as f64
    }

    #[inline]
    pub fn coord(&self, i: usize) -> f64 {
        -self.half_width + i as f64 * self.spacing()
    }

    #[inline]
    pub fn node(&self, ix: usize, iy: usize) -> [f64; 2] {
        [self.coord(ix), self.coord(iy)]
    }

    #[inline]
    pub fn idx(&self, ix: usize, iy: usize) -> usize {
        iy * self.n + ix
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        let tol = 1e-12 * self.half_width;
        p[0].abs() <= self.half_width + tol && p[1].abs() <= self.half_width + tol
    }

    /// True when the closed ball B_r(c) lies inside the square.
    pub fn contains_ball(&self, center: [f64; 2], r: f64) -> bool {
        let tol = 1e-12 * self.half_width;
        center[0].abs() + r <= self.half_width + tol && center[1].abs() + r <= self.half_width + tol
    }

    fn locate(&self, p: [f64; 2]) -> Result<(usize, usize, f64, f64)> {
        if !self.contains(p) {
            return Err(Error::Domain(format!("point ({}, {}) outside grid hull", p[0], p[1])));
        }
        let h = self.spacing();
        let mut cell = [0usize; 2];
        let mut frac = [0f64; 2];
        for a in 0..2 {
            let u = (p[a] + self.half_width) / h;
            let mut i = u.floor() as isize;
            i = i.clamp(0, self.n as isize - 2);
            cell[a] = i as usize;
            frac[a] = (u - i as f64).clamp(0.0, 1.0);
        }
        Ok((cell[0], cell[1], frac[0], frac[1]))
    }
}

/// Annulus (or ball, when `r_inner == 0`) used as a quadrature region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnulusSpec {
    pub center: [f64; 2],
    pub r_inner: f64,
    pub r_outer: f64,
}

impl AnnulusSpec {
    pub fn new(center: [f64; 2], r_inner: f64, r_outer: f64) -> Result<Self> {
        if !(r_inner >= 0.0 && r_outer >= r_inner) {
            return Err(Error::Usage(format!(
                "annulus radii must satisfy 0 <= r_inner <= r_outer, got [{r_inner}, {r_outer}]"
            )));
        }
        Ok(Self { center, r_inner, r_outer })
    }

    pub fn ball(center: [f64; 2], r: f64) -> Result<Self> {
        Self::new(center, 0.0, r)
    }
}

macro_rules! field_common {
    ($name:ident, $elem:ty) => {
        impl $name {
            pub fn from_values(grid: CartesianGrid, values: Vec<$elem>) -> Result<Self> {
                if values.len() != grid.node_count() {
                    return Err(Error::Usage(format!(
                        "sample count {} does not match grid node count {}",
                        values.len(),
                        grid.node_count()
                    )));
                }
                Ok(Self { grid, values })
            }

            #[inline]
            pub fn grid(&self) -> CartesianGrid {
                self.grid
            }

            #[inline]
            pub fn values(&self) -> &[$elem] {
                &self.values
            }

            #[inline]
            pub fn at(&self, ix: usize, iy: usize) -> $elem {
                self.values[self.grid.idx(ix, iy)]
            }
        }
    };
}

/// Scalar samples on a [`CartesianGrid`]; bilinear interpolation between nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    grid: CartesianGrid,
    values: Vec<f64>,
}

field_common!(ScalarField, f64);

impl ScalarField {
    pub fn from_fn(grid: CartesianGrid, f: impl Fn([f64; 2]) -> f64) -> Self {
        let n = grid.n();
        let mut values = Vec::with_capacity(grid.node_count());
        for iy in 0..n {
            for ix in 0..n {
                values.push(f(grid.node(ix, iy)));
            }
        }
        Self { grid, values }
    }

    pub fn constant(grid: CartesianGrid, c: f64) -> Self {
        Self { grid, values: vec![c; grid.node_count()] }
    }

    pub fn interpolate(&self, p: [f64; 2]) -> Result<f64> {
        let (ix, iy, s, t) = self.grid.locate(p)?;
        let f00 = self.at(ix, iy);
        let f10 = self.at(ix + 1, iy);
        let f01 = self.at(ix, iy + 1);
        let f11 = self.at(ix + 1, iy + 1);
        Ok(f00 * (1.0 - s) * (1.0 - t) + f10 * s * (1.0 - t) + f01 * (1.0 - s) * t + f11 * s * t)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn zip_map(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::Usage("fields live on different grids".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect();
        Ok(Self { grid: self.grid, values })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

/// 2-vector samples on a [`CartesianGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    grid: CartesianGrid,
    values: Vec<[f64; 2]>,
}

field_common!(VectorField, [f64; 2]);

impl VectorField {
    pub fn from_fn(grid: CartesianGrid, f: impl Fn([f64; 2]) -> [f64; 2]) -> Self {
        let n = grid.n();
        let mut values = Vec::with_capacity(grid.node_count());
        for iy in 0..n {
            for ix in 0..n {
                values.push(f(grid.node(ix, iy)));
            }
        }
        Self { grid, values }
    }

    pub fn zeros(grid: CartesianGrid) -> Self {
        Self { grid, values: vec![[0.0; 2]; grid.node_count()] }
    }

    pub fn component(&self, c: usize) -> ScalarField {
        ScalarField {
            grid: self.grid,
            values: self.values.iter().map(|v| v[c]).collect(),
        }
    }

    pub fn from_components(c0: &ScalarField, c1: &ScalarField) -> Result<Self> {
        if c0.grid != c1.grid {
            return Err(Error::Usage("components live on different grids".into()));
        }
        let values = c0.values.iter().zip(&c1.values).map(|(&a, &b)| [a, b]).collect();
        Ok(Self { grid: c0.grid, values })
    }

    pub fn interpolate(&self, p: [f64; 2]) -> Result<[f64; 2]> {
        let (ix, iy, s, t) = self.grid.locate(p)?;
        let mut out = [0.0; 2];
        for c in 0..2 {
            let f00 = self.at(ix, iy)[c];
            let f10 = self.at(ix + 1, iy)[c];
            let f01 = self.at(ix, iy + 1)[c];
            let f11 = self.at(ix + 1, iy + 1)[c];
            out[c] =
                f00 * (1.0 - s) * (1.0 - t) + f10 * s * (1.0 - t) + f01 * (1.0 - s) * t + f11 * s * t;
        }
        Ok(out)
    }

    pub fn zip_map(&self, other: &Self, f: impl Fn([f64; 2], [f64; 2]) -> [f64; 2]) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::Usage("fields live on different grids".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect();
        Ok(Self { grid: self.grid, values })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|v| [v[0] * c, v[1] * c]).collect() }
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v[0].is_finite() && v[1].is_finite())
    }
}

/// 2x2-matrix samples, used for gradients of vector fields (row j holds ∇u_j).
#[derive(Debug, Clone, PartialEq)]
pub struct TensorField {
    grid: CartesianGrid,
    values: Vec<[[f64; 2]; 2]>,
}

field_common!(TensorField, [[f64; 2]; 2]);

impl TensorField {
    pub fn zeros(grid: CartesianGrid) -> Self {
        Self { grid, values: vec![[[0.0; 2]; 2]; grid.node_count()] }
    }

    /// S + Sᵗ, nodewise.
    pub fn symmetrized(&self) -> Self {
        let values = self
            .values
            .iter()
            .map(|m| {
                [
                    [2.0 * m[0][0], m[0][1] + m[1][0]],
                    [m[0][1] + m[1][0], 2.0 * m[1][1]],
                ]
            })
            .collect();
        Self { grid: self.grid, values }
    }

    /// Matrix–vector product with a vector field, nodewise.
    pub fn apply(&self, v: &VectorField) -> Result<VectorField> {
        if self.grid != v.grid {
            return Err(Error::Usage("fields live on different grids".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&v.values)
            .map(|(m, x)| {
                [
                    m[0][0] * x[0] + m[0][1] * x[1],
                    m[1][0] * x[0] + m[1][1] * x[1],
                ]
            })
            .collect();
        Ok(VectorField { grid: self.grid, values })
    }

    /// Scale every matrix entry by a scalar field, nodewise.
    pub fn scale_by(&self, s: &ScalarField) -> Result<Self> {
        if self.grid != s.grid {
            return Err(Error::Usage("fields live on different grids".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&s.values)
            .map(|(m, &c)| {
                [
                    [m[0][0] * c, m[0][1] * c],
                    [m[1][0] * c, m[1][1] * c],
                ]
            })
            .collect();
        Ok(Self { grid: self.grid, values })
    }

    pub fn trace(&self) -> ScalarField {
        ScalarField {
            grid: self.grid,
            values: self.values.iter().map(|m| m[0][0] + m[1][1]).collect(),
        }
    }
}
