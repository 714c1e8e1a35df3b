//! Log-polar grids for the conjugated coordinate t = -ln r, with the n = 2
//! area element dx = e^{-2t} dt dθ baked into the quadrature.

use crate::error::{Error, Result};
use std::f64::consts::TAU;

/// Tensor grid in (t, θ): `t` uniform on [t_min, t_max], θ uniform and
/// periodic on [0, 2π). Radii r = e^{-t} lie in (0, 1], so t_min ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogPolarGrid {
    t_min: f64,
    t_max: f64,
    t_count: usize,
    theta_count: usize,
}

impl LogPolarGrid {
    pub const MIN_POINTS: usize = 16;

    pub fn new(t_min: f64, t_max: f64, t_count: usize, theta_count: usize) -> Result<Self> {
        if !(t_min < t_max) {
            return Err(Error::Usage(format!("need t_min < t_max, got [{t_min}, {t_max}]")));
        }
        if t_min < 0.0 {
            return Err(Error::Usage(format!(
                "t_min must be >= 0 so radii e^-t stay in (0, 1], got {t_min}"
            )));
        }
        if t_count < Self::MIN_POINTS || theta_count < Self::MIN_POINTS {
            return Err(Error::Usage(format!(
                "t_count and theta_count must be at least {}, got {t_count} x {theta_count}",
                Self::MIN_POINTS
            )));
        }
        Ok(Self { t_min, t_max, t_count, theta_count })
    }

    #[inline]
    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    #[inline]
    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    #[inline]
    pub fn t_count(&self) -> usize {
        self.t_count
    }

    #[inline]
    pub fn theta_count(&self) -> usize {
        self.theta_count
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.t_count * self.theta_count
    }

    #[inline]
    pub fn dt(&self) -> f64 {
        (self.t_max - self.t_min) / (self.t_count - 1) as f64
    }

    #[inline]
    pub fn dtheta(&self) -> f64 {
        TAU / self.theta_count as f64
    }

    #[inline]
    pub fn t(&self, it: usize) -> f64 {
        self.t_min + it as f64 * self.dt()
    }

    #[inline]
    pub fn theta(&self, ith: usize) -> f64 {
        ith as f64 * self.dtheta()
    }

    #[inline]
    pub fn idx(&self, it: usize, ith: usize) -> usize {
        it * self.theta_count + ith
    }
}

macro_rules! polar_common {
    ($name:ident, $elem:ty) => {
        impl $name {
            pub fn from_values(grid: LogPolarGrid, values: Vec<$elem>) -> Result<Self> {
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
            pub fn grid(&self) -> LogPolarGrid {
                self.grid
            }

            #[inline]
            pub fn values(&self) -> &[$elem] {
                &self.values
            }

            #[inline]
            pub fn at(&self, it: usize, ith: usize) -> $elem {
                self.values[self.grid.idx(it, ith)]
            }
        }
    };
}

/// Scalar samples in (t, θ).
#[derive(Debug, Clone, PartialEq)]
pub struct PolarScalarField {
    grid: LogPolarGrid,
    values: Vec<f64>,
}

polar_common!(PolarScalarField, f64);

/// 2-vector samples in (t, θ); components are Cartesian.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarVectorField {
    grid: LogPolarGrid,
    values: Vec<[f64; 2]>,
}

polar_common!(PolarVectorField, [f64; 2]);

impl PolarScalarField {
    pub fn from_fn(grid: LogPolarGrid, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut values = Vec::with_capacity(grid.node_count());
        for it in 0..grid.t_count() {
            for ith in 0..grid.theta_count() {
                values.push(f(grid.t(it), grid.theta(ith)));
            }
        }
        Self { grid, values }
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

    /// Bilinear interpolation in (t, θ) with θ wraparound.
    pub fn interpolate(&self, t: f64, theta: f64) -> Result<f64> {
        let g = self.grid;
        let tol = 1e-12 * (g.t_max() - g.t_min());
        if t < g.t_min() - tol || t > g.t_max() + tol {
            return Err(Error::Domain(format!("t = {t} outside [{}, {}]", g.t_min(), g.t_max())));
        }
        let ut = ((t - g.t_min()) / g.dt()).clamp(0.0, (g.t_count() - 1) as f64);
        let it = (ut.floor() as usize).min(g.t_count() - 2);
        let s = ut - it as f64;
        let uth = theta.rem_euclid(TAU) / g.dtheta();
        let ith = (uth.floor() as usize).min(g.theta_count() - 1);
        let w = uth - ith as f64;
        let ith1 = (ith + 1) % g.theta_count();
        let f00 = self.at(it, ith);
        let f10 = self.at(it + 1, ith);
        let f01 = self.at(it, ith1);
        let f11 = self.at(it + 1, ith1);
        Ok(f00 * (1.0 - s) * (1.0 - w) + f10 * s * (1.0 - w) + f01 * (1.0 - s) * w + f11 * s * w)
    }

    pub fn d_t(&self) -> Self {
        let g = self.grid;
        let (nt, h) = (g.t_count(), g.dt());
        let mut values = Vec::with_capacity(g.node_count());
        for it in 0..nt {
            for ith in 0..g.theta_count() {
                let v = if it == 0 {
                    (-3.0 * self.at(0, ith) + 4.0 * self.at(1, ith) - self.at(2, ith)) / (2.0 * h)
                } else if it == nt - 1 {
                    (3.0 * self.at(nt - 1, ith) - 4.0 * self.at(nt - 2, ith) + self.at(nt - 3, ith))
                        / (2.0 * h)
                } else {
                    (self.at(it + 1, ith) - self.at(it - 1, ith)) / (2.0 * h)
                };
                values.push(v);
            }
        }
        Self { grid: g, values }
    }

    pub fn d_tt(&self) -> Self {
        let g = self.grid;
        let (nt, h) = (g.t_count(), g.dt());
        let h2 = h * h;
        let mut values = Vec::with_capacity(g.node_count());
        for it in 0..nt {
            for ith in 0..g.theta_count() {
                let v = if it == 0 {
                    (2.0 * self.at(0, ith) - 5.0 * self.at(1, ith) + 4.0 * self.at(2, ith)
                        - self.at(3, ith))
                        / h2
                } else if it == nt - 1 {
                    (2.0 * self.at(nt - 1, ith) - 5.0 * self.at(nt - 2, ith)
                        + 4.0 * self.at(nt - 3, ith)
                        - self.at(nt - 4, ith))
                        / h2
                } else {
                    (self.at(it + 1, ith) - 2.0 * self.at(it, ith) + self.at(it - 1, ith)) / h2
                };
                values.push(v);
            }
        }
        Self { grid: g, values }
    }

    pub fn d_theta(&self) -> Self {
        let g = self.grid;
        let nth = g.theta_count();
        let h = g.dtheta();
        let mut values = Vec::with_capacity(g.node_count());
        for it in 0..g.t_count() {
            for ith in 0..nth {
                let p = (ith + 1) % nth;
                let m = (ith + nth - 1) % nth;
                values.push((self.at(it, p) - self.at(it, m)) / (2.0 * h));
            }
        }
        Self { grid: g, values }
    }

    pub fn d_theta_theta(&self) -> Self {
        let g = self.grid;
        let nth = g.theta_count();
        let h2 = g.dtheta() * g.dtheta();
        let mut values = Vec::with_capacity(g.node_count());
        for it in 0..g.t_count() {
            for ith in 0..nth {
                let p = (ith + 1) % nth;
                let m = (ith + nth - 1) % nth;
                values.push((self.at(it, p) - 2.0 * self.at(it, ith) + self.at(it, m)) / h2);
            }
        }
        Self { grid: g, values }
    }

    /// ∫∫ w(t) f² dt dθ with half cells at the two t-ends.
    pub fn weighted_sq_integral_dtdtheta(&self, weight: impl Fn(f64) -> f64) -> f64 {
        let g = self.grid;
        let (dt, dth) = (g.dt(), g.dtheta());
        let mut sum = 0.0;
        for it in 0..g.t_count() {
            let wt = if it == 0 || it == g.t_count() - 1 { 0.5 * dt } else { dt };
            let w = wt * weight(g.t(it));
            let mut ring = 0.0;
            for ith in 0..g.theta_count() {
                let v = self.at(it, ith);
                ring += v * v;
            }
            sum += w * ring * dth;
        }
        sum
    }

    /// L² norm over the annulus r ∈ [r_inner, r_outer] (center 0), using the
    /// exact per-cell radial Jacobian weight ∫ e^{-2t} dt.
    pub fn l2_norm_annulus(&self, r_inner: f64, r_outer: f64) -> Result<f64> {
        let g = self.grid;
        if !(0.0 <= r_inner && r_inner <= r_outer && r_outer <= 1.0) {
            return Err(Error::Usage(format!(
                "need 0 <= r_inner <= r_outer <= 1, got [{r_inner}, {r_outer}]"
            )));
        }
        if r_inner == r_outer {
            return Ok(0.0);
        }
        let (ta, tb) = (-r_outer.ln(), if r_inner == 0.0 { f64::INFINITY } else { -r_inner.ln() });
        let tol = 1e-12 * (1.0 + g.t_max());
        if ta < g.t_min() - tol || (tb.is_finite() && tb > g.t_max() + tol) {
            return Err(Error::Domain(format!(
                "annulus t-range [{ta}, {tb}] exceeds grid range [{}, {}]",
                g.t_min(),
                g.t_max()
            )));
        }
        let (dt, dth) = (g.dt(), g.dtheta());
        let mut sum = 0.0;
        for it in 0..g.t_count() {
            let t = g.t(it);
            let lo = (t - 0.5 * dt).max(ta).max(g.t_min());
            let hi = (t + 0.5 * dt).min(tb).min(g.t_max());
            if hi <= lo {
                continue;
            }
            // ∫_lo^hi e^{-2s} ds, exact
            let w = 0.5 * ((-2.0 * lo).exp() - (-2.0 * hi).exp());
            let mut ring = 0.0;
            for ith in 0..g.theta_count() {
                let v = self.at(it, ith);
                ring += v * v;
            }
            sum += w * ring * dth;
        }
        Ok(sum.sqrt())
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

impl PolarVectorField {
    pub fn from_fn(grid: LogPolarGrid, f: impl Fn(f64, f64) -> [f64; 2]) -> Self {
        let mut values = Vec::with_capacity(grid.node_count());
        for it in 0..grid.t_count() {
            for ith in 0..grid.theta_count() {
                values.push(f(grid.t(it), grid.theta(ith)));
            }
        }
        Self { grid, values }
    }

    pub fn component(&self, c: usize) -> PolarScalarField {
        PolarScalarField {
            grid: self.grid,
            values: self.values.iter().map(|v| v[c]).collect(),
        }
    }

    pub fn from_components(c0: &PolarScalarField, c1: &PolarScalarField) -> Result<Self> {
        if c0.grid != c1.grid {
            return Err(Error::Usage("components live on different grids".into()));
        }
        let values = c0.values.iter().zip(&c1.values).map(|(&a, &b)| [a, b]).collect();
        Ok(Self { grid: c0.grid, values })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|v| [v[0] * c, v[1] * c]).collect() }
    }
}
