//! Second-order finite differences: centered in the interior, one-sided
//! (also second-order) at the boundary. Exact on affine fields; the compact
//! second-derivative stencils are exact on cubics in the interior.

use super::{CartesianGrid, ScalarField, TensorField, VectorField};

/// First derivative along one axis of a line of samples.
#[inline]
fn d1_line(get: impl Fn(usize) -> f64, i: usize, n: usize, h: f64) -> f64 {
    if i == 0 {
        (-3.0 * get(0) + 4.0 * get(1) - get(2)) / (2.0 * h)
    } else if i == n - 1 {
        (3.0 * get(n - 1) - 4.0 * get(n - 2) + get(n - 3)) / (2.0 * h)
    } else {
        (get(i + 1) - get(i - 1)) / (2.0 * h)
    }
}

/// Second derivative along one axis (compact 3-point stencil inside).
#[inline]
fn d2_line(get: impl Fn(usize) -> f64, i: usize, n: usize, h: f64) -> f64 {
    let h2 = h * h;
    if i == 0 {
        (2.0 * get(0) - 5.0 * get(1) + 4.0 * get(2) - get(3)) / h2
    } else if i == n - 1 {
        (2.0 * get(n - 1) - 5.0 * get(n - 2) + 4.0 * get(n - 3) - get(n - 4)) / h2
    } else {
        (get(i + 1) - 2.0 * get(i) + get(i - 1)) / h2
    }
}

fn per_node(grid: CartesianGrid, f: impl Fn(usize, usize) -> f64) -> Vec<f64> {
    let n = grid.n();
    let mut out = Vec::with_capacity(grid.node_count());
    for iy in 0..n {
        for ix in 0..n {
            out.push(f(ix, iy));
        }
    }
    out
}

impl ScalarField {
    pub fn dx(&self) -> ScalarField {
        let (g, n, h) = (self.grid(), self.grid().n(), self.grid().spacing());
        let values = per_node(g, |ix, iy| d1_line(|i| self.at(i, iy), ix, n, h));
        ScalarField::from_values(g, values).expect("same grid")
    }

    pub fn dy(&self) -> ScalarField {
        let (g, n, h) = (self.grid(), self.grid().n(), self.grid().spacing());
        let values = per_node(g, |ix, iy| d1_line(|i| self.at(ix, i), iy, n, h));
        ScalarField::from_values(g, values).expect("same grid")
    }

    pub fn dxx(&self) -> ScalarField {
        let (g, n, h) = (self.grid(), self.grid().n(), self.grid().spacing());
        let values = per_node(g, |ix, iy| d2_line(|i| self.at(i, iy), ix, n, h));
        ScalarField::from_values(g, values).expect("same grid")
    }

    pub fn dyy(&self) -> ScalarField {
        let (g, n, h) = (self.grid(), self.grid().n(), self.grid().spacing());
        let values = per_node(g, |ix, iy| d2_line(|i| self.at(ix, i), iy, n, h));
        ScalarField::from_values(g, values).expect("same grid")
    }

    pub fn gradient(&self) -> VectorField {
        VectorField::from_components(&self.dx(), &self.dy()).expect("same grid")
    }

    /// Compact five-point Laplacian (one-sided second differences at the rim).
    pub fn laplacian(&self) -> ScalarField {
        self.dxx().zip_map(&self.dyy(), |a, b| a + b).expect("same grid")
    }

    /// Hessian: row-major [[f_xx, f_xy], [f_xy, f_yy]] with f_xy = D_x D_y f.
    pub fn hessian(&self) -> TensorField {
        let fxx = self.dxx();
        let fyy = self.dyy();
        let fxy = self.dx().dy();
        let g = self.grid();
        let values = (0..g.node_count())
            .map(|i| {
                [
                    [fxx.values()[i], fxy.values()[i]],
                    [fxy.values()[i], fyy.values()[i]],
                ]
            })
            .collect();
        TensorField::from_values(g, values).expect("same grid")
    }
}

impl VectorField {
    /// Jacobian with the convention (∇u)_{jk} = ∂_k u_j.
    pub fn gradient(&self) -> TensorField {
        let g = self.grid();
        let u0 = self.component(0);
        let u1 = self.component(1);
        let (d0x, d0y, d1x, d1y) = (u0.dx(), u0.dy(), u1.dx(), u1.dy());
        let values = (0..g.node_count())
            .map(|i| {
                [
                    [d0x.values()[i], d0y.values()[i]],
                    [d1x.values()[i], d1y.values()[i]],
                ]
            })
            .collect();
        TensorField::from_values(g, values).expect("same grid")
    }

    pub fn divergence(&self) -> ScalarField {
        self.component(0)
            .dx()
            .zip_map(&self.component(1).dy(), |a, b| a + b)
            .expect("same grid")
    }

    pub fn laplacian(&self) -> VectorField {
        VectorField::from_components(&self.component(0).laplacian(), &self.component(1).laplacian())
            .expect("same grid")
    }
}

impl TensorField {
    /// Row-wise divergence: (div S)_j = Σ_k ∂_k S_{jk}.
    pub fn divergence(&self) -> VectorField {
        let g = self.grid();
        let mut rows = Vec::with_capacity(2);
        for j in 0..2 {
            let sj0 = ScalarField::from_values(g, self.values().iter().map(|m| m[j][0]).collect())
                .expect("same grid");
            let sj1 = ScalarField::from_values(g, self.values().iter().map(|m| m[j][1]).collect())
                .expect("same grid");
            rows.push(sj0.dx().zip_map(&sj1.dy(), |a, b| a + b).expect("same grid"));
        }
        VectorField::from_components(&rows[0], &rows[1]).expect("same grid")
    }
}
