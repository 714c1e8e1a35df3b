//! Closed-form solutions of the constant-coefficient Lamé system used as
//! test and calibration inputs everywhere: gradients of harmonic polynomials
//! Re z^m / Im z^m (degree k = m-1, divergence-free, |u| = m r^k exactly) and
//! infinitesimal rigid motions c + Wx.

use crate::fields::{CartesianGrid, VectorField};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LibraryField {
    /// u = ∇ Re(z^m) or u = ∇ Im(z^m), m ≥ 1.
    HarmonicGradient { m: u32, imaginary: bool },
    /// u = c + W x with W = w [[0, -1], [1, 0]].
    Rigid { c: [f64; 2], w: f64 },
}

/// (Re z^k, Im z^k) by repeated multiplication.
#[inline]
fn complex_pow(x: f64, y: f64, k: u32) -> (f64, f64) {
    let (mut re, mut im) = (1.0, 0.0);
    for _ in 0..k {
        let r = re * x - im * y;
        im = re * y + im * x;
        re = r;
    }
    (re, im)
}

impl LibraryField {
    /// Polynomial degree of the displacement field.
    pub fn degree(&self) -> u32 {
        match self {
            LibraryField::HarmonicGradient { m, .. } => m - 1,
            LibraryField::Rigid { .. } => 1,
        }
    }

    pub fn name(&self) -> String {
        match self {
            LibraryField::HarmonicGradient { m, imaginary: false } => format!("grad_re_z{m}"),
            LibraryField::HarmonicGradient { m, imaginary: true } => format!("grad_im_z{m}"),
            LibraryField::Rigid { .. } => "rigid".to_string(),
        }
    }

    pub fn eval(&self, p: [f64; 2]) -> [f64; 2] {
        match *self {
            LibraryField::HarmonicGradient { m, imaginary } => {
                // f(z) = z^m, f'(z) = m z^{m-1};
                // ∇Re f = (Re f', -Im f'), ∇Im f = (Im f', Re f').
                let (re, im) = complex_pow(p[0], p[1], m - 1);
                let (re, im) = (m as f64 * re, m as f64 * im);
                if imaginary {
                    [im, re]
                } else {
                    [re, -im]
                }
            }
            LibraryField::Rigid { c, w } => [c[0] - w * p[1], c[1] + w * p[0]],
        }
    }

    /// Jacobian with (∇u)_{jk} = ∂_k u_j, exact.
    pub fn grad(&self, p: [f64; 2]) -> [[f64; 2]; 2] {
        match *self {
            LibraryField::HarmonicGradient { m, imaginary } => {
                // f'' = m(m-1) z^{m-2}
                if m == 1 {
                    return [[0.0; 2]; 2];
                }
                let (re, im) = complex_pow(p[0], p[1], m - 2);
                let c = (m * (m - 1)) as f64;
                let (a, b) = (c * re, c * im);
                // Re f case: u = (Re f', -Im f'); ∂x Re f' = Re f'', ∂y Re f' = -Im f''
                if imaginary {
                    // u = (Im f', Re f')
                    [[b, a], [a, -b]]
                } else {
                    [[a, -b], [-b, -a]]
                }
            }
            LibraryField::Rigid { w, .. } => [[0.0, -w], [w, 0.0]],
        }
    }

    pub fn sample(&self, grid: CartesianGrid) -> VectorField {
        VectorField::from_fn(grid, |p| self.eval(p))
    }

    /// |u| on the circle of radius r (harmonic gradients have constant
    /// modulus on circles: |∇(z^m)| = m r^{m-1}).
    pub fn modulus_on_circle(&self, r: f64) -> Option<f64> {
        match *self {
            LibraryField::HarmonicGradient { m, .. } => {
                Some(m as f64 * r.powi(m as i32 - 1))
            }
            LibraryField::Rigid { .. } => None,
        }
    }
}

/// All harmonic-gradient fields of displacement degree 0..=max_degree
/// (both Re and Im branches; degree 0 appears once since Im z = y gives the
/// constant (0, 1) field, a rotation of ∇Re z).
pub fn harmonic_gradient_library(max_degree: u32) -> Vec<LibraryField> {
    let mut out = Vec::new();
    for m in 1..=(max_degree + 1) {
        out.push(LibraryField::HarmonicGradient { m, imaginary: false });
        if m > 1 {
            out.push(LibraryField::HarmonicGradient { m, imaginary: true });
        }
    }
    out
}
