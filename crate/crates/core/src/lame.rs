//! The isotropic Lamé system div(μ(∇u+(∇u)ᵗ)) + ∇(λ div u) + ρu = 0, its
//! reduced first-order-coupled form, and the interior (Caccioppoli-type)
//! ratio. λ is only ever differentiated through whole products, so merely
//! bounded profiles are admissible; only ∇μ appears on its own.

use crate::error::{Error, Result};
use crate::fields::{AnnulusSpec, CartesianGrid, ScalarField, VectorField};

/// μ, λ, ρ with the ellipticity constants they are declared to satisfy:
/// μ ≥ δ₀, λ + 2μ ≥ δ₀, ‖μ‖_{C^{0,1}} + ‖λ‖_∞ ≤ M₀, ‖ρ‖_∞ ≤ M₀.
#[derive(Debug, Clone)]
pub struct LameCoefficients {
    pub mu: ScalarField,
    pub lambda: ScalarField,
    pub rho: ScalarField,
    pub delta0: f64,
    pub m0: f64,
}

impl LameCoefficients {
    pub fn new(
        mu: ScalarField,
        lambda: ScalarField,
        rho: ScalarField,
        delta0: f64,
        m0: f64,
    ) -> Result<Self> {
        if mu.grid() != lambda.grid() || mu.grid() != rho.grid() {
            return Err(Error::Usage("coefficient fields live on different grids".into()));
        }
        if !(delta0 > 0.0 && m0 > 0.0) {
            return Err(Error::Usage("delta0 and M0 must be positive".into()));
        }
        Ok(Self { mu, lambda, rho, delta0, m0 })
    }

    pub fn grid(&self) -> CartesianGrid {
        self.mu.grid()
    }

    /// Discrete Lipschitz seminorm of μ: max difference quotient over grid
    /// edges (the testable proxy for ‖∇μ‖_∞).
    pub fn mu_lipschitz(&self) -> f64 {
        let g = self.grid();
        let n = g.n();
        let h = g.spacing();
        let mut lip = 0.0f64;
        for iy in 0..n {
            for ix in 0..n {
                if ix + 1 < n {
                    lip = lip.max((self.mu.at(ix + 1, iy) - self.mu.at(ix, iy)).abs() / h);
                }
                if iy + 1 < n {
                    lip = lip.max((self.mu.at(ix, iy + 1) - self.mu.at(ix, iy)).abs() / h);
                }
            }
        }
        lip
    }
}

/// One inequality check with its worst margin and witnessing node.
#[derive(Debug, Clone)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub margin: f64,
    pub passed: bool,
    /// Node (ix, iy) achieving the margin; None for norm-type checks.
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn min_with_witness(grid: CartesianGrid, f: impl Fn(usize, usize) -> f64) -> (f64, (usize, usize)) {
    let n = grid.n();
    let mut best = f64::INFINITY;
    let mut at = (0, 0);
    for iy in 0..n {
        for ix in 0..n {
            let v = f(ix, iy);
            if v < best {
                best = v;
                at = (ix, iy);
            }
        }
    }
    (best, at)
}

/// Check the ellipticity/bound conditions nodewise, and optionally the
/// strong convexity pair μ ≥ δ̃₀, 2μ + nλ ≥ δ̃₀ (n = 2, δ̃₀ = δ₀).
pub fn validate_coefficients(c: &LameCoefficients, check_convexity: bool) -> ValidationReport {
    let g = c.grid();
    let mut checks = Vec::new();

    let (m, w) = min_with_witness(g, |ix, iy| c.mu.at(ix, iy) - c.delta0);
    checks.push(ValidationCheck { name: "mu_lower", margin: m, passed: m >= 0.0, witness: Some(w) });

    let (m, w) =
        min_with_witness(g, |ix, iy| c.lambda.at(ix, iy) + 2.0 * c.mu.at(ix, iy) - c.delta0);
    checks.push(ValidationCheck {
        name: "ellipticity",
        margin: m,
        passed: m >= 0.0,
        witness: Some(w),
    });

    let mu_c01 = c.mu.max_abs() + c.mu_lipschitz();
    let m = c.m0 - (mu_c01 + c.lambda.max_abs());
    checks.push(ValidationCheck { name: "m0_mu_lambda", margin: m, passed: m >= 0.0, witness: None });

    let m = c.m0 - c.rho.max_abs();
    checks.push(ValidationCheck { name: "m0_rho", margin: m, passed: m >= 0.0, witness: None });

    if check_convexity {
        let (m, w) = min_with_witness(g, |ix, iy| c.mu.at(ix, iy) - c.delta0);
        checks.push(ValidationCheck {
            name: "convexity_mu",
            margin: m,
            passed: m >= 0.0,
            witness: Some(w),
        });
        let (m, w) = min_with_witness(g, |ix, iy| {
            2.0 * c.mu.at(ix, iy) + 2.0 * c.lambda.at(ix, iy) - c.delta0
        });
        checks.push(ValidationCheck {
            name: "convexity_trace",
            margin: m,
            passed: m >= 0.0,
            witness: Some(w),
        });
    }

    ValidationReport { checks }
}

/// Named coefficient families; every instance realizes to a validated
/// [`LameCoefficients`] with constants computed on the target grid.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientProfile {
    Constant { mu: f64, lambda: f64, rho: f64 },
    Affine { mu0: f64, mu_grad: [f64; 2], lambda0: f64, rho0: f64 },
    RadialLipschitz { mu0: f64, slope: f64, lambda0: f64 },
    BoundedOscillatory { mu0: f64, lambda0: f64, amp: f64, freq: f64 },
}

impl CoefficientProfile {
    pub fn name(&self) -> &'static str {
        match self {
            CoefficientProfile::Constant { .. } => "constant",
            CoefficientProfile::Affine { .. } => "affine",
            CoefficientProfile::RadialLipschitz { .. } => "radial-lipschitz",
            CoefficientProfile::BoundedOscillatory { .. } => "bounded-oscillatory",
        }
    }

    pub fn realize(&self, grid: CartesianGrid) -> Result<LameCoefficients> {
        let (mu, lambda, rho) = match *self {
            CoefficientProfile::Constant { mu, lambda, rho } => (
                ScalarField::constant(grid, mu),
                ScalarField::constant(grid, lambda),
                ScalarField::constant(grid, rho),
            ),
            CoefficientProfile::Affine { mu0, mu_grad, lambda0, rho0 } => (
                ScalarField::from_fn(grid, |p| mu0 + mu_grad[0] * p[0] + mu_grad[1] * p[1]),
                ScalarField::constant(grid, lambda0),
                ScalarField::constant(grid, rho0),
            ),
            CoefficientProfile::RadialLipschitz { mu0, slope, lambda0 } => (
                ScalarField::from_fn(grid, |p| mu0 + slope * (p[0] * p[0] + p[1] * p[1]).sqrt()),
                ScalarField::constant(grid, lambda0),
                ScalarField::constant(grid, 0.0),
            ),
            CoefficientProfile::BoundedOscillatory { mu0, lambda0, amp, freq } => (
                ScalarField::constant(grid, mu0),
                ScalarField::from_fn(grid, |p| lambda0 + amp * (freq * p[0]).sin()),
                ScalarField::constant(grid, 0.0),
            ),
        };
        // declared constants: achieved minima/suprema on this grid
        let g = grid;
        let n = g.n();
        let mut mu_min = f64::INFINITY;
        let mut ell_min = f64::INFINITY;
        for iy in 0..n {
            for ix in 0..n {
                mu_min = mu_min.min(mu.at(ix, iy));
                ell_min = ell_min.min(lambda.at(ix, iy) + 2.0 * mu.at(ix, iy));
            }
        }
        let delta0 = mu_min.min(ell_min);
        if !(delta0 > 0.0) {
            return Err(Error::Validation(format!(
                "profile '{}' is not elliptic on this grid (min margin {delta0})",
                self.name()
            )));
        }
        let coeffs = LameCoefficients {
            mu,
            lambda,
            rho,
            delta0,
            m0: 0.0, // placeholder, fixed below
        };
        let m0 = (coeffs.mu.max_abs() + coeffs.mu_lipschitz() + coeffs.lambda.max_abs())
            .max(coeffs.rho.max_abs())
            * (1.0 + 1e-12);
        let coeffs = LameCoefficients { m0, ..coeffs };
        let report = validate_coefficients(&coeffs, false);
        if !report.passed() {
            return Err(Error::Validation(format!(
                "profile '{}' failed its own validation",
                self.name()
            )));
        }
        Ok(coeffs)
    }
}

/// Left-hand side of the system in divergence form, by discrete calculus:
/// div(μ(∇u+(∇u)ᵗ)) + ∇(λ div u) + ρu. Zero (to truncation order) iff u
/// discretely solves the system.
pub fn residual_divergence(u: &VectorField, c: &LameCoefficients) -> Result<VectorField> {
    if u.grid() != c.grid() {
        return Err(Error::Usage("u and coefficients live on different grids".into()));
    }
    let stress = u.gradient().symmetrized().scale_by(&c.mu)?;
    let div_stress = stress.divergence();
    let lam_div = c.lambda.zip_map(&u.divergence(), |l, d| l * d)?;
    let grad_lam_div = lam_div.gradient();
    let rho_u = VectorField::from_components(
        &c.rho.zip_map(&u.component(0), |r, v| r * v)?,
        &c.rho.zip_map(&u.component(1), |r, v| r * v)?,
    )?;
    div_stress
        .zip_map(&grad_lam_div, |a, b| [a[0] + b[0], a[1] + b[1]])?
        .zip_map(&rho_u, |a, b| [a[0] + b[0], a[1] + b[1]])
}

/// The reduced quantities a = (λ+μ)/(λ+2μ), p = ((λ+2μ)/μ) div u and the
/// first-order coupling field G.
#[derive(Debug, Clone)]
pub struct ReducedState {
    pub a: ScalarField,
    pub p: ScalarField,
    pub g: VectorField,
}

pub fn reduced_quantities(u: &VectorField, c: &LameCoefficients) -> Result<ReducedState> {
    if u.grid() != c.grid() {
        return Err(Error::Usage("u and coefficients live on different grids".into()));
    }
    let grid = c.grid();
    let n = grid.n();
    for iy in 0..n {
        for ix in 0..n {
            if c.mu.at(ix, iy) < c.delta0 || c.lambda.at(ix, iy) + 2.0 * c.mu.at(ix, iy) < c.delta0
            {
                return Err(Error::Validation(format!(
                    "ellipticity bound violated at node ({ix}, {iy})"
                )));
            }
        }
    }

    let a = c.lambda.zip_map(&c.mu, |l, m| (l + m) / (l + 2.0 * m))?;
    let div_u = u.divergence();
    let p = ScalarField::from_values(
        grid,
        (0..grid.node_count())
            .map(|i| {
                let l = c.lambda.values()[i];
                let m = c.mu.values()[i];
                (l + 2.0 * m) / m * div_u.values()[i]
            })
            .collect(),
    )?;

    // G = (∇u+(∇u)ᵗ) ∇μ/μ - div u (∇μ/μ + (λ+μ)∇(1/μ)) + (ρ/μ) u,
    // with ∇(1/μ) = -∇μ/μ².
    let grad_mu = c.mu.gradient();
    let sym = u.gradient().symmetrized();
    let term1 = sym.apply(&grad_mu)?;
    let g = grid;
    let mut values = Vec::with_capacity(g.node_count());
    for i in 0..g.node_count() {
        let m = c.mu.values()[i];
        let l = c.lambda.values()[i];
        let r = c.rho.values()[i];
        let gm = grad_mu.values()[i];
        let d = div_u.values()[i];
        let uu = u.values()[i];
        let t1 = term1.values()[i];
        // ∇μ/μ + (λ+μ)∇(1/μ) = ∇μ (1/μ - (λ+μ)/μ²) = ∇μ (μ - λ - μ)/μ² = -λ∇μ/μ²
        let coef = -l / (m * m);
        let mut v = [0.0; 2];
        for k in 0..2 {
            v[k] = t1[k] / m - d * (gm[k] * coef) + r / m * uu[k];
        }
        values.push(v);
    }
    let g_field = VectorField::from_values(g, values)?;
    Ok(ReducedState { a, p, g: g_field })
}

/// Residuals of the coupled reduced system:
/// res_u = Δu + ∇(a p) + G and res_p = Δp + div G.
pub fn reduced_residuals(
    u: &VectorField,
    state: &ReducedState,
) -> Result<(VectorField, ScalarField)> {
    if u.grid() != state.a.grid() {
        return Err(Error::Usage("u and reduced state live on different grids".into()));
    }
    let ap = state.a.zip_map(&state.p, |a, p| a * p)?;
    let res_u = u
        .laplacian()
        .zip_map(&ap.gradient(), |l, g| [l[0] + g[0], l[1] + g[1]])?
        .zip_map(&state.g, |a, b| [a[0] + b[0], a[1] + b[1]])?;
    let res_p = state.p.laplacian().zip_map(&state.g.divergence(), |a, b| a + b)?;
    Ok((res_u, res_p))
}

/// Interior-estimate ratio
/// [Σ_{|α|≤1} ∫_{a₁r<|x|<a₂r} (||x|^{|α|} D^α u|² + ||x|^{|α|+1} D^α p|²)]
///   / ∫_{a₃r<|x|<a₄r} |u|².
pub fn caccioppoli_ratio(
    u: &VectorField,
    p: &ScalarField,
    r: f64,
    a1: f64,
    a2: f64,
    a3: f64,
    a4: f64,
) -> Result<f64> {
    if !(a3 < a1 && a1 < a2 && a2 < a4) {
        return Err(Error::Usage(format!(
            "annulus factors must satisfy a3 < a1 < a2 < a4, got ({a1}, {a2}, {a3}, {a4})"
        )));
    }
    if u.grid() != p.grid() {
        return Err(Error::Usage("u and p live on different grids".into()));
    }
    let inner = AnnulusSpec::new([0.0, 0.0], a1 * r, a2 * r)?;
    let outer = AnnulusSpec::new([0.0, 0.0], a3 * r, a4 * r)?;

    let r2 = |x: [f64; 2]| x[0] * x[0] + x[1] * x[1];
    let mut num = u.weighted_sq_integral(&inner, |_| 1.0)?;
    num += p.weighted_sq_integral(&inner, r2)?;
    let grad = u.gradient();
    for j in 0..2 {
        for k in 0..2 {
            let d = ScalarField::from_values(
                u.grid(),
                grad.values().iter().map(|m| m[j][k]).collect(),
            )?;
            num += d.weighted_sq_integral(&inner, r2)?;
        }
    }
    let gp = p.gradient();
    for k in 0..2 {
        let d = gp.component(k);
        num += d.weighted_sq_integral(&inner, |x| r2(x) * r2(x))?;
    }

    let den = u.weighted_sq_integral(&outer, |_| 1.0)?;
    if den <= 0.0 {
        return Err(Error::Degenerate("u vanishes on the denominator annulus".into()));
    }
    Ok(num / den)
}
