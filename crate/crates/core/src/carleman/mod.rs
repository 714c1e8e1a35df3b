//! Numerical verification of the Carleman machinery: the 1-D factor and
//! commutator estimates, the per-mode ODE reduction, the elliptic reduction
//! estimate, and the full 2-D estimate.
//!
//! The exponential weight e^{2h} spans hundreds of orders of magnitude over a
//! test support, so every 1-D verifier works in the weighted variable
//! w = e^h u: test profiles are interpreted in that variable and each printed
//! e^{2h}-integral collapses to an exactly equivalent unweighted one
//! (e^{2h}|u|² = w², e^{2h}|u'|² = |w' - h'w|², and so on). The 2-D verifier
//! keeps plain fields and shifts the weight by its maximum over the data
//! support instead.

mod bump;
mod oned;
mod quad;
mod twod;

pub use bump::TestFunction1D;
pub use oned::{
    verify_commutator_estimate, verify_factor_estimate, verify_mode_ode,
    verify_weighted_reduction, WeightFn,
};
pub use quad::{simpson, simpson_checked, simpson_sum};
pub use twod::{conjugated_operator_check, verify_full_carleman};

use crate::error::{Error, Result};

/// Spectral parameter of the angular Laplacian: σ_k = (n-2)/2 + k.
pub fn sigma(n: u32, k: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("dimension must be at least 2, got {n}")));
    }
    Ok((n as f64 - 2.0) / 2.0 + k as f64)
}

/// Angular mode (n, k) with its spectral value σ_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeIndex {
    pub n: u32,
    pub k: u32,
}

impl ModeIndex {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        sigma(n, k)?;
        Ok(Self { n, k })
    }

    pub fn sigma(&self) -> f64 {
        (self.n as f64 - 2.0) / 2.0 + self.k as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateKind {
    Factor,
    Commutator,
    ModeOde,
    WeightedReduction,
    FullCarleman,
}

impl EstimateKind {
    pub fn name(&self) -> &'static str {
        match self {
            EstimateKind::Factor => "factor",
            EstimateKind::Commutator => "commutator",
            EstimateKind::ModeOde => "mode-ode",
            EstimateKind::WeightedReduction => "weighted-reduction",
            EstimateKind::FullCarleman => "full-carleman",
        }
    }
}

/// LHS/RHS record for one estimate evaluation.
#[derive(Debug, Clone)]
pub struct RatioReport {
    pub estimate: EstimateKind,
    pub tau: f64,
    pub sigma: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// LHS / RHS; zero for a vacuous pass (both sides zero).
    pub ratio: f64,
    pub resolution: usize,
    pub vacuous: bool,
}

impl RatioReport {
    pub(crate) fn from_sides(
        estimate: EstimateKind,
        tau: f64,
        sigma: f64,
        lhs: f64,
        rhs: f64,
        resolution: usize,
    ) -> Result<Self> {
        if !(lhs.is_finite() && rhs.is_finite()) {
            return Err(Error::Numerical(format!(
                "{}: non-finite sides lhs = {lhs}, rhs = {rhs}",
                estimate.name()
            )));
        }
        let vacuous = lhs == 0.0 && rhs == 0.0;
        if rhs == 0.0 && lhs > 0.0 {
            return Err(Error::Numerical(format!(
                "{}: breakdown, zero right-hand side against lhs = {lhs}",
                estimate.name()
            )));
        }
        let ratio = if vacuous { 0.0 } else { lhs / rhs };
        Ok(Self { estimate, tau, sigma, lhs, rhs, ratio, resolution, vacuous })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_matches_spectrum_formula() {
        assert_eq!(sigma(2, 3).unwrap(), 3.0);
        assert_eq!(sigma(2, 0).unwrap(), 0.0);
        let s = sigma(3, 0).unwrap();
        assert_eq!(s, 0.5);
        assert_eq!(s * s, 0.25);
        assert!(sigma(1, 0).is_err());
    }
}
