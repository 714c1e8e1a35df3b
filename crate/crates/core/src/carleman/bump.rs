//! Seeded C^∞ test functions: sums of scaled and translated bumps
//! exp(-1/(1-s²)), compactly supported with closed-form derivatives.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Bump {
    center: f64,
    half_width: f64,
    amplitude: f64,
}

impl Bump {
    #[inline]
    fn eval(&self, t: f64) -> f64 {
        let s = (t - self.center) / self.half_width;
        let q = 1.0 - s * s;
        if q <= 0.0 {
            0.0
        } else {
            self.amplitude * (-1.0 / q).exp()
        }
    }

    #[inline]
    fn deriv(&self, t: f64) -> f64 {
        let s = (t - self.center) / self.half_width;
        let q = 1.0 - s * s;
        if q <= 0.0 {
            0.0
        } else {
            self.amplitude * (-1.0 / q).exp() * (-2.0 * s / (q * q)) / self.half_width
        }
    }
}

/// Compactly supported smooth profile on (t0, t1).
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction1D {
    support: (f64, f64),
    seed: u64,
    bumps: Vec<Bump>,
}

impl TestFunction1D {
    /// One bump exactly filling (t0, t1).
    pub fn single_bump(t0: f64, t1: f64) -> Self {
        assert!(t1 > t0, "empty support");
        Self {
            support: (t0, t1),
            seed: 0,
            bumps: vec![Bump {
                center: 0.5 * (t0 + t1),
                half_width: 0.5 * (t1 - t0),
                amplitude: 1.0,
            }],
        }
    }

    /// Seeded sum of `n_bumps` bumps supported strictly inside (t0, t1).
    pub fn seeded(seed: u64, t0: f64, t1: f64, n_bumps: usize) -> Self {
        assert!(t1 > t0, "empty support");
        assert!(n_bumps >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let half_span = 0.5 * (t1 - t0);
        let bumps = (0..n_bumps)
            .map(|_| {
                let half_width = half_span * rng.gen_range(0.25..0.6);
                let center =
                    rng.gen_range((t0 + half_width)..(t1 - half_width + f64::EPSILON * half_span));
                let amplitude = rng.gen_range(0.5..1.5);
                Bump { center, half_width, amplitude }
            })
            .collect();
        Self { support: (t0, t1), seed, bumps }
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.bumps.iter().map(|b| b.eval(t)).sum()
    }

    pub fn deriv(&self, t: f64) -> f64 {
        self.bumps.iter().map(|b| b.deriv(t)).sum()
    }

    /// Scale all amplitudes (the profile itself, not its support).
    pub fn scaled(&self, c: f64) -> Self {
        let bumps = self
            .bumps
            .iter()
            .map(|b| Bump { amplitude: b.amplitude * c, ..*b })
            .collect();
        Self { support: self.support, seed: self.seed, bumps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_support_and_smooth_interior() {
        let v = TestFunction1D::seeded(7, 2.0, 4.0, 3);
        assert_eq!(v.eval(2.0), 0.0);
        assert_eq!(v.eval(4.0), 0.0);
        assert_eq!(v.eval(1.0), 0.0);
        assert!(v.eval(3.0) != 0.0);
    }

    #[test]
    fn closed_form_derivative_matches_finite_difference() {
        let v = TestFunction1D::seeded(11, 0.0, 5.0, 4);
        let eps = 1e-6;
        for i in 0..200 {
            let t = 0.1 + 4.8 * i as f64 / 199.0;
            let fd = (v.eval(t + eps) - v.eval(t - eps)) / (2.0 * eps);
            assert!(
                (fd - v.deriv(t)).abs() <= 1e-6 * (1.0 + v.deriv(t).abs()),
                "t = {t}: fd {fd} vs {}",
                v.deriv(t)
            );
        }
    }

    #[test]
    fn seeding_is_deterministic() {
        let a = TestFunction1D::seeded(42, 1.0, 3.0, 2);
        let b = TestFunction1D::seeded(42, 1.0, 3.0, 2);
        assert_eq!(a, b);
        let c = TestFunction1D::seeded(43, 1.0, 3.0, 2);
        assert!(a.eval(2.0) != c.eval(2.0));
    }
}
