//! Composite Simpson quadrature (the integrands here are smooth and
//! compactly supported, so Simpson converges fast; a Richardson check against
//! half resolution guards the reported values).

/// Composite Simpson over `intervals` uniform subintervals (must be even).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, intervals: usize) -> f64 {
    assert!(intervals >= 2 && intervals % 2 == 0, "need an even interval count");
    let h = (b - a) / intervals as f64;
    let mut sum = f(a) + f(b);
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    sum * h / 3.0
}

/// Simpson over already-sampled values on a uniform mesh (odd length).
pub fn simpson_sum(values: &[f64], h: f64) -> f64 {
    assert!(values.len() >= 3 && values.len() % 2 == 1, "need an odd sample count");
    let mut sum = values[0] + values[values.len() - 1];
    for (i, v) in values.iter().enumerate().take(values.len() - 1).skip(1) {
        sum += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    sum * h / 3.0
}

/// Value at full resolution plus the Richardson error estimate
/// |I_full - I_half| (an upper proxy for the quadrature error).
pub fn simpson_checked<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, intervals: usize) -> (f64, f64) {
    let full = simpson(&f, a, b, intervals);
    let half = simpson(&f, a, b, intervals / 2);
    (full, (full - half).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        let v = simpson(|t| t * t * t - 2.0 * t, 0.0, 2.0, 8);
        assert!((v - (4.0 - 4.0)).abs() < 1e-13);
    }

    #[test]
    fn sampled_variant_agrees_with_closure_variant() {
        let (a, b, m) = (0.0, 3.0, 64);
        let h = (b - a) / m as f64;
        let values: Vec<f64> = (0..=m).map(|i| ((a + i as f64 * h) * 1.3).sin()).collect();
        let s1 = simpson_sum(&values, h);
        let s2 = simpson(|t| (t * 1.3).sin(), a, b, m);
        assert!((s1 - s2).abs() < 1e-14);
    }

    #[test]
    fn richardson_check_flags_converged_integrals() {
        let (v, err) = simpson_checked(|t| (-t * t).exp(), -3.0, 3.0, 1 << 12);
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-10);
        assert!(err < 1e-12);
    }
}
