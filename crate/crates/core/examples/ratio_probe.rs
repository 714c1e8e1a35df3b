//! Scratch probe: prints verifier ratios across the τ sweep so reference
//! behavior can be inspected before tolerances are frozen in tests.
//! Run: cargo run --example ratio_probe --release

use ucplab_core::carleman::{
    verify_commutator_estimate, verify_factor_estimate, verify_full_carleman, verify_mode_ode,
    verify_weighted_reduction, ModeIndex, TestFunction1D, WeightFn,
};
use ucplab_core::fields::{LogPolarGrid, PolarScalarField, PolarVectorField};
use ucplab_core::weights::CarlemanWeight;

const TAUS: [f64; 5] = [8.25, 16.25, 32.25, 64.25, 128.25];

fn main() {
    let delta = 1.0 / 16.0;

    println!("== factor (sigma = 3, bump (4,6)) ==");
    let v = TestFunction1D::single_bump(4.0, 6.0);
    for &tau in &TAUS {
        let w = WeightFn::Carleman(CarlemanWeight::new(tau, delta).unwrap());
        let r = verify_factor_estimate(&w, 3.0, &v).unwrap();
        println!("tau {tau:8.2}  ratio {:.6}", r.ratio);
    }
    println!("linear weight, tau = 16.25 then 32.5:");
    for &tau in &[16.25, 32.5] {
        let r = verify_factor_estimate(&WeightFn::Linear { tau }, 3.0, &v).unwrap();
        println!("tau {tau:8.2}  ratio {:.6}", r.ratio);
    }

    println!("== commutator (tracking sigma, far-regime bump) ==");
    let a_max = 2.0 * 128.25f64.ln();
    let v = TestFunction1D::seeded(5, a_max + 4.0, a_max + 8.0, 2);
    for &tau in &TAUS {
        let w = CarlemanWeight::new(tau, delta).unwrap();
        let mid = 0.5 * (a_max + 4.0 + a_max + 8.0);
        let sigma = w.h_prime(mid).round();
        let r = verify_commutator_estimate(&w, sigma, &v).unwrap();
        println!("tau {tau:8.2}  sigma {sigma:6.1}  ratio {:.6}", r.ratio);
    }

    println!("== commutator resonance: integer tau, delta = 1e-6, wide bump ==");
    {
        let tau_frac: f64 = 101.25;
        let tau_int = 101.0;
        for width in [20.0, 40.0, 60.0] {
            let a = 2.0 * tau_frac.ln() + 4.0;
            let v = TestFunction1D::single_bump(a, a + width);
            let mid = a + width / 2.0;
            let wf = CarlemanWeight::new(tau_frac, delta).unwrap();
            let wi = ucplab_core::weights::CarlemanWeight::unchecked(
                tau_int,
                1e-6,
                ucplab_core::weights::WeightVariant::Base,
            );
            let sf = wf.h_prime(mid).round();
            let si = wi.h_prime(mid).round();
            let rf = verify_commutator_estimate(&wf, sf, &v).unwrap();
            let ri = verify_commutator_estimate(&wi, si, &v).unwrap();
            println!(
                "width {width:5.1}: frac ratio {:.4}, int ratio {:.4}, blowup x{:.2}",
                rf.ratio,
                ri.ratio,
                ri.ratio / rf.ratio
            );
        }
    }

    println!("== mode ode (k in {{0,1,5,25}}, bump (6,8)) ==");
    let gfun = TestFunction1D::seeded(9, 6.0, 8.0, 2);
    for &k in &[0u32, 1, 5, 25] {
        print!("k {k:3}: ");
        for &tau in &TAUS {
            let w = CarlemanWeight::new(tau, delta).unwrap();
            match verify_mode_ode(&w, ModeIndex::new(2, k).unwrap(), &gfun) {
                Ok(r) => print!(" {:.3e}", r.ratio),
                Err(e) => print!(" ERR({e})"),
            }
        }
        println!();
    }

    println!("== weighted reduction (K = 16, mode k = 1, bump (2,4)) ==");
    let f1 = TestFunction1D::seeded(3, 2.0, 4.0, 2);
    for &tau in &TAUS {
        let r = verify_weighted_reduction(16.0, tau, &[(1, f1.clone())]).unwrap();
        println!("tau {tau:8.2}  ratio {:.6e}", r.ratio);
    }

    println!("== full carleman, potential pair u = grad(phi), f = -lap(phi) ==");
    // phi = P(t) cos(theta):
    //   u1 = d1 phi, u2 = d2 phi (analytic), f = -e^{2t}(P'' - P) cos(theta)
    // so g = Delta u + grad f is pure discretization mismatch.
    for &(nt, nth) in &[(1024usize, 256usize), (2048, 256)] {
        let grid = LogPolarGrid::new(0.0, 6.0, nt, nth).unwrap();
        let p = TestFunction1D::single_bump(2.0, 3.5);
        let u = PolarVectorField::from_fn(grid, |t, th| {
            let (s, c) = th.sin_cos();
            let et = t.exp();
            let (pv, pd) = (p.eval(t), p.deriv(t));
            // d1 = -e^t(cos th d_t + sin th d_th), d2 = e^t(-sin th d_t + cos th d_th)
            [
                -et * (c * pd * c + s * pv * (-s)),
                et * (-s * pd * c + c * pv * (-s)),
            ]
        });
        let pdd = |t: f64| {
            let e = 1e-5;
            (p.deriv(t + e) - p.deriv(t - e)) / (2.0 * e)
        };
        let f = PolarScalarField::from_fn(grid, |t, th| {
            -(2.0 * t).exp() * (pdd(t) - p.eval(t)) * th.cos()
        });
        print!("{nt}x{nth}: ");
        for &tau in &TAUS {
            let w = CarlemanWeight::new(tau, delta).unwrap();
            match verify_full_carleman(&w, &u, &f) {
                Ok(r) => print!(" {:.4}", r.ratio),
                Err(e) => print!(" ERR({e})"),
            }
        }
        println!();
    }
}
