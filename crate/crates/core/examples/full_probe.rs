//! Scratch probe for the 2-D estimate: which data shapes keep the sampled
//! ratio flat across the τ sweep?

use ucplab_core::carleman::{verify_full_carleman, TestFunction1D};
use ucplab_core::fields::{LogPolarGrid, PolarScalarField, PolarVectorField};
use ucplab_core::weights::CarlemanWeight;

const TAUS: [f64; 5] = [8.25, 16.25, 32.25, 64.25, 128.25];

fn run(name: &str, grid: LogPolarGrid, u: &PolarVectorField, f: &PolarScalarField) {
    let _ = grid;
    print!("{name:34}: ");
    let mut ratios = Vec::new();
    for &tau in &TAUS {
        let w = CarlemanWeight::new(tau, 1.0 / 16.0).unwrap();
        match verify_full_carleman(&w, u, f) {
            Ok(r) => {
                print!(" {:.4}", r.ratio);
                ratios.push(r.ratio);
            }
            Err(e) => print!(" ERR({e})"),
        }
    }
    let max = ratios.iter().cloned().fold(0.0f64, f64::max);
    let min = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let max3 = ratios.iter().take(3).cloned().fold(0.0f64, f64::max);
    let min3 = ratios.iter().take(3).cloned().fold(f64::INFINITY, f64::min);
    println!("  | max/min {:.3}  (first3 {:.3})", max / min, max3 / min3);
}

fn main() {
    let grid = LogPolarGrid::new(0.0, 8.0, 1024, 256).unwrap();

    for (label, lo, hi) in
        [("narrow (2,3)", 2.0, 3.0), ("medium (2,4)", 2.0, 4.0), ("wide (1.5,5.5)", 1.5, 5.5)]
    {
        let b = TestFunction1D::single_bump(lo, hi);
        let u = PolarVectorField::from_fn(grid, |t, th| [b.eval(t) * th.cos(), 0.0]);
        let f = PolarScalarField::from_fn(grid, |_, _| 0.0);
        run(&format!("f=0, u=bump{label} cos"), grid, &u, &f);
    }

    // two-bump seeded radial profiles
    for seed in [1u64, 2, 3] {
        let b = TestFunction1D::seeded(seed, 2.0, 5.0, 2);
        let u = PolarVectorField::from_fn(grid, |t, th| {
            [b.eval(t) * th.cos(), 0.3 * b.eval(t) * (2.0 * th).sin()]
        });
        let f = PolarScalarField::from_fn(grid, |_, _| 0.0);
        run(&format!("f=0, seeded {seed}"), grid, &u, &f);
    }

    // matched-amplitude f on the same radial profile
    let b = TestFunction1D::single_bump(2.0, 4.0);
    for cf in [10.0, 100.0, 1000.0, 10000.0] {
        let u = PolarVectorField::from_fn(grid, |t, th| [b.eval(t) * th.cos(), 0.0]);
        let f = PolarScalarField::from_fn(grid, |t, th| cf * b.eval(t) * th.cos());
        run(&format!("f = {cf} * bump cos"), grid, &u, &f);
    }

    // u = 0 limit: pure-f data (lhs = 0) is vacuous; small u instead
    for eps in [1e-3, 1e-2] {
        let u = PolarVectorField::from_fn(grid, |t, th| [eps * b.eval(t) * th.cos(), 0.0]);
        let f = PolarScalarField::from_fn(grid, |t, th| b.eval(t) * th.cos());
        run(&format!("u = {eps} * bump, f = bump"), grid, &u, &f);
    }
}
