//! CSV layout for fields: `#`-prefixed comment lines carry the grid
//! parameters (gnuplot-compatible), then a header row and one row per node.

use super::{PolarScalarField, PolarVectorField, ScalarField, VectorField};
use std::io::{self, Write};

impl ScalarField {
    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        let g = self.grid();
        writeln!(w, "# grid: cartesian")?;
        writeln!(w, "# half_width: {}", g.half_width())?;
        writeln!(w, "# points_per_side: {}", g.n())?;
        writeln!(w, "x,y,v")?;
        for iy in 0..g.n() {
            for ix in 0..g.n() {
                let p = g.node(ix, iy);
                writeln!(w, "{},{},{}", p[0], p[1], self.at(ix, iy))?;
            }
        }
        Ok(())
    }
}

impl VectorField {
    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        let g = self.grid();
        writeln!(w, "# grid: cartesian")?;
        writeln!(w, "# half_width: {}", g.half_width())?;
        writeln!(w, "# points_per_side: {}", g.n())?;
        writeln!(w, "x,y,u1,u2")?;
        for iy in 0..g.n() {
            for ix in 0..g.n() {
                let p = g.node(ix, iy);
                let v = self.at(ix, iy);
                writeln!(w, "{},{},{},{}", p[0], p[1], v[0], v[1])?;
            }
        }
        Ok(())
    }
}

impl PolarScalarField {
    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        let g = self.grid();
        writeln!(w, "# grid: log-polar")?;
        writeln!(w, "# t_min: {}", g.t_min())?;
        writeln!(w, "# t_max: {}", g.t_max())?;
        writeln!(w, "# t_count: {}", g.t_count())?;
        writeln!(w, "# theta_count: {}", g.theta_count())?;
        writeln!(w, "t,theta,v")?;
        for it in 0..g.t_count() {
            for ith in 0..g.theta_count() {
                writeln!(w, "{},{},{}", g.t(it), g.theta(ith), self.at(it, ith))?;
            }
        }
        Ok(())
    }
}

impl PolarVectorField {
    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        let g = self.grid();
        writeln!(w, "# grid: log-polar")?;
        writeln!(w, "# t_min: {}", g.t_min())?;
        writeln!(w, "# t_max: {}", g.t_max())?;
        writeln!(w, "# t_count: {}", g.t_count())?;
        writeln!(w, "# theta_count: {}", g.theta_count())?;
        writeln!(w, "t,theta,u1,u2")?;
        for it in 0..g.t_count() {
            for ith in 0..g.theta_count() {
                let v = self.at(it, ith);
                writeln!(w, "{},{},{},{}", g.t(it), g.theta(ith), v[0], v[1])?;
            }
        }
        Ok(())
    }
}
