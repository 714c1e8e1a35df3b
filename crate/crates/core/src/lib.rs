//! Numerical laboratory for quantitative unique continuation in the 2-D
//! isotropic Lamé system: discrete fields and quadrature, the reduced system,
//! finite-difference solvers, the constructive Carleman weight family, 1-D and
//! 2-D Carleman-estimate verifiers, and frequency/doubling/vanishing-order
//! metrics.

pub mod carleman;
pub mod error;
pub mod fields;
pub mod lame;
pub mod library;
pub mod weights;

pub use error::{Error, Result};
pub use fields::{
    AnnulusSpec, CartesianGrid, LogPolarGrid, PolarScalarField, PolarVectorField, ScalarField,
    TensorField, VectorField,
};
pub use library::{harmonic_gradient_library, LibraryField};
