//! Laplace spectra of round spheres and Berger 3-spheres, and Jacobi index and
//! nullity of totally geodesic Berger slices in Einstein 4-manifolds.

pub mod berger;
pub mod cli;
pub mod error;
pub mod harmonic;
pub mod jacobi;
pub mod output;
pub mod rational;
pub mod slices;

pub use error::{Error, Result};
