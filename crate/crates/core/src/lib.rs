//! Exact computations with finite-dimensional semisimple Hopf algebras given by
//! structure constants over cyclotomic fields.

pub mod coideal;
pub mod corpus;
pub mod error;
pub mod harmonic;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod solvability;

pub use error::{Error, Result};
pub use hopf::HopfData;
pub use scalar::{CyclotomicOrder, Scalar};
