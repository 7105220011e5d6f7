//! Exact construction and classification of extensions of finite-dimensional
//! unital associative algebras, with coalgebra and Poisson variants.

pub mod algebra;
pub mod catalog;
pub mod coalgebra;
pub mod coflag;
pub mod error;
pub mod gh2_brute;
pub mod hochschild;
pub mod io;
pub mod linalg;
pub mod poisson;
pub mod report;
pub mod scalar;
pub mod search;
pub mod tower;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use report::ValidationReport;
pub use scalar::{Field, Scalar};
