//! Exact linear algebra for superalgebras, cyclic homology in low degrees,
//! matrix and Steinberg Lie superalgebras, and Chevalley–Eilenberg homology.

pub mod algfile;
pub mod cyclic;
pub mod error;
pub mod homology;
pub mod lie;
pub mod linear;
pub mod matrix;
pub mod parity;
pub mod steinberg;
pub mod superalgebra;
pub mod uce22;

pub use algfile::AnyAlgebra;
pub use error::{Error, Result};
pub use lie::FinLieSuper;
pub use matrix::MatrixShape;
pub use parity::Parity;
pub use steinberg::StModel;
pub use superalgebra::{Builtin, SuperAlgebra};
