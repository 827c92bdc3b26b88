//! Exact linear algebra over the rationals and odd prime fields.

mod echelon;
mod field;
mod sparse;
mod subspace;

pub use echelon::{kernel_of_images, rank, rank_of_images, reduce, transpose, Reduction};
pub use field::{parse_ratio, Field, FieldSpec, PrimeField, Rationals};
pub use sparse::{Accumulator, SparseVec};
pub use subspace::{Quotient, QuotientSpace, SubspaceBasis};
