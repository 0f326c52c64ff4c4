//! Exterior algebra of polynomial differential forms and multivectors.

mod form;
mod multivector;
mod point;
mod tuple;

pub use form::DiffForm;
pub use multivector::MultiVector;
pub use point::PointQ;
pub use tuple::{binomial, tuples, IndexTuple};
