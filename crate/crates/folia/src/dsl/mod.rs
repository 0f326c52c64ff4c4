//! The `.fol` input language: ring/form/point/frame declarations with a
//! canonical printer that round-trips through the parser.
//!
//! ```text
//! ring projective x0 x1 x2 x3;
//! form w = -x3*dx1^dx2 + x2*dx1^dx3 - x1*dx2^dx3;
//! point p = (1, 0, 0, 0);
//! ```
//!
//! `^` wedges forms and exponentiates scalars; `*` multiplies by scalar
//! polynomials; `#` starts a line comment.

mod doc;
mod lex;
mod parse;

pub use doc::{InputDocument, Item};
pub use lex::{ParseError, Pos};
pub use parse::{parse, parse_with_order};
