//! Exact sparse multivariate polynomial arithmetic over the rationals.

mod monomial;
mod order;
mod polynomial;
mod ring;

pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use polynomial::Polynomial;
pub use ring::PolyRing;
