//! Exact symbolic toolkit for singular foliations given by polynomial
//! differential forms.
//!
//! The crate computes, over the rationals and without any numerical
//! tolerance:
//!
//! - exterior algebra of polynomial differential forms and multivectors
//!   (wedge, de Rham differential, contraction, Euler contraction);
//! - Groebner-basis machinery for ideals and submodules of free modules
//!   (membership, syzygies, kernels, quotients, intersections, radical
//!   membership, Krull dimension);
//! - the singularity ideals of a foliation form: the singular ideal `J`,
//!   the persistent-singularity ideal `I` and the Kupka ideal `K`, together
//!   with integrability/decomposability checks, the module of tangent
//!   1-forms and inclusion/dimension reports;
//! - first-order infinitesimal unfoldings over the dual numbers
//!   `k[eps]/(eps^2)`, both construction and direct verification.
//!
//! A small text format (see [`dsl`]) describes rings, forms and points; the
//! `folia` binary exposes the analyses as subcommands and the `examples/`
//! directory shows one runnable program per capability.

pub mod error;
pub mod rational;

pub mod poly;

pub mod extalg;
pub mod linalg;

pub mod groebner;

pub mod foliation;
pub mod unfolding;

pub mod dsl;
pub mod report;

pub mod corpus;

pub use error::{Error, Result};
