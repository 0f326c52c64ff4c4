//! First-order infinitesimal unfoldings over `k[eps]/(eps^2)`: the
//! dual-number exterior algebra, construction of unfoldings from flatness
//! data, and direct verification of the unfolding equations.

mod build;
mod dual;

pub use build::{
    build_unfolding_along_flow, build_unfolding_codim1, build_unfolding_codimq, solve_flatness,
    verify_unfolding, UnfoldingDatum,
};
pub use dual::DualForm;
