//! Singularity analysis of foliation forms: descent/Pluecker/integrability
//! checks, the ideals `J`, `I`, `K`, the tangent 1-form module `E` with its
//! decomposability defect, and point-wise Kupka/persistence predicates.

mod form;
mod frame;
mod ideals;
mod oracle;
mod report;

pub use form::{Ambient, FoliationForm};
pub use frame::{decomposability_defect, tangent_frame, TangentFrame};
pub use ideals::{kupka_ideal, persistent_ideal, persistent_ideal_with_frame, singular_ideal};
pub use oracle::{graded_dimension, oracle_with_frame, persistent_truncation_oracle};
pub use report::{
    inclusion_report, is_persistent_point, AnalysisReport, Checks, Dimensions, Inclusions,
};

pub(crate) use frame::form_to_vec;
