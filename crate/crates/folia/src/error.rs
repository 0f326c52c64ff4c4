use thiserror::Error;

/// Errors shared by the polynomial, exterior-algebra and ideal layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("operands belong to different polynomial rings")]
    RingMismatch,

    #[error("variable index {index} out of range for ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("point has {got} coordinates, ring has {expected} variables")]
    PointDimensionMismatch { expected: usize, got: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("contraction degree {vector} exceeds form degree {form}")]
    DegreeUnderflow { vector: usize, form: usize },

    #[error("form degrees incompatible: expected {expected}, got {got}")]
    FormDegreeMismatch { expected: usize, got: usize },

    #[error("S-pair budget of {budget} exceeded; raise the limit and retry")]
    ResourceLimit { budget: usize },

    #[error("the zero form does not define a foliation")]
    ZeroForm,

    #[error("form degree {degree} invalid for an ambient with {nvars} coordinates")]
    InvalidFormDegree { degree: usize, nvars: usize },

    #[error("ring has {ring_vars} variables but the ambient needs {ambient_vars}")]
    AmbientMismatch { ring_vars: usize, ambient_vars: usize },

    #[error("operation requires a projective ambient")]
    NotProjective,

    #[error("form is not integrable")]
    NotIntegrable,

    #[error("form is not homogeneous")]
    NotHomogeneous,

    #[error("point does not lie on the singular locus")]
    PointNotSingular,

    #[error("wedge of frame generators is not a polynomial multiple of the form")]
    WedgeNotMultiple,

    #[error("eta does not satisfy d(omega) = omega ^ eta")]
    UnfoldingEtaMismatch,

    #[error("alpha matrix does not satisfy d(w_i) = sum_j alpha_ij ^ w_j")]
    FlatnessViolated,

    #[error("unfolding datum has inconsistent lengths for codimension {q}")]
    DatumLengthMismatch { q: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
