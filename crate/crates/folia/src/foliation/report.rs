use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extalg::PointQ;
use crate::groebner::Ideal;

use super::form::FoliationForm;
use super::frame::{decomposability_defect, tangent_frame};
use super::ideals::{kupka_ideal, persistent_ideal_with_frame, singular_ideal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checks {
    pub plucker: bool,
    pub frobenius: bool,
    /// `None` for affine ambients, where descent is not defined.
    pub descent: Option<bool>,
    /// Singular locus has codimension at least 2.
    pub torsion_free_codim: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inclusions {
    pub j_in_i: bool,
    pub i_in_k: bool,
    pub j_in_k: bool,
    /// Whether `I <= K` is backed by the locally-decomposable hypothesis
    /// (defect ideal is the unit ideal; always so in codimension 1). When
    /// false, `i_in_k` is a computed fact about this instance only.
    pub i_in_k_asserted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimensions {
    pub singular: i64,
    pub persistent: i64,
    pub kupka: i64,
}

/// Complete singularity analysis of one foliation form.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub checks: Checks,
    pub singular: Ideal,
    pub persistent: Ideal,
    pub kupka: Ideal,
    pub defect: Ideal,
    pub inclusions: Inclusions,
    pub dimensions: Dimensions,
}

/// Run every check and ideal computation on an integrable form.
///
/// Inclusion booleans are generator-wise membership facts. The chain
/// `J <= I <= K` is a theorem for locally decomposable forms; when the
/// decomposability defect is proper the `I <= K` entry is still computed
/// but flagged as not asserted.
pub fn inclusion_report(w: &FoliationForm) -> Result<AnalysisReport> {
    let plucker = w.check_plucker();
    let frobenius = w.check_integrability();
    if !frobenius {
        return Err(Error::NotIntegrable);
    }
    let descent = if w.ambient().is_projective() {
        Some(w.check_descent()?)
    } else {
        None
    };

    let frame = tangent_frame(w)?;
    let singular = singular_ideal(w);
    let persistent = persistent_ideal_with_frame(w, &frame)?;
    let kupka = kupka_ideal(w)?;
    let defect = decomposability_defect(w, &frame)?;

    let torsion_free_codim = if singular.is_unit()? {
        true
    } else {
        singular.dimension()? <= w.ring().nvars() as i64 - 2
    };

    let j_in_i = persistent.contains_ideal(&singular)?;
    let i_in_k = kupka.contains_ideal(&persistent)?;
    let j_in_k = kupka.contains_ideal(&singular)?;
    let i_in_k_asserted = defect.is_unit()? && i_in_k;

    let dimensions = Dimensions {
        singular: singular.dimension()?,
        persistent: persistent.dimension()?,
        kupka: kupka.dimension()?,
    };

    Ok(AnalysisReport {
        checks: Checks { plucker, frobenius, descent, torsion_free_codim },
        singular,
        persistent,
        kupka,
        defect,
        inclusions: Inclusions { j_in_i, i_in_k, j_in_k, i_in_k_asserted },
        dimensions,
    })
}

/// Is `p` a persistent singular point: every generator of the (graded)
/// persistent ideal vanishes at `p`. Errors when `p` is not singular.
pub fn is_persistent_point(w: &FoliationForm, p: &PointQ) -> Result<bool> {
    let j = singular_ideal(w);
    for g in j.generators() {
        if !g.evaluate(p.coords())?.is_zero() {
            return Err(Error::PointNotSingular);
        }
    }
    let i = persistent_ideal_with_frame(w, &tangent_frame(w)?)?;
    for g in i.generators() {
        if !g.evaluate(p.coords())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
