use crate::error::{Error, Result};
use crate::extalg::{tuples, DiffForm, MultiVector, PointQ};
use crate::poly::PolyRing;

/// Where the foliation lives: affine `A^n` (the ring has `n` variables) or
/// projective `P^n` (homogeneous coordinates, `n + 1` variables).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Affine(usize),
    Projective(usize),
}

impl Ambient {
    pub fn nvars(&self) -> usize {
        match *self {
            Ambient::Affine(n) => n,
            Ambient::Projective(n) => n + 1,
        }
    }

    /// Dimension of the variety itself.
    pub fn dim(&self) -> usize {
        match *self {
            Ambient::Affine(n) | Ambient::Projective(n) => n,
        }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, Ambient::Projective(_))
    }
}

impl std::fmt::Display for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ambient::Affine(n) => write!(f, "affine({})", n),
            Ambient::Projective(n) => write!(f, "projective({})", n),
        }
    }
}

/// A polynomial `q`-form proposed as the defining form of a codimension-`q`
/// foliation.
///
/// Construction rejects the zero form and out-of-range degrees; the
/// geometric conditions (descent to projective space, Pluecker relations,
/// integrability) are separate checks so that failing inputs can still be
/// analyzed and reported.
#[derive(Debug, Clone)]
pub struct FoliationForm {
    form: DiffForm,
    ambient: Ambient,
}

impl FoliationForm {
    pub fn new(form: DiffForm, ambient: Ambient) -> Result<Self> {
        if form.ring().nvars() != ambient.nvars() {
            return Err(Error::AmbientMismatch {
                ring_vars: form.ring().nvars(),
                ambient_vars: ambient.nvars(),
            });
        }
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        let q = form.degree();
        if q < 1 || q + 1 > ambient.dim() {
            return Err(Error::InvalidFormDegree { degree: q, nvars: ambient.nvars() });
        }
        Ok(FoliationForm { form, ambient })
    }

    pub fn form(&self) -> &DiffForm {
        &self.form
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn ring(&self) -> &PolyRing {
        self.form.ring()
    }

    pub fn codimension(&self) -> usize {
        self.form.degree()
    }

    /// Twist `e` of a homogeneous projective `q`-form: the components have
    /// degree `e - q`. `None` for affine or inhomogeneous forms.
    pub fn twist_degree(&self) -> Option<u32> {
        if !self.ambient.is_projective() {
            return None;
        }
        let d = self.form.homogeneous_component_degree()?;
        Some(d + self.form.degree() as u32)
    }

    /// Pluecker relations: `i_X(w) ^ w = 0` for every coordinate
    /// `(q-1)`-multivector; by multilinearity this covers all of them.
    pub fn check_plucker(&self) -> bool {
        let n = self.ring().nvars();
        let q = self.form.degree();
        for t in tuples(n, q - 1) {
            let xi = MultiVector::basis(self.ring(), t.indices());
            let contracted = xi.contract(&self.form).expect("degree q-1 <= q");
            if !contracted.wedge(&self.form).is_zero() {
                return false;
            }
        }
        true
    }

    /// Frobenius integrability: `w ^ dw = 0` for 1-forms, and for `q >= 2`
    /// the Pluecker relations together with `d(i_X(w)) ^ w = 0` for every
    /// coordinate `(q-1)`-multivector.
    pub fn check_integrability(&self) -> bool {
        let q = self.form.degree();
        if q == 1 {
            return self
                .form
                .wedge(&self.form.exterior_derivative())
                .is_zero();
        }
        if !self.check_plucker() {
            return false;
        }
        let n = self.ring().nvars();
        for t in tuples(n, q - 1) {
            let xi = MultiVector::basis(self.ring(), t.indices());
            let contracted = xi.contract(&self.form).expect("degree q-1 <= q");
            if !contracted
                .exterior_derivative()
                .wedge(&self.form)
                .is_zero()
            {
                return false;
            }
        }
        true
    }

    /// Does the form descend to projective space: homogeneous components of
    /// one common degree and zero contraction with the Euler field.
    pub fn check_descent(&self) -> Result<bool> {
        if !self.ambient.is_projective() {
            return Err(Error::NotProjective);
        }
        Ok(self.form.homogeneous_component_degree().is_some()
            && self.form.radial_contraction().is_zero())
    }

    /// Kupka condition at a point: `w(p) = 0` and `dw(p) != 0`.
    pub fn is_kupka_point(&self, p: &PointQ) -> Result<bool> {
        let at = self.form.evaluate(p)?;
        if !at.is_zero() {
            return Ok(false);
        }
        Ok(!self.form.exterior_derivative().evaluate(p)?.is_zero())
    }
}
