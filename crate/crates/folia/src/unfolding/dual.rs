use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::extalg::{DiffForm, PointQ};
use crate::poly::PolyRing;

/// Differential `q`-form on `X x Spec(k[eps]/(eps^2))`, decomposed into the
/// four slots
///
/// ```text
/// base + eps * eps_part + deps_part ^ deps + eps * (eps_deps_part ^ deps)
/// ```
///
/// with `eps^2 = 0` and `deps` an odd generator. First-order unfoldings
/// never need higher powers of `eps`, and the fixed slots make the
/// unfolding equations direct slot computations.
#[derive(Clone, PartialEq, Eq)]
pub struct DualForm {
    base: DiffForm,
    eps: DiffForm,
    deps: DiffForm,
    eps_deps: DiffForm,
}

impl DualForm {
    pub fn new(base: DiffForm, eps: DiffForm, deps: DiffForm, eps_deps: DiffForm) -> Result<Self> {
        let q = base.degree();
        let ring = base.ring();
        for part in [&eps, &deps, &eps_deps] {
            if !part.ring().same(ring) {
                return Err(Error::RingMismatch);
            }
        }
        if eps.degree() != q {
            return Err(Error::FormDegreeMismatch { expected: q, got: eps.degree() });
        }
        if q == 0 {
            if !deps.is_zero() || !eps_deps.is_zero() {
                return Err(Error::FormDegreeMismatch { expected: 0, got: 0 });
            }
        } else {
            for part in [&deps, &eps_deps] {
                if part.degree() != q - 1 {
                    return Err(Error::FormDegreeMismatch {
                        expected: q - 1,
                        got: part.degree(),
                    });
                }
            }
        }
        Ok(DualForm { base, eps, deps, eps_deps })
    }

    /// A purely classical form: no `eps` and no `deps` slots.
    pub fn from_base(base: DiffForm) -> Self {
        let ring = base.ring().clone();
        let q = base.degree();
        let lower = q.saturating_sub(1);
        DualForm {
            eps: DiffForm::zero(ring.clone(), q),
            deps: DiffForm::zero(ring.clone(), lower),
            eps_deps: DiffForm::zero(ring, lower),
            base,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        self.base.ring()
    }

    pub fn degree(&self) -> usize {
        self.base.degree()
    }

    pub fn base(&self) -> &DiffForm {
        &self.base
    }

    pub fn eps_part(&self) -> &DiffForm {
        &self.eps
    }

    pub fn deps_part(&self) -> &DiffForm {
        &self.deps
    }

    pub fn eps_deps_part(&self) -> &DiffForm {
        &self.eps_deps
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.eps.is_zero() && self.deps.is_zero() && self.eps_deps.is_zero()
    }

    /// Restriction to the closed point: set `eps = 0`, `deps = 0`.
    pub fn restrict(&self) -> DiffForm {
        self.base.clone()
    }

    /// Wedge over `S[eps]/(eps^2)` with `deps` odd.
    pub fn wedge(&self, other: &DualForm) -> DualForm {
        let ring = self.base.ring().clone();
        let q = self.degree() + other.degree();
        // zero slots of 0-forms are stored at a dummy degree, so contributions
        // are accumulated only when nonzero
        let acc = |target: &mut DiffForm, f: DiffForm| {
            if !f.is_zero() {
                *target = &*target + &f;
            }
        };
        let qo = other.degree();
        let sign = |f: DiffForm| if qo % 2 == 1 { -&f } else { f };

        let base = self.base.wedge(&other.base);
        let mut eps = DiffForm::zero(ring.clone(), q);
        acc(&mut eps, self.base.wedge(&other.eps));
        acc(&mut eps, self.eps.wedge(&other.base));
        let mut deps = DiffForm::zero(ring.clone(), q.saturating_sub(1));
        acc(&mut deps, self.base.wedge(&other.deps));
        acc(&mut deps, sign(self.deps.wedge(&other.base)));
        let mut eps_deps = DiffForm::zero(ring, q.saturating_sub(1));
        acc(&mut eps_deps, self.base.wedge(&other.eps_deps));
        acc(&mut eps_deps, self.eps.wedge(&other.deps));
        acc(&mut eps_deps, sign(self.deps.wedge(&other.eps)));
        acc(&mut eps_deps, sign(self.eps_deps.wedge(&other.base)));
        DualForm { base, eps, deps, eps_deps }
    }

    /// de Rham differential treating `eps` as a coordinate:
    /// `d(eps a) = deps ^ a + eps da`, `d(b ^ deps) = db ^ deps`.
    pub fn derivative(&self) -> DualForm {
        let ring = self.base.ring().clone();
        let q = self.degree();
        let sign = |f: DiffForm| if q % 2 == 1 { -&f } else { f };
        let mut deps = DiffForm::zero(ring.clone(), q);
        if q > 0 && !self.deps.is_zero() {
            deps = &deps + &self.deps.exterior_derivative();
        }
        if !self.eps.is_zero() {
            deps = &deps + &sign(self.eps.clone());
        }
        let eps_deps = if q > 0 && !self.eps_deps.is_zero() {
            self.eps_deps.exterior_derivative()
        } else {
            DiffForm::zero(ring, q)
        };
        DualForm {
            base: self.base.exterior_derivative(),
            eps: self.eps.exterior_derivative(),
            deps,
            eps_deps,
        }
    }

    /// Is some slot of the evaluation at `(p, eps = 0)` nonzero? The `deps`
    /// slot counts: `w + deps` never vanishes even where `w` does.
    pub fn nonvanishing_at(&self, p: &PointQ) -> Result<bool> {
        Ok(!self.base.evaluate(p)?.is_zero() || !self.deps.evaluate(p)?.is_zero())
    }
}

impl Add for &DualForm {
    type Output = DualForm;

    fn add(self, rhs: &DualForm) -> DualForm {
        DualForm {
            base: &self.base + &rhs.base,
            eps: &self.eps + &rhs.eps,
            deps: &self.deps + &rhs.deps,
            eps_deps: &self.eps_deps + &rhs.eps_deps,
        }
    }
}

impl Sub for &DualForm {
    type Output = DualForm;

    fn sub(self, rhs: &DualForm) -> DualForm {
        self + &(-rhs)
    }
}

impl Neg for &DualForm {
    type Output = DualForm;

    fn neg(self) -> DualForm {
        DualForm {
            base: -&self.base,
            eps: -&self.eps,
            deps: -&self.deps,
            eps_deps: -&self.eps_deps,
        }
    }
}

impl fmt::Debug for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + eps*({}) + ({})^deps + eps*({})^deps",
            self.base, self.eps, self.deps, self.eps_deps
        )
    }
}
