use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{PolyRing, Polynomial};
use crate::rational::Rational;

use super::point::PointQ;
use super::tuple::IndexTuple;

/// Polynomial differential form of a fixed degree.
///
/// Components are stored on strictly increasing index tuples only; user
/// input is normalized by sorting with the permutation sign, and zero
/// components are never kept. Degree-0 forms carry a single component on
/// the empty tuple and interconvert with [`Polynomial`].
#[derive(Clone, PartialEq, Eq)]
pub struct DiffForm {
    ring: PolyRing,
    degree: usize,
    comps: BTreeMap<IndexTuple, Polynomial>,
}

impl DiffForm {
    pub fn zero(ring: PolyRing, degree: usize) -> Self {
        DiffForm { ring, degree, comps: BTreeMap::new() }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let ring = p.ring().clone();
        let mut comps = BTreeMap::new();
        if !p.is_zero() {
            comps.insert(IndexTuple::empty(), p);
        }
        DiffForm { ring, degree: 0, comps }
    }

    /// `c * dx_{i1} ^ ... ^ dx_{iq}` for arbitrary (possibly unsorted) indices.
    pub fn term(ring: &PolyRing, coeff: Polynomial, indices: &[usize]) -> Result<Self> {
        let mut f = DiffForm::zero(ring.clone(), indices.len());
        f.add_term(coeff, indices)?;
        Ok(f)
    }

    /// `dx_i` as a 1-form.
    pub fn basis_one_form(ring: &PolyRing, i: usize) -> Self {
        DiffForm::term(ring, ring.one(), &[i]).expect("basis index in range")
    }

    pub fn from_components<I>(ring: &PolyRing, degree: usize, comps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Polynomial)>,
    {
        let mut f = DiffForm::zero(ring.clone(), degree);
        for (idx, c) in comps {
            if idx.len() != degree {
                return Err(Error::FormDegreeMismatch { expected: degree, got: idx.len() });
            }
            f.add_term(c, &idx)?;
        }
        Ok(f)
    }

    fn add_term(&mut self, coeff: Polynomial, indices: &[usize]) -> Result<()> {
        if indices.len() != self.degree {
            return Err(Error::FormDegreeMismatch { expected: self.degree, got: indices.len() });
        }
        for &i in indices {
            if i >= self.ring.nvars() {
                return Err(Error::IndexOutOfRange { index: i, nvars: self.ring.nvars() });
            }
        }
        if coeff.is_zero() || self.degree > self.ring.nvars() {
            return Ok(());
        }
        let (tuple, negative) = match IndexTuple::normalize(indices) {
            Some(t) => t,
            None => return Ok(()),
        };
        let coeff = if negative { -&coeff } else { coeff };
        let entry = self
            .comps
            .entry(tuple)
            .or_insert_with(|| self.ring.zero());
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            let tuple = IndexTuple::normalize(indices).unwrap().0;
            self.comps.remove(&tuple);
        }
        Ok(())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&IndexTuple, &Polynomial)> {
        self.comps.iter()
    }

    pub fn num_components(&self) -> usize {
        self.comps.len()
    }

    /// Coefficient on an arbitrary index tuple (normalized with sign).
    pub fn component(&self, indices: &[usize]) -> Polynomial {
        match IndexTuple::normalize(indices) {
            None => self.ring.zero(),
            Some((t, negative)) => match self.comps.get(&t) {
                None => self.ring.zero(),
                Some(p) => {
                    if negative {
                        -p
                    } else {
                        p.clone()
                    }
                }
            },
        }
    }

    /// The unique component of a degree-0 form.
    pub fn as_polynomial(&self) -> Polynomial {
        assert_eq!(self.degree, 0, "not a 0-form");
        self.comps
            .get(&IndexTuple::empty())
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn scale(&self, c: &Rational) -> DiffForm {
        self.map_coeffs(|p| p.scaled(c))
    }

    pub fn scale_poly(&self, g: &Polynomial) -> DiffForm {
        assert!(self.ring.same(g.ring()), "ring mismatch");
        self.map_coeffs(|p| p * g)
    }

    fn map_coeffs<F: Fn(&Polynomial) -> Polynomial>(&self, f: F) -> DiffForm {
        let comps = self
            .comps
            .iter()
            .filter_map(|(t, p)| {
                let q = f(p);
                if q.is_zero() {
                    None
                } else {
                    Some((t.clone(), q))
                }
            })
            .collect();
        DiffForm { ring: self.ring.clone(), degree: self.degree, comps }
    }

    pub fn checked_wedge(&self, other: &DiffForm) -> Result<DiffForm> {
        if !self.ring.same(&other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.wedge(other))
    }

    /// Antisymmetric product. Degrees beyond the variable count collapse
    /// to the zero form.
    pub fn wedge(&self, other: &DiffForm) -> DiffForm {
        assert!(self.ring.same(&other.ring), "ring mismatch");
        let degree = self.degree + other.degree;
        let mut out = DiffForm::zero(self.ring.clone(), degree);
        if degree > self.ring.nvars() {
            return out;
        }
        for (ta, pa) in &self.comps {
            for (tb, pb) in &other.comps {
                if let Some((t, negative)) = ta.merge(tb) {
                    let mut c = pa * pb;
                    if negative {
                        c = -&c;
                    }
                    let entry = out.comps.entry(t).or_insert_with(|| self.ring.zero());
                    *entry = &*entry + &c;
                }
            }
        }
        out.comps.retain(|_, p| !p.is_zero());
        out
    }

    /// de Rham differential: `d(f dx_I) = sum_j (df/dx_j) dx_j ^ dx_I`.
    pub fn exterior_derivative(&self) -> DiffForm {
        let mut out = DiffForm::zero(self.ring.clone(), self.degree + 1);
        if self.degree + 1 > self.ring.nvars() {
            return out;
        }
        for (t, p) in &self.comps {
            for j in 0..self.ring.nvars() {
                let dp = p.partial_derivative(j).expect("index in range");
                if dp.is_zero() {
                    continue;
                }
                if let Some((nt, negative)) = IndexTuple::new(&[j]).merge(t) {
                    let c = if negative { -&dp } else { dp };
                    let entry = out.comps.entry(nt).or_insert_with(|| self.ring.zero());
                    *entry = &*entry + &c;
                }
            }
        }
        out.comps.retain(|_, p| !p.is_zero());
        out
    }

    /// Contraction with the Euler field `R = sum_i x_i d/dx_i`.
    pub fn radial_contraction(&self) -> DiffForm {
        let mut out = DiffForm::zero(self.ring.clone(), self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (t, p) in &self.comps {
            for (pos, &i) in t.indices().iter().enumerate() {
                let mut c = p * &self.ring.var(i);
                if pos % 2 == 1 {
                    c = -&c;
                }
                let nt = t.without_position(pos);
                let entry = out.comps.entry(nt).or_insert_with(|| self.ring.zero());
                *entry = &*entry + &c;
            }
        }
        out.comps.retain(|_, p| !p.is_zero());
        out
    }

    /// Evaluate every component at a point, producing a constant form.
    pub fn evaluate(&self, p: &PointQ) -> Result<DiffForm> {
        if p.dim() != self.ring.nvars() {
            return Err(Error::PointDimensionMismatch {
                expected: self.ring.nvars(),
                got: p.dim(),
            });
        }
        let mut out = DiffForm::zero(self.ring.clone(), self.degree);
        for (t, poly) in &self.comps {
            let v = poly.evaluate(p.coords())?;
            let c = Polynomial::constant(self.ring.clone(), v);
            if !c.is_zero() {
                out.comps.insert(t.clone(), c);
            }
        }
        Ok(out)
    }

    /// Ideal generated by all components; equals the image of contraction
    /// by every coordinate multivector of complementary degree.
    pub fn coefficient_ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.comps.values().cloned().collect())
    }

    /// The consistent polynomial quotient `c` with `self = c * other`,
    /// `None` when no such polynomial exists.
    pub fn exact_div_form(&self, other: &DiffForm) -> Result<Option<Polynomial>> {
        assert!(self.ring.same(&other.ring), "ring mismatch");
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree != other.degree {
            return Ok(None);
        }
        if self.is_zero() {
            return Ok(Some(self.ring.zero()));
        }
        let (t0, p0) = other.comps.iter().next().expect("nonzero form");
        let candidate = match self.comps.get(t0) {
            None => return Ok(None),
            Some(q0) => match q0.exact_div(p0)? {
                None => return Ok(None),
                Some(c) => c,
            },
        };
        if other.scale_poly(&candidate) == *self {
            Ok(Some(candidate))
        } else {
            Ok(None)
        }
    }

    /// Common homogeneous degree of all components; `Some(0)` for the zero
    /// form, `None` when components are inhomogeneous or of mixed degrees.
    pub fn homogeneous_component_degree(&self) -> Option<u32> {
        let mut degrees = self.comps.values().map(|p| p.homogeneous_degree());
        let first = match degrees.next() {
            None => return Some(0),
            Some(d) => d?,
        };
        for d in degrees {
            if d? != first {
                return None;
            }
        }
        Some(first)
    }

    /// Largest total degree among components (0 for the zero form).
    pub fn max_component_degree(&self) -> u32 {
        self.comps
            .values()
            .filter_map(|p| p.total_degree())
            .max()
            .unwrap_or(0)
    }
}

impl Add for &DiffForm {
    type Output = DiffForm;

    fn add(self, rhs: &DiffForm) -> DiffForm {
        assert!(self.ring.same(&rhs.ring), "ring mismatch");
        assert_eq!(self.degree, rhs.degree, "form degree mismatch");
        let mut comps = self.comps.clone();
        for (t, p) in &rhs.comps {
            let entry = comps.entry(t.clone()).or_insert_with(|| self.ring.zero());
            *entry = &*entry + p;
        }
        comps.retain(|_, p| !p.is_zero());
        DiffForm { ring: self.ring.clone(), degree: self.degree, comps }
    }
}

impl Sub for &DiffForm {
    type Output = DiffForm;

    fn sub(self, rhs: &DiffForm) -> DiffForm {
        self + &(-rhs)
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;

    fn neg(self) -> DiffForm {
        DiffForm {
            ring: self.ring.clone(),
            degree: self.degree,
            comps: self.comps.iter().map(|(t, p)| (t.clone(), -p)).collect(),
        }
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.degree == 0 {
            return write!(f, "{}", self.as_polynomial());
        }
        let mut first = true;
        for (t, p) in &self.comps {
            let txt = p.to_string();
            let (neg, body) = match txt.strip_prefix('-') {
                Some(rest) if p.num_terms() == 1 => (true, rest.to_string()),
                _ => (false, txt),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let wedge = t
                .indices()
                .iter()
                .map(|&i| format!("d{}", self.ring.var_name(i)))
                .collect::<Vec<_>>()
                .join("^");
            if p.is_constant() && (p.is_one() || neg && body == "1") {
                write!(f, "{}", wedge)?;
            } else if p.num_terms() == 1 {
                write!(f, "{}*{}", body, wedge)?;
            } else {
                write!(f, "({})*{}", body, wedge)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
