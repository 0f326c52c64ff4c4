use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

use super::form::DiffForm;
use super::tuple::IndexTuple;

/// Polynomial multivector field: an alternating tensor in the coordinate
/// vector fields `d/dx_i`. Contraction against forms follows the convention
/// `i_{u ^ v} = i_u o i_v` (the right factor contracts first).
#[derive(Clone, PartialEq, Eq)]
pub struct MultiVector {
    ring: PolyRing,
    degree: usize,
    comps: BTreeMap<IndexTuple, Polynomial>,
}

impl MultiVector {
    pub fn zero(ring: PolyRing, degree: usize) -> Self {
        MultiVector { ring, degree, comps: BTreeMap::new() }
    }

    /// `d/dx_{i1} ^ ... ^ d/dx_{ip}` with unit coefficient.
    pub fn basis(ring: &PolyRing, indices: &[usize]) -> Self {
        Self::term(ring, ring.one(), indices).expect("basis indices in range")
    }

    pub fn term(ring: &PolyRing, coeff: Polynomial, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= ring.nvars() {
                return Err(Error::IndexOutOfRange { index: i, nvars: ring.nvars() });
            }
        }
        let mut comps = BTreeMap::new();
        if !coeff.is_zero() {
            if let Some((t, negative)) = IndexTuple::normalize(indices) {
                comps.insert(t, if negative { -&coeff } else { coeff });
            }
        }
        Ok(MultiVector { ring: ring.clone(), degree: indices.len(), comps })
    }

    pub fn from_components<I>(ring: &PolyRing, degree: usize, comps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Polynomial)>,
    {
        let mut out = MultiVector::zero(ring.clone(), degree);
        for (idx, c) in comps {
            if idx.len() != degree {
                return Err(Error::FormDegreeMismatch { expected: degree, got: idx.len() });
            }
            let t = MultiVector::term(ring, c, &idx)?;
            out = &out + &t;
        }
        Ok(out)
    }

    /// The Euler (radial) field `sum_i x_i d/dx_i`.
    pub fn euler(ring: &PolyRing) -> Self {
        let comps = (0..ring.nvars())
            .map(|i| (IndexTuple::new(&[i]), ring.var(i)))
            .collect();
        MultiVector { ring: ring.clone(), degree: 1, comps }
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

    /// Wedge of multivectors, used to pin the contraction convention.
    pub fn wedge(&self, other: &MultiVector) -> MultiVector {
        assert!(self.ring.same(&other.ring), "ring mismatch");
        let degree = self.degree + other.degree;
        let mut out = MultiVector::zero(self.ring.clone(), degree);
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

    /// Iterated interior product `i_self(form)`.
    pub fn contract(&self, form: &DiffForm) -> Result<DiffForm> {
        if !self.ring.same(form.ring()) {
            return Err(Error::RingMismatch);
        }
        if self.degree > form.degree() {
            return Err(Error::DegreeUnderflow { vector: self.degree, form: form.degree() });
        }
        let mut out = DiffForm::zero(self.ring.clone(), form.degree() - self.degree);
        for (t, g) in &self.comps {
            // i_{(j1 < ... < jp)} = i_{j1} o ... o i_{jp}: contract the last
            // index first.
            let mut cur = form.clone();
            for &j in t.indices().iter().rev() {
                cur = contract_single(j, &cur);
                if cur.is_zero() {
                    break;
                }
            }
            if !cur.is_zero() {
                out = &out + &cur.scale_poly(g);
            }
        }
        Ok(out)
    }
}

/// `i_{d/dx_j}(f dx_I) = (-1)^pos f dx_{I \ j}` when `j` sits at `pos` in `I`.
fn contract_single(j: usize, form: &DiffForm) -> DiffForm {
    let ring = form.ring().clone();
    if form.degree() == 0 {
        return DiffForm::zero(ring, 0);
    }
    let mut out = DiffForm::zero(ring.clone(), form.degree() - 1);
    let mut acc: Vec<(Vec<usize>, Polynomial)> = Vec::new();
    for (t, p) in form.components() {
        if let Some(pos) = t.position(j) {
            let rest = t.without_position(pos);
            let c = if pos % 2 == 1 { -p } else { p.clone() };
            acc.push((rest.indices().to_vec(), c));
        }
    }
    for (idx, c) in acc {
        let term = DiffForm::term(&ring, c, &idx).expect("indices already valid");
        out = &out + &term;
    }
    out
}

impl std::ops::Add for &MultiVector {
    type Output = MultiVector;

    fn add(self, rhs: &MultiVector) -> MultiVector {
        assert!(self.ring.same(&rhs.ring), "ring mismatch");
        assert_eq!(self.degree, rhs.degree, "multivector degree mismatch");
        let mut comps = self.comps.clone();
        for (t, p) in &rhs.comps {
            let entry = comps.entry(t.clone()).or_insert_with(|| self.ring.zero());
            *entry = &*entry + p;
        }
        comps.retain(|_, p| !p.is_zero());
        MultiVector { ring: self.ring.clone(), degree: self.degree, comps }
    }
}

impl fmt::Debug for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiVector(deg {}, {} comps)", self.degree, self.comps.len())
    }
}
