use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, is_negative, Rational};

use super::monomial::Monomial;
use super::ring::PolyRing;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in strictly decreasing monomial order (the ring's
/// order), with no zero coefficients, so equal polynomials have identical
/// representations and iteration is deterministic.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: PolyRing) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn constant(ring: PolyRing, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        let m = Monomial::one(ring.nvars());
        Polynomial { ring, terms: vec![(m, c)] }
    }

    pub fn monomial(ring: PolyRing, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring, terms: vec![(m, c)] }
    }

    /// Build from arbitrary (monomial, coefficient) pairs; duplicates are
    /// combined and zeros dropped.
    pub fn from_terms<I>(ring: PolyRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            let entry = acc.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value when the polynomial has degree <= 0.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return Some(self.terms[0].1.clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Common total degree of all terms. The zero polynomial reports degree 0
    /// so that graded maps accept it; an inhomogeneous polynomial reports
    /// `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        let d = match it.next() {
            None => return Some(0),
            Some(d) => d,
        };
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(self.ring.same(&other.ring), "polynomial ring mismatch");
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.ring.same(&other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.ring.same(&other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self * other)
    }

    pub fn scaled(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, k)| (a.mul(m), k * c))
                .collect(),
        }
    }

    /// Divide every coefficient so the leading coefficient becomes 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rational::one() / c.clone();
                self.scaled(&inv)
            }
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.ring.nvars() {
            return Err(Error::IndexOutOfRange { index: var, nvars: self.ring.nvars() });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] = e - 1;
            Some((
                Monomial::from_exponents(exps),
                c * Rational::from_integer(e.into()),
            ))
        });
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.nvars() {
            return Err(Error::PointDimensionMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`, `None` when the division is not exact.
    ///
    /// Leading terms of exact quotients always cancel under a multiplicative
    /// monomial order, so the greedy single-divisor division decides
    /// exactness.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.assert_same_ring(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.ring.clone());
        let (dm, dc) = divisor.leading_term().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = match dm.div_into(rm) {
                Some(m) => m,
                None => return Ok(None),
            };
            let c = rc / &dc;
            let t = Polynomial::monomial(self.ring.clone(), m, c);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(Some(quot))
    }

    /// Same exponents over a ring with extra trailing variables.
    pub fn lift(&self, ext: &PolyRing) -> Polynomial {
        let extra = ext.nvars() - self.ring.nvars();
        Polynomial::from_terms(
            ext.clone(),
            self.terms
                .iter()
                .map(|(m, c)| (m.extended(extra), c.clone())),
        )
    }

    /// Drop trailing auxiliary variables. `None` if any term uses them.
    pub fn project(&self, base: &PolyRing) -> Option<Polynomial> {
        let extra = self.ring.nvars() - base.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.truncated(extra)?, c.clone()));
        }
        Some(Polynomial::from_terms(base.clone(), terms))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = rhs.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (Some((ma, _)), Some((mb, _))) => match order.cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap().clone()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca + cb;
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let entry = acc.entry(m).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.ring.order();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", format_rational(&abs))?;
                }
                let mut first = true;
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ring.var_name(i))?;
                    if e > 1 {
                        write!(f, "^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
