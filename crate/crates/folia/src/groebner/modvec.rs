use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::rational::Rational;

/// Element of a free module `S^rank`, stored as one polynomial per
/// position.
#[derive(Clone, PartialEq, Eq)]
pub struct ModVec {
    ring: PolyRing,
    entries: Vec<Polynomial>,
}

/// A module term: position in the free module plus a power product.
pub type ModTerm = (usize, Monomial);

impl ModVec {
    pub fn new(ring: PolyRing, entries: Vec<Polynomial>) -> Self {
        debug_assert!(entries.iter().all(|p| p.ring().same(&ring)));
        ModVec { ring, entries }
    }

    pub fn zero(ring: PolyRing, rank: usize) -> Self {
        let entries = (0..rank).map(|_| ring.zero()).collect();
        ModVec { ring, entries }
    }

    /// Standard basis vector `e_pos`.
    pub fn unit(ring: PolyRing, rank: usize, pos: usize) -> Self {
        let mut v = Self::zero(ring.clone(), rank);
        v.entries[pos] = ring.one();
        v
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let ring = p.ring().clone();
        ModVec { ring, entries: vec![p] }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &ModVec) -> ModVec {
        debug_assert_eq!(self.rank(), other.rank());
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        ModVec { ring: self.ring.clone(), entries }
    }

    pub fn sub(&self, other: &ModVec) -> ModVec {
        debug_assert_eq!(self.rank(), other.rank());
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        ModVec { ring: self.ring.clone(), entries }
    }

    pub fn neg(&self) -> ModVec {
        ModVec {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| -p).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> ModVec {
        ModVec {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn mul_poly(&self, g: &Polynomial) -> ModVec {
        ModVec {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| p * g).collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> ModVec {
        ModVec {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| p.scaled(c)).collect(),
        }
    }

    /// Concatenate with another block of entries (tag components).
    pub fn concat(&self, tail: &ModVec) -> ModVec {
        let mut entries = self.entries.clone();
        entries.extend(tail.entries.iter().cloned());
        ModVec { ring: self.ring.clone(), entries }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> ModVec {
        ModVec { ring: self.ring.clone(), entries: self.entries[range].to_vec() }
    }

    /// Leading module term and coefficient under the split block order.
    pub fn leading(&self, order: &ModOrder) -> Option<(ModTerm, Rational)> {
        let mut best: Option<(ModTerm, Rational)> = None;
        for (pos, p) in self.entries.iter().enumerate() {
            if let Some((m, c)) = p.leading_term() {
                let cand = ((pos, m.clone()), c.clone());
                best = match best {
                    None => Some(cand),
                    Some(cur) => {
                        if order.cmp(&cand.0, &cur.0) == Ordering::Greater {
                            Some(cand)
                        } else {
                            Some(cur)
                        }
                    }
                };
            }
        }
        best
    }

    pub fn monic(&self, order: &ModOrder) -> ModVec {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rational::one() / c;
                self.scaled(&inv)
            }
        }
    }

    /// Map every entry over a ring with extra trailing variables.
    pub fn lift(&self, ext: &PolyRing) -> ModVec {
        ModVec {
            ring: ext.clone(),
            entries: self.entries.iter().map(|p| p.lift(ext)).collect(),
        }
    }
}

impl fmt::Debug for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// Term-over-position order on module terms with a dominant leading block.
///
/// Positions below `split` beat positions at or above it; within a block
/// the power products are compared by the ring order and ties go to the
/// lower position. `split = rank` is the plain TOP order; `split < rank`
/// is the elimination order used for syzygy and cofactor computations.
#[derive(Debug, Clone)]
pub struct ModOrder {
    ring_order: MonomialOrder,
    split: usize,
}

impl ModOrder {
    pub fn top(ring: &PolyRing, rank: usize) -> Self {
        ModOrder { ring_order: ring.order(), split: rank }
    }

    pub fn with_split(ring: &PolyRing, split: usize) -> Self {
        ModOrder { ring_order: ring.order(), split }
    }

    pub fn cmp(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        let block_a = a.0 >= self.split;
        let block_b = b.0 >= self.split;
        match (block_a, block_b) {
            (false, true) => return Ordering::Greater,
            (true, false) => return Ordering::Less,
            _ => {}
        }
        self.ring_order
            .cmp(&a.1, &b.1)
            .then_with(|| b.0.cmp(&a.0))
    }

    /// Does `a` divide `b` as module terms (same position, dividing monomial)?
    pub fn term_divides(a: &ModTerm, b: &ModTerm) -> bool {
        a.0 == b.0 && a.1.divides(&b.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_respects_split() {
        let r = PolyRing::degrevlex(&["x", "y"]);
        // v = (x, y^3): plain TOP picks the y^3 term, split order after
        // position 1 picks x.
        let v = ModVec::new(r.clone(), vec![r.var(0), r.var(1).pow(3)]);
        let top = ModOrder::top(&r, 2);
        assert_eq!(v.leading(&top).unwrap().0, (1, Monomial::from_exponents(vec![0, 3])));
        let split = ModOrder::with_split(&r, 1);
        assert_eq!(v.leading(&split).unwrap().0, (0, Monomial::from_exponents(vec![1, 0])));
    }

    #[test]
    fn position_breaks_ties_low_first() {
        let r = PolyRing::degrevlex(&["x", "y"]);
        let order = ModOrder::top(&r, 2);
        let m = Monomial::from_exponents(vec![1, 0]);
        assert_eq!(order.cmp(&(0, m.clone()), &(1, m)), Ordering::Greater);
    }
}
