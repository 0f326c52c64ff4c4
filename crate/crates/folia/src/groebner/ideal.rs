use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

use super::buchberger::{normal_form, reduced_groebner};
use super::limits;
use super::modvec::{ModOrder, ModVec};

/// Ideal of a polynomial ring, carrying its generators and a lazily
/// computed reduced Groebner basis.
///
/// The reduced basis is unique for the ring's monomial order, so two ideals
/// over the same ring are equal exactly when their bases coincide. The cache
/// is written at most once; concurrent readers are safe.
#[derive(Clone)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ring: PolyRing, gens: Vec<Polynomial>) -> Self {
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gens {
            assert!(g.ring().same(&ring), "generator from a different ring");
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ideal { ring, gens: kept, gb: OnceLock::new() }
    }

    pub fn zero(ring: PolyRing) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: PolyRing) -> Self {
        let one = ring.one();
        Ideal::new(ring, vec![one])
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis under the ring's order (monic, tails
    /// reduced, sorted by increasing leading monomial).
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let vecs: Vec<ModVec> = self
            .gens
            .iter()
            .cloned()
            .map(ModVec::from_polynomial)
            .collect();
        let gb = reduced_groebner(&vecs, 1, limits::max_spairs(), true)?
            .into_iter()
            .map(|v| v.entry(0).clone())
            .collect::<Vec<_>>();
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        assert!(p.ring().same(&self.ring), "ring mismatch");
        let gb = self.groebner_basis()?;
        let vecs: Vec<ModVec> = gb.iter().cloned().map(ModVec::from_polynomial).collect();
        let order = ModOrder::top(&self.ring, 1);
        let nf = normal_form(&ModVec::from_polynomial(p.clone()), &vecs, &order);
        Ok(nf.entry(0).clone())
    }

    /// Ideal membership: normal form vanishes.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner_basis()?;
        Ok(gb.len() == 1 && gb[0].is_one())
    }

    /// Equality of ideals via their unique reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        assert!(self.ring.same(&other.ring), "ring mismatch");
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    /// Ideal quotient `(I : g) = {h : h g in I}`, by eliminating an
    /// auxiliary variable from `t I + (1 - t)(g)` to reach `I /\ (g)` and
    /// dividing the survivors by `g`.
    pub fn quotient_by(&self, g: &Polynomial) -> Result<Ideal> {
        assert!(g.ring().same(&self.ring), "ring mismatch");
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if g.is_constant() {
            return Ok(self.clone());
        }
        let meet = self.intersect(&Ideal::new(self.ring.clone(), vec![g.clone()]))?;
        let mut quot = Vec::new();
        for p in meet.generators() {
            let q = p
                .exact_div(g)?
                .expect("element of I /\\ (g) is divisible by g");
            quot.push(q);
        }
        Ok(Ideal::new(self.ring.clone(), quot))
    }

    /// Ideal quotient `(I : G)`, the intersection of the single-generator
    /// quotients over the generators of `G`.
    pub fn quotient_by_ideal(&self, other: &Ideal) -> Result<Ideal> {
        assert!(other.ring.same(&self.ring), "ring mismatch");
        if other.is_zero_ideal() {
            return Err(Error::DivisionByZero);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(cur) => cur.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    /// Intersection by elimination: `I /\ J = (t I + (1 - t) J) /\ S`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        assert!(other.ring.same(&self.ring), "ring mismatch");
        let ext = self.ring.extended(1);
        let t = ext.var(ext.nvars() - 1);
        let one_minus_t = &ext.one() - &t;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&f.lift(&ext) * &t);
        }
        for g in &other.gens {
            gens.push(&g.lift(&ext) * &one_minus_t);
        }
        let extended = Ideal::new(ext, gens);
        let mut meet = Vec::new();
        for p in extended.groebner_basis()? {
            if let Some(q) = p.project(&self.ring) {
                meet.push(q);
            }
        }
        Ok(Ideal::new(self.ring.clone(), meet))
    }

    /// Radical membership by the Rabinowitsch trick:
    /// `g in sqrt(I)  iff  1 in I + (1 - t g)`.
    pub fn radical_contains(&self, g: &Polynomial) -> Result<bool> {
        assert!(g.ring().same(&self.ring), "ring mismatch");
        if g.is_zero() {
            return Ok(true);
        }
        let ext = self.ring.extended(1);
        let t = ext.var(ext.nvars() - 1);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|f| f.lift(&ext)).collect();
        gens.push(&ext.one() - &(&t * &g.lift(&ext)));
        Ideal::new(ext, gens).is_unit()
    }

    /// Do the two ideals have the same radical? Tested generator-wise in
    /// both directions.
    pub fn radical_equal(&self, other: &Ideal) -> Result<bool> {
        assert!(other.ring.same(&self.ring), "ring mismatch");
        for g in &self.gens {
            if !other.radical_contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.gens {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Krull dimension of `S/I`, computed from the leading-term ideal as
    /// the largest cardinality of a variable set meeting no leading
    /// monomial's support. Returns -1 for the unit ideal.
    pub fn dimension(&self) -> Result<i64> {
        let gb = self.groebner_basis()?;
        if gb.iter().any(|p| p.is_constant() && !p.is_zero()) {
            return Ok(-1);
        }
        let n = self.ring.nvars();
        assert!(n <= 24, "dimension enumeration limited to small rings");
        let supports: Vec<u32> = gb
            .iter()
            .map(|p| {
                let (m, _) = p.leading_term().expect("nonzero basis element");
                let mut mask = 0u32;
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();
        let mut best = 0;
        for subset in 0u32..(1 << n) {
            let size = subset.count_ones() as i64;
            if size <= best {
                continue;
            }
            if supports.iter().all(|&s| s & !subset != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.homogeneous_degree().is_some())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ring3() -> PolyRing {
        PolyRing::degrevlex(&["x1", "x2", "x3"])
    }

    #[test]
    fn membership_basics() {
        let r = ring3();
        let i = Ideal::new(r.clone(), vec![r.var(0)]);
        assert!(i.contains(&(&r.var(0) * &r.var(1))).unwrap());
        assert!(!i.contains(&r.var(1)).unwrap());
        let m = Ideal::new(r.clone(), vec![r.var(0), r.var(1), r.var(2)]);
        assert!(!m.contains(&r.constant(rat(3))).unwrap());
    }

    #[test]
    fn quotient_by_element() {
        let r = ring3();
        let x1 = r.var(0);
        let i = Ideal::new(r.clone(), vec![x1.pow(2)]);
        let q = i.quotient_by(&x1).unwrap();
        assert!(q.equals(&Ideal::new(r.clone(), vec![x1.clone()])).unwrap());

        // quotient by a unit is the ideal itself
        let m = Ideal::new(r.clone(), vec![r.var(0), r.var(1), r.var(2)]);
        let q = m.quotient_by(&r.one()).unwrap();
        assert!(q.equals(&m).unwrap());

        // ((x1 x2, x1 x3) : x1) = (x2, x3)
        let i = Ideal::new(r.clone(), vec![&x1 * &r.var(1), &x1 * &r.var(2)]);
        let q = i.quotient_by(&x1).unwrap();
        assert!(q
            .equals(&Ideal::new(r.clone(), vec![r.var(1), r.var(2)]))
            .unwrap());

        assert!(matches!(
            i.quotient_by(&r.zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn quotient_by_ideal() {
        let r = ring3();
        let i = Ideal::new(r.clone(), vec![r.var(0)]);
        // (I : (1)) = I
        let q = i.quotient_by_ideal(&Ideal::unit(r.clone())).unwrap();
        assert!(q.equals(&i).unwrap());
        // ((x1) : (x1, x2)) = (x1)
        let g = Ideal::new(r.clone(), vec![r.var(0), r.var(1)]);
        let q = i.quotient_by_ideal(&g).unwrap();
        assert!(q.equals(&i).unwrap());
    }

    #[test]
    fn intersection() {
        let r = ring3();
        let a = Ideal::new(r.clone(), vec![r.var(0)]);
        let b = Ideal::new(r.clone(), vec![r.var(1)]);
        let m = a.intersect(&b).unwrap();
        assert!(m
            .equals(&Ideal::new(r.clone(), vec![&r.var(0) * &r.var(1)]))
            .unwrap());

        let u = a.intersect(&Ideal::unit(r.clone())).unwrap();
        assert!(u.equals(&a).unwrap());

        // (x1, x2) /\ (x1, x3) = (x1, x2 x3)
        let a = Ideal::new(r.clone(), vec![r.var(0), r.var(1)]);
        let b = Ideal::new(r.clone(), vec![r.var(0), r.var(2)]);
        let m = a.intersect(&b).unwrap();
        let want = Ideal::new(r.clone(), vec![r.var(0), &r.var(1) * &r.var(2)]);
        assert!(m.equals(&want).unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = ring3();
        let i = Ideal::new(r.clone(), vec![r.var(0).pow(2)]);
        assert!(i.radical_contains(&r.var(0)).unwrap());
        assert!(!i.radical_contains(&r.var(1)).unwrap());
        let j = Ideal::new(r.clone(), vec![r.var(0).pow(2), r.var(1).pow(2)]);
        assert!(j.radical_contains(&(&r.var(0) + &r.var(1))).unwrap());
    }

    #[test]
    fn radical_equality() {
        let r = ring3();
        let a = Ideal::new(r.clone(), vec![r.var(0).pow(2)]);
        let b = Ideal::new(r.clone(), vec![r.var(0)]);
        assert!(a.radical_equal(&b).unwrap());
        let c = Ideal::new(r.clone(), vec![r.var(1)]);
        assert!(!a.radical_equal(&c).unwrap());
    }

    #[test]
    fn krull_dimension() {
        let r4 = PolyRing::degrevlex(&["x0", "x1", "x2", "x3"]);
        let i = Ideal::new(r4.clone(), vec![r4.var(1), r4.var(2), r4.var(3)]);
        assert_eq!(i.dimension().unwrap(), 1);
        assert_eq!(Ideal::zero(r4.clone()).dimension().unwrap(), 4);
        let r3 = ring3();
        let h = Ideal::new(r3.clone(), vec![&r3.var(0) * &r3.var(1)]);
        assert_eq!(h.dimension().unwrap(), 2);
        assert_eq!(Ideal::unit(r3).dimension().unwrap(), -1);
    }
}
