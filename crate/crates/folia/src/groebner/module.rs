use std::fmt;
use std::sync::OnceLock;

use crate::error::Result;
use crate::poly::{PolyRing, Polynomial};

use super::buchberger::{normal_form_with_cofactors, reduced_groebner};
use super::limits;
use super::modvec::{ModOrder, ModVec};
use super::Ideal;

/// Finitely generated submodule of a free module `S^rank`.
///
/// Membership, cofactor extraction and quotients all run over one cached
/// Groebner basis of the generators tagged with unit vectors: a basis of
/// `{(g_i, e_i)}` under the order whose leading block is the ambient
/// `S^rank`. Elements of that basis with vanishing ambient block are
/// exactly the syzygies of the generators.
#[derive(Clone)]
pub struct Submodule {
    ring: PolyRing,
    rank: usize,
    gens: Vec<ModVec>,
    tagged_gb: OnceLock<Vec<ModVec>>,
}

impl Submodule {
    pub fn new(ring: PolyRing, rank: usize, gens: Vec<ModVec>) -> Self {
        let kept: Vec<ModVec> = gens
            .into_iter()
            .inspect(|g| {
                assert_eq!(g.rank(), rank, "generator rank mismatch");
                assert!(g.ring().same(&ring), "generator ring mismatch");
            })
            .filter(|g| !g.is_zero())
            .collect();
        Submodule { ring, rank, gens: kept, tagged_gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModVec] {
        &self.gens
    }

    fn tagged_gb(&self) -> Result<&[ModVec]> {
        if let Some(gb) = self.tagged_gb.get() {
            return Ok(gb);
        }
        let m = self.gens.len();
        let tagged: Vec<ModVec> = self
            .gens
            .iter()
            .enumerate()
            .map(|(i, g)| g.concat(&ModVec::unit(self.ring.clone(), m, i)))
            .collect();
        let gb = reduced_groebner(&tagged, self.rank, limits::max_spairs(), false)?;
        let _ = self.tagged_gb.set(gb);
        Ok(self.tagged_gb.get().expect("just set"))
    }

    /// Express `v` in the generators: `v = sum_k c_k g_k`. `None` when `v`
    /// is not in the submodule.
    pub fn contains_with_cofactors(&self, v: &ModVec) -> Result<Option<Vec<Polynomial>>> {
        assert_eq!(v.rank(), self.rank, "rank mismatch");
        if v.is_zero() {
            return Ok(Some(vec![self.ring.zero(); self.gens.len()]));
        }
        let m = self.gens.len();
        let gb = self.tagged_gb()?;
        let order = ModOrder::with_split(&self.ring, self.rank);
        let padded = v.concat(&ModVec::zero(self.ring.clone(), m));
        let (nf, _) = normal_form_with_cofactors(&padded, gb, &order);
        let ambient = nf.slice(0..self.rank);
        if !ambient.is_zero() {
            return Ok(None);
        }
        // (v, 0) - (0, t) lies in the span of {(g_i, e_i)}, so v = sum -t_i g_i
        let tags = nf.slice(self.rank..self.rank + m);
        Ok(Some(tags.entries().iter().map(|p| -p).collect()))
    }

    pub fn contains(&self, v: &ModVec) -> Result<bool> {
        Ok(self.contains_with_cofactors(v)?.is_some())
    }

    /// Module quotient `(M : v) = {h in S : h v in M}`, read off the
    /// first coordinates of the syzygies of `[v, g_1, ..., g_m]`.
    pub fn quotient_by(&self, v: &ModVec) -> Result<Ideal> {
        assert_eq!(v.rank(), self.rank, "rank mismatch");
        let mut all = Vec::with_capacity(self.gens.len() + 1);
        all.push(v.clone());
        all.extend(self.gens.iter().cloned());
        let syz = syzygies(&self.ring, self.rank, &all)?;
        let gens = syz
            .generators()
            .iter()
            .map(|s| s.entry(0).clone())
            .filter(|p| !p.is_zero())
            .collect();
        Ok(Ideal::new(self.ring.clone(), gens))
    }

    /// Mutual containment of generators.
    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule(rank {}, {} generators)", self.rank, self.gens.len())
    }
}

/// First syzygy module of `gens`: all `(a_1, ..., a_m)` with
/// `sum_k a_k gens_k = 0`, as a submodule of `S^m`.
pub fn syzygies(ring: &PolyRing, rank: usize, gens: &[ModVec]) -> Result<Submodule> {
    let m = gens.len();
    let tagged: Vec<ModVec> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            assert_eq!(g.rank(), rank, "generator rank mismatch");
            g.concat(&ModVec::unit(ring.clone(), m, i))
        })
        .collect();
    let gb = reduced_groebner(&tagged, rank, limits::max_spairs(), false)?;
    let mut rels = Vec::new();
    for v in gb {
        if v.slice(0..rank).is_zero() {
            rels.push(v.slice(rank..rank + m));
        }
    }
    Ok(Submodule::new(ring.clone(), m, rels))
}

/// Kernel of the module map `S^a -> S^b` whose columns are `columns`:
/// the syzygies of the columns.
pub fn module_kernel(ring: &PolyRing, rank: usize, columns: &[ModVec]) -> Result<Submodule> {
    syzygies(ring, rank, columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> PolyRing {
        PolyRing::degrevlex(&["x1", "x2", "x3"])
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring3();
        let gens = vec![
            ModVec::from_polynomial(r.var(0)),
            ModVec::from_polynomial(r.var(1)),
        ];
        let syz = syzygies(&r, 1, &gens).unwrap();
        assert_eq!(syz.generators().len(), 1);
        // generated by (x2, -x1) up to sign
        let s = &syz.generators()[0];
        let koszul = ModVec::new(r.clone(), vec![r.var(1), -&r.var(0)]);
        assert!(syz.contains(&koszul).unwrap());
        assert!(s.entry(0) == &r.var(1) || s.entry(0) == &(-&r.var(1)));
    }

    #[test]
    fn single_generator_over_domain_has_no_relations() {
        let r = ring3();
        let gens = vec![ModVec::from_polynomial(&r.var(0) + &r.var(1))];
        let syz = syzygies(&r, 1, &gens).unwrap();
        assert!(syz.generators().is_empty());
    }

    #[test]
    fn membership_with_cofactors() {
        let r = ring3();
        // (x1 x2, 0) in <(x2, 0)> with cofactor x1
        let m = Submodule::new(
            r.clone(),
            2,
            vec![ModVec::new(r.clone(), vec![r.var(1), r.zero()])],
        );
        let v = ModVec::new(r.clone(), vec![&r.var(0) * &r.var(1), r.zero()]);
        let cof = m.contains_with_cofactors(&v).unwrap().unwrap();
        assert_eq!(cof, vec![r.var(0)]);

        let w = ModVec::new(r.clone(), vec![r.zero(), r.one()]);
        let m2 = Submodule::new(
            r.clone(),
            2,
            vec![ModVec::new(r.clone(), vec![r.var(0), r.zero()])],
        );
        assert!(m2.contains_with_cofactors(&w).unwrap().is_none());
    }

    #[test]
    fn cofactors_reconstruct_element() {
        let r = ring3();
        let g1 = ModVec::new(r.clone(), vec![r.var(0), r.var(1)]);
        let g2 = ModVec::new(r.clone(), vec![r.zero(), r.var(2)]);
        let m = Submodule::new(r.clone(), 2, vec![g1.clone(), g2.clone()]);
        let v = g1.mul_poly(&r.var(2)).add(&g2.mul_poly(&(&r.var(0) + &r.var(1))));
        let cof = m.contains_with_cofactors(&v).unwrap().unwrap();
        let rebuilt = g1.mul_poly(&cof[0]).add(&g2.mul_poly(&cof[1]));
        assert_eq!(rebuilt, v);
    }

    #[test]
    fn kernel_of_multiplication_map() {
        let r = ring3();
        // x1 : S -> S is injective
        let cols = vec![ModVec::from_polynomial(r.var(0))];
        let k = module_kernel(&r, 1, &cols).unwrap();
        assert!(k.generators().is_empty());

        // kernel of (x1, x2) : S^2 -> S is the Koszul relation
        let cols = vec![
            ModVec::from_polynomial(r.var(0)),
            ModVec::from_polynomial(r.var(1)),
        ];
        let k = module_kernel(&r, 1, &cols).unwrap();
        let koszul = ModVec::new(r.clone(), vec![r.var(1), -&r.var(0)]);
        assert!(k.contains(&koszul).unwrap());
        assert_eq!(k.generators().len(), 1);
    }

    #[test]
    fn module_quotient_examples() {
        let r = ring3();
        // <(x1, 0), (0, x1)> : (1, 1) = (x1)
        let m = Submodule::new(
            r.clone(),
            2,
            vec![
                ModVec::new(r.clone(), vec![r.var(0), r.zero()]),
                ModVec::new(r.clone(), vec![r.zero(), r.var(0)]),
            ],
        );
        let v = ModVec::new(r.clone(), vec![r.one(), r.one()]);
        let q = m.quotient_by(&v).unwrap();
        assert!(q.equals(&Ideal::new(r.clone(), vec![r.var(0)])).unwrap());

        // quotient by a member is the unit ideal
        let member = ModVec::new(r.clone(), vec![r.var(0), r.var(0)]);
        let q = m.quotient_by(&member).unwrap();
        assert!(q.is_unit().unwrap());

        // quotient by zero is the unit ideal
        let q = m.quotient_by(&ModVec::zero(r.clone(), 2)).unwrap();
        assert!(q.is_unit().unwrap());
    }

    #[test]
    fn quotient_consistency_with_membership() {
        let r = ring3();
        let m = Submodule::new(
            r.clone(),
            1,
            vec![ModVec::from_polynomial(&r.var(0) * &r.var(1))],
        );
        let v = ModVec::from_polynomial(r.var(0));
        // (M : x1) = (x2) and x1 not in M
        assert!(!m.contains(&v).unwrap());
        let q = m.quotient_by(&v).unwrap();
        assert!(q.equals(&Ideal::new(r.clone(), vec![r.var(1)])).unwrap());
    }
}
