use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;

#[derive(Debug)]
struct RingRepr {
    vars: Vec<String>,
    order: MonomialOrder,
}

/// Descriptor of a polynomial ring: named variables plus a monomial order.
///
/// Cloning is cheap (shared descriptor). Two rings are interchangeable when
/// their variable lists and orders agree, regardless of sharing.
#[derive(Clone)]
pub struct PolyRing(Arc<RingRepr>);

impl PolyRing {
    pub fn new(vars: &[&str], order: MonomialOrder) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for v in vars {
            if v.is_empty() || !seen.insert(*v) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(PolyRing(Arc::new(RingRepr {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        })))
    }

    pub fn degrevlex(vars: &[&str]) -> Self {
        Self::new(vars, MonomialOrder::DegRevLex).expect("distinct variable names")
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_names(&self) -> impl Iterator<Item = &str> {
        self.0.vars.iter().map(|s| s.as_str())
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn same(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.vars == other.0.vars && self.0.order == other.0.order)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.clone())
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Rational::from_integer(1.into()))
    }

    pub fn constant(&self, c: Rational) -> Polynomial {
        Polynomial::constant(self.clone(), c)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        Polynomial::monomial(
            self.clone(),
            Monomial::var(self.nvars(), i),
            Rational::from_integer(1.into()),
        )
    }

    /// Ring with `extra` fresh trailing variables under an elimination order
    /// that makes them dominant. Fresh names never collide with existing ones.
    pub fn extended(&self, extra: usize) -> PolyRing {
        let mut vars: Vec<String> = self.0.vars.clone();
        for k in 0..extra {
            let mut name = format!("#t{}", k);
            let mut bump = 0usize;
            while vars.contains(&name) {
                name = format!("#t{}_{}", k, bump);
                bump += 1;
            }
            vars.push(name);
        }
        PolyRing(Arc::new(RingRepr {
            vars,
            order: MonomialOrder::EliminationLast { block: extra },
        }))
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing[{} | {:?}]", self.0.vars.join(", "), self.0.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_names_required() {
        assert!(PolyRing::new(&["x", "x"], MonomialOrder::DegRevLex).is_err());
        assert!(PolyRing::new(&["x", ""], MonomialOrder::DegRevLex).is_err());
    }

    #[test]
    fn extension_is_elimination_ordered() {
        let r = PolyRing::degrevlex(&["x0", "x1"]);
        let e = r.extended(1);
        assert_eq!(e.nvars(), 3);
        assert_eq!(e.order(), MonomialOrder::EliminationLast { block: 1 });
        assert!(!r.same(&e));
    }

    #[test]
    fn equality_by_content() {
        let a = PolyRing::degrevlex(&["x", "y"]);
        let b = PolyRing::degrevlex(&["x", "y"]);
        let c = PolyRing::degrevlex(&["x", "z"]);
        assert!(a.same(&b));
        assert!(!a.same(&c));
    }
}
