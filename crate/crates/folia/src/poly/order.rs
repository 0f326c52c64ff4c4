use std::cmp::Ordering;

use super::monomial::Monomial;

/// Total multiplicative orders on power products.
///
/// `EliminationLast { block }` makes the trailing `block` variables dominate:
/// exponents in that block are compared first (by graded reverse
/// lexicographic order within the block), ties fall back to the leading
/// variables. A Groebner basis under this order intersects cleanly with the
/// subring in the leading variables, which is how quotients, intersections
/// and radical-membership tests eliminate their auxiliary variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    EliminationLast { block: usize },
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            // smaller exponent in the last differing variable wins
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), b.exponents()),
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::EliminationLast { block } => {
                let split = a.nvars() - block;
                degrevlex(&a.exponents()[split..], &b.exponents()[split..])
                    .then_with(|| degrevlex(&a.exponents()[..split], &b.exponents()[..split]))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_classic() {
        let o = MonomialOrder::DegRevLex;
        // degree first
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 0, 0])), Ordering::Greater);
        // x0*x2 < x1^2 in degrevlex (x0*x2 has larger last exponent)
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // x0^2 > x0*x1 > x1^2
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_dominates_on_block() {
        let o = MonomialOrder::EliminationLast { block: 1 };
        // t > x0^5 when t is the trailing variable
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 0, 0])), Ordering::Greater);
        // equal t-part falls back to the leading block
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[1, 0, 1])), Ordering::Greater);
    }
}
