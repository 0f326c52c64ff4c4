//! Property suites: algebraic identities on random inputs, plus seeded
//! brute-force cross-checks of the Groebner machinery against dense linear
//! algebra. Everything is exact; any failure is a real bug.

use num_traits::Zero;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use folia::extalg::{DiffForm, MultiVector};
use folia::groebner::{Ideal, ModVec, Submodule};
use folia::linalg::{in_row_span, QMatrix};
use folia::poly::{monomials_of_degree, Monomial, PolyRing, Polynomial};
use folia::rational::{rat, Rational};
use folia::unfolding::DualForm;

fn ring4() -> PolyRing {
    PolyRing::degrevlex(&["x1", "x2", "x3", "x4"])
}

fn ring3() -> PolyRing {
    PolyRing::degrevlex(&["x1", "x2", "x3"])
}

type TermData = Vec<(Vec<u32>, i64)>;

fn poly_from_data(ring: &PolyRing, data: &TermData) -> Polynomial {
    Polynomial::from_terms(
        ring.clone(),
        data.iter().map(|(exps, c)| {
            let mut e = exps.clone();
            e.resize(ring.nvars(), 0);
            (Monomial::from_exponents(e), rat(*c))
        }),
    )
}

fn arb_poly4() -> impl Strategy<Value = TermData> {
    prop::collection::vec(
        (prop::collection::vec(0u32..=2, 4), -4i64..=4),
        0..5,
    )
}

fn arb_form4(degree: usize) -> impl Strategy<Value = Vec<(Vec<usize>, TermData)>> {
    prop::collection::vec(
        (prop::collection::vec(0usize..4, degree), arb_poly4()),
        0..4,
    )
}

fn form_from_data(ring: &PolyRing, degree: usize, data: &[(Vec<usize>, TermData)]) -> DiffForm {
    let mut acc = DiffForm::zero(ring.clone(), degree);
    for (idx, terms) in data {
        let coeff = poly_from_data(ring, terms);
        if let Ok(t) = DiffForm::term(ring, coeff, idx) {
            if t.degree() == degree {
                acc = &acc + &t;
            }
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in arb_poly4(), b in arb_poly4(), c in arb_poly4()) {
        let r = ring4();
        let (p, q, s) = (poly_from_data(&r, &a), poly_from_data(&r, &b), poly_from_data(&r, &c));
        prop_assert_eq!(&(&p + &q) + &s, &p + &(&q + &s));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
    }

    #[test]
    fn partials_commute(a in arb_poly4(), i in 0usize..4, j in 0usize..4) {
        let r = ring4();
        let p = poly_from_data(&r, &a);
        let ij = p.partial_derivative(i).unwrap().partial_derivative(j).unwrap();
        let ji = p.partial_derivative(j).unwrap().partial_derivative(i).unwrap();
        prop_assert_eq!(ij, ji);
    }

    #[test]
    fn evaluation_is_multiplicative(a in arb_poly4(), b in arb_poly4(),
                                    pt in prop::collection::vec(-3i64..=3, 4)) {
        let r = ring4();
        let (p, q) = (poly_from_data(&r, &a), poly_from_data(&r, &b));
        let point: Vec<Rational> = pt.iter().map(|&c| rat(c)).collect();
        let lhs = (&p * &q).evaluate(&point).unwrap();
        let rhs = p.evaluate(&point).unwrap() * q.evaluate(&point).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneous_degree_is_additive(a in arb_poly4(), b in arb_poly4()) {
        let r = ring4();
        let (p, q) = (poly_from_data(&r, &a), poly_from_data(&r, &b));
        let prod = &p * &q;
        if let (Some(dp), Some(dq)) = (p.homogeneous_degree(), q.homogeneous_degree()) {
            if !p.is_zero() && !q.is_zero() {
                prop_assert_eq!(prod.homogeneous_degree(), Some(dp + dq));
            }
        }
    }

    #[test]
    fn d_squared_is_zero(deg in 0usize..4, data in arb_form4(2)) {
        let r = ring4();
        // reuse index data at the requested degree by truncation
        let adjusted: Vec<(Vec<usize>, TermData)> = data
            .iter()
            .map(|(idx, t)| {
                let mut idx = idx.clone();
                idx.resize(deg, 0);
                (idx, t.clone())
            })
            .collect();
        let form = form_from_data(&r, deg, &adjusted);
        prop_assert!(form.exterior_derivative().exterior_derivative().is_zero());
    }

    #[test]
    fn leibniz_rule(fd in arb_poly4(), data in arb_form4(1)) {
        let r = ring4();
        let f = poly_from_data(&r, &fd);
        let alpha = form_from_data(&r, 1, &data);
        let lhs = alpha.scale_poly(&f).exterior_derivative();
        let df = DiffForm::from_polynomial(f.clone()).exterior_derivative();
        let rhs = &df.wedge(&alpha) + &alpha.exterior_derivative().scale_poly(&f);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_is_an_antiderivation(vd in arb_poly4(), i in 0usize..4,
                                        a in arb_form4(1), b in arb_form4(2)) {
        let r = ring4();
        let v = MultiVector::term(&r, poly_from_data(&r, &vd), &[i]).unwrap();
        let alpha = form_from_data(&r, 1, &a);
        let beta = form_from_data(&r, 2, &b);
        let lhs = v.contract(&alpha.wedge(&beta)).unwrap();
        // deg alpha = 1: i_v(a ^ b) = i_v(a) ^ b - a ^ i_v(b)
        let rhs = &v.contract(&alpha).unwrap().wedge(&beta)
            - &alpha.wedge(&v.contract(&beta).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_composes(i in 0usize..4, j in 0usize..4, b in arb_form4(3)) {
        let r = ring4();
        let u = MultiVector::basis(&r, &[i]);
        let v = MultiVector::basis(&r, &[j]);
        let beta = form_from_data(&r, 3, &b);
        let uv = u.wedge(&v);
        let lhs = uv.contract(&beta).unwrap();
        let rhs = u.contract(&v.contract(&beta).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_identity(data in arb_poly4(), d in 1u32..5) {
        let r = ring4();
        // force homogeneity of degree d by filtering terms
        let p = poly_from_data(&r, &data);
        let homog = Polynomial::from_terms(
            r.clone(),
            p.terms()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        let dh = DiffForm::from_polynomial(homog.clone()).exterior_derivative();
        let lhs = dh.radial_contraction().as_polynomial();
        prop_assert_eq!(lhs, homog.scaled(&rat(d as i64)));
    }

    #[test]
    fn dual_derivative_squares_to_zero(b in arb_form4(1), e in arb_form4(1), h in arb_poly4()) {
        let r = ring4();
        let wt = DualForm::new(
            form_from_data(&r, 1, &b),
            form_from_data(&r, 1, &e),
            DiffForm::from_polynomial(poly_from_data(&r, &h)),
            DiffForm::zero(r.clone(), 0),
        ).unwrap();
        prop_assert!(wt.derivative().derivative().is_zero());
    }

    #[test]
    fn dual_wedge_associativity_and_sign(a in arb_form4(1), b in arb_form4(1), c in arb_form4(1),
                                         ha in arb_poly4(), hb in arb_poly4()) {
        let r = ring4();
        let fa = DualForm::new(
            form_from_data(&r, 1, &a),
            form_from_data(&r, 1, &b),
            DiffForm::from_polynomial(poly_from_data(&r, &ha)),
            DiffForm::zero(r.clone(), 0),
        ).unwrap();
        let fb = DualForm::new(
            form_from_data(&r, 1, &c),
            form_from_data(&r, 1, &a),
            DiffForm::from_polynomial(poly_from_data(&r, &hb)),
            DiffForm::zero(r.clone(), 0),
        ).unwrap();
        let fc = DualForm::new(
            form_from_data(&r, 1, &b),
            DiffForm::zero(r.clone(), 1),
            DiffForm::from_polynomial(poly_from_data(&r, &ha)),
            DiffForm::zero(r.clone(), 0),
        ).unwrap();
        prop_assert_eq!(fa.wedge(&fb).wedge(&fc), fa.wedge(&fb.wedge(&fc)));
        // graded anticommutativity for odd-degree duals
        prop_assert_eq!(fa.wedge(&fb), -&fb.wedge(&fa));
    }
}

// ---------------------------------------------------------------------------
// seeded brute-force cross-checks

fn random_poly(rng: &mut StdRng, ring: &PolyRing, max_deg: u32, terms: usize) -> Polynomial {
    let n = ring.nvars();
    let data: Vec<(Monomial, Rational)> = (0..terms)
        .map(|_| {
            let mut exps = vec![0u32; n];
            let mut budget = max_deg;
            for e in exps.iter_mut() {
                let d = rng.gen_range(0..=budget);
                *e = d;
                budget -= d;
            }
            (Monomial::from_exponents(exps), rat(rng.gen_range(-3..=3)))
        })
        .collect();
    Polynomial::from_terms(ring.clone(), data)
}

fn random_homogeneous(rng: &mut StdRng, ring: &PolyRing, deg: u32, terms: usize) -> Polynomial {
    let monos = monomials_of_degree(ring.nvars(), deg);
    let data: Vec<(Monomial, Rational)> = (0..terms)
        .map(|_| {
            let m = monos[rng.gen_range(0..monos.len())].clone();
            (m, rat(rng.gen_range(-3..=3)))
        })
        .collect();
    Polynomial::from_terms(ring.clone(), data)
}

/// Linear-algebra ideal membership with an explicit witness-degree bound:
/// exact for homogeneous data, sound in general.
fn span_member(gens: &[Polynomial], p: &Polynomial, bound: u32) -> bool {
    let ring = gens.first().map(|g| g.ring().clone()).unwrap_or_else(|| p.ring().clone());
    let n = ring.nvars();
    let mut basis: Vec<Monomial> = Vec::new();
    for d in 0..=bound {
        basis.extend(monomials_of_degree(n, d));
    }
    let coords = |q: &Polynomial| -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); basis.len()];
        for (m, c) in q.terms() {
            let i = basis.iter().position(|b| b == m)?;
            v[i] = c.clone();
        }
        Some(v)
    };
    let target = match coords(p) {
        None => return false,
        Some(t) => t,
    };
    let mut rows = Vec::new();
    for g in gens {
        let gd = match g.total_degree() {
            None => continue,
            Some(d) => d,
        };
        if gd > bound {
            continue;
        }
        for d in 0..=(bound - gd) {
            for m in monomials_of_degree(n, d) {
                if let Some(row) = coords(&g.mul_monomial(&m)) {
                    rows.push(row);
                }
            }
        }
    }
    in_row_span(&rows, &target)
}

#[test]
fn groebner_membership_matches_linear_algebra_on_homogeneous_ideals() {
    let ring = ring3();
    let mut rng = StdRng::seed_from_u64(9001);
    for _ in 0..50 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let d = rng.gen_range(1..=3);
                random_homogeneous(&mut rng, &ring, d, 3)
            })
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(ring.clone(), gens.clone());
        for _ in 0..4 {
            let d = rng.gen_range(0..=6u32);
            let p = random_homogeneous(&mut rng, &ring, d, 3);
            let by_gb = ideal.contains(&p).unwrap();
            let by_span = span_member(&gens, &p, 6);
            assert_eq!(
                by_gb, by_span,
                "membership disagreement for {} in {:?}",
                p, ideal
            );
        }
    }
}

#[test]
fn groebner_membership_sound_directions_on_general_ideals() {
    let ring = ring3();
    let mut rng = StdRng::seed_from_u64(4242);
    for _ in 0..50 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, &ring, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(ring.clone(), gens.clone());

        // constructed members are recognized
        let combo = gens.iter().fold(ring.zero(), |acc, g| {
            &acc + &(g * &random_poly(&mut rng, &ring, 2, 2))
        });
        assert!(ideal.contains(&combo).unwrap(), "member not recognized: {}", combo);

        // the span oracle never claims membership the basis denies
        let p = random_poly(&mut rng, &ring, 3, 3);
        if span_member(&gens, &p, 6) {
            assert!(ideal.contains(&p).unwrap(), "span member rejected: {}", p);
        }
    }
}

#[test]
fn quotient_soundness_and_small_completeness() {
    let ring = ring3();
    let mut rng = StdRng::seed_from_u64(7321);
    for _ in 0..20 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2))
            .map(|_| random_poly(&mut rng, &ring, 2, 2))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let f = {
            let f = random_poly(&mut rng, &ring, 2, 2);
            if f.is_zero() {
                ring.var(0)
            } else {
                f
            }
        };
        let ideal = Ideal::new(ring.clone(), gens);
        let quot = ideal.quotient_by(&f).unwrap();
        // soundness: every quotient generator multiplies back in
        for g in quot.generators() {
            assert!(ideal.contains(&(g * &f)).unwrap());
        }
        // completeness on monomials of degree <= 4
        for d in 0..=4u32 {
            for m in monomials_of_degree(3, d) {
                let h = Polynomial::monomial(ring.clone(), m, rat(1));
                let direct = ideal.contains(&(&h * &f)).unwrap();
                let via_quot = quot.contains(&h).unwrap();
                assert_eq!(direct, via_quot, "quotient mismatch on {}", h);
            }
        }
    }
}

#[test]
fn module_quotient_unit_iff_membership() {
    let ring = ring3();
    let mut rng = StdRng::seed_from_u64(555);
    for _ in 0..20 {
        let rank = 2;
        let gens: Vec<ModVec> = (0..2)
            .map(|_| {
                ModVec::new(
                    ring.clone(),
                    (0..rank).map(|_| random_poly(&mut rng, &ring, 2, 2)).collect(),
                )
            })
            .filter(|v| !v.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let m = Submodule::new(ring.clone(), rank, gens.clone());
        // a member: random combination
        let member = gens.iter().fold(ModVec::zero(ring.clone(), rank), |acc, g| {
            acc.add(&g.mul_poly(&random_poly(&mut rng, &ring, 1, 2)))
        });
        assert!(m.contains(&member).unwrap());
        assert!(m.quotient_by(&member).unwrap().is_unit().unwrap());
        // a random vector: quotient is (1) iff it is a member
        let v = ModVec::new(
            ring.clone(),
            (0..rank).map(|_| random_poly(&mut rng, &ring, 2, 2)).collect(),
        );
        let inside = m.contains(&v).unwrap();
        let unit = m.quotient_by(&v).unwrap().is_unit().unwrap();
        assert_eq!(inside, unit);
    }
}

#[test]
fn radical_membership_one_sided_sanity() {
    let ring = ring3();
    let mut rng = StdRng::seed_from_u64(31337);
    for _ in 0..25 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2))
            .map(|_| random_poly(&mut rng, &ring, 2, 2))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(ring.clone(), gens);
        let g = random_poly(&mut rng, &ring, 1, 2);
        let mut power = ring.one();
        let mut low_power_member = false;
        for _ in 1..=6 {
            power = &power * &g;
            if ideal.contains(&power).unwrap() {
                low_power_member = true;
                break;
            }
        }
        if low_power_member {
            assert!(ideal.radical_contains(&g).unwrap(), "g^k in I but g not in sqrt(I)");
        }
    }
}

#[test]
fn reduced_bases_satisfy_buchbergers_criterion() {
    // definition-level check: every S-polynomial of the reduced basis
    // reduces to zero against it, and every input generator lies in the
    // ideal the basis spans
    let ring = ring3();
    let mut rng = StdRng::seed_from_u64(271828);
    for _ in 0..25 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, &ring, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(ring.clone(), gens.clone());
        let gb: Vec<Polynomial> = ideal.groebner_basis().unwrap().to_vec();
        let by_basis = Ideal::new(ring.clone(), gb.clone());
        for g in &gens {
            assert!(by_basis.contains(g).unwrap(), "generator escapes its basis");
        }
        for a in 0..gb.len() {
            for b in a + 1..gb.len() {
                let (ma, ca) = gb[a].leading_term().unwrap();
                let (mb, cb) = gb[b].leading_term().unwrap();
                let lcm = ma.lcm(mb);
                let ua = ma.div_into(&lcm).unwrap();
                let ub = mb.div_into(&lcm).unwrap();
                let inv_a = Rational::from_integer(1.into()) / ca.clone();
                let inv_b = Rational::from_integer(1.into()) / cb.clone();
                let s = &gb[a].mul_term(&ua, &inv_a) - &gb[b].mul_term(&ub, &inv_b);
                assert!(
                    by_basis.normal_form(&s).unwrap().is_zero(),
                    "S-polynomial of basis elements does not reduce to zero"
                );
            }
        }
    }
}

#[test]
fn groebner_bases_are_deterministic() {
    let ring = ring3();
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..10 {
        let gens: Vec<Polynomial> = (0..3)
            .map(|_| random_poly(&mut rng, &ring, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let a = Ideal::new(ring.clone(), gens.clone());
        let b = Ideal::new(ring.clone(), gens);
        assert_eq!(a.groebner_basis().unwrap(), b.groebner_basis().unwrap());
    }
}

#[test]
fn rref_kernel_vectors_annihilate() {
    let mut rng = StdRng::seed_from_u64(88);
    for _ in 0..20 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let data: Vec<Vec<Rational>> = (0..rows)
            .map(|_| (0..cols).map(|_| rat(rng.gen_range(-3..=3))).collect())
            .collect();
        let m = QMatrix::from_rows(data.clone());
        for k in m.kernel_basis() {
            for row in &data {
                let dot = row
                    .iter()
                    .zip(&k)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                assert!(dot.is_zero());
            }
        }
    }
}
