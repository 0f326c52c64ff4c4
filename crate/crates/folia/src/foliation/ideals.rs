use crate::error::{Error, Result};
use crate::extalg::{tuples, DiffForm};
use crate::groebner::{Ideal, ModVec, Submodule};
use crate::poly::PolyRing;

use super::form::FoliationForm;
use super::frame::{form_to_vec, tangent_frame, TangentFrame};

/// The singular ideal `J(w)`: generated by the components of the form,
/// equivalently the image of contraction by all coordinate `q`-vectors.
pub fn singular_ideal(w: &FoliationForm) -> Ideal {
    w.form().coefficient_ideal()
}

/// The Kupka ideal `K(w) = (J(w) : J(dw))`, the annihilator of the class of
/// `dw` over the singular locus. A closed form has empty Kupka locus:
/// `K = (1)`.
pub fn kupka_ideal(w: &FoliationForm) -> Result<Ideal> {
    let dw = w.form().exterior_derivative();
    if dw.is_zero() {
        return Ok(Ideal::unit(w.ring().clone()));
    }
    let j = singular_ideal(w);
    let jd = dw.coefficient_ideal();
    j.quotient_by_ideal(&jd)
}

/// The submodule `F^1 = image(Omega^1 (x) E -> Omega^2)`, generated by the
/// products of frame generators with coordinate 1-forms.
pub(crate) fn f1_submodule(ring: &PolyRing, frame: &TangentFrame) -> Submodule {
    let n = ring.nvars();
    let rank = tuples(n, 2).len();
    let mut gens: Vec<ModVec> = Vec::new();
    for g in frame.generators() {
        for i in 0..n {
            let wedge = g.wedge(&DiffForm::basis_one_form(ring, i));
            if !wedge.is_zero() {
                gens.push(form_to_vec(&wedge));
            }
        }
    }
    Submodule::new(ring.clone(), rank, gens)
}

/// The persistent-singularity ideal `I(w)`: all `h` with `h * d(eta)`
/// falling inside `F^1` for every tangent 1-form `eta` of the foliation.
///
/// Checking the frame generators suffices: `d(g eta) = dg ^ eta + g d(eta)`
/// and `dg ^ eta` already lies in `F^1`. Each condition is an exact module
/// quotient `(F^1 : d eta_k)`; the ideal is their intersection.
pub fn persistent_ideal(w: &FoliationForm) -> Result<Ideal> {
    let frame = tangent_frame(w)?;
    persistent_ideal_with_frame(w, &frame)
}

/// As [`persistent_ideal`], reusing an already computed frame.
pub fn persistent_ideal_with_frame(w: &FoliationForm, frame: &TangentFrame) -> Result<Ideal> {
    if !w.check_integrability() {
        return Err(Error::NotIntegrable);
    }
    let ring = w.ring().clone();
    let differentials: Vec<DiffForm> = frame
        .generators()
        .iter()
        .map(|g| g.exterior_derivative())
        .filter(|d| !d.is_zero())
        .collect();
    if differentials.is_empty() {
        return Ok(Ideal::unit(ring));
    }
    let f1 = f1_submodule(&ring, frame);
    let mut acc: Option<Ideal> = None;
    for d in &differentials {
        let q = f1.quotient_by(&form_to_vec(d))?;
        acc = Some(match acc {
            None => q,
            Some(cur) => cur.intersect(&q)?,
        });
    }
    Ok(acc.expect("nonempty differentials"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::form::Ambient;
    use crate::poly::Polynomial;

    fn ring4() -> PolyRing {
        PolyRing::degrevlex(&["x0", "x1", "x2", "x3"])
    }

    fn p3_example() -> FoliationForm {
        let r = ring4();
        let w = DiffForm::from_components(
            &r,
            2,
            [
                (vec![1, 2], -&r.var(3)),
                (vec![1, 3], r.var(2)),
                (vec![2, 3], -&r.var(1)),
            ],
        )
        .unwrap();
        FoliationForm::new(w, Ambient::Projective(3)).unwrap()
    }

    fn a3_form(f1: &Polynomial, f2: &Polynomial, f3: &Polynomial) -> FoliationForm {
        let r = f1.ring().clone();
        let w = DiffForm::from_components(
            &r,
            2,
            [
                (vec![0, 1], f3.clone()),
                (vec![0, 2], f2.clone()),
                (vec![1, 2], f1.clone()),
            ],
        )
        .unwrap();
        FoliationForm::new(w, Ambient::Affine(3)).unwrap()
    }

    #[test]
    fn p3_singular_and_kupka_ideals() {
        let w = p3_example();
        let r = w.ring().clone();
        let j = singular_ideal(&w);
        let max3 = Ideal::new(r.clone(), vec![r.var(1), r.var(2), r.var(3)]);
        assert!(j.equals(&max3).unwrap());
        // dw = -3 dx1^dx2^dx3, so J(dw) = (1) and K = J
        let k = kupka_ideal(&w).unwrap();
        assert!(k.equals(&max3).unwrap());
        assert_eq!(j.dimension().unwrap(), 1); // cone dimension 1 = codim 3 in P^3
    }

    #[test]
    fn a3_generic_kupka_equals_singular() {
        let r = PolyRing::degrevlex(&["x1", "x2", "x3"]);
        let w = a3_form(&r.var(0), &r.var(1), &r.var(2));
        let j = singular_ideal(&w);
        let k = kupka_ideal(&w).unwrap();
        assert!(k.equals(&j).unwrap());
    }

    #[test]
    fn a3_special_kupka_is_unit() {
        // f3 = x1, f2 = x1 + x3, f1 = x2: dw = 0
        let r = PolyRing::degrevlex(&["x1", "x2", "x3"]);
        let w = a3_form(&r.var(1), &(&r.var(0) + &r.var(2)), &r.var(0));
        assert!(w.form().exterior_derivative().is_zero());
        let k = kupka_ideal(&w).unwrap();
        assert!(k.is_unit().unwrap());
    }

    #[test]
    fn nonsingular_form_has_unit_ideals() {
        let r = PolyRing::degrevlex(&["x1", "x2", "x3"]);
        let w = DiffForm::term(&r, r.one(), &[0, 1]).unwrap();
        let w = FoliationForm::new(w, Ambient::Affine(3)).unwrap();
        assert!(singular_ideal(&w).is_unit().unwrap());
        assert!(kupka_ideal(&w).unwrap().is_unit().unwrap());
        assert!(persistent_ideal(&w).unwrap().is_unit().unwrap());
    }

    #[test]
    fn closed_one_form_is_fully_persistent_free() {
        // w = dx1: dw = 0, I = (1)
        let r = PolyRing::degrevlex(&["x1", "x2", "x3"]);
        let w = FoliationForm::new(DiffForm::basis_one_form(&r, 0), Ambient::Affine(3)).unwrap();
        assert!(persistent_ideal(&w).unwrap().is_unit().unwrap());
    }

    #[test]
    fn p3_persistent_ideal_has_singular_radical() {
        let w = p3_example();
        let r = w.ring().clone();
        let i = persistent_ideal(&w).unwrap();
        let j = singular_ideal(&w);
        assert!(i.radical_equal(&j).unwrap());
        assert!(!i.contains(&r.one()).unwrap());
    }

    #[test]
    fn a3_special_persistent_ideal_is_proper() {
        let r = PolyRing::degrevlex(&["x1", "x2", "x3"]);
        let w = a3_form(&r.var(1), &(&r.var(0) + &r.var(2)), &r.var(0));
        let i = persistent_ideal(&w).unwrap();
        assert!(!i.contains(&r.one()).unwrap());
    }

    #[test]
    fn non_integrable_input_is_rejected() {
        let r = ring4();
        let w = DiffForm::from_components(
            &r,
            1,
            [(vec![3], r.one()), (vec![2], r.var(1))],
        )
        .unwrap();
        let w = FoliationForm::new(w, Ambient::Affine(4)).unwrap();
        assert!(matches!(persistent_ideal(&w), Err(Error::NotIntegrable)));
    }

    #[test]
    fn pencil_persistent_ideal_equals_singular() {
        // w = x0 dx1 - x1 dx0 in three variables: J = I = K = (x0, x1)
        let r = PolyRing::degrevlex(&["x0", "x1", "x2"]);
        let form = DiffForm::from_components(
            &r,
            1,
            [(vec![1], r.var(0)), (vec![0], -&r.var(1))],
        )
        .unwrap();
        let w = FoliationForm::new(form, Ambient::Projective(2)).unwrap();
        let j = singular_ideal(&w);
        let i = persistent_ideal(&w).unwrap();
        let k = kupka_ideal(&w).unwrap();
        let expected = Ideal::new(r.clone(), vec![r.var(0), r.var(1)]);
        assert!(j.equals(&expected).unwrap());
        assert!(i.equals(&expected).unwrap());
        assert!(k.equals(&expected).unwrap());
    }
}
