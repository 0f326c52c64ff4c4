use crate::error::{Error, Result};
use crate::extalg::{tuples, DiffForm};
use crate::groebner::{syzygies, Ideal, ModVec, Submodule};
use crate::poly::PolyRing;

use super::form::FoliationForm;

/// Generators of the module `E(w)` of tangent 1-forms (the kernel of
/// `w ^ -` on 1-forms), together with the relations among them.
///
/// `E(w)` need not be free; the relations and the decomposability defect
/// detect exactly where it fails to be.
#[derive(Debug, Clone)]
pub struct TangentFrame {
    generators: Vec<DiffForm>,
    relations: Submodule,
}

impl TangentFrame {
    pub fn new(ring: &PolyRing, generators: Vec<DiffForm>) -> Result<Self> {
        let vecs: Vec<ModVec> = generators.iter().map(form_to_vec).collect();
        let relations = syzygies(ring, ring.nvars(), &vecs)?;
        Ok(TangentFrame { generators, relations })
    }

    pub fn generators(&self) -> &[DiffForm] {
        &self.generators
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    /// The generators as a submodule of the free module of 1-forms.
    pub fn as_submodule(&self, ring: &PolyRing) -> Submodule {
        Submodule::new(
            ring.clone(),
            ring.nvars(),
            self.generators.iter().map(form_to_vec).collect(),
        )
    }
}

/// Coordinate vector of a form over the basis of increasing index tuples.
pub(crate) fn form_to_vec(form: &DiffForm) -> ModVec {
    let ring = form.ring().clone();
    let basis = tuples(ring.nvars(), form.degree());
    let entries = basis
        .iter()
        .map(|t| form.component(t.indices()))
        .collect();
    ModVec::new(ring, entries)
}

/// Rebuild a form of the given degree from its coordinate vector.
pub(crate) fn vec_to_form(ring: &PolyRing, degree: usize, v: &ModVec) -> DiffForm {
    let basis = tuples(ring.nvars(), degree);
    debug_assert_eq!(basis.len(), v.rank());
    DiffForm::from_components(
        ring,
        degree,
        basis
            .iter()
            .enumerate()
            .map(|(i, t)| (t.indices().to_vec(), v.entry(i).clone())),
    )
    .expect("tuple basis is valid")
}

/// The module of 1-forms annihilated by wedging with `w`.
///
/// For a 1-form this is the line generated by `w` itself (the image of the
/// defining line bundle); for `q >= 2` it is the kernel of
/// `w ^ - : Omega^1 -> Omega^(q+1)`, computed as the syzygies of the
/// columns `w ^ dx_i`.
pub fn tangent_frame(w: &FoliationForm) -> Result<TangentFrame> {
    let ring = w.ring().clone();
    let q = w.codimension();
    if q == 1 {
        return TangentFrame::new(&ring, vec![w.form().clone()]);
    }
    let n = ring.nvars();
    let columns: Vec<ModVec> = (0..n)
        .map(|i| {
            let wedge = w.form().wedge(&DiffForm::basis_one_form(&ring, i));
            form_to_vec(&wedge)
        })
        .collect();
    let target_rank = tuples(n, q + 1).len();
    let kernel = crate::groebner::module_kernel(&ring, target_rank, &columns)?;
    let generators: Vec<DiffForm> = kernel
        .generators()
        .iter()
        .map(|v| vec_to_form(&ring, 1, v))
        .collect();
    TangentFrame::new(&ring, generators)
}

/// The ideal `D` with `/\^q E = D * (w)`: each `q`-fold wedge of frame
/// generators is an exact polynomial multiple of `w`, and `D` collects the
/// quotients. `V(D)` is the locus where `w` is not in `/\^q E`, hence not
/// locally decomposable.
pub fn decomposability_defect(w: &FoliationForm, frame: &TangentFrame) -> Result<Ideal> {
    let ring = w.ring().clone();
    let q = w.codimension();
    let m = frame.generators().len();
    let mut quotients = Vec::new();
    for combo in tuples(m, q) {
        let mut wedge: Option<DiffForm> = None;
        for &k in combo.indices() {
            let g = &frame.generators()[k];
            wedge = Some(match wedge {
                None => g.clone(),
                Some(acc) => acc.wedge(g),
            });
        }
        let wedge = wedge.expect("q >= 1");
        match wedge.exact_div_form(w.form())? {
            Some(c) => quotients.push(c),
            None => return Err(Error::WedgeNotMultiple),
        }
    }
    Ok(Ideal::new(ring, quotients))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::form::Ambient;
    use crate::poly::Polynomial;

    fn a3_ring() -> PolyRing {
        PolyRing::degrevlex(&["x1", "x2", "x3"])
    }

    /// w = f3 dx1^dx2 + f2 dx1^dx3 + f1 dx2^dx3
    fn a3_form(r: &PolyRing, f1: &Polynomial, f2: &Polynomial, f3: &Polynomial) -> FoliationForm {
        let w = DiffForm::from_components(
            r,
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

    fn annihilated_frame(r: &PolyRing, f1: &Polynomial, f2: &Polynomial, f3: &Polynomial) -> Vec<DiffForm> {
        vec![
            // w1 = f3 dx2 + f2 dx3
            DiffForm::from_components(r, 1, [(vec![1], f3.clone()), (vec![2], f2.clone())])
                .unwrap(),
            // w2 = f3 dx1 - f1 dx3
            DiffForm::from_components(r, 1, [(vec![0], f3.clone()), (vec![2], -f1)]).unwrap(),
            // w3 = f2 dx1 + f1 dx2
            DiffForm::from_components(r, 1, [(vec![0], f2.clone()), (vec![1], f1.clone())])
                .unwrap(),
        ]
    }

    #[test]
    fn a3_generic_frame_matches_module() {
        let r = a3_ring();
        let (f1, f2, f3) = (r.var(0), r.var(1), r.var(2));
        let w = a3_form(&r, &f1, &f2, &f3);
        let frame = tangent_frame(&w).unwrap();
        let computed = frame.as_submodule(&r);
        let expected = Submodule::new(
            r.clone(),
            3,
            annihilated_frame(&r, &f1, &f2, &f3).iter().map(form_to_vec).collect(),
        );
        assert!(computed.equals(&expected).unwrap());
    }

    #[test]
    fn a3_relations_contain_expected_syzygy() {
        // f1 w1 + f2 w2 = f3 w3 among the named generators
        let r = a3_ring();
        let (f1, f2, f3) = (r.var(0), r.var(1), r.var(2));
        let gens: Vec<ModVec> = annihilated_frame(&r, &f1, &f2, &f3).iter().map(form_to_vec).collect();
        let syz = syzygies(&r, 3, &gens).unwrap();
        let rel = ModVec::new(r.clone(), vec![f1, f2, -&f3]);
        assert!(syz.contains(&rel).unwrap());
    }

    #[test]
    fn constant_two_form_frame() {
        let r = a3_ring();
        let w = DiffForm::term(&r, r.one(), &[0, 1]).unwrap();
        let w = FoliationForm::new(w, Ambient::Affine(3)).unwrap();
        let frame = tangent_frame(&w).unwrap();
        let expected = Submodule::new(
            r.clone(),
            3,
            vec![
                form_to_vec(&DiffForm::basis_one_form(&r, 0)),
                form_to_vec(&DiffForm::basis_one_form(&r, 1)),
            ],
        );
        assert!(frame.as_submodule(&r).equals(&expected).unwrap());
        let d = decomposability_defect(&w, &frame).unwrap();
        assert!(d.is_unit().unwrap());
    }

    #[test]
    fn a3_defect_ideal() {
        let r = a3_ring();
        let (f1, f2, f3) = (r.var(0), r.var(1), r.var(2));
        let w = a3_form(&r, &f1, &f2, &f3);
        let frame = TangentFrame::new(&r, annihilated_frame(&r, &f1, &f2, &f3)).unwrap();
        let d = decomposability_defect(&w, &frame).unwrap();
        let want = Ideal::new(r.clone(), vec![f1, f2, f3]);
        assert!(d.equals(&want).unwrap());
    }

    #[test]
    fn q1_frame_is_the_form_itself() {
        let r = a3_ring();
        let form = DiffForm::from_components(
            &r,
            1,
            [(vec![0], r.var(1)), (vec![1], -&r.var(0))],
        )
        .unwrap();
        let w = FoliationForm::new(form.clone(), Ambient::Affine(3)).unwrap();
        let frame = tangent_frame(&w).unwrap();
        assert_eq!(frame.generators(), &[form]);
        assert!(frame.relations().generators().is_empty());
        let d = decomposability_defect(&w, &frame).unwrap();
        assert!(d.is_unit().unwrap());
    }
}
