use crate::error::{Error, Result};
use crate::extalg::{DiffForm, MultiVector};
use crate::foliation::{FoliationForm, TangentFrame};
use crate::groebner::Submodule;
use crate::poly::{PolyRing, Polynomial};

use super::dual::DualForm;

/// The data of a first-order unfolding of a decomposed `q`-form: the
/// deformed factors are `w_i + eps eta_i + h_i deps`.
#[derive(Debug, Clone)]
pub struct UnfoldingDatum {
    pub h: Vec<Polynomial>,
    pub eta: Vec<DiffForm>,
    pub alpha: Option<Vec<Vec<DiffForm>>>,
}

impl UnfoldingDatum {
    pub fn new(h: Vec<Polynomial>, eta: Vec<DiffForm>) -> Self {
        UnfoldingDatum { h, eta, alpha: None }
    }
}

/// The unfolding `w + eps eta + deps` of a codimension-1 form, valid
/// exactly when `dw = w ^ eta`.
pub fn build_unfolding_codim1(w: &FoliationForm, eta: &DiffForm) -> Result<DualForm> {
    if w.codimension() != 1 {
        return Err(Error::DatumLengthMismatch { q: w.codimension() });
    }
    let dw = w.form().exterior_derivative();
    if dw != w.form().wedge(eta) {
        return Err(Error::UnfoldingEtaMismatch);
    }
    let ring = w.ring().clone();
    DualForm::new(
        w.form().clone(),
        eta.clone(),
        DiffForm::from_polynomial(ring.one()),
        DiffForm::zero(ring, 0),
    )
}

/// The unfolding of a codimension-1 form along the flow of a vector field:
/// `w + eps L_v(w) + i_v(w) deps`, where `L_v = i_v d + d i_v` is the Lie
/// derivative. Valid for every integrable `w`, since contracting
/// `w ^ dw = 0` gives `i_v(w) dw = w ^ i_v(dw)`.
pub fn build_unfolding_along_flow(w: &FoliationForm, v: &MultiVector) -> Result<DualForm> {
    if w.codimension() != 1 || v.degree() != 1 {
        return Err(Error::DatumLengthMismatch { q: w.codimension() });
    }
    if !w.check_integrability() {
        return Err(Error::NotIntegrable);
    }
    let h = v.contract(w.form())?.as_polynomial();
    let dh = DiffForm::from_polynomial(h.clone()).exterior_derivative();
    let lie = &v.contract(&w.form().exterior_derivative())? + &dh;
    let ring = w.ring().clone();
    DualForm::new(
        w.form().clone(),
        lie,
        DiffForm::from_polynomial(h),
        DiffForm::zero(ring, 0),
    )
}

fn frame_f1_with_tags(
    ring: &PolyRing,
    frame: &TangentFrame,
) -> (Submodule, Vec<(usize, usize)>) {
    let n = ring.nvars();
    let rank = crate::extalg::tuples(n, 2).len();
    let mut gens = Vec::new();
    let mut tags = Vec::new();
    for (j, g) in frame.generators().iter().enumerate() {
        for i in 0..n {
            let wedge = g.wedge(&DiffForm::basis_one_form(ring, i));
            if !wedge.is_zero() {
                gens.push(crate::foliation::form_to_vec(&wedge));
                tags.push((j, i));
            }
        }
    }
    (Submodule::new(ring.clone(), rank, gens), tags)
}

/// Solve the flatness relations `d(w_i) = sum_j alpha_ij ^ w_j` for the
/// frame generators, via cofactor lifts through `F^1`. `None` when some
/// `d(w_i)` is not in `F^1` (no polynomial solution exists).
pub fn solve_flatness(
    ring: &PolyRing,
    frame: &TangentFrame,
) -> Result<Option<Vec<Vec<DiffForm>>>> {
    let q = frame.generators().len();
    let (f1, tags) = frame_f1_with_tags(ring, frame);
    let mut alpha = Vec::with_capacity(q);
    for gi in frame.generators() {
        let d = gi.exterior_derivative();
        if d.is_zero() {
            alpha.push(vec![DiffForm::zero(ring.clone(), 1); q]);
            continue;
        }
        let cof = match f1.contains_with_cofactors(&crate::foliation::form_to_vec(&d))? {
            None => return Ok(None),
            Some(c) => c,
        };
        // d(w_i) = sum c_(j,k) (w_j ^ dx_k) = sum_j w_j ^ beta_j
        //        = sum_j (-beta_j) ^ w_j
        let mut row = vec![DiffForm::zero(ring.clone(), 1); q];
        for (c, &(j, k)) in cof.iter().zip(&tags) {
            if c.is_zero() {
                continue;
            }
            let term = DiffForm::term(ring, -c, &[k]).expect("coordinate index");
            row[j] = &row[j] + &term;
        }
        alpha.push(row);
    }
    // the lift guarantees the identity; keep the cheap cross-check
    for (i, gi) in frame.generators().iter().enumerate() {
        let mut sum = DiffForm::zero(ring.clone(), 2);
        for (j, gj) in frame.generators().iter().enumerate() {
            sum = &sum + &alpha[i][j].wedge(gj);
        }
        debug_assert_eq!(sum, gi.exterior_derivative());
    }
    Ok(Some(alpha))
}

/// Assemble the unfolding `/\_i (w_i + eps eta_i + h_i deps)` from flatness
/// data, with `eta_i := dh_i - sum_j h_j alpha_ij`, which satisfies the
/// unfolding equation identically.
pub fn build_unfolding_codimq(
    ring: &PolyRing,
    frame: &TangentFrame,
    h: &[Polynomial],
    alpha: &[Vec<DiffForm>],
) -> Result<(DualForm, UnfoldingDatum)> {
    let q = frame.generators().len();
    if h.len() != q || alpha.len() != q || alpha.iter().any(|row| row.len() != q) {
        return Err(Error::DatumLengthMismatch { q });
    }
    for (i, gi) in frame.generators().iter().enumerate() {
        let mut sum = DiffForm::zero(ring.clone(), 2);
        for (j, gj) in frame.generators().iter().enumerate() {
            sum = &sum + &alpha[i][j].wedge(gj);
        }
        if sum != gi.exterior_derivative() {
            return Err(Error::FlatnessViolated);
        }
    }
    let mut eta = Vec::with_capacity(q);
    for i in 0..q {
        let mut e = DiffForm::from_polynomial(h[i].clone()).exterior_derivative();
        for j in 0..q {
            e = &e - &alpha[i][j].scale_poly(&h[j]);
        }
        eta.push(e);
    }
    let mut product: Option<DualForm> = None;
    for i in 0..q {
        let factor = DualForm::new(
            frame.generators()[i].clone(),
            eta[i].clone(),
            DiffForm::from_polynomial(h[i].clone()),
            DiffForm::zero(ring.clone(), 0),
        )?;
        product = Some(match product {
            None => factor,
            Some(acc) => acc.wedge(&factor),
        });
    }
    let datum = UnfoldingDatum {
        h: h.to_vec(),
        eta,
        alpha: Some(alpha.to_vec()),
    };
    Ok((product.expect("q >= 1"), datum))
}

/// Check the unfolding equations exactly.
///
/// For `q = 1` this is the `deps` component of `wt ^ d(wt)` (the base
/// component, the classical integrability of `w`, is checked alongside).
/// For `q >= 2` it is, for each `i`,
///
/// ```text
/// (dh_i - eta_i) ^ w + d(w_i) ^ (sum_j (-1)^j h_j w_jhat) = 0
/// ```
///
/// with `w = w_1 ^ ... ^ w_q` and `w_jhat` omitting the `j`-th factor.
/// The remaining first-order equations are implied by these.
pub fn verify_unfolding(wt: &DualForm, frame: &TangentFrame, datum: &UnfoldingDatum) -> bool {
    let q = wt.degree();
    if q == 1 {
        let obstruction = wt.wedge(&wt.derivative());
        return obstruction.base().is_zero() && obstruction.deps_part().is_zero();
    }
    if frame.generators().len() != q || datum.h.len() != q || datum.eta.len() != q {
        return false;
    }
    let ring = frame.generators()[0].ring().clone();
    let mut full: Option<DiffForm> = None;
    for g in frame.generators() {
        full = Some(match full {
            None => g.clone(),
            Some(acc) => acc.wedge(g),
        });
    }
    let full = full.expect("q >= 1");
    for i in 0..q {
        let dh = DiffForm::from_polynomial(datum.h[i].clone()).exterior_derivative();
        let lhs1 = (&dh - &datum.eta[i]).wedge(&full);
        let mut sum = DiffForm::zero(ring.clone(), q - 1);
        for j in 0..q {
            let mut hat: Option<DiffForm> = None;
            for (k, g) in frame.generators().iter().enumerate() {
                if k == j {
                    continue;
                }
                hat = Some(match hat {
                    None => g.clone(),
                    Some(acc) => acc.wedge(g),
                });
            }
            let hat = hat.expect("q >= 2");
            let signed = if (j + 1) % 2 == 1 {
                -&hat.scale_poly(&datum.h[j])
            } else {
                hat.scale_poly(&datum.h[j])
            };
            sum = &sum + &signed;
        }
        let lhs2 = frame.generators()[i].exterior_derivative().wedge(&sum);
        if !(&lhs1 + &lhs2).is_zero() {
            return false;
        }
    }
    true
}
