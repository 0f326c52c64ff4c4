//! Graded truncation oracle for the persistent ideal.
//!
//! An independent verification route for [`super::ideals::persistent_ideal`]:
//! instead of module quotients it solves, degree by degree, the linear
//! systems `h * d(eta_k) in F^1` by dense exact Gaussian elimination over
//! the rationals. No Groebner reduction is involved; only the frame
//! generators are shared between the two paths.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extalg::{tuples, DiffForm, IndexTuple};
use crate::groebner::Ideal;
use crate::linalg::QMatrix;
use crate::poly::{monomials_of_degree, Monomial, Polynomial};
use crate::rational::Rational;

use super::form::FoliationForm;
use super::frame::{tangent_frame, TangentFrame};

/// Coordinates of a homogeneous 2-form of coefficient degree `d` over the
/// basis {monomial x index tuple}.
fn two_form_coords(
    form: &DiffForm,
    monos: &[Monomial],
    pairs: &[IndexTuple],
) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); monos.len() * pairs.len()];
    for (ti, t) in pairs.iter().enumerate() {
        let p = form.component(t.indices());
        for (m, c) in p.terms() {
            let mi = monos
                .iter()
                .position(|cand| cand == m)
                .expect("monomial of stated degree");
            v[ti * monos.len() + mi] = c.clone();
        }
    }
    v
}

fn intersect_rowspaces(a: Vec<Vec<Rational>>, b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let dim = a[0].len();
    // columns: coefficients on a-basis then b-basis; kernel rows give
    // identical vectors expressed both ways
    let mut m = QMatrix::zeros(dim, a.len() + b.len());
    for (j, v) in a.iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            m.set(i, j, c.clone());
        }
    }
    for (j, v) in b.iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            m.set(i, a.len() + j, -c.clone());
        }
    }
    let mut out = Vec::new();
    for k in m.kernel_basis() {
        let mut vec = vec![Rational::zero(); dim];
        for (j, coeff) in k[..a.len()].iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for i in 0..dim {
                vec[i] += coeff * &a[j][i];
            }
        }
        if vec.iter().any(|c| !c.is_zero()) {
            out.push(vec);
        }
    }
    canonical_rows(out)
}

fn canonical_rows(rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    if rows.is_empty() {
        return rows;
    }
    let mut m = QMatrix::from_rows(rows);
    let pivots = m.rref();
    (0..pivots.len())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
        .collect()
}

/// For each degree `d <= max_degree`, a basis of
/// `{h in S_d : h * d(eta_k) in F^1 for every frame generator eta_k}`,
/// returned as homogeneous polynomials in increasing degree.
pub fn persistent_truncation_oracle(
    w: &FoliationForm,
    max_degree: u32,
) -> Result<Vec<Polynomial>> {
    let frame = tangent_frame(w)?;
    oracle_with_frame(w, &frame, max_degree)
}

/// As [`persistent_truncation_oracle`] with a caller-supplied frame.
pub fn oracle_with_frame(
    w: &FoliationForm,
    frame: &TangentFrame,
    max_degree: u32,
) -> Result<Vec<Polynomial>> {
    if w.form().homogeneous_component_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let ring = w.ring().clone();
    let n = ring.nvars();
    let pairs = tuples(n, 2);

    // frame differentials with their coefficient degrees
    let mut constraints: Vec<(DiffForm, u32)> = Vec::new();
    for g in frame.generators() {
        let d = g.exterior_derivative();
        if d.is_zero() {
            continue;
        }
        let deg = d
            .homogeneous_component_degree()
            .ok_or(Error::NotHomogeneous)?;
        constraints.push((d, deg));
    }
    // products eta_j ^ dx_i generating F^1, by coefficient degree
    let mut f1_gens: Vec<(DiffForm, u32)> = Vec::new();
    for g in frame.generators() {
        let deg = g
            .homogeneous_component_degree()
            .ok_or(Error::NotHomogeneous)?;
        for i in 0..n {
            let wedge = g.wedge(&DiffForm::basis_one_form(&ring, i));
            if !wedge.is_zero() {
                f1_gens.push((wedge, deg));
            }
        }
    }

    let mut result = Vec::new();
    for d in 0..=max_degree {
        let monos_h = monomials_of_degree(n, d);
        let dim_h = monos_h.len();
        if constraints.is_empty() {
            // no conditions: every h qualifies
            for m in &monos_h {
                result.push(Polynomial::monomial(
                    ring.clone(),
                    m.clone(),
                    crate::rational::rat(1),
                ));
            }
            continue;
        }
        let mut space: Option<Vec<Vec<Rational>>> = None;
        for (dk, ek) in &constraints {
            let target_deg = d + ek;
            let target_monos = monomials_of_degree(n, target_deg);
            let target_dim = target_monos.len() * pairs.len();
            // columns: h-monomials mapped through h -> h*dk, then F^1
            // multiples to subtract
            let mut cols: Vec<Vec<Rational>> = Vec::new();
            for m in &monos_h {
                let image = dk.scale_poly(&Polynomial::monomial(
                    ring.clone(),
                    m.clone(),
                    crate::rational::rat(1),
                ));
                cols.push(two_form_coords(&image, &target_monos, &pairs));
            }
            let h_cols = cols.len();
            for (gen, gdeg) in &f1_gens {
                if *gdeg > target_deg {
                    continue;
                }
                for m in monomials_of_degree(n, target_deg - gdeg) {
                    let image = gen.scale_poly(&Polynomial::monomial(
                        ring.clone(),
                        m,
                        crate::rational::rat(-1),
                    ));
                    cols.push(two_form_coords(&image, &target_monos, &pairs));
                }
            }
            let mut mat = QMatrix::zeros(target_dim, cols.len());
            for (j, col) in cols.iter().enumerate() {
                for (i, c) in col.iter().enumerate() {
                    if !c.is_zero() {
                        mat.set(i, j, c.clone());
                    }
                }
            }
            let mut sol: Vec<Vec<Rational>> = Vec::new();
            for k in mat.kernel_basis() {
                let h_part: Vec<Rational> = k[..h_cols].to_vec();
                if h_part.iter().any(|c| !c.is_zero()) {
                    sol.push(h_part);
                }
            }
            let sol = canonical_rows(sol);
            space = Some(match space {
                None => sol,
                Some(cur) => intersect_rowspaces(cur, &sol),
            });
            if space.as_ref().map(|s| s.is_empty()).unwrap_or(false) {
                break;
            }
        }
        if let Some(rows) = space {
            for row in rows {
                debug_assert_eq!(row.len(), dim_h);
                let p = Polynomial::from_terms(
                    ring.clone(),
                    monos_h
                        .iter()
                        .cloned()
                        .zip(row)
                        .filter(|(_, c)| !c.is_zero()),
                );
                if !p.is_zero() {
                    result.push(p);
                }
            }
        }
    }
    Ok(result)
}

/// Dimension of the degree-`d` graded piece of a homogeneous ideal,
/// computed by linear algebra on monomial multiples of the generators.
pub fn graded_dimension(ideal: &Ideal, degree: u32) -> usize {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let monos = monomials_of_degree(n, degree);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in ideal.generators() {
        let gd = g
            .homogeneous_degree()
            .expect("graded dimension requires homogeneous generators");
        if gd > degree {
            continue;
        }
        for m in monomials_of_degree(n, degree - gd) {
            let prod = g.mul_monomial(&m);
            let mut row = vec![Rational::zero(); monos.len()];
            for (pm, c) in prod.terms() {
                let idx = monos.iter().position(|cand| cand == pm).expect("degree match");
                row[idx] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return 0;
    }
    QMatrix::from_rows(rows).rank()
}
