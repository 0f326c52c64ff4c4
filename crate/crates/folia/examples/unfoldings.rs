//! First-order infinitesimal unfoldings over k[eps]/(eps^2).
//!
//! A codimension-1 form deforms along the flow of any polynomial vector
//! field; a decomposed q-form deforms from flatness data
//! d(w_i) = sum_j alpha_ij ^ w_j. Both constructions are verified against
//! the unfolding equations exactly.
//!
//! ```sh
//! cargo run -p folia --example unfoldings
//! ```

use folia::extalg::{DiffForm, MultiVector, PointQ};
use folia::foliation::{tangent_frame, Ambient, FoliationForm, TangentFrame};
use folia::poly::PolyRing;
use folia::unfolding::{
    build_unfolding_along_flow, build_unfolding_codim1, build_unfolding_codimq, solve_flatness,
    verify_unfolding, UnfoldingDatum,
};

fn main() {
    let ring = PolyRing::degrevlex(&["x1", "x2", "x3"]);

    println!("== codimension 1: w = x1 dx1 (closed, singular along x1 = 0) ==");
    let form = DiffForm::term(&ring, ring.var(0), &[0]).unwrap();
    let w = FoliationForm::new(form, Ambient::Affine(3)).unwrap();
    let wt = build_unfolding_codim1(&w, &DiffForm::zero(ring.clone(), 1)).unwrap();
    println!("unfolding: {:?}", wt);
    let frame = tangent_frame(&w).unwrap();
    let datum = UnfoldingDatum::new(vec![ring.one()], vec![DiffForm::zero(ring.clone(), 1)]);
    println!("equation holds: {}", verify_unfolding(&wt, &frame, &datum));
    let origin = PointQ::from_i64(&[0, 0, 0]);
    println!(
        "w vanishes at the origin, the unfolding does not: {} / {}",
        w.form().evaluate(&origin).unwrap().is_zero(),
        wt.nonvanishing_at(&origin).unwrap()
    );

    println!();
    println!("== codimension 1: pencil deformed along coordinate flows ==");
    let pencil = DiffForm::from_components(
        &ring,
        1,
        [(vec![1], ring.var(0)), (vec![0], -&ring.var(1))],
    )
    .unwrap();
    let w = FoliationForm::new(pencil, Ambient::Affine(3)).unwrap();
    let frame = tangent_frame(&w).unwrap();
    for i in 0..3 {
        let v = MultiVector::basis(&ring, &[i]);
        let wt = build_unfolding_along_flow(&w, &v).unwrap();
        let datum = UnfoldingDatum::new(
            vec![wt.deps_part().as_polynomial()],
            vec![wt.eps_part().clone()],
        );
        println!(
            "flow of d/dx{}: h = {}, verified = {}",
            i + 1,
            wt.deps_part().as_polynomial(),
            verify_unfolding(&wt, &frame, &datum)
        );
    }

    println!();
    println!("== codimension 2: product frame with nonconstant alpha ==");
    let w1 = DiffForm::from_components(
        &ring,
        1,
        [(vec![0], ring.one()), (vec![1], ring.var(0))],
    )
    .unwrap();
    let w2 = DiffForm::basis_one_form(&ring, 1);
    let frame = TangentFrame::new(&ring, vec![w1, w2]).unwrap();
    let alpha = solve_flatness(&ring, &frame).unwrap().expect("flatness solvable");
    for (i, row) in alpha.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            if !a.is_zero() {
                println!("alpha[{}][{}] = {}", i + 1, j + 1, a);
            }
        }
    }
    let h = vec![ring.var(2), ring.one()];
    let (wt, datum) = build_unfolding_codimq(&ring, &frame, &h, &alpha).unwrap();
    println!("restriction: {}", wt.restrict());
    println!("equation holds: {}", verify_unfolding(&wt, &frame, &datum));
}
