//! The codimension-2 family w = f3 dx1^dx2 + f2 dx1^dx3 + f1 dx2^dx3 on
//! affine 3-space, annihilated by the vector field
//! v = f1 d1 - f2 d2 + f3 d3.
//!
//! For generic f the Kupka ideal equals the singular ideal; the tangent
//! 1-form module needs three generators and is not locally free, with
//! decomposability defect (f1, f2, f3). Specializing to f = (x2, x1+x3, x1)
//! makes dw = 0, so K becomes the unit ideal while 1 stays outside I: Kupka
//! points disappear but persistent singular points remain.
//!
//! ```sh
//! cargo run -p folia --example a3_family
//! ```

use folia::extalg::{DiffForm, MultiVector};
use folia::foliation::{
    decomposability_defect, inclusion_report, kupka_ideal, persistent_ideal, singular_ideal,
    tangent_frame, Ambient, FoliationForm,
};
use folia::poly::{PolyRing, Polynomial};

fn family(ring: &PolyRing, f1: &Polynomial, f2: &Polynomial, f3: &Polynomial) -> FoliationForm {
    let form = DiffForm::from_components(
        ring,
        2,
        [
            (vec![0, 1], f3.clone()),
            (vec![0, 2], f2.clone()),
            (vec![1, 2], f1.clone()),
        ],
    )
    .unwrap();
    FoliationForm::new(form, Ambient::Affine(3)).unwrap()
}

fn main() {
    let ring = PolyRing::degrevlex(&["x1", "x2", "x3"]);

    println!("== generic member: f = (x1, x2, x3) ==");
    let w = family(&ring, &ring.var(0), &ring.var(1), &ring.var(2));
    let v = MultiVector::from_components(
        &ring,
        1,
        [
            (vec![0], ring.var(0)),
            (vec![1], -&ring.var(1)),
            (vec![2], ring.var(2)),
        ],
    )
    .unwrap();
    println!("i_v(w) = {}", v.contract(w.form()).unwrap());

    let frame = tangent_frame(&w).unwrap();
    println!("E(w) generators:");
    for g in frame.generators() {
        println!("  {}", g);
    }
    println!("relations among them: {}", frame.relations().generators().len());
    let defect = decomposability_defect(&w, &frame).unwrap();
    println!("defect ideal: {:?}", defect);
    println!(
        "K = J: {}",
        kupka_ideal(&w).unwrap().equals(&singular_ideal(&w)).unwrap()
    );

    println!();
    println!("== specialized member: f = (x2, x1+x3, x1) ==");
    let w = family(&ring, &ring.var(1), &(&ring.var(0) + &ring.var(2)), &ring.var(0));
    println!("dw = {}", w.form().exterior_derivative());
    let report = inclusion_report(&w).unwrap();
    println!("K = {:?} (unit: {})", report.kupka, report.kupka.is_unit().unwrap());
    let i = persistent_ideal(&w).unwrap();
    println!("1 in I: {}", i.contains(&ring.one()).unwrap());
    println!(
        "I <= K holds vacuously ({}), asserted by the theory: {}",
        report.inclusions.i_in_k, report.inclusions.i_in_k_asserted
    );
}
