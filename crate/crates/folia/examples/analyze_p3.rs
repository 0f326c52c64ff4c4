//! Full singularity analysis of the degree-3 two-form on P^3 obtained by
//! contracting the volume form with the radial field and a coordinate
//! field. Its singular locus is a reduced point whose ideal coincides with
//! the persistent and Kupka ideals.
//!
//! ```sh
//! cargo run -p folia --example analyze_p3
//! ```

use folia::extalg::{DiffForm, MultiVector, PointQ};
use folia::foliation::{inclusion_report, Ambient, FoliationForm};
use folia::poly::PolyRing;

fn main() {
    let ring = PolyRing::degrevlex(&["x0", "x1", "x2", "x3"]);

    // w = i_{d/dx0}(i_R(dx0^dx1^dx2^dx3))
    let volume = DiffForm::term(&ring, ring.one(), &[0, 1, 2, 3]).unwrap();
    let radial = MultiVector::euler(&ring);
    let w = MultiVector::basis(&ring, &[0])
        .contract(&radial.contract(&volume).unwrap())
        .unwrap();
    println!("w  = {}", w);
    println!("dw = {}", w.exterior_derivative());

    let w = FoliationForm::new(w, Ambient::Projective(3)).unwrap();
    println!("twist degree: {:?}", w.twist_degree());

    let report = inclusion_report(&w).unwrap();
    println!(
        "checks: plucker={} frobenius={} descent={:?}",
        report.checks.plucker, report.checks.frobenius, report.checks.descent
    );
    println!("J = {:?}  (cone dim {})", report.singular, report.dimensions.singular);
    println!("I = {:?}  (cone dim {})", report.persistent, report.dimensions.persistent);
    println!("K = {:?}  (cone dim {})", report.kupka, report.dimensions.kupka);
    println!("defect = {:?}", report.defect);
    println!(
        "inclusions: J<=I {} | I<=K {} | J<=K {}",
        report.inclusions.j_in_i, report.inclusions.i_in_k, report.inclusions.j_in_k
    );

    let p = PointQ::from_i64(&[1, 0, 0, 0]);
    println!(
        "(1:0:0:0) is a Kupka point: {}",
        w.is_kupka_point(&p).unwrap()
    );
    println!(
        "projective codimension of Sing(w): {}",
        w.ring().nvars() as i64 - report.dimensions.singular
    );
}
