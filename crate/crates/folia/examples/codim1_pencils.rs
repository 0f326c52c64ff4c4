//! Codimension-1 foliations on projective space from rational pencils
//! l*f*dg - m*g*df: descent, integrability, and the inclusion chain
//! J <= I <= K, with the radicals of I and K coinciding whenever the
//! singular ideal is radical.
//!
//! ```sh
//! cargo run -p folia --example codim1_pencils
//! ```

use folia::extalg::DiffForm;
use folia::foliation::{inclusion_report, Ambient, FoliationForm};
use folia::poly::{PolyRing, Polynomial};
use folia::rational::rat;

/// l*f*dg - m*g*df as a 1-form; descends to P^n when l*deg(g) = m*deg(f).
fn pencil(f: &Polynomial, g: &Polynomial, l: i64, m: i64) -> DiffForm {
    let df = DiffForm::from_polynomial(f.clone()).exterior_derivative();
    let dg = DiffForm::from_polynomial(g.clone()).exterior_derivative();
    &dg.scale_poly(&f.scaled(&rat(l))) - &df.scale_poly(&g.scaled(&rat(m)))
}

fn main() {
    let ring = PolyRing::degrevlex(&["x0", "x1", "x2"]);

    let instances: Vec<(String, DiffForm)> = vec![
        (
            "x0 dx1 - x1 dx0".into(),
            pencil(&ring.var(0), &ring.var(1), 1, 1),
        ),
        (
            "pencil of x0 and x1*x2".into(),
            pencil(&ring.var(0), &(&ring.var(1) * &ring.var(2)), 1, 2),
        ),
        (
            "pencil of x0 and the conic x1^2 + x0*x2".into(),
            pencil(
                &ring.var(0),
                &(&ring.var(1).pow(2) + &(&ring.var(0) * &ring.var(2))),
                1,
                2,
            ),
        ),
        (
            "pencil of x1 and x0*x2".into(),
            pencil(&ring.var(1), &(&ring.var(0) * &ring.var(2)), 1, 2),
        ),
    ];

    for (name, form) in instances {
        println!("== {} ==", name);
        println!("w = {}", form);
        let w = FoliationForm::new(form, Ambient::Projective(2)).unwrap();
        println!(
            "descends: {} | integrable: {}",
            w.check_descent().unwrap(),
            w.check_integrability()
        );
        let report = inclusion_report(&w).unwrap();
        println!("J = {:?}", report.singular);
        println!("I = {:?}", report.persistent);
        println!("K = {:?}", report.kupka);
        println!(
            "chain J<=I<=K: {} {} | sqrt(I) = sqrt(K): {}",
            report.inclusions.j_in_i,
            report.inclusions.i_in_k,
            report.persistent.radical_equal(&report.kupka).unwrap()
        );
        println!();
    }
}
