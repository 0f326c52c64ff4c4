//! The commutative-algebra layer on its own: reduced Groebner bases,
//! membership, quotients, intersections, radical membership, Krull
//! dimension, and syzygies of module generators.
//!
//! ```sh
//! cargo run -p folia --example groebner_toolkit
//! ```

use folia::groebner::{syzygies, Ideal, ModVec};
use folia::poly::PolyRing;

fn main() {
    let ring = PolyRing::degrevlex(&["x", "y", "z"]);
    let (x, y, z) = (ring.var(0), ring.var(1), ring.var(2));

    // the twisted cubic: (y - x^2, z - x^3) meets the plane ideal (x)
    let cubic = Ideal::new(ring.clone(), vec![&y - &x.pow(2), &z - &x.pow(3)]);
    println!("reduced basis of the twisted cubic ideal:");
    for g in cubic.groebner_basis().unwrap() {
        println!("  {}", g);
    }
    println!("dim S/I = {}", cubic.dimension().unwrap());
    println!(
        "x*z - y^2 in I: {}",
        cubic.contains(&(&(&x * &z) - &y.pow(2))).unwrap()
    );
    println!("y + z in I: {}", cubic.contains(&(&y + &z)).unwrap());

    // quotients and intersections
    let i = Ideal::new(ring.clone(), vec![&x * &y, &x * &z]);
    let q = i.quotient_by(&x).unwrap();
    println!("((xy, xz) : x) = {:?}", q);
    let meet = Ideal::new(ring.clone(), vec![x.clone()])
        .intersect(&Ideal::new(ring.clone(), vec![y.clone()]))
        .unwrap();
    println!("(x) /\\ (y) = {:?}", meet);

    // radical membership by the Rabinowitsch trick
    let fat = Ideal::new(ring.clone(), vec![x.pow(3), &y.pow(2) * &x]);
    println!(
        "x in sqrt((x^3, x*y^2)): {}",
        fat.radical_contains(&x).unwrap()
    );
    println!(
        "y in sqrt((x^3, x*y^2)): {}",
        fat.radical_contains(&y).unwrap()
    );

    // syzygies of (x, y, z): the Koszul relations
    let cols = vec![
        ModVec::from_polynomial(x.clone()),
        ModVec::from_polynomial(y.clone()),
        ModVec::from_polynomial(z.clone()),
    ];
    let syz = syzygies(&ring, 1, &cols).unwrap();
    println!("syzygies of (x, y, z):");
    for s in syz.generators() {
        println!("  {:?}", s);
    }
}
