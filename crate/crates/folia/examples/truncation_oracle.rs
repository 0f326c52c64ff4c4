//! Two independent routes to the persistent ideal: exact module quotients
//! through Groebner bases versus degree-by-degree dense linear algebra.
//! The graded dimensions must match on every piece.
//!
//! ```sh
//! cargo run -p folia --example truncation_oracle
//! ```

use folia::corpus;
use folia::foliation::{graded_dimension, persistent_ideal, persistent_truncation_oracle};

fn main() {
    for source in [corpus::P3_TWO_FORM, corpus::PENCIL_BASIC, corpus::PENCIL_DEG2] {
        let w = corpus::foliation_form(source);
        let bound = w.form().max_component_degree() + 3;
        println!("form: {}", w.form());
        println!("graded comparison up to degree {}:", bound);

        let quotient_route = persistent_ideal(&w).unwrap();
        let oracle_route = persistent_truncation_oracle(&w, bound).unwrap();

        for d in 0..=bound {
            let oracle_dim = oracle_route
                .iter()
                .filter(|p| p.homogeneous_degree() == Some(d))
                .count();
            let ideal_dim = graded_dimension(&quotient_route, d);
            println!(
                "  degree {}: quotient route {} | oracle {} | {}",
                d,
                ideal_dim,
                oracle_dim,
                if oracle_dim == ideal_dim { "agree" } else { "MISMATCH" }
            );
        }
        println!();
    }
}
