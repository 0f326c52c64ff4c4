//! Built-in corpus: the worked examples plus a family of integrable
//! codimension-1 forms, with their expected outcomes wired in. The corpus
//! backs `folia corpus` and the acceptance suite.

use crate::dsl::{parse, InputDocument};
use crate::error::{Error, Result};
use crate::extalg::{DiffForm, MultiVector, PointQ};
use crate::foliation::{
    self, inclusion_report, persistent_ideal, tangent_frame, FoliationForm,
};
use crate::groebner::{syzygies, Ideal, ModVec, Submodule};
use crate::poly::PolyRing;
use crate::report::oracle_matches_ideal;
use crate::unfolding;

pub struct CorpusCase {
    pub name: &'static str,
    pub source: &'static str,
}

pub const P3_TWO_FORM: &str = "ring projective x0 x1 x2 x3;\n\
form w = -x3*dx1^dx2 + x2*dx1^dx3 - x1*dx2^dx3;\n\
point kupka = (1, 0, 0, 0);\n";

pub const A3_GENERIC: &str = "ring affine x1 x2 x3;\n\
form w = x3*dx1^dx2 + x2*dx1^dx3 + x1*dx2^dx3;\n";

pub const A3_SPECIAL: &str = "ring affine x1 x2 x3;\n\
form w = x1*dx1^dx2 + (x1+x3)*dx1^dx3 + x2*dx2^dx3;\n\
point origin = (0, 0, 0);\n";

/// Codimension-1 integrable homogeneous forms: a coordinate pencil, three
/// rational pencils `l*f*dg - m*g*df`, a logarithmic form, and the pencil
/// again on a larger space.
pub const PENCIL_BASIC: &str = "ring projective x0 x1 x2;\nform w = x0*dx1 - x1*dx0;\n";
pub const PENCIL_DEG2: &str =
    "ring projective x0 x1 x2;\nform w = x0*x1*dx2 + x0*x2*dx1 - 2*x1*x2*dx0;\n";
pub const LOG_WEIGHTS: &str =
    "ring projective x0 x1 x2;\nform w = x1*x2*dx0 + 2*x0*x2*dx1 - 3*x0*x1*dx2;\n";
pub const PENCIL_CONIC: &str = "ring projective x0 x1 x2;\n\
form w = (-2*x1^2 - x0*x2)*dx0 + 2*x0*x1*dx1 + x0^2*dx2;\n";
pub const PENCIL_AXES: &str =
    "ring projective x0 x1 x2;\nform w = x1*x2*dx0 - 2*x0*x2*dx1 + x0*x1*dx2;\n";
pub const PENCIL_P3: &str = "ring projective x0 x1 x2 x3;\nform w = x0*dx1 - x1*dx0;\n";

pub const NON_INTEGRABLE: &str = "ring affine x1 x2 x3;\nform w = dx3 + x1*dx2;\n";
pub const NON_DECOMPOSABLE: &str =
    "ring affine x1 x2 x3 x4;\nform w = dx1^dx2 + dx3^dx4;\n";
pub const NONSINGULAR: &str = "ring affine x1 x2 x3;\nform w = dx1^dx2;\n";

/// The codimension-1 instances used by the inclusion-chain and radical
/// comparisons.
pub fn codim1_cases() -> Vec<CorpusCase> {
    vec![
        CorpusCase { name: "pencil_basic", source: PENCIL_BASIC },
        CorpusCase { name: "pencil_deg2", source: PENCIL_DEG2 },
        CorpusCase { name: "log_weights", source: LOG_WEIGHTS },
        CorpusCase { name: "pencil_conic", source: PENCIL_CONIC },
        CorpusCase { name: "pencil_axes", source: PENCIL_AXES },
        CorpusCase { name: "pencil_p3", source: PENCIL_P3 },
    ]
}

pub fn all_cases() -> Vec<CorpusCase> {
    let mut cases = vec![
        CorpusCase { name: "p3_twoform", source: P3_TWO_FORM },
        CorpusCase { name: "a3_generic", source: A3_GENERIC },
        CorpusCase { name: "a3_special", source: A3_SPECIAL },
    ];
    cases.extend(codim1_cases());
    cases.extend([
        CorpusCase { name: "non_integrable", source: NON_INTEGRABLE },
        CorpusCase { name: "non_decomposable", source: NON_DECOMPOSABLE },
        CorpusCase { name: "nonsingular", source: NONSINGULAR },
    ]);
    cases
}

pub fn document(source: &str) -> InputDocument {
    parse(source).expect("corpus sources are well-formed")
}

pub fn foliation_form(source: &str) -> FoliationForm {
    let doc = document(source);
    let (_, form) = doc.forms().next().expect("corpus documents declare a form");
    FoliationForm::new(form.clone(), doc.ambient()).expect("corpus forms are admissible")
}

#[derive(Debug)]
pub struct CaseOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &str, passed: bool, detail: impl Into<String>) -> CaseOutcome {
    CaseOutcome { name: name.to_string(), passed, detail: detail.into() }
}

fn expect(
    results: &mut Vec<CaseOutcome>,
    name: &str,
    check: impl FnOnce() -> Result<(bool, String)>,
) {
    match check() {
        Ok((passed, detail)) => results.push(outcome(name, passed, detail)),
        Err(e) => results.push(outcome(name, false, format!("error: {}", e))),
    }
}

fn variables_ideal(ring: &PolyRing, vars: &[usize]) -> Ideal {
    Ideal::new(ring.clone(), vars.iter().map(|&i| ring.var(i)).collect())
}

/// Reduced basis consists of single variables only.
fn generated_by_variables(ideal: &Ideal) -> Result<bool> {
    let gb = ideal.groebner_basis()?;
    Ok(!gb.is_empty()
        && gb.iter().all(|p| {
            p.num_terms() == 1
                && p.leading_term()
                    .map(|(m, c)| m.degree() == 1 && c == &crate::rational::rat(1))
                    .unwrap_or(false)
        }))
}

/// Run every built-in case against its expected outcome.
pub fn run_corpus() -> Vec<CaseOutcome> {
    let mut results = Vec::new();

    expect(&mut results, "p3_twoform", || {
        let w = foliation_form(P3_TWO_FORM);
        let ring = w.ring().clone();
        let rep = inclusion_report(&w)?;
        let max3 = variables_ideal(&ring, &[1, 2, 3]);
        let mut ok = rep.checks.plucker && rep.checks.frobenius;
        ok &= rep.checks.descent == Some(true);
        ok &= rep.singular.equals(&max3)?;
        ok &= rep.kupka.equals(&max3)?;
        ok &= rep.persistent.radical_equal(&max3)?;
        ok &= rep.dimensions.singular == 1; // projective codimension 3
        ok &= rep.defect.radical_equal(&max3)?;
        ok &= rep.inclusions.j_in_i && rep.inclusions.i_in_k && rep.inclusions.j_in_k;
        let doc = document(P3_TWO_FORM);
        let (_, p) = doc.points().next().expect("kupka point");
        ok &= w.is_kupka_point(p)?;
        ok &= foliation::is_persistent_point(&w, p)?;
        Ok((ok, "J = K = (x1,x2,x3), sqrt(I) matches, Kupka point at (1:0:0:0)".into()))
    });

    expect(&mut results, "a3_generic", || {
        let w = foliation_form(A3_GENERIC);
        let ring = w.ring().clone();
        let (f1, f2, f3) = (ring.var(0), ring.var(1), ring.var(2));
        let frame = tangent_frame(&w)?;
        let named = [
            DiffForm::from_components(
                &ring,
                1,
                [(vec![1], f3.clone()), (vec![2], f2.clone())],
            )
            .expect("valid"),
            DiffForm::from_components(&ring, 1, [(vec![0], f3.clone()), (vec![2], -&f1)])
                .expect("valid"),
            DiffForm::from_components(
                &ring,
                1,
                [(vec![0], f2.clone()), (vec![1], f1.clone())],
            )
            .expect("valid"),
        ];
        let expected = Submodule::new(
            ring.clone(),
            3,
            named.iter().map(crate::foliation::form_to_vec).collect(),
        );
        let mut ok = frame.as_submodule(&ring).equals(&expected)?;
        // relation f1 w1 + f2 w2 = f3 w3 among the named generators
        let syz = syzygies(
            &ring,
            3,
            &named
                .iter()
                .map(crate::foliation::form_to_vec)
                .collect::<Vec<_>>(),
        )?;
        ok &= syz.contains(&ModVec::new(ring.clone(), vec![f1.clone(), f2.clone(), -&f3]))?;
        let defect = foliation::decomposability_defect(&w, &frame)?;
        ok &= defect.equals(&Ideal::new(ring.clone(), vec![f1, f2, f3]))?;
        let rep = inclusion_report(&w)?;
        ok &= rep.kupka.equals(&rep.singular)?;
        ok &= rep.inclusions.j_in_i && rep.inclusions.j_in_k;
        Ok((ok, "frame matches, syzygy found, defect = (f1,f2,f3), K = J, J <= I".into()))
    });

    expect(&mut results, "a3_special", || {
        let w = foliation_form(A3_SPECIAL);
        let ring = w.ring().clone();
        let mut ok = w.form().exterior_derivative().is_zero();
        let rep = inclusion_report(&w)?;
        ok &= rep.kupka.is_unit()?;
        ok &= !rep.persistent.contains(&ring.one())?;
        ok &= rep.inclusions.j_in_i;
        ok &= !rep.inclusions.i_in_k_asserted;
        let doc = document(A3_SPECIAL);
        let (_, origin) = doc.points().next().expect("origin");
        ok &= foliation::is_persistent_point(&w, origin)?;
        ok &= !w.is_kupka_point(origin)?;
        Ok((ok, "dw = 0, K = (1), 1 not in I, chain not asserted".into()))
    });

    for case in codim1_cases() {
        expect(&mut results, case.name, || {
            let w = foliation_form(case.source);
            let rep = inclusion_report(&w)?;
            let mut ok = rep.checks.frobenius && rep.checks.descent == Some(true);
            ok &= rep.checks.torsion_free_codim;
            ok &= rep.inclusions.j_in_i && rep.inclusions.i_in_k && rep.inclusions.j_in_k;
            ok &= rep.inclusions.i_in_k_asserted;
            let mut detail = String::from("J <= I <= K generator-wise");
            if generated_by_variables(&rep.singular)? {
                let radical_match = rep.persistent.radical_equal(&rep.kupka)?;
                ok &= radical_match;
                detail.push_str("; J radical (variables), sqrt(I) = sqrt(K)");
            }
            Ok((ok, detail))
        });
    }

    expect(&mut results, "non_integrable", || {
        let w = foliation_form(NON_INTEGRABLE);
        Ok((
            !w.check_integrability() && matches!(persistent_ideal(&w), Err(Error::NotIntegrable)),
            "frobenius fails and I(w) refuses the input".into(),
        ))
    });

    expect(&mut results, "non_decomposable", || {
        let w = foliation_form(NON_DECOMPOSABLE);
        Ok((
            !w.check_plucker() && !w.check_integrability(),
            "Pluecker relations fail".into(),
        ))
    });

    expect(&mut results, "nonsingular", || {
        let w = foliation_form(NONSINGULAR);
        let rep = inclusion_report(&w)?;
        let ok = rep.singular.is_unit()?
            && rep.persistent.is_unit()?
            && rep.kupka.is_unit()?
            && rep.defect.is_unit()?;
        Ok((ok, "J = I = K = (1)".into()))
    });

    // deterministic slice of the property suites
    expect(&mut results, "oracle_agreement_p3", || {
        let w = foliation_form(P3_TWO_FORM);
        let i = persistent_ideal(&w)?;
        let bound = w.form().max_component_degree() + 3;
        Ok((
            oracle_matches_ideal(&w, &i, bound)?,
            format!("oracle and quotient agree up to degree {}", bound),
        ))
    });

    expect(&mut results, "oracle_agreement_pencil", || {
        let w = foliation_form(PENCIL_BASIC);
        let i = persistent_ideal(&w)?;
        let bound = w.form().max_component_degree() + 3;
        Ok((
            oracle_matches_ideal(&w, &i, bound)?,
            format!("oracle and quotient agree up to degree {}", bound),
        ))
    });

    expect(&mut results, "unfolding_flow_pencil", || {
        let w = foliation_form(PENCIL_BASIC);
        let ring = w.ring().clone();
        let frame = tangent_frame(&w)?;
        let mut ok = true;
        for i in 0..ring.nvars() {
            let v = MultiVector::basis(&ring, &[i]);
            let wt = unfolding::build_unfolding_along_flow(&w, &v)?;
            let datum = unfolding::UnfoldingDatum::new(
                vec![wt.deps_part().as_polynomial()],
                vec![wt.eps_part().clone()],
            );
            ok &= unfolding::verify_unfolding(&wt, &frame, &datum);
            ok &= wt.restrict() == *w.form();
        }
        Ok((ok, "flow unfoldings verify and restrict to w".into()))
    });

    expect(&mut results, "unfolding_trivial_and_nonvanishing", || {
        let ring = PolyRing::degrevlex(&["x1", "x2", "x3"]);
        let form = DiffForm::term(&ring, ring.var(0), &[0]).expect("x1 dx1");
        let w = FoliationForm::new(form, crate::foliation::Ambient::Affine(3))?;
        let wt = unfolding::build_unfolding_codim1(&w, &DiffForm::zero(ring.clone(), 1))?;
        let frame = tangent_frame(&w)?;
        let datum = unfolding::UnfoldingDatum::new(
            vec![ring.one()],
            vec![DiffForm::zero(ring.clone(), 1)],
        );
        let ok = unfolding::verify_unfolding(&wt, &frame, &datum)
            && wt.nonvanishing_at(&PointQ::from_i64(&[0, 0, 0]))?;
        Ok((ok, "w + deps does not vanish at the singular origin".into()))
    });

    results
}
