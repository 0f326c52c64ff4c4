//! Analysis orchestration and the JSON report document.
//!
//! Reports are deterministic: ideal generators are printed as reduced
//! Groebner bases in the ring's term order, keys serialize in declaration
//! order, and timings are included only on request so that identical inputs
//! produce byte-identical output.

use std::fmt::Write as _;

use serde::Serialize;

use crate::dsl::InputDocument;
use crate::error::Error;
use crate::error::Result;
use crate::extalg::DiffForm;
use crate::foliation::{self, inclusion_report, tangent_frame, FoliationForm};
use crate::groebner::{limits, Ideal, Submodule};
use crate::unfolding;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Ideals,
    Compare,
    Decompose,
    Unfold,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Ideals => "ideals",
            Command::Compare => "compare",
            Command::Decompose => "decompose",
            Command::Unfold => "unfold",
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Graded bound for the truncation-oracle comparison; defaults to the
    /// maximal component degree plus three.
    pub max_degree: Option<u32>,
    /// Include wall-clock timing in the report.
    pub timing: bool,
}

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub input: String,
    pub forms: Vec<FormReport>,
    pub limits: LimitsEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct LimitsEcho {
    pub max_spairs: usize,
}

#[derive(Debug, Serialize)]
pub struct FormReport {
    pub name: String,
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals: Option<IdealsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inclusions: Option<InclusionsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<DimensionsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparisons: Option<ComparisonsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame: Option<FrameJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unfolding: Option<UnfoldingJson>,
}

impl FormReport {
    fn bare(name: &str, degree: usize) -> Self {
        FormReport {
            name: name.to_string(),
            degree,
            error: None,
            checks: None,
            ideals: None,
            inclusions: None,
            dimensions: None,
            comparisons: None,
            frame: None,
            unfolding: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ChecksJson {
    pub plucker: bool,
    pub frobenius: bool,
    pub descent: Option<bool>,
    pub torsion_free_codim: bool,
}

#[derive(Debug, Serialize)]
pub struct IdealsJson {
    #[serde(rename = "J")]
    pub j: Vec<String>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(rename = "K")]
    pub k: Vec<String>,
    pub defect: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct InclusionsJson {
    pub j_in_i: bool,
    pub i_in_k: bool,
    pub j_in_k: bool,
    pub i_in_k_asserted: bool,
}

#[derive(Debug, Serialize)]
pub struct DimensionsJson {
    #[serde(rename = "J")]
    pub j: i64,
    #[serde(rename = "I")]
    pub i: i64,
    #[serde(rename = "K")]
    pub k: i64,
}

#[derive(Debug, Serialize)]
pub struct ComparisonsJson {
    pub radical_i_equals_j: bool,
    pub radical_i_equals_k: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct FrameJson {
    pub generators: Vec<String>,
    pub relation_count: usize,
    pub defect: Vec<String>,
    pub locally_decomposable: bool,
}

#[derive(Debug, Serialize)]
pub struct UnfoldingJson {
    pub exists: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

fn gb_strings(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal.groebner_basis()?.iter().map(|p| p.to_string()).collect())
}

fn analyze_form(
    name: &str,
    form: &DiffForm,
    doc: &InputDocument,
    command: Command,
    options: &Options,
) -> Result<FormReport> {
    let mut report = FormReport::bare(name, form.degree());
    let w = FoliationForm::new(form.clone(), doc.ambient())?;

    let plucker = w.check_plucker();
    let frobenius = w.check_integrability();
    let descent = if doc.ambient().is_projective() {
        Some(w.check_descent()?)
    } else {
        None
    };
    let singular = foliation::singular_ideal(&w);
    let torsion_free = if singular.is_unit()? {
        true
    } else {
        singular.dimension()? <= w.ring().nvars() as i64 - 2
    };
    report.checks = Some(ChecksJson {
        plucker,
        frobenius,
        descent,
        torsion_free_codim: torsion_free,
    });

    if command == Command::Check {
        return Ok(report);
    }

    if command == Command::Decompose {
        let frame = tangent_frame(&w)?;
        let defect = foliation::decomposability_defect(&w, &frame)?;
        report.frame = Some(FrameJson {
            generators: frame.generators().iter().map(|g| g.to_string()).collect(),
            relation_count: frame.relations().generators().len(),
            defect: gb_strings(&defect)?,
            locally_decomposable: defect.is_unit()?,
        });
        return Ok(report);
    }

    if command == Command::Unfold {
        report.unfolding = Some(unfold_form(&w)?);
        return Ok(report);
    }

    // ideals / compare
    let full = inclusion_report(&w)?;
    report.ideals = Some(IdealsJson {
        j: gb_strings(&full.singular)?,
        i: gb_strings(&full.persistent)?,
        k: gb_strings(&full.kupka)?,
        defect: gb_strings(&full.defect)?,
    });
    report.inclusions = Some(InclusionsJson {
        j_in_i: full.inclusions.j_in_i,
        i_in_k: full.inclusions.i_in_k,
        j_in_k: full.inclusions.j_in_k,
        i_in_k_asserted: full.inclusions.i_in_k_asserted,
    });
    report.dimensions = Some(DimensionsJson {
        j: full.dimensions.singular,
        i: full.dimensions.persistent,
        k: full.dimensions.kupka,
    });

    if command == Command::Compare {
        let homogeneous = w.form().homogeneous_component_degree().is_some();
        let (oracle_bound, oracle_agrees) = if homogeneous {
            let bound = options
                .max_degree
                .unwrap_or_else(|| w.form().max_component_degree() + 3);
            let agrees = oracle_matches_ideal(&w, &full.persistent, bound)?;
            (Some(bound), Some(agrees))
        } else {
            (None, None)
        };
        report.comparisons = Some(ComparisonsJson {
            radical_i_equals_j: full.persistent.radical_equal(&full.singular)?,
            radical_i_equals_k: full.persistent.radical_equal(&full.kupka)?,
            oracle_bound,
            oracle_agrees,
        });
    }
    Ok(report)
}

/// Degree-by-degree agreement between the quotient-computed persistent
/// ideal and the linear-algebra truncation oracle.
pub fn oracle_matches_ideal(w: &FoliationForm, persistent: &Ideal, bound: u32) -> Result<bool> {
    let oracle = foliation::persistent_truncation_oracle(w, bound)?;
    for d in 0..=bound {
        let basis_d: Vec<_> = oracle
            .iter()
            .filter(|p| p.homogeneous_degree() == Some(d))
            .collect();
        if basis_d.len() != foliation::graded_dimension(persistent, d) {
            return Ok(false);
        }
        for p in basis_d {
            if !persistent.contains(p)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn unfold_form(w: &FoliationForm) -> Result<UnfoldingJson> {
    let ring = w.ring().clone();
    let q = w.codimension();
    if q == 1 {
        // h = 1 unfolding needs eta with dw = w ^ eta
        let dw = w.form().exterior_derivative();
        let n = ring.nvars();
        let rank = crate::extalg::tuples(n, 2).len();
        let gens: Vec<_> = (0..n)
            .map(|i| {
                crate::foliation::form_to_vec(
                    &w.form().wedge(&DiffForm::basis_one_form(&ring, i)),
                )
            })
            .collect();
        let image = Submodule::new(ring.clone(), rank, gens);
        match image.contains_with_cofactors(&crate::foliation::form_to_vec(&dw))? {
            None => Ok(UnfoldingJson {
                exists: false,
                detail: "d(w) is not in the image of w ^ -; every first-order unfolding \
                         keeps the singular points (1 is not in I)"
                    .to_string(),
                verified: None,
            }),
            Some(cof) => {
                let mut eta = DiffForm::zero(ring.clone(), 1);
                for (i, c) in cof.iter().enumerate() {
                    if !c.is_zero() {
                        eta = &eta + &DiffForm::term(&ring, c.clone(), &[i]).expect("index");
                    }
                }
                let wt = unfolding::build_unfolding_codim1(w, &eta)?;
                let frame = tangent_frame(w)?;
                let datum = unfolding::UnfoldingDatum::new(vec![ring.one()], vec![eta.clone()]);
                let verified = unfolding::verify_unfolding(&wt, &frame, &datum);
                Ok(UnfoldingJson {
                    exists: true,
                    detail: format!("w + eps*({}) + deps", eta),
                    verified: Some(verified),
                })
            }
        }
    } else {
        let frame = tangent_frame(w)?;
        let defect = foliation::decomposability_defect(w, &frame)?;
        if frame.generators().len() != q || !defect.is_unit()? {
            return Ok(UnfoldingJson {
                exists: false,
                detail: "tangent 1-form module is not free of rank q; no global product \
                         unfolding"
                    .to_string(),
                verified: None,
            });
        }
        match unfolding::solve_flatness(&ring, &frame)? {
            None => Ok(UnfoldingJson {
                exists: false,
                detail: "flatness relations d(w_i) = sum_j alpha_ij ^ w_j have no \
                         polynomial solution"
                    .to_string(),
                verified: None,
            }),
            Some(alpha) => {
                let mut h = vec![ring.zero(); q];
                h[0] = ring.one();
                let (wt, datum) = unfolding::build_unfolding_codimq(&ring, &frame, &h, &alpha)?;
                let verified = unfolding::verify_unfolding(&wt, &frame, &datum);
                Ok(UnfoldingJson {
                    exists: true,
                    detail: "product unfolding with h = (1, 0, ...)".to_string(),
                    verified: Some(verified),
                })
            }
        }
    }
}

/// Exit code classification: 0 success, 1 mathematical check failure,
/// 2 parse/semantic error, 3 resource limit.
pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => 3,
        Error::ZeroForm
        | Error::InvalidFormDegree { .. }
        | Error::AmbientMismatch { .. }
        | Error::RingMismatch
        | Error::IndexOutOfRange { .. }
        | Error::PointDimensionMismatch { .. } => 2,
        _ => 1,
    }
}

/// Run one command over every form of the document. Returns the report and
/// the process exit code.
pub fn run_analysis(
    doc: &InputDocument,
    command: Command,
    options: &Options,
) -> (ReportDocument, i32) {
    let started = std::time::Instant::now();
    let mut forms = Vec::new();
    let mut code = 0i32;
    for (name, form) in doc.forms() {
        match analyze_form(name, form, doc, command, options) {
            Ok(report) => {
                if command == Command::Check {
                    let checks = report.checks.as_ref().expect("check command fills checks");
                    let ok = checks.plucker
                        && checks.frobenius
                        && checks.descent.unwrap_or(true)
                        && checks.torsion_free_codim;
                    if !ok && code == 0 {
                        code = 1;
                    }
                }
                forms.push(report);
            }
            Err(e) => {
                let ec = exit_code_for_error(&e);
                code = if code == 0 { ec } else { code.max(ec) };
                let mut r = FormReport::bare(name, form.degree());
                r.error = Some(e.to_string());
                forms.push(r);
            }
        }
    }
    let report = ReportDocument {
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: command.name().to_string(),
        input: doc.to_string(),
        forms,
        limits: LimitsEcho { max_spairs: limits::max_spairs() },
        timing_ms: options.timing.then(|| started.elapsed().as_millis()),
    };
    (report, code)
}

/// Human-readable rendering of a report.
pub fn render_text(report: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "folia {} ({})", report.version, report.command);
    for f in &report.forms {
        let _ = writeln!(out, "form {} (degree {})", f.name, f.degree);
        if let Some(e) = &f.error {
            let _ = writeln!(out, "  error: {}", e);
            continue;
        }
        if let Some(c) = &f.checks {
            let descent = match c.descent {
                None => "n/a".to_string(),
                Some(b) => b.to_string(),
            };
            let _ = writeln!(
                out,
                "  checks: plucker={} frobenius={} descent={} codim_ge_2={}",
                c.plucker, c.frobenius, descent, c.torsion_free_codim
            );
        }
        if let Some(i) = &f.ideals {
            let dims = f.dimensions.as_ref();
            let dim = |d: Option<i64>| match d {
                None => String::new(),
                Some(v) => format!("  (dim {})", v),
            };
            let _ = writeln!(out, "  J = [{}]{}", i.j.join(", "), dim(dims.map(|d| d.j)));
            let _ = writeln!(out, "  I = [{}]{}", i.i.join(", "), dim(dims.map(|d| d.i)));
            let _ = writeln!(out, "  K = [{}]{}", i.k.join(", "), dim(dims.map(|d| d.k)));
            let _ = writeln!(out, "  defect = [{}]", i.defect.join(", "));
        }
        if let Some(inc) = &f.inclusions {
            let _ = writeln!(
                out,
                "  inclusions: J<=I {} | I<=K {} (asserted: {}) | J<=K {}",
                inc.j_in_i, inc.i_in_k, inc.i_in_k_asserted, inc.j_in_k
            );
        }
        if let Some(cmp) = &f.comparisons {
            let _ = writeln!(
                out,
                "  radicals: sqrt(I)=sqrt(J) {} | sqrt(I)=sqrt(K) {}",
                cmp.radical_i_equals_j, cmp.radical_i_equals_k
            );
            if let (Some(bound), Some(agrees)) = (cmp.oracle_bound, cmp.oracle_agrees) {
                let _ = writeln!(
                    out,
                    "  truncation oracle up to degree {}: agrees = {}",
                    bound, agrees
                );
            }
        }
        if let Some(fr) = &f.frame {
            let _ = writeln!(out, "  E generators:");
            for g in &fr.generators {
                let _ = writeln!(out, "    {}", g);
            }
            let _ = writeln!(
                out,
                "  relations: {} | defect = [{}] | locally decomposable: {}",
                fr.relation_count,
                fr.defect.join(", "),
                fr.locally_decomposable
            );
        }
        if let Some(u) = &f.unfolding {
            let _ = writeln!(out, "  unfolding exists: {}", u.exists);
            let _ = writeln!(out, "  {}", u.detail);
            if let Some(v) = u.verified {
                let _ = writeln!(out, "  equation verified: {}", v);
            }
        }
    }
    if let Some(ms) = report.timing_ms {
        let _ = writeln!(out, "elapsed: {} ms", ms);
    }
    out
}
