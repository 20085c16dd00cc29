//! Batch entry points behind the CLI: run the axiom suite appropriate to a
//! document's kind, execute constructions with all guards, generate seeded
//! instances, and evaluate the exploratory compatibility residuals.
//!
//! Reports are deterministic for a given input: violations are sorted,
//! samples are bounded prefixes, and there are no timestamps.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{
    check_associative, check_averaging, check_dialgebra, check_differential, check_leibniz,
    check_poisson_algebra, check_poisson_dialgebra, PoissonDialgebra,
};
use crate::constructions::{
    associativization, check_adjoint_factorization, check_poisson_adjoint_factorization,
    dialgebra_from_lm_object, ideal_i, induced_leibniz, induced_poisson_dialgebra,
    lm_object_from_dialgebra, poisson_dialgebra_from_averaging,
    poisson_dialgebra_from_bimodule_map, poisson_dialgebra_from_differential,
    poisson_lm_object_from_poisson_dialgebra, poissonization, right_center,
};
use crate::document::doc_from_poisson_with_operator;
use crate::document::{
    doc_from_associative, doc_from_dialgebra, doc_from_graded, doc_from_homotopy_poisson,
    doc_from_leibniz, doc_from_lm_object, doc_from_poisson, doc_from_poisson_dialgebra,
    doc_from_poisson_lm_object, doc_from_two_term_assoc, doc_from_two_term_lie, parse_document,
    AlgebraDocument, MatrixEntry, Structure,
};
use crate::error::Error;
use crate::generate::{generate, Family, Generated};
use crate::graded::{
    associated_graded, check_filtration, check_graded_poisson_dialgebra, gerstenhaber_from_filtered,
};
use crate::homotopy::{
    associative_2_algebra_from_dialgebra, check_associative_2_algebra,
    check_homotopy_poisson_derivations, check_lie_2_algebra, check_reduced, compat_residuals,
    homotopy_pair_from_poisson_dialgebra, homotopy_poisson_from_reduced,
    lie_2_algebra_from_leibniz, reduced_unit_warning,
};
use crate::linalg::{Matrix, Subspace};
use crate::rat::format_rat;
use crate::report::AxiomReport;

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// Hard cap on any dimension appearing in a document.
    pub max_dim: usize,
    /// How many violations per axiom are included in the report.
    pub violation_prefix: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max_dim: 32,
            violation_prefix: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    /// Which checker produced this row.
    pub check: String,
    /// The axiom id within the checker.
    pub axiom: String,
    pub pass: bool,
    /// Full violation count for this axiom.
    pub violations: usize,
    /// Bounded prefix of the violations.
    pub sample: Vec<ViolationDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceDoc {
    pub name: String,
    pub ambient_dim: usize,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<MatrixEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub input_digest: String,
    /// False for the exploratory residual report, which never asserts.
    pub asserted: bool,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constructions: Vec<AlgebraDocument>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subspaces: Vec<SubspaceDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub matrices: Vec<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ReportDocument {
    fn new(input: &str) -> Self {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: digest(input),
            asserted: true,
            checks: Vec::new(),
            constructions: Vec::new(),
            subspaces: Vec::new(),
            matrices: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        !self.asserted || self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("dialgebra {}\n", self.tool_version));
        out.push_str(&format!("input {}\n", self.input_digest));
        for c in &self.checks {
            if c.pass {
                out.push_str(&format!("check {}/{}: PASS\n", c.check, c.axiom));
            } else {
                out.push_str(&format!(
                    "check {}/{}: FAIL ({} violation{})\n",
                    c.check,
                    c.axiom,
                    c.violations,
                    if c.violations == 1 { "" } else { "s" }
                ));
                for v in &c.sample {
                    out.push_str(&format!(
                        "  at {:?}: lhs = [{}], rhs = [{}]\n",
                        v.indices,
                        v.lhs.join(", "),
                        v.rhs.join(", ")
                    ));
                }
            }
        }
        for s in &self.subspaces {
            out.push_str(&format!(
                "subspace {}: dim {} of K^{}\n",
                s.name, s.dim, s.ambient_dim
            ));
            for row in &s.basis {
                out.push_str(&format!("  [{}]\n", row.join(", ")));
            }
        }
        for m in &self.matrices {
            out.push_str(&format!("matrix {}: {}x{}\n", m.name, m.rows, m.cols));
        }
        for d in &self.constructions {
            out.push_str(&format!(
                "construction {}: kind {}\n",
                d.name,
                d.kind.name()
            ));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out.push_str(&format!(
            "result: {}\n",
            if !self.asserted {
                "REPORT-ONLY"
            } else if self.passed() {
                "PASS"
            } else {
                "FAIL"
            }
        ));
        out
    }
}

fn digest(input: &str) -> String {
    let mut h = Sha256::new();
    h.update(input.as_bytes());
    format!("sha256:{}", hex::encode(h.finalize()))
}

fn push_report(out: &mut ReportDocument, rep: &AxiomReport, prefix: usize) {
    for axiom in &rep.checked {
        let hits: Vec<&crate::report::Violation> = rep
            .violations
            .iter()
            .filter(|v| &v.axiom == axiom)
            .collect();
        out.checks.push(CheckResult {
            check: rep.kind.clone(),
            axiom: axiom.clone(),
            pass: hits.is_empty(),
            violations: hits.len(),
            sample: hits
                .iter()
                .take(prefix)
                .map(|v| ViolationDoc {
                    axiom: v.axiom.clone(),
                    indices: v.indices.clone(),
                    lhs: v.lhs.iter().map(format_rat).collect(),
                    rhs: v.rhs.iter().map(format_rat).collect(),
                })
                .collect(),
        });
    }
}

fn subspace_doc(name: &str, s: &Subspace) -> SubspaceDoc {
    SubspaceDoc {
        name: name.to_string(),
        ambient_dim: s.ambient_dim(),
        dim: s.dim(),
        basis: (0..s.dim())
            .map(|i| s.basis().row(i).iter().map(format_rat).collect())
            .collect(),
    }
}

fn matrix_doc(name: &str, m: &Matrix) -> MatrixDoc {
    let mut entries = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !num_traits::Zero::is_zero(&m[(r, c)]) {
                entries.push((r, c, format_rat(&m[(r, c)])));
            }
        }
    }
    MatrixDoc {
        name: name.to_string(),
        rows: m.rows(),
        cols: m.cols(),
        entries,
    }
}

fn doc_dims(doc: &AlgebraDocument) -> usize {
    doc.dimension
        .or(doc.upstairs_dimension)
        .or(doc.dim0)
        .unwrap_or(0)
        .max(doc.downstairs.as_ref().map(|d| d.dimension).unwrap_or(0))
        .max(doc.dim1.unwrap_or(0))
}

fn enforce_cap(doc: &AlgebraDocument, opts: &RunOptions) -> Result<(), Error> {
    let d = doc_dims(doc);
    if d > opts.max_dim {
        return Err(Error::DimensionCap(d, opts.max_dim));
    }
    if let Some(src) = &doc.source {
        enforce_cap(src, opts)?;
    }
    Ok(())
}

/// Runs the full axiom suite appropriate to the document's kind.
pub fn run_check(input: &str, opts: &RunOptions) -> Result<ReportDocument, Error> {
    let doc = parse_document(input)?;
    enforce_cap(&doc, opts)?;
    let mut out = ReportDocument::new(input);
    let reports: Vec<AxiomReport> = match doc.structure()? {
        Structure::Dialgebra(d) => vec![check_dialgebra(&d)],
        Structure::Leibniz(l) => vec![check_leibniz(&l)],
        Structure::PoissonDialgebra(p) => vec![check_poisson_dialgebra(&p)],
        Structure::Associative(a) => vec![check_associative(&a)],
        Structure::Poisson(p) => {
            let mut v = vec![check_poisson_algebra(&p)];
            if let Some(d) = doc.differential_operator()? {
                v.push(check_differential(&p, &d)?);
            }
            if let Some(a) = doc.averaging_operator()? {
                v.push(check_averaging(&p, &a)?);
            }
            v
        }
        Structure::Lm(o) => vec![o.validate()],
        Structure::PoissonLm(o) => vec![o.validate()],
        Structure::Filtered(fd) => {
            vec![check_dialgebra(&fd.base), check_filtration(&fd)]
        }
        Structure::TwoTermAssoc(t) => vec![check_associative_2_algebra(&t)],
        Structure::TwoTermLie(t) => vec![check_lie_2_algebra(&t)],
        Structure::TwoTermHomotopyPoisson(t) => vec![
            check_lie_2_algebra(&t.lie),
            check_homotopy_poisson_derivations(&t),
        ],
        Structure::Graded(g) => vec![check_graded_poisson_dialgebra(&g, g.degree)],
    };
    for rep in &reports {
        push_report(&mut out, rep, opts.violation_prefix);
    }
    Ok(out)
}

fn as_poisson_dialgebra(s: &Structure) -> Option<PoissonDialgebra> {
    match s {
        Structure::PoissonDialgebra(p) => Some(p.clone()),
        Structure::Poisson(p) => Some(PoissonDialgebra::from_poisson(p)),
        _ => None,
    }
}

fn inapplicable(op: &str, doc: &AlgebraDocument) -> Error {
    Error::InapplicableOp {
        op: op.to_string(),
        kind: doc.kind.name().to_string(),
    }
}

/// Executes a construction with all of its guards; outputs are serialized
/// into the report round-trippably.
pub fn run_construct(input: &str, op: &str, opts: &RunOptions) -> Result<ReportDocument, Error> {
    let doc = parse_document(input)?;
    enforce_cap(&doc, opts)?;
    let mut out = ReportDocument::new(input);
    let s = doc.structure()?;
    let base = |suffix: &str| format!("{}-{}", doc.name, suffix);
    match op {
        "induced-leibniz" => {
            let Structure::Dialgebra(d) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let l = induced_leibniz(d)?;
            push_report(&mut out, &check_leibniz(&l), opts.violation_prefix);
            out.constructions
                .push(doc_from_leibniz(&base("leibniz"), &l));
        }
        "induced-poisson" => {
            let Structure::Dialgebra(d) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let p = induced_poisson_dialgebra(d)?;
            push_report(
                &mut out,
                &check_poisson_dialgebra(&p),
                opts.violation_prefix,
            );
            out.constructions
                .push(doc_from_poisson_dialgebra(&base("poisson"), &p));
        }
        "associativization" => {
            let Structure::Dialgebra(d) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let (a, q) = associativization(d)?;
            push_report(&mut out, &check_associative(&a), opts.violation_prefix);
            out.constructions
                .push(doc_from_associative(&base("as"), &a, Some(&q)));
        }
        "poissonization" => {
            let Some(p) = as_poisson_dialgebra(&s) else {
                return Err(inapplicable(op, &doc));
            };
            let (pa, q) = poissonization(&p)?;
            push_report(&mut out, &check_poisson_algebra(&pa), opts.violation_prefix);
            out.constructions
                .push(doc_from_poisson(&base("poiss"), &pa, Some(&q)));
        }
        "ideal" => {
            let d = match &s {
                Structure::Dialgebra(d) => d.clone(),
                Structure::PoissonDialgebra(p) => p.dialgebra(),
                _ => return Err(inapplicable(op, &doc)),
            };
            out.subspaces.push(subspace_doc("ideal-I", &ideal_i(&d)?));
        }
        "right-center" => {
            let l = match &s {
                Structure::Leibniz(l) => l.clone(),
                Structure::PoissonDialgebra(p) => p.leibniz(),
                _ => return Err(inapplicable(op, &doc)),
            };
            out.subspaces
                .push(subspace_doc("right-center", &right_center(&l)));
        }
        "annihilator" => {
            let Some(p) = as_poisson_dialgebra(&s) else {
                return Err(inapplicable(op, &doc));
            };
            out.subspaces.push(subspace_doc(
                "annihilator-J",
                &crate::constructions::annihilator_j(&p)?,
            ));
        }
        "lm-object" => {
            let Structure::Dialgebra(d) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let o = lm_object_from_dialgebra(d)?;
            push_report(&mut out, &o.validate(), opts.violation_prefix);
            out.constructions.push(doc_from_lm_object(&base("lm"), &o));
        }
        "poisson-lm-object" => {
            let Some(p) = as_poisson_dialgebra(&s) else {
                return Err(inapplicable(op, &doc));
            };
            let o = poisson_lm_object_from_poisson_dialgebra(&p)?;
            push_report(&mut out, &o.validate(), opts.violation_prefix);
            out.constructions
                .push(doc_from_poisson_lm_object(&base("poisson-lm"), &o));
        }
        "dialgebra-from-lm" => {
            let Structure::Lm(o) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let d = dialgebra_from_lm_object(o)?;
            push_report(&mut out, &check_dialgebra(&d), opts.violation_prefix);
            out.constructions
                .push(doc_from_dialgebra(&base("dialgebra"), &d));
        }
        "poisson-from-lm" => {
            let Structure::PoissonLm(o) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let p = poisson_dialgebra_from_bimodule_map(o)?;
            push_report(
                &mut out,
                &check_poisson_dialgebra(&p),
                opts.violation_prefix,
            );
            out.constructions
                .push(doc_from_poisson_dialgebra(&base("poisson"), &p));
        }
        "from-differential" => {
            let Structure::Poisson(pa) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let Some(d) = doc.differential_operator()? else {
                return Err(Error::Precondition(
                    "document carries no differential matrix".to_string(),
                ));
            };
            let p = poisson_dialgebra_from_differential(pa, &d)?;
            push_report(
                &mut out,
                &check_poisson_dialgebra(&p),
                opts.violation_prefix,
            );
            out.constructions
                .push(doc_from_poisson_dialgebra(&base("poisson"), &p));
        }
        "from-averaging" => {
            let Structure::Poisson(pa) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let Some(a) = doc.averaging_operator()? else {
                return Err(Error::Precondition(
                    "document carries no averaging matrix".to_string(),
                ));
            };
            push_report(&mut out, &check_averaging(pa, &a)?, opts.violation_prefix);
            let p = poisson_dialgebra_from_averaging(pa, &a)?;
            push_report(
                &mut out,
                &check_poisson_dialgebra(&p),
                opts.violation_prefix,
            );
            out.constructions
                .push(doc_from_poisson_dialgebra(&base("poisson"), &p));
        }
        "assoc-2" => {
            let Structure::Dialgebra(d) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let t = associative_2_algebra_from_dialgebra(d)?;
            push_report(
                &mut out,
                &check_associative_2_algebra(&t),
                opts.violation_prefix,
            );
            out.constructions
                .push(doc_from_two_term_assoc(&base("assoc2"), &t));
        }
        "lie-2" => {
            let Structure::Leibniz(l) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let t = lie_2_algebra_from_leibniz(l)?;
            push_report(&mut out, &check_lie_2_algebra(&t), opts.violation_prefix);
            out.constructions
                .push(doc_from_two_term_lie(&base("lie2"), &t));
        }
        "homotopy-pair" => {
            let Some(p) = as_poisson_dialgebra(&s) else {
                return Err(inapplicable(op, &doc));
            };
            let (a, l) = homotopy_pair_from_poisson_dialgebra(&p)?;
            push_report(
                &mut out,
                &check_associative_2_algebra(&a),
                opts.violation_prefix,
            );
            push_report(&mut out, &check_lie_2_algebra(&l), opts.violation_prefix);
            out.constructions
                .push(doc_from_two_term_assoc(&base("assoc2"), &a));
            out.constructions
                .push(doc_from_two_term_lie(&base("lie2"), &l));
        }
        "homotopy-poisson" => {
            let Some(p) = as_poisson_dialgebra(&s) else {
                return Err(inapplicable(op, &doc));
            };
            if !check_reduced(&p) {
                return Err(Error::Precondition(
                    "the Poisson dialgebra is not reduced (⊣ ≠ ⊢)".to_string(),
                ));
            }
            let hp = homotopy_poisson_from_reduced(&p)?;
            push_report(
                &mut out,
                &check_homotopy_poisson_derivations(&hp),
                opts.violation_prefix,
            );
            if let Some(w) = reduced_unit_warning(&p) {
                out.warnings.push(w);
            }
            out.constructions
                .push(doc_from_homotopy_poisson(&base("homotopy-poisson"), &hp));
        }
        "associated-graded" => {
            let Structure::Filtered(fd) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let g = associated_graded(fd)?;
            push_report(
                &mut out,
                &check_graded_poisson_dialgebra(&g, 0),
                opts.violation_prefix,
            );
            out.constructions.push(doc_from_graded(&base("graded"), &g));
        }
        "gerstenhaber" => {
            let Structure::Filtered(fd) = &s else {
                return Err(inapplicable(op, &doc));
            };
            let g = gerstenhaber_from_filtered(fd)?;
            push_report(
                &mut out,
                &check_graded_poisson_dialgebra(&g, 1),
                opts.violation_prefix,
            );
            out.constructions
                .push(doc_from_graded(&base("gerstenhaber"), &g));
        }
        "adjoint-factorization" => match &s {
            Structure::Lm(o) => {
                let src = doc
                    .source
                    .as_ref()
                    .ok_or_else(|| Error::Precondition("document carries no source".into()))?;
                let Structure::Dialgebra(d) = src.structure()? else {
                    return Err(inapplicable(op, src));
                };
                let phi_prime = doc
                    .phi_prime_matrix(d.dim())?
                    .ok_or_else(|| Error::Precondition("document carries no phi_prime".into()))?;
                let (phi, rep) = check_adjoint_factorization(&d, o, &phi_prime)?;
                push_report(&mut out, &rep, opts.violation_prefix);
                out.matrices.push(matrix_doc("phi", &phi));
            }
            Structure::PoissonLm(o) => {
                let src = doc
                    .source
                    .as_ref()
                    .ok_or_else(|| Error::Precondition("document carries no source".into()))?;
                let Some(p) = as_poisson_dialgebra(&src.structure()?) else {
                    return Err(inapplicable(op, src));
                };
                let phi_prime = doc
                    .phi_prime_matrix(p.dim())?
                    .ok_or_else(|| Error::Precondition("document carries no phi_prime".into()))?;
                let (phi, rep) = check_poisson_adjoint_factorization(&p, o, &phi_prime)?;
                push_report(&mut out, &rep, opts.violation_prefix);
                out.matrices.push(matrix_doc("phi", &phi));
            }
            _ => return Err(inapplicable(op, &doc)),
        },
        other => {
            return Err(Error::InapplicableOp {
                op: other.to_string(),
                kind: doc.kind.name().to_string(),
            })
        }
    }
    Ok(out)
}

/// Seeded generation; every produced document passes `run_check`.
pub fn run_generate(
    family: &str,
    dim_bound: usize,
    seed: u64,
    count: usize,
    opts: &RunOptions,
) -> Result<Vec<AlgebraDocument>, Error> {
    if dim_bound > opts.max_dim {
        return Err(Error::DimensionCap(dim_bound, opts.max_dim));
    }
    let fam = Family::parse(family)?;
    let out = generate(fam, dim_bound, seed, count)
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let name = format!("gen-{}-{}-{:04}", fam.name(), seed, i);
            match g {
                Generated::Dialgebra(d) => doc_from_dialgebra(&name, &d),
                Generated::Poisson(p) => doc_from_poisson_dialgebra(&name, &p),
                Generated::PoissonWithOperator {
                    algebra,
                    operator,
                    kind,
                } => doc_from_poisson_with_operator(&name, &algebra, &operator, kind),
                Generated::Filtered(fd) => crate::document::doc_from_filtered(&name, &fd),
            }
        })
        .collect();
    Ok(out)
}

/// The open-question residual report: evaluates candidate compatibility
/// expressions between the two 2-term structures on `P ⊕ J` and prints the
/// residual tensors without asserting any law.
pub fn explore_compat(input: &str, opts: &RunOptions) -> Result<ReportDocument, Error> {
    let doc = parse_document(input)?;
    enforce_cap(&doc, opts)?;
    let s = doc.structure()?;
    let Some(p) = as_poisson_dialgebra(&s) else {
        return Err(Error::InapplicableOp {
            op: "explore-compat".to_string(),
            kind: doc.kind.name().to_string(),
        });
    };
    let mut out = ReportDocument::new(input);
    out.asserted = false;
    for (name, residual) in compat_residuals(&p)? {
        let entries = residual.entries();
        let zero = entries.is_empty();
        out.checks.push(CheckResult {
            check: "compat-residual".to_string(),
            axiom: name,
            pass: zero,
            violations: entries.len(),
            sample: entries
                .iter()
                .take(opts.violation_prefix)
                .map(|(i, j, k, l, v)| ViolationDoc {
                    axiom: "residual-entry".to_string(),
                    indices: vec![*i, *j, *k, *l],
                    lhs: vec![format_rat(v)],
                    rhs: vec!["0".to_string()],
                })
                .collect(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::serialize_document;

    fn n2_text() -> String {
        serialize_document(&doc_from_dialgebra("n2", &crate::fixtures::n2()))
    }

    #[test]
    fn check_n2_passes() {
        let rep = run_check(&n2_text(), &RunOptions::default()).unwrap();
        assert!(rep.passed());
        assert!(rep.checks.iter().any(|c| c.axiom == "ax1" && c.pass));
        // deterministic output bytes
        let rep2 = run_check(&n2_text(), &RunOptions::default()).unwrap();
        assert_eq!(rep.to_json(), rep2.to_json());
    }

    #[test]
    fn check_bad_dialgebra_reports_first_triple() {
        let text = r#"{"name":"bad","kind":"dialgebra","dimension":2,
            "left":[[0,0,1,"1"]],"right":[[0,1,0,"1"]]}"#;
        let rep = run_check(text, &RunOptions::default()).unwrap();
        assert!(!rep.passed());
        let first_fail = rep.checks.iter().find(|c| !c.pass).unwrap();
        assert_eq!(first_fail.axiom, "ax1");
        assert_eq!(first_fail.sample[0].indices, vec![0, 0, 1]);
    }

    #[test]
    fn construct_associativization_of_n2() {
        let rep = run_construct(&n2_text(), "associativization", &RunOptions::default()).unwrap();
        assert!(rep.passed());
        let out = &rep.constructions[0];
        assert_eq!(out.dimension, Some(1));
        assert!(out.product.as_ref().unwrap().is_empty());
        assert_eq!(
            out.projection.as_ref().unwrap(),
            &vec![(0, 0, "1".to_string())]
        );
        // output round-trips
        let text = serialize_document(out);
        assert_eq!(&parse_document(&text).unwrap(), out);
    }

    #[test]
    fn construct_rejects_inapplicable_op() {
        let err = run_construct(&n2_text(), "gerstenhaber", &RunOptions::default());
        assert!(matches!(err, Err(Error::InapplicableOp { .. })));
        let err = run_construct(&n2_text(), "no-such-op", &RunOptions::default());
        assert!(matches!(err, Err(Error::InapplicableOp { .. })));
    }

    #[test]
    fn generate_then_check_all_pass() {
        let opts = RunOptions::default();
        for fam in [
            "assoc-as-dialgebra",
            "bimodule-map",
            "differential",
            "averaging",
            "filtered",
        ] {
            let docs = run_generate(fam, 4, 11, 4, &opts).unwrap();
            assert_eq!(docs.len(), 4);
            for d in docs {
                let text = serialize_document(&d);
                let rep = run_check(&text, &opts).unwrap();
                assert!(rep.passed(), "{fam}: generated instance failed its check");
                // round trip
                assert_eq!(parse_document(&text).unwrap(), d);
            }
        }
    }

    #[test]
    fn generate_is_byte_deterministic() {
        let opts = RunOptions::default();
        let a = run_generate("averaging", 4, 3, 3, &opts).unwrap();
        let b = run_generate("averaging", 4, 3, 3, &opts).unwrap();
        let at: Vec<String> = a.iter().map(serialize_document).collect();
        let bt: Vec<String> = b.iter().map(serialize_document).collect();
        assert_eq!(at, bt);
    }

    #[test]
    fn construct_outputs_round_trip_and_recheck() {
        let opts = RunOptions::default();
        // graded output of the T3 filtration
        let fd_doc = crate::document::doc_from_filtered("t3f", &{
            let d = crate::fixtures::t3();
            crate::graded::FilteredDialgebra::new(
                d,
                vec![
                    Subspace::zero(3),
                    Subspace::from_span(
                        3,
                        &[crate::rat::basis_vec(3, 0), crate::rat::basis_vec(3, 1)],
                    ),
                    Subspace::full(3),
                ],
            )
            .unwrap()
        });
        let rep = run_construct(&serialize_document(&fd_doc), "associated-graded", &opts).unwrap();
        assert!(rep.passed());
        // homotopy-pair outputs of N2's induced Poisson dialgebra
        let p = crate::constructions::induced_poisson_dialgebra(&crate::fixtures::n2()).unwrap();
        let p_doc = crate::document::doc_from_poisson_dialgebra("n2p", &p);
        let rep2 = run_construct(&serialize_document(&p_doc), "homotopy-pair", &opts).unwrap();
        assert!(rep2.passed());
        assert_eq!(rep2.constructions.len(), 2);
        for out in rep.constructions.iter().chain(&rep2.constructions) {
            let text = serialize_document(out);
            let back = parse_document(&text).unwrap();
            assert_eq!(&back, out);
            // re-checking the serialized output passes
            assert!(run_check(&text, &opts).unwrap().passed());
        }
    }

    #[test]
    fn explore_compat_never_asserts() {
        let p = crate::constructions::induced_poisson_dialgebra(&crate::fixtures::n2()).unwrap();
        let text = serialize_document(&crate::document::doc_from_poisson_dialgebra("p", &p));
        let rep = explore_compat(&text, &RunOptions::default()).unwrap();
        assert!(!rep.asserted);
        assert!(rep.passed()); // report-only is never a failure
        assert_eq!(rep.checks.len(), 2);
    }

    #[test]
    fn dimension_cap_enforced() {
        let opts = RunOptions {
            max_dim: 2,
            violation_prefix: 10,
        };
        let text = serialize_document(&doc_from_dialgebra("t3", &crate::fixtures::t3()));
        assert!(matches!(
            run_check(&text, &opts),
            Err(Error::DimensionCap(3, 2))
        ));
    }
}
