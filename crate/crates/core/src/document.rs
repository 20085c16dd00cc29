//! The algebra document format: a single structured JSON text format with
//! sparse tensor entries `[i, j, k, "p/q"]` (0-based indices, rationals as
//! strings to preserve exactness), matrices as `[row, col, "p/q"]` entries,
//! and filtration steps as lists of dense rational vectors.
//!
//! Parsing is strict: unknown fields, fields not applicable to the declared
//! kind, out-of-range indices, malformed rationals and duplicate tensor
//! entries are all rejected with a field path.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::algebra::{
    AssociativeAlgebra, Dialgebra, LeibnizAlgebra, LinearOperator, PoissonAlgebra, PoissonDialgebra,
};
use crate::constructions::{LMObject, PoissonLMObject};
use crate::error::Error;
use crate::graded::{FilteredDialgebra, GradedAlgebraStructure, GradedBlock, GradedBlocks};
use crate::homotopy::{TwoTermAssoc, TwoTermHomotopyPoisson, TwoTermLie};
use crate::linalg::{Matrix, Subspace};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::tensor::{ActionMap, BilinearMap, TrilinearMap};

pub type TensorEntry = (usize, usize, usize, String);
pub type MatrixEntry = (usize, usize, String);
pub type QuadEntry = (usize, usize, usize, usize, String);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocKind {
    Dialgebra,
    Leibniz,
    PoissonDialgebra,
    Associative,
    Poisson,
    LmObject,
    PoissonLmObject,
    FilteredDialgebra,
    TwoTermAssoc,
    TwoTermLie,
    TwoTermHomotopyPoisson,
    Graded,
}

impl DocKind {
    pub fn name(&self) -> &'static str {
        match self {
            DocKind::Dialgebra => "dialgebra",
            DocKind::Leibniz => "leibniz",
            DocKind::PoissonDialgebra => "poisson_dialgebra",
            DocKind::Associative => "associative",
            DocKind::Poisson => "poisson",
            DocKind::LmObject => "lm_object",
            DocKind::PoissonLmObject => "poisson_lm_object",
            DocKind::FilteredDialgebra => "filtered_dialgebra",
            DocKind::TwoTermAssoc => "two_term_assoc",
            DocKind::TwoTermLie => "two_term_lie",
            DocKind::TwoTermHomotopyPoisson => "two_term_homotopy_poisson",
            DocKind::Graded => "graded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DownstairsDoc {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub product: Vec<TensorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<TensorEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedBlockDoc {
    pub i: usize,
    pub j: usize,
    pub target: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<TensorEntry>,
}

/// One algebra description. Which fields must be present depends on `kind`;
/// everything else must be absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub kind: DocKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<TensorEntry>>,
    /// Optional square operator `d` on a `poisson` document.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub differential: Option<Vec<MatrixEntry>>,
    /// Optional square operator `α` on a `poisson` document.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub averaging: Option<Vec<MatrixEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upstairs_dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub downstairs: Option<DownstairsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<MatrixEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_action: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket_action: Option<Vec<TensorEntry>>,
    /// Optional embedded source structure for the adjoint-factorization op.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Box<AlgebraDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_prime: Option<Vec<MatrixEntry>>,
    /// Filtration steps as lists of dense rational vectors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<Vec<Vec<Vec<String>>>>,
    /// Projection/section matrices on quotient outputs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<Vec<MatrixEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<Vec<MatrixEntry>>,
    // two-term structures
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim0: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inclusion: Option<Vec<MatrixEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu2_degree0: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu2_01: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu2_10: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu3: Option<Vec<QuadEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l2_degree0: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l2_01: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l3: Option<Vec<QuadEntry>>,
    // graded structures
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component_dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lifts: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_blocks: Option<Vec<GradedBlockDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_blocks: Option<Vec<GradedBlockDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket_blocks: Option<Vec<GradedBlockDoc>>,
}

impl AlgebraDocument {
    fn empty(name: &str, kind: DocKind) -> Self {
        AlgebraDocument {
            name: name.to_string(),
            kind,
            dimension: None,
            basis: None,
            left: None,
            right: None,
            bracket: None,
            product: None,
            differential: None,
            averaging: None,
            upstairs_dimension: None,
            downstairs: None,
            f: None,
            left_action: None,
            right_action: None,
            bracket_action: None,
            source: None,
            phi_prime: None,
            filtration: None,
            projection: None,
            section: None,
            dim0: None,
            dim1: None,
            inclusion: None,
            mu2_degree0: None,
            mu2_01: None,
            mu2_10: None,
            mu3: None,
            l2_degree0: None,
            l2_01: None,
            l3: None,
            degree: None,
            component_dims: None,
            lifts: None,
            left_blocks: None,
            right_blocks: None,
            bracket_blocks: None,
        }
    }
}

fn semantic(path: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::Semantic {
        path: path.into(),
        msg: msg.into(),
    }
}

fn parse_tensor_entries(
    path: &str,
    entries: &[TensorEntry],
    dims: (usize, usize, usize),
) -> Result<Vec<(usize, usize, usize, Rat)>, Error> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(entries.len());
    for (pos, (i, j, k, s)) in entries.iter().enumerate() {
        let p = format!("{path}[{pos}]");
        for (ix, dim) in [(i, dims.0), (j, dims.1), (k, dims.2)] {
            if *ix >= dim {
                return Err(semantic(&p, format!("index {ix} out of range (dim {dim})")));
            }
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(semantic(&p, format!("duplicate entry ({i},{j},{k})")));
        }
        let v = parse_rat(s).map_err(|_| semantic(&p, format!("bad rational {s:?}")))?;
        out.push((*i, *j, *k, v));
    }
    Ok(out)
}

fn parse_matrix_entries(
    path: &str,
    entries: &[MatrixEntry],
    rows: usize,
    cols: usize,
) -> Result<Matrix, Error> {
    let mut seen = BTreeSet::new();
    let mut m = Matrix::zeros(rows, cols);
    for (pos, (r, c, s)) in entries.iter().enumerate() {
        let p = format!("{path}[{pos}]");
        if *r >= rows || *c >= cols {
            return Err(semantic(
                &p,
                format!("index ({r},{c}) out of range ({rows}x{cols})"),
            ));
        }
        if !seen.insert((*r, *c)) {
            return Err(semantic(&p, format!("duplicate entry ({r},{c})")));
        }
        m[(*r, *c)] = parse_rat(s).map_err(|_| semantic(&p, format!("bad rational {s:?}")))?;
    }
    Ok(m)
}

fn parse_quad_entries(
    path: &str,
    entries: &[QuadEntry],
    dim_in: usize,
    dim_out: usize,
) -> Result<TrilinearMap, Error> {
    let mut seen = BTreeSet::new();
    let mut t = TrilinearMap::zeros(dim_in, dim_out);
    for (pos, (i, j, k, l, s)) in entries.iter().enumerate() {
        let p = format!("{path}[{pos}]");
        for (ix, dim) in [(i, dim_in), (j, dim_in), (k, dim_in), (l, dim_out)] {
            if *ix >= dim {
                return Err(semantic(&p, format!("index {ix} out of range (dim {dim})")));
            }
        }
        if !seen.insert((*i, *j, *k, *l)) {
            return Err(semantic(&p, "duplicate entry".to_string()));
        }
        *t.get_mut(*i, *j, *k, *l) =
            parse_rat(s).map_err(|_| semantic(&p, format!("bad rational {s:?}")))?;
    }
    Ok(t)
}

fn bilinear_from(
    path: &str,
    entries: Option<&Vec<TensorEntry>>,
    dim: usize,
) -> Result<BilinearMap, Error> {
    let parsed = parse_tensor_entries(
        path,
        entries.map(|v| v.as_slice()).unwrap_or(&[]),
        (dim, dim, dim),
    )?;
    let mut b = BilinearMap::zeros(dim);
    for (i, j, k, v) in parsed {
        *b.get_mut(i, j, k) = v;
    }
    Ok(b)
}

fn action_from(
    path: &str,
    entries: Option<&Vec<TensorEntry>>,
    shape: (usize, usize, usize),
) -> Result<ActionMap, Error> {
    let parsed = parse_tensor_entries(path, entries.map(|v| v.as_slice()).unwrap_or(&[]), shape)?;
    let mut a = ActionMap::zeros(shape.0, shape.1, shape.2);
    for (i, j, k, v) in parsed {
        *a.get_mut(i, j, k) = v;
    }
    Ok(a)
}

fn tensor_entries_of(b: &BilinearMap) -> Option<Vec<TensorEntry>> {
    Some(
        b.entries()
            .into_iter()
            .map(|(i, j, k, v)| (i, j, k, format_rat(&v)))
            .collect(),
    )
}

fn action_entries_of(a: &ActionMap) -> Option<Vec<TensorEntry>> {
    Some(
        a.entries()
            .into_iter()
            .map(|(i, j, k, v)| (i, j, k, format_rat(&v)))
            .collect(),
    )
}

fn matrix_entries_of(m: &Matrix) -> Vec<MatrixEntry> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !num_traits::Zero::is_zero(&m[(r, c)]) {
                out.push((r, c, format_rat(&m[(r, c)])));
            }
        }
    }
    out
}

fn quad_entries_of(t: &TrilinearMap) -> Option<Vec<QuadEntry>> {
    Some(
        t.entries()
            .into_iter()
            .map(|(i, j, k, l, v)| (i, j, k, l, format_rat(&v)))
            .collect(),
    )
}

fn dense_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rat).collect())
        .collect()
}

fn parse_dense_rows(path: &str, rows: &[Vec<String>], cols: usize) -> Result<Vec<Vec<Rat>>, Error> {
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(semantic(
                format!("{path}[{i}]"),
                format!("expected a vector of length {cols}, got {}", row.len()),
            ));
        }
        let mut v = Vec::with_capacity(cols);
        for (j, s) in row.iter().enumerate() {
            v.push(parse_rat(s).map_err(|_| {
                semantic(format!("{path}[{i}][{j}]"), format!("bad rational {s:?}"))
            })?);
        }
        out.push(v);
    }
    Ok(out)
}

/// Everything a document can describe, in core types.
#[derive(Debug, Clone)]
pub enum Structure {
    Dialgebra(Dialgebra),
    Leibniz(LeibnizAlgebra),
    PoissonDialgebra(PoissonDialgebra),
    Associative(AssociativeAlgebra),
    Poisson(PoissonAlgebra),
    Lm(LMObject),
    PoissonLm(PoissonLMObject),
    Filtered(FilteredDialgebra),
    TwoTermAssoc(TwoTermAssoc),
    TwoTermLie(TwoTermLie),
    TwoTermHomotopyPoisson(TwoTermHomotopyPoisson),
    Graded(GradedAlgebraStructure),
}

/// Strict parse of a document from JSON text.
pub fn parse_document(text: &str) -> Result<AlgebraDocument, Error> {
    let doc: AlgebraDocument = serde_json::from_str(text).map_err(|e| {
        if e.is_syntax() || e.is_eof() {
            Error::Syntax {
                line: e.line(),
                column: e.column(),
                msg: e.to_string(),
            }
        } else {
            Error::Semantic {
                path: format!("line {}, column {}", e.line(), e.column()),
                msg: e.to_string(),
            }
        }
    })?;
    validate_document(&doc)?;
    Ok(doc)
}

/// Canonical serialization; `parse_document(serialize_document(d)) == d`.
pub fn serialize_document(doc: &AlgebraDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn allowed_fields(kind: DocKind) -> &'static [&'static str] {
    match kind {
        DocKind::Dialgebra => &["dimension", "basis", "left", "right"],
        DocKind::Leibniz => &["dimension", "basis", "bracket"],
        DocKind::PoissonDialgebra => &["dimension", "basis", "left", "right", "bracket"],
        DocKind::Associative => &["dimension", "basis", "product", "projection", "section"],
        DocKind::Poisson => &[
            "dimension",
            "basis",
            "product",
            "bracket",
            "differential",
            "averaging",
            "projection",
            "section",
        ],
        DocKind::LmObject => &[
            "upstairs_dimension",
            "downstairs",
            "f",
            "left_action",
            "right_action",
            "source",
            "phi_prime",
        ],
        DocKind::PoissonLmObject => &[
            "upstairs_dimension",
            "downstairs",
            "f",
            "left_action",
            "right_action",
            "bracket_action",
            "source",
            "phi_prime",
        ],
        DocKind::FilteredDialgebra => &["dimension", "basis", "left", "right", "filtration"],
        DocKind::TwoTermAssoc => &[
            "dim0",
            "dim1",
            "inclusion",
            "mu2_degree0",
            "mu2_01",
            "mu2_10",
            "mu3",
        ],
        DocKind::TwoTermLie => &["dim0", "dim1", "inclusion", "l2_degree0", "l2_01", "l3"],
        DocKind::TwoTermHomotopyPoisson => &[
            "dim0",
            "dim1",
            "inclusion",
            "l2_degree0",
            "l2_01",
            "l3",
            "mu2_degree0",
            "mu2_01",
            "mu2_10",
        ],
        DocKind::Graded => &[
            "dimension",
            "degree",
            "component_dims",
            "lifts",
            "left_blocks",
            "right_blocks",
            "bracket_blocks",
        ],
    }
}

fn validate_document(doc: &AlgebraDocument) -> Result<(), Error> {
    let allowed = allowed_fields(doc.kind);
    let present: Vec<(&str, bool)> = vec![
        ("dimension", doc.dimension.is_some()),
        ("basis", doc.basis.is_some()),
        ("left", doc.left.is_some()),
        ("right", doc.right.is_some()),
        ("bracket", doc.bracket.is_some()),
        ("product", doc.product.is_some()),
        ("differential", doc.differential.is_some()),
        ("averaging", doc.averaging.is_some()),
        ("upstairs_dimension", doc.upstairs_dimension.is_some()),
        ("downstairs", doc.downstairs.is_some()),
        ("f", doc.f.is_some()),
        ("left_action", doc.left_action.is_some()),
        ("right_action", doc.right_action.is_some()),
        ("bracket_action", doc.bracket_action.is_some()),
        ("source", doc.source.is_some()),
        ("phi_prime", doc.phi_prime.is_some()),
        ("filtration", doc.filtration.is_some()),
        ("projection", doc.projection.is_some()),
        ("section", doc.section.is_some()),
        ("dim0", doc.dim0.is_some()),
        ("dim1", doc.dim1.is_some()),
        ("inclusion", doc.inclusion.is_some()),
        ("mu2_degree0", doc.mu2_degree0.is_some()),
        ("mu2_01", doc.mu2_01.is_some()),
        ("mu2_10", doc.mu2_10.is_some()),
        ("mu3", doc.mu3.is_some()),
        ("l2_degree0", doc.l2_degree0.is_some()),
        ("l2_01", doc.l2_01.is_some()),
        ("l3", doc.l3.is_some()),
        ("degree", doc.degree.is_some()),
        ("component_dims", doc.component_dims.is_some()),
        ("lifts", doc.lifts.is_some()),
        ("left_blocks", doc.left_blocks.is_some()),
        ("right_blocks", doc.right_blocks.is_some()),
        ("bracket_blocks", doc.bracket_blocks.is_some()),
    ];
    for (field, here) in present {
        if here && !allowed.contains(&field) {
            return Err(semantic(
                field,
                format!("field not applicable to kind {:?}", doc.kind.name()),
            ));
        }
    }
    if let Some(basis) = &doc.basis {
        let dim = doc.dimension.unwrap_or(0);
        if basis.len() != dim {
            return Err(semantic(
                "basis",
                format!("{} labels for dimension {dim}", basis.len()),
            ));
        }
    }
    // full structural validation happens in `structure()`
    doc.structure().map(|_| ())
}

impl AlgebraDocument {
    fn need_dim(&self) -> Result<usize, Error> {
        self.dimension
            .ok_or_else(|| semantic("dimension", "required field missing"))
    }

    /// Builds the core structure described by the document, validating all
    /// indices, rationals and shapes on the way.
    pub fn structure(&self) -> Result<Structure, Error> {
        match self.kind {
            DocKind::Dialgebra => {
                let n = self.need_dim()?;
                let left = bilinear_from("left", self.left.as_ref(), n)?;
                let right = bilinear_from("right", self.right.as_ref(), n)?;
                Ok(Structure::Dialgebra(Dialgebra::new(left, right)?))
            }
            DocKind::Leibniz => {
                let n = self.need_dim()?;
                let bracket = bilinear_from("bracket", self.bracket.as_ref(), n)?;
                Ok(Structure::Leibniz(LeibnizAlgebra::new(bracket)))
            }
            DocKind::PoissonDialgebra => {
                let n = self.need_dim()?;
                let left = bilinear_from("left", self.left.as_ref(), n)?;
                let right = bilinear_from("right", self.right.as_ref(), n)?;
                let bracket = bilinear_from("bracket", self.bracket.as_ref(), n)?;
                Ok(Structure::PoissonDialgebra(PoissonDialgebra::new(
                    left, right, bracket,
                )?))
            }
            DocKind::Associative => {
                let n = self.need_dim()?;
                let product = bilinear_from("product", self.product.as_ref(), n)?;
                Ok(Structure::Associative(AssociativeAlgebra::new(product)))
            }
            DocKind::Poisson => {
                let n = self.need_dim()?;
                let product = bilinear_from("product", self.product.as_ref(), n)?;
                let bracket = bilinear_from("bracket", self.bracket.as_ref(), n)?;
                if let Some(d) = &self.differential {
                    parse_matrix_entries("differential", d, n, n)?;
                }
                if let Some(a) = &self.averaging {
                    parse_matrix_entries("averaging", a, n, n)?;
                }
                Ok(Structure::Poisson(PoissonAlgebra::new(product, bracket)?))
            }
            DocKind::LmObject => {
                let down = self
                    .downstairs
                    .as_ref()
                    .ok_or_else(|| semantic("downstairs", "required field missing"))?;
                let m_dim = self
                    .upstairs_dimension
                    .ok_or_else(|| semantic("upstairs_dimension", "required field missing"))?;
                let a_dim = down.dimension;
                if down.bracket.is_some() {
                    return Err(semantic(
                        "downstairs.bracket",
                        "not applicable to lm_object",
                    ));
                }
                let product = bilinear_from("downstairs.product", Some(&down.product), a_dim)?;
                let f = parse_matrix_entries("f", self.f.as_deref().unwrap_or(&[]), a_dim, m_dim)?;
                let left_action = action_from(
                    "left_action",
                    self.left_action.as_ref(),
                    (a_dim, m_dim, m_dim),
                )?;
                let right_action = action_from(
                    "right_action",
                    self.right_action.as_ref(),
                    (m_dim, a_dim, m_dim),
                )?;
                Ok(Structure::Lm(LMObject {
                    downstairs: AssociativeAlgebra::new(product),
                    f,
                    left_action,
                    right_action,
                }))
            }
            DocKind::PoissonLmObject => {
                let down = self
                    .downstairs
                    .as_ref()
                    .ok_or_else(|| semantic("downstairs", "required field missing"))?;
                let m_dim = self
                    .upstairs_dimension
                    .ok_or_else(|| semantic("upstairs_dimension", "required field missing"))?;
                let p_dim = down.dimension;
                let product = bilinear_from("downstairs.product", Some(&down.product), p_dim)?;
                let bracket = bilinear_from("downstairs.bracket", down.bracket.as_ref(), p_dim)?;
                let f = parse_matrix_entries("f", self.f.as_deref().unwrap_or(&[]), p_dim, m_dim)?;
                let left_action = action_from(
                    "left_action",
                    self.left_action.as_ref(),
                    (p_dim, m_dim, m_dim),
                )?;
                let right_action = action_from(
                    "right_action",
                    self.right_action.as_ref(),
                    (m_dim, p_dim, m_dim),
                )?;
                let bracket_action = action_from(
                    "bracket_action",
                    self.bracket_action.as_ref(),
                    (p_dim, m_dim, m_dim),
                )?;
                Ok(Structure::PoissonLm(PoissonLMObject {
                    downstairs: PoissonAlgebra::new(product, bracket)?,
                    f,
                    left_action,
                    right_action,
                    bracket_action,
                }))
            }
            DocKind::FilteredDialgebra => {
                let n = self.need_dim()?;
                let left = bilinear_from("left", self.left.as_ref(), n)?;
                let right = bilinear_from("right", self.right.as_ref(), n)?;
                let steps_doc = self
                    .filtration
                    .as_ref()
                    .ok_or_else(|| semantic("filtration", "required field missing"))?;
                let mut steps = Vec::with_capacity(steps_doc.len());
                for (i, rows) in steps_doc.iter().enumerate() {
                    let vecs = parse_dense_rows(&format!("filtration[{i}]"), rows, n)?;
                    steps.push(Subspace::from_span(n, &vecs));
                }
                Ok(Structure::Filtered(FilteredDialgebra::new(
                    Dialgebra::new(left, right)?,
                    steps,
                )?))
            }
            DocKind::TwoTermAssoc => Ok(Structure::TwoTermAssoc(self.two_term_assoc()?)),
            DocKind::TwoTermLie => Ok(Structure::TwoTermLie(self.two_term_lie()?)),
            DocKind::TwoTermHomotopyPoisson => {
                let lie = self.two_term_lie()?;
                let (n0, n1) = (lie.dim0, lie.dim1);
                Ok(Structure::TwoTermHomotopyPoisson(TwoTermHomotopyPoisson {
                    lie,
                    mu2_00: bilinear_from("mu2_degree0", self.mu2_degree0.as_ref(), n0)?,
                    mu2_01: action_from("mu2_01", self.mu2_01.as_ref(), (n0, n1, n1))?,
                    mu2_10: action_from("mu2_10", self.mu2_10.as_ref(), (n1, n0, n1))?,
                }))
            }
            DocKind::Graded => {
                let ambient = self.need_dim()?;
                let degree = self
                    .degree
                    .ok_or_else(|| semantic("degree", "required field missing"))?;
                let dims = self
                    .component_dims
                    .clone()
                    .ok_or_else(|| semantic("component_dims", "required field missing"))?;
                let lifts_doc = self
                    .lifts
                    .as_ref()
                    .ok_or_else(|| semantic("lifts", "required field missing"))?;
                if lifts_doc.len() != dims.len() {
                    return Err(semantic("lifts", "one lift matrix per component required"));
                }
                let mut lifts = Vec::with_capacity(dims.len());
                for (i, rows) in lifts_doc.iter().enumerate() {
                    if rows.len() != dims[i] {
                        return Err(semantic(
                            format!("lifts[{i}]"),
                            format!("expected {} rows", dims[i]),
                        ));
                    }
                    let vecs = parse_dense_rows(&format!("lifts[{i}]"), rows, ambient)?;
                    lifts.push(Matrix::from_rows(ambient, &vecs));
                }
                let parse_blocks = |name: &str,
                                    blocks: Option<&Vec<GradedBlockDoc>>|
                 -> Result<GradedBlocks, Error> {
                    let mut out = GradedBlocks::new();
                    for (pos, b) in blocks
                        .map(|v| v.as_slice())
                        .unwrap_or(&[])
                        .iter()
                        .enumerate()
                    {
                        let p = format!("{name}[{pos}]");
                        for (ix, what) in [(b.i, "i"), (b.j, "j"), (b.target, "target")] {
                            if ix >= dims.len() {
                                return Err(semantic(
                                    &p,
                                    format!("component {what}={ix} out of range"),
                                ));
                            }
                        }
                        let shape = (dims[b.i], dims[b.j], dims[b.target]);
                        let parsed = parse_tensor_entries(&p, &b.entries, shape)?;
                        let mut tensor = ActionMap::zeros(shape.0, shape.1, shape.2);
                        for (i, j, k, v) in parsed {
                            *tensor.get_mut(i, j, k) = v;
                        }
                        if out
                            .insert(
                                (b.i, b.j),
                                GradedBlock {
                                    target: b.target,
                                    tensor,
                                },
                            )
                            .is_some()
                        {
                            return Err(semantic(
                                &p,
                                format!("duplicate block ({}, {})", b.i, b.j),
                            ));
                        }
                    }
                    Ok(out)
                };
                let left = parse_blocks("left_blocks", self.left_blocks.as_ref())?;
                let right = parse_blocks("right_blocks", self.right_blocks.as_ref())?;
                let bracket = parse_blocks("bracket_blocks", self.bracket_blocks.as_ref())?;
                Ok(Structure::Graded(GradedAlgebraStructure {
                    degree,
                    ambient_dim: ambient,
                    component_dims: dims,
                    lifts,
                    left,
                    right,
                    bracket,
                }))
            }
        }
    }

    fn two_term_assoc(&self) -> Result<TwoTermAssoc, Error> {
        let n0 = self.dim0.ok_or_else(|| semantic("dim0", "required"))?;
        let n1 = self.dim1.ok_or_else(|| semantic("dim1", "required"))?;
        Ok(TwoTermAssoc {
            dim0: n0,
            dim1: n1,
            mu1: parse_matrix_entries(
                "inclusion",
                self.inclusion.as_deref().unwrap_or(&[]),
                n0,
                n1,
            )?,
            mu2_00: bilinear_from("mu2_degree0", self.mu2_degree0.as_ref(), n0)?,
            mu2_01: action_from("mu2_01", self.mu2_01.as_ref(), (n0, n1, n1))?,
            mu2_10: action_from("mu2_10", self.mu2_10.as_ref(), (n1, n0, n1))?,
            mu3: match &self.mu3 {
                Some(entries) => parse_quad_entries("mu3", entries, n0, n1)?,
                None => TrilinearMap::zeros(n0, n1),
            },
        })
    }

    fn two_term_lie(&self) -> Result<TwoTermLie, Error> {
        let n0 = self.dim0.ok_or_else(|| semantic("dim0", "required"))?;
        let n1 = self.dim1.ok_or_else(|| semantic("dim1", "required"))?;
        Ok(TwoTermLie {
            dim0: n0,
            dim1: n1,
            l1: parse_matrix_entries(
                "inclusion",
                self.inclusion.as_deref().unwrap_or(&[]),
                n0,
                n1,
            )?,
            l2_00: bilinear_from("l2_degree0", self.l2_degree0.as_ref(), n0)?,
            l2_01: action_from("l2_01", self.l2_01.as_ref(), (n0, n1, n1))?,
            l3: match &self.l3 {
                Some(entries) => parse_quad_entries("l3", entries, n0, n1)?,
                None => TrilinearMap::zeros(n0, n1),
            },
        })
    }

    pub fn differential_operator(&self) -> Result<Option<LinearOperator>, Error> {
        match (&self.differential, self.dimension) {
            (Some(entries), Some(n)) => Ok(Some(LinearOperator::new(parse_matrix_entries(
                "differential",
                entries,
                n,
                n,
            )?)?)),
            _ => Ok(None),
        }
    }

    pub fn averaging_operator(&self) -> Result<Option<LinearOperator>, Error> {
        match (&self.averaging, self.dimension) {
            (Some(entries), Some(n)) => Ok(Some(LinearOperator::new(parse_matrix_entries(
                "averaging",
                entries,
                n,
                n,
            )?)?)),
            _ => Ok(None),
        }
    }

    /// The `phi_prime` matrix of an lm_object document with an embedded
    /// source, shaped `upstairs_dim x source_dim`.
    pub fn phi_prime_matrix(&self, source_dim: usize) -> Result<Option<Matrix>, Error> {
        match (&self.phi_prime, self.upstairs_dimension) {
            (Some(entries), Some(m)) => Ok(Some(parse_matrix_entries(
                "phi_prime",
                entries,
                m,
                source_dim,
            )?)),
            _ => Ok(None),
        }
    }
}

// ---- structure -> document -------------------------------------------------

pub fn doc_from_dialgebra(name: &str, d: &Dialgebra) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::Dialgebra);
    doc.dimension = Some(d.dim());
    doc.left = tensor_entries_of(d.left());
    doc.right = tensor_entries_of(d.right());
    doc
}

pub fn doc_from_leibniz(name: &str, l: &LeibnizAlgebra) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::Leibniz);
    doc.dimension = Some(l.dim());
    doc.bracket = tensor_entries_of(&l.bracket);
    doc
}

pub fn doc_from_poisson_dialgebra(name: &str, p: &PoissonDialgebra) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::PoissonDialgebra);
    doc.dimension = Some(p.dim());
    doc.left = tensor_entries_of(p.left());
    doc.right = tensor_entries_of(p.right());
    doc.bracket = tensor_entries_of(p.bracket());
    doc
}

pub fn doc_from_associative(
    name: &str,
    a: &AssociativeAlgebra,
    quotient: Option<&crate::linalg::QuotientData>,
) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::Associative);
    doc.dimension = Some(a.dim());
    doc.product = tensor_entries_of(&a.product);
    if let Some(q) = quotient {
        doc.projection = Some(matrix_entries_of(&q.projection));
        doc.section = Some(matrix_entries_of(&q.section));
    }
    doc
}

pub fn doc_from_poisson(
    name: &str,
    p: &PoissonAlgebra,
    quotient: Option<&crate::linalg::QuotientData>,
) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::Poisson);
    doc.dimension = Some(p.dim());
    doc.product = tensor_entries_of(&p.product);
    doc.bracket = tensor_entries_of(&p.bracket);
    if let Some(q) = quotient {
        doc.projection = Some(matrix_entries_of(&q.projection));
        doc.section = Some(matrix_entries_of(&q.section));
    }
    doc
}

/// A `poisson` document carrying a verified operator matrix.
pub fn doc_from_poisson_with_operator(
    name: &str,
    p: &PoissonAlgebra,
    op: &crate::algebra::LinearOperator,
    kind: crate::generate::OperatorKind,
) -> AlgebraDocument {
    let mut doc = doc_from_poisson(name, p, None);
    let entries = matrix_entries_of(op.matrix());
    match kind {
        crate::generate::OperatorKind::Differential => doc.differential = Some(entries),
        crate::generate::OperatorKind::Averaging => doc.averaging = Some(entries),
    }
    doc
}

pub fn doc_from_lm_object(name: &str, o: &LMObject) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::LmObject);
    doc.upstairs_dimension = Some(o.upstairs_dim());
    doc.downstairs = Some(DownstairsDoc {
        dimension: o.downstairs.dim(),
        product: tensor_entries_of(&o.downstairs.product).unwrap(),
        bracket: None,
    });
    doc.f = Some(matrix_entries_of(&o.f));
    doc.left_action = action_entries_of(&o.left_action);
    doc.right_action = action_entries_of(&o.right_action);
    doc
}

pub fn doc_from_poisson_lm_object(name: &str, o: &PoissonLMObject) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::PoissonLmObject);
    doc.upstairs_dimension = Some(o.upstairs_dim());
    doc.downstairs = Some(DownstairsDoc {
        dimension: o.downstairs.dim(),
        product: tensor_entries_of(&o.downstairs.product).unwrap(),
        bracket: tensor_entries_of(&o.downstairs.bracket),
    });
    doc.f = Some(matrix_entries_of(&o.f));
    doc.left_action = action_entries_of(&o.left_action);
    doc.right_action = action_entries_of(&o.right_action);
    doc.bracket_action = action_entries_of(&o.bracket_action);
    doc
}

pub fn doc_from_filtered(name: &str, fd: &FilteredDialgebra) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::FilteredDialgebra);
    doc.dimension = Some(fd.base.dim());
    doc.left = tensor_entries_of(fd.base.left());
    doc.right = tensor_entries_of(fd.base.right());
    doc.filtration = Some(fd.steps.iter().map(|s| dense_rows(s.basis())).collect());
    doc
}

pub fn doc_from_two_term_assoc(name: &str, t: &TwoTermAssoc) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::TwoTermAssoc);
    doc.dim0 = Some(t.dim0);
    doc.dim1 = Some(t.dim1);
    doc.inclusion = Some(matrix_entries_of(&t.mu1));
    doc.mu2_degree0 = tensor_entries_of(&t.mu2_00);
    doc.mu2_01 = action_entries_of(&t.mu2_01);
    doc.mu2_10 = action_entries_of(&t.mu2_10);
    doc.mu3 = quad_entries_of(&t.mu3);
    doc
}

pub fn doc_from_two_term_lie(name: &str, t: &TwoTermLie) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::TwoTermLie);
    doc.dim0 = Some(t.dim0);
    doc.dim1 = Some(t.dim1);
    doc.inclusion = Some(matrix_entries_of(&t.l1));
    doc.l2_degree0 = tensor_entries_of(&t.l2_00);
    doc.l2_01 = action_entries_of(&t.l2_01);
    doc.l3 = quad_entries_of(&t.l3);
    doc
}

pub fn doc_from_homotopy_poisson(name: &str, t: &TwoTermHomotopyPoisson) -> AlgebraDocument {
    let mut doc = AlgebraDocument::empty(name, DocKind::TwoTermHomotopyPoisson);
    doc.dim0 = Some(t.lie.dim0);
    doc.dim1 = Some(t.lie.dim1);
    doc.inclusion = Some(matrix_entries_of(&t.lie.l1));
    doc.l2_degree0 = tensor_entries_of(&t.lie.l2_00);
    doc.l2_01 = action_entries_of(&t.lie.l2_01);
    doc.l3 = quad_entries_of(&t.lie.l3);
    doc.mu2_degree0 = tensor_entries_of(&t.mu2_00);
    doc.mu2_01 = action_entries_of(&t.mu2_01);
    doc.mu2_10 = action_entries_of(&t.mu2_10);
    doc
}

pub fn doc_from_graded(name: &str, g: &GradedAlgebraStructure) -> AlgebraDocument {
    let blocks_of = |blocks: &GradedBlocks| -> Option<Vec<GradedBlockDoc>> {
        Some(
            blocks
                .iter()
                .map(|(&(i, j), b)| GradedBlockDoc {
                    i,
                    j,
                    target: b.target,
                    entries: action_entries_of(&b.tensor).unwrap(),
                })
                .collect(),
        )
    };
    let mut doc = AlgebraDocument::empty(name, DocKind::Graded);
    doc.dimension = Some(g.ambient_dim);
    doc.degree = Some(g.degree);
    doc.component_dims = Some(g.component_dims.clone());
    doc.lifts = Some(g.lifts.iter().map(dense_rows).collect());
    doc.left_blocks = blocks_of(&g.left);
    doc.right_blocks = blocks_of(&g.right);
    doc.bracket_blocks = blocks_of(&g.bracket);
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn n2_json() -> &'static str {
        r#"{
  "name": "n2",
  "kind": "dialgebra",
  "dimension": 2,
  "basis": ["x", "y"],
  "left": [[0, 0, 1, "1"]],
  "right": []
}"#
    }

    #[test]
    fn parse_n2() {
        let doc = parse_document(n2_json()).unwrap();
        assert_eq!(doc.kind, DocKind::Dialgebra);
        match doc.structure().unwrap() {
            Structure::Dialgebra(d) => assert_eq!(d, fixtures::n2()),
            _ => panic!("wrong structure"),
        }
    }

    #[test]
    fn index_out_of_range_rejected() {
        let text = r#"{"name":"bad","kind":"dialgebra","dimension":2,"left":[[0,0,2,"1"]]}"#;
        match parse_document(text) {
            Err(Error::Semantic { path, .. }) => assert!(path.starts_with("left[0]")),
            other => panic!("expected semantic error, got {other:?}"),
        }
    }

    #[test]
    fn zero_denominator_rejected() {
        let text = r#"{"name":"bad","kind":"dialgebra","dimension":2,"left":[[0,0,1,"1/0"]]}"#;
        assert!(matches!(parse_document(text), Err(Error::Semantic { .. })));
    }

    #[test]
    fn duplicate_entries_rejected() {
        let text = r#"{"name":"bad","kind":"dialgebra","dimension":2,
            "left":[[0,0,1,"1"],[0,0,1,"2"]]}"#;
        assert!(matches!(parse_document(text), Err(Error::Semantic { .. })));
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"name":"bad","kind":"dialgebra","dimension":2,"wat":1}"#;
        assert!(parse_document(text).is_err());
        // known field, wrong kind
        let text = r#"{"name":"bad","kind":"dialgebra","dimension":2,"bracket":[]}"#;
        assert!(matches!(parse_document(text), Err(Error::Semantic { .. })));
    }

    #[test]
    fn syntax_error_has_position() {
        match parse_document("{ not json") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_fixture_docs() {
        let docs = vec![
            doc_from_dialgebra("n2", &fixtures::n2()),
            doc_from_poisson_dialgebra(
                "p",
                &crate::constructions::induced_poisson_dialgebra(&fixtures::t3()).unwrap(),
            ),
            doc_from_lm_object(
                "lm",
                &crate::constructions::lm_object_from_dialgebra(&fixtures::n2()).unwrap(),
            ),
        ];
        for doc in docs {
            let text = serialize_document(&doc);
            let back = parse_document(&text).unwrap();
            assert_eq!(back, doc);
        }
    }
}
