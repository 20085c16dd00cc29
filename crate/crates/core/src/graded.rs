//! Filtered dialgebras and their associated graded structures.
//!
//! A filtration `D_0 ⊆ D_1 ⊆ … ⊆ D_N = D` with `D_i ∘ D_j ⊆ D_{i+j}` yields
//! the graded space `Gr_0 = D_0`, `Gr_i = D_i/D_{i-1}` with degree-0 products
//! and the signed Loday bracket `[x̄, ȳ] = x ⊣ y - (-1)^{ij} y ⊢ x` (degree 0),
//! or `-(i-1)(j-1)`-signed into degree -1 in the Gerstenhaber case.
//!
//! Each component carries its own deterministic basis: the rows of the
//! canonical basis of `D_i` whose pivot column is new relative to `D_{i-1}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::Dialgebra;
use crate::error::Error;
use crate::linalg::{rref, Matrix, Subspace};
use crate::rat::{basis_vec, vec_add, vec_neg, vec_scale, vec_zero, Rat};
use crate::report::AxiomReport;
use crate::tensor::ActionMap;

/// A dialgebra with an increasing filtration whose top step is the whole
/// space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilteredDialgebra {
    pub base: Dialgebra,
    pub steps: Vec<Subspace>,
}

impl FilteredDialgebra {
    pub fn new(base: Dialgebra, steps: Vec<Subspace>) -> Result<Self, Error> {
        if steps.is_empty() {
            return Err(Error::invalid("filtration", "at least one step required"));
        }
        for s in &steps {
            if s.ambient_dim() != base.dim() {
                return Err(Error::AmbientMismatch(s.ambient_dim(), base.dim()));
            }
        }
        Ok(FilteredDialgebra { base, steps })
    }

    pub fn top_degree(&self) -> usize {
        self.steps.len() - 1
    }
}

/// Chain inclusions, top step = full space, and the product containments
/// `D_i ∘ D_j ⊆ D_{i+j}` for both products on subspace bases.
pub fn check_filtration(fd: &FilteredDialgebra) -> AxiomReport {
    let mut rep = AxiomReport::new("filtration");
    let n = fd.base.dim();
    let top = fd.top_degree();
    for i in 0..top {
        if !fd.steps[i + 1].contains_subspace(&fd.steps[i]) {
            rep.record("chain", &[i], Vec::new(), Vec::new());
        }
    }
    if fd.steps[top].dim() != n {
        rep.record("top", &[top], Vec::new(), Vec::new());
    }
    for i in 0..=top {
        for j in 0..=top {
            if i + j > top {
                continue; // containment in the top step is automatic
            }
            let tgt = &fd.steps[i + j];
            for (a, u) in fd.steps[i].basis_rows().iter().enumerate() {
                for (b, v) in fd.steps[j].basis_rows().iter().enumerate() {
                    if !tgt.contains(&fd.base.left().eval(u, v)) {
                        rep.record("product-left", &[i, a, j, b], Vec::new(), Vec::new());
                    }
                    if !tgt.contains(&fd.base.right().eval(u, v)) {
                        rep.record("product-right", &[i, a, j, b], Vec::new(), Vec::new());
                    }
                }
            }
        }
    }
    rep.sort();
    rep
}

/// One structure tensor between homogeneous components, with its declared
/// target degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBlock {
    pub target: usize,
    pub tensor: ActionMap,
}

pub type GradedBlocks = BTreeMap<(usize, usize), GradedBlock>;

/// A graded algebra structure: degree-0 products, a bracket of degree
/// `-degree`, and the per-component lift data from the underlying filtered
/// space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedAlgebraStructure {
    /// `n`: the bracket has degree `-n`. 0 or 1 here.
    pub degree: i64,
    pub ambient_dim: usize,
    pub component_dims: Vec<usize>,
    /// Row `t` of `lifts[i]` is the ambient representative of the `t`-th
    /// basis class of `Gr_i`.
    pub lifts: Vec<Matrix>,
    pub left: GradedBlocks,
    pub right: GradedBlocks,
    pub bracket: GradedBlocks,
}

impl GradedAlgebraStructure {
    pub fn top_degree(&self) -> usize {
        self.component_dims.len() - 1
    }
}

struct GradedContext<'a> {
    steps: &'a [Subspace],
    lifts: Vec<Matrix>,
}

impl<'a> GradedContext<'a> {
    fn build(steps: &'a [Subspace]) -> Self {
        let ambient = steps[0].ambient_dim();
        let mut lifts = Vec::with_capacity(steps.len());
        for (i, s) in steps.iter().enumerate() {
            let prev_pivots: Vec<usize> = if i == 0 {
                Vec::new()
            } else {
                steps[i - 1].pivots().to_vec()
            };
            let rows: Vec<Vec<Rat>> = s
                .basis_rows()
                .into_iter()
                .zip(s.pivots())
                .filter(|(_, p)| !prev_pivots.contains(p))
                .map(|(r, _)| r)
                .collect();
            lifts.push(Matrix::from_rows(ambient, &rows));
        }
        GradedContext { steps, lifts }
    }

    /// Coordinates of `v + D_{deg-1}` in the lift basis of `Gr_deg`.
    /// Errors when `v` is not even in `D_deg` — the well-definedness guard.
    fn class_coords(&self, v: &[Rat], deg: usize) -> Result<Vec<Rat>, Error> {
        let ambient = v.len();
        if !self.steps[deg].contains(v) {
            return Err(Error::guard(
                "well-definedness",
                format!("value escapes filtration step {deg}"),
            ));
        }
        let lifts = &self.lifts[deg];
        let lower: Vec<Vec<Rat>> = if deg == 0 {
            Vec::new()
        } else {
            self.steps[deg - 1].basis_rows()
        };
        let ncols = lifts.rows() + lower.len();
        if ncols == 0 {
            return Ok(Vec::new());
        }
        let mut aug = Matrix::zeros(ambient, ncols + 1);
        for r in 0..ambient {
            for t in 0..lifts.rows() {
                aug[(r, t)] = lifts[(t, r)].clone();
            }
            for (c, low) in lower.iter().enumerate() {
                aug[(r, lifts.rows() + c)] = low[r].clone();
            }
            aug[(r, ncols)] = v[r].clone();
        }
        let (red, pivots) = rref(&aug);
        let mut sol = vec_zero(ncols);
        for (ri, &pc) in pivots.iter().enumerate() {
            if pc == ncols {
                return Err(Error::guard(
                    "well-definedness",
                    "inconsistent class decomposition".to_string(),
                ));
            }
            sol[pc] = red[(ri, ncols)].clone();
        }
        Ok(sol[..lifts.rows()].to_vec())
    }
}

fn sign_of(exp: i64) -> Rat {
    if exp.rem_euclid(2) == 0 {
        crate::rat::one()
    } else {
        -crate::rat::one()
    }
}

fn build_graded(fd: &FilteredDialgebra, degree: i64) -> Result<GradedAlgebraStructure, Error> {
    let ctx = GradedContext::build(&fd.steps);
    let top = fd.top_degree();
    let dims: Vec<usize> = ctx.lifts.iter().map(|m| m.rows()).collect();
    let mut left = GradedBlocks::new();
    let mut right = GradedBlocks::new();
    let mut bracket = GradedBlocks::new();
    for i in 0..=top {
        for j in 0..=top {
            let (di, dj) = (dims[i], dims[j]);
            if di == 0 || dj == 0 {
                continue;
            }
            // degree-0 products into Gr_{i+j}
            if i + j <= top && dims[i + j] > 0 {
                let mut lt = ActionMap::zeros(di, dj, dims[i + j]);
                let mut rt = ActionMap::zeros(di, dj, dims[i + j]);
                for a in 0..di {
                    let u = ctx.lifts[i].row(a).to_vec();
                    for b in 0..dj {
                        let v = ctx.lifts[j].row(b).to_vec();
                        let lw = ctx.class_coords(&fd.base.left().eval(&u, &v), i + j)?;
                        let rw = ctx.class_coords(&fd.base.right().eval(&u, &v), i + j)?;
                        for k in 0..dims[i + j] {
                            *lt.get_mut(a, b, k) = lw[k].clone();
                            *rt.get_mut(a, b, k) = rw[k].clone();
                        }
                    }
                }
                left.insert(
                    (i, j),
                    GradedBlock {
                        target: i + j,
                        tensor: lt,
                    },
                );
                right.insert(
                    (i, j),
                    GradedBlock {
                        target: i + j,
                        tensor: rt,
                    },
                );
            }
            // bracket of degree -n into Gr_{i+j-n}
            let tgt = i as i64 + j as i64 - degree;
            if tgt >= 0 && tgt <= top as i64 && dims[tgt as usize] > 0 {
                let tgt = tgt as usize;
                let exp = if degree == 0 {
                    (i * j) as i64
                } else {
                    (i as i64 - 1) * (j as i64 - 1)
                };
                let sgn = sign_of(exp);
                let mut bt = ActionMap::zeros(di, dj, dims[tgt]);
                for a in 0..di {
                    let u = ctx.lifts[i].row(a).to_vec();
                    for b in 0..dj {
                        let v = ctx.lifts[j].row(b).to_vec();
                        let w = vec_add(
                            &fd.base.left().eval(&u, &v),
                            &vec_scale(&-sgn.clone(), &fd.base.right().eval(&v, &u)),
                        );
                        let coords = ctx.class_coords(&w, tgt)?;
                        for k in 0..dims[tgt] {
                            *bt.get_mut(a, b, k) = coords[k].clone();
                        }
                    }
                }
                bracket.insert(
                    (i, j),
                    GradedBlock {
                        target: tgt,
                        tensor: bt,
                    },
                );
            }
        }
    }
    Ok(GradedAlgebraStructure {
        degree,
        ambient_dim: fd.base.dim(),
        component_dims: dims,
        lifts: ctx.lifts,
        left,
        right,
        bracket,
    })
}

/// The associated graded dialgebra with the degree-0 signed Loday bracket
/// `[x̄_i, ȳ_j] = x ⊣ y - (-1)^{ij} y ⊢ x`.
pub fn associated_graded(fd: &FilteredDialgebra) -> Result<GradedAlgebraStructure, Error> {
    let rep = check_filtration(fd);
    if !rep.passed() {
        let f = rep.first().unwrap();
        return Err(Error::invalid(
            "filtration",
            format!("{} at {:?}", f.axiom, f.indices),
        ));
    }
    build_graded(fd, 0)
}

/// `(x̄_i) ⊣ (ȳ_j) = (ȳ_j) ⊢ (x̄_i)` for all homogeneous basis pairs.
pub fn is_gr_commutative(g: &GradedAlgebraStructure) -> bool {
    let top = g.top_degree();
    for i in 0..=top {
        for j in 0..=top {
            let zero_l = g.left.get(&(i, j));
            let zero_r = g.right.get(&(j, i));
            match (zero_l, zero_r) {
                (None, None) => {}
                (Some(l), Some(r)) => {
                    let (di, dj, dk) = l.tensor.shape();
                    for a in 0..di {
                        for b in 0..dj {
                            for k in 0..dk {
                                if l.tensor.get(a, b, k) != r.tensor.get(b, a, k) {
                                    return false;
                                }
                            }
                        }
                    }
                }
                (Some(l), None) => {
                    if !l.tensor.is_zero() {
                        return false;
                    }
                }
                (None, Some(r)) => {
                    if !r.tensor.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Gerstenhaber structure: degree-0 products with the degree -1 bracket
/// `[x̄_i, ȳ_j] = x ⊣ y - (-1)^{(i-1)(j-1)} y ⊢ x + D_{i+j-2}`. Requires a
/// commutative associated graded; the well-definedness guard fires when the
/// signed combination escapes `D_{i+j-1}`.
pub fn gerstenhaber_from_filtered(fd: &FilteredDialgebra) -> Result<GradedAlgebraStructure, Error> {
    let gr0 = associated_graded(fd)?;
    if !is_gr_commutative(&gr0) {
        return Err(Error::Precondition(
            "the associated graded is not commutative".to_string(),
        ));
    }
    build_graded(fd, 1)
}

fn block_eval(
    blocks: &GradedBlocks,
    dims: &[usize],
    i: usize,
    j: usize,
    u: &[Rat],
    v: &[Rat],
    out_deg: i64,
) -> Vec<Rat> {
    let top = dims.len() as i64 - 1;
    if out_deg < 0 || out_deg > top {
        return Vec::new();
    }
    let out = dims[out_deg as usize];
    match blocks.get(&(i, j)) {
        Some(b) if b.target as i64 == out_deg => b.tensor.eval(u, v),
        _ => vec_zero(out),
    }
}

/// Checks a graded structure against the declared degree `n`: degree
/// bookkeeping of every nonzero tensor entry, the dialgebra axioms
/// componentwise, the graded Leibniz identity (sign `(-1)^{(j-n)(k-n)}`),
/// and the five graded compatibility relations with their Koszul signs.
/// Bookkeeping violations abort the identity phase.
pub fn check_graded_poisson_dialgebra(g: &GradedAlgebraStructure, n: i64) -> AxiomReport {
    let mut rep = AxiomReport::new("graded-poisson-dialgebra");
    let top = g.top_degree();
    let dims = &g.component_dims;
    for (name, blocks, shift) in [
        ("left", &g.left, 0i64),
        ("right", &g.right, 0),
        ("bracket", &g.bracket, n),
    ] {
        for (&(i, j), b) in blocks.iter() {
            let expected = i as i64 + j as i64 - shift;
            if b.target as i64 != expected && !b.tensor.is_zero() {
                rep.record(
                    &format!("degree-{name}"),
                    &[i, j, b.target],
                    Vec::new(),
                    Vec::new(),
                );
            }
        }
    }
    if !rep.passed() {
        rep.sort();
        return rep;
    }

    let le = |i: usize, j: usize, u: &[Rat], v: &[Rat]| {
        block_eval(&g.left, dims, i, j, u, v, i as i64 + j as i64)
    };
    let ri = |i: usize, j: usize, u: &[Rat], v: &[Rat]| {
        block_eval(&g.right, dims, i, j, u, v, i as i64 + j as i64)
    };
    let br = |i: usize, j: usize, u: &[Rat], v: &[Rat]| {
        block_eval(&g.bracket, dims, i, j, u, v, i as i64 + j as i64 - n)
    };
    let at = |d: i64| -> usize {
        debug_assert!(d >= 0 && d <= top as i64);
        d as usize
    };
    let zero_at = |d: i64| -> Vec<Rat> {
        if d < 0 || d > top as i64 {
            Vec::new()
        } else {
            vec_zero(dims[d as usize])
        }
    };
    let in_range = |d: i64| d >= 0 && d <= top as i64 && dims[d as usize] > 0;

    for i in 0..=top {
        for j in 0..=top {
            for k in 0..=top {
                let (ii, jj, kk) = (i as i64, j as i64, k as i64);
                for a in 0..dims[i] {
                    let x = basis_vec(dims[i], a);
                    for b in 0..dims[j] {
                        let y = basis_vec(dims[j], b);
                        for c in 0..dims[k] {
                            let z = basis_vec(dims[k], c);
                            let idx = [i, a, j, b, k, c];

                            // componentwise dialgebra axioms (degree-0 products)
                            let od = ii + jj + kk;
                            if in_range(od) {
                                let lij = le(i, j, &x, &y);
                                let rij = ri(i, j, &x, &y);
                                let ljk = le(j, k, &y, &z);
                                let rjk = ri(j, k, &y, &z);
                                let mij = at(ii + jj);
                                let mjk = at(jj + kk);
                                let lhs12 = if in_range(ii + jj) {
                                    le(mij, k, &lij, &z)
                                } else {
                                    zero_at(od)
                                };
                                let ax1r = if in_range(jj + kk) {
                                    le(i, mjk, &x, &rjk)
                                } else {
                                    zero_at(od)
                                };
                                let ax2r = if in_range(jj + kk) {
                                    le(i, mjk, &x, &ljk)
                                } else {
                                    zero_at(od)
                                };
                                rep.expect_eq("ax1", &idx, lhs12.clone(), ax1r);
                                rep.expect_eq("ax2", &idx, lhs12, ax2r);
                                let ax3l = if in_range(ii + jj) {
                                    le(mij, k, &rij, &z)
                                } else {
                                    zero_at(od)
                                };
                                let ax3r = if in_range(jj + kk) {
                                    ri(i, mjk, &x, &ljk)
                                } else {
                                    zero_at(od)
                                };
                                rep.expect_eq("ax3", &idx, ax3l, ax3r);
                                let ax45r = if in_range(jj + kk) {
                                    ri(i, mjk, &x, &rjk)
                                } else {
                                    zero_at(od)
                                };
                                let ax4l = if in_range(ii + jj) {
                                    ri(mij, k, &lij, &z)
                                } else {
                                    zero_at(od)
                                };
                                let ax5l = if in_range(ii + jj) {
                                    ri(mij, k, &rij, &z)
                                } else {
                                    zero_at(od)
                                };
                                rep.expect_eq("ax4", &idx, ax4l, ax45r.clone());
                                rep.expect_eq("ax5", &idx, ax5l, ax45r);
                            }

                            // graded Leibniz: [[x,y],z] = (-1)^{(j-n)(k-n)}[[x,z],y] + [x,[y,z]]
                            let od = ii + jj + kk - 2 * n;
                            if in_range(od) {
                                let bxy = br(i, j, &x, &y);
                                let lhs = if in_range(ii + jj - n) {
                                    br(at(ii + jj - n), k, &bxy, &z)
                                } else {
                                    zero_at(od)
                                };
                                let bxz = br(i, k, &x, &z);
                                let t1 = if in_range(ii + kk - n) {
                                    br(at(ii + kk - n), j, &bxz, &y)
                                } else {
                                    zero_at(od)
                                };
                                let byz = br(j, k, &y, &z);
                                let t2 = if in_range(jj + kk - n) {
                                    br(i, at(jj + kk - n), &x, &byz)
                                } else {
                                    zero_at(od)
                                };
                                let s = sign_of((jj - n) * (kk - n));
                                rep.expect_eq(
                                    "graded-leibniz",
                                    &idx,
                                    lhs,
                                    vec_add(&vec_scale(&s, &t1), &t2),
                                );
                            }

                            // graded compatibilities, output degree i+j+k-n
                            let od = ii + jj + kk - n;
                            if in_range(od) {
                                let bxz = br(i, k, &x, &z);
                                let bxy = br(i, j, &x, &y);
                                let byz = br(j, k, &y, &z);
                                let bzy = br(k, j, &z, &y);
                                let byx = br(j, i, &y, &x);

                                // ax1: [x, y⊣z] = (-1)^{j(i-n)} y⊢[x,z] + [x,y]⊣z = [x, y⊢z]
                                let t1 = if in_range(ii + kk - n) {
                                    ri(j, at(ii + kk - n), &y, &bxz)
                                } else {
                                    zero_at(od)
                                };
                                let t2 = if in_range(ii + jj - n) {
                                    le(at(ii + jj - n), k, &bxy, &z)
                                } else {
                                    zero_at(od)
                                };
                                let mid = vec_add(&vec_scale(&sign_of(jj * (ii - n)), &t1), &t2);
                                let lhs_a = if in_range(jj + kk) {
                                    br(i, at(jj + kk), &x, &le(j, k, &y, &z))
                                } else {
                                    zero_at(od)
                                };
                                let lhs_b = if in_range(jj + kk) {
                                    br(i, at(jj + kk), &x, &ri(j, k, &y, &z))
                                } else {
                                    zero_at(od)
                                };
                                rep.expect_eq("graded-comp-ax1a", &idx, lhs_a, mid.clone());
                                rep.expect_eq("graded-comp-ax1b", &idx, lhs_b, mid);

                                // ax2: [x⊣y, z] = x⊣[y,z] + (-1)^{j(k-n)}[x,z]⊣y
                                let lhs = if in_range(ii + jj) {
                                    br(at(ii + jj), k, &le(i, j, &x, &y), &z)
                                } else {
                                    zero_at(od)
                                };
                                let u1 = if in_range(jj + kk - n) {
                                    le(i, at(jj + kk - n), &x, &byz)
                                } else {
                                    zero_at(od)
                                };
                                let u2 = if in_range(ii + kk - n) {
                                    le(at(ii + kk - n), j, &bxz, &y)
                                } else {
                                    zero_at(od)
                                };
                                rep.expect_eq(
                                    "graded-comp-ax2",
                                    &idx,
                                    lhs,
                                    vec_add(&u1, &vec_scale(&sign_of(jj * (kk - n)), &u2)),
                                );

                                // ax3: [x⊢y, z] = x⊢[y,z] + (-1)^{j(k-n)}[x,z]⊢y
                                let lhs = if in_range(ii + jj) {
                                    br(at(ii + jj), k, &ri(i, j, &x, &y), &z)
                                } else {
                                    zero_at(od)
                                };
                                let w1 = if in_range(jj + kk - n) {
                                    ri(i, at(jj + kk - n), &x, &byz)
                                } else {
                                    zero_at(od)
                                };
                                let w2 = if in_range(ii + kk - n) {
                                    ri(at(ii + kk - n), j, &bxz, &y)
                                } else {
                                    zero_at(od)
                                };
                                rep.expect_eq(
                                    "graded-comp-ax3",
                                    &idx,
                                    lhs,
                                    vec_add(&w1, &vec_scale(&sign_of(jj * (kk - n)), &w2)),
                                );

                                // ax4: [x,y]⊢z = -(-1)^{(i-n)(j-n)}[y,x]⊢z
                                let v1 = if in_range(ii + jj - n) {
                                    ri(at(ii + jj - n), k, &bxy, &z)
                                } else {
                                    zero_at(od)
                                };
                                let v2 = if in_range(ii + jj - n) {
                                    ri(at(ii + jj - n), k, &byx, &z)
                                } else {
                                    zero_at(od)
                                };
                                let s = sign_of((ii - n) * (jj - n));
                                rep.expect_eq(
                                    "graded-comp-ax4",
                                    &idx,
                                    v1,
                                    vec_neg(&vec_scale(&s, &v2)),
                                );

                                // ax5: x⊣[y,z] = -(-1)^{(j-n)(k-n)} x⊣[z,y]
                                let q1 = if in_range(jj + kk - n) {
                                    le(i, at(jj + kk - n), &x, &byz)
                                } else {
                                    zero_at(od)
                                };
                                let q2 = if in_range(jj + kk - n) {
                                    le(i, at(jj + kk - n), &x, &bzy)
                                } else {
                                    zero_at(od)
                                };
                                let s = sign_of((jj - n) * (kk - n));
                                rep.expect_eq(
                                    "graded-comp-ax5",
                                    &idx,
                                    q1,
                                    vec_neg(&vec_scale(&s, &q2)),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    rep.sort();
    rep
}
