//! 2-term homotopy structures: the associative 2-algebra on `D ⊕ I`, the Lie
//! 2-algebra on `g ⊕ Z(g)`, the combined pair on `P ⊕ J`, and the 2-term
//! homotopy Poisson algebra of the reduced case.
//!
//! The degree-1 component is stored in its own coordinates (the canonical
//! basis of the ideal/center subspace) together with the explicit inclusion
//! matrix; identity checks convert through the inclusion so that every
//! equality is tested in a single coordinate system.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_leibniz, check_poisson_dialgebra, two_sided_unit, Dialgebra, LeibnizAlgebra,
    PoissonDialgebra,
};
use crate::constructions::{annihilator_j, ideal_i, right_center};
use crate::error::Error;
use crate::linalg::{Matrix, Subspace};
use crate::rat::{basis_vec, ratio, vec_add, vec_neg, vec_scale, vec_sub, Rat};
use crate::report::AxiomReport;
use crate::tensor::{ActionMap, BilinearMap, TrilinearMap};

/// 2-term associative structure `A_0 ⊕ A_1` with maps of degree `i - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTermAssoc {
    pub dim0: usize,
    pub dim1: usize,
    /// Degree -1 map `A_1 → A_0` (an inclusion in all constructions here).
    pub mu1: Matrix,
    pub mu2_00: BilinearMap,
    /// Placement `(0,1) → 1`.
    pub mu2_01: ActionMap,
    /// Placement `(1,0) → 1`.
    pub mu2_10: ActionMap,
    /// `(0,0,0) → 1`.
    pub mu3: TrilinearMap,
}

/// 2-term Lie structure with antisymmetric `l2` and alternating `l3`.
/// The `(1,0)` placement of `l2` is determined by antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTermLie {
    pub dim0: usize,
    pub dim1: usize,
    pub l1: Matrix,
    pub l2_00: BilinearMap,
    pub l2_01: ActionMap,
    pub l3: TrilinearMap,
}

/// A Lie 2-algebra together with a graded associative product concentrated
/// in degree 0 over the same graded space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTermHomotopyPoisson {
    pub lie: TwoTermLie,
    pub mu2_00: BilinearMap,
    pub mu2_01: ActionMap,
    pub mu2_10: ActionMap,
}

fn shapes_ok_assoc(t: &TwoTermAssoc) -> bool {
    t.mu1.rows() == t.dim0
        && t.mu1.cols() == t.dim1
        && t.mu2_00.dim() == t.dim0
        && t.mu2_01.shape() == (t.dim0, t.dim1, t.dim1)
        && t.mu2_10.shape() == (t.dim1, t.dim0, t.dim1)
        && t.mu3.dims() == (t.dim0, t.dim1)
}

/// The seven associative 2-algebra identities over all applicable basis
/// tuples (identity (vii) over `dim0^4` quadruples).
pub fn check_associative_2_algebra(t: &TwoTermAssoc) -> AxiomReport {
    let mut rep = AxiomReport::new("associative-2-algebra");
    if !shapes_ok_assoc(t) {
        rep.record("shape", &[], Vec::new(), Vec::new());
        return rep;
    }
    let (n0, n1) = (t.dim0, t.dim1);
    let m2 = &t.mu2_00;
    for x in 0..n0 {
        let ex = basis_vec(n0, x);
        for a in 0..n1 {
            let ea = basis_vec(n1, a);
            let inc_a = t.mu1.mul_vec(&ea);
            // (i): μ1 μ2(x,a) = μ2(x, μ1(a)) and μ1 μ2(a,x) = μ2(μ1(a), x)
            rep.expect_eq(
                "a2-i-left",
                &[x, a],
                t.mu1.mul_vec(&t.mu2_01.eval_basis(x, a)),
                m2.eval(&ex, &inc_a),
            );
            rep.expect_eq(
                "a2-i-right",
                &[a, x],
                t.mu1.mul_vec(&t.mu2_10.eval_basis(a, x)),
                m2.eval(&inc_a, &ex),
            );
        }
    }
    // (ii): μ2(μ1(a), b) = μ2(a, μ1(b))
    for a in 0..n1 {
        let inc_a = t.mu1.mul_vec(&basis_vec(n1, a));
        for b in 0..n1 {
            let eb = basis_vec(n1, b);
            let inc_b = t.mu1.mul_vec(&eb);
            rep.expect_eq(
                "a2-ii",
                &[a, b],
                t.mu2_01.eval(&inc_a, &eb),
                t.mu2_10.eval(&basis_vec(n1, a), &inc_b),
            );
        }
    }
    for x in 0..n0 {
        let ex = basis_vec(n0, x);
        for y in 0..n0 {
            let ey = basis_vec(n0, y);
            let mxy = m2.eval_basis(x, y);
            for z in 0..n0 {
                let ez = basis_vec(n0, z);
                // (iii): μ2(μ2(x,y),z) - μ2(x,μ2(y,z)) = μ1 μ3(x,y,z)
                let asso = vec_sub(&m2.eval(&mxy, &ez), &m2.eval(&ex, &m2.eval_basis(y, z)));
                rep.expect_eq(
                    "a2-iii",
                    &[x, y, z],
                    asso,
                    t.mu1.mul_vec(&t.mu3.eval_basis(x, y, z)),
                );
            }
            for a in 0..n1 {
                let ea = basis_vec(n1, a);
                let inc_a = t.mu1.mul_vec(&ea);
                // (iv): μ2(μ2(a,x),y) - μ2(a,μ2(x,y)) = μ3(μ1(a),x,y)
                rep.expect_eq(
                    "a2-iv",
                    &[a, x, y],
                    vec_sub(
                        &t.mu2_10.eval(&t.mu2_10.eval_basis(a, x), &ey),
                        &t.mu2_10.eval(&ea, &mxy),
                    ),
                    t.mu3.eval(&inc_a, &ex, &ey),
                );
                // (v): μ2(μ2(x,a),y) - μ2(x,μ2(a,y)) = μ3(x,μ1(a),y)
                rep.expect_eq(
                    "a2-v",
                    &[x, a, y],
                    vec_sub(
                        &t.mu2_10.eval(&t.mu2_01.eval_basis(x, a), &ey),
                        &t.mu2_01.eval(&ex, &t.mu2_10.eval_basis(a, y)),
                    ),
                    t.mu3.eval(&ex, &inc_a, &ey),
                );
                // (vi): μ2(μ2(x,y),a) - μ2(x,μ2(y,a)) = μ3(x,y,μ1(a))
                rep.expect_eq(
                    "a2-vi",
                    &[x, y, a],
                    vec_sub(
                        &t.mu2_01.eval(&mxy, &ea),
                        &t.mu2_01.eval(&ex, &t.mu2_01.eval_basis(y, a)),
                    ),
                    t.mu3.eval(&ex, &ey, &inc_a),
                );
            }
            for z in 0..n0 {
                let ez = basis_vec(n0, z);
                let myz = m2.eval_basis(y, z);
                for w in 0..n0 {
                    let ew = basis_vec(n0, w);
                    // (vii)
                    let lhs = vec_add(
                        &vec_sub(&t.mu3.eval(&mxy, &ez, &ew), &t.mu3.eval(&ex, &myz, &ew)),
                        &t.mu3.eval(&ex, &ey, &m2.eval_basis(z, w)),
                    );
                    let rhs = vec_add(
                        &t.mu2_10.eval(&t.mu3.eval_basis(x, y, z), &ew),
                        &t.mu2_01.eval(&ex, &t.mu3.eval_basis(y, z, w)),
                    );
                    rep.expect_eq("a2-vii", &[x, y, z, w], lhs, rhs);
                }
            }
        }
    }
    rep.sort();
    rep
}

fn shapes_ok_lie(t: &TwoTermLie) -> bool {
    t.l1.rows() == t.dim0
        && t.l1.cols() == t.dim1
        && t.l2_00.dim() == t.dim0
        && t.l2_01.shape() == (t.dim0, t.dim1, t.dim1)
        && t.l3.dims() == (t.dim0, t.dim1)
}

/// The five Lie 2-algebra identities plus graded antisymmetry of `l2` and
/// full alternation of `l3`. Identity (v) is the arity-4 coherence of a
/// 2-term homotopy Lie algebra in its unshuffle form.
pub fn check_lie_2_algebra(t: &TwoTermLie) -> AxiomReport {
    let mut rep = AxiomReport::new("lie-2-algebra");
    if !shapes_ok_lie(t) {
        rep.record("shape", &[], Vec::new(), Vec::new());
        return rep;
    }
    let (n0, n1) = (t.dim0, t.dim1);
    let l2 = &t.l2_00;
    // l2 antisymmetry and l3 alternation as stored-tensor properties
    for x in 0..n0 {
        for y in 0..n0 {
            rep.expect_eq(
                "l2-antisym",
                &[x, y],
                l2.eval_basis(x, y),
                vec_neg(&l2.eval_basis(y, x)),
            );
            for z in 0..n0 {
                rep.expect_eq(
                    "l3-alternating",
                    &[x, y, z],
                    t.l3.eval_basis(x, y, z),
                    vec_neg(&t.l3.eval_basis(y, x, z)),
                );
                rep.expect_eq(
                    "l3-alternating",
                    &[x, y, z],
                    t.l3.eval_basis(x, y, z),
                    vec_neg(&t.l3.eval_basis(x, z, y)),
                );
            }
        }
    }
    for x in 0..n0 {
        let ex = basis_vec(n0, x);
        for a in 0..n1 {
            let ea = basis_vec(n1, a);
            let inc_a = t.l1.mul_vec(&ea);
            // (i): l1 l2(x,a) = l2(x, l1(a))
            rep.expect_eq(
                "l2-i",
                &[x, a],
                t.l1.mul_vec(&t.l2_01.eval_basis(x, a)),
                l2.eval(&ex, &inc_a),
            );
        }
    }
    // (ii): l2(l1(a), b) = l2(a, l1(b)) = -l2(l1(b), a)
    for a in 0..n1 {
        let inc_a = t.l1.mul_vec(&basis_vec(n1, a));
        for b in 0..n1 {
            let eb = basis_vec(n1, b);
            let inc_b = t.l1.mul_vec(&eb);
            rep.expect_eq(
                "l2-ii",
                &[a, b],
                t.l2_01.eval(&inc_a, &eb),
                vec_neg(&t.l2_01.eval(&inc_b, &basis_vec(n1, a))),
            );
        }
    }
    for x in 0..n0 {
        let ex = basis_vec(n0, x);
        for y in 0..n0 {
            let ey = basis_vec(n0, y);
            for z in 0..n0 {
                let ez = basis_vec(n0, z);
                // (iii): l2(x,l2(y,z)) + l2(y,l2(z,x)) + l2(z,l2(x,y)) = l1 l3(x,y,z)
                let jac = vec_add(
                    &vec_add(
                        &l2.eval(&ex, &l2.eval_basis(y, z)),
                        &l2.eval(&ey, &l2.eval_basis(z, x)),
                    ),
                    &l2.eval(&ez, &l2.eval_basis(x, y)),
                );
                rep.expect_eq(
                    "l2-iii",
                    &[x, y, z],
                    jac,
                    t.l1.mul_vec(&t.l3.eval_basis(x, y, z)),
                );
            }
            for a in 0..n1 {
                let ea = basis_vec(n1, a);
                let inc_a = t.l1.mul_vec(&ea);
                // (iv): l2(x,l2(y,a)) + l2(y,l2(a,x)) + l2(a,l2(x,y)) = l3(x,y,l1(a))
                let lhs = vec_sub(
                    &vec_sub(
                        &t.l2_01.eval(&ex, &t.l2_01.eval_basis(y, a)),
                        &t.l2_01.eval(&ey, &t.l2_01.eval_basis(x, a)),
                    ),
                    &t.l2_01.eval(&l2.eval_basis(x, y), &ea),
                );
                rep.expect_eq("l2-iv", &[x, y, a], lhs, t.l3.eval(&ex, &ey, &inc_a));
            }
        }
    }
    // (v): arity-4 coherence,
    // l3(l2(x,y),z,w) - l3(l2(x,z),y,w) + l3(l2(x,w),y,z) + l3(l2(y,z),x,w)
    //   - l3(l2(y,w),x,z) + l3(l2(z,w),x,y)
    // = l2(l3(x,y,z),w) - l2(l3(x,y,w),z) + l2(l3(x,z,w),y) - l2(l3(y,z,w),x)
    // with l2(c, u) = -l2_01(u, c) for c in degree 1.
    for x in 0..n0 {
        let ex = basis_vec(n0, x);
        for y in 0..n0 {
            let ey = basis_vec(n0, y);
            for z in 0..n0 {
                let ez = basis_vec(n0, z);
                for w in 0..n0 {
                    let ew = basis_vec(n0, w);
                    let mut lhs = t.l3.eval(&l2.eval_basis(x, y), &ez, &ew);
                    lhs = vec_sub(&lhs, &t.l3.eval(&l2.eval_basis(x, z), &ey, &ew));
                    lhs = vec_add(&lhs, &t.l3.eval(&l2.eval_basis(x, w), &ey, &ez));
                    lhs = vec_add(&lhs, &t.l3.eval(&l2.eval_basis(y, z), &ex, &ew));
                    lhs = vec_sub(&lhs, &t.l3.eval(&l2.eval_basis(y, w), &ex, &ez));
                    lhs = vec_add(&lhs, &t.l3.eval(&l2.eval_basis(z, w), &ex, &ey));
                    let mut rhs = vec_neg(&t.l2_01.eval(&ew, &t.l3.eval_basis(x, y, z)));
                    rhs = vec_add(&rhs, &t.l2_01.eval(&ez, &t.l3.eval_basis(x, y, w)));
                    rhs = vec_sub(&rhs, &t.l2_01.eval(&ey, &t.l3.eval_basis(x, z, w)));
                    rhs = vec_add(&rhs, &t.l2_01.eval(&ex, &t.l3.eval_basis(y, z, w)));
                    rep.expect_eq("l2-v", &[x, y, z, w], lhs, rhs);
                }
            }
        }
    }
    rep.sort();
    rep
}

fn member_coords(
    sub: &Subspace,
    v: &[Rat],
    guard: &'static str,
    what: &str,
) -> Result<Vec<Rat>, Error> {
    sub.coordinates(v)
        .ok_or_else(|| Error::guard(guard, format!("{what} is not in the degree-1 subspace")))
}

fn build_two_term_assoc(
    d: &Dialgebra,
    sub: &Subspace,
    guard: &'static str,
) -> Result<TwoTermAssoc, Error> {
    let n = d.dim();
    let n1 = sub.dim();
    let half = ratio(1, 2);
    let quarter = ratio(1, 4);
    let mut mu2_00 = BilinearMap::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *mu2_00.get_mut(i, j, k) =
                    &half * &(d.left().get(i, j, k) + d.right().get(i, j, k));
            }
        }
    }
    let mut mu2_01 = ActionMap::zeros(n, n1, n1);
    let mut mu2_10 = ActionMap::zeros(n1, n, n1);
    let rows = sub.basis_rows();
    for x in 0..n {
        let ex = basis_vec(n, x);
        for (a, row) in rows.iter().enumerate() {
            let va = mu2_00.eval(&ex, row);
            let ca = member_coords(sub, &va, guard, "mu2(x, a)")?;
            let vb = mu2_00.eval(row, &ex);
            let cb = member_coords(sub, &vb, guard, "mu2(a, x)")?;
            for k in 0..n1 {
                *mu2_01.get_mut(x, a, k) = ca[k].clone();
                *mu2_10.get_mut(a, x, k) = cb[k].clone();
            }
        }
    }
    let mut mu3 = TrilinearMap::zeros(n, n1);
    for i in 0..n {
        let ei = basis_vec(n, i);
        for j in 0..n {
            for k in 0..n {
                let ek = basis_vec(n, k);
                // μ3 = ¼((x⊣y)⊢z - x⊣(y⊢z)), the associator of μ2
                let v = vec_scale(
                    &quarter,
                    &vec_sub(
                        &d.right().eval(&d.left().eval_basis(i, j), &ek),
                        &d.left().eval(&ei, &d.right().eval_basis(j, k)),
                    ),
                );
                let c = member_coords(sub, &v, guard, "mu3(x,y,z)")?;
                mu3.set_value(i, j, k, &c);
            }
        }
    }
    Ok(TwoTermAssoc {
        dim0: n,
        dim1: n1,
        mu1: sub.basis().transpose(),
        mu2_00,
        mu2_01,
        mu2_10,
        mu3,
    })
}

fn build_two_term_lie(
    bracket: &BilinearMap,
    sub: &Subspace,
    guard: &'static str,
) -> Result<TwoTermLie, Error> {
    let n = bracket.dim();
    let n1 = sub.dim();
    let half = ratio(1, 2);
    let mut l2_00 = BilinearMap::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *l2_00.get_mut(i, j, k) = &half * &(bracket.get(i, j, k) - bracket.get(j, i, k));
            }
        }
    }
    let mut l2_01 = ActionMap::zeros(n, n1, n1);
    let rows = sub.basis_rows();
    for x in 0..n {
        let ex = basis_vec(n, x);
        for (a, row) in rows.iter().enumerate() {
            let v = l2_00.eval(&ex, row);
            let c = member_coords(sub, &v, guard, "l2(x, a)")?;
            for k in 0..n1 {
                *l2_01.get_mut(x, a, k) = c[k].clone();
            }
        }
    }
    // l3 is the Jacobiator of l2
    let mut l3 = TrilinearMap::zeros(n, n1);
    for i in 0..n {
        let ei = basis_vec(n, i);
        for j in 0..n {
            let ej = basis_vec(n, j);
            for k in 0..n {
                let ek = basis_vec(n, k);
                let jac = vec_add(
                    &vec_add(
                        &l2_00.eval(&ei, &l2_00.eval_basis(j, k)),
                        &l2_00.eval(&ej, &l2_00.eval_basis(k, i)),
                    ),
                    &l2_00.eval(&ek, &l2_00.eval_basis(i, j)),
                );
                let c = member_coords(sub, &jac, guard, "l3(x,y,z)")?;
                l3.set_value(i, j, k, &c);
            }
        }
    }
    Ok(TwoTermLie {
        dim0: n,
        dim1: n1,
        l1: sub.basis().transpose(),
        l2_00,
        l2_01,
        l3,
    })
}

/// `A_0 = D`, `A_1 = I` with `μ1` the inclusion, `μ2 = ½(⊣ + ⊢)` and
/// `μ3 = ¼((x⊣y)⊢z - x⊣(y⊢z))`; every mixed value is verified to lie in `I`
/// before conversion to `I`-coordinates.
pub fn associative_2_algebra_from_dialgebra(d: &Dialgebra) -> Result<TwoTermAssoc, Error> {
    let rep = crate::algebra::check_dialgebra(d);
    if !rep.passed() {
        return Err(Error::invalid("dialgebra", "axiom check failed"));
    }
    let ideal = ideal_i(d)?;
    build_two_term_assoc(d, &ideal, "I-membership")
}

/// `g_1 = Z(g)` with `l1` the inclusion, `l2` the antisymmetrized bracket and
/// `l3` its Jacobiator; centrality of all mixed values is verified.
pub fn lie_2_algebra_from_leibniz(l: &LeibnizAlgebra) -> Result<TwoTermLie, Error> {
    let rep = check_leibniz(l);
    if !rep.passed() {
        return Err(Error::invalid("leibniz algebra", "axiom check failed"));
    }
    let z = right_center(l);
    build_two_term_lie(&l.bracket, &z, "centrality")
}

/// Both 2-term structures over the same graded space `P ⊕ J` with
/// `J = I ∩ Z(P)`; all membership guards are verified.
pub fn homotopy_pair_from_poisson_dialgebra(
    p: &PoissonDialgebra,
) -> Result<(TwoTermAssoc, TwoTermLie), Error> {
    let rep = check_poisson_dialgebra(p);
    if !rep.passed() {
        return Err(Error::invalid("poisson dialgebra", "axiom check failed"));
    }
    let j = annihilator_j(p)?;
    let assoc = build_two_term_assoc(&p.dialgebra(), &j, "J-membership")?;
    let lie = build_two_term_lie(p.bracket(), &j, "J-membership")?;
    Ok((assoc, lie))
}

/// True iff the left and right product tensors are entrywise equal.
pub fn check_reduced(p: &PoissonDialgebra) -> bool {
    p.left() == p.right()
}

/// Diagnostic: the reduced path is only interesting for non-unital algebras
/// (with a two-sided unit the structure collapses to a Poisson algebra).
pub fn reduced_unit_warning(p: &PoissonDialgebra) -> Option<String> {
    two_sided_unit(p.left()).map(|u| {
        format!(
            "the reduced product has a two-sided unit {u:?}; the structure is an ordinary Poisson algebra"
        )
    })
}

/// The 2-term homotopy Poisson algebra of a reduced Poisson dialgebra: the
/// Lie 2-structure plus the degree-0 associative product, with the
/// derivation laws for `l2` (degree `|x|`) and `l3` (degree `|x|+|y|-1`)
/// verified exactly.
pub fn homotopy_poisson_from_reduced(
    p: &PoissonDialgebra,
) -> Result<TwoTermHomotopyPoisson, Error> {
    if !check_reduced(p) {
        return Err(Error::Precondition(
            "the Poisson dialgebra is not reduced (⊣ ≠ ⊢)".to_string(),
        ));
    }
    let (assoc, lie) = homotopy_pair_from_poisson_dialgebra(p)?;
    let out = TwoTermHomotopyPoisson {
        lie,
        mu2_00: assoc.mu2_00,
        mu2_01: assoc.mu2_01,
        mu2_10: assoc.mu2_10,
    };
    let rep = check_homotopy_poisson_derivations(&out);
    if !rep.passed() {
        let first = rep.first().unwrap();
        return Err(Error::guard(
            "derivation",
            format!("{} fails at {:?}", first.axiom, first.indices),
        ));
    }
    Ok(out)
}

/// `z ↦ l2(x,z)` is a derivation of degree `|x|` of the product, and
/// `z ↦ l3(x,y,z)` a derivation of degree `|x|+|y|-1`; all sign cases that
/// survive the degree bookkeeping of a 2-term space are checked.
pub fn check_homotopy_poisson_derivations(t: &TwoTermHomotopyPoisson) -> AxiomReport {
    let mut rep = AxiomReport::new("homotopy-poisson");
    let (n0, n1) = (t.lie.dim0, t.lie.dim1);
    let l2 = &t.lie.l2_00;
    let mu = &t.mu2_00;
    for w in 0..n0 {
        let ew = basis_vec(n0, w);
        for u in 0..n0 {
            let eu = basis_vec(n0, u);
            for v in 0..n0 {
                let ev = basis_vec(n0, v);
                // all degree 0: l2(w, uv) = l2(w,u) v + u l2(w,v)
                let lhs = l2.eval(&ew, &mu.eval_basis(u, v));
                let rhs = vec_add(
                    &mu.eval(&l2.eval_basis(w, u), &ev),
                    &mu.eval(&eu, &l2.eval_basis(w, v)),
                );
                rep.expect_eq("hp-l2-deriv", &[w, u, v], lhs, rhs);
            }
            for c in 0..n1 {
                let ec = basis_vec(n1, c);
                // (0,0,1): l2(w, μ(u,c)) = μ(l2(w,u), c) + μ(u, l2(w,c))
                let lhs = t.lie.l2_01.eval(&ew, &t.mu2_01.eval_basis(u, c));
                let rhs = vec_add(
                    &t.mu2_01.eval(&l2.eval_basis(w, u), &ec),
                    &t.mu2_01.eval(&eu, &t.lie.l2_01.eval_basis(w, c)),
                );
                rep.expect_eq("hp-l2-deriv-01", &[w, u, c], lhs, rhs);
                // (0,1,0): l2(w, μ(c,u)) = μ(l2(w,c), u) + μ(c, l2(w,u))
                let lhs = t.lie.l2_01.eval(&ew, &t.mu2_10.eval_basis(c, u));
                let rhs = vec_add(
                    &t.mu2_10.eval(&t.lie.l2_01.eval_basis(w, c), &eu),
                    &t.mu2_10.eval(&ec, &l2.eval_basis(w, u)),
                );
                rep.expect_eq("hp-l2-deriv-10", &[w, c, u], lhs, rhs);
            }
        }
    }
    // degree-1 derivation slot: l2(c, uv) = l2(c,u) v + (-1)^{1·0} u l2(c,v)
    // with l2(c, x) = -l2_01(x, c)
    for c in 0..n1 {
        let ec = basis_vec(n1, c);
        for u in 0..n0 {
            let eu = basis_vec(n0, u);
            for v in 0..n0 {
                let ev = basis_vec(n0, v);
                let lhs = vec_neg(&t.lie.l2_01.eval(&mu.eval_basis(u, v), &ec));
                let rhs = vec_add(
                    &t.mu2_10.eval(&vec_neg(&t.lie.l2_01.eval(&eu, &ec)), &ev),
                    &t.mu2_01.eval(&eu, &vec_neg(&t.lie.l2_01.eval(&ev, &ec))),
                );
                rep.expect_eq("hp-l2-deriv-c", &[c, u, v], lhs, rhs);
            }
        }
    }
    // l3: only the all-degree-0 case has nonzero sides in a 2-term space
    for x in 0..n0 {
        let ex = basis_vec(n0, x);
        for y in 0..n0 {
            let ey = basis_vec(n0, y);
            for u in 0..n0 {
                let eu = basis_vec(n0, u);
                for v in 0..n0 {
                    let ev = basis_vec(n0, v);
                    let lhs = t.lie.l3.eval(&ex, &ey, &mu.eval_basis(u, v));
                    let rhs = vec_add(
                        &t.mu2_10.eval(&t.lie.l3.eval_basis(x, y, u), &ev),
                        &t.mu2_01.eval(&eu, &t.lie.l3.eval_basis(x, y, v)),
                    );
                    rep.expect_eq("hp-l3-deriv", &[x, y, u, v], lhs, rhs);
                }
            }
        }
    }
    rep.sort();
    rep
}

/// Exploratory residuals for the open compatibility question between the two
/// 2-term structures on `P ⊕ J`: candidate expressions are evaluated and
/// returned without asserting any law. Each residual maps degree-0 triples
/// into the ambient space (Leibniz-type) or into `J` (3-map difference).
pub fn compat_residuals(p: &PoissonDialgebra) -> Result<Vec<(String, TrilinearMap)>, Error> {
    let (assoc, lie) = homotopy_pair_from_poisson_dialgebra(p)?;
    let n = p.dim();
    let mut leib = TrilinearMap::zeros(n, n);
    for x in 0..n {
        let ex = basis_vec(n, x);
        for y in 0..n {
            let ey = basis_vec(n, y);
            for z in 0..n {
                let ez = basis_vec(n, z);
                // l2(x, μ2(y,z)) - μ2(l2(x,y), z) - μ2(y, l2(x,z))
                let v = vec_sub(
                    &vec_sub(
                        &lie.l2_00.eval(&ex, &assoc.mu2_00.eval_basis(y, z)),
                        &assoc.mu2_00.eval(&lie.l2_00.eval_basis(x, y), &ez),
                    ),
                    &assoc.mu2_00.eval(&ey, &lie.l2_00.eval_basis(x, z)),
                );
                leib.set_value(x, y, z, &v);
            }
        }
    }
    let mut diff = TrilinearMap::zeros(n, assoc.dim1);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let v = vec_sub(&assoc.mu3.eval_basis(x, y, z), &lie.l3.eval_basis(x, y, z));
                diff.set_value(x, y, z, &v);
            }
        }
    }
    Ok(vec![
        ("l2-mu2-leibniz-residual".to_string(), leib),
        ("mu3-minus-l3".to_string(), diff),
    ])
}
