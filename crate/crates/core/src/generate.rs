//! Seeded generation of valid instances.
//!
//! Generation is constructive, never rejection-sampled over raw tensors: the
//! axiom variety is far too thin for that. Instances are drawn from the
//! example families (associative algebras viewed as dialgebras, bimodule
//! maps, differentials, averaging operators, weight filtrations), optionally
//! twisted by a random unimodular change of basis. The same seed always
//! produces the same instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    check_averaging, AssociativeAlgebra, Dialgebra, LinearOperator, PoissonAlgebra,
    PoissonDialgebra,
};
use crate::constructions::{
    poisson_dialgebra_from_averaging, poisson_dialgebra_from_bimodule_map,
    poisson_dialgebra_from_differential, PoissonLMObject,
};
use crate::error::Error;
use crate::fixtures;
use crate::graded::FilteredDialgebra;
use crate::linalg::{kernel, Matrix, Subspace};
use crate::rat::{basis_vec, rat, Rat};
use crate::tensor::{ActionMap, BilinearMap};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    AssocAsDialgebra,
    BimoduleMap,
    Differential,
    Averaging,
    Filtered,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family, Error> {
        match s {
            "assoc-as-dialgebra" => Ok(Family::AssocAsDialgebra),
            "bimodule-map" => Ok(Family::BimoduleMap),
            "differential" => Ok(Family::Differential),
            "averaging" => Ok(Family::Averaging),
            "filtered" => Ok(Family::Filtered),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::AssocAsDialgebra => "assoc-as-dialgebra",
            Family::BimoduleMap => "bimodule-map",
            Family::Differential => "differential",
            Family::Averaging => "averaging",
            Family::Filtered => "filtered",
        }
    }

    pub fn all() -> [Family; 5] {
        [
            Family::AssocAsDialgebra,
            Family::BimoduleMap,
            Family::Differential,
            Family::Averaging,
            Family::Filtered,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Differential,
    Averaging,
}

#[derive(Debug, Clone)]
pub enum Generated {
    Dialgebra(Dialgebra),
    Poisson(PoissonDialgebra),
    /// A Poisson algebra carrying a verified operator; the twisted Poisson
    /// dialgebra is obtained with the matching construction.
    PoissonWithOperator {
        algebra: PoissonAlgebra,
        operator: LinearOperator,
        kind: OperatorKind,
    },
    Filtered(FilteredDialgebra),
}

impl Generated {
    /// The Poisson dialgebra an instance stands for (operators applied,
    /// dialgebras lifted by their induced bracket).
    pub fn into_poisson_dialgebra(self) -> PoissonDialgebra {
        match self {
            Generated::Dialgebra(d) => crate::constructions::induced_poisson_dialgebra(&d).unwrap(),
            Generated::Poisson(p) => p,
            Generated::PoissonWithOperator {
                algebra,
                operator,
                kind,
            } => match kind {
                OperatorKind::Differential => {
                    poisson_dialgebra_from_differential(&algebra, &operator).unwrap()
                }
                OperatorKind::Averaging => {
                    poisson_dialgebra_from_averaging(&algebra, &operator).unwrap()
                }
            },
            Generated::Filtered(fd) => {
                crate::constructions::induced_poisson_dialgebra(&fd.base).unwrap()
            }
        }
    }
}

/// A curated associative algebra together with weights compatible with its
/// products (`w(e_i ∘ e_j) = w(e_i) + w(e_j)` where nonzero).
fn curated_assoc(rng: &mut ChaCha8Rng, dim_bound: usize) -> (AssociativeAlgebra, Vec<usize>) {
    let mut shapes: Vec<(AssociativeAlgebra, Vec<usize>)> = Vec::new();
    for d in 1..=dim_bound.min(4) {
        shapes.push((AssociativeAlgebra::new(BilinearMap::zeros(d)), vec![1; d]));
    }
    for k in 2..=dim_bound.min(5) {
        shapes.push((fixtures::truncated_polynomial(k), (1..=k).collect()));
    }
    if dim_bound >= 3 {
        shapes.push((
            fixtures::strictly_upper_triangular(3),
            fixtures::upper_triangular_levels(3),
        ));
    }
    if dim_bound >= 6 {
        shapes.push((
            fixtures::strictly_upper_triangular(4),
            fixtures::upper_triangular_levels(4),
        ));
    }
    if dim_bound >= 9 {
        let (h, w) = fixtures::heisenberg_with_weights();
        shapes.push((h, w));
    }
    let i = rng.gen_range(0..shapes.len());
    let (a, w) = shapes[i].clone();
    // direct sum of two small shapes, when it fits
    if a.dim() * 2 <= dim_bound && rng.gen_bool(0.3) {
        let j = rng.gen_range(0..shapes.len());
        let (b, wb) = &shapes[j];
        if a.dim() + b.dim() <= dim_bound {
            let mut w2 = w.clone();
            w2.extend(wb.iter().copied());
            return (fixtures::direct_sum(&a, b), w2);
        }
    }
    (a, w)
}

/// A random unimodular shear `g` with its exact inverse.
fn random_shear(rng: &mut ChaCha8Rng, n: usize) -> (Matrix, Matrix) {
    let mut g = Matrix::identity(n);
    let mut g_inv = Matrix::identity(n);
    if n < 2 {
        return (g, g_inv);
    }
    let ops = rng.gen_range(1..=3);
    for _ in 0..ops {
        let r = rng.gen_range(0..n);
        let mut s = rng.gen_range(0..n);
        if s == r {
            s = (s + 1) % n;
        }
        let lam = rat(rng.gen_range(-2i64..=2));
        if lam.is_zero() {
            continue;
        }
        // g := g * E(r -> s, lam), applied as column op to keep the product exact
        let mut e = Matrix::identity(n);
        e[(r, s)] = lam.clone();
        let mut e_inv = Matrix::identity(n);
        e_inv[(r, s)] = -lam;
        g = g.mul(&e);
        g_inv = e_inv.mul(&g_inv);
    }
    (g, g_inv)
}

fn maybe_basis_change(rng: &mut ChaCha8Rng, a: &AssociativeAlgebra) -> AssociativeAlgebra {
    if a.dim() >= 2 && rng.gen_bool(0.5) {
        let (g, g_inv) = random_shear(rng, a.dim());
        AssociativeAlgebra::new(fixtures::change_of_basis(&a.product, &g, &g_inv))
    } else {
        a.clone()
    }
}

/// A curated Poisson algebra (commutative product with zero bracket, zero
/// product with a solvable or abelian bracket, or a commutator pair).
fn curated_poisson(rng: &mut ChaCha8Rng, dim_bound: usize) -> PoissonAlgebra {
    let choice = rng.gen_range(0..4);
    match choice {
        0 => {
            let (a, _) = curated_assoc(rng, dim_bound);
            // commutative shapes only: symmetrize the check by construction
            let comm = fixtures::commutator(&a.product);
            if comm.is_zero() {
                let n = a.dim();
                PoissonAlgebra::new(a.product, BilinearMap::zeros(n)).unwrap()
            } else {
                // noncommutative product with its commutator bracket
                PoissonAlgebra::new(a.product.clone(), comm).unwrap()
            }
        }
        1 => fixtures::solvable2_poisson(),
        2 => {
            let n = rng.gen_range(1..=dim_bound.min(3));
            PoissonAlgebra::new(fixtures::pointwise(n).product, BilinearMap::zeros(n)).unwrap()
        }
        _ => {
            let n = rng.gen_range(1..=dim_bound.min(4));
            PoissonAlgebra::new(BilinearMap::zeros(n), BilinearMap::zeros(n)).unwrap()
        }
    }
}

fn gen_dialgebra(rng: &mut ChaCha8Rng, dim_bound: usize) -> Dialgebra {
    let (a, _) = curated_assoc(rng, dim_bound);
    Dialgebra::from_associative(&maybe_basis_change(rng, &a))
}

fn gen_bimodule_map(rng: &mut ChaCha8Rng, dim_bound: usize) -> PoissonDialgebra {
    let shape = rng.gen_range(0..4);
    let o = match shape {
        0 => {
            // regular object M = P, f = id
            let p = curated_poisson(rng, dim_bound);
            PoissonLMObject::regular(&p)
        }
        1 => {
            // M = P ⊕ P with f(m1, m2) = m1 + λ m2
            let p = curated_poisson(rng, dim_bound / 2);
            let n = p.dim();
            let lam = rat(rng.gen_range(-2i64..=2));
            let mut f = Matrix::zeros(n, 2 * n);
            for i in 0..n {
                f[(i, i)] = rat(1);
                f[(i, n + i)] = lam.clone();
            }
            let mut la = ActionMap::zeros(n, 2 * n, 2 * n);
            let mut ra = ActionMap::zeros(2 * n, n, 2 * n);
            let mut nu = ActionMap::zeros(n, 2 * n, 2 * n);
            // componentwise regular actions on both summands
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let v = p.product.get(i, j, k).clone();
                        *la.get_mut(i, j, k) = v.clone();
                        *la.get_mut(i, n + j, n + k) = v;
                        let v = p.product.get(j, i, k).clone();
                        *ra.get_mut(j, i, k) = v.clone();
                        *ra.get_mut(n + j, i, n + k) = v;
                        let w = p.bracket.get(i, j, k).clone();
                        *nu.get_mut(i, j, k) = w.clone();
                        *nu.get_mut(i, n + j, n + k) = w;
                    }
                }
            }
            PoissonLMObject {
                downstairs: p,
                f,
                left_action: la,
                right_action: ra,
                bracket_action: nu,
            }
        }
        2 => {
            // M = P ⊕ K^r with a null block and f the first projection
            let p = curated_poisson(rng, dim_bound.saturating_sub(1).max(1));
            let n = p.dim();
            let r = rng.gen_range(1..=2usize);
            let m = n + r;
            let mut f = Matrix::zeros(n, m);
            for i in 0..n {
                f[(i, i)] = rat(1);
            }
            let mut la = ActionMap::zeros(n, m, m);
            let mut ra = ActionMap::zeros(m, n, m);
            let mut nu = ActionMap::zeros(n, m, m);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        *la.get_mut(i, j, k) = p.product.get(i, j, k).clone();
                        *ra.get_mut(j, i, k) = p.product.get(j, i, k).clone();
                        *nu.get_mut(i, j, k) = p.bracket.get(i, j, k).clone();
                    }
                }
            }
            PoissonLMObject {
                downstairs: p,
                f,
                left_action: la,
                right_action: ra,
                bracket_action: nu,
            }
        }
        _ => {
            // zero Poisson algebra downstairs with a nilpotent bracket twist:
            // ν′(x, m) = -x·R(m) with the first row of R zero so f ∘ R = 0
            let m = rng.gen_range(2..=dim_bound.max(2).min(4));
            let p = PoissonAlgebra::new(BilinearMap::zeros(1), BilinearMap::zeros(1)).unwrap();
            let mut f = Matrix::zeros(1, m);
            f[(0, 0)] = rat(1);
            let mut nu = ActionMap::zeros(1, m, m);
            for j in 0..m {
                for k in 1..m {
                    let v = rat(rng.gen_range(-1i64..=1));
                    *nu.get_mut(0, j, k) = -v;
                }
            }
            PoissonLMObject {
                downstairs: p,
                f,
                left_action: ActionMap::zeros(1, m, m),
                right_action: ActionMap::zeros(m, 1, m),
                bracket_action: nu,
            }
        }
    };
    poisson_dialgebra_from_bimodule_map(&o).expect("bimodule-map family is valid by construction")
}

/// Basis of the space of square-zero derivations is searched by solving the
/// linear derivation constraints and then trying small-coefficient
/// combinations against `d² = 0` (the zero derivation always qualifies).
fn gen_differential(rng: &mut ChaCha8Rng, dim_bound: usize) -> (PoissonAlgebra, LinearOperator) {
    let p = curated_poisson(rng, dim_bound);
    let n = p.dim();
    // derivation constraints, linear in the n² unknowns d[(r,c)]
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let idx = |r: usize, c: usize| r * n + c;
    for (t, tensor) in [&p.product, &p.bracket].into_iter().enumerate() {
        let _ = t;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // d(e_i ∘ e_j)_k - (e_i ∘ d e_j)_k - (d e_i ∘ e_j)_k = 0
                    let mut row = crate::rat::vec_zero(n * n);
                    for m in 0..n {
                        // d maps e_m coefficient of e_i∘e_j to k
                        let c = tensor.get(i, j, m);
                        if !c.is_zero() {
                            row[idx(k, m)] += c.clone();
                        }
                        // e_i ∘ (d e_j): d e_j = Σ_m d[(m,j)] e_m
                        let c = tensor.get(i, m, k);
                        if !c.is_zero() {
                            row[idx(m, j)] -= c.clone();
                        }
                        let c = tensor.get(m, j, k);
                        if !c.is_zero() {
                            row[idx(m, i)] -= c.clone();
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    let sys = Matrix::from_rows(n * n, &rows);
    let solutions = kernel(&sys);
    let basis = solutions.basis_rows();
    let mut chosen = Matrix::zeros(n, n);
    if !basis.is_empty() {
        for _attempt in 0..40 {
            let mut entries = crate::rat::vec_zero(n * n);
            for b in &basis {
                let c = rat(rng.gen_range(-2i64..=2));
                for (t, v) in b.iter().enumerate() {
                    entries[t] += &c * v;
                }
            }
            let mut d = Matrix::zeros(n, n);
            for r in 0..n {
                for c in 0..n {
                    d[(r, c)] = entries[idx(r, c)].clone();
                }
            }
            if d.mul(&d).is_zero() {
                chosen = d;
                break;
            }
        }
    }
    let op = LinearOperator::new(chosen).unwrap();
    poisson_dialgebra_from_differential(&p, &op)
        .expect("differential family is valid by construction");
    (p, op)
}

fn gen_averaging(rng: &mut ChaCha8Rng, dim_bound: usize) -> (PoissonAlgebra, LinearOperator) {
    let p = curated_poisson(rng, dim_bound);
    let n = p.dim();
    let mut candidates: Vec<Matrix> = vec![Matrix::zeros(n, n), Matrix::identity(n)];
    // scalar multiples of the identity average any Poisson algebra
    let c = rat(rng.gen_range(-2i64..=2));
    let mut scal = Matrix::zeros(n, n);
    for i in 0..n {
        scal[(i, i)] = c.clone();
    }
    candidates.push(scal);
    // a couple of random small operators, kept only if they average
    for _ in 0..12 {
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for cc in 0..n {
                if rng.gen_bool(0.4) {
                    m[(r, cc)] = rat(rng.gen_range(-1i64..=1));
                }
            }
        }
        candidates.push(m);
    }
    let mut alpha = LinearOperator::new(Matrix::identity(n)).unwrap();
    let pick = rng.gen_range(0..candidates.len());
    for m in candidates.into_iter().cycle().skip(pick).take(16) {
        let op = LinearOperator::new(m).unwrap();
        if check_averaging(&p, &op)
            .map(|r| r.passed())
            .unwrap_or(false)
        {
            alpha = op;
            break;
        }
    }
    poisson_dialgebra_from_averaging(&p, &alpha)
        .expect("averaging family is valid by construction");
    (p, alpha)
}

fn gen_filtered(rng: &mut ChaCha8Rng, dim_bound: usize) -> FilteredDialgebra {
    let (a, w) = curated_assoc(rng, dim_bound);
    let n = a.dim();
    let d = Dialgebra::from_associative(&a);
    if rng.gen_bool(0.25) {
        // trivial filtration D_0 = D
        return FilteredDialgebra::new(d, vec![Subspace::full(n)]).unwrap();
    }
    let top = *w.iter().max().unwrap_or(&1);
    let mut steps = Vec::new();
    for lvl in 0..=top {
        let vs: Vec<Vec<Rat>> = (0..n)
            .filter(|&i| w[i] <= lvl)
            .map(|i| basis_vec(n, i))
            .collect();
        steps.push(Subspace::from_span(n, &vs));
    }
    FilteredDialgebra::new(d, steps).unwrap()
}

/// Generates `count` valid instances of the family with dimensions bounded
/// by `dim_bound`. Deterministic in `(family, dim_bound, seed, count)`.
pub fn generate(family: Family, dim_bound: usize, seed: u64, count: usize) -> Vec<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = dim_bound.max(1);
    (0..count)
        .map(|_| match family {
            Family::AssocAsDialgebra => Generated::Dialgebra(gen_dialgebra(&mut rng, bound)),
            Family::BimoduleMap => Generated::Poisson(gen_bimodule_map(&mut rng, bound)),
            Family::Differential => {
                let (algebra, operator) = gen_differential(&mut rng, bound);
                Generated::PoissonWithOperator {
                    algebra,
                    operator,
                    kind: OperatorKind::Differential,
                }
            }
            Family::Averaging => {
                let (algebra, operator) = gen_averaging(&mut rng, bound);
                Generated::PoissonWithOperator {
                    algebra,
                    operator,
                    kind: OperatorKind::Averaging,
                }
            }
            Family::Filtered => Generated::Filtered(gen_filtered(&mut rng, bound)),
        })
        .collect()
}

/// A deterministic corpus of valid Poisson dialgebras drawn from every
/// family (dialgebras lifted by their induced bracket).
pub fn poisson_corpus(
    dim_bound: usize,
    seed: u64,
    count_per_family: usize,
) -> Vec<PoissonDialgebra> {
    let mut out = Vec::new();
    for (i, family) in Family::all().into_iter().enumerate() {
        for g in generate(
            family,
            dim_bound,
            seed.wrapping_add(i as u64),
            count_per_family,
        ) {
            out.push(g.into_poisson_dialgebra());
        }
    }
    out
}
