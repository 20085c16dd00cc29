//! Named ground-truth fixtures used across tests, the generator families and
//! the acceptance suite.

use crate::algebra::{
    AssociativeAlgebra, Dialgebra, LinearOperator, PoissonAlgebra, PoissonDialgebra,
};
use crate::linalg::Matrix;
use crate::rat::{rat, Rat};
use crate::tensor::BilinearMap;

/// N2: dim 2 with basis `x, y` and the single left product `x ⊣ x = y`.
pub fn n2() -> Dialgebra {
    let left = BilinearMap::from_entries(2, &[(0, 0, 1, rat(1))]).unwrap();
    Dialgebra::new(left, BilinearMap::zeros(2)).unwrap()
}

/// T3: strictly upper triangular fixture, basis `a, b, c` with `a·b = c`,
/// viewed as a dialgebra with `⊣ = ⊢`.
pub fn t3() -> Dialgebra {
    let p = BilinearMap::from_entries(3, &[(0, 1, 2, rat(1))]).unwrap();
    Dialgebra::new(p.clone(), p).unwrap()
}

/// N2 with its induced Leibniz bracket `[x,x] = y` as a Poisson dialgebra.
pub fn induced_n2_poisson() -> PoissonDialgebra {
    let d = n2();
    let b = BilinearMap::from_entries(2, &[(0, 0, 1, rat(1))]).unwrap();
    PoissonDialgebra::new(d.left().clone(), d.right().clone(), b).unwrap()
}

/// Truncated polynomial algebra `span{t, t^2, ..., t^k}` with
/// `t^i · t^j = t^{i+j}` (zero past `t^k`). Non-unital and commutative.
pub fn truncated_polynomial(k: usize) -> AssociativeAlgebra {
    let mut p = BilinearMap::zeros(k);
    for i in 0..k {
        for j in 0..k {
            if i + j + 2 <= k {
                *p.get_mut(i, j, i + j + 1) = rat(1);
            }
        }
    }
    AssociativeAlgebra::new(p)
}

/// Strictly upper triangular `n x n` matrices, basis `E_{rc}` for `r < c`
/// ordered lexicographically.
pub fn strictly_upper_triangular(n: usize) -> AssociativeAlgebra {
    let mut cells = Vec::new();
    for r in 0..n {
        for c in (r + 1)..n {
            cells.push((r, c));
        }
    }
    let dim = cells.len();
    let index = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).unwrap();
    let mut p = BilinearMap::zeros(dim);
    for (i, &(r1, c1)) in cells.iter().enumerate() {
        for (j, &(r2, c2)) in cells.iter().enumerate() {
            if c1 == r2 {
                *p.get_mut(i, j, index(r1, c2)) = rat(1);
            }
        }
    }
    AssociativeAlgebra::new(p)
}

/// Superdiagonal level of each basis element of
/// [`strictly_upper_triangular`]`(n)`, in basis order. Products add levels,
/// so these weights define a filtration.
pub fn upper_triangular_levels(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for r in 0..n {
        for c in (r + 1)..n {
            out.push(c - r);
        }
    }
    out
}

/// Non-unital truncated enveloping algebra of the Heisenberg Lie algebra:
/// PBW monomials `x^a y^b z^c` with `1 <= a+b+c <= 2` and `[x,y] = z`.
/// Dimension 9. Commutators drop the PBW weight, so the weight filtration
/// has commutative associated graded with a nonzero degree -1 bracket.
pub fn heisenberg_truncated() -> AssociativeAlgebra {
    let (alg, _) = heisenberg_with_weights();
    alg
}

/// Heisenberg truncation together with the PBW weight of each basis element.
pub fn heisenberg_with_weights() -> (AssociativeAlgebra, Vec<usize>) {
    let w = 2usize;
    let mut mons: Vec<(usize, usize, usize)> = Vec::new();
    for a in 0..=w {
        for b in 0..=w {
            for c in 0..=w {
                let s = a + b + c;
                if s >= 1 && s <= w {
                    mons.push((a, b, c));
                }
            }
        }
    }
    mons.sort_by_key(|&(a, b, c)| (a + b + c, a, b, c));
    let idx = |m: (usize, usize, usize)| mons.iter().position(|&x| x == m).unwrap();
    let dim = mons.len();
    let mut p = BilinearMap::zeros(dim);
    let binom = |n: usize, k: usize| -> i64 {
        let mut v = 1i64;
        for t in 0..k {
            v = v * (n - t) as i64 / (t + 1) as i64;
        }
        v
    };
    let fact = |k: usize| -> i64 { (1..=k as i64).product::<i64>().max(1) };
    for (i, &(a1, b1, c1)) in mons.iter().enumerate() {
        for (j, &(a2, b2, c2)) in mons.iter().enumerate() {
            // x^{a1} y^{b1} z^{c1} · x^{a2} y^{b2} z^{c2}: straighten y^{b1} x^{a2}
            for k in 0..=b1.min(a2) {
                let coeff =
                    (if k % 2 == 0 { 1 } else { -1 }) * fact(k) * binom(b1, k) * binom(a2, k);
                let m = (a1 + a2 - k, b1 + b2 - k, c1 + c2 + k);
                if m.0 + m.1 + m.2 <= w {
                    let t = p.get(i, j, idx(m)) + rat(coeff);
                    *p.get_mut(i, j, idx(m)) = t;
                }
            }
        }
    }
    let weights = mons.iter().map(|&(a, b, c)| a + b + c).collect();
    (AssociativeAlgebra::new(p), weights)
}

/// Pointwise product on `K^n` (`e_i · e_i = e_i`). Commutative and unital.
pub fn pointwise(n: usize) -> AssociativeAlgebra {
    let mut p = BilinearMap::zeros(n);
    for i in 0..n {
        *p.get_mut(i, i, i) = rat(1);
    }
    AssociativeAlgebra::new(p)
}

/// `K^2` pointwise with the zero bracket, as a Poisson algebra.
pub fn k2_pointwise_poisson() -> PoissonAlgebra {
    PoissonAlgebra::new(pointwise(2).product, BilinearMap::zeros(2)).unwrap()
}

/// Zero product with the solvable bracket `[a,b] = b`, `[b,a] = -b`.
pub fn solvable2_poisson() -> PoissonAlgebra {
    let b = BilinearMap::from_entries(2, &[(0, 1, 1, rat(1)), (1, 0, 1, rat(-1))]).unwrap();
    PoissonAlgebra::new(BilinearMap::zeros(2), b).unwrap()
}

/// T3 product with its commutator bracket `[a,b] = c = -[b,a]`.
pub fn t3_commutator_poisson() -> PoissonAlgebra {
    let p = t3().left().clone();
    let n = p.dim();
    let mut b = BilinearMap::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *b.get_mut(i, j, k) = p.get(i, j, k) - p.get(j, i, k);
            }
        }
    }
    PoissonAlgebra::new(p, b).unwrap()
}

/// Coordinate projection `α(m) = (m1, 0)` on `K^2`.
pub fn alpha_projection() -> LinearOperator {
    let mut m = Matrix::zeros(2, 2);
    m[(0, 0)] = rat(1);
    LinearOperator::new(m).unwrap()
}

/// Diagonal embedding `α(m) = (m1, m1)` on `K^2`.
pub fn alpha_diagonal() -> LinearOperator {
    let mut m = Matrix::zeros(2, 2);
    m[(0, 0)] = rat(1);
    m[(1, 0)] = rat(1);
    LinearOperator::new(m).unwrap()
}

/// `span{t, t^2}` with zero bracket and the square-zero differential
/// `d(t) = t^2`, `d(t^2) = 0`.
pub fn differential_truncpoly2() -> (PoissonAlgebra, LinearOperator) {
    let a = truncated_polynomial(2);
    let p = PoissonAlgebra::new(a.product, BilinearMap::zeros(2)).unwrap();
    let mut m = Matrix::zeros(2, 2);
    m[(1, 0)] = rat(1);
    (p, LinearOperator::new(m).unwrap())
}

/// Hemisemidirect-product right Leibniz algebra on `g ⋉ M` with
/// `g = span{e,f}`, `[e,f] = f`, and `M = K²` acted on from the right by
/// `E = diag(0,1)` and `F = [[0,1],[0,0]]` (so `F = FE - EF`). Basis
/// `e, f, m1, m2`. Its antisymmetrization has a nonvanishing Jacobiator.
pub fn hemi4_leibniz() -> crate::algebra::LeibnizAlgebra {
    let b = BilinearMap::from_entries(
        4,
        &[
            (0, 1, 1, rat(1)),
            (1, 0, 1, rat(-1)),
            (3, 0, 3, rat(1)),
            (3, 1, 2, rat(1)),
        ],
    )
    .unwrap();
    crate::algebra::LeibnizAlgebra::new(b)
}

/// The hemi4 bracket with zero products, as a Poisson dialgebra (any
/// Leibniz bracket with zero products satisfies all compatibilities).
pub fn hemi4_poisson() -> PoissonDialgebra {
    PoissonDialgebra::new(
        BilinearMap::zeros(4),
        BilinearMap::zeros(4),
        hemi4_leibniz().bracket,
    )
    .unwrap()
}

/// Direct sum of two associative algebras (block tensors).
pub fn direct_sum(a: &AssociativeAlgebra, b: &AssociativeAlgebra) -> AssociativeAlgebra {
    let (da, db) = (a.dim(), b.dim());
    let mut p = BilinearMap::zeros(da + db);
    for (i, j, k, v) in a.product.entries() {
        *p.get_mut(i, j, k) = v;
    }
    for (i, j, k, v) in b.product.entries() {
        *p.get_mut(da + i, da + j, da + k) = v;
    }
    AssociativeAlgebra::new(p)
}

/// Commutator bracket of an associative product.
pub fn commutator(p: &BilinearMap) -> BilinearMap {
    let n = p.dim();
    let mut b = BilinearMap::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *b.get_mut(i, j, k) = p.get(i, j, k) - p.get(j, i, k);
            }
        }
    }
    b
}

/// Applies a change of basis `e'_i = Σ_r g[r][i] e_r` to a structure-constant
/// tensor: `c'[i][j][k] = Σ c[r][s][t] g[r][i] g[s][j] gInv[k][t]`.
pub fn change_of_basis(c: &BilinearMap, g: &Matrix, g_inv: &Matrix) -> BilinearMap {
    let n = c.dim();
    assert!(g.rows() == n && g.cols() == n && g_inv.rows() == n && g_inv.cols() == n);
    let mut out = BilinearMap::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let gi: Vec<Rat> = (0..n).map(|r| g[(r, i)].clone()).collect();
            let gj: Vec<Rat> = (0..n).map(|s| g[(s, j)].clone()).collect();
            let prod = c.eval(&gi, &gj);
            let coords = g_inv.mul_vec(&prod);
            for k in 0..n {
                *out.get_mut(i, j, k) = coords[k].clone();
            }
        }
    }
    out
}
