//! Dense exact linear algebra over the rationals.
//!
//! Row reduction, kernels, the subspace lattice and quotient data. Subspaces
//! are always stored by their reduced-row-echelon basis, so two subspaces are
//! equal as sets exactly when their stored bases are equal — equality of
//! subspaces is plain `==`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rat::{basis_vec, vec_is_zero, vec_zero, Rat};

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec_zero(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have equal length;
    /// `cols` disambiguates the zero-row case.
    pub fn from_rows(cols: usize, rows: &[Vec<Rat>]) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, v) in r.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form together with the pivot columns. The shape is
/// preserved (zero rows stay, swept to the bottom); the row space is
/// unchanged and the result is the unique RREF of the input.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (nr, nc) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(pr) = (r..nr).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..nc {
                let t = a[(pr, j)].clone();
                a[(pr, j)] = a[(r, j)].clone();
                a[(r, j)] = t;
            }
        }
        let pv = a[(r, c)].clone();
        for j in c..nc {
            let t = &a[(r, j)] / &pv;
            a[(r, j)] = t;
        }
        for i in 0..nr {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..nc {
                let t = &a[(i, j)] - &f * &a[(r, j)];
                a[(i, j)] = t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A subspace of `K^n` in canonical form: the basis matrix is in RREF with
/// no zero rows, pivot columns strictly increasing, pivot entries 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalizes a spanning set.
    pub fn from_span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        let m = Matrix::from_rows(ambient, vectors);
        let (r, pivots) = rref(&m);
        let rows: Vec<Vec<Rat>> = (0..r.rows())
            .map(|i| r.row(i).to_vec())
            .filter(|row| !vec_is_zero(row))
            .collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(ambient, &rows),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    /// Residual of `v` after eliminating all pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch in reduce");
        let mut w = v.to_vec();
        for (ri, &pc) in self.pivots.iter().enumerate() {
            if w[pc].is_zero() {
                continue;
            }
            let f = w[pc].clone();
            for j in 0..self.ambient {
                let t = &w[j] - &f * &self.basis[(ri, j)];
                w[j] = t;
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in this basis; `None` when `v` is outside.
    /// Because the basis is in RREF, the coordinates are just the entries of
    /// `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    /// Embeds coordinates back into the ambient space.
    pub fn embed(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = vec_zero(self.ambient);
        for (i, c) in coords.iter().enumerate() {
            for j in 0..self.ambient {
                let t = &v[j] + c * &self.basis[(i, j)];
                v[j] = t;
            }
        }
        v
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_span(self.ambient, &rows))
    }

    /// Set-theoretic intersection, via the kernel of the stacked coefficient
    /// system `x·B1 - y·B2 = 0`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let (d1, d2) = (self.dim(), other.dim());
        if d1 == 0 || d2 == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let mut sys = Matrix::zeros(self.ambient, d1 + d2);
        for r in 0..self.ambient {
            for i in 0..d1 {
                sys[(r, i)] = self.basis[(i, r)].clone();
            }
            for j in 0..d2 {
                sys[(r, d1 + j)] = -other.basis[(j, r)].clone();
            }
        }
        let ker = kernel(&sys);
        let vecs: Vec<Vec<Rat>> = ker
            .basis_rows()
            .iter()
            .map(|kv| {
                let mut v = vec_zero(self.ambient);
                for i in 0..d1 {
                    if kv[i].is_zero() {
                        continue;
                    }
                    for j in 0..self.ambient {
                        let t = &v[j] + &kv[i] * &self.basis[(i, j)];
                        v[j] = t;
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_span(self.ambient, &vecs))
    }
}

/// `{v : m·v = 0}` in canonical form. Rank–nullity holds by construction:
/// `dim kernel = cols - rank(m)`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let nc = m.cols();
    let free: Vec<usize> = (0..nc).filter(|c| !pivots.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec_zero(nc);
        v[fc] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -r[(ri, fc)].clone();
        }
        vecs.push(v);
    }
    Subspace::from_span(nc, &vecs)
}

/// Projection/section pair for the quotient of `K^n` by a kernel subspace.
/// The section embeds the quotient as the span of the kernel's non-pivot
/// coordinates, so outputs are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientData {
    pub ambient_dim: usize,
    pub kernel: Subspace,
    pub quotient_dim: usize,
    /// `quotient_dim x ambient_dim`; annihilates exactly the kernel.
    pub projection: Matrix,
    /// `ambient_dim x quotient_dim`; `projection * section = identity`.
    pub section: Matrix,
}

pub fn quotient_data(ambient_dim: usize, kernel: &Subspace) -> Result<QuotientData, Error> {
    if kernel.ambient_dim() != ambient_dim {
        return Err(Error::AmbientMismatch(kernel.ambient_dim(), ambient_dim));
    }
    let comp: Vec<usize> = (0..ambient_dim)
        .filter(|c| !kernel.pivots().contains(c))
        .collect();
    let q = comp.len();
    let mut section = Matrix::zeros(ambient_dim, q);
    for (t, &c) in comp.iter().enumerate() {
        section[(c, t)] = Rat::one();
    }
    let mut projection = Matrix::zeros(q, ambient_dim);
    for i in 0..ambient_dim {
        let res = kernel.reduce(&basis_vec(ambient_dim, i));
        for (t, &c) in comp.iter().enumerate() {
            projection[(t, i)] = res[c].clone();
        }
    }
    Ok(QuotientData {
        ambient_dim,
        kernel: kernel.clone(),
        quotient_dim: q,
        projection,
        section,
    })
}

impl QuotientData {
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, coords: &[Rat]) -> Vec<Rat> {
        self.section.mul_vec(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn m(cols: usize, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Matrix::from_rows(cols, &rows)
    }

    #[test]
    fn rref_identity() {
        let (r, p) = rref(&Matrix::identity(2));
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        // [[2,4],[1,2]] -> [[1,2],[0,0]], pivots (0)
        let (r, p) = rref(&m(2, &[&[2, 4], &[1, 2]]));
        assert_eq!(r, m(2, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(3, 3);
        let (r, p) = rref(&z);
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_needs_fractions() {
        let (r, _) = rref(&m(2, &[&[2, 3], &[4, 7]]));
        assert_eq!(r, Matrix::identity(2));
        let (r, _) = rref(&m(3, &[&[2, 3, 1], &[0, 0, 0]]));
        assert_eq!(r[(0, 1)], ratio(3, 2));
    }

    #[test]
    fn kernel_examples() {
        // identity 3x3 -> zero subspace
        assert_eq!(kernel(&Matrix::identity(3)), Subspace::zero(3));
        // zero 2x2 -> full K^2
        assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
        // [[1,1]] -> span{(1,-1)}
        let k = kernel(&m(2, &[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[rat(1), rat(-1)]));
        assert_eq!(k, Subspace::from_span(2, &[vec![rat(1), rat(-1)]]));
    }

    #[test]
    fn intersect_examples() {
        let e = |n: usize, i: usize| crate::rat::basis_vec(n, i);
        // full cap S = S
        let s = Subspace::from_span(3, &[e(3, 0), e(3, 2)]);
        assert_eq!(Subspace::full(3).intersect(&s).unwrap(), s);
        // span{e1} cap span{e2} = 0 in K^2
        let s1 = Subspace::from_span(2, &[e(2, 0)]);
        let s2 = Subspace::from_span(2, &[e(2, 1)]);
        assert_eq!(s1.intersect(&s2).unwrap(), Subspace::zero(2));
        // span{e1,e2} cap span{e2,e3} = span{e2} in K^3
        let a = Subspace::from_span(3, &[e(3, 0), e(3, 1)]);
        let b = Subspace::from_span(3, &[e(3, 1), e(3, 2)]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::from_span(3, &[e(3, 1)]));
    }

    #[test]
    fn intersect_ambient_mismatch() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.intersect(&b), Err(Error::AmbientMismatch(2, 3))));
    }

    #[test]
    fn quotient_examples() {
        // zero kernel in K^2: identity projection/section
        let q = quotient_data(2, &Subspace::zero(2)).unwrap();
        assert_eq!(q.quotient_dim, 2);
        assert_eq!(q.projection, Matrix::identity(2));
        assert_eq!(q.section, Matrix::identity(2));
        // full kernel: quotient_dim 0
        let q = quotient_data(2, &Subspace::full(2)).unwrap();
        assert_eq!(q.quotient_dim, 0);
        // kernel span{e2} in K^2: quotient along e1
        let k = Subspace::from_span(2, &[crate::rat::basis_vec(2, 1)]);
        let q = quotient_data(2, &k).unwrap();
        assert_eq!(q.quotient_dim, 1);
        assert_eq!(q.project(&[rat(1), rat(0)]), vec![rat(1)]);
        assert_eq!(q.project(&[rat(0), rat(1)]), vec![rat(0)]);
        assert_eq!(q.projection.mul(&q.section), Matrix::identity(1));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_rat() -> impl Strategy<Value = Rat> {
            (-4i64..=4, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
        }

        fn arb_matrix(max: usize) -> impl Strategy<Value = Matrix> {
            (1..=max, 1..=max).prop_flat_map(|(r, c)| {
                proptest::collection::vec(arb_rat(), r * c).prop_map(move |data| {
                    let rows: Vec<Vec<Rat>> = data.chunks(c).map(|ch| ch.to_vec()).collect();
                    Matrix::from_rows(c, &rows)
                })
            })
        }

        fn arb_subspace(n: usize) -> impl Strategy<Value = Subspace> {
            proptest::collection::vec(proptest::collection::vec(arb_rat(), n), 0..=n)
                .prop_map(move |rows| Subspace::from_span(n, &rows))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn rref_is_idempotent(m in arb_matrix(5)) {
                let (r1, p1) = rref(&m);
                let (r2, p2) = rref(&r1);
                prop_assert_eq!(r1, r2);
                prop_assert_eq!(p1, p2);
            }

            #[test]
            fn kernel_vectors_are_killed(m in arb_matrix(5)) {
                let k = kernel(&m);
                let (_, pivots) = rref(&m);
                prop_assert_eq!(k.dim(), m.cols() - pivots.len());
                for v in k.basis_rows() {
                    prop_assert!(crate::rat::vec_is_zero(&m.mul_vec(&v)));
                }
            }

            #[test]
            fn intersect_lattice_laws(a in arb_subspace(6), b in arb_subspace(6), c in arb_subspace(6)) {
                let ab = a.intersect(&b).unwrap();
                prop_assert_eq!(&ab, &b.intersect(&a).unwrap());
                let abc1 = ab.intersect(&c).unwrap();
                let abc2 = a.intersect(&b.intersect(&c).unwrap()).unwrap();
                prop_assert_eq!(&abc1, &abc2);
                prop_assert!(a.contains_subspace(&ab));
                prop_assert!(b.contains_subspace(&ab));
                // dim(A ∩ B) >= dim A + dim B - n
                prop_assert!(ab.dim() + 6 >= a.dim() + b.dim());
            }

            #[test]
            fn quotient_residual_in_kernel(s in arb_subspace(5),
                                           v in proptest::collection::vec(arb_rat(), 5)) {
                let q = quotient_data(5, &s).unwrap();
                let lifted = q.lift(&q.project(&v));
                let resid = crate::rat::vec_sub(&v, &lifted);
                prop_assert!(s.contains(&resid));
                prop_assert_eq!(q.projection.mul(&q.section), Matrix::identity(q.quotient_dim));
            }
        }
    }
}
