//! Structure-constant tensors: bilinear products, rectangular module actions,
//! and trilinear maps.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rat::{vec_zero, Rat};
use num_traits::Zero;

/// Rank-3 structure-constant tensor `c[i][j][k]` over a single space:
/// `e_i ∘ e_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearMap {
    dim: usize,
    c: Vec<Rat>,
}

impl BilinearMap {
    pub fn zeros(dim: usize) -> Self {
        BilinearMap {
            dim,
            c: vec_zero(dim * dim * dim),
        }
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Rat)]) -> Result<Self, Error> {
        let mut b = BilinearMap::zeros(dim);
        for &(i, j, k, ref v) in entries {
            for (ix, name) in [(i, "i"), (j, "j"), (k, "k")] {
                if ix >= dim {
                    return Err(Error::IndexRange {
                        path: name.to_string(),
                        index: ix,
                        dim,
                    });
                }
            }
            *b.get_mut(i, j, k) = v.clone();
        }
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Rat {
        &mut self.c[(i * self.dim + j) * self.dim + k]
    }

    /// `e_i ∘ e_j` as an ambient vector.
    pub fn eval_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].to_vec()
    }

    /// Bilinear extension to arbitrary vectors. Panics on length mismatch;
    /// see [`BilinearMap::evaluate`] for the checked entry point.
    pub fn eval(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        assert_eq!(u.len(), self.dim, "left operand length mismatch");
        assert_eq!(v.len(), self.dim, "right operand length mismatch");
        let mut out = vec_zero(self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let s = &u[i] * &v[j];
                let base = (i * self.dim + j) * self.dim;
                for k in 0..self.dim {
                    if !self.c[base + k].is_zero() {
                        let t = &out[k] + &s * &self.c[base + k];
                        out[k] = t;
                    }
                }
            }
        }
        out
    }

    /// Checked bilinear evaluation.
    pub fn evaluate(&self, u: &[Rat], v: &[Rat]) -> Result<Vec<Rat>, Error> {
        if u.len() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        if v.len() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(self.eval(u, v))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Sparse entry list in deterministic (i, j, k) order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rat)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Rectangular bilinear action `lhs ⊗ rhs → out`, stored as
/// `c[i][j][k]`: `a_i · b_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionMap {
    lhs: usize,
    rhs: usize,
    out: usize,
    c: Vec<Rat>,
}

impl ActionMap {
    pub fn zeros(lhs: usize, rhs: usize, out: usize) -> Self {
        ActionMap {
            lhs,
            rhs,
            out,
            c: vec_zero(lhs * rhs * out),
        }
    }

    pub fn from_entries(
        lhs: usize,
        rhs: usize,
        out: usize,
        entries: &[(usize, usize, usize, Rat)],
    ) -> Result<Self, Error> {
        let mut a = ActionMap::zeros(lhs, rhs, out);
        for &(i, j, k, ref v) in entries {
            for (ix, dim, name) in [(i, lhs, "i"), (j, rhs, "j"), (k, out, "k")] {
                if ix >= dim {
                    return Err(Error::IndexRange {
                        path: name.to_string(),
                        index: ix,
                        dim,
                    });
                }
            }
            *a.get_mut(i, j, k) = v.clone();
        }
        Ok(a)
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.lhs, self.rhs, self.out)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[(i * self.rhs + j) * self.out + k]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Rat {
        &mut self.c[(i * self.rhs + j) * self.out + k]
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        let start = (i * self.rhs + j) * self.out;
        self.c[start..start + self.out].to_vec()
    }

    pub fn eval(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        assert_eq!(u.len(), self.lhs, "left operand length mismatch");
        assert_eq!(v.len(), self.rhs, "right operand length mismatch");
        let mut out = vec_zero(self.out);
        for i in 0..self.lhs {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.rhs {
                if v[j].is_zero() {
                    continue;
                }
                let s = &u[i] * &v[j];
                let base = (i * self.rhs + j) * self.out;
                for k in 0..self.out {
                    if !self.c[base + k].is_zero() {
                        let t = &out[k] + &s * &self.c[base + k];
                        out[k] = t;
                    }
                }
            }
        }
        out
    }

    /// The action with swapped operands and negated values; used to derive
    /// the `(1,0)` placement of a graded-antisymmetric bracket from `(0,1)`.
    pub fn negated_flip(&self) -> ActionMap {
        let mut out = ActionMap::zeros(self.rhs, self.lhs, self.out);
        for i in 0..self.lhs {
            for j in 0..self.rhs {
                for k in 0..self.out {
                    *out.get_mut(j, i, k) = -self.get(i, j, k);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Rat)> {
        let mut out = Vec::new();
        for i in 0..self.lhs {
            for j in 0..self.rhs {
                for k in 0..self.out {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Trilinear map `V ⊗ V ⊗ V → W` on basis triples of a `dim_in`-dimensional
/// space with values in a `dim_out`-dimensional one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrilinearMap {
    dim_in: usize,
    dim_out: usize,
    c: Vec<Rat>,
}

impl TrilinearMap {
    pub fn zeros(dim_in: usize, dim_out: usize) -> Self {
        TrilinearMap {
            dim_in,
            dim_out,
            c: vec_zero(dim_in * dim_in * dim_in * dim_out),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_in, self.dim_out)
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Rat {
        &self.c[((i * self.dim_in + j) * self.dim_in + k) * self.dim_out + l]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize, l: usize) -> &mut Rat {
        &mut self.c[((i * self.dim_in + j) * self.dim_in + k) * self.dim_out + l]
    }

    pub fn set_value(&mut self, i: usize, j: usize, k: usize, value: &[Rat]) {
        assert_eq!(value.len(), self.dim_out);
        for (l, v) in value.iter().enumerate() {
            *self.get_mut(i, j, k, l) = v.clone();
        }
    }

    pub fn eval_basis(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let start = ((i * self.dim_in + j) * self.dim_in + k) * self.dim_out;
        self.c[start..start + self.dim_out].to_vec()
    }

    pub fn eval(&self, u: &[Rat], v: &[Rat], w: &[Rat]) -> Vec<Rat> {
        assert_eq!(u.len(), self.dim_in);
        assert_eq!(v.len(), self.dim_in);
        assert_eq!(w.len(), self.dim_in);
        let mut out = vec_zero(self.dim_out);
        for i in 0..self.dim_in {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim_in {
                if v[j].is_zero() {
                    continue;
                }
                let s = &u[i] * &v[j];
                for k in 0..self.dim_in {
                    if w[k].is_zero() {
                        continue;
                    }
                    let t = &s * &w[k];
                    let cell = self.eval_basis(i, j, k);
                    for l in 0..self.dim_out {
                        if !cell[l].is_zero() {
                            let x = &out[l] + &t * &cell[l];
                            out[l] = x;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, Rat)> {
        let mut out = Vec::new();
        for i in 0..self.dim_in {
            for j in 0..self.dim_in {
                for k in 0..self.dim_in {
                    for l in 0..self.dim_out {
                        let v = self.get(i, j, k, l);
                        if !v.is_zero() {
                            out.push((i, j, k, l, v.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}
