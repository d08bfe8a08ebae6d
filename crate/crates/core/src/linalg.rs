//! Dense exact linear algebra over any `Scalar` field.
//!
//! Row reduction assumes every nonzero pivot is invertible, which holds for
//! all field scalars used here.  Subspaces are stored as reduced row-echelon
//! bases so that equality and membership tests are canonical.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    /// Zero matrix; `ctx` supplies the ring context.
    pub fn zero(rows: usize, cols: usize, ctx: &S) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, ctx: &S) -> Self {
        let mut m = Matrix::zero(n, n, ctx);
        for i in 0..n {
            *m.at_mut(i, i) = ctx.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>, ctx: &S) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        if data.is_empty() {
            return Matrix::zero(0, 0, ctx);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Matrix<S> {
        let ctx = self.context();
        let mut out = Matrix::zero(self.cols, self.rows, &ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    fn context(&self) -> S {
        self.data.first().cloned().expect("empty matrix has no context")
    }

    pub fn matmul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let ctx = self.context();
        let mut out = Matrix::zero(self.rows, other.cols, &ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.mul(other.at(k, j));
                    *out.at_mut(i, j) = out.at(i, j).add(&t);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.at(i, 0).zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    /// In-place Gauss-Jordan elimination; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.at(r, c).inv().expect("pivot must be invertible");
            for j in 0..self.cols {
                *self.at_mut(r, j) = self.at(r, j).mul(&inv);
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in 0..self.cols {
                    let t = f.mul(self.at(r, j));
                    *self.at_mut(i, j) = self.at(i, j).sub(&t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let ctx = self.context();
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![ctx.zero(); self.cols];
            v[free] = ctx.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.at(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = rhs`, if consistent.
    pub fn solve(&self, rhs: &[S]) -> Option<Vec<S>> {
        assert_eq!(self.rows, rhs.len(), "dimension mismatch");
        let ctx = self.context();
        let mut aug = Matrix::zero(self.rows, self.cols + 1, &ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = rhs[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![ctx.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix<S>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let ctx = self.context();
        let mut aug = Matrix::zero(n, 2 * n, &ctx);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = ctx.one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).any(|&c| c >= n) {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix::zero(n, n, &ctx);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let ctx = self.context();
        let mut m = self.clone();
        let n = m.rows;
        let mut det = ctx.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return ctx.zero();
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = det.neg();
            }
            det = det.mul(m.at(c, c));
            let inv = m.at(c, c).inv().expect("pivot must be invertible");
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).mul(&inv);
                for j in c..n {
                    let t = f.mul(m.at(c, j));
                    *m.at_mut(i, j) = m.at(i, j).sub(&t);
                }
            }
        }
        det
    }
}

/// A linear subspace of S^n, stored with a canonical (reduced row-echelon)
/// basis so equality is structural.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<S: Scalar> {
    ambient: usize,
    /// Canonical basis vectors, one per row, in echelon order.
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn span(vectors: &[Vec<S>], ambient: usize, ctx: &S) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "ambient dimension mismatch");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = Matrix::from_rows(vectors.to_vec(), ctx);
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|i| m.row(i)).collect();
        Subspace { ambient, basis }
    }

    pub fn full(ambient: usize, ctx: &S) -> Self {
        let id = Matrix::identity(ambient, ctx);
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| id.row(i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &[S], ctx: &S) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        if v.iter().all(|c| c.is_zero()) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        let mut m = Matrix::from_rows(rows, ctx);
        m.rref().len() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace<S>, ctx: &S) -> bool {
        other.basis.iter().all(|v| self.contains(v, ctx))
    }

    pub fn sum(&self, other: &Subspace<S>, ctx: &S) -> Subspace<S> {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.clone());
        Subspace::span(&rows, self.ambient, ctx)
    }

    /// Intersection, computed from the kernel of the stacked basis matrix.
    pub fn intersect(&self, other: &Subspace<S>, ctx: &S) -> Subspace<S> {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // columns: coefficients on self.basis, then on other.basis
        let k = self.dim() + other.dim();
        let mut m = Matrix::zero(self.ambient, k, ctx);
        for (j, v) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                *m.at_mut(i, j) = v[i].clone();
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                *m.at_mut(i, self.dim() + j) = v[i].neg();
            }
        }
        let combos = m.kernel();
        let vectors: Vec<Vec<S>> = combos
            .iter()
            .map(|c| {
                let mut v = vec![ctx.zero(); self.ambient];
                for (j, b) in self.basis.iter().enumerate() {
                    for i in 0..self.ambient {
                        v[i] = v[i].add(&c[j].mul(&b[i]));
                    }
                }
                v
            })
            .collect();
        Subspace::span(&vectors, self.ambient, ctx)
    }
}

/// Image of a subspace under a linear map given by `f` on vectors.
pub fn map_subspace<S: Scalar>(
    space: &Subspace<S>,
    ambient_out: usize,
    ctx: &S,
    mut f: impl FnMut(&[S]) -> Vec<S>,
) -> Subspace<S> {
    let images: Vec<Vec<S>> = space.basis().iter().map(|v| f(v)).collect();
    Subspace::span(&images, ambient_out, ctx)
}

pub fn vec_add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale<S: Scalar>(c: &S, a: &[S]) -> Vec<S> {
    a.iter().map(|x| c.mul(x)).collect()
}

pub fn vec_is_zero<S: Scalar>(a: &[S]) -> bool {
    a.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::{FieldDescriptor, FieldOps};

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<crate::fieldcore::FieldScalar> {
        let q = FieldDescriptor::rationals();
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|n| q.int(n)).collect())
            .collect();
        Matrix::from_rows(rows, &q.one())
    }

    #[test]
    fn rref_and_rank() {
        let m = qm(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solve_and_kernel() {
        let q = FieldDescriptor::rationals();
        let m = qm(vec![vec![1, 2], vec![3, 4]]);
        let x = m.solve(&[q.int(5), q.int(11)]).unwrap();
        assert_eq!(x, vec![q.int(1), q.int(2)]);
        let singular = qm(vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.solve(&[q.int(1), q.int(0)]).is_none());
        let ker = singular.kernel();
        assert_eq!(ker.len(), 1);
        assert!(vec_is_zero(&singular.apply(&ker[0])));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = qm(vec![vec![2, 1, 0], vec![1, 1, 1], vec![0, 3, 1]]);
        let inv = m.inverse().unwrap();
        let q = FieldDescriptor::rationals();
        assert_eq!(m.matmul(&inv), Matrix::identity(3, &q.one()));
        let s = qm(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(s.inverse().unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn det_values() {
        let q = FieldDescriptor::rationals();
        assert_eq!(qm(vec![vec![1, 2], vec![3, 4]]).det(), q.int(-2));
        assert_eq!(qm(vec![vec![1, 2], vec![2, 4]]).det(), q.int(0));
    }

    #[test]
    fn subspace_ops() {
        let q = FieldDescriptor::rationals();
        let one = q.one();
        let e = |i: usize| {
            let mut v = vec![FieldOps::zero(&q); 3];
            v[i] = one.clone();
            v
        };
        let xy = Subspace::span(&[e(0), e(1)], 3, &one);
        let yz = Subspace::span(&[e(1), e(2)], 3, &one);
        assert_eq!(xy.dim(), 2);
        assert!(xy.contains(&vec_add(&e(0), &e(1)), &one));
        assert!(!xy.contains(&e(2), &one));
        let meet = xy.intersect(&yz, &one);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&e(1), &one));
        let join = xy.sum(&yz, &one);
        assert_eq!(join.dim(), 3);
        // canonical bases make equality structural
        let xy2 = Subspace::span(&[vec_add(&e(0), &e(1)), e(1)], 3, &one);
        assert_eq!(xy, xy2);
    }

    #[test]
    fn finite_field_rref() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let rows = vec![
            vec![f2.one(), f2.one(), FieldOps::zero(&f2)],
            vec![FieldOps::zero(&f2), f2.one(), f2.one()],
            vec![f2.one(), FieldOps::zero(&f2), f2.one()],
        ];
        let m = Matrix::from_rows(rows, &f2.one());
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel().len(), 1);
    }
}
