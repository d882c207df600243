//! Exact linear algebra over a [`FieldSpec`].
//!
//! [`Matrix`] is dense row-major. [`Subspace`] stores the reduced row echelon
//! basis of a subspace of `K^n`, which is a canonical form: two subspaces are
//! equal iff their `Subspace` values are equal.
//!
//! Tensor coordinates follow one convention everywhere in this crate:
//! `e_i (x) e_j` of `K^a (x) K^b` is coordinate `i * b + j` of `K^{ab}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// Operand shapes do not compose.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Rows of unequal length were given to a constructor.
    RaggedRows,
    /// A square matrix had no inverse.
    Singular,
    /// A vector or subspace does not live in the expected ambient space.
    AmbientMismatch { expected: usize, got: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::ShapeMismatch { left, right } => {
                write!(
                    f,
                    "shape mismatch: {}x{} vs {}x{}",
                    left.0, left.1, right.0, right.1
                )
            }
            LinalgError::RaggedRows => write!(f, "rows have unequal lengths"),
            LinalgError::Singular => write!(f, "matrix is singular"),
            LinalgError::AmbientMismatch { expected, got } => {
                write!(
                    f,
                    "ambient dimension mismatch: expected {expected}, got {got}"
                )
            }
        }
    }
}

impl core::error::Error for LinalgError {}

/// Dense matrix over the field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(k: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![k.zero(); rows * cols],
        }
    }

    pub fn identity(k: &FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(k, n, n);
        for i in 0..n {
            m.set(i, i, k.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::RaggedRows);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, k: &FieldSpec, other: &Matrix) -> Result<Matrix, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| k.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, k: &FieldSpec, other: &Matrix) -> Result<Matrix, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| k.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, k: &FieldSpec, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| k.mul(a, s)).collect(),
        }
    }

    pub fn mul(&self, k: &FieldSpec, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zero(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = k.mul(a, other.at(l, j));
                    let cur = k.add(out.at(i, j), &t);
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `A v`.
    pub fn apply(&self, k: &FieldSpec, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::AmbientMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = k.zero();
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        acc = k.add(&acc, &k.mul(self.at(i, j), vj));
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product in the crate tensor convention: the result acts on
    /// `K^{ac}` with `(A (x) B)(e_i (x) e_j) = A e_i (x) B e_j`.
    pub fn kronecker(&self, k: &FieldSpec, other: &Matrix) -> Matrix {
        let (a, b) = (self, other);
        Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, |i, j| {
            let (i1, i2) = (i / b.rows, i % b.rows);
            let (j1, j2) = (j / b.cols, j % b.cols);
            k.mul(a.at(i1, j1), b.at(i2, j2))
        })
    }

    /// Entrywise application of the field involution.
    pub fn conj_entries(&self, k: &FieldSpec) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| k.conj(a)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.at(i, j);
                    if i == j {
                        e.as_rational().map_or(false, num_traits::One::is_one)
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn rank(&self, k: &FieldSpec) -> usize {
        let mut rows = self.row_vecs();
        rref(k, &mut rows).len()
    }

    pub fn trace(&self, k: &FieldSpec) -> Scalar {
        let mut t = k.zero();
        for i in 0..self.rows.min(self.cols) {
            t = k.add(&t, self.at(i, i));
        }
        t
    }

    /// Inverse by Gauss-Jordan on the augmented matrix.
    pub fn inverse(&self, k: &FieldSpec) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (self.rows, self.cols),
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { k.one() } else { k.zero() }));
                row
            })
            .collect();
        let pivots = rref(k, &mut aug);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| aug[i][n + j].clone()))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Matrix::from_fn(
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.at(i, j).clone()
                } else {
                    other.at(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }
}

/// In-place reduced row echelon form. Scales pivots to 1, eliminates above
/// and below, drops zero rows, leaves rows ordered by pivot column. Returns
/// the pivot columns.
pub fn rref(k: &FieldSpec, rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(src) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, src);
        let inv = k.inv(&rows[r][col]).expect("pivot entry is nonzero");
        for e in rows[r].iter_mut() {
            *e = k.mul(e, &inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in 0..ncols {
                    let t = k.mul(&factor, &rows[r][j]);
                    rows[i][j] = k.sub(&rows[i][j], &t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Subspace of `K^n` in canonical (RREF basis) form.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in K^{})", self.dim(), self.ambient)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: vec![],
            pivots: vec![],
        }
    }

    pub fn full(k: &FieldSpec, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![k.zero(); ambient];
                v[i] = k.one();
                v
            })
            .collect();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalize a spanning set.
    pub fn from_spanning(
        k: &FieldSpec,
        ambient: usize,
        vecs: Vec<Vec<Scalar>>,
    ) -> Result<Self, LinalgError> {
        if let Some(v) = vecs.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::AmbientMismatch {
                expected: ambient,
                got: v.len(),
            });
        }
        let mut basis = vecs;
        let pivots = rref(k, &mut basis);
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self, k: &FieldSpec) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::zero(k, 0, self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).expect("canonical basis rows are uniform")
    }

    /// Residue of `v` after eliminating every pivot coordinate; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, k: &FieldSpec, v: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let factor = r[p].clone();
            for (rj, bj) in r.iter_mut().zip(row) {
                let t = k.mul(&factor, bj);
                *rj = k.sub(rj, &t);
            }
        }
        r
    }

    pub fn contains(&self, k: &FieldSpec, v: &[Scalar]) -> bool {
        self.reduce(k, v).iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, k: &FieldSpec, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(k, v))
    }

    pub fn sum(&self, k: &FieldSpec, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(k, self.ambient, vecs)
    }

    /// Intersection via the stacked-kernel method: coefficient pairs `(a, b)`
    /// with `a^T B1 = b^T B2` are the left kernel of `[B1; -B2]`, and the
    /// intersection is spanned by the corresponding combinations `a^T B1`.
    pub fn intersect(&self, k: &FieldSpec, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let (r1, r2) = (self.dim(), other.dim());
        if r1 == 0 || r2 == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let mut stacked = self.basis_matrix(k);
        let negated = other.basis_matrix(k).scale(k, &k.neg(&k.one()));
        stacked = stacked.vstack(&negated)?;
        let left_kernel = kernel(k, &stacked.transpose());
        let vecs = left_kernel
            .basis()
            .iter()
            .map(|c| {
                let mut v = vec![k.zero(); self.ambient];
                for (i, row) in self.basis.iter().enumerate() {
                    if c[i].is_zero() {
                        continue;
                    }
                    for (vj, bj) in v.iter_mut().zip(row) {
                        *vj = k.add(vj, &k.mul(&c[i], bj));
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(k, self.ambient, vecs)
    }

    /// Matrix `C` whose right kernel is exactly this subspace: the rows span
    /// the annihilator under the standard bilinear form, and the double
    /// annihilator returns the subspace (dimension count over any field).
    pub fn constraints(&self, k: &FieldSpec) -> Matrix {
        if self.dim() == 0 {
            return Matrix::identity(k, self.ambient);
        }
        let ann = kernel(k, &self.basis_matrix(k));
        ann.basis_matrix(k)
    }
}

/// Right kernel `{v : A v = 0}` as a canonical subspace of `K^cols`.
pub fn kernel(k: &FieldSpec, a: &Matrix) -> Subspace {
    let n = a.cols();
    let mut rows = a.row_vecs();
    let pivots = rref(k, &mut rows);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::with_capacity(n - pivots.len());
    for f in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![k.zero(); n];
        v[f] = k.one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = k.neg(&row[f]);
        }
        vecs.push(v);
    }
    Subspace::from_spanning(k, n, vecs).expect("kernel vectors have ambient length")
}

/// Preimage `{v : A v in target}` via the target's constraint matrix.
pub fn preimage(k: &FieldSpec, a: &Matrix, target: &Subspace) -> Result<Subspace, LinalgError> {
    if target.ambient() != a.rows() {
        return Err(LinalgError::AmbientMismatch {
            expected: a.rows(),
            got: target.ambient(),
        });
    }
    if target.dim() == target.ambient() {
        return Ok(Subspace::full(k, a.cols()));
    }
    let c = target.constraints(k);
    Ok(kernel(k, &c.mul(k, a)?))
}

/// One solution of `A x = b`, or None when the system is inconsistent.
pub fn solve(k: &FieldSpec, a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::AmbientMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    let mut aug: Vec<Vec<Scalar>> = (0..a.rows())
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(k, &mut aug);
    if pivots.last() == Some(&a.cols()) {
        return Ok(None);
    }
    let mut x = vec![k.zero(); a.cols()];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[a.cols()].clone();
    }
    Ok(Some(x))
}

/// `U (x) K^n` inside `K^{an}` for `U` inside `K^a`.
pub fn tensor_right(k: &FieldSpec, u: &Subspace, n: usize) -> Subspace {
    let ambient = u.ambient() * n;
    let vecs = u
        .basis()
        .iter()
        .flat_map(|v| {
            (0..n).map(move |j| {
                let mut w = vec![k.zero(); ambient];
                for (i, vi) in v.iter().enumerate() {
                    w[i * n + j] = vi.clone();
                }
                w
            })
        })
        .collect();
    Subspace::from_spanning(k, ambient, vecs).expect("tensor vectors have ambient length")
}

/// `K^n (x) U` inside `K^{na}` for `U` inside `K^a`.
pub fn tensor_left(k: &FieldSpec, n: usize, u: &Subspace) -> Subspace {
    let a = u.ambient();
    let ambient = n * a;
    let vecs = u
        .basis()
        .iter()
        .flat_map(|v| {
            (0..n).map(move |i| {
                let mut w = vec![k.zero(); ambient];
                for (j, vj) in v.iter().enumerate() {
                    w[i * a + j] = vj.clone();
                }
                w
            })
        })
        .collect();
    Subspace::from_spanning(k, ambient, vecs).expect("tensor vectors have ambient length")
}

/// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier
/// recurrence, returned as monic coefficients [c_0, ..., c_{n-1}, 1].
pub fn char_poly(k: &FieldSpec, a: &Matrix) -> Result<Vec<Scalar>, LinalgError> {
    if a.rows() != a.cols() {
        return Err(LinalgError::ShapeMismatch {
            left: (a.rows(), a.cols()),
            right: (a.cols(), a.rows()),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![k.zero(); n + 1];
    coeffs[n] = k.one();
    // M_1 = A, c_{n-1} = -tr M_1; M_{j+1} = A (M_j + c_{n-j} I)
    let mut m = a.clone();
    for j in 1..=n {
        let c = k
            .div(&k.neg(&m.trace(k)), &k.from_int(j as i64))
            .expect("j nonzero");
        coeffs[n - j] = c.clone();
        if j < n {
            let shifted = m.add(k, &Matrix::identity(k, n).scale(k, &c))?;
            m = a.mul(k, &shifted)?;
        }
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use alloc::vec::Vec;
    use num_bigint::BigInt;

    fn qq() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn v(k: &FieldSpec, entries: &[i64]) -> Vec<Scalar> {
        entries.iter().map(|&n| k.from_int(n)).collect()
    }

    fn m(k: &FieldSpec, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| v(k, r)).collect()).unwrap()
    }

    #[test]
    fn rref_is_canonical() {
        let k = qq();
        // Two spanning sets of the same plane in Q^3.
        let u1 =
            Subspace::from_spanning(&k, 3, vec![v(&k, &[1, 1, 0]), v(&k, &[0, 1, 1])]).unwrap();
        let u2 = Subspace::from_spanning(
            &k,
            3,
            vec![v(&k, &[2, 3, 1]), v(&k, &[1, 2, 1]), v(&k, &[3, 5, 2])],
        )
        .unwrap();
        assert_eq!(u1, u2);
        assert_eq!(u1.dim(), 2);
        assert_eq!(u1.pivots(), &[0, 1]);
    }

    #[test]
    fn kernel_annihilates() {
        let k = qq();
        let a = m(&k, &[&[1, 2, 3], &[2, 4, 6]]);
        let ker = kernel(&k, &a);
        assert_eq!(ker.dim(), 2);
        for b in ker.basis() {
            assert!(a.apply(&k, b).unwrap().iter().all(Scalar::is_zero));
        }
        // Zero-row matrix: kernel is everything.
        let empty = Matrix::zero(&k, 0, 4);
        assert_eq!(kernel(&k, &empty).dim(), 4);
    }

    #[test]
    fn intersect_and_sum_dimensions() {
        let k = qq();
        let u = Subspace::from_spanning(&k, 3, vec![v(&k, &[1, 0, 0]), v(&k, &[0, 1, 0])]).unwrap();
        let w = Subspace::from_spanning(&k, 3, vec![v(&k, &[0, 1, 0]), v(&k, &[0, 0, 1])]).unwrap();
        let meet = u.intersect(&k, &w).unwrap();
        let join = u.sum(&k, &w).unwrap();
        assert_eq!(meet.basis(), &[v(&k, &[0, 1, 0])]);
        assert_eq!(join.dim(), 3);
        assert_eq!(u.dim() + w.dim(), join.dim() + meet.dim());
    }

    #[test]
    fn intersect_skew_lines() {
        let k = qq();
        let u = Subspace::from_spanning(&k, 2, vec![v(&k, &[1, 1])]).unwrap();
        let w = Subspace::from_spanning(&k, 2, vec![v(&k, &[1, -1])]).unwrap();
        assert_eq!(u.intersect(&k, &w).unwrap().dim(), 0);
        assert_eq!(u.sum(&k, &w).unwrap(), Subspace::full(&k, 2));
    }

    #[test]
    fn constraints_double_annihilator() {
        let k = qq();
        let u = Subspace::from_spanning(&k, 4, vec![v(&k, &[1, 2, 0, 1]), v(&k, &[0, 1, 1, 3])])
            .unwrap();
        let c = u.constraints(&k);
        assert_eq!(kernel(&k, &c), u);
        // Full and zero edge cases.
        let full = Subspace::full(&k, 3);
        assert_eq!(kernel(&k, &full.constraints(&k)), full);
        let zero = Subspace::zero(3);
        assert_eq!(kernel(&k, &zero.constraints(&k)), zero);
    }

    #[test]
    fn preimage_pulls_back() {
        let k = qq();
        // A e1 = 0, A e2 = e1.
        let a = m(&k, &[&[0, 1], &[0, 0]]);
        let zero_target = Subspace::zero(2);
        let pre = preimage(&k, &a, &zero_target).unwrap();
        assert_eq!(pre.basis(), &[v(&k, &[1, 0])]);
        let line = Subspace::from_spanning(&k, 2, vec![v(&k, &[1, 0])]).unwrap();
        assert_eq!(preimage(&k, &a, &line).unwrap(), Subspace::full(&k, 2));
    }

    #[test]
    fn solve_diagonal_system() {
        let k = qq();
        let a = m(&k, &[&[2, 0], &[0, 3]]);
        let x = solve(&k, &a, &v(&k, &[1, 1])).unwrap().unwrap();
        assert_eq!(
            x[0],
            k.from_rational(Rational::new(BigInt::from(1), BigInt::from(2)))
        );
        assert_eq!(
            x[1],
            k.from_rational(Rational::new(BigInt::from(1), BigInt::from(3)))
        );
        // Inconsistent system.
        let b = m(&k, &[&[1, 0], &[1, 0]]);
        assert_eq!(solve(&k, &b, &v(&k, &[1, 2])).unwrap(), None);
    }

    #[test]
    fn inverse_and_singular() {
        let k = qq();
        let a = m(&k, &[&[1, 1], &[0, 1]]);
        let inv = a.inverse(&k).unwrap();
        assert!(a.mul(&k, &inv).unwrap().is_identity());
        assert_eq!(inv, m(&k, &[&[1, -1], &[0, 1]]));
        let s = m(&k, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(&k).unwrap_err(), LinalgError::Singular);
    }

    #[test]
    fn kronecker_respects_tensor_convention() {
        let k = qq();
        let a = m(&k, &[&[0, 1], &[1, 0]]);
        let b = m(&k, &[&[2, 0], &[0, 3]]);
        let ab = a.kronecker(&k, &b);
        // (A (x) B)(e0 (x) e1) = A e0 (x) B e1 = e1 (x) 3 e1 = 3 e_{1*2+1}.
        let mut e01 = v(&k, &[0, 0, 0, 0]);
        e01[1] = k.one();
        let out = ab.apply(&k, &e01).unwrap();
        assert_eq!(out, v(&k, &[0, 0, 0, 3]));
    }

    #[test]
    fn tensor_subspaces() {
        let k = qq();
        let u = Subspace::from_spanning(&k, 2, vec![v(&k, &[1, 1])]).unwrap();
        let r = tensor_right(&k, &u, 3);
        let l = tensor_left(&k, 3, &u);
        assert_eq!(r.ambient(), 6);
        assert_eq!(r.dim(), 3);
        assert_eq!(l.dim(), 3);
        // (1,1) (x) e2 has coordinates 0*3+2 and 1*3+2.
        let mut w = v(&k, &[0, 0, 0, 0, 0, 0]);
        w[2] = k.one();
        w[5] = k.one();
        assert!(r.contains(&k, &w));
        assert!(!l.contains(&k, &w));
    }

    #[test]
    fn rank_counts_pivots() {
        let k = qq();
        assert_eq!(m(&k, &[&[1, 2], &[2, 4], &[0, 1]]).rank(&k), 2);
        assert_eq!(Matrix::zero(&k, 3, 3).rank(&k), 0);
        assert_eq!(Matrix::identity(&k, 5).rank(&k), 5);
    }

    #[test]
    fn char_poly_known_matrices() {
        let k = qq();
        // [[2, 1], [1, 2]]: t^2 - 4t + 3
        let p = char_poly(&k, &m(&k, &[&[2, 1], &[1, 2]])).unwrap();
        assert_eq!(p, vec![k.from_int(3), k.from_int(-4), k.one()]);
        // identity: (t - 1)^3
        let p = char_poly(&k, &Matrix::identity(&k, 3)).unwrap();
        assert_eq!(
            p,
            vec![k.from_int(-1), k.from_int(3), k.from_int(-3), k.one()]
        );
        // nilpotent: t^2
        let p = char_poly(&k, &m(&k, &[&[0, 1], &[0, 0]])).unwrap();
        assert_eq!(p, vec![k.zero(), k.zero(), k.one()]);
    }

    #[test]
    fn works_over_extension_fields() {
        let k = FieldSpec::gaussian();
        let i = k.gen();
        // [[i, 0], [0, -i]] squared is -identity... actually it is -I.
        let a =
            Matrix::from_rows(vec![vec![i.clone(), k.zero()], vec![k.zero(), k.neg(&i)]]).unwrap();
        let sq = a.mul(&k, &a).unwrap();
        assert_eq!(sq, Matrix::identity(&k, 2).scale(&k, &k.from_int(-1)));
        let inv = a.inverse(&k).unwrap();
        assert!(a.mul(&k, &inv).unwrap().is_identity());
    }
}
