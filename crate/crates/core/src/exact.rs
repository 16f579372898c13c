//! Arbitrary-precision rational arithmetic and exact dense linear algebra.
//!
//! Everything here is exact: no floating point appears anywhere in the crate.
//! Subspaces are kept in reduced row-echelon form, so equality of subspaces
//! is structural equality and all reports are deterministic.

use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Write as _;

/// The ground field: arbitrary-precision rationals, always reduced.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse the exact serialization `p/q` (or just `p`).
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::Parse(format!("`{s}` is not a rational: {e}")))
}

/// Serialize as `p/q`, or `p` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn vec_zero(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

/// Dense matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from integer literals; handy in tests and catalog data.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major entry vector; the coordinate convention for matrix spaces.
    pub fn flatten(&self) -> Vec<Rat> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    if !add.is_zero() {
                        let cur = out.get(i, j) + add;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).fold(Rat::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Stack rows of `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Reduced row-echelon form together with the rank.
    ///
    /// Pivots are the first nonzero entry in column order, which makes the
    /// result the unique canonical form.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, pivots) = self.rref_with_pivots();
        let rank = pivots.len();
        (m, rank)
    }

    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.get(pivot_row, col).recip();
            for j in col..m.cols {
                let v = m.get(pivot_row, j) * &inv;
                m.set(pivot_row, j, v);
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m.get(r2, col).is_zero() {
                    let factor = m.get(r2, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r2, j) - &factor * m.get(pivot_row, j);
                        m.set(r2, j, v);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Canonical basis of `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec_zero(self.cols);
            v[f] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.cols, basis)
    }

    /// Full solution set of `self * x = b`, or `None` when inconsistent.
    ///
    /// The particular solution sets every free coordinate to zero.
    pub fn solve_affine(&self, b: &[Rat]) -> Result<Option<(Vec<Rat>, Subspace)>, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows but right-hand side has length {}",
                self.rows,
                b.len()
            )));
        }
        let rhs = Matrix::from_fn(self.rows, 1, |i, _| b[i].clone());
        let aug = self.hstack(&rhs);
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec_zero(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some((x, self.kernel_basis())))
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (r, pivots) = aug.rref_with_pivots();
        // Invertible exactly when all pivots land in the left block.
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rat::zero();
            };
            if r != col {
                m.swap_rows(col, r);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r2 in col + 1..n {
                if !m.get(r2, col).is_zero() {
                    let factor = m.get(r2, col) / &pivot;
                    for j in col..n {
                        let v = m.get(r2, j) - &factor * m.get(col, j);
                        m.set(r2, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rat).collect();
            let _ = writeln!(s, "[ {} ]", row.join("  "));
        }
        s
    }
}

/// A linear subspace of `Q^n`, stored as a reduced-echelon basis.
///
/// The echelon form is the unique canonical one, so two subspaces are equal
/// exactly when the structs are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::from_spanning(
            ambient_dim,
            (0..ambient_dim)
                .map(|i| {
                    let mut v = vec_zero(ambient_dim);
                    v[i] = Rat::one();
                    v
                })
                .collect(),
        )
    }

    /// Canonicalize a spanning set: run row reduction, drop zero rows.
    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<Rat>>) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        assert!(vectors.iter().all(|v| v.len() == ambient_dim));
        let (r, rank) = Matrix::from_rows(vectors).rref();
        let basis = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            Matrix::zeros(0, self.ambient_dim)
        } else {
            Matrix::from_rows(self.basis.clone())
        }
    }

    /// Residual of `v` after eliminating against the echelon basis.
    pub fn reduce_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[pivot].is_zero() {
                let factor = v[pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        vec_is_zero(&self.reduce_vec(v))
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vec(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.clone());
        Subspace::from_spanning(self.ambient_dim, vectors)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        // v = x·A = y·B  ⇔  (x, y) ∈ ker [Aᵗ | -Bᵗ]
        let a_t = self.basis_matrix().transpose();
        let b_t = other.basis_matrix().transpose();
        let stacked = a_t.hstack(&b_t.neg());
        let ker = stacked.kernel_basis();
        let vectors = ker
            .basis()
            .iter()
            .map(|xy| {
                let x = &xy[..self.dim()];
                let mut v = vec_zero(self.ambient_dim);
                for (coeff, row) in x.iter().zip(&self.basis) {
                    for (vi, ri) in v.iter_mut().zip(row) {
                        *vi += coeff * ri;
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient_dim, vectors)
    }

    /// Coordinates without a pivot; the canonical complement's support.
    pub fn complement_coords(&self) -> Vec<usize> {
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rational_serialization_round_trip() {
        let x = ratio(-3, 6);
        assert_eq!(format_rat(&x), "-1/2");
        assert_eq!(parse_rat("-1/2").unwrap(), x);
        assert_eq!(format_rat(&rat(7)), "7");
        assert_eq!(parse_rat("7").unwrap(), rat(7));
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn rref_identity() {
        let (r, rank) = m(&[&[1, 0], &[0, 1]]).rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let (_, rank) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_permutation() {
        let (r, rank) = m(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(rank, 2);
    }

    #[test]
    fn kernel_one_relation() {
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], vec![rat(1), rat(-1)]);
    }

    #[test]
    fn kernel_identity_and_zero() {
        assert_eq!(Matrix::identity(3).kernel_basis(), Subspace::zero(3));
        assert_eq!(Matrix::zeros(3, 3).kernel_basis(), Subspace::full(3));
    }

    #[test]
    fn solve_affine_unique() {
        let (x, hom) = m(&[&[1, 0], &[0, 1]])
            .solve_affine(&[rat(1), rat(2)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
        assert_eq!(hom.dim(), 0);
    }

    #[test]
    fn solve_affine_underdetermined() {
        let (x, hom) = m(&[&[1, 1]]).solve_affine(&[rat(0)]).unwrap().unwrap();
        assert_eq!(x, vec![rat(0), rat(0)]);
        assert_eq!(hom.dim(), 1);
        assert_eq!(hom.basis()[0], vec![rat(1), rat(-1)]);
    }

    #[test]
    fn solve_affine_inconsistent() {
        let res = m(&[&[1], &[0]]).solve_affine(&[rat(0), rat(1)]).unwrap();
        assert!(res.is_none());
    }

    #[test]
    fn solve_affine_dimension_error() {
        assert!(m(&[&[1, 1]]).solve_affine(&[rat(1), rat(1)]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspace_intersection() {
        // span{(1,0,0),(0,1,0)} ∩ span{(0,1,0),(0,0,1)} = span{(0,1,0)}
        let a = Subspace::from_spanning(3, vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]]);
        let b = Subspace::from_spanning(3, vec![vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vec(&[rat(0), rat(1), rat(0)]));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-5i64..6, r * c).prop_map(move |vals| {
                Matrix::from_flat(r, c, vals.into_iter().map(rat).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (r, _) = m.rref();
            let (r2, _) = r.rref();
            prop_assert_eq!(r, r2);
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            let (_, rank) = m.rref();
            prop_assert_eq!(rank + m.kernel_basis().dim(), m.cols());
        }

        #[test]
        fn rational_addition_exact(p in -1000i64..1000, q in 1i64..1000, r in -1000i64..1000, s in 1i64..1000) {
            let a = ratio(p, q);
            let b = ratio(r, s);
            prop_assert_eq!(&(&(&a + &b) - &b), &a);
        }
    }
}
