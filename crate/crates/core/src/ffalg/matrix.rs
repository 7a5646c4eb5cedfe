use std::fmt;

use super::field::{Fe, Field};
use crate::error::{arg, Result};

/// Dense row-major matrix over a finite field. Vectors are columns; a matrix
/// acts on the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

/// Result of row reduction: the reduced matrix and its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: Field, n: usize, s: Fe) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, s);
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Integer entries reduced into the field.
    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return arg("ragged integer matrix");
        }
        Ok(Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j])))
    }

    pub fn from_rows(field: Field, rows: &[Vec<Fe>]) -> Matrix {
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(field, rows.len(), c, |i, j| rows[i][j])
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, n: usize, cols: &[Vec<Fe>]) -> Matrix {
        Matrix::from_fn(field, n, cols.len(), |i, j| cols[j][i])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Fe> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> &[Fe] {
        &self.data
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let p = f.characteristic();
        let mut out = Matrix::zero(f, self.rows, other.cols);
        if !f.is_extension() {
            // Accumulate in u64 and reduce lazily; entries are below 2^31.
            for i in 0..self.rows {
                for j in 0..other.cols {
                    let mut acc: u64 = 0;
                    for k in 0..self.cols {
                        acc += self.get(i, k).c0 as u64 * other.get(k, j).c0 as u64 % p;
                        if acc >= 1 << 62 {
                            acc %= p;
                        }
                    }
                    out.set(i, j, Fe { c0: (acc % p) as u32, c1: 0 });
                }
            }
            return out;
        }
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(k, j))));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = Fe::ZERO;
                for (k, &x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = f.add(acc, f.mul(self.get(i, k), x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: Fe) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Entrywise Frobenius.
    pub fn frobenius(&self) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.frobenius(a)).collect(),
        }
    }

    /// The same entries viewed in another field of equal characteristic.
    pub fn with_field(&self, field: Field) -> Result<Matrix> {
        if field.characteristic() != self.field.characteristic() {
            return arg("characteristic mismatch");
        }
        if !field.is_extension() && self.data.iter().any(|a| a.c1 != 0) {
            return arg("entries outside the prime field");
        }
        Ok(Matrix {
            field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        })
    }

    pub fn is_over_prime_field(&self) -> bool {
        self.data.iter().all(|a| a.c1 == 0)
    }

    pub fn trace(&self) -> Fe {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(Fe::ZERO, |acc, i| f.add(acc, self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { self.field.one() } else { Fe::ZERO })
            })
    }

    /// Scalar value if the matrix is a scalar multiple of the identity.
    pub fn as_scalar(&self) -> Option<Fe> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let s = self.get(0, 0);
        (*self == Matrix::scalar(self.field, self.rows, s)).then_some(s)
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{v : self · v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Fe>> {
        let f = self.field;
        let e = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &e.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Fe::ZERO; self.cols];
            v[free] = f.one();
            for (r, &c) in e.pivots.iter().enumerate() {
                v[c] = f.neg(e.reduced.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let aug = Matrix::from_fn(f, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                f.one()
            } else {
                Fe::ZERO
            }
        });
        let e = aug.rref();
        if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(f, n, n, |i, j| e.reduced.get(i, j + n)))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn determinant(&self) -> Fe {
        assert!(self.is_square());
        let f = self.field;
        let mut m = self.clone();
        let n = self.rows;
        let mut det = f.one();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Fe::ZERO;
            };
            if piv != c {
                for j in 0..n {
                    m.data.swap(piv * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let d = m.get(c, c);
            det = f.mul(det, d);
            let inv = f.inv(d).expect("nonzero");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut r = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    /// Multiplicative order, if at most `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        if !self.is_invertible() {
            return None;
        }
        let mut x = self.clone();
        for k in 1..=bound {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        Matrix::from_fn(f, self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j)
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols)
            } else {
                Fe::ZERO
            }
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let (r0, c0) = (rows.start, cols.start);
        Matrix::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j))
    }

    /// Vertically stacks matrices with equal column counts.
    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({}^{})", self.rows, self.cols, self.field.characteristic(), self.field.degree())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.field.fmt_elem(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Vector helpers over a field.
pub fn vec_is_zero(v: &[Fe]) -> bool {
    v.iter().all(|a| a.is_zero())
}

pub fn dot(field: Field, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// `uᵀ J v`.
pub fn bilinear(j: &Matrix, u: &[Fe], v: &[Fe]) -> Fe {
    dot(j.field(), u, &j.apply(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn nullspace_trivial_cases() {
        let f = gf(5);
        assert_eq!(Matrix::zero(f, 3, 3).nullspace().len(), 3);
        assert_eq!(Matrix::identity(f, 3).nullspace().len(), 0);
    }

    #[test]
    fn companion_eigenvalue_two_mod_seven() {
        // companion of x² + x + 1; 2 is a root mod 7
        let f = gf(7);
        let c = Matrix::from_ints(f, &[vec![0, -1], vec![1, -1]]).unwrap();
        let m = c.sub(&Matrix::scalar(f, 2, f.from_i64(2)));
        assert_eq!(m.nullity(), 1);
        let v = &m.nullspace()[0];
        assert!(vec_is_zero(&m.apply(v)));
    }

    #[test]
    fn inverse_and_determinant() {
        let f = Field::quadratic(11).unwrap();
        let a = Matrix::from_fn(f, 3, 3, |i, j| f.from_pair((i * 3 + j * j + 1) as i64, (i + 2 * j) as i64));
        if let Some(ai) = a.inverse() {
            assert!(a.mul(&ai).is_identity());
            assert!(!a.determinant().is_zero());
        } else {
            assert!(a.determinant().is_zero());
        }
        let s = Matrix::from_ints(gf(7), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(s.inverse().is_none());
        assert!(s.determinant().is_zero());
    }

    #[test]
    fn matrix_order() {
        let f = gf(7);
        let c = Matrix::from_ints(f, &[vec![0, -1], vec![1, -1]]).unwrap();
        assert_eq!(c.order(100), Some(3));
    }
}
