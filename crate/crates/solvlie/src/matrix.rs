//! Dense matrices and vectors over the rationals.
//!
//! Row-major storage. Reduction is plain Gauss–Jordan over the field;
//! determinants go through fraction-free Bareiss elimination on a
//! denominator-cleared integer matrix so intermediate entries stay integral.

use crate::poly::RatPoly;
use crate::scalar::{one, rat, zero, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type RatVec = Vec<Rational>;

pub fn vec_zero(n: usize) -> RatVec {
    vec![zero(); n]
}

pub fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn vec_add_assign(v: &mut [Rational], w: &[Rational]) {
    for (a, b) in v.iter_mut().zip(w) {
        *a += b;
    }
}

pub fn vec_sub(v: &[Rational], w: &[Rational]) -> RatVec {
    v.iter().zip(w).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(v: &[Rational], c: &Rational) -> RatVec {
    v.iter().map(|a| a * c).collect()
}

pub fn vec_add_scaled(v: &mut [Rational], c: &Rational, w: &[Rational]) {
    for (a, b) in v.iter_mut().zip(w) {
        *a += c * b;
    }
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vec(n: usize, i: usize) -> RatVec {
    let mut v = vec_zero(n);
    v[i] = one();
    v
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::scalar::format_rational(self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<RatVec>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(entries: &[&[i64]]) -> Self {
        Self::from_rows(
            entries
                .iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> RatVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<RatVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        })
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Matrix applied to a column vector.
    pub fn apply(&self, v: &[Rational]) -> RatVec {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn is_skew_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.get(i, j) != -self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced row-echelon form; returns `(rref, pivot_columns)`.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = one() / m.get(r, c);
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : Mv = 0}`, one row per basis vector,
    /// canonicalized to reduced row-echelon form.
    pub fn kernel_basis(&self) -> Vec<RatVec> {
        let (r, pivots) = self.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec_zero(self.cols);
            v[f] = one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return basis;
        }
        let (canon, piv) = Matrix::from_rows(basis).rref();
        (0..piv.len()).map(|i| canon.row(i).to_vec()).collect()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Exact determinant via Bareiss fraction-free elimination on the
    /// denominator-cleared integer matrix.
    pub fn det(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return one();
        }
        // Clear denominators row by row, tracking the product of the factors.
        let mut scale = Rational::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut l = BigInt::one();
            for j in 0..n {
                l = num_integer::lcm_like(&l, self.get(i, j).denom());
            }
            scale *= Rational::from_integer(l.clone());
            m.push(
                (0..n)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&l / e.denom())
                    })
                    .collect(),
            );
        }
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(p) => {
                        m.swap(k, p);
                        sign = -sign;
                    }
                    None => return zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = Rational::from_integer(m[n - 1][n - 1].clone());
        let d = if sign < 0 { -d } else { d };
        d / scale
    }

    /// Characteristic polynomial `det(xI - M)`, computed by the
    /// Faddeev–LeVerrier trace recursion (exact division by integers only).
    pub fn char_poly(&self) -> RatPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![zero(); n + 1];
        coeffs[n] = one();
        let mut m = self.clone();
        let mut cs = Vec::with_capacity(n);
        for k in 1..=n {
            let c = -m.trace() / rat(k as i64);
            cs.push(c.clone());
            if k < n {
                for i in 0..n {
                    let v = m.get(i, i) + &c;
                    m.set(i, i, v);
                }
                m = self.mul(&m);
            }
        }
        for (k, c) in cs.into_iter().enumerate() {
            coeffs[n - 1 - k] = c;
        }
        RatPoly::from_coeffs(coeffs)
    }

    /// Evaluate a polynomial at this matrix (Horner).
    pub fn poly_at(&self, p: &RatPoly) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Principal submatrix on the given (strictly increasing) index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), idx.len(), |i, j| {
            self.get(idx[i], idx[j]).clone()
        })
    }
}

// Small local helper to avoid pulling the num-integer crate for one lcm.
mod num_integer {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    pub fn lcm_like(a: &BigInt, b: &BigInt) -> BigInt {
        if a.is_zero() || b.is_zero() {
            return BigInt::zero();
        }
        let g = gcd(a.clone(), b.clone());
        ((a / &g) * b).abs()
    }

    fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        a.abs()
    }
}
