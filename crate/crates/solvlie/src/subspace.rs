//! Canonical linear subspaces of ℚⁿ.
//!
//! A subspace is stored as its reduced row-echelon basis, so equality of
//! subspaces is plain equality of the stored data. Quotient constructions
//! elsewhere rely on the pivot/complement split being deterministic.

use crate::matrix::{vec_is_zero, Matrix, RatVec};
use crate::scalar::Rational;
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// Echelon basis rows; pivot columns strictly increasing.
    basis: Vec<RatVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::from_spans(
            ambient,
            (0..ambient)
                .map(|i| crate::matrix::unit_vec(ambient, i))
                .collect(),
        )
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_spans(ambient: usize, spans: Vec<RatVec>) -> Self {
        assert!(spans.iter().all(|v| v.len() == ambient));
        if spans.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(spans).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Right kernel of a matrix as a subspace of ℚ^cols.
    pub fn kernel_of(m: &Matrix) -> Self {
        let basis = m.kernel_basis();
        Self::from_spans(m.cols(), basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RatVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates not used as pivots, in increasing order. These are
    /// the canonical quotient coordinates.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Reduce `v` modulo this subspace: subtract the unique combination of
    /// basis rows that clears the pivot coordinates. The result has zeros in
    /// every pivot position; it is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> RatVec {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (a, b) in w.iter_mut().zip(row) {
                    *a -= &c * b;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates_of(&self, v: &[Rational]) -> Option<RatVec> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut spans = self.basis.clone();
        spans.extend(other.basis.clone());
        Self::from_spans(self.ambient, spans)
    }

    /// Intersection, computed from the kernel of the stacked coefficient
    /// relation between the two bases.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // columns: coefficients for self.basis then other.basis;
        // kernel rows give combinations with sum_self = sum_other.
        let k = self.dim() + other.dim();
        let m = Matrix::from_fn(self.ambient, k, |i, j| {
            if j < self.dim() {
                self.basis[j][i].clone()
            } else {
                -other.basis[j - self.dim()][i].clone()
            }
        });
        let spans: Vec<RatVec> = m
            .kernel_basis()
            .into_iter()
            .map(|coefs| {
                let mut v = crate::matrix::vec_zero(self.ambient);
                for (c, b) in coefs[..self.dim()].iter().zip(&self.basis) {
                    crate::matrix::vec_add_scaled(&mut v, c, b);
                }
                v
            })
            .collect();
        Self::from_spans(self.ambient, spans)
    }
}
