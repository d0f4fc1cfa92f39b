//! Finite-dimensional Lie algebras over ℚ, given by structure constants.
//!
//! The structure tensor is stored sparsely as entries `(i, j) -> [e_i, e_j]`
//! with `i < j`; the antisymmetric completion is implicit, so antisymmetry
//! holds by construction and `validate` can only ever report Jacobi
//! violations. All constructions (semidirect products, central extensions,
//! quotients) return new immutable algebras.

use crate::matrix::{unit_vec, vec_is_zero, vec_zero, Matrix, RatVec};
use crate::scalar::{format_rational, Rational};
use crate::subspace::Subspace;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Sparse vector: sorted `(index, nonzero coefficient)` pairs.
pub type SparseVec = Vec<(usize, Rational)>;

fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

fn dense_from_sparse(n: usize, v: &[(usize, Rational)]) -> RatVec {
    let mut out = vec_zero(n);
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
    NotAnIdeal {
        witness_vector: RatVec,
        witness_basis: usize,
    },
    NotADerivation {
        i: usize,
        j: usize,
        defect: RatVec,
    },
    NotACocycle {
        i: usize,
        j: usize,
        k: usize,
        defect: Rational,
    },
    NotNilpotent,
    BadConstruction(String),
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LieError::NotAnIdeal { witness_basis, .. } => write!(
                f,
                "not an ideal: bracket with basis element {witness_basis} leaves the subspace"
            ),
            LieError::NotADerivation { i, j, .. } => {
                write!(f, "Leibniz identity fails on basis pair ({i}, {j})")
            }
            LieError::NotACocycle { i, j, k, defect } => write!(
                f,
                "cocycle identity fails on basis triple ({i}, {j}, {k}): defect {}",
                format_rational(defect)
            ),
            LieError::NotNilpotent => write!(f, "input algebra is not nilpotent"),
            LieError::BadConstruction(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for LieError {}

/// A violated Lie-algebra identity, with the witnessing index tuple and the
/// nonzero defect vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Antisymmetry {
        i: usize,
        j: usize,
        defect: RatVec,
    },
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        defect: RatVec,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra dim {} {{ ", self.dim)?;
        for ((i, j), v) in &self.brackets {
            let terms: Vec<String> = v
                .iter()
                .map(|(k, c)| format!("{} {}", format_rational(c), self.labels[*k]))
                .collect();
            write!(
                f,
                "[{},{}] = {}; ",
                self.labels[*i],
                self.labels[*j],
                terms.join(" + ")
            )?;
        }
        write!(f, "}}")
    }
}

impl LieAlgebra {
    /// Abelian algebra of the given dimension with labels `e0, e1, ...`.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            labels: (0..dim).map(|i| format!("e{i}")).collect(),
            brackets: BTreeMap::new(),
        }
    }

    /// Build from sparse bracket entries; keys must satisfy `i < j` and all
    /// indices must be in range. Zero coefficients are dropped.
    pub fn from_brackets(
        dim: usize,
        labels: Vec<String>,
        entries: Vec<((usize, usize), SparseVec)>,
    ) -> Result<Self, LieError> {
        if labels.len() != dim {
            return Err(LieError::DimensionMismatch {
                expected: dim,
                got: labels.len(),
            });
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for l in &labels {
                if !seen.insert(l) {
                    return Err(LieError::BadConstruction(format!(
                        "duplicate basis label `{l}`"
                    )));
                }
            }
        }
        let mut brackets = BTreeMap::new();
        for ((i, j), v) in entries {
            if i >= j || j >= dim {
                return Err(LieError::BadConstruction(format!(
                    "bracket entry ({i}, {j}) must have i < j < dim"
                )));
            }
            if v.iter().any(|(k, _)| *k >= dim) {
                return Err(LieError::BadConstruction(format!(
                    "bracket entry ({i}, {j}) has a coefficient index out of range"
                )));
            }
            let mut v: SparseVec = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            v.sort_by_key(|(k, _)| *k);
            if !v.is_empty() {
                brackets.insert((i, j), v);
            }
        }
        Ok(LieAlgebra {
            dim,
            labels,
            brackets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sparse structure entries `(i, j) -> [e_i, e_j]` with `i < j`.
    pub fn bracket_entries(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.brackets.iter()
    }

    /// `[e_i, e_j]` as a dense vector (any `i`, `j`).
    pub fn bracket_basis(&self, i: usize, j: usize) -> RatVec {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => vec_zero(self.dim),
            Ordering::Less => self
                .brackets
                .get(&(i, j))
                .map_or_else(|| vec_zero(self.dim), |v| dense_from_sparse(self.dim, v)),
            Ordering::Greater => {
                let mut v = self.bracket_basis(j, i);
                for c in v.iter_mut() {
                    *c = -c.clone();
                }
                v
            }
        }
    }

    /// Bilinear extension of the structure tensor.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<RatVec, LieError> {
        if x.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec_zero(self.dim);
        for ((i, j), v) in &self.brackets {
            // [x, y] picks up (x_i y_j - x_j y_i) [e_i, e_j]
            let c = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if c.is_zero() {
                continue;
            }
            for (k, a) in v {
                out[*k] += &c * a;
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x : y -> [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<RatVec> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vec(self.dim, j)).expect("dims match"))
            .collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j][i].clone())
    }

    /// Check antisymmetry and the Jacobi identity on all basis triples.
    /// Violations are data, not errors; antisymmetry holds by construction
    /// for this representation but is still reported for completeness.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut d = self.bracket_basis(i, j);
                let ji = self.bracket_basis(j, i);
                vec_add_assign_ref(&mut d, &ji);
                if !vec_is_zero(&d) {
                    violations.push(Violation::Antisymmetry { i, j, defect: d });
                }
            }
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let mut d = self
                        .bracket(&unit_vec(self.dim, i), &self.bracket_basis(j, k))
                        .expect("dims match");
                    let t2 = self
                        .bracket(&unit_vec(self.dim, j), &self.bracket_basis(k, i))
                        .expect("dims match");
                    let t3 = self
                        .bracket(&unit_vec(self.dim, k), &self.bracket_basis(i, j))
                        .expect("dims match");
                    vec_add_assign_ref(&mut d, &t2);
                    vec_add_assign_ref(&mut d, &t3);
                    if !vec_is_zero(&d) {
                        violations.push(Violation::Jacobi { i, j, k, defect: d });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Centre `{x : [x, e_j] = 0 for all j}`, as the kernel of the stacked
    /// ad-matrices.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // rows: for each basis j and each output coordinate k, the linear
        // form x -> [x, e_j]_k
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            // column i of the map x -> [x, e_j] is [e_i, e_j]
            let cols: Vec<RatVec> = (0..n).map(|i| self.bracket_basis(i, j)).collect();
            for k in 0..n {
                rows.push((0..n).map(|i| cols[i][k].clone()).collect());
            }
        }
        Subspace::kernel_of(&Matrix::from_rows(rows))
    }

    /// Span of all brackets of basis pairs.
    pub fn derived_subalgebra(&self) -> Subspace {
        let spans: Vec<RatVec> = self
            .brackets
            .values()
            .map(|v| dense_from_sparse(self.dim, v))
            .collect();
        Subspace::from_spans(self.dim, spans)
    }

    /// `[A, S]` for a subspace `S`.
    fn bracket_with_subspace(&self, s: &Subspace) -> Subspace {
        let mut spans = Vec::new();
        for i in 0..self.dim {
            for b in s.basis() {
                let v = self.bracket(&unit_vec(self.dim, i), b).expect("dims match");
                if !vec_is_zero(&v) {
                    spans.push(v);
                }
            }
        }
        Subspace::from_spans(self.dim, spans)
    }

    /// Lower central series `C^1 = A, C^{k+1} = [A, C^k]`, listed until it
    /// stabilizes (the last entry repeats the stable term exactly once).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::whole(self.dim)];
        loop {
            let next = self.bracket_with_subspace(series.last().unwrap());
            if &next == series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// Derived series `D^1 = A, D^{k+1} = [D^k, D^k]`.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::whole(self.dim)];
        loop {
            let cur = series.last().unwrap();
            let mut spans = Vec::new();
            for a in cur.basis() {
                for b in cur.basis() {
                    let v = self.bracket(a, b).expect("dims match");
                    if !vec_is_zero(&v) {
                        spans.push(v);
                    }
                }
            }
            let next = Subspace::from_spans(self.dim, spans);
            if &next == cur {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().dim() == 0
    }

    /// Nilpotency class: smallest `c` with `C^{c+1} = 0`. Zero for abelian
    /// algebras of dimension 0; 1 for abelian; `None` if not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.last().unwrap().dim() != 0 {
            return None;
        }
        Some(series.len() - 1)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().dim() == 0
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<(), LieError> {
        assert_eq!(s.ambient_dim(), self.dim);
        for (bi, b) in s.basis().iter().enumerate() {
            for j in 0..self.dim {
                let v = self.bracket(b, &unit_vec(self.dim, j)).expect("dims match");
                if !s.contains(&v) {
                    return Err(LieError::NotAnIdeal {
                        witness_vector: s.basis()[bi].clone(),
                        witness_basis: j,
                    });
                }
            }
        }
        Ok(())
    }

    /// Quotient by an ideal. The quotient basis is the canonical complement
    /// of the ideal's pivot columns; returns the quotient algebra together
    /// with the rectangular projection matrix (quotient-dim x dim).
    pub fn quotient(&self, s: &Subspace) -> Result<(LieAlgebra, Matrix), LieError> {
        self.is_ideal(s)?;
        let q_idx = s.complement_indices();
        let q = q_idx.len();
        let proj = Matrix::from_fn(q, self.dim, |a, j| {
            let r = s.reduce(&unit_vec(self.dim, j));
            r[q_idx[a]].clone()
        });
        let labels = q_idx.iter().map(|&i| self.labels[i].clone()).collect();
        let mut entries = Vec::new();
        for a in 0..q {
            for b in (a + 1)..q {
                let w = self.bracket_basis(q_idx[a], q_idx[b]);
                let r = s.reduce(&w);
                let coords: RatVec = q_idx.iter().map(|&i| r[i].clone()).collect();
                let sv = sparse_from_dense(&coords);
                if !sv.is_empty() {
                    entries.push(((a, b), sv));
                }
            }
        }
        let alg = LieAlgebra::from_brackets(q, labels, entries)?;
        Ok((alg, proj))
    }

    /// Leibniz defect of `m` on the first failing basis pair, if any.
    pub fn derivation_defect(&self, m: &Matrix) -> Option<(usize, usize, RatVec)> {
        assert!(m.is_square() && m.rows() == self.dim);
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                // m [e_i, e_j] - [m e_i, e_j] - [e_i, m e_j]
                let mut d = m.apply(&self.bracket_basis(i, j));
                let t1 = self
                    .bracket(&m.col(i), &unit_vec(self.dim, j))
                    .expect("dims match");
                let t2 = self
                    .bracket(&unit_vec(self.dim, i), &m.col(j))
                    .expect("dims match");
                for k in 0..self.dim {
                    d[k] -= &t1[k] + &t2[k];
                }
                if !vec_is_zero(&d) {
                    return Some((i, j, d));
                }
            }
        }
        None
    }

    pub fn is_derivation(&self, m: &Matrix) -> bool {
        self.derivation_defect(m).is_none()
    }

    /// Semidirect product `self ⋊ ℝ D`: one new generator `T` acting on the
    /// old basis by `[T, x] = D x`.
    pub fn semidirect(&self, d: &Matrix) -> Result<LieAlgebra, LieError> {
        if d.rows() != self.dim || d.cols() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: d.rows(),
            });
        }
        if let Some((i, j, defect)) = self.derivation_defect(d) {
            return Err(LieError::NotADerivation { i, j, defect });
        }
        let n = self.dim;
        let mut labels = self.labels.clone();
        labels.push(fresh_label(&labels, "T"));
        let mut entries: Vec<((usize, usize), SparseVec)> =
            self.brackets.iter().map(|(k, v)| (*k, v.clone())).collect();
        for i in 0..n {
            // [e_i, T] = -D e_i
            let col = d.col(i);
            let neg: RatVec = col.iter().map(|c| -c.clone()).collect();
            let sv = sparse_from_dense(&neg);
            if !sv.is_empty() {
                entries.push(((i, n), sv));
            }
        }
        LieAlgebra::from_brackets(n + 1, labels, entries)
    }

    /// Nilradical of `self ⋊ ℝ D` for nilpotent `self`: the whole product if
    /// it is nilpotent, otherwise `self` embedded as the first coordinates.
    /// Any ideal containing the codimension-one nilpotent ideal is one of
    /// these two.
    pub fn nilradical_of_semidirect(&self, d: &Matrix) -> Result<Subspace, LieError> {
        if !self.is_nilpotent() {
            return Err(LieError::NotNilpotent);
        }
        let g = self.semidirect(d)?;
        if g.is_nilpotent() {
            Ok(Subspace::whole(self.dim + 1))
        } else {
            Ok(Subspace::from_spans(
                self.dim + 1,
                (0..self.dim).map(|i| unit_vec(self.dim + 1, i)).collect(),
            ))
        }
    }

    /// Central extension by a 2-cocycle: one new central generator `W` with
    /// `[x, y]_new = [x, y] + omega(x, y) W`.
    pub fn central_extension(&self, omega: &Bilinear2Cocycle) -> Result<LieAlgebra, LieError> {
        omega.check_cocycle(self)?;
        let n = self.dim;
        let mut labels = self.labels.clone();
        labels.push(fresh_label(&labels, "W"));
        let mut entries: Vec<((usize, usize), SparseVec)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut v: SparseVec = self.brackets.get(&(i, j)).cloned().unwrap_or_default();
                let w = omega.entries.get(i, j);
                if !w.is_zero() {
                    v.push((n, w.clone()));
                }
                if !v.is_empty() {
                    entries.push(((i, j), v));
                }
            }
        }
        LieAlgebra::from_brackets(n + 1, labels, entries)
    }

    /// Extend a derivation `d0` of `self` across the central extension by
    /// `omega`, acting on the new generator by `a0`. Returns the extended map
    /// iff the compatibility identity
    /// `omega(d0 x, y) + omega(x, d0 y) = a0 omega(x, y)` holds.
    pub fn extend_derivation(
        &self,
        omega: &Bilinear2Cocycle,
        d0: &Matrix,
        a0: &Rational,
    ) -> Option<Matrix> {
        assert_eq!(d0.rows(), self.dim);
        if !self.is_derivation(d0) {
            return None;
        }
        let lhs = d0
            .transpose()
            .mul(&omega.entries)
            .add(&omega.entries.mul(d0));
        let rhs = omega.entries.scale(a0);
        if lhs != rhs {
            return None;
        }
        let n = self.dim;
        let mut ext = Matrix::zero(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                ext.set(i, j, d0.get(i, j).clone());
            }
        }
        ext.set(n, n, a0.clone());
        Some(ext)
    }
}

fn vec_add_assign_ref(v: &mut [Rational], w: &[Rational]) {
    for (a, b) in v.iter_mut().zip(w) {
        *a += b;
    }
}

fn fresh_label(labels: &[String], want: &str) -> String {
    if !labels.iter().any(|l| l == want) {
        return want.to_string();
    }
    let mut k = 1;
    loop {
        let cand = format!("{want}{k}");
        if !labels.iter().any(|l| l == &cand) {
            return cand;
        }
        k += 1;
    }
}

/// Antisymmetric bilinear form given by its full matrix of values
/// `omega(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bilinear2Cocycle {
    entries: Matrix,
}

impl Bilinear2Cocycle {
    pub fn new(entries: Matrix) -> Result<Self, LieError> {
        if !entries.is_skew_symmetric() {
            return Err(LieError::BadConstruction(
                "bilinear form matrix must be antisymmetric".into(),
            ));
        }
        Ok(Bilinear2Cocycle { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mx = self.entries.apply(y);
        x.iter().zip(&mx).map(|(a, b)| a * b).sum()
    }

    /// Cocycle identity `omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0`
    /// on all basis triples.
    pub fn check_cocycle(&self, a: &LieAlgebra) -> Result<(), LieError> {
        assert_eq!(self.dim(), a.dim());
        let n = a.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let ei = unit_vec(n, i);
                    let ej = unit_vec(n, j);
                    let ek = unit_vec(n, k);
                    let d = self.eval(&a.bracket_basis(i, j), &ek)
                        + self.eval(&a.bracket_basis(j, k), &ei)
                        + self.eval(&a.bracket_basis(k, i), &ej);
                    if !d.is_zero() {
                        return Err(LieError::NotACocycle { i, j, k, defect: d });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_cocycle(&self, a: &LieAlgebra) -> bool {
        self.check_cocycle(a).is_ok()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.entries.det().is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::scalar::rat;

    #[test]
    fn heisenberg_validates() {
        let h = families::heisenberg(1);
        assert!(h.validate().ok());
        // [Y1, X1] = Z with basis order (Z, Y1, X1)
        let y = unit_vec(3, 1);
        let x = unit_vec(3, 2);
        assert_eq!(h.bracket(&y, &x).unwrap(), unit_vec(3, 0));
        // antisymmetry on a random-ish vector
        let v = vec![rat(2), rat(-3), rat(5)];
        assert!(vec_is_zero(&h.bracket(&v, &v).unwrap()));
    }

    #[test]
    fn abelian_validates_any_dim() {
        for n in [0, 1, 4, 7] {
            assert!(LieAlgebra::abelian(n).validate().ok());
        }
    }

    #[test]
    fn jacobi_violation_detected_with_witness() {
        // Heisenberg table plus [Z, X1] = -X1, i.e. [X1, Z] = X1
        let bad = LieAlgebra::from_brackets(
            3,
            vec!["Z".into(), "Y1".into(), "X1".into()],
            vec![((1, 2), vec![(0, rat(1))]), ((0, 2), vec![(2, rat(-1))])],
        )
        .unwrap();
        let report = bad.validate();
        assert!(!report.ok());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Jacobi { defect, .. } if !vec_is_zero(defect))));
    }

    #[test]
    fn center_of_heisenberg() {
        let h = families::heisenberg(2);
        let z = h.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&unit_vec(5, 0)));
        assert_eq!(LieAlgebra::abelian(4).center().dim(), 4);
    }

    #[test]
    fn series_and_nilpotency() {
        let h = families::heisenberg(1);
        assert_eq!(h.derived_subalgebra().dim(), 1);
        assert!(h.is_nilpotent());
        assert_eq!(h.nilpotency_class(), Some(2));
        assert!(h.is_solvable());

        // h1 x| diag(1,2,3) on (X1, Y1, Z): solvable, not nilpotent
        let d = heis1_diag_xyz(1, 2, 3);
        let g = h.semidirect(&d).unwrap();
        assert!(g.is_solvable());
        assert!(!g.is_nilpotent());
        // the lower central series stabilizes at h1
        let stable = g.lower_central_series().last().unwrap().clone();
        assert_eq!(stable.dim(), 3);
    }

    /// Derivation of heisenberg(1) that is diagonal on (X1, Y1, Z), given in
    /// the algebra's basis order (Z, Y1, X1).
    fn heis1_diag_xyz(x: i64, y: i64, z: i64) -> Matrix {
        Matrix::diagonal(&[rat(z), rat(y), rat(x)])
    }

    #[test]
    fn derivation_checks() {
        let h = families::heisenberg(1);
        assert!(h.is_derivation(&heis1_diag_xyz(1, 2, 3)));
        assert!(h.is_derivation(&Matrix::zero(3, 3)));
        let bad = heis1_diag_xyz(1, 1, 3);
        let (i, j, defect) = h.derivation_defect(&bad).unwrap();
        assert_eq!((i, j), (1, 2)); // the (Y1, X1) pair
        assert_eq!(defect, vec![rat(1), rat(0), rat(0)]); // defect Z
    }

    #[test]
    fn semidirect_of_zero_derivation_is_direct_sum() {
        let h = families::heisenberg(1);
        let g = h.semidirect(&Matrix::zero(3, 3)).unwrap();
        assert!(g.validate().ok());
        assert_eq!(g.dim(), 4);
        assert!(g.center().contains(&unit_vec(4, 3)));
    }

    #[test]
    fn semidirect_validates() {
        let h = families::heisenberg(1);
        let g = h.semidirect(&heis1_diag_xyz(2, -1, 1)).unwrap();
        assert!(g.validate().ok());
        assert!(g.is_solvable());
    }

    #[test]
    fn quotient_by_center_is_abelian() {
        let h = families::heisenberg(2);
        let (q, proj) = h.quotient(&h.center()).unwrap();
        assert_eq!(q.dim(), 4);
        assert!(q.is_abelian());
        assert_eq!(proj.rows(), 4);
        assert_eq!(proj.cols(), 5);
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let h = families::heisenberg(1);
        let (q, proj) = h.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(q, h);
        assert_eq!(proj, Matrix::identity(3));
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let h = families::heisenberg(1);
        // span{X1} is not an ideal: [X1, Y1] = -Z leaves it
        let s = Subspace::from_spans(3, vec![unit_vec(3, 2)]);
        assert!(matches!(h.quotient(&s), Err(LieError::NotAnIdeal { .. })));
    }

    #[test]
    fn projection_commutes_with_bracket() {
        let h = families::free_two_step_3gen();
        let z = h.center();
        let (q, proj) = h.quotient(&z).unwrap();
        let x = vec![rat(1), rat(-2), rat(3), rat(0), rat(7), rat(1)];
        let y = vec![rat(0), rat(4), rat(-1), rat(2), rat(5), rat(-3)];
        let lhs = proj.apply(&h.bracket(&x, &y).unwrap());
        let rhs = q.bracket(&proj.apply(&x), &proj.apply(&y)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn free_two_step_quotient_by_y_span_is_abelian() {
        let h = families::free_two_step_3gen();
        let ys = Subspace::from_spans(6, (3..6).map(|i| unit_vec(6, i)).collect());
        let (q, _) = h.quotient(&ys).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(q.is_abelian());
    }

    #[test]
    fn central_extension_of_abelian_is_heisenberg() {
        // standard symplectic omega on R^2 with basis (Y1, X1):
        // omega(Y1, X1) = 1 gives [Y1, X1] = W, the Heisenberg table.
        let a = LieAlgebra::abelian(2);
        let mut m = Matrix::zero(2, 2);
        m.set(0, 1, rat(1));
        m.set(1, 0, rat(-1));
        let omega = Bilinear2Cocycle::new(m).unwrap();
        let ext = a.central_extension(&omega).unwrap();
        assert!(ext.validate().ok());
        assert_eq!(ext.dim(), 3);
        assert!(ext.center().contains(&unit_vec(3, 2)));
        // table matches heisenberg(1) up to the basis ordering (Y1, X1, W)
        // versus (Z, Y1, X1)
        assert_eq!(
            ext.bracket(&unit_vec(3, 0), &unit_vec(3, 1)).unwrap(),
            unit_vec(3, 2)
        );
    }

    #[test]
    fn zero_cocycle_extension_is_direct_sum() {
        let h = families::heisenberg(1);
        let omega = Bilinear2Cocycle::new(Matrix::zero(3, 3)).unwrap();
        let ext = h.central_extension(&omega).unwrap();
        assert!(ext.validate().ok());
        assert!(ext.center().contains(&unit_vec(4, 3)));
        assert_eq!(ext.center().dim(), 2);
    }

    #[test]
    fn nilradical_of_semidirect_cases() {
        let h = families::heisenberg(1);
        let nr = h
            .nilradical_of_semidirect(&heis1_diag_xyz(1, 2, 3))
            .unwrap();
        assert_eq!(nr.dim(), 3);

        let ab = LieAlgebra::abelian(2);
        assert_eq!(
            ab.nilradical_of_semidirect(&Matrix::zero(2, 2))
                .unwrap()
                .dim(),
            3
        );
        // nilpotent Jordan block on R^2 gives the 3-dim Heisenberg algebra
        let jordan = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(ab.nilradical_of_semidirect(&jordan).unwrap().dim(), 3);

        // non-nilpotent input is rejected
        let g = h.semidirect(&heis1_diag_xyz(1, 2, 3)).unwrap();
        assert!(matches!(
            g.nilradical_of_semidirect(&Matrix::zero(4, 4)),
            Err(LieError::NotNilpotent)
        ));
    }
}
