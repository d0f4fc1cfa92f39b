//! Lie-bracket deformations `[x, y]_h = phi_h^{-1}([phi_h x, phi_h y])`.
//!
//! The family `phi` is a square matrix of Laurent polynomials in the
//! deformation parameter `h`, with `phi_1 = id`. Internally entries are
//! reduced univariate rational functions, so invertibility at a given `h`
//! and existence of the `h -> 0` limit are both decidable by inspecting
//! numerators and denominators.

use crate::lie::{LieAlgebra, LieError};
use crate::matrix::Matrix;
use crate::poly::RatPoly;
use crate::scalar::{format_rational, one, zero, Rational};
use num_traits::Zero;
use std::fmt;

/// Reduced univariate rational function over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly, // monic, nonzero
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: RatPoly::zero(),
            den: RatPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: RatPoly::one(),
            den: RatPoly::one(),
        }
    }

    pub fn from_poly(p: RatPoly) -> Self {
        RatFunc {
            num: p,
            den: RatPoly::one(),
        }
    }

    /// `c * h^k` for possibly negative `k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let pow = |e: usize| {
            let mut coeffs = vec![zero(); e + 1];
            coeffs[e] = one();
            RatPoly::from_coeffs(coeffs)
        };
        if k >= 0 {
            RatFunc {
                num: pow(k as usize).scale(&c),
                den: RatPoly::one(),
            }
        } else {
            RatFunc {
                num: RatPoly::constant(c),
                den: pow((-k) as usize),
            }
        }
    }

    /// Laurent polynomial from `(exponent, coefficient)` terms.
    pub fn from_laurent_terms(terms: &[(i64, Rational)]) -> Self {
        let mut acc = Self::zero();
        for (k, c) in terms {
            acc = acc.add(&Self::monomial(c.clone(), *k));
        }
        acc
    }

    fn reduced(num: RatPoly, den: RatPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g);
        let den = den.div_exact(&g);
        let lead = den.leading().clone();
        RatFunc {
            num: num.scale(&(one() / &lead)),
            den: den.scale(&(one() / &lead)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::reduced(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero rational function");
        Self::reduced(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Evaluate at `h0`; `None` at a pole.
    pub fn eval(&self, h0: &Rational) -> Option<Rational> {
        let d = self.den.eval(h0);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(h0) / d)
    }

    /// Order of vanishing at `h = 0`: positive means a zero, negative a pole.
    /// `None` for the zero function.
    pub fn order_at_zero(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.order_at_zero() as i64 - self.den.order_at_zero() as i64)
    }

    /// Limit as `h -> 0`, if finite.
    pub fn limit_at_zero(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(zero());
        }
        let ord = self.order_at_zero().unwrap();
        if ord < 0 {
            return None;
        }
        if ord > 0 {
            return Some(zero());
        }
        let a = self.num.order_at_zero();
        let b = self.den.order_at_zero();
        let n = self.num.shift_down(a);
        let d = self.den.shift_down(b);
        Some(n.coeff(0) / d.coeff(0))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeformError {
    NotSquare,
    NotIdentityAtOne,
    SingularAt(Rational),
    /// The limit bracket has a surviving negative power of `h` at the given
    /// structure entry.
    LimitDoesNotExist {
        i: usize,
        j: usize,
        k: usize,
        term: String,
    },
    Lie(LieError),
}

impl fmt::Display for DeformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeformError::NotSquare => write!(f, "deformation matrix must be square"),
            DeformError::NotIdentityAtOne => write!(f, "phi(1) must be the identity"),
            DeformError::SingularAt(h) => {
                write!(f, "phi({}) is not invertible", format_rational(h))
            }
            DeformError::LimitDoesNotExist { i, j, k, term } => write!(
                f,
                "limit does not exist: structure constant c[{i}][{j}][{k}] = {term} has a pole at h = 0"
            ),
            DeformError::Lie(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DeformError {}

impl From<LieError> for DeformError {
    fn from(e: LieError) -> Self {
        DeformError::Lie(e)
    }
}

/// A deformation family `h -> phi_h` with Laurent polynomial entries.
#[derive(Clone, Debug)]
pub struct DeformationFamily {
    dim: usize,
    phi: Vec<Vec<RatFunc>>,
}

impl DeformationFamily {
    /// `phi_h = h * id`, the abelianizing contraction scaling.
    pub fn scaling(dim: usize) -> Self {
        Self::diag_powers(&vec![1; dim])
    }

    /// `phi_h = diag(h^{k_1}, ..., h^{k_n})`.
    pub fn diag_powers(powers: &[i64]) -> Self {
        let dim = powers.len();
        let phi = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            RatFunc::monomial(one(), powers[i])
                        } else {
                            RatFunc::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        DeformationFamily { dim, phi }
    }

    pub fn from_entries(entries: Vec<Vec<RatFunc>>) -> Result<Self, DeformError> {
        let dim = entries.len();
        if entries.iter().any(|r| r.len() != dim) {
            return Err(DeformError::NotSquare);
        }
        let fam = DeformationFamily { dim, phi: entries };
        // phi_1 = id
        let at_one = fam
            .eval_phi(&one())
            .ok_or_else(|| DeformError::SingularAt(one()))?;
        if at_one != Matrix::identity(dim) {
            return Err(DeformError::NotIdentityAtOne);
        }
        Ok(fam)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn eval_phi(&self, h: &Rational) -> Option<Matrix> {
        let mut m = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.phi[i][j].eval(h)?);
            }
        }
        Some(m)
    }

    /// The deformed algebra at a concrete `h in (0, 1]` (any nonzero rational
    /// with invertible `phi_h` is accepted).
    pub fn deform(&self, base: &LieAlgebra, h: &Rational) -> Result<LieAlgebra, DeformError> {
        assert_eq!(base.dim(), self.dim);
        let phi = self
            .eval_phi(h)
            .ok_or_else(|| DeformError::SingularAt(h.clone()))?;
        let inv = phi
            .inverse()
            .ok_or_else(|| DeformError::SingularAt(h.clone()))?;
        let n = self.dim;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let w = base.bracket(&phi.col(i), &phi.col(j))?;
                let v = inv.apply(&w);
                let sv: crate::lie::SparseVec = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !sv.is_empty() {
                    entries.push(((i, j), sv));
                }
            }
        }
        Ok(LieAlgebra::from_brackets(
            n,
            base.labels().to_vec(),
            entries,
        )?)
    }

    /// Structure constants of the deformed bracket as rational functions of
    /// `h`: the inverse of `phi` is computed symbolically over ℚ(h).
    fn symbolic_structure(
        &self,
        base: &LieAlgebra,
    ) -> Result<Vec<((usize, usize), Vec<RatFunc>)>, DeformError> {
        let n = self.dim;
        let inv = invert_func_matrix(&self.phi).ok_or(DeformError::SingularAt(one()))?;
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                // w = [phi e_i, phi e_j] expanded over the base structure
                let mut w = vec![RatFunc::zero(); n];
                for ((a, b), v) in base.bracket_entries() {
                    // coefficient (phi_ai phi_bj - phi_bi phi_aj)
                    let c = self.phi[*a][i]
                        .mul(&self.phi[*b][j])
                        .sub(&self.phi[*b][i].mul(&self.phi[*a][j]));
                    if c.is_zero() {
                        continue;
                    }
                    for (k, coef) in v {
                        w[*k] =
                            w[*k].add(&c.mul(&RatFunc::from_poly(RatPoly::constant(coef.clone()))));
                    }
                }
                let c: Vec<RatFunc> = (0..n)
                    .map(|k| {
                        let mut acc = RatFunc::zero();
                        for (l, wl) in w.iter().enumerate() {
                            if !wl.is_zero() && !inv[k][l].is_zero() {
                                acc = acc.add(&inv[k][l].mul(wl));
                            }
                        }
                        acc
                    })
                    .collect();
                out.push(((i, j), c));
            }
        }
        Ok(out)
    }

    /// The contraction limit `h -> 0`, when every deformed structure constant
    /// stays finite.
    pub fn limit_algebra(&self, base: &LieAlgebra) -> Result<LieAlgebra, DeformError> {
        assert_eq!(base.dim(), self.dim);
        let sym = self.symbolic_structure(base)?;
        let mut entries = Vec::new();
        for ((i, j), cs) in sym {
            let mut sv: crate::lie::SparseVec = Vec::new();
            for (k, c) in cs.iter().enumerate() {
                match c.limit_at_zero() {
                    Some(v) => {
                        if !v.is_zero() {
                            sv.push((k, v));
                        }
                    }
                    None => {
                        return Err(DeformError::LimitDoesNotExist {
                            i,
                            j,
                            k,
                            term: c.to_string(),
                        })
                    }
                }
            }
            if !sv.is_empty() {
                entries.push(((i, j), sv));
            }
        }
        Ok(LieAlgebra::from_brackets(
            self.dim,
            base.labels().to_vec(),
            entries,
        )?)
    }
}

/// Gauss-Jordan inverse over the field ℚ(h).
fn invert_func_matrix(m: &[Vec<RatFunc>]) -> Option<Vec<Vec<RatFunc>>> {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    let mut inv: Vec<Vec<RatFunc>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let pivot = a[c][c].clone();
        for j in 0..n {
            a[c][j] = a[c][j].div(&pivot);
            inv[c][j] = inv[c][j].div(&pivot);
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let t = a[c][j].mul(&f);
                    a[r][j] = a[r][j].sub(&t);
                    let t = inv[c][j].mul(&f);
                    inv[r][j] = inv[r][j].sub(&t);
                }
            }
        }
    }
    Some(inv)
}
