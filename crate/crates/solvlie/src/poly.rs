//! Univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order. The zero polynomial is
//! the empty coefficient vector, so `degree()` is only defined for nonzero
//! polynomials. Everything here is exact; the real-root machinery (Sturm
//! chains, Cauchy indices) underpins the half-plane root counts in
//! [`crate::spectral`].

use crate::scalar::{format_rational, one, rat, zero, Rational};
use num_traits::{Signed, Zero};
use std::fmt;

/// Polynomial with exact rational coefficients, ascending degree.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "{}*x", format_rational(c))?,
                _ => write!(f, "{}*x^{}", format_rational(c), k)?,
            }
        }
        Ok(())
    }
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly { coeffs: vec![c] }.normalized()
    }

    pub fn one() -> Self {
        Self::constant(one())
    }

    /// `x`
    pub fn x() -> Self {
        RatPoly {
            coeffs: vec![zero(), one()],
        }
    }

    /// `x - r`
    pub fn x_minus(r: &Rational) -> Self {
        RatPoly {
            coeffs: vec![-r.clone(), one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        RatPoly { coeffs }.normalized()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial. Panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(zero)
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        RatPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        RatPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RatPoly::from_coeffs(out)
    }

    /// Euclidean division: returns `(q, r)` with `self = q*divisor + r` and
    /// `r == 0` or `deg r < deg divisor`. Panics if `divisor == 0`.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree();
        let dlead = divisor.leading().clone();
        let mut rem = self.clone();
        let mut quot = vec![zero(); self.coeffs.len().saturating_sub(dd)];
        while !rem.is_zero() && rem.degree() >= dd {
            let k = rem.degree() - dd;
            let f = rem.leading() / &dlead;
            for i in 0..=dd {
                let c = &divisor.coeffs[i] * &f;
                rem.coeffs[k + i] -= c;
            }
            rem = rem.normalized();
            quot[k] = f;
        }
        (RatPoly::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (gcd of anything with 0 is the other argument, made monic).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let inv = one() / self.leading();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat(k as i64))
            .collect();
        RatPoly::from_coeffs(out)
    }

    /// `p(-x)`
    pub fn flip_sign(&self) -> RatPoly {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        RatPoly::from_coeffs(out)
    }

    /// Squarefree part `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> RatPoly {
        assert!(!self.is_zero());
        if self.degree() == 0 {
            return RatPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Yun-style squarefree decomposition: returns `[(f_1, 1), (f_2, 2), ...]`
    /// with `p = lc * prod f_i^i`, each `f_i` monic squarefree, pairwise
    /// coprime (factors with `f_i == 1` are omitted).
    pub fn squarefree_decomposition(&self) -> Vec<(RatPoly, usize)> {
        assert!(!self.is_zero());
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let p = self.monic();
        let dp = p.derivative();
        let g = p.gcd(&dp);
        let mut b = p.div_exact(&g);
        let mut c = dp.div_exact(&g);
        let mut i = 1usize;
        while b.degree() > 0 {
            let d = c.sub(&b.derivative());
            let f = if d.is_zero() { b.monic() } else { b.gcd(&d) };
            if f.degree() > 0 {
                out.push((f.clone(), i));
            }
            b = b.div_exact(&f);
            c = if d.is_zero() {
                RatPoly::zero()
            } else {
                d.div_exact(&f)
            };
            i += 1;
        }
        out
    }

    /// Number of roots at zero, i.e. the largest `m` with `x^m | p`.
    pub fn order_at_zero(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide out `x^m`.
    pub fn shift_down(&self, m: usize) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs[m.min(self.coeffs.len())..].to_vec())
    }

    /// Sign of `p` at `+inf` (`0` for the zero polynomial).
    fn sign_at_pos_inf(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.leading().is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign of `p` at `-inf`.
    fn sign_at_neg_inf(&self) -> i32 {
        let s = self.sign_at_pos_inf();
        if s == 0 {
            0
        } else if self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }
}

/// Generalized Sturm chain of the pair `(s0, s1)`:
/// `S_0 = s0, S_1 = s1, S_{k+1} = -rem(S_{k-1}, S_k)`, stopping at zero.
pub fn sturm_chain(s0: &RatPoly, s1: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![s0.clone()];
    if s1.is_zero() {
        return chain;
    }
    chain.push(s1.clone());
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at_neg_inf(chain: &[RatPoly]) -> usize {
    variations(chain.iter().map(|p| p.sign_at_neg_inf()))
}

fn variations_at_pos_inf(chain: &[RatPoly]) -> usize {
    variations(chain.iter().map(|p| p.sign_at_pos_inf()))
}

fn variations_at(chain: &[RatPoly], x: &Rational) -> usize {
    variations(chain.iter().map(|p| {
        let v = p.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }))
}

/// Cauchy index of the rational function `num/den` over the whole real line:
/// the number of poles where `num/den` jumps from -inf to +inf minus the
/// number where it jumps from +inf to -inf.
pub fn cauchy_index(num: &RatPoly, den: &RatPoly) -> i64 {
    if num.is_zero() || den.is_zero() {
        return 0;
    }
    let chain = sturm_chain(den, num);
    variations_at_neg_inf(&chain) as i64 - variations_at_pos_inf(&chain) as i64
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
/// `p` must be nonzero; multiplicities are ignored (classical Sturm count).
pub fn count_real_roots_in(p: &RatPoly, a: &Rational, b: &Rational) -> usize {
    assert!(!p.is_zero());
    assert!(a < b);
    let q = p.squarefree_part();
    if q.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(&q, &q.derivative());
    let va = variations_at(&chain, a);
    let vb = variations_at(&chain, b);
    // Sturm counts roots in (a, b]; an endpoint root of the squarefree part
    // at b is excluded by nudging via the evaluation convention below.
    let mut n = va.saturating_sub(vb);
    if q.eval(b).is_zero() {
        n = n.saturating_sub(1);
    }
    n
}

/// Number of distinct real roots of `p` on the whole line.
pub fn count_real_roots(p: &RatPoly) -> usize {
    assert!(!p.is_zero());
    let q = p.squarefree_part();
    if q.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(&q, &q.derivative());
    variations_at_neg_inf(&chain).saturating_sub(variations_at_pos_inf(&chain))
}

/// Number of real roots of `p` counted with multiplicity.
pub fn count_real_roots_with_multiplicity(p: &RatPoly) -> usize {
    p.squarefree_decomposition()
        .iter()
        .map(|(f, m)| m * count_real_roots(f))
        .sum()
}

/// Number of nonzero real roots of `p` counted with multiplicity.
pub fn count_nonzero_real_roots_with_multiplicity(p: &RatPoly) -> usize {
    let m = p.order_at_zero();
    count_real_roots_with_multiplicity(&p.shift_down(m))
}
