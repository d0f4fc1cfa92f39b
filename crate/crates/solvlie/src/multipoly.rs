//! Sparse multivariate polynomials over ℚ.
//!
//! Used for the symbolic coadjoint-orbit matrices, whose entries are linear
//! forms in the covector coordinates. Degrees stay small (a Pfaffian of a
//! `2m x 2m` matrix of linear forms has degree `m`), so a monomial map with
//! dense exponent vectors is plenty.

use crate::scalar::{format_rational, one, zero, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rational(c))?;
            for (v, e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{v}")?,
                    _ => write!(f, "*x{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut m = vec![0u32; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(m, one());
        p
    }

    /// The linear form `sum coeffs[i] * x_i`.
    pub fn linear_form(coeffs: &[Rational]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut m = vec![0u32; nvars];
                m[i] = 1;
                p.terms.insert(m, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.insert_term(m, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(self.nvars, one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter().enumerate() {
                for _ in 0..*e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        acc
    }

    /// Any one term, for witness hunting.
    pub fn some_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    /// Decide whether `self == c * (x_0^2 + ... + x_{n-1}^2)^m` for some
    /// nonzero rational `c`, returning `(c, m)` on success. Such a
    /// polynomial vanishes only at the origin over the reals, which is
    /// exactly the certificate the constant-orbit-dimension check needs.
    pub fn as_norm_power(&self) -> Option<(Rational, usize)> {
        if self.is_zero() {
            return None;
        }
        let deg = self.total_degree();
        if deg % 2 != 0 {
            return None;
        }
        let m = (deg / 2) as usize;
        let norm = {
            let mut p = Self::zero(self.nvars);
            for i in 0..self.nvars {
                let mut mon = vec![0u32; self.nvars];
                mon[i] = 2;
                p.insert_term(mon, one());
            }
            p
        };
        let target = norm.pow(m);
        let (mon, tc) = target.some_term()?;
        let c = self.terms.get(mon)? / tc;
        if self == &target.scale(&c) {
            Some((c, m))
        } else {
            None
        }
    }
}

/// Memoized Pfaffian evaluator over the principal submatrices of one fixed
/// symbolic skew matrix of dimension at most 64.
pub struct PfaffianTable<'a> {
    entries: &'a [Vec<MultiPoly>],
    nvars: usize,
    memo: std::collections::HashMap<u64, Option<MultiPoly>>,
    /// Abort knob: give up when the memo grows past this many states.
    budget_states: usize,
}

impl<'a> PfaffianTable<'a> {
    pub fn new(entries: &'a [Vec<MultiPoly>], budget_states: usize) -> Self {
        assert!(entries.len() <= 64);
        let nvars = entries
            .first()
            .and_then(|r| r.first())
            .map_or(0, |p| p.nvars());
        PfaffianTable {
            entries,
            nvars,
            memo: std::collections::HashMap::new(),
            budget_states,
        }
    }

    /// Pfaffian of the principal submatrix on the index set `mask`
    /// (even popcount). `None` means the state budget was exhausted.
    pub fn pfaffian(&mut self, mask: u64) -> Option<MultiPoly> {
        debug_assert_eq!(mask.count_ones() % 2, 0);
        if mask == 0 {
            return Some(MultiPoly::constant(self.nvars, one()));
        }
        if let Some(hit) = self.memo.get(&mask) {
            return hit.clone();
        }
        if self.memo.len() >= self.budget_states {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << i);
        let mut acc = MultiPoly::zero(self.nvars);
        // position of j within the active set decides the sign
        let mut pos = 1usize; // i itself is position 1
        let mut js = rest;
        let mut ok = true;
        while js != 0 {
            let j = js.trailing_zeros() as usize;
            js &= js - 1;
            pos += 1;
            let e = &self.entries[i][j];
            if e.is_zero() {
                continue;
            }
            match self.pfaffian(rest & !(1u64 << j)) {
                Some(sub) => {
                    let term = e.mul(&sub);
                    acc = if pos % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        let result = if ok { Some(acc) } else { None };
        self.memo.insert(mask, result.clone());
        result
    }
}
