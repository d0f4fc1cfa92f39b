//! Exact decisions about root locations of rational polynomials.
//!
//! The central object is [`spectrum_summary`]: exact counts of roots in the
//! open half-planes and on the imaginary axis, with multiplicity. The
//! pipeline is
//!
//! 1. split off the root at zero (`x^m`),
//! 2. detect imaginary-axis roots through `p(iy) = u(y) + i v(y)` and
//!    `gcd(u, v)`, whose nonzero real roots are counted by Sturm sequences,
//! 3. deflate the full symmetric factor `gcd(p(x), ±p(-x))` (it carries every
//!    axis root plus half-plane-balanced pairs) and count the open half-plane
//!    roots of the remainder through the Cauchy index of `v/u`, adding the
//!    balanced pairs back.
//!
//! Nothing on this path touches floating point. A double-precision root
//! finder is provided for cross-checks and is flagged as diagnostic.

use crate::matrix::Matrix;
use crate::poly::{cauchy_index, count_nonzero_real_roots_with_multiplicity, RatPoly};
use crate::scalar::{to_f64, zero, Rational};
use crate::subspace::Subspace;

/// Exact root-location counts of a rational polynomial, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSummary {
    /// Roots with strictly positive real part.
    pub n_pos: usize,
    /// Roots with strictly negative real part.
    pub n_neg: usize,
    /// Roots with zero real part (including zero itself).
    pub n_zero_real: usize,
    /// Whether a nonzero purely imaginary root exists.
    pub has_nonzero_imaginary_axis_root: bool,
    /// Whether zero is a root.
    pub zero_is_root: bool,
}

impl SpectrumSummary {
    /// No root on the imaginary axis except possibly zero, the standing
    /// exponentiality condition for semidirect-product derivations.
    pub fn spectrum_meets_axis_only_at_zero(&self) -> bool {
        !self.has_nonzero_imaginary_axis_root
    }
}

/// Split `p(iy)` into real and imaginary parts `(u, v)` with rational
/// coefficients: `p(iy) = u(y) + i v(y)`.
fn real_imag_on_axis(p: &RatPoly) -> (RatPoly, RatPoly) {
    let n = p.coeffs().len();
    let mut u = vec![zero(); n];
    let mut v = vec![zero(); n];
    for (k, c) in p.coeffs().iter().enumerate() {
        match k % 4 {
            0 => u[k] = c.clone(),
            1 => v[k] = c.clone(),
            2 => u[k] = -c.clone(),
            _ => v[k] = -c.clone(),
        }
    }
    (RatPoly::from_coeffs(u), RatPoly::from_coeffs(v))
}

/// `n_left - n_right` for a polynomial with no imaginary-axis roots, by the
/// Cauchy-index form of the Routh–Hurwitz theorem. The index is taken of
/// `v/u` for even degree and `u/v` for odd degree, where
/// `p(iy) = u(y) + i v(y)`.
fn left_minus_right(p: &RatPoly) -> i64 {
    debug_assert!(!p.is_zero());
    if p.degree() == 0 {
        return 0;
    }
    let (u, v) = real_imag_on_axis(p);
    if p.degree() % 2 == 0 {
        -cauchy_index(&v, &u)
    } else {
        cauchy_index(&u, &v)
    }
}

/// Exact spectrum summary of a nonzero polynomial. Panics on the zero
/// polynomial (callers treat that as a contract violation).
pub fn spectrum_summary(p: &RatPoly) -> SpectrumSummary {
    assert!(!p.is_zero(), "spectrum of the zero polynomial");
    let m = p.order_at_zero();
    let p1 = p.shift_down(m);
    if p1.degree() == 0 {
        return SpectrumSummary {
            n_pos: 0,
            n_neg: 0,
            n_zero_real: m,
            has_nonzero_imaginary_axis_root: false,
            zero_is_root: m > 0,
        };
    }

    // Imaginary-axis detection per the u, v decomposition.
    let (u, v) = real_imag_on_axis(&p1);
    let g = if v.is_zero() { u.monic() } else { u.gcd(&v) };
    let n_axis = if g.is_zero() || g.degree() == 0 {
        0
    } else {
        count_nonzero_real_roots_with_multiplicity(&g)
    };

    // Symmetric factor a(x) = gcd(p1(x), p1(-x)): contains every axis root
    // with full multiplicity, plus (λ, -λ) pairs that are balanced between
    // the two half-planes.
    let a = p1.gcd(&p1.flip_sign());
    let deflated = p1.div_exact(&a);
    let balanced = (a.degree() - n_axis) / 2;
    debug_assert_eq!((a.degree() - n_axis) % 2, 0);

    let diff = left_minus_right(&deflated);
    let total = deflated.degree() as i64;
    debug_assert_eq!((total + diff) % 2, 0);
    let n_left = ((total + diff) / 2) as usize;
    let n_right = ((total - diff) / 2) as usize;

    SpectrumSummary {
        n_pos: n_right + balanced,
        n_neg: n_left + balanced,
        n_zero_real: m + n_axis,
        has_nonzero_imaginary_axis_root: n_axis > 0,
        zero_is_root: m > 0,
    }
}

/// True iff every root satisfies `sign * Re(root) > 0`.
pub fn all_roots_strict_half_plane(p: &RatPoly, sign: i32) -> bool {
    assert!(sign == 1 || sign == -1);
    let s = spectrum_summary(p);
    if s.n_zero_real > 0 {
        return false;
    }
    if sign > 0 {
        s.n_neg == 0
    } else {
        s.n_pos == 0
    }
}

/// True iff roots `w1, w2` exist with `Re w1 <= 0 <= Re w2`; equivalently,
/// the roots are not confined to either open half-plane. A root with zero
/// real part satisfies both inequalities at once.
pub fn mixed_real_part_exists(p: &RatPoly) -> bool {
    !all_roots_strict_half_plane(p, 1) && !all_roots_strict_half_plane(p, -1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralError {
    /// The subspace is not invariant under the map; carries a witness basis
    /// vector whose image leaves the subspace.
    NotInvariant { witness: Vec<Rational> },
}

impl std::fmt::Display for SpectralError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectralError::NotInvariant { .. } => {
                write!(f, "subspace is not invariant under the map")
            }
        }
    }
}

impl std::error::Error for SpectralError {}

/// Restriction of `m` to an invariant subspace, in the subspace's echelon
/// basis coordinates.
pub fn restrict(m: &Matrix, s: &Subspace) -> Result<Matrix, SpectralError> {
    assert_eq!(m.cols(), s.ambient_dim());
    let k = s.dim();
    let mut out = Matrix::zero(k, k);
    for (j, b) in s.basis().iter().enumerate() {
        let img = m.apply(b);
        let coords = s
            .coordinates_of(&img)
            .ok_or_else(|| SpectralError::NotInvariant { witness: b.clone() })?;
        for i in 0..k {
            out.set(i, j, coords[i].clone());
        }
    }
    Ok(out)
}

/// The induced map on the canonical complement coordinates of an invariant
/// subspace (the quotient map in the same coordinates `LieAlgebra::quotient`
/// uses).
pub fn induced_on_quotient(m: &Matrix, s: &Subspace) -> Result<Matrix, SpectralError> {
    // invariance check happens in restrict
    restrict(m, s)?;
    let q_idx = s.complement_indices();
    let q = q_idx.len();
    let mut out = Matrix::zero(q, q);
    for (b, &jb) in q_idx.iter().enumerate() {
        let img = m.col(jb);
        let r = s.reduce(&img);
        for (a, &ia) in q_idx.iter().enumerate() {
            out.set(a, b, r[ia].clone());
        }
    }
    Ok(out)
}

/// Diagonalizability over ℂ: the squarefree part `q` of the characteristic
/// polynomial must annihilate the matrix.
pub fn is_diagonalizable(m: &Matrix) -> bool {
    assert!(m.is_square());
    if m.rows() == 0 {
        return true;
    }
    let q = m.char_poly().squarefree_part();
    m.poly_at(&q).is_zero()
}

/// Diagnostic double-precision roots of a rational polynomial by the
/// Durand–Kerner iteration. Never used on a decision path; the exact
/// machinery above is the ground truth.
pub fn numeric_roots_diagnostic(p: &RatPoly) -> Vec<(f64, f64)> {
    assert!(!p.is_zero());
    let m = p.order_at_zero();
    let q = p.shift_down(m);
    let mut roots = vec![(0.0f64, 0.0f64); m];
    if q.degree() == 0 {
        return roots;
    }
    let n = q.degree();
    let lead = to_f64(q.leading());
    let coeffs: Vec<(f64, f64)> = q.coeffs().iter().map(|c| (to_f64(c) / lead, 0.0)).collect();

    let cmul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let csub = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0, a.1 - b.1);
    let cdiv = |a: (f64, f64), b: (f64, f64)| {
        let d = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
    };
    let eval = |z: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = cmul(acc, z);
            acc = (acc.0 + c.0, acc.1 + c.1);
        }
        acc
    };

    // standard non-real starting points on a spiral
    let mut zs: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let r = 0.4 + 0.9 * (k as f64 + 1.0) / (n as f64);
            let t = 0.9 * (k as f64) + 0.5;
            (r * t.cos(), r * t.sin())
        })
        .collect();
    for _ in 0..400 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut denom = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom = cmul(denom, csub(zs[i], zs[j]));
                }
            }
            let delta = cdiv(eval(zs[i]), denom);
            zs[i] = csub(zs[i], delta);
            moved += delta.0.abs() + delta.1.abs();
        }
        if moved < 1e-14 {
            break;
        }
    }
    roots.extend(zs);
    roots
}

/// One matrix where the double-precision oracle could not confirm the exact
/// counts because some numeric real part sat inside the screening threshold.
#[derive(Debug, Clone)]
pub struct CrosscheckDisagreement {
    pub matrix: Matrix,
    pub exact: SpectrumSummary,
    pub min_abs_re: f64,
    /// Exact proof that a root with zero real part exists (zero itself or a
    /// nonzero imaginary-axis root).
    pub has_axis_certificate: bool,
}

#[derive(Debug, Clone)]
pub struct CrosscheckReport {
    pub checked: usize,
    /// Matrices where all numeric |Re| cleared the threshold and the counts
    /// matched exactly.
    pub confirmed: usize,
    pub disagreements: Vec<CrosscheckDisagreement>,
}

impl CrosscheckReport {
    /// Every sub-threshold case carries an exact axis-root certificate.
    pub fn all_disagreements_certified(&self) -> bool {
        self.disagreements.iter().all(|d| d.has_axis_certificate)
    }
}

/// Cross-check the exact spectrum summary against the diagnostic numeric
/// eigensolver on random rational matrices. Wherever every numeric real part
/// clears `threshold` in absolute value the counts must agree (the exact
/// method is the ground truth near the axis); sub-threshold cases are
/// collected for certificate inspection.
pub fn crosscheck_random_matrices(
    count: usize,
    dims: std::ops::RangeInclusive<usize>,
    seed: u64,
    threshold: f64,
    mode: crate::exec::ExecMode,
) -> CrosscheckReport {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let lo = *dims.start();
    let hi = *dims.end();
    let matrices: Vec<Matrix> = (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            Matrix::from_fn(n, n, |_, _| {
                let p = rng.gen_range(-6i64..=6);
                let q = rng.gen_range(1i64..=3);
                crate::scalar::ratio(p, q)
            })
        })
        .collect();
    let outcomes = crate::exec::map_collect(mode, matrices, |m| {
        let p = m.char_poly();
        let exact = spectrum_summary(&p);
        let roots = numeric_roots_diagnostic(&p);
        let min_abs_re = roots
            .iter()
            .map(|r| r.0.abs())
            .fold(f64::INFINITY, f64::min);
        if min_abs_re > threshold {
            let pos = roots.iter().filter(|r| r.0 > 0.0).count();
            let neg = roots.iter().filter(|r| r.0 < 0.0).count();
            let agrees = pos == exact.n_pos && neg == exact.n_neg && exact.n_zero_real == 0;
            (true, agrees, m, exact, min_abs_re)
        } else {
            (false, false, m, exact, min_abs_re)
        }
    });
    let mut report = CrosscheckReport {
        checked: outcomes.len(),
        confirmed: 0,
        disagreements: Vec::new(),
    };
    for (clear, agrees, matrix, exact, min_abs_re) in outcomes {
        if clear {
            assert!(
                agrees,
                "numeric oracle disagrees with exact counts away from the axis: {matrix:?} -> {exact:?}"
            );
            report.confirmed += 1;
        } else {
            let has_axis_certificate = exact.n_zero_real > 0;
            report.disagreements.push(CrosscheckDisagreement {
                matrix,
                exact,
                min_abs_re,
                has_axis_certificate,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(cs: &[i64]) -> RatPoly {
        RatPoly::from_i64(cs)
    }

    #[test]
    fn summary_simple_cases() {
        // x^2 - 3x + 2: roots 1, 2
        let s = spectrum_summary(&p(&[2, -3, 1]));
        assert_eq!((s.n_pos, s.n_neg, s.n_zero_real), (2, 0, 0));
        assert!(!s.zero_is_root && !s.has_nonzero_imaginary_axis_root);

        // x^3 + x = x(x^2+1): roots 0, ±i
        let s = spectrum_summary(&p(&[0, 1, 0, 1]));
        assert_eq!((s.n_pos, s.n_neg, s.n_zero_real), (0, 0, 3));
        assert!(s.zero_is_root && s.has_nonzero_imaginary_axis_root);

        // (x-2)(x+1)
        let s = spectrum_summary(&p(&[-2, -1, 1]));
        assert_eq!((s.n_pos, s.n_neg), (1, 1));
    }

    #[test]
    fn summary_counts_sum_to_degree() {
        let cases: Vec<RatPoly> = vec![
            p(&[1, 1]),
            p(&[-1, 1]),
            p(&[1, 3, 1]),
            p(&[4, 0, 0, 0, 1]), // x^4 + 4, roots ±1±i
            p(&[1, 2, 3, 4, 5]),
            p(&[0, 0, 1, 1, 1, 1]),
            p(&[1, 0, 2, 0, 1]), // (x^2+1)^2
            p(&[-6, 11, -6, 1]),
        ];
        for q in cases {
            let s = spectrum_summary(&q);
            assert_eq!(s.n_pos + s.n_neg + s.n_zero_real, q.degree());
        }
    }

    #[test]
    fn summary_x4_plus_4_is_balanced() {
        // roots ±1±i: two in each open half-plane, v(y) vanishes identically
        let s = spectrum_summary(&p(&[4, 0, 0, 0, 1]));
        assert_eq!((s.n_pos, s.n_neg, s.n_zero_real), (2, 2, 0));
    }

    #[test]
    fn summary_repeated_axis_roots() {
        // (x^2+1)^2 x^3
        let q = p(&[1, 0, 2, 0, 1]).mul(&p(&[0, 0, 0, 1]));
        let s = spectrum_summary(&q);
        assert_eq!(s.n_zero_real, 7);
        assert!(s.zero_is_root && s.has_nonzero_imaginary_axis_root);
    }

    #[test]
    fn summary_symmetric_off_axis_pairs() {
        // (x-1)(x+1)(x^2+x+5): symmetric real pair plus a complex pair
        // with negative real part
        let q = p(&[-1, 0, 1]).mul(&p(&[5, 1, 1]));
        let s = spectrum_summary(&q);
        assert_eq!((s.n_pos, s.n_neg, s.n_zero_real), (1, 3, 0));
    }

    #[test]
    fn left_half_plane_stability() {
        // (x+1)^3: all left
        let q = p(&[1, 3, 3, 1]);
        assert!(all_roots_strict_half_plane(&q, -1));
        assert!(!all_roots_strict_half_plane(&q, 1));
        assert!(!mixed_real_part_exists(&q));
    }

    #[test]
    fn half_plane_predicates() {
        assert!(all_roots_strict_half_plane(&p(&[2, -3, 1]), 1));
        assert!(!all_roots_strict_half_plane(&p(&[0, 0, 1]), 1));
        assert!(!all_roots_strict_half_plane(&p(&[0, 0, 1]), -1));
        assert!(mixed_real_part_exists(&p(&[-2, -1, 1]))); // (x-2)(x+1)
        assert!(!mixed_real_part_exists(&p(&[2, -3, 1]))); // (x-1)(x-2)
        assert!(mixed_real_part_exists(&p(&[0, -1, 1]))); // x(x-1)
    }

    #[test]
    fn constant_polynomial_has_empty_spectrum() {
        let s = spectrum_summary(&p(&[5]));
        assert_eq!((s.n_pos, s.n_neg, s.n_zero_real), (0, 0, 0));
        assert!(all_roots_strict_half_plane(&p(&[5]), 1));
        assert!(all_roots_strict_half_plane(&p(&[5]), -1));
    }

    #[test]
    fn restriction_and_quotient_split_char_poly() {
        // heisenberg(1) with D = diag(2,-1,1) on (X1,Y1,Z), i.e. the matrix
        // diag(1,-1,2) in basis order (Z,Y1,X1); S = center = span{Z}
        let d = Matrix::diagonal(&[rat(1), rat(-1), rat(2)]);
        let s = Subspace::from_spans(3, vec![crate::matrix::unit_vec(3, 0)]);
        let r = restrict(&d, &s).unwrap();
        assert_eq!(r, Matrix::diagonal(&[rat(1)]));
        let q = induced_on_quotient(&d, &s).unwrap();
        assert_eq!(q, Matrix::diagonal(&[rat(-1), rat(2)]));
        assert_eq!(r.char_poly().mul(&q.char_poly()), d.char_poly());

        // whole space: restriction is the map, quotient is empty
        let whole = Subspace::whole(3);
        assert_eq!(restrict(&d, &whole).unwrap(), d);
        assert_eq!(induced_on_quotient(&d, &whole).unwrap().rows(), 0);
    }

    #[test]
    fn restriction_rejects_non_invariant() {
        let m = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let s = Subspace::from_spans(2, vec![crate::matrix::unit_vec(2, 0)]);
        assert!(matches!(
            restrict(&m, &s),
            Err(SpectralError::NotInvariant { .. })
        ));
    }

    #[test]
    fn diagonalizability() {
        assert!(is_diagonalizable(&Matrix::diagonal(&[
            rat(1),
            rat(1),
            rat(2)
        ])));
        let jordan = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(!is_diagonalizable(&jordan));
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(is_diagonalizable(&rot)); // over C
    }

    #[test]
    fn numeric_roots_match_exact_counts() {
        let q = p(&[-6, 11, -6, 1]); // roots 1, 2, 3
        let roots = numeric_roots_diagnostic(&q);
        assert_eq!(roots.len(), 3);
        let mut res: Vec<f64> = roots.iter().map(|r| r.0).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((res[0] - 1.0).abs() < 1e-8);
        assert!((res[2] - 3.0).abs() < 1e-8);
    }
}
