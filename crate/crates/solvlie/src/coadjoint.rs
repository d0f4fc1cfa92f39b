//! Coadjoint-orbit analysis: isotropy subalgebras, orbit dimensions, open
//! orbits and exact-symplectic detection.
//!
//! The orbit matrix `M_xi[i][j] = <xi, [e_i, e_j]>` is skew-symmetric and
//! linear in `xi`; everything here is a statement about its rank. Two rank
//! modes exist:
//!
//! * randomized (default): rank at `k` covectors drawn from a fixed-seed
//!   sampler whose box size scales with the structure-constant magnitudes.
//!   The maximum observed rank is a certified lower bound, and by the
//!   Schwartz–Zippel bound it is the true generic rank except with
//!   probability at most `(deg/(2B+1))^k <= 4^{-k}` (degree of the rank-r
//!   minor polynomials is at most `dim <= (2B+1)/4` by the choice of `B`);
//!   `k = 8` keeps that below `2^{-16}`.
//! * exact: a certified two-sided answer. The lower bound is a witness
//!   covector; the upper bound is either the structural bound
//!   `rank <= dim - dim(center)` when the witness attains it, or the
//!   identical vanishing of all `(r+2) x (r+2)` principal subpfaffians of
//!   the symbolic orbit matrix.
//!
//! Verdict-affecting callers use the exact mode only.

use crate::exec::{self, ExecMode};
use crate::lie::{LieAlgebra, LieError};
use crate::matrix::{unit_vec, Matrix, RatVec};
use crate::multipoly::{MultiPoly, PfaffianTable};
use crate::scalar::{one, rat, zero, Rational};
use crate::subspace::Subspace;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Element of the dual space, paired against basis vectors coordinatewise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covector {
    coords: RatVec,
}

impl Covector {
    pub fn new(coords: RatVec) -> Self {
        Covector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Covector {
            coords: crate::matrix::vec_zero(dim),
        }
    }

    /// Dual basis vector `e_i^*`.
    pub fn dual_basis(dim: usize, i: usize) -> Self {
        Covector {
            coords: unit_vec(dim, i),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn pair(&self, v: &[Rational]) -> Rational {
        assert_eq!(self.coords.len(), v.len());
        self.coords.iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// Default sample count for the randomized rank mode.
pub const DEFAULT_RANK_SAMPLES: usize = 8;
/// Default sampler seed (CLI `--seed` overrides it).
pub const DEFAULT_SEED: u64 = 0x50_1f_1e;
/// Symbolic certification is attempted only up to this ambient dimension.
const SYMBOLIC_DIM_BUDGET: usize = 12;
/// State cap for memoized subset-Pfaffian recursions.
const PFAFFIAN_STATE_BUDGET: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMode {
    /// Fixed-seed sampling; the answer is a certified lower bound.
    Randomized { seed: u64, samples: usize },
    /// Witness plus symbolic certification; the answer is exact.
    Exact,
}

impl Default for RankMode {
    fn default() -> Self {
        RankMode::Randomized {
            seed: DEFAULT_SEED,
            samples: DEFAULT_RANK_SAMPLES,
        }
    }
}

/// Result of a generic-rank computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericRank {
    pub value: usize,
    /// True when the value is certified to be the exact maximum over all
    /// covectors (always in exact mode within budget; in randomized mode the
    /// value is only a lower bound and this stays false).
    pub certified: bool,
}

/// Orbit matrix `M_xi[i][j] = <xi, [e_i, e_j]>`.
pub fn orbit_matrix(a: &LieAlgebra, xi: &Covector) -> Result<Matrix, LieError> {
    if xi.dim() != a.dim() {
        return Err(LieError::DimensionMismatch {
            expected: a.dim(),
            got: xi.dim(),
        });
    }
    let n = a.dim();
    let mut m = Matrix::zero(n, n);
    for ((i, j), v) in a.bracket_entries() {
        let mut val = zero();
        for (k, c) in v {
            val += &xi.coords[*k] * c;
        }
        if !val.is_zero() {
            m.set(*i, *j, val.clone());
            m.set(*j, *i, -val);
        }
    }
    Ok(m)
}

/// The orbit matrix with symbolic covector coordinates: entry `(i, j)` is the
/// linear form `<xi, [e_i, e_j]>` in `dim` variables.
pub fn symbolic_orbit_matrix(a: &LieAlgebra) -> Vec<Vec<MultiPoly>> {
    let n = a.dim();
    let mut m = vec![vec![MultiPoly::zero(n); n]; n];
    for ((i, j), v) in a.bracket_entries() {
        let mut coeffs = crate::matrix::vec_zero(n);
        for (k, c) in v {
            coeffs[*k] = c.clone();
        }
        let form = MultiPoly::linear_form(&coeffs);
        m[*j][*i] = form.neg();
        m[*i][*j] = form;
    }
    m
}

/// Coadjoint isotropy `g(xi) = ker M_xi`.
pub fn isotropy(a: &LieAlgebra, xi: &Covector) -> Result<Subspace, LieError> {
    Ok(Subspace::kernel_of(&orbit_matrix(a, xi)?))
}

/// Orbit dimension `rank M_xi` (always even).
pub fn orbit_dim(a: &LieAlgebra, xi: &Covector) -> Result<usize, LieError> {
    Ok(orbit_matrix(a, xi)?.rank())
}

/// Isotropy, orbit dimension and the point itself, bundled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitData {
    pub point: Covector,
    pub isotropy: Subspace,
    pub orbit_dim: usize,
}

pub fn orbit_data(a: &LieAlgebra, xi: Covector) -> Result<OrbitData, LieError> {
    let iso = isotropy(a, &xi)?;
    let od = a.dim() - iso.dim();
    debug_assert_eq!(od % 2, 0);
    Ok(OrbitData {
        point: xi,
        isotropy: iso,
        orbit_dim: od,
    })
}

/// Sampling box bound `B = 2 * dim * max |numerator|` over the structure
/// constants (at least 2*dim).
fn sampling_bound(a: &LieAlgebra) -> i64 {
    let mut max_num = BigInt::from(1);
    for (_, v) in a.bracket_entries() {
        for (_, c) in v {
            let n = c.numer().abs();
            if n > max_num {
                max_num = n;
            }
        }
    }
    let dim = a.dim() as i64;
    let capped = max_num.to_i64().unwrap_or(i64::MAX / (4 * dim.max(1)));
    (2 * dim * capped).max(2 * dim)
}

/// Deterministic fixed-seed covector sampler with integer entries in
/// `[-B, B]`.
pub fn sample_covectors(a: &LieAlgebra, count: usize, seed: u64) -> Vec<Covector> {
    let b = sampling_bound(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Covector::new((0..a.dim()).map(|_| rat(rng.gen_range(-b..=b))).collect()))
        .collect()
}

/// Witness pool for exact-mode sweeps: dual basis vectors, their running
/// sums, and seeded samples.
fn witness_pool(a: &LieAlgebra, seed: u64, extra: usize) -> Vec<Covector> {
    let n = a.dim();
    let mut pool = Vec::new();
    for i in 0..n {
        pool.push(Covector::dual_basis(n, i));
    }
    let mut acc = crate::matrix::vec_zero(n);
    for i in 0..n {
        acc[i] = one();
        pool.push(Covector::new(acc.clone()));
    }
    pool.extend(sample_covectors(a, extra, seed));
    pool
}

fn even_floor(x: usize) -> usize {
    x - (x % 2)
}

/// Search a nonzero rational point of a nonzero polynomial: seeded samples
/// first, then a small systematic grid. The polynomial is nonzero, so the
/// grid of side `deg+1` must contain one; the budget is generous enough for
/// every matrix this crate builds.
fn nonzero_point(p: &MultiPoly, seed: u64) -> Option<RatVec> {
    let n = p.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37);
    let deg = p.total_degree() as i64;
    let b = (deg + 1).max(4);
    for _ in 0..256 {
        let pt: RatVec = (0..n).map(|_| rat(rng.gen_range(-b..=b))).collect();
        if !p.eval(&pt).is_zero() {
            return Some(pt);
        }
    }
    None
}

/// Generic (maximal) coadjoint orbit dimension.
pub fn generic_orbit_dim(a: &LieAlgebra, mode: RankMode) -> GenericRank {
    match mode {
        RankMode::Randomized { seed, samples } => {
            let best = sample_covectors(a, samples, seed)
                .iter()
                .map(|xi| orbit_dim(a, xi).expect("dims match"))
                .max()
                .unwrap_or(0);
            GenericRank {
                value: best,
                certified: false,
            }
        }
        RankMode::Exact => generic_orbit_dim_exact(a),
    }
}

fn generic_orbit_dim_exact(a: &LieAlgebra) -> GenericRank {
    let n = a.dim();
    if a.is_abelian() || n == 0 {
        return GenericRank {
            value: 0,
            certified: true,
        };
    }
    let center_dim = a.center().dim();
    let structural_bound = even_floor(n - center_dim);
    // taking the maximum keeps the sweep order-insensitive, so it may fan out
    let ranks = exec::map_collect(
        ExecMode::default(),
        witness_pool(a, DEFAULT_SEED, DEFAULT_RANK_SAMPLES),
        |xi| orbit_dim(a, &xi).expect("dims match"),
    );
    let mut best = ranks.into_iter().max().unwrap_or(0);
    if best == structural_bound {
        // the centre sits inside every isotropy, so the bound is exact
        return GenericRank {
            value: best,
            certified: true,
        };
    }
    if n > SYMBOLIC_DIM_BUDGET {
        return GenericRank {
            value: best,
            certified: false,
        };
    }
    // Symbolic certification loop: either all (best+2)-subset pfaffians
    // vanish identically (max rank reached) or a nonvanishing one hands us a
    // better witness.
    let sym = symbolic_orbit_matrix(a);
    let mut table = PfaffianTable::new(&sym, PFAFFIAN_STATE_BUDGET);
    loop {
        match scan_subsets(&mut table, n, best + 2) {
            SubsetScan::AllVanish => {
                return GenericRank {
                    value: best,
                    certified: true,
                };
            }
            SubsetScan::Budget => {
                return GenericRank {
                    value: best,
                    certified: false,
                };
            }
            SubsetScan::Found(pf) => {
                let Some(pt) = nonzero_point(&pf, DEFAULT_SEED) else {
                    return GenericRank {
                        value: best,
                        certified: false,
                    };
                };
                let r = orbit_dim(a, &Covector::new(pt)).expect("dims match");
                debug_assert!(r > best);
                if r <= best {
                    return GenericRank {
                        value: best,
                        certified: false,
                    };
                }
                best = r;
                if best == structural_bound {
                    return GenericRank {
                        value: best,
                        certified: true,
                    };
                }
            }
        }
    }
}

enum SubsetScan {
    /// Every size-k principal subpfaffian vanishes identically.
    AllVanish,
    /// This one does not.
    Found(MultiPoly),
    /// The state budget ran out before the scan finished.
    Budget,
}

/// Scan all size-`k` principal subpfaffians of the symbolic matrix.
fn scan_subsets(table: &mut PfaffianTable, n: usize, k: usize) -> SubsetScan {
    if k > n {
        return SubsetScan::AllVanish;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1u64 << i));
        match table.pfaffian(mask) {
            None => return SubsetScan::Budget,
            Some(pf) if !pf.is_zero() => return SubsetScan::Found(pf),
            Some(_) => {}
        }
        // advance to the next k-combination of {0, ..., n-1}
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return SubsetScan::AllVanish;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Symbolic Pfaffian of the full orbit matrix (even dimension up to the
/// budget): the polynomial is nonzero iff an open coadjoint orbit exists.
pub fn symbolic_orbit_pfaffian(a: &LieAlgebra) -> Option<MultiPoly> {
    let n = a.dim();
    if n % 2 != 0 || n > SYMBOLIC_DIM_BUDGET {
        return None;
    }
    let sym = symbolic_orbit_matrix(a);
    let mut table = PfaffianTable::new(&sym, PFAFFIAN_STATE_BUDGET);
    table.pfaffian(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
}

/// Open coadjoint orbit existence: always false in odd dimension; otherwise
/// the exact generic rank must reach the full dimension.
pub fn has_open_coadjoint_orbit(a: &LieAlgebra) -> bool {
    if a.dim() % 2 != 0 {
        return false;
    }
    let r = generic_orbit_dim(a, RankMode::Exact);
    r.value == a.dim()
}

/// Generic flat coadjoint orbits of a nilpotent algebra: some covector has
/// isotropy exactly the centre.
pub fn has_generic_flat_orbits(n: &LieAlgebra) -> Result<bool, LieError> {
    if !n.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let target = n.dim() - n.center().dim();
    if target % 2 != 0 {
        return Ok(false);
    }
    let r = generic_orbit_dim(n, RankMode::Exact);
    Ok(r.value == target)
}

/// Diagnostic record for the exact-symplectic test on a semidirect product,
/// one flag per equivalent condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSymplecticDiagnostic {
    pub center_dim_one: bool,
    pub derivation_nonzero_on_center: bool,
    pub generic_flat_orbits: bool,
}

impl ExactSymplecticDiagnostic {
    pub fn holds(&self) -> bool {
        self.center_dim_one && self.derivation_nonzero_on_center && self.generic_flat_orbits
    }
}

/// Exact-symplectic test for `n ⋊ ℝD` without building the product: the
/// centre of `n` must be a line on which `D` acts by a nonzero scalar, and
/// `n` must have generic flat orbits. Cross-validated against
/// `has_open_coadjoint_orbit` of the actual semidirect product in the test
/// suites.
pub fn is_exact_symplectic_semidirect(
    n: &LieAlgebra,
    d: &Matrix,
) -> Result<ExactSymplecticDiagnostic, LieError> {
    if let Some((i, j, defect)) = n.derivation_defect(d) {
        return Err(LieError::NotADerivation { i, j, defect });
    }
    let z = n.center();
    let center_dim_one = z.dim() == 1;
    let derivation_nonzero_on_center = if center_dim_one {
        let r = crate::spectral::restrict(d, &z).expect("centre is derivation-invariant");
        !r.get(0, 0).is_zero()
    } else {
        false
    };
    let generic_flat_orbits = if center_dim_one && derivation_nonzero_on_center {
        has_generic_flat_orbits(n)?
    } else {
        // still compute for the diagnostic when cheap; skip for big algebras
        if n.dim() <= SYMBOLIC_DIM_BUDGET {
            has_generic_flat_orbits(n)?
        } else {
            false
        }
    };
    Ok(ExactSymplecticDiagnostic {
        center_dim_one,
        derivation_nonzero_on_center,
        generic_flat_orbits,
    })
}

/// Outcome of the constant-orbit-dimension check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstOrbitDim {
    Yes,
    /// A covector nonzero on the centre whose orbit dimension differs.
    No {
        witness: Covector,
        rank: usize,
    },
    Undetermined,
}

/// Does every covector that is nonzero on the centre have orbit dimension
/// exactly `d`? Requires the 2-step hypothesis `[N, N] = centre(N)`, under
/// which the orbit matrix depends on the covector only through its
/// restriction to the centre.
///
/// `Yes` is certified exactly: the upper bound is either the structural
/// bound `dim - dim(centre)` or the identical vanishing of the `(d+2)`-subset
/// pfaffians; the lower bound is exact for `d = 2` (the brackets span the
/// centre), for a 1-dimensional centre (scaling), or through a norm-power
/// pfaffian certificate on a principal submatrix. Anything outside those
/// certificates is reported as `Undetermined`, never guessed.
pub fn constant_orbit_dim_off_center_annihilator(
    n: &LieAlgebra,
    d: usize,
    mode: ExecMode,
) -> Result<ConstOrbitDim, LieError> {
    let z = n.center();
    if n.derived_subalgebra() != z || !n.is_nilpotent() {
        return Err(LieError::BadConstruction(
            "constant-orbit-dimension check requires [N, N] = centre(N)".into(),
        ));
    }
    if d % 2 != 0 {
        return Err(LieError::BadConstruction(
            "orbit dimensions are even".into(),
        ));
    }
    let m = z.dim();
    let dim = n.dim();

    // Symbolic orbit matrix in the m centre-dual variables: the full
    // covector enters only through its centre component.
    let sym = symbolic_center_matrix(n, &z);
    let to_full = |eta: &[Rational]| -> Covector {
        // extend eta on the centre coordinates to a covector on n
        let mut xi = crate::matrix::vec_zero(dim);
        for (b, e) in z.basis().iter().zip(eta) {
            crate::matrix::vec_add_scaled(&mut xi, e, b);
        }
        Covector::new(xi)
    };

    // Witness sweep over centre directions.
    let mut eta_pool: Vec<RatVec> = (0..m).map(|i| unit_vec(m, i)).collect();
    {
        let mut acc = crate::matrix::vec_zero(m);
        for i in 0..m {
            acc[i] = one();
            eta_pool.push(acc.clone());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        let b = sampling_bound(n);
        for _ in 0..DEFAULT_RANK_SAMPLES {
            eta_pool.push((0..m).map(|_| rat(rng.gen_range(-b..=b))).collect());
        }
        eta_pool.retain(|e| e.iter().any(|c| !c.is_zero()));
    }
    let ranks: Vec<(RatVec, usize)> = exec::map_collect(mode, eta_pool, |eta| {
        let r = eval_center_matrix(&sym, &eta).rank();
        (eta, r)
    });
    for (eta, r) in &ranks {
        if *r != d {
            return Ok(ConstOrbitDim::No {
                witness: to_full(eta),
                rank: *r,
            });
        }
    }

    // Upper bound: rank <= d for every covector.
    let structural = dim - m;
    let upper_ok = if d == even_floor(structural) {
        true
    } else if dim <= SYMBOLIC_DIM_BUDGET {
        let mut table = PfaffianTable::new(&sym, PFAFFIAN_STATE_BUDGET);
        match scan_subsets(&mut table, dim, d + 2) {
            SubsetScan::AllVanish => true,
            SubsetScan::Budget => false,
            SubsetScan::Found(pf) => {
                // rank exceeds d somewhere; that point is a No witness
                // (it is nonzero because the pfaffian is homogeneous)
                if let Some(pt) = nonzero_point(&pf, DEFAULT_SEED) {
                    let r = eval_center_matrix(&sym, &pt).rank();
                    return Ok(ConstOrbitDim::No {
                        witness: to_full(&pt),
                        rank: r,
                    });
                }
                return Ok(ConstOrbitDim::Undetermined);
            }
        }
    } else {
        false
    };
    if !upper_ok {
        return Ok(ConstOrbitDim::Undetermined);
    }

    // Lower bound: rank >= d whenever eta != 0.
    if d == 0 {
        return Ok(ConstOrbitDim::Yes);
    }
    if d == 2 {
        // [N, N] = centre means the entry forms span the centre dual, so the
        // matrix is nonzero (hence of rank >= 2) at every eta != 0.
        return Ok(ConstOrbitDim::Yes);
    }
    if m == 1 {
        // one centre-dual variable: rank is scaling-invariant, and the sweep
        // already checked the single direction
        return Ok(ConstOrbitDim::Yes);
    }
    // Norm-power certificate: a principal d x d submatrix, chosen from
    // independent rows at a witness, whose pfaffian is c (sum eta_i^2)^(d/2)
    //: strictly nonzero away from the origin.
    let eta0 = unit_vec(m, 0);
    let m0 = eval_center_matrix(&sym, &eta0);
    if let Some(subset) = independent_row_subset(&m0, d) {
        let entries: Vec<Vec<MultiPoly>> = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| sym[i][j].clone()).collect())
            .collect();
        let mut table = PfaffianTable::new(&entries, PFAFFIAN_STATE_BUDGET);
        let full = (1u64 << d) - 1;
        if let Some(pf) = table.pfaffian(full) {
            if pf.as_norm_power().is_some() {
                return Ok(ConstOrbitDim::Yes);
            }
        }
    }
    Ok(ConstOrbitDim::Undetermined)
}

/// Symbolic orbit matrix in centre-dual coordinates, valid when all brackets
/// land in the centre.
fn symbolic_center_matrix(n: &LieAlgebra, z: &Subspace) -> Vec<Vec<MultiPoly>> {
    let dim = n.dim();
    let m = z.dim();
    let mut out = vec![vec![MultiPoly::zero(m); dim]; dim];
    for ((i, j), v) in n.bracket_entries() {
        let dense = {
            let mut w = crate::matrix::vec_zero(dim);
            for (k, c) in v {
                w[*k] = c.clone();
            }
            w
        };
        let coords = z
            .coordinates_of(&dense)
            .expect("brackets lie in the centre under the 2-step hypothesis");
        // pairing <eta, w> in the echelon basis of the centre: the full
        // covector built by to_full satisfies <xi, b_t> = eta.dot(column of
        // gram): with echelon bases the gram matrix is not the identity, so
        // pair through the pivot coordinates instead.
        let form = MultiPoly::linear_form(&pairing_coefficients(z, &coords));
        out[*i][*j] = form.clone();
        out[*j][*i] = form.neg();
    }
    out
}

/// Coefficients c with `<xi_eta, w> = sum_t c_t eta_t` for `w` given by its
/// echelon-basis coordinates, where `xi_eta = sum_t eta_t b_t` with `b_t`
/// the echelon basis rows.
fn pairing_coefficients(z: &Subspace, coords: &[Rational]) -> RatVec {
    // <xi_eta, w> = sum_t eta_t <b_t, w> and w = sum_s coords_s b_s, so the
    // coefficient of eta_t is sum_s coords_s <b_t, b_s>.
    let m = z.dim();
    (0..m)
        .map(|t| {
            let mut acc = zero();
            for (s, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    let dot: Rational = z.basis()[t]
                        .iter()
                        .zip(&z.basis()[s])
                        .map(|(a, b)| a * b)
                        .sum();
                    acc += c * dot;
                }
            }
            acc
        })
        .collect()
}

fn eval_center_matrix(sym: &[Vec<MultiPoly>], eta: &[Rational]) -> Matrix {
    let n = sym.len();
    Matrix::from_fn(n, n, |i, j| sym[i][j].eval(eta))
}

/// A set of `k` row indices that are linearly independent in `m0`; for a
/// skew matrix the principal submatrix on such a set is nonsingular.
fn independent_row_subset(m0: &Matrix, k: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<RatVec> = Vec::new();
    for i in 0..m0.rows() {
        let mut cand = rows.clone();
        cand.push(m0.row(i).to_vec());
        if Matrix::from_rows(cand.clone()).rank() > rows.len() {
            rows = cand;
            chosen.push(i);
            if chosen.len() == k {
                return Some(chosen);
            }
        }
    }
    None
}
