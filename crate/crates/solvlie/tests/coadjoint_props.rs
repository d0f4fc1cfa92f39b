//! Property tests for the coadjoint-orbit machinery.

mod common;

use common::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use solvlie::coadjoint::{isotropy, orbit_dim, orbit_matrix, Covector};
use solvlie::families;
use solvlie::scalar::{rat, ratio, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

fn covector(dim: usize) -> impl Strategy<Value = Covector> {
    proptest::collection::vec(rational(), dim).prop_map(Covector::new)
}

proptest! {
    /// Orbit matrices are skew, their rank is even, and rank + isotropy
    /// dimension is the ambient dimension.
    #[test]
    fn orbit_matrix_rank_parity(xi in covector(7)) {
        let n = families::n6n15_algebra(&[rat(1), rat(1), rat(-2)]).unwrap();
        let m = orbit_matrix(&n, &xi).unwrap();
        prop_assert!(m.is_skew_symmetric());
        let r = orbit_dim(&n, &xi).unwrap();
        prop_assert_eq!(r % 2, 0);
        prop_assert_eq!(r + isotropy(&n, &xi).unwrap().dim(), 7);
    }

    /// Isotropy only depends on the ray of the covector.
    #[test]
    fn isotropy_is_scale_invariant(xi in covector(6), lam in rational()) {
        prop_assume!(!num_traits::Zero::is_zero(&lam));
        let h = families::free_two_step_3gen();
        let scaled = Covector::new(xi.coords().iter().map(|c| c * &lam).collect());
        prop_assert_eq!(isotropy(&h, &xi).unwrap(), isotropy(&h, &scaled).unwrap());
    }

    /// The centre annihilates every orbit matrix.
    #[test]
    fn center_in_isotropy(xi in covector(5)) {
        let h = families::heisenberg(2);
        prop_assert!(h.center().is_subspace_of(&isotropy(&h, &xi).unwrap()));
    }
}

/// The Lemma-extra equivalence again, this time under proptest's shrinking:
/// exact-symplectic on (N, D) iff the semidirect product has an open orbit.
#[test]
fn exact_symplectic_matches_open_orbit_on_random_derivations() {
    let mut rng = StdRng::seed_from_u64(4040);
    for n in 1..=2usize {
        let h = families::heisenberg(n);
        for _ in 0..10 {
            let d_z = small_rational(&mut rng);
            let d = random_heisenberg_derivation(n, &d_z, &mut rng);
            let diag = solvlie::coadjoint::is_exact_symplectic_semidirect(&h, &d).unwrap();
            let g = h.semidirect(&d).unwrap();
            assert_eq!(
                diag.holds(),
                solvlie::coadjoint::has_open_coadjoint_orbit(&g)
            );
        }
    }
}

/// For h_K, any covector that is nonzero on the centre has isotropy exactly
/// the centre.
#[test]
fn hk_isotropy_at_sampled_covectors_is_the_center() {
    use solvlie::coadjoint::sample_covectors;
    for name in [
        solvlie::families::DivisionAlgebraName::R,
        solvlie::families::DivisionAlgebraName::C,
        solvlie::families::DivisionAlgebraName::H,
    ] {
        let table = solvlie::families::division_algebra(name);
        let alg = solvlie::families::hk_algebra(&table, 1);
        let z = alg.center();
        let dk = name.dim();
        let dim = alg.dim();
        for mut xi in sample_covectors(&alg, 12, 9001) {
            // force a nonzero centre component
            let mut coords = xi.coords().to_vec();
            if coords[dim - dk..].iter().all(num_traits::Zero::is_zero) {
                coords[dim - 1] = rat(1);
                xi = Covector::new(coords);
            }
            assert_eq!(isotropy(&alg, &xi).unwrap(), z, "K = {name}");
        }
    }
}

/// Randomized mode never exceeds the certified exact rank, and any rank it
/// reports is attained (a certified lower bound).
#[test]
fn randomized_rank_is_a_lower_bound() {
    use solvlie::coadjoint::{generic_orbit_dim, RankMode};
    for (alg, expect) in [
        (families::heisenberg(2), 4usize),
        (families::free_two_step_3gen(), 2),
        (
            families::n6n15_algebra(&[rat(1), rat(1), rat(-2)]).unwrap(),
            6,
        ),
    ] {
        let exact = generic_orbit_dim(&alg, RankMode::Exact);
        assert!(exact.certified);
        assert_eq!(exact.value, expect);
        for seed in [0u64, 1, 42, 0xdead] {
            let sampled = generic_orbit_dim(&alg, RankMode::Randomized { seed, samples: 8 });
            assert!(sampled.value <= exact.value);
            assert!(!sampled.certified);
        }
    }
}
