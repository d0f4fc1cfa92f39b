//! Shared corpus generators for the integration suites.
#![allow(dead_code)] // each test binary uses its own subset

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::Rng;
use solvlie::classify::{GroupModel, Provenance};
use solvlie::families;
use solvlie::matrix::Matrix;
use solvlie::scalar::{rat, ratio, Rational};
use solvlie::LieAlgebra;

pub fn small_rational(rng: &mut StdRng) -> Rational {
    ratio(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=3))
}

pub fn nonzero_small_rational(rng: &mut StdRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A random derivation of `heisenberg(n)` with the prescribed centre weight:
/// the symplectic-block part is `d_z/2 * I` plus a random element of `sp(2n)`
/// (built as `-J * symmetric`), plus an arbitrary row into the centre.
pub fn random_heisenberg_derivation(n: usize, d_z: &Rational, rng: &mut StdRng) -> Matrix {
    let v = 2 * n;
    // J in the (Y, X) block ordering: omega(Y_j, X_j) = 1
    let mut j_mat = Matrix::zero(v, v);
    for k in 0..n {
        j_mat.set(k, n + k, rat(1));
        j_mat.set(n + k, k, rat(-1));
    }
    let mut sym = Matrix::zero(v, v);
    for a in 0..v {
        for b in a..v {
            let x = small_rational(rng);
            sym.set(a, b, x.clone());
            sym.set(b, a, x);
        }
    }
    let s = j_mat.scale(&rat(-1)).mul(&sym);
    let half = d_z / rat(2);
    let mut d = Matrix::zero(2 * n + 1, 2 * n + 1);
    d.set(0, 0, d_z.clone());
    for a in 0..v {
        // arbitrary component into the centre
        d.set(0, 1 + a, small_rational(rng));
        for b in 0..v {
            let mut e = s.get(a, b).clone();
            if a == b {
                e += &half;
            }
            d.set(1 + a, 1 + b, e);
        }
    }
    d
}

/// Diagonal derivation of `heisenberg(n)` given on the conventional ordering
/// `(X1..Xn, Y1..Yn, Z)`; the algebra basis order is `(Z, Y.., X..)`.
pub fn heisenberg_diag_xyz(n: usize, diag: &[Rational]) -> Matrix {
    assert_eq!(diag.len(), 2 * n + 1);
    let mut reordered = vec![diag[2 * n].clone()];
    reordered.extend_from_slice(&diag[n..2 * n]);
    reordered.extend_from_slice(&diag[..n]);
    Matrix::diagonal(&reordered)
}

/// Random admissible symplectic parameters for the n6n15 extension:
/// `a_1 + a_2 + a_3 = 0` with nonzero product.
pub fn random_n6n15_a(rng: &mut StdRng) -> [Rational; 3] {
    loop {
        let r = nonzero_small_rational(rng);
        let s = nonzero_small_rational(rng);
        let t = -(&r + &s);
        if !t.is_zero() {
            return [r, s, t];
        }
    }
}

/// Diagonal derivation of the free 2-step algebra: `D X_j = b_j X_j` pushed
/// to the Y part by Leibniz.
pub fn free_two_step_diag_derivation(b: &[Rational; 3]) -> Matrix {
    let tr: Rational = b.iter().sum();
    let mut d = Matrix::zero(6, 6);
    for j in 0..3 {
        d.set(j, j, b[j].clone());
        d.set(3 + j, 3 + j, &tr - &b[j]);
    }
    d
}

pub struct Corpus {
    pub models: Vec<GroupModel>,
}

/// The generated model corpus for the soundness harness: Heisenberg models
/// with diagonal and generic conformal derivations, n6n15 models over random
/// parameters, division-algebra models, generalized ax+b models, and free
/// 2-step quotient-shaped models.
pub fn build_corpus(rng: &mut StdRng) -> Corpus {
    let mut models = Vec::new();

    // Heisenberg: diagonal derivations over a d_z grid
    for n in 1..=3usize {
        let h = families::heisenberg(n);
        for d_z in [-2i64, -1, 0, 1, 2, 3] {
            for _ in 0..4 {
                let mut diag = vec![rat(0); 2 * n + 1];
                diag[2 * n] = rat(d_z);
                for j in 0..n {
                    let mu = small_rational(rng);
                    diag[j] = mu.clone();
                    diag[n + j] = rat(d_z) - mu;
                }
                let d = heisenberg_diag_xyz(n, &diag);
                models.push(
                    GroupModel::with_provenance(h.clone(), d, Provenance::Heisenberg { n })
                        .expect("valid model"),
                );
            }
        }
        // generic conformal derivations
        for _ in 0..8 {
            let d_z = small_rational(rng);
            let d = random_heisenberg_derivation(n, &d_z, rng);
            assert!(h.is_derivation(&d));
            models.push(
                GroupModel::with_provenance(h.clone(), d, Provenance::Heisenberg { n })
                    .expect("valid model"),
            );
        }
    }

    // n6n15 models
    for _ in 0..90 {
        let a = random_n6n15_a(rng);
        let alg = families::n6n15_algebra(&a).expect("valid parameters");
        let b = [
            small_rational(rng),
            small_rational(rng),
            small_rational(rng),
        ];
        let d = families::n6n15_derivation(&alg, &b);
        models.push(
            GroupModel::with_provenance(alg, d, Provenance::N6n15 { a, b }).expect("valid model"),
        );
    }

    // free 2-step semidirect products (the quotient shape of the n6n15 case)
    for _ in 0..20 {
        let b = [
            small_rational(rng),
            small_rational(rng),
            small_rational(rng),
        ];
        let h = families::free_two_step_3gen();
        let d = free_two_step_diag_derivation(&b);
        assert!(h.is_derivation(&d));
        models.push(GroupModel::new(h, d).expect("valid model"));
    }

    // division-algebra models
    for name in [
        families::DivisionAlgebraName::R,
        families::DivisionAlgebraName::C,
        families::DivisionAlgebraName::H,
        families::DivisionAlgebraName::O,
    ] {
        let table = families::division_algebra(name);
        for n in 1..=2usize {
            for (a0, c) in [(1i64, 2i64), (3, 2), (-1, -3)] {
                let a: Vec<Rational> = (0..n).map(|k| rat(a0) + rat(k as i64)).collect();
                let b: Vec<Rational> = a.iter().map(|x| rat(c) - x).collect();
                let alg = families::hk_algebra(&table, n);
                let d = families::hk_derivation(&table, n, &a, &b, &rat(c)).expect("a+b=c");
                models.push(
                    GroupModel::with_provenance(alg, d, Provenance::Hk { name, n, c: rat(c) })
                        .expect("valid model"),
                );
            }
        }
    }

    // generalized ax+b models
    for _ in 0..90 {
        let n = rng.gen_range(1usize..=5);
        let d = Matrix::from_fn(n, n, |_, _| small_rational(rng));
        models.push(
            GroupModel::with_provenance(LieAlgebra::abelian(n), d, Provenance::Axb)
                .expect("valid model"),
        );
    }

    Corpus { models }
}
