//! Helpers shared by the integration suites: deterministic generators for
//! unimodular basis changes and nonsingular Hermitian presentations.

// each test binary uses its own subset; the transvection loops index two
// rows at once
#![allow(dead_code, clippy::needless_range_loop)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zgenus_core::{HermitianPresentation, LambdaMatrix, LaurentPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random unimodular integer matrix: a product of elementary transvections,
/// swaps and sign flips.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    if n < 2 {
        return m;
    }
    for _ in 0..3 * n {
        match rng.gen_range(0..3u8) {
            0 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while j == i {
                    j = rng.gen_range(0..n);
                }
                let f = rng.gen_range(-2..=2i64);
                for k in 0..n {
                    m[i][k] += f * m[j][k];
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                m.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                for k in 0..n {
                    m[i][k] = -m[i][k];
                }
            }
        }
    }
    m
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_exp: i64, coeff_bound: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        (-max_exp..=max_exp).map(|k| (k, rng.gen_range(-coeff_bound..=coeff_bound))),
    )
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

/// Random Hermitian presentation of the given size with det ≠ 0, by
/// symmetrizing a random matrix and retrying on singularity.
pub fn random_hermitian(rng: &mut ChaCha8Rng, size: usize) -> HermitianPresentation {
    loop {
        let raw = LambdaMatrix::from_fn(size, |_, _| random_poly(rng, 1, 2));
        let candidate = &raw + &raw.involute_transpose();
        if let Ok(p) = HermitianPresentation::new(candidate) {
            return p;
        }
    }
}

pub fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}
