//! Seeded random instances for the acceptance sweeps: small nonnegative
//! configurations with nonzero columns plus a nonnegative weight vector.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use toricdeg::toric::SemigroupPresentation;
use toricdeg::{GeneratorMatrix, Int, IntVec};

pub const MAX_ENTRY: i64 = 6;
pub const MAX_WEIGHT: i64 = 8;

pub fn random_instance(
    rng: &mut ChaCha8Rng,
    max_n: usize,
) -> (SemigroupPresentation, IntVec) {
    let d = rng.gen_range(1..=3usize);
    let n = rng.gen_range(2..=max_n.max(2));
    let mut columns = Vec::with_capacity(n);
    for _ in 0..n {
        loop {
            let col = IntVec(
                (0..d)
                    .map(|_| Int::from(rng.gen_range(0..=MAX_ENTRY)))
                    .collect(),
            );
            if !col.is_zero() {
                columns.push(col);
                break;
            }
        }
    }
    let w = random_weights(rng, n);
    let matrix = GeneratorMatrix::new(columns, d).expect("dimensions match by construction");
    (SemigroupPresentation::new(matrix), w)
}

pub fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> IntVec {
    IntVec((0..n).map(|_| Int::from(rng.gen_range(0..=MAX_WEIGHT))).collect())
}
