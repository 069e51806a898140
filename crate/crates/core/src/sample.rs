//! Deterministic sampling of operators with f + f* = 1.
//!
//! Any such operator is ½·1 plus a part that is antisymmetric for the
//! invariant form; we sample the antisymmetric part as M − M* for a random
//! even matrix M with small rational entries. Seeded ChaCha keeps runs
//! reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::SuperAlgebra;
use crate::linalg::Mat;
use crate::operator::{LinearOperator, OpSpace};
use crate::scalar::{int, rat};

/// A random even matrix with entries of the form p/q, |p| ≤ 3, 1 ≤ q ≤ 3.
fn random_even_matrix(alg: &SuperAlgebra, rng: &mut ChaCha8Rng) -> Mat {
    let d = alg.dim();
    Mat::from_fn(d, d, |r, c| {
        if alg.basis_parity(r) == alg.basis_parity(c) {
            let p: i64 = rng.random_range(-3..=3);
            let q: i64 = rng.random_range(1..=3);
            rat(p, q)
        } else {
            int(0)
        }
    })
}

/// A random even operator with f + f* = 1.
pub fn random_unitary_like(alg: &SuperAlgebra, seed: u64) -> LinearOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = LinearOperator::new(OpSpace::Full, random_even_matrix(alg, &mut rng));
    let antisym = m.sub(&m.adjoint(alg)).expect("same space");
    LinearOperator::identity(alg, OpSpace::Full)
        .scale(&rat(1, 2))
        .add(&antisym)
        .expect("same space")
}

/// Perturb an operator with f + f* = 1 by a random antisymmetric part; the
/// sum condition is preserved exactly.
pub fn perturb_unitary_like(
    f: &LinearOperator,
    alg: &SuperAlgebra,
    seed: u64,
) -> LinearOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = LinearOperator::new(OpSpace::Full, random_even_matrix(alg, &mut rng));
    let antisym = m.sub(&m.adjoint(alg)).expect("same space");
    f.add(&antisym).expect("same space")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_operators_satisfy_the_sum_condition() {
        let alg = SuperAlgebra::sl(2, 1).unwrap();
        let id = LinearOperator::identity(&alg, OpSpace::Full);
        for seed in 0..10 {
            let f = random_unitary_like(&alg, seed);
            assert!(f.is_even(&alg));
            assert_eq!(f.add(&f.adjoint(&alg)).unwrap(), id);
        }
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let alg = SuperAlgebra::sl(2, 1).unwrap();
        assert_eq!(random_unitary_like(&alg, 42), random_unitary_like(&alg, 42));
        assert_ne!(random_unitary_like(&alg, 42), random_unitary_like(&alg, 43));
    }
}
