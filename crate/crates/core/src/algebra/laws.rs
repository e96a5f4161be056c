//! Sampled verification of the semiring laws kernels rely on.

use super::Semiring;
use crate::domain::Scalar;
use crate::error::{Law, LawViolation};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Number of sampled values, pairs and triples per law.
pub const LAW_SAMPLE_COUNT: usize = 1000;

const LAW_SEED: u64 = 0x5eed_1a75;

/// Checks add associativity, add commutativity, add identity and the
/// annihilator contract on a fixed, seeded sample of the domain.
pub fn check_laws<T: Scalar>(s: &Semiring<T>) -> Result<(), LawViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(LAW_SEED);
    let mut pool = T::law_samples(&mut rng, LAW_SAMPLE_COUNT);
    pool.push(s.zero());
    let n = pool.len();
    let mut pick = || {
        (
            rng.random_range(0..n),
            rng.random_range(0..n),
            rng.random_range(0..n),
        )
    };
    let triples: Vec<_> = (0..LAW_SAMPLE_COUNT).map(|_| pick()).collect();
    check_on(s, &pool, &triples)
}

/// Same laws over every pair and triple drawn from `pool`.
pub fn check_laws_exhaustive<T: Scalar>(s: &Semiring<T>, pool: &[T]) -> Result<(), LawViolation> {
    let mut pool = pool.to_vec();
    pool.push(s.zero());
    let n = pool.len();
    let triples: Vec<_> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .collect();
    check_on(s, &pool, &triples)
}

fn check_on<T: Scalar>(
    s: &Semiring<T>,
    pool: &[T],
    triples: &[(usize, usize, usize)],
) -> Result<(), LawViolation> {
    let fail = |law, witnesses: &[T]| LawViolation {
        semiring: s.name().to_string(),
        law,
        witnesses: witnesses.iter().map(|w| format!("{w:?}")).collect(),
    };
    for &(i, j, _) in triples {
        let (a, b) = (pool[i], pool[j]);
        if !s.add(a, b).law_eq(s.add(b, a)) {
            return Err(fail(Law::AddCommutativity, &[a, b]));
        }
    }
    for &(i, j, k) in triples {
        let (a, b, c) = (pool[i], pool[j], pool[k]);
        if !s.add(s.add(a, b), c).law_eq(s.add(a, s.add(b, c))) {
            return Err(fail(Law::AddAssociativity, &[a, b, c]));
        }
    }
    let zero = s.zero();
    for &x in pool {
        if !s.add(x, zero).law_eq(x) || !s.add(zero, x).law_eq(x) {
            return Err(fail(Law::AddIdentity, &[x]));
        }
        if !s.mul(zero, x).law_eq(zero) || !s.mul(x, zero).law_eq(zero) {
            return Err(fail(Law::Annihilator, &[x]));
        }
    }
    Ok(())
}
