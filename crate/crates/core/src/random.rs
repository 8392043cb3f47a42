//! Seeded generators for test corpora.
//!
//! All generators draw from `ChaCha8Rng::seed_from_u64(seed)`, so a seed
//! determines the corpus on every platform.
//!
//! Ideal distribution: arity uniform in `1..=4`, generator count uniform in
//! `1..=6`, every exponent uniform in `0..=4`; an all-zero generator (the
//! unit ideal) is redrawn. Generators are then minimalized.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::DepthSpec;
use crate::depth_model::DepthFunction;
use crate::monomial::{Exponent, Monomial, MonomialIdeal, Ring};

pub const MAX_ARITY: usize = 4;
pub const MAX_GENERATORS: usize = 6;
pub const MAX_EXPONENT: Exponent = 4;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_ideal<R: Rng>(rng: &mut R) -> MonomialIdeal {
    let arity = rng.gen_range(1..=MAX_ARITY);
    let count = rng.gen_range(1..=MAX_GENERATORS);
    let ring = Ring::indexed("x", arity).expect("valid ring");
    let gens = (0..count)
        .map(|_| loop {
            let e: Vec<Exponent> = (0..arity).map(|_| rng.gen_range(0..=MAX_EXPONENT)).collect();
            if e.iter().any(|&v| v > 0) {
                break Monomial::new(&e);
            }
        })
        .collect();
    MonomialIdeal::new(ring, gens).expect("arity matches")
}

/// `count` ideals from `seed`.
pub fn random_ideals(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut r = rng(seed);
    (0..count).map(|_| random_ideal(&mut r)).collect()
}

/// A valid spec with `a <= max_a` and multiplicities in `1..=max_mult`.
pub fn random_spec<R: Rng>(rng: &mut R, max_a: usize, max_mult: usize) -> DepthSpec {
    let levels = rng.gen_range(0..=max_a);
    let b = rng.gen_range(0..=max_a - levels);
    let mut mult: Vec<usize> = (0..levels).map(|_| rng.gen_range(1..=max_mult)).collect();
    mult.sort_unstable();
    DepthSpec::new(b + levels, b, mult).expect("sorted positive multiplicities are valid")
}

/// An arbitrary eventually constant sequence with values in `0..=max_value`.
pub fn random_depth_function<R: Rng>(rng: &mut R, max_len: usize, max_value: usize) -> DepthFunction {
    let len = rng.gen_range(0..=max_len);
    let prefix = (0..len).map(|_| rng.gen_range(0..=max_value)).collect();
    DepthFunction::new(prefix, rng.gen_range(0..=max_value))
}

/// A nonincreasing sequence with values in `0..=max_value`.
pub fn random_nonincreasing<R: Rng>(rng: &mut R, max_len: usize, max_value: usize) -> DepthFunction {
    let len = rng.gen_range(0..=max_len);
    let mut values: Vec<usize> = (0..=len).map(|_| rng.gen_range(0..=max_value)).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let tail = values.pop().expect("nonempty");
    DepthFunction::new(values, tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible_and_in_range() {
        let a = random_ideals(7, 50);
        assert_eq!(a, random_ideals(7, 50));
        for i in &a {
            assert!((1..=MAX_ARITY).contains(&i.arity()));
            assert!((1..=MAX_GENERATORS).contains(&i.num_generators()));
            assert!(!i.is_unit() && !i.is_zero());
            assert!(i.generators().iter().all(|g| g.exponents().iter().all(|&e| e <= MAX_EXPONENT)));
        }
    }

    #[test]
    fn random_specs_are_valid() {
        let mut r = rng(1);
        for _ in 0..200 {
            let s = random_spec(&mut r, 6, 6);
            assert!(s.a() <= 6);
            assert!(s.multiplicities().windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn nonincreasing_generator() {
        let mut r = rng(2);
        for _ in 0..100 {
            assert!(random_nonincreasing(&mut r, 6, 5).is_nonincreasing());
        }
    }
}
