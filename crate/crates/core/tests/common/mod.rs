#![allow(dead_code)]

use num_bigint::BigInt;
use querylearn::distribution::{Distribution, Rational};
use querylearn::rng::SplitMix64;
use querylearn::{fixtures, Concept, ConceptClass, LazyHypothesisClass};

pub fn fixture_classes() -> Vec<(&'static str, ConceptClass)> {
    vec![
        ("SING(4)", fixtures::sing(4)),
        ("SINGE(4)", fixtures::singe(4)),
        ("POW(3)", fixtures::pow(3)),
        ("FIVE", fixtures::five()),
        ("TREE(3,2)", fixtures::tree(3, 2)),
    ]
}

pub fn explicit(c: &ConceptClass) -> LazyHypothesisClass {
    LazyHypothesisClass::Explicit(c.clone())
}

/// Seeded class with `2..=max_x` elements and `1..=max_c` concepts.
pub fn random_small_class(seed: u64, max_x: usize, max_c: usize) -> ConceptClass {
    let mut rng = SplitMix64::new(seed ^ 0x5eed);
    let nx = 2 + rng.below(max_x as u64 - 1) as usize;
    let nc = (1 + rng.below(max_c as u64) as usize).min(1 << nx);
    fixtures::random_class(nx, nc, seed).unwrap()
}

/// `c` together with up to `max_h` hypotheses, extra ones drawn at random.
pub fn random_instance(seed: u64, max_x: usize, max_c: usize, max_h: usize) -> (ConceptClass, LazyHypothesisClass) {
    let c = random_small_class(seed, max_x, max_c);
    let mut rng = SplitMix64::new(seed.wrapping_mul(31) + 7);
    let room = max_h - c.len();
    let extra = rng.below(room as u64 + 1) as usize;
    let mut hs: Vec<Concept> = c.concepts().to_vec();
    let full = 1u64 << c.n();
    let mut tries = 0;
    while hs.len() < c.len() + extra && tries < 1000 {
        let b = Concept::from_bits(rng.below(full));
        if !hs.contains(&b) {
            hs.push(b);
        }
        tries += 1;
    }
    let h = ConceptClass::new(c.universe().clone(), hs).unwrap();
    (c, LazyHypothesisClass::Explicit(h))
}

/// Strictly positive weights `1..=8` over `n` points, normalized exactly.
pub fn random_distribution(n: usize, seed: u64) -> Distribution {
    let mut rng = SplitMix64::new(seed);
    let raw: Vec<u64> = (0..n).map(|_| 1 + rng.below(8)).collect();
    let total: u64 = raw.iter().sum();
    let w = raw
        .iter()
        .map(|&r| Rational::new(BigInt::from(r), BigInt::from(total)))
        .collect();
    Distribution::new(w).unwrap()
}

pub fn ceil_ln_bound(sc: usize, size: usize) -> usize {
    (sc as f64 * (size as f64).ln()).ceil() as usize
}
