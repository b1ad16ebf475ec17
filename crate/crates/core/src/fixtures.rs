//! Standard concept classes used in tests, examples and the `gen` command.

use std::sync::Arc;

use crate::class::ConceptClass;
use crate::concept::{Concept, PartialConcept, Universe};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

fn indexed(n: usize) -> Arc<Universe> {
    Arc::new(Universe::indexed(n).expect("fixture universe"))
}

/// SING(n): the singletons `{x0}, ..., {x(n-1)}`.
pub fn sing(n: usize) -> ConceptClass {
    ConceptClass::new(indexed(n), (0..n).map(|i| Concept::from_bits(1 << i)).collect())
        .expect("nonempty")
}

/// SINGE(n): SING(n) followed by the empty set.
pub fn singe(n: usize) -> ConceptClass {
    let c = sing(n);
    let mut concepts = c.concepts().to_vec();
    concepts.push(Concept::from_bits(0));
    ConceptClass::new(c.universe().clone(), concepts).expect("distinct")
}

/// POW(k): every subset of a `k`-element universe, ordered by bit value.
pub fn pow(k: usize) -> ConceptClass {
    ConceptClass::new(indexed(k), (0..1u64 << k).map(Concept::from_bits).collect())
        .expect("nonempty")
}

/// The class `{abc, abd, acde, bcde}` on `{a,b,c,d,e}`.
pub fn five() -> ConceptClass {
    let u = Arc::new(Universe::new(["a", "b", "c", "d", "e"]).expect("names"));
    ConceptClass::from_bitstrings(u, &["11100", "11010", "10111", "01111"]).expect("distinct")
}

/// Sequences over `[c]` of length `len` in lexicographic order.
fn sequences(c: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..c).map(move |j| {
                    let mut t = s.clone();
                    t.push(j);
                    t
                })
            })
            .collect();
    }
    out
}

fn tree_name(tau: &[usize], c: usize) -> String {
    let parts: Vec<String> = tau.iter().map(|j| j.to_string()).collect();
    if c <= 10 {
        format!("a{}", parts.concat())
    } else {
        format!("a{}", parts.join("."))
    }
}

/// TREE(c, d): elements `a_τ` for nonempty `τ ∈ [c]^{≤d}` (by length, then
/// lexicographically) and concepts `B_σ = {a_τ : τ a prefix of σ}` for
/// `σ ∈ [c]^d` in lexicographic order.
pub fn tree(c: usize, d: usize) -> ConceptClass {
    try_tree(c, d).expect("TREE parameters within limits")
}

pub fn try_tree(c: usize, d: usize) -> Result<ConceptClass> {
    if c == 0 || d == 0 {
        return Err(Error::pre("TREE(c, d) needs c ≥ 1 and d ≥ 1"));
    }
    let mut taus = Vec::new();
    for len in 1..=d {
        if taus.len() > crate::concept::MAX_ELEMENTS {
            break;
        }
        taus.extend(sequences(c, len));
    }
    let u = Arc::new(Universe::new(taus.iter().map(|t| tree_name(t, c)))?);
    let concepts = sequences(c, d)
        .into_iter()
        .map(|sigma| {
            let bits = taus
                .iter()
                .enumerate()
                .filter(|(_, t)| sigma.starts_with(t))
                .fold(0u64, |m, (i, _)| m | 1 << i);
            Concept::from_bits(bits)
        })
        .collect();
    ConceptClass::new(u, concepts)
}

/// `n_concepts` distinct concepts over `n_elements` points drawn uniformly
/// with the seeded generator.
pub fn random_class(n_elements: usize, n_concepts: usize, seed: u64) -> Result<ConceptClass> {
    if n_elements == 0 || n_elements > 20 {
        return Err(Error::TooLarge(format!(
            "random classes need 1..=20 elements, got {n_elements}"
        )));
    }
    if n_concepts == 0 || n_concepts > 1 << n_elements {
        return Err(Error::pre(format!(
            "cannot draw {n_concepts} distinct concepts over {n_elements} elements"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut seen = std::collections::HashSet::new();
    let mut concepts = Vec::with_capacity(n_concepts);
    while concepts.len() < n_concepts {
        let c = Concept::from_bits(rng.below(1 << n_elements));
        if seen.insert(c) {
            concepts.push(c);
        }
    }
    ConceptClass::new(indexed(n_elements), concepts)
}

/// Decode a base-3 code into a partial: digit 0 unspecified, 1 label 0, 2 label 1.
pub fn partial_from_base3(mut code: u32, n: usize) -> PartialConcept {
    let mut p = PartialConcept::unspecified();
    for x in 0..n {
        match code % 3 {
            1 => p = p.with(x, false),
            2 => p = p.with(x, true),
            _ => {}
        }
        code /= 3;
    }
    p
}
