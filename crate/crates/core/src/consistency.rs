//! n-consistency of partial labelings with a concept class.
//!
//! A restriction `A|_Y` fails to extend to `c` exactly when `Y` meets the
//! disagreement set `(A ⊕ c) ∩ dom(A)`. So the smallest inconsistent
//! restriction of `A` is a minimum hitting set of those disagreement sets,
//! which is what [`inconsistency_order`] computes.

use crate::class::ConceptClass;
use crate::concept::{bits, Concept, PartialConcept};

/// Disagreement sets of `a` against every concept of `c`, or `None` if some
/// concept extends `a`.
pub(crate) fn disagreements(a: PartialConcept, c: &ConceptClass) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(c.len());
    for &b in c.concepts() {
        let d = (a.values() ^ b.bits()) & a.mask();
        if d == 0 {
            return None;
        }
        out.push(d);
    }
    out.sort_unstable_by_key(|d| d.count_ones());
    out.dedup();
    Some(out)
}

/// True if some set of at most `k` elements meets every mask in `sets`.
pub(crate) fn hitting_set_within(sets: &[u64], k: usize) -> bool {
    fn go(sets: &[u64], chosen: u64, k: usize) -> bool {
        let mut pick: Option<u64> = None;
        for &s in sets {
            if s & chosen == 0 && pick.is_none_or(|p| s.count_ones() < p.count_ones()) {
                pick = Some(s);
            }
        }
        let Some(s) = pick else { return true };
        if k == 0 {
            return false;
        }
        bits(s).any(|e| go(sets, chosen | 1 << e, k - 1))
    }
    go(sets, 0, k)
}

/// Size of the smallest restriction of `a` with no extension in `c`;
/// `None` when `a` itself extends into `c`.
pub fn inconsistency_order(a: PartialConcept, c: &ConceptClass) -> Option<usize> {
    let sets = disagreements(a, c)?;
    (1..=a.size()).find(|&k| hitting_set_within(&sets, k))
}

/// Every restriction of `a` of size `min(n, |a|)` extends into `c`.
pub fn is_n_consistent(a: PartialConcept, c: &ConceptClass, n: usize) -> bool {
    let n = n.min(a.size());
    match disagreements(a, c) {
        None => true,
        Some(sets) => !hitting_set_within(&sets, n),
    }
}

/// Total extension of `a` built one element at a time in universe order,
/// preferring label 0 whenever that keeps the labeling extendable into `c`.
pub fn consistent_total_extension(a: PartialConcept, c: &ConceptClass) -> Option<Concept> {
    if !c.has_extension(a) {
        return None;
    }
    let mut cur = a;
    for x in 0..c.n() {
        if cur.is_specified(x) {
            continue;
        }
        let zero = cur.with(x, false);
        cur = if c.has_extension(zero) {
            zero
        } else {
            cur.with(x, true)
        };
    }
    Some(cur.zero_fill())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use itertools::Itertools;

    /// Literal reading of the definition: scan every size-`n` subset of the domain.
    fn scan_n_consistent(a: PartialConcept, c: &ConceptClass, n: usize) -> bool {
        let dom: Vec<usize> = a.domain().collect();
        let n = n.min(dom.len());
        dom.into_iter().combinations(n).all(|ys| {
            let y = ys.iter().fold(0u64, |m, &e| m | 1 << e);
            c.has_extension(a.restrict(y).unwrap())
        })
    }

    #[test]
    fn singleton_zero_total() {
        let c = fixtures::sing(4);
        let a = PartialConcept::new(0b1111, 0);
        assert!(is_n_consistent(a, &c, 3));
        assert!(!is_n_consistent(a, &c, 4));
        assert_eq!(inconsistency_order(a, &c), Some(4));
    }

    #[test]
    fn members_are_always_consistent() {
        let c = fixtures::tree(3, 2);
        for &b in c.concepts() {
            for n in 0..=c.n() + 1 {
                assert!(is_n_consistent(b.to_partial(c.n()), &c, n));
            }
        }
    }

    #[test]
    fn matches_subset_scan() {
        let c = fixtures::five();
        for code in 0..3u32.pow(5) {
            let a = fixtures::partial_from_base3(code, 5);
            for n in 0..=6 {
                assert_eq!(is_n_consistent(a, &c, n), scan_n_consistent(a, &c, n));
            }
        }
    }

    #[test]
    fn total_extension_examples() {
        let c = fixtures::sing(4);
        let two = PartialConcept::from_labels([(2, true)]);
        assert_eq!(
            consistent_total_extension(two, &c),
            Some(Concept::from_bits(0b0100))
        );
        // Label 0 is kept while it stays extendable, so the last singleton wins.
        assert_eq!(
            consistent_total_extension(PartialConcept::unspecified(), &c),
            Some(Concept::from_bits(0b1000))
        );
        let bad = PartialConcept::from_labels([(0, true), (1, true)]);
        assert_eq!(consistent_total_extension(bad, &c), None);
    }
}
