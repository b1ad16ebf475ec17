//! Littlestone, VC, consistency and strong consistency dimensions.
//!
//! The consistency dimensions are computed through the inconsistency order
//! `k(A)` of a partial (see [`crate::consistency`]): `A` is n-consistent iff
//! `k(A) > min(n, |A|)`. Hence `C(C,H)` is the largest `k(T)` over totals
//! outside `H`, and `SC(C,H)` the largest `k(A)` over partials without an
//! extension in `H`, both floored at 1.

use std::fmt;

use itertools::Itertools;

use crate::class::ConceptClass;
use crate::concept::{bits, ConceptSet, PartialConcept};
use crate::consistency::{disagreements, hitting_set_within, inconsistency_order};
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;

/// Largest universe accepted by [`strong_consistency_dim`] (it tabulates `3^|X|` partials).
pub const STRONG_LIMIT: usize = 15;

fn floor_log2(n: usize) -> i32 {
    (usize::BITS - 1 - n.leading_zeros()) as i32
}

impl ConceptClass {
    /// Littlestone dimension of the members of `s`; `-1` for the empty set.
    pub fn ldim_of(&self, s: &ConceptSet) -> i32 {
        let size = s.len();
        if size <= 1 {
            return size as i32 - 1;
        }
        if let Some(&v) = self.ldim_memo.lock().expect("ldim memo").get(s) {
            return v;
        }
        let upper = floor_log2(size);
        let mut best = 0;
        for x in bits(self.splitting_elements(s)) {
            let one = self.split(s, x, true);
            let zero = s.difference(&one);
            let (small, large) = if one.len() <= zero.len() {
                (one, zero)
            } else {
                (zero, one)
            };
            if floor_log2(small.len()) < best {
                continue;
            }
            let a = self.ldim_of(&small);
            if a < best {
                continue;
            }
            best = best.max(1 + a.min(self.ldim_of(&large)));
            if best == upper {
                break;
            }
        }
        self.ldim_memo
            .lock()
            .expect("ldim memo")
            .insert(s.clone(), best);
        best
    }

    pub fn ldim(&self) -> usize {
        self.ldim_of(&self.all()) as usize
    }
}

pub fn ldim(c: &ConceptClass) -> usize {
    c.ldim()
}

/// A complete binary tree of elements whose leaves carry concepts consistent
/// with their root-to-leaf path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MistakeTree {
    Leaf {
        concept: usize,
    },
    Node {
        element: usize,
        zero: Box<MistakeTree>,
        one: Box<MistakeTree>,
    },
}

impl MistakeTree {
    pub fn height(&self) -> usize {
        match self {
            MistakeTree::Leaf { .. } => 0,
            MistakeTree::Node { zero, one, .. } => 1 + zero.height().max(one.height()),
        }
    }

    pub fn is_complete(&self) -> bool {
        match self {
            MistakeTree::Leaf { .. } => true,
            MistakeTree::Node { zero, one, .. } => {
                zero.height() == one.height() && zero.is_complete() && one.is_complete()
            }
        }
    }

    /// Every leaf concept agrees with every branch label on its path.
    pub fn is_proper(&self, c: &ConceptClass) -> bool {
        fn go(t: &MistakeTree, c: &ConceptClass, path: PartialConcept) -> bool {
            match t {
                MistakeTree::Leaf { concept } => {
                    *concept < c.len() && path.is_extended_by(c.concept(*concept))
                }
                MistakeTree::Node { element, zero, one } => {
                    !path.is_specified(*element)
                        && go(zero, c, path.with(*element, false))
                        && go(one, c, path.with(*element, true))
                }
            }
        }
        self.is_complete() && go(self, c, PartialConcept::unspecified())
    }
}

/// A proper tree of height `h` over `s`; requires `ldim_of(s) >= h`.
pub fn mistake_tree(c: &ConceptClass, s: &ConceptSet, h: usize) -> MistakeTree {
    debug_assert!(c.ldim_of(s) >= h as i32);
    if h == 0 {
        return MistakeTree::Leaf {
            concept: s.first().expect("nonempty version space"),
        };
    }
    let need = h as i32 - 1;
    for x in bits(c.splitting_elements(s)) {
        let one = c.split(s, x, true);
        let zero = s.difference(&one);
        if c.ldim_of(&zero) >= need && c.ldim_of(&one) >= need {
            return MistakeTree::Node {
                element: x,
                zero: Box::new(mistake_tree(c, &zero, h - 1)),
                one: Box::new(mistake_tree(c, &one, h - 1)),
            };
        }
    }
    unreachable!("ldim guarantees a splitting element")
}

/// Littlestone dimension together with a witness tree of that height.
pub fn ldim_with_tree(c: &ConceptClass) -> (usize, MistakeTree) {
    let d = c.ldim();
    (d, mistake_tree(c, &c.all(), d))
}

/// Size of the largest subset of the universe shattered by `c`.
pub fn vc_dim(c: &ConceptClass) -> usize {
    let limit = (floor_log2(c.len()) as usize).min(c.n());
    let mut best = 0;
    for k in 1..=limit {
        let shattered = (0..c.n()).combinations(k).any(|ys| {
            let mut seen = vec![false; 1 << k];
            let mut count = 0;
            for b in c.concepts() {
                let p = ys
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (j, &y)| acc | (b.label(y) as usize) << j);
                if !seen[p] {
                    seen[p] = true;
                    count += 1;
                }
            }
            count == 1 << k
        });
        if !shattered {
            break;
        }
        best = k;
    }
    best
}

/// Least `n` such that every total n-consistent with `c` lies in `h`.
pub fn consistency_dim(c: &ConceptClass, h: &LazyHypothesisClass) -> Result<usize> {
    h.check_contains_class(c)?;
    if matches!(h, LazyHypothesisClass::AllTotals(_)) {
        return Ok(1);
    }
    // Branch and bound over totals in universe order. A prefix whose own
    // inconsistency order is at most `best` cannot lead to an improvement,
    // because extending a partial never increases k.
    fn search(c: &ConceptClass, h: &LazyHypothesisClass, p: PartialConcept, x: usize, best: &mut usize) {
        if let Some(sets) = disagreements(p, c) {
            if hitting_set_within(&sets, *best) {
                return;
            }
        }
        if x == c.n() {
            let t = p.zero_fill();
            if !h.contains(t) {
                let k = inconsistency_order(p, c).expect("totals outside H are outside C");
                *best = (*best).max(k);
            }
            return;
        }
        search(c, h, p.with(x, false), x + 1, best);
        search(c, h, p.with(x, true), x + 1, best);
    }
    let mut best = 1;
    search(c, h, PartialConcept::unspecified(), 0, &mut best);
    Ok(best)
}

/// Least `n` such that every partial n-consistent with `c` extends into `h`.
pub fn strong_consistency_dim(c: &ConceptClass, h: &LazyHypothesisClass) -> Result<usize> {
    h.check_contains_class(c)?;
    if matches!(h, LazyHypothesisClass::AllTotals(_)) {
        return Ok(1);
    }
    let n = c.n();
    if n > STRONG_LIMIT {
        return Err(Error::TooLarge(format!(
            "strong consistency dimension over {n} elements (limit {STRONG_LIMIT})"
        )));
    }
    // Partials are coded in base 3, digit x: 0 unspecified, 1 label 0, 2 label 1.
    let pow3: Vec<usize> = (0..=n).map(|i| 3usize.pow(i as u32)).collect();
    let total = pow3[n];
    let decode = |mut code: usize| {
        let mut digits = [0u8; STRONG_LIMIT];
        for d in digits.iter_mut().take(n) {
            *d = (code % 3) as u8;
            code /= 3;
        }
        digits
    };
    let total_bits = |digits: &[u8; STRONG_LIMIT]| {
        (0..n).fold(0u64, |m, x| m | ((digits[x] == 2) as u64) << x)
    };
    let h_members = |t: u64| h.contains(crate::concept::Concept::from_bits(t));

    // Extension tables: a partial extends iff one of its one-step refinements does.
    let mut ext_c = vec![false; total];
    let mut ext_h = vec![false; total];
    for code in (0..total).rev() {
        let digits = decode(code);
        match (0..n).find(|&x| digits[x] == 0) {
            None => {
                let t = total_bits(&digits);
                ext_c[code] = c.contains(crate::concept::Concept::from_bits(t));
                ext_h[code] = ext_c[code] || h_members(t);
            }
            Some(x) => {
                let (a, b) = (code + pow3[x], code + 2 * pow3[x]);
                ext_c[code] = ext_c[a] || ext_c[b];
                ext_h[code] = ext_h[a] || ext_h[b];
            }
        }
    }

    // k(A): smallest inconsistent restriction, built up from sub-restrictions.
    const INF: u8 = u8::MAX;
    let mut k = vec![INF; total];
    let mut sc = 1usize;
    for code in 0..total {
        if ext_c[code] {
            continue;
        }
        let digits = decode(code);
        let mut v = digits[..n].iter().filter(|&&d| d != 0).count() as u8;
        for x in 0..n {
            if digits[x] != 0 {
                v = v.min(k[code - digits[x] as usize * pow3[x]]);
            }
        }
        k[code] = v;
        if !ext_h[code] {
            sc = sc.max(v as usize);
        }
    }
    Ok(sc)
}

/// Least `n` at which n-consistent totals are already members of `c`.
pub fn consistency_threshold(c: &ConceptClass) -> usize {
    consistency_dim(c, &LazyHypothesisClass::Explicit(c.clone())).expect("C ⊆ C")
}

/// `H_m`: every total that is m-consistent with `c`.
pub fn hypothesis_hm(c: &ConceptClass, m: usize) -> Result<LazyHypothesisClass> {
    LazyHypothesisClass::m_consistent(c.clone(), m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub ldim: usize,
    pub vcdim: usize,
    pub cdim: Option<usize>,
    pub scdim: Option<usize>,
    pub threshold: usize,
}

impl DimensionReport {
    /// `cdim` is filled in when `h` is given, `scdim` only when `strong` is also set.
    pub fn compute(c: &ConceptClass, h: Option<&LazyHypothesisClass>, strong: bool) -> Result<Self> {
        let cdim = h.map(|h| consistency_dim(c, h)).transpose()?;
        let scdim = match h {
            Some(h) if strong => Some(strong_consistency_dim(c, h)?),
            _ => None,
        };
        Ok(DimensionReport {
            ldim: c.ldim(),
            vcdim: vc_dim(c),
            cdim,
            scdim,
            threshold: consistency_threshold(c),
        })
    }
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ldim={}", self.ldim)?;
        writeln!(f, "vcdim={}", self.vcdim)?;
        if let Some(c) = self.cdim {
            writeln!(f, "cdim={c}")?;
        }
        if let Some(s) = self.scdim {
            writeln!(f, "scdim={s}")?;
        }
        writeln!(f, "threshold={}", self.threshold)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consistency::is_n_consistent;
    use crate::fixtures;

    /// Textbook recursion with no memo or pruning.
    fn ldim_reference(c: &ConceptClass, s: &ConceptSet) -> i32 {
        if s.is_empty() {
            return -1;
        }
        let mut best = 0;
        for x in 0..c.n() {
            let one = c.split(s, x, true);
            let zero = s.difference(&one);
            if !one.is_empty() && !zero.is_empty() {
                best = best.max(1 + ldim_reference(c, &zero).min(ldim_reference(c, &one)));
            }
        }
        best
    }

    /// The defining quantifiers, checked over all totals / partials.
    fn cdim_reference(c: &ConceptClass, h: &LazyHypothesisClass) -> usize {
        let n = c.n();
        (1..=n)
            .find(|&m| {
                (0..1u64 << n).all(|t| {
                    let p = PartialConcept::new((1 << n) - 1, t);
                    !is_n_consistent(p, c, m) || h.contains(p.zero_fill())
                })
            })
            .unwrap_or(n)
            .max(1)
    }

    fn scdim_reference(c: &ConceptClass, h: &LazyHypothesisClass) -> usize {
        let n = c.n();
        (1..=n)
            .find(|&m| {
                (0..3u32.pow(n as u32)).all(|code| {
                    let a = fixtures::partial_from_base3(code, n);
                    !is_n_consistent(a, c, m) || h.find_extension(a).is_some()
                })
            })
            .unwrap_or(n)
            .max(1)
    }

    #[test]
    fn tree_example_values() {
        let c = fixtures::tree(3, 2);
        let h = LazyHypothesisClass::Explicit(c.clone());
        assert_eq!(c.ldim(), 2);
        assert_eq!(vc_dim(&c), 1);
        assert_eq!(consistency_dim(&c, &h).unwrap(), 4);
        assert_eq!(strong_consistency_dim(&c, &h).unwrap(), 9);
        assert_eq!(consistency_threshold(&c), 4);
    }

    #[test]
    fn small_fixture_values() {
        assert_eq!(fixtures::pow(3).ldim(), 3);
        assert_eq!(vc_dim(&fixtures::pow(3)), 3);
        assert_eq!(fixtures::sing(4).ldim(), 1);
        assert_eq!(vc_dim(&fixtures::sing(4)), 1);
        assert_eq!(consistency_threshold(&fixtures::pow(2)), 1);
        assert_eq!(consistency_threshold(&fixtures::sing(4)), 4);
        let singe = LazyHypothesisClass::Explicit(fixtures::singe(4));
        assert_eq!(consistency_dim(&fixtures::sing(4), &singe).unwrap(), 2);
        let five = fixtures::five();
        let h = LazyHypothesisClass::Explicit(five.clone());
        assert_eq!(consistency_dim(&five, &h).unwrap(), 3);
        assert!(strong_consistency_dim(&five, &h).unwrap() >= 4);
        let all = LazyHypothesisClass::AllTotals(five.universe().clone());
        assert_eq!(strong_consistency_dim(&five, &all).unwrap(), 1);
    }

    #[test]
    fn rejects_non_subclass() {
        let h = LazyHypothesisClass::Explicit(fixtures::sing(4));
        assert_eq!(
            consistency_dim(&fixtures::singe(4), &h),
            Err(Error::NotSubclass)
        );
    }

    #[test]
    fn witness_trees_are_proper() {
        for c in [fixtures::tree(3, 2), fixtures::pow(3), fixtures::sing(4), fixtures::five()] {
            let (d, t) = ldim_with_tree(&c);
            assert_eq!(t.height(), d);
            assert!(t.is_proper(&c));
        }
    }

    #[test]
    fn agrees_with_references_on_random_classes() {
        for seed in 0..60 {
            let nx = 2 + (seed as usize % 4);
            let nc = 1 + (seed as usize * 7) % ((1 << nx).min(9));
            let c = fixtures::random_class(nx, nc, seed).unwrap();
            assert_eq!(c.ldim_of(&c.all()), ldim_reference(&c, &c.all()));
            for h in [
                LazyHypothesisClass::Explicit(c.clone()),
                LazyHypothesisClass::m_consistent(c.clone(), 2).unwrap(),
                LazyHypothesisClass::AllTotals(c.universe().clone()),
            ] {
                assert_eq!(consistency_dim(&c, &h).unwrap(), cdim_reference(&c, &h));
                assert_eq!(strong_consistency_dim(&c, &h).unwrap(), scdim_reference(&c, &h));
            }
        }
    }
}
