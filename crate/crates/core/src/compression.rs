//! A `d`-compression with `d + 1` reconstruction functions, `d = Ldim(C)`.
//!
//! `compress` records the points at which the sample lowers the Littlestone
//! dimension: positive picks `ā` first, then negative picks `d̄`. When the
//! sample becomes exceptional before `d` picks, the tuple is padded with
//! repeated entries so that `ρ_0` or `ρ_1` can recognise it. Unspecified
//! points of a reconstructed partial are filled with 0.

use crate::class::ConceptClass;
use crate::concept::{bits, Concept, ConceptSet, PartialConcept};
use crate::error::{Error, Result};

/// `f_V`: label `j` at `x` when `V^(x,j)` keeps the full Ldim of `V`.
pub fn f_partial_in(c: &ConceptClass, v: &ConceptSet) -> PartialConcept {
    let d = c.ldim_of(v);
    let mut f = PartialConcept::unspecified();
    for x in 0..c.n() {
        let one = c.split(v, x, true);
        if c.ldim_of(&one) == d {
            f = f.with(x, true);
        } else if c.ldim_of(&v.difference(&one)) == d {
            f = f.with(x, false);
        }
    }
    f
}

pub fn f_partial(c: &ConceptClass) -> PartialConcept {
    f_partial_in(c, &c.all())
}

fn exceptional_in(f: PartialConcept, c: &ConceptClass, v: &ConceptSet) -> bool {
    let d = c.ldim_of(v);
    f.domain()
        .all(|a| c.ldim_of(&c.split(v, a, f.label(a).expect("in domain"))) == d)
}

/// No specified point of `f` lowers the Littlestone dimension.
pub fn is_exceptional(f: PartialConcept, c: &ConceptClass) -> bool {
    exceptional_in(f, c, &c.all())
}

/// The compression map `κ`.
pub fn compress(c: &ConceptClass, f: PartialConcept) -> Result<Vec<usize>> {
    if f.mask() & !c.universe().full_mask() != 0 {
        return Err(Error::UniverseMismatch);
    }
    if !c.has_extension(f) {
        return Err(Error::pre(format!(
            "sample {} is not realized by the class",
            f.to_literal(c.n())
        )));
    }
    let d = c.ldim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut v = c.all();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    while pos.len() + neg.len() < d && !exceptional_in(f, c, &v) {
        let level = c.ldim_of(&v);
        let drops = |x: usize, l: bool| c.ldim_of(&c.split(&v, x, l)) < level;
        let pick = bits(f.values())
            .find(|&x| drops(x, true))
            .map(|x| (x, true))
            .or_else(|| bits(f.mask() & !f.values()).find(|&x| drops(x, false)).map(|x| (x, false)))
            .expect("a non-exceptional sample has a dropping point");
        v = c.split(&v, pick.0, pick.1);
        if pick.1 {
            pos.push(pick.0)
        } else {
            neg.push(pick.0)
        }
    }
    let mut t = pos.clone();
    if pos.len() + neg.len() == d {
        t.extend(neg);
    } else if let Some(&a) = pos.first() {
        t.push(a);
        t.extend(neg);
        t.resize(d, a);
    } else if let Some(&b) = neg.first() {
        t = neg;
        t.resize(d, b);
    } else {
        let c0 = f
            .domain()
            .next()
            .ok_or_else(|| Error::pre("an empty sample cannot be compressed when Ldim ≥ 1"))?;
        t = vec![c0; d];
    }
    Ok(t)
}

/// Reading of a tuple with repeats as `(ā, a', d̄, a', ..., a')`.
fn read_positive(t: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let a = t[0];
    let k = t.iter().skip(1).position(|&x| x == a)? + 1;
    let rest = &t[k + 1..];
    let end = rest.iter().position(|&x| x == a).unwrap_or(rest.len());
    let (abar, dbar) = (&t[..k], &rest[..end]);
    let valid = rest[end..].iter().all(|&x| x == a) && all_distinct(abar, dbar);
    valid.then(|| (abar.to_vec(), dbar.to_vec()))
}

/// Reading of a tuple with repeats as `(d̄, d', ..., d')`.
fn read_negative(t: &[usize]) -> Option<Vec<usize>> {
    let b = t[0];
    let k = t.iter().skip(1).position(|&x| x == b)? + 1;
    let valid = t[k..].iter().all(|&x| x == b) && all_distinct(&t[..k], &[]);
    valid.then(|| t[..k].to_vec())
}

fn all_distinct(a: &[usize], b: &[usize]) -> bool {
    let mut seen = 0u64;
    a.iter().chain(b).all(|&x| {
        let fresh = seen >> x & 1 == 0;
        seen |= 1 << x;
        fresh
    })
}

/// The reconstruction family `ρ_0, ..., ρ_d`.
#[derive(Debug, Clone)]
pub struct CompressionScheme {
    class: ConceptClass,
    d: usize,
}

impl CompressionScheme {
    pub fn new(c: &ConceptClass) -> Self {
        CompressionScheme {
            class: c.clone(),
            d: c.ldim(),
        }
    }

    pub fn size(&self) -> usize {
        self.d
    }

    pub fn reconstruction_count(&self) -> usize {
        self.d + 1
    }

    pub fn compress(&self, f: PartialConcept) -> Result<Vec<usize>> {
        compress(&self.class, f)
    }

    /// Lowest-index concept labeling the first `i` entries 1 and the rest 0.
    fn distinct_reading(&self, i: usize, t: &[usize]) -> Option<Concept> {
        let c = &self.class;
        let a = PartialConcept::from_labels(t.iter().enumerate().map(|(j, &x)| (x, j < i)));
        c.concepts().iter().copied().find(|&g| a.is_extended_by(g))
    }

    /// Zero-filled `f_V` for `V` the concepts positive on `pos`, negative on `neg`.
    fn fill_of(&self, pos: &[usize], neg: &[usize]) -> Option<Concept> {
        let c = &self.class;
        let a = PartialConcept::from_labels(
            pos.iter().map(|&x| (x, true)).chain(neg.iter().map(|&x| (x, false))),
        );
        let v = c.consistent(&c.all(), a);
        (!v.is_empty()).then(|| f_partial_in(c, &v).zero_fill())
    }

    /// `ρ_i(t)`; `Ok(None)` when `ρ_i` has no value on `t`.
    pub fn decompress(&self, i: usize, t: &[usize]) -> Result<Option<Concept>> {
        let c = &self.class;
        if i > self.d {
            return Err(Error::pre(format!("reconstruction index {i} exceeds {}", self.d)));
        }
        if t.len() != self.d {
            return Err(Error::pre(format!("tuple of length {} for d = {}", t.len(), self.d)));
        }
        if t.iter().any(|&x| x >= c.n()) {
            return Err(Error::pre("tuple entry outside the universe"));
        }
        if self.d == 0 {
            return Ok(Some(c.concept(0)));
        }
        // All-equal tuples: ρ_l is overwritten by f_C, where l is the side
        // of t[0] keeping full Ldim.
        let first = t[0];
        if t.iter().all(|&x| x == first) {
            let all = c.all();
            let full = c.ldim_of(&all);
            let l = [false, true]
                .into_iter()
                .find(|&l| c.ldim_of(&c.split(&all, first, l)) == full);
            if l.map(|l| l as usize) == Some(i) {
                return Ok(Some(f_partial(c).zero_fill()));
            }
            if self.d == 1 {
                return Ok(self.distinct_reading(i, t));
            }
        }
        if all_distinct(t, &[]) {
            return Ok(self.distinct_reading(i, t));
        }
        let pos = read_positive(t);
        let neg = read_negative(t);
        if pos.is_none() && neg.is_none() {
            return Err(Error::pre(format!("tuple {t:?} matches no encoding")));
        }
        Ok(match i {
            1 => pos.and_then(|(a, b)| self.fill_of(&a, &b)),
            0 => neg.and_then(|b| self.fill_of(&[], &b)),
            _ => None,
        })
    }

    /// Indices `i` whose `ρ_i(κ(f))` agrees with `f` on its domain.
    pub fn recovering(&self, f: PartialConcept) -> Result<Vec<usize>> {
        let t = self.compress(f)?;
        let mut ok = Vec::new();
        for i in 0..=self.d {
            if let Some(g) = self.decompress(i, &t)? {
                if f.is_extended_by(g) {
                    ok.push(i);
                }
            }
        }
        Ok(ok)
    }
}

/// Every restriction of every concept to every nonempty subset of the
/// universe, deduplicated. With `Ldim ≥ 1` the empty sample has no tuple
/// to compress to, so it is left out.
pub fn finite_samples(c: &ConceptClass) -> Result<Vec<PartialConcept>> {
    if c.n() > 16 {
        return Err(Error::TooLarge(format!("{} elements (limit 16)", c.n())));
    }
    let mut out = std::collections::HashSet::new();
    for dom in 1..1u64 << c.n() {
        for &g in c.concepts() {
            out.insert(PartialConcept::new(dom, g.bits()));
        }
    }
    let mut v: Vec<PartialConcept> = out.into_iter().collect();
    v.sort_by_key(|p| (p.mask(), p.values()));
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrip {
    pub d: usize,
    pub rhos: usize,
    pub samples: usize,
    /// First sample no reconstruction function recovers.
    pub failure: Option<PartialConcept>,
}

/// Compress and reconstruct every finite sample of `c`.
pub fn check_round_trip(c: &ConceptClass) -> Result<RoundTrip> {
    let scheme = CompressionScheme::new(c);
    let samples = finite_samples(c)?;
    let mut failure = None;
    for &f in &samples {
        let t = scheme.compress(f)?;
        let inside = t.len() == scheme.size() && t.iter().all(|&x| f.is_specified(x));
        if !inside || scheme.recovering(f)?.is_empty() {
            failure = Some(f);
            break;
        }
    }
    Ok(RoundTrip {
        d: scheme.size(),
        rhos: scheme.reconstruction_count(),
        samples: samples.len(),
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn canonical_partials() {
        assert_eq!(f_partial(&fixtures::sing(4)).to_literal(4), "0000");
        assert_eq!(f_partial(&fixtures::pow(2)).to_literal(2), "**");
        assert_eq!(f_partial(&fixtures::tree(3, 2)).to_literal(12), "0".repeat(12));
    }

    #[test]
    fn exceptional_examples() {
        let c = fixtures::sing(4);
        assert!(is_exceptional(PartialConcept::unspecified(), &c));
        assert!(is_exceptional(PartialConcept::from_labels([(3, false)]), &c));
        assert!(!is_exceptional(PartialConcept::from_labels([(2, true)]), &c));
    }

    #[test]
    fn compress_examples() {
        let c = fixtures::sing(4);
        let f = PartialConcept::from_labels([(2, true), (3, false)]);
        assert_eq!(compress(&c, f).unwrap(), vec![2]);
        let g = PartialConcept::from_labels([(1, false), (3, false)]);
        assert_eq!(compress(&c, g).unwrap(), vec![1]);
        let bad = PartialConcept::from_labels([(1, true), (3, true)]);
        assert!(compress(&c, bad).is_err());
        assert!(compress(&c, PartialConcept::unspecified()).is_err());
        let one = fixtures::sing(1);
        assert_eq!(compress(&one, PartialConcept::unspecified()).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn decompress_examples() {
        let c = fixtures::sing(4);
        let s = CompressionScheme::new(&c);
        assert_eq!(s.decompress(1, &[2]).unwrap(), Some(Concept::from_bits(0b0100)));
        assert_eq!(s.decompress(0, &[1]).unwrap(), Some(Concept::from_bits(0)));
        assert!(s.decompress(2, &[1]).is_err());
        let one = fixtures::sing(1);
        assert_eq!(CompressionScheme::new(&one).decompress(0, &[]).unwrap(), Some(one.concept(0)));
    }

    #[test]
    fn padded_encodings_parse_back() {
        assert_eq!(read_positive(&[4, 2, 4, 7, 4]), Some((vec![4, 2], vec![7])));
        assert_eq!(read_positive(&[4, 4, 4]), Some((vec![4], vec![])));
        assert_eq!(read_negative(&[5, 1, 5, 5]), Some(vec![5, 1]));
        assert_eq!(read_negative(&[5, 1, 5, 2]), None);
        assert_eq!(read_positive(&[5, 1, 1, 2]), None);
    }

    #[test]
    fn round_trip_on_fixtures() {
        for c in [fixtures::sing(4), fixtures::pow(3), fixtures::five(), fixtures::tree(3, 2)] {
            let r = check_round_trip(&c).unwrap();
            assert_eq!(r.failure, None, "{c:?}");
            assert_eq!(r.rhos, c.ldim() + 1);
        }
    }
}
