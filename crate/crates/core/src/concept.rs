//! Universes, total and partial labelings, and bitsets of concept indices.
//!
//! Element `i` of a universe is bit `i` of a `u64`, so a universe holds at
//! most [`MAX_ELEMENTS`] points. Every search in this crate is exponential in
//! the universe size anyway.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 64;

/// An ordered ground set of named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::pre("universe is empty"));
        }
        if names.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!(
                "{} elements (at most {MAX_ELEMENTS} supported)",
                names.len()
            )));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::pre("element names must be nonempty"));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::pre(format!("duplicate element name {name}")));
            }
        }
        Ok(Universe { names, index })
    }

    /// Universe `x0 x1 ... x{n-1}`.
    pub fn indexed(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Bitmask with one bit per element.
    pub fn full_mask(&self) -> u64 {
        mask_of_len(self.len())
    }
}

pub(crate) fn mask_of_len(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A total 0/1 labeling of a universe; bit `i` is the label of element `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Concept(u64);

impl Concept {
    pub const fn from_bits(bits: u64) -> Self {
        Concept(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn label(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn with_label(self, x: usize, label: bool) -> Self {
        if label {
            Concept(self.0 | 1 << x)
        } else {
            Concept(self.0 & !(1 << x))
        }
    }

    /// Elements on which the two labelings differ.
    pub fn difference(self, other: Concept) -> u64 {
        self.0 ^ other.0
    }

    pub fn to_bitstring(self, n: usize) -> String {
        (0..n).map(|i| if self.label(i) { '1' } else { '0' }).collect()
    }

    pub fn parse_bitstring(s: &str, n: usize) -> Result<Self> {
        if s.chars().count() != n {
            return Err(Error::parse(0, format!("expected {n} labels, got {s:?}")));
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::parse(0, format!("invalid label {ch:?} in {s:?}"))),
            }
        }
        Ok(Concept(bits))
    }

    /// This concept viewed as a total partial concept over `n` elements.
    pub fn to_partial(self, n: usize) -> PartialConcept {
        PartialConcept::new(mask_of_len(n), self.0)
    }
}

/// A partial labeling: elements in `mask` are specified, with labels in `values`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PartialConcept {
    mask: u64,
    values: u64,
}

impl PartialConcept {
    pub fn new(mask: u64, values: u64) -> Self {
        PartialConcept {
            mask,
            values: values & mask,
        }
    }

    /// The everywhere-unspecified labeling.
    pub fn unspecified() -> Self {
        Self::default()
    }

    pub fn from_labels<I: IntoIterator<Item = (usize, bool)>>(labels: I) -> Self {
        labels
            .into_iter()
            .fold(Self::default(), |p, (x, v)| p.with(x, v))
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn values(self) -> u64 {
        self.values
    }

    pub fn label(self, x: usize) -> Option<bool> {
        (self.mask >> x & 1 == 1).then_some(self.values >> x & 1 == 1)
    }

    pub fn is_specified(self, x: usize) -> bool {
        self.mask >> x & 1 == 1
    }

    /// `|A|`, the number of specified elements.
    pub fn size(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_total(self, n: usize) -> bool {
        self.mask == mask_of_len(n)
    }

    pub fn domain(self) -> impl Iterator<Item = usize> {
        bits(self.mask)
    }

    pub fn with(self, x: usize, label: bool) -> Self {
        let bit = 1u64 << x;
        PartialConcept {
            mask: self.mask | bit,
            values: if label {
                self.values | bit
            } else {
                self.values & !bit
            },
        }
    }

    /// `A|_Y`; fails unless `Y ⊆ dom(A)`.
    pub fn restrict(self, y: u64) -> Result<Self> {
        if y & !self.mask != 0 {
            return Err(Error::pre("restriction set is not contained in the domain"));
        }
        Ok(PartialConcept::new(y, self.values))
    }

    /// True when the concept agrees with every specified label.
    pub fn is_extended_by(self, c: Concept) -> bool {
        (c.bits() ^ self.values) & self.mask == 0
    }

    /// `self ⊑ other`.
    pub fn is_restriction_of(self, other: PartialConcept) -> bool {
        self.mask & !other.mask == 0 && (self.values ^ other.values) & self.mask == 0
    }

    /// Fill unspecified elements with label 0.
    pub fn zero_fill(self) -> Concept {
        Concept::from_bits(self.values)
    }

    /// Literal over `{0,1,*}` of length `n`.
    pub fn to_literal(self, n: usize) -> String {
        (0..n)
            .map(|i| match self.label(i) {
                None => '*',
                Some(true) => '1',
                Some(false) => '0',
            })
            .collect()
    }

    pub fn parse_literal(s: &str, n: usize) -> Result<Self> {
        if s.chars().count() != n {
            return Err(Error::parse(
                0,
                format!("expected a literal of length {n}, got {s:?}"),
            ));
        }
        let mut p = PartialConcept::default();
        for (i, ch) in s.chars().enumerate() {
            p = match ch {
                '0' => p.with(i, false),
                '1' => p.with(i, true),
                '*' => p,
                _ => return Err(Error::parse(0, format!("invalid symbol {ch:?} in {s:?}"))),
            };
        }
        Ok(p)
    }
}

/// Iterate the set bit positions of a word in increasing order.
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

/// A set of concept indices of one class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConceptSet {
    words: Box<[u64]>,
}

impl ConceptSet {
    pub fn empty(universe_size: usize) -> Self {
        ConceptSet {
            words: vec![0; universe_size.div_ceil(64).max(1)].into_boxed_slice(),
        }
    }

    pub fn full(size: usize) -> Self {
        let mut s = Self::empty(size);
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if lo < size {
                *word = mask_of_len(size - lo);
            }
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(size: usize, indices: I) -> Self {
        let mut s = Self::empty(size);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| bits(word).map(move |b| w * 64 + b))
    }

    pub fn intersection(&self, other: &ConceptSet) -> ConceptSet {
        ConceptSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &ConceptSet) -> ConceptSet {
        ConceptSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &ConceptSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for ConceptSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
