use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::concept::{Concept, ConceptSet, PartialConcept, Universe};
use crate::error::{Error, Result};

/// An ordered collection of distinct concepts over one universe.
///
/// The order of `concepts` is the tie-break order used by every algorithm.
/// Version spaces are [`ConceptSet`]s of indices into this list.
#[derive(Clone)]
pub struct ConceptClass {
    universe: Arc<Universe>,
    concepts: Vec<Concept>,
    positive: Vec<ConceptSet>,
    lookup: HashMap<Concept, usize>,
    pub(crate) ldim_memo: Arc<Mutex<HashMap<ConceptSet, i32>>>,
}

impl ConceptClass {
    pub fn new(universe: Arc<Universe>, concepts: Vec<Concept>) -> Result<Self> {
        if concepts.is_empty() {
            return Err(Error::EmptyClass);
        }
        let n = universe.len();
        let full = universe.full_mask();
        let mut lookup = HashMap::with_capacity(concepts.len());
        for (i, &c) in concepts.iter().enumerate() {
            if c.bits() & !full != 0 {
                return Err(Error::pre("concept labels elements outside the universe"));
            }
            if lookup.insert(c, i).is_some() {
                return Err(Error::DuplicateConcept(c.to_bitstring(n)));
            }
        }
        let positive = (0..n)
            .map(|x| {
                ConceptSet::from_indices(
                    concepts.len(),
                    concepts
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| c.label(x))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        Ok(ConceptClass {
            universe,
            concepts,
            positive,
            lookup,
            ldim_memo: Arc::default(),
        })
    }

    pub fn from_bitstrings<S: AsRef<str>>(universe: Arc<Universe>, rows: &[S]) -> Result<Self> {
        let n = universe.len();
        let concepts = rows
            .iter()
            .map(|r| Concept::parse_bitstring(r.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, concepts)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Number of elements of the universe.
    pub fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concept(&self, i: usize) -> Concept {
        self.concepts[i]
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn index_of(&self, c: Concept) -> Option<usize> {
        self.lookup.get(&c).copied()
    }

    pub fn contains(&self, c: Concept) -> bool {
        self.lookup.contains_key(&c)
    }

    pub fn same_universe(&self, other: &ConceptClass) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe
    }

    /// The version space containing every concept.
    pub fn all(&self) -> ConceptSet {
        ConceptSet::full(self.len())
    }

    pub fn empty_set(&self) -> ConceptSet {
        ConceptSet::empty(self.len())
    }

    /// Members of `s` that give `x` the label `label`: the class `C^{(x,label)}`.
    pub fn split(&self, s: &ConceptSet, x: usize, label: bool) -> ConceptSet {
        if label {
            s.intersection(&self.positive[x])
        } else {
            s.difference(&self.positive[x])
        }
    }

    /// Members of `s` extending the partial labeling.
    pub fn consistent(&self, s: &ConceptSet, a: PartialConcept) -> ConceptSet {
        ConceptSet::from_indices(
            self.len(),
            s.iter().filter(|&i| a.is_extended_by(self.concepts[i])),
        )
    }

    /// Does some concept extend `a`?
    pub fn has_extension(&self, a: PartialConcept) -> bool {
        self.concepts.iter().any(|&c| a.is_extended_by(c))
    }

    /// The members of `s` as a standalone class, keeping their relative order.
    pub fn subclass(&self, s: &ConceptSet) -> Result<ConceptClass> {
        ConceptClass::new(
            self.universe.clone(),
            s.iter().map(|i| self.concepts[i]).collect(),
        )
    }

    /// Elements on which the members of `s` do not all agree.
    pub fn splitting_elements(&self, s: &ConceptSet) -> u64 {
        let mut any = 0u64;
        let mut all = self.universe.full_mask();
        for i in s.iter() {
            any |= self.concepts[i].bits();
            all &= self.concepts[i].bits();
        }
        any & !all
    }
}

impl PartialEq for ConceptClass {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.concepts == other.concepts
    }
}

impl Eq for ConceptClass {}

impl fmt::Debug for ConceptClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        f.debug_struct("ConceptClass")
            .field("elements", &self.universe.names())
            .field(
                "concepts",
                &self
                    .concepts
                    .iter()
                    .map(|c| c.to_bitstring(n))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}
