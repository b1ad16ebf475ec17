use std::sync::Arc;

use crate::class::ConceptClass;
use crate::concept::{Concept, PartialConcept, Universe};
use crate::consistency::{disagreements, hitting_set_within, is_n_consistent};
use crate::error::{Error, Result};

/// Largest universe for which totals are enumerated explicitly.
pub const ENUMERATION_LIMIT: usize = 20;

/// A hypothesis class, possibly described by a membership predicate.
#[derive(Debug, Clone, PartialEq)]
pub enum LazyHypothesisClass {
    Explicit(ConceptClass),
    AllTotals(Arc<Universe>),
    /// Every total that is `m`-consistent with `base`.
    MConsistent { base: ConceptClass, m: usize },
}

impl LazyHypothesisClass {
    pub fn m_consistent(base: ConceptClass, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::pre("m must be positive"));
        }
        Ok(LazyHypothesisClass::MConsistent { base, m })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        match self {
            LazyHypothesisClass::Explicit(c) => c.universe(),
            LazyHypothesisClass::AllTotals(u) => u,
            LazyHypothesisClass::MConsistent { base, .. } => base.universe(),
        }
    }

    pub fn contains(&self, c: Concept) -> bool {
        match self {
            LazyHypothesisClass::Explicit(h) => h.contains(c),
            LazyHypothesisClass::AllTotals(u) => c.bits() & !u.full_mask() == 0,
            LazyHypothesisClass::MConsistent { base, m } => {
                is_n_consistent(c.to_partial(base.n()), base, *m)
            }
        }
    }

    /// Error unless every concept of `c` is a hypothesis over the same universe.
    pub fn check_contains_class(&self, c: &ConceptClass) -> Result<()> {
        if **self.universe() != **c.universe() {
            return Err(Error::UniverseMismatch);
        }
        if c.concepts().iter().all(|&b| self.contains(b)) {
            Ok(())
        } else {
            Err(Error::NotSubclass)
        }
    }

    /// Some hypothesis extending `a`, searching elements in universe order
    /// with label 0 tried first.
    pub fn find_extension(&self, a: PartialConcept) -> Option<Concept> {
        match self {
            LazyHypothesisClass::Explicit(h) => {
                h.concepts().iter().copied().find(|&c| a.is_extended_by(c))
            }
            LazyHypothesisClass::AllTotals(_) => Some(a.zero_fill()),
            LazyHypothesisClass::MConsistent { base, m } => {
                fn ok(p: PartialConcept, base: &ConceptClass, m: usize) -> bool {
                    match disagreements(p, base) {
                        None => true,
                        Some(sets) => !hitting_set_within(&sets, m.min(p.size())),
                    }
                }
                fn dfs(p: PartialConcept, x: usize, base: &ConceptClass, m: usize) -> Option<Concept> {
                    if !ok(p, base, m) {
                        return None;
                    }
                    if x == base.n() {
                        return Some(p.zero_fill());
                    }
                    if p.is_specified(x) {
                        return dfs(p, x + 1, base, m);
                    }
                    dfs(p.with(x, false), x + 1, base, m)
                        .or_else(|| dfs(p.with(x, true), x + 1, base, m))
                }
                dfs(a, 0, base, *m)
            }
        }
    }

    /// The hypotheses as an explicit class. Lazy kinds are listed in
    /// increasing bit order and require at most [`ENUMERATION_LIMIT`] elements.
    pub fn enumerate(&self) -> Result<ConceptClass> {
        if let LazyHypothesisClass::Explicit(h) = self {
            return Ok(h.clone());
        }
        let u = self.universe();
        if u.len() > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(format!(
                "enumerating hypotheses over {} elements",
                u.len()
            )));
        }
        let members = (0..1u64 << u.len())
            .map(Concept::from_bits)
            .filter(|&c| self.contains(c))
            .collect();
        ConceptClass::new(u.clone(), members)
    }
}
