//! Exact learning complexity by minimax search.
//!
//! The adversary keeps no target. Any answer that leaves at least one
//! concept consistent is allowed, and the game value of a version space is
//! the number of queries an optimal learner needs in the worst case,
//! counting the final correct equivalence query.

use std::collections::HashMap;

use crate::class::ConceptClass;
use crate::concept::{bits, Concept, ConceptSet};
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;

/// Most hypotheses the solver will enumerate.
pub const HYPOTHESIS_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Eq,
    EqMq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameValue {
    pub lc: usize,
    /// Version spaces solved (memo insertions).
    pub nodes: usize,
}

pub struct GameSolver {
    class: ConceptClass,
    hyps: Vec<Concept>,
    mode: Mode,
    prune: bool,
    memo: HashMap<ConceptSet, usize>,
}

impl GameSolver {
    pub fn new(c: &ConceptClass, h: &LazyHypothesisClass, mode: Mode) -> Result<Self> {
        h.check_contains_class(c)?;
        let hyps = h.enumerate()?.concepts().to_vec();
        if hyps.len() > HYPOTHESIS_LIMIT {
            return Err(Error::TooLarge(format!(
                "{} hypotheses (limit {HYPOTHESIS_LIMIT})",
                hyps.len()
            )));
        }
        Ok(GameSolver {
            class: c.clone(),
            hyps,
            mode,
            prune: true,
            memo: HashMap::new(),
        })
    }

    /// Disable cutoffs; values are identical, only slower.
    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }

    pub fn solve(&mut self) -> GameValue {
        let lc = self.value(&self.class.all());
        GameValue {
            lc,
            nodes: self.memo.len(),
        }
    }

    pub fn value(&mut self, s: &ConceptSet) -> usize {
        if s.len() == 1 {
            return 1;
        }
        if let Some(&v) = self.memo.get(s) {
            return v;
        }
        let c = self.class.clone();
        let lower = match self.mode {
            Mode::Eq => c.ldim_of(s) as usize + 1,
            Mode::EqMq => 2,
        };
        let full = c.universe().full_mask();
        let (mut any, mut all) = (0u64, full);
        for i in s.iter() {
            any |= c.concept(i).bits();
            all &= c.concept(i).bits();
        }
        let mut best = usize::MAX;
        for hi in 0..self.hyps.len() {
            let b = self.hyps[hi];
            // Points where some member of s disagrees with b.
            let diff = ((any & !b.bits()) | (!all & b.bits())) & full;
            let mut worst = c.index_of(b).map_or(0, |i| s.contains(i) as usize);
            let mut useful = true;
            for x in bits(diff) {
                if self.prune && worst >= best {
                    break;
                }
                let sx = c.split(s, x, !b.label(x));
                if sx == *s {
                    useful = false;
                    break;
                }
                worst = worst.max(1 + self.value(&sx));
            }
            if useful {
                best = best.min(worst);
            }
            if self.prune && best <= lower {
                break;
            }
        }
        if self.mode == Mode::EqMq && !(self.prune && best <= lower) {
            for x in bits(any & !all) {
                let one = c.split(s, x, true);
                let zero = s.difference(&one);
                let mut worst = 1 + self.value(&zero);
                if !(self.prune && worst >= best) {
                    worst = worst.max(1 + self.value(&one));
                }
                best = best.min(worst);
                if self.prune && best <= lower {
                    break;
                }
            }
        }
        self.memo.insert(s.clone(), best);
        best
    }
}

/// `LC^EQ(C, H)`.
pub fn lc_eq_exact(c: &ConceptClass, h: &LazyHypothesisClass) -> Result<GameValue> {
    Ok(GameSolver::new(c, h, Mode::Eq)?.solve())
}

/// `LC^{EQ+MQ}(C, H)`.
pub fn lc_eqmq_exact(c: &ConceptClass, h: &LazyHypothesisClass) -> Result<GameValue> {
    Ok(GameSolver::new(c, h, Mode::EqMq)?.solve())
}
