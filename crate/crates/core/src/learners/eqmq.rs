use std::collections::VecDeque;

use super::{Learner, VersionSpace};
use crate::class::ConceptClass;
use crate::concept::Concept;
use crate::dimensions::consistency_dim;
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;
use crate::teachers::{Move, Response};

/// Learner using both query types.
///
/// Each round lowers the Ldim of the version space at a cost of at most
/// `c' = max(1, c-1)` queries. It asks for a point that splits the space
/// into two smaller-Ldim halves. Otherwise it proposes the full-Ldim
/// labeling `B`. If `B` is not in `H`, it asks about all but one point of
/// a witness set that no consistent concept agrees with.
#[derive(Debug, Clone)]
pub struct EqMqLearner {
    vs: VersionSpace,
    hypotheses: LazyHypothesisClass,
    c: usize,
    /// Witness points still to ask, with the labels `B` gives them.
    pending: VecDeque<(usize, bool)>,
}

impl EqMqLearner {
    pub fn new(class: &ConceptClass, h: &LazyHypothesisClass) -> Result<Self> {
        let c = consistency_dim(class, h)?;
        Ok(Self::with_dimension(class, h, c))
    }

    /// Skip recomputing the consistency dimension.
    pub fn with_dimension(class: &ConceptClass, h: &LazyHypothesisClass, c: usize) -> Self {
        EqMqLearner {
            vs: VersionSpace::new(class),
            hypotheses: h.clone(),
            c,
            pending: VecDeque::new(),
        }
    }

    pub fn consistency_dim(&self) -> usize {
        self.c
    }

    /// `c'·d + 1` queries of either kind.
    pub fn bound(class: &ConceptClass, c: usize) -> usize {
        c.saturating_sub(1).max(1) * class.ldim() + 1
    }

    fn plan(&mut self) -> Result<Move> {
        if let Some(b) = self.vs.only() {
            return Ok(Move::Eq(b));
        }
        if let Some(x) = self.vs.dropping_split() {
            return Ok(Move::Mq(x));
        }
        let b: Concept = self.vs.full_ldim_total();
        if self.hypotheses.contains(b) {
            return Ok(Move::Eq(b));
        }
        let w = self.vs.witness_points(b, self.c).ok_or_else(|| {
            Error::Invariant(format!(
                "{} is outside H yet {}-consistent with the version space",
                b.to_bitstring(self.vs.class.n()),
                self.c
            ))
        })?;
        // The last witness point is implied once the others agree with B.
        self.pending = w[..w.len() - 1].iter().map(|&x| (x, b.label(x))).collect();
        match self.pending.front() {
            Some(&(x, _)) => Ok(Move::Mq(x)),
            None => Err(Error::Invariant("witness of size 1 for a realized labeling".into())),
        }
    }
}

impl Learner for EqMqLearner {
    fn next_move(&mut self) -> Result<Move> {
        self.vs.require_nonempty()?;
        match self.pending.front() {
            Some(&(x, _)) => Ok(Move::Mq(x)),
            None => self.plan(),
        }
    }

    fn observe(&mut self, mv: &Move, r: &Response) {
        self.vs.observe(mv, r);
        match (mv, r, self.pending.front()) {
            (Move::Mq(x), Response::Label(l), Some(&(y, b))) if *x == y => {
                self.pending.pop_front();
                // An answer that disagrees with B already lowered the Ldim.
                if *l != b {
                    self.pending.clear();
                }
            }
            _ => self.pending.clear(),
        }
    }

    fn is_done(&self) -> bool {
        self.vs.done
    }

    fn gave_up(&self) -> bool {
        self.vs.v.is_empty()
    }

    fn prime(&mut self, history: &[(Move, Response)]) {
        self.vs.prime(history);
        self.pending.clear();
    }
}
