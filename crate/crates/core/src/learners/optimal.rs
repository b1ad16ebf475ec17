use super::{Learner, VersionSpace};
use crate::class::ConceptClass;
use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;
use crate::teachers::{Move, Response};

/// Proposes the Ldim-majority labeling of the version space, so each
/// counterexample strictly lowers its Littlestone dimension.
#[derive(Debug, Clone)]
pub struct OptimalLearner {
    vs: VersionSpace,
    hypotheses: Option<LazyHypothesisClass>,
}

impl OptimalLearner {
    /// Hypotheses may be arbitrary totals.
    pub fn new(class: &ConceptClass) -> Self {
        OptimalLearner {
            vs: VersionSpace::new(class),
            hypotheses: None,
        }
    }

    /// Fails at query time if a majority labeling falls outside `h`.
    pub fn with_hypotheses(class: &ConceptClass, h: &LazyHypothesisClass) -> Result<Self> {
        h.check_contains_class(class)?;
        Ok(OptimalLearner {
            vs: VersionSpace::new(class),
            hypotheses: Some(h.clone()),
        })
    }

    /// `{x : Ldim(V^(x,1)) ≥ Ldim(V^(x,0))}`.
    pub fn hypothesis(&self) -> Concept {
        let c = &self.vs.class;
        let bits = (0..c.n()).fold(0u64, |m, x| {
            let one = c.split(&self.vs.v, x, true);
            let zero = self.vs.v.difference(&one);
            m | ((c.ldim_of(&one) >= c.ldim_of(&zero)) as u64) << x
        });
        Concept::from_bits(bits)
    }

    pub fn version_ldim(&self) -> i32 {
        self.vs.ldim()
    }

    /// `Ldim(C) + 1` equivalence queries.
    pub fn bound(class: &ConceptClass) -> usize {
        class.ldim() + 1
    }
}

impl Learner for OptimalLearner {
    fn next_move(&mut self) -> Result<Move> {
        self.vs.require_nonempty()?;
        let b = self.hypothesis();
        if let Some(h) = &self.hypotheses {
            if !h.contains(b) {
                return Err(Error::pre(format!(
                    "majority hypothesis {} is not in the hypothesis class",
                    b.to_bitstring(self.vs.class.n())
                )));
            }
        }
        Ok(Move::Eq(b))
    }

    fn observe(&mut self, mv: &Move, r: &Response) {
        self.vs.observe(mv, r);
    }

    fn is_done(&self) -> bool {
        self.vs.done
    }

    fn gave_up(&self) -> bool {
        self.vs.v.is_empty()
    }

    fn prime(&mut self, history: &[(Move, Response)]) {
        self.vs.prime(history);
    }
}
