use super::{Learner, VersionSpace};
use crate::class::ConceptClass;
use crate::concept::PartialConcept;
use crate::dimensions::consistency_dim;
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;
use crate::teachers::{Move, Response};

/// Learner for classes of consistency dimension at most 2.
///
/// It labels a point only when that label keeps the full Ldim of the
/// version space. The resulting partial is 2-consistent, so it extends into
/// `H`. Every counterexample lowers the Ldim.
#[derive(Debug, Clone)]
pub struct Sc2Learner {
    vs: VersionSpace,
    hypotheses: LazyHypothesisClass,
}

impl Sc2Learner {
    pub fn new(class: &ConceptClass, h: &LazyHypothesisClass) -> Result<Self> {
        let c = consistency_dim(class, h)?;
        if c > 2 {
            return Err(Error::pre(format!(
                "consistency dimension is {c}; this learner needs at most 2"
            )));
        }
        Ok(Sc2Learner {
            vs: VersionSpace::new(class),
            hypotheses: h.clone(),
        })
    }

    /// The partial `A_i`: label `j` at `x` iff `V^(x,j)` keeps full Ldim.
    pub fn partial(&self) -> PartialConcept {
        let c = &self.vs.class;
        let d = self.vs.ldim();
        let mut a = PartialConcept::unspecified();
        for x in 0..c.n() {
            let one = c.split(&self.vs.v, x, true);
            let zero = self.vs.v.difference(&one);
            if c.ldim_of(&zero) == d {
                a = a.with(x, false);
            } else if c.ldim_of(&one) == d {
                a = a.with(x, true);
            }
        }
        a
    }

    pub fn bound(class: &ConceptClass) -> usize {
        class.ldim() + 1
    }
}

impl Learner for Sc2Learner {
    fn next_move(&mut self) -> Result<Move> {
        self.vs.require_nonempty()?;
        let a = self.partial();
        match self.hypotheses.find_extension(a) {
            Some(b) => Ok(Move::Eq(b)),
            None => Err(Error::Invariant(format!(
                "{} has no extension in the hypothesis class",
                a.to_literal(self.vs.class.n())
            ))),
        }
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
