use super::{Learner, VersionSpace};
use crate::class::ConceptClass;
use crate::concept::PartialConcept;
use crate::dimensions::strong_consistency_dim;
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;
use crate::teachers::{Move, Response};

/// Thresholded majority vote extended into `H`.
///
/// With `c = max(SC, 2)` a point gets label 1 when more than `(c-1)/c` of
/// the version space has it, label 0 when fewer than `1/c` do. Any `c`
/// specified points are then realized by some concept, so the partial
/// extends into `H`. Each counterexample removes at least a `1/c` fraction
/// of the version space.
#[derive(Debug, Clone)]
pub struct HalvingLearner {
    vs: VersionSpace,
    hypotheses: LazyHypothesisClass,
    sc: usize,
}

impl HalvingLearner {
    pub fn new(class: &ConceptClass, h: &LazyHypothesisClass) -> Result<Self> {
        let sc = strong_consistency_dim(class, h)?;
        Ok(HalvingLearner {
            vs: VersionSpace::new(class),
            hypotheses: h.clone(),
            sc,
        })
    }

    pub fn strong_dim(&self) -> usize {
        self.sc
    }

    /// Threshold parameter actually used; at `SC = 1` the two thresholds
    /// would overlap, so 2 is used instead.
    pub fn threshold(&self) -> usize {
        self.sc.max(2)
    }

    pub fn partial(&self) -> PartialConcept {
        let c = &self.vs.class;
        let t = self.threshold();
        let n = self.vs.v.len();
        let mut a = PartialConcept::unspecified();
        for x in 0..c.n() {
            let ones = c.split(&self.vs.v, x, true).len();
            if t * ones > (t - 1) * n {
                a = a.with(x, true);
            } else if t * ones < n {
                a = a.with(x, false);
            }
        }
        a
    }

    /// `⌈SC · ln|C|⌉`, and at least 1.
    pub fn bound(class: &ConceptClass, sc: usize) -> usize {
        ((sc as f64) * (class.len() as f64).ln()).ceil().max(1.0) as usize
    }
}

impl Learner for HalvingLearner {
    fn next_move(&mut self) -> Result<Move> {
        self.vs.require_nonempty()?;
        if let Some(b) = self.vs.only() {
            return Ok(Move::Eq(b));
        }
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
