use super::{ComposeLearner, Learner, OptimalLearner, Sc2Learner, VersionSpace};
use crate::class::ConceptClass;
use crate::concept::ConceptSet;
use crate::dimensions::consistency_dim;
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;
use crate::teachers::{Move, Response};

/// Equivalence-query learner with at most `c^d` queries for
/// `c = C(C,H) ≥ 2` and `d = Ldim(C)`.
///
/// `c = 1` runs the Ldim-majority learner and `c = 2` the [`Sc2Learner`],
/// both of which need only `d + 1` queries.
pub struct CdimLearner {
    inner: Box<dyn Learner>,
    c: usize,
}

impl CdimLearner {
    pub fn new(class: &ConceptClass, h: &LazyHypothesisClass) -> Result<Self> {
        let c = consistency_dim(class, h)?;
        Self::with_dimension(class, h, c)
    }

    pub fn with_dimension(class: &ConceptClass, h: &LazyHypothesisClass, c: usize) -> Result<Self> {
        let inner: Box<dyn Learner> = match c {
            0 => return Err(Error::pre("consistency dimension is positive")),
            1 => Box::new(OptimalLearner::with_hypotheses(class, h)?),
            2 => Box::new(Sc2Learner::new(class, h)?),
            _ => Box::new(CdimNode::new(class, class.all(), h, c)),
        };
        Ok(CdimLearner { inner, c })
    }

    pub fn consistency_dim(&self) -> usize {
        self.c
    }

    /// `c^d` for `c ≥ 2`, `d + 1` when `c = 1`.
    pub fn bound(class: &ConceptClass, c: usize) -> usize {
        let d = class.ldim();
        if c <= 1 {
            d + 1
        } else {
            c.saturating_pow(d as u32)
        }
    }
}

impl Learner for CdimLearner {
    fn next_move(&mut self) -> Result<Move> {
        self.inner.next_move()
    }
    fn observe(&mut self, mv: &Move, r: &Response) {
        self.inner.observe(mv, r)
    }
    fn is_done(&self) -> bool {
        self.inner.is_done()
    }
    fn gave_up(&self) -> bool {
        self.inner.gave_up()
    }
    fn prime(&mut self, history: &[(Move, Response)]) {
        self.inner.prime(history)
    }
}

/// One level of the recursion, planned lazily on its first query.
struct CdimNode {
    vs: VersionSpace,
    hypotheses: LazyHypothesisClass,
    c: usize,
    split: Option<ComposeLearner>,
}

impl CdimNode {
    fn new(class: &ConceptClass, v: ConceptSet, h: &LazyHypothesisClass, c: usize) -> Self {
        CdimNode {
            vs: VersionSpace::over(class, v),
            hypotheses: h.clone(),
            c,
            split: None,
        }
    }

    /// Learn the parts one after another, part `i` with budget `c^{Ldim(part i)}`.
    fn compose(&self, parts: Vec<ConceptSet>) -> ComposeLearner {
        let class = &self.vs.class;
        ComposeLearner::new(
            parts
                .into_iter()
                .filter(|p| !p.is_empty())
                .map(|p| {
                    let budget = self.c.saturating_pow(class.ldim_of(&p) as u32);
                    let node = CdimNode::new(class, p, &self.hypotheses, self.c);
                    (Box::new(node) as Box<dyn Learner>, budget)
                })
                .collect(),
        )
    }
}

impl Learner for CdimNode {
    fn next_move(&mut self) -> Result<Move> {
        if let Some(s) = &mut self.split {
            return s.next_move();
        }
        self.vs.require_nonempty()?;
        if let Some(b) = self.vs.only() {
            return Ok(Move::Eq(b));
        }
        let class = &self.vs.class;
        if let Some(x) = self.vs.dropping_split() {
            let one = class.split(&self.vs.v, x, true);
            let zero = self.vs.v.difference(&one);
            self.split = Some(self.compose(vec![zero, one]));
            return self.next_move();
        }
        let b = self.vs.full_ldim_total();
        if self.hypotheses.contains(b) {
            return Ok(Move::Eq(b));
        }
        let w = self.vs.witness_points(b, self.c).ok_or_else(|| {
            Error::Invariant(format!(
                "{} is outside H yet {}-consistent with the version space",
                b.to_bitstring(class.n()),
                self.c
            ))
        })?;
        let parts = w
            .iter()
            .map(|&x| class.split(&self.vs.v, x, !b.label(x)))
            .collect();
        self.split = Some(self.compose(parts));
        self.next_move()
    }

    fn observe(&mut self, mv: &Move, r: &Response) {
        self.vs.observe(mv, r);
        if let Some(s) = &mut self.split {
            s.observe(mv, r);
        }
    }

    fn is_done(&self) -> bool {
        self.vs.done
    }

    fn gave_up(&self) -> bool {
        self.vs.v.is_empty() || self.split.as_ref().is_some_and(|s| s.gave_up())
    }

    fn prime(&mut self, history: &[(Move, Response)]) {
        self.vs.prime(history);
        if let Some(s) = &mut self.split {
            s.prime(history);
        }
    }
}
