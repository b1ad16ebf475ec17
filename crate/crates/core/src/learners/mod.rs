//! Query learners and the session driver.
//!
//! Every learner tracks a version space: the concepts of its class that are
//! consistent with all answers it has observed.

mod cdim;
mod compose;
mod eqmq;
mod halving;
mod optimal;
mod sc2;
mod session;
mod thicket;

pub use cdim::CdimLearner;
pub use compose::ComposeLearner;
pub use eqmq::EqMqLearner;
pub use halving::HalvingLearner;
pub use optimal::OptimalLearner;
pub use sc2::Sc2Learner;
pub use session::{run_session, run_session_in, Outcome, Transcript};
pub use thicket::ThicketLearner;

use itertools::Itertools;

use crate::class::ConceptClass;
use crate::concept::{bits, Concept, ConceptSet};
use crate::error::{Error, Result};
use crate::teachers::{apply_response, Move, Response};

pub trait Learner {
    fn next_move(&mut self) -> Result<Move>;
    fn observe(&mut self, mv: &Move, r: &Response);
    /// The last equivalence query was answered `Yes`.
    fn is_done(&self) -> bool;
    /// The learner has ruled out every concept it could still propose.
    fn gave_up(&self) -> bool {
        false
    }
    /// Replay answers given before this learner became active.
    fn prime(&mut self, _history: &[(Move, Response)]) {}
}

impl<L: Learner + ?Sized> Learner for Box<L> {
    fn next_move(&mut self) -> Result<Move> {
        (**self).next_move()
    }
    fn observe(&mut self, mv: &Move, r: &Response) {
        (**self).observe(mv, r)
    }
    fn is_done(&self) -> bool {
        (**self).is_done()
    }
    fn gave_up(&self) -> bool {
        (**self).gave_up()
    }
    fn prime(&mut self, history: &[(Move, Response)]) {
        (**self).prime(history)
    }
}

/// A class together with the indices still consistent with the answers seen.
#[derive(Debug, Clone)]
pub(crate) struct VersionSpace {
    pub class: ConceptClass,
    pub v: ConceptSet,
    pub done: bool,
}

impl VersionSpace {
    pub fn new(class: &ConceptClass) -> Self {
        Self::over(class, class.all())
    }

    pub fn over(class: &ConceptClass, v: ConceptSet) -> Self {
        VersionSpace {
            class: class.clone(),
            v,
            done: false,
        }
    }

    pub fn observe(&mut self, mv: &Move, r: &Response) {
        if *r == Response::Yes {
            self.done = true;
        }
        if r.revealed(mv).is_some() {
            self.v = apply_response(&self.class, &self.v, mv, r);
        }
    }

    pub fn prime(&mut self, history: &[(Move, Response)]) {
        for (mv, r) in history {
            if r.revealed(mv).is_some() {
                self.v = apply_response(&self.class, &self.v, mv, r);
            }
        }
    }

    pub fn ldim(&self) -> i32 {
        self.class.ldim_of(&self.v)
    }

    pub fn only(&self) -> Option<Concept> {
        (self.v.len() == 1).then(|| self.class.concept(self.v.first().expect("one member")))
    }

    pub fn require_nonempty(&self) -> Result<()> {
        if self.v.is_empty() {
            Err(Error::Invariant(
                "no concept is consistent with the answers".into(),
            ))
        } else {
            Ok(())
        }
    }

    /// The total labeling each point with the side that keeps full Ldim.
    /// Only meaningful when no element splits the space into two halves of
    /// smaller Ldim, which makes that side unique.
    pub fn full_ldim_total(&self) -> Concept {
        let d = self.ldim();
        let bits = (0..self.class.n()).fold(0u64, |m, x| {
            let one = self.class.split(&self.v, x, true);
            m | ((self.class.ldim_of(&one) == d) as u64) << x
        });
        Concept::from_bits(bits)
    }

    /// First element whose two halves both have smaller Ldim.
    pub fn dropping_split(&self) -> Option<usize> {
        let d = self.ldim();
        bits(self.class.splitting_elements(&self.v)).find(|&x| {
            let one = self.class.split(&self.v, x, true);
            let zero = self.v.difference(&one);
            self.class.ldim_of(&one) < d && self.class.ldim_of(&zero) < d
        })
    }

    /// Smallest (then lexicographically first) set of at most `max` points
    /// on which no member of the version space agrees with `b`.
    pub fn witness_points(&self, b: Concept, max: usize) -> Option<Vec<usize>> {
        let diffs: Vec<u64> = self
            .v
            .iter()
            .map(|i| self.class.concept(i).difference(b))
            .collect();
        (1..=max.min(self.class.n())).find_map(|k| {
            (0..self.class.n()).combinations(k).find(|w| {
                let m = w.iter().fold(0u64, |m, &x| m | 1 << x);
                diffs.iter().all(|d| d & m != 0)
            })
        })
    }
}
