use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{Learner, VersionSpace};
use crate::class::ConceptClass;
use crate::concept::ConceptSet;
use crate::distribution::Distribution;
use crate::error::Result;
use crate::teachers::{Move, Response};
use crate::thicket::maxmin_choice;

/// Proposes the concept of highest query rank within the version space.
#[derive(Debug, Clone)]
pub struct ThicketLearner {
    vs: VersionSpace,
    mu: Distribution,
    memo: Arc<Mutex<HashMap<ConceptSet, usize>>>,
}

impl ThicketLearner {
    pub fn new(class: &ConceptClass, mu: &Distribution) -> Self {
        Self::with_memo(class, mu, Arc::default())
    }

    /// Share choices between learners over the same class and distribution.
    pub fn with_memo(
        class: &ConceptClass,
        mu: &Distribution,
        memo: Arc<Mutex<HashMap<ConceptSet, usize>>>,
    ) -> Self {
        ThicketLearner {
            vs: VersionSpace::new(class),
            mu: mu.clone(),
            memo,
        }
    }
}

impl Learner for ThicketLearner {
    fn next_move(&mut self) -> Result<Move> {
        self.vs.require_nonempty()?;
        let cached = self.memo.lock().expect("choice memo").get(&self.vs.v).copied();
        let i = match cached {
            Some(i) => i,
            None => {
                let i = maxmin_choice(&self.vs.class, &self.vs.v, &self.mu);
                self.memo
                    .lock()
                    .expect("choice memo")
                    .insert(self.vs.v.clone(), i);
                i
            }
        };
        Ok(Move::Eq(self.vs.class.concept(i)))
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
