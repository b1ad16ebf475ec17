use super::Learner;
use crate::error::{Error, Result};
use crate::teachers::{Move, Response};

/// Runs sub-learners in order, each for at most its budget of equivalence
/// queries, so the total never exceeds the sum of the budgets.
///
/// A sub-learner also stops early once it has ruled out all its concepts.
/// On becoming active it is primed with every answer given so far, which
/// only shrinks its version space.
pub struct ComposeLearner {
    subs: Vec<(Box<dyn Learner>, usize)>,
    active: usize,
    used: usize,
    history: Vec<(Move, Response)>,
    done: bool,
}

impl ComposeLearner {
    pub fn new(subs: Vec<(Box<dyn Learner>, usize)>) -> Self {
        let mut l = ComposeLearner {
            subs,
            active: 0,
            used: 0,
            history: Vec::new(),
            done: false,
        };
        l.settle();
        l
    }

    pub fn total_budget(&self) -> usize {
        self.subs.iter().map(|(_, b)| b).sum()
    }

    /// Index of the sub-learner currently asking.
    pub fn active(&self) -> usize {
        self.active
    }

    fn settle(&mut self) {
        while !self.done
            && self.active < self.subs.len()
            && (self.subs[self.active].0.gave_up() || self.used >= self.subs[self.active].1)
        {
            self.active += 1;
            self.used = 0;
            if let Some((next, _)) = self.subs.get_mut(self.active) {
                next.prime(&self.history);
            }
        }
    }
}

impl Learner for ComposeLearner {
    fn next_move(&mut self) -> Result<Move> {
        match self.subs.get_mut(self.active) {
            Some((l, _)) => l.next_move(),
            None => Err(Error::Invariant("every composed learner is exhausted".into())),
        }
    }

    fn observe(&mut self, mv: &Move, r: &Response) {
        self.history.push((*mv, *r));
        if matches!(mv, Move::Eq(_)) {
            self.used += 1;
        }
        if *r == Response::Yes {
            self.done = true;
        }
        if let Some((l, _)) = self.subs.get_mut(self.active) {
            l.observe(mv, r);
        }
        self.settle();
    }

    fn is_done(&self) -> bool {
        self.done
    }

    fn gave_up(&self) -> bool {
        !self.done && self.active >= self.subs.len()
    }

    fn prime(&mut self, history: &[(Move, Response)]) {
        self.history.extend_from_slice(history);
        if let Some((l, _)) = self.subs.get_mut(self.active) {
            l.prime(history);
        }
        self.settle();
    }
}
