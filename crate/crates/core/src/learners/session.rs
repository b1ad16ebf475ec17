use std::fmt;

use super::Learner;
use crate::class::ConceptClass;
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;
use crate::teachers::{apply_response, Move, Response, Teacher};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub entries: Vec<(Move, Response)>,
    pub eq_count: usize,
    pub mq_count: usize,
    pub outcome: Outcome,
}

impl Transcript {
    pub fn queries(&self) -> usize {
        self.eq_count + self.mq_count
    }

    pub fn succeeded(&self) -> bool {
        self.outcome == Outcome::Success
    }

    /// One line per turn followed by the summary line.
    pub fn render(&self, class: &ConceptClass) -> String {
        let u = class.universe();
        let mut out = String::new();
        for (mv, r) in &self.entries {
            let line = match (mv, r) {
                (Move::Eq(b), Response::Yes) => format!("EQ {} -> YES", b.to_bitstring(u.len())),
                (Move::Eq(b), Response::Counterexample { element, label }) => format!(
                    "EQ {} -> CE {} {}",
                    b.to_bitstring(u.len()),
                    u.name(*element),
                    *label as u8
                ),
                (Move::Mq(x), Response::Label(l)) => format!("MQ {} -> {}", u.name(*x), *l as u8),
                (mv, r) => format!("?? {mv:?} -> {r:?}"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&self.to_string());
        out.push('\n');
        out
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let result = match self.outcome {
            Outcome::Success => "success",
            Outcome::Exhausted => "exhausted",
        };
        write!(f, "result={result} eq={} mq={}", self.eq_count, self.mq_count)
    }
}

/// Run `learner` against `teacher` for at most `budget` queries.
///
/// Fails if the teacher's answers stop being realizable by its class.
pub fn run_session<L, T>(learner: &mut L, teacher: &mut T, budget: usize) -> Result<Transcript>
where
    L: Learner + ?Sized,
    T: Teacher + ?Sized,
{
    drive(learner, teacher, budget, None)
}

/// As [`run_session`], additionally failing if an equivalence query
/// proposes something outside `hypotheses`.
pub fn run_session_in<L, T>(
    learner: &mut L,
    teacher: &mut T,
    budget: usize,
    hypotheses: &LazyHypothesisClass,
) -> Result<Transcript>
where
    L: Learner + ?Sized,
    T: Teacher + ?Sized,
{
    drive(learner, teacher, budget, Some(hypotheses))
}

fn drive<L, T>(
    learner: &mut L,
    teacher: &mut T,
    budget: usize,
    hypotheses: Option<&LazyHypothesisClass>,
) -> Result<Transcript>
where
    L: Learner + ?Sized,
    T: Teacher + ?Sized,
{
    if budget == 0 {
        return Err(Error::pre("query budget must be positive"));
    }
    let class = teacher.class().clone();
    let mut coherent = class.all();
    let mut t = Transcript {
        entries: Vec::new(),
        eq_count: 0,
        mq_count: 0,
        outcome: Outcome::Exhausted,
    };
    while t.queries() < budget {
        let mv = learner.next_move()?;
        match mv {
            Move::Eq(b) => {
                if let Some(h) = hypotheses {
                    if !h.contains(b) {
                        return Err(Error::Invariant(format!(
                            "hypothesis {} is not in the hypothesis class",
                            b.to_bitstring(class.n())
                        )));
                    }
                }
                t.eq_count += 1;
            }
            Move::Mq(x) if x >= class.n() => {
                return Err(Error::Invariant(format!("membership query for unknown element {x}")));
            }
            Move::Mq(_) => t.mq_count += 1,
        }
        let r = teacher.respond(&mv);
        if !r.is_well_formed(&mv) {
            return Err(Error::Incoherent(format!("answer {r:?} does not fit {mv:?}")));
        }
        coherent = apply_response(&class, &coherent, &mv, &r);
        if coherent.is_empty() {
            return Err(Error::Incoherent(
                "no concept of the class matches every answer".into(),
            ));
        }
        learner.observe(&mv, &r);
        t.entries.push((mv, r));
        if r == Response::Yes {
            t.outcome = Outcome::Success;
            break;
        }
    }
    Ok(t)
}
