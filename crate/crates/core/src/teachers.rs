//! Teachers answer equivalence and membership queries about a target.
//!
//! Adversarial teachers keep no fixed target. They only promise that some
//! concept of the class matches every answer given so far.

use crate::class::ConceptClass;
use crate::concept::{bits, Concept, ConceptSet, PartialConcept};
use crate::consistency::is_n_consistent;
use crate::dimensions::{mistake_tree, MistakeTree};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::hypothesis::LazyHypothesisClass;
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Eq(Concept),
    Mq(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Response {
    Yes,
    Counterexample { element: usize, label: bool },
    Label(bool),
}

impl Response {
    /// The labeled point this response reveals about the target, if any.
    pub fn revealed(&self, mv: &Move) -> Option<(usize, bool)> {
        match (mv, self) {
            (_, Response::Counterexample { element, label }) => Some((*element, *label)),
            (Move::Mq(x), Response::Label(l)) => Some((*x, *l)),
            _ => None,
        }
    }

    /// Does this response have the right shape for the move?
    pub fn is_well_formed(&self, mv: &Move) -> bool {
        match (mv, self) {
            (Move::Eq(_), Response::Yes) => true,
            (Move::Eq(b), Response::Counterexample { element, label }) => b.label(*element) != *label,
            (Move::Mq(_), Response::Label(_)) => true,
            _ => false,
        }
    }
}

/// Members of `v` consistent with one response.
pub fn apply_response(c: &ConceptClass, v: &ConceptSet, mv: &Move, r: &Response) -> ConceptSet {
    match (mv, r) {
        (Move::Eq(b), Response::Yes) => match c.index_of(*b) {
            Some(i) if v.contains(i) => ConceptSet::from_indices(c.len(), [i]),
            _ => c.empty_set(),
        },
        _ => match r.revealed(mv) {
            Some((x, l)) => c.split(v, x, l),
            None => v.clone(),
        },
    }
}

pub trait Teacher {
    fn respond(&mut self, mv: &Move) -> Response;
    /// The class the target is drawn from.
    fn class(&self) -> &ConceptClass;
}

/// Honest answer for a fixed target: the least differing element.
pub fn honest_answer(target: Concept, n: usize, mv: &Move) -> Response {
    match *mv {
        Move::Eq(b) => match bits(b.difference(target) & crate::concept::mask_of_len(n)).next() {
            None => Response::Yes,
            Some(x) => Response::Counterexample {
                element: x,
                label: target.label(x),
            },
        },
        Move::Mq(x) => Response::Label(target.label(x)),
    }
}

/// Fixed target; counterexamples are the least element of the symmetric difference.
#[derive(Debug, Clone)]
pub struct HonestTeacher {
    class: ConceptClass,
    target: Concept,
}

impl HonestTeacher {
    pub fn new(class: &ConceptClass, target: usize) -> Result<Self> {
        if target >= class.len() {
            return Err(Error::pre(format!("target index {target} out of range")));
        }
        Ok(HonestTeacher {
            class: class.clone(),
            target: class.concept(target),
        })
    }

    pub fn target(&self) -> Concept {
        self.target
    }
}

impl Teacher for HonestTeacher {
    fn respond(&mut self, mv: &Move) -> Response {
        honest_answer(self.target, self.class.n(), mv)
    }

    fn class(&self) -> &ConceptClass {
        &self.class
    }
}

/// Walks a mistake tree of maximal height, always answering the side the
/// hypothesis got wrong. Once the tree runs out it commits to the first
/// concept still consistent and answers honestly.
#[derive(Debug, Clone)]
pub struct TreeAdversary {
    class: ConceptClass,
    version: ConceptSet,
    tree: MistakeTree,
    committed: Option<Concept>,
}

impl TreeAdversary {
    pub fn new(class: &ConceptClass) -> Self {
        let version = class.all();
        let tree = mistake_tree(class, &version, class.ldim());
        TreeAdversary {
            class: class.clone(),
            version,
            tree,
            committed: None,
        }
    }

    fn commit(&mut self) -> Concept {
        *self.committed.get_or_insert_with(|| {
            self.class
                .concept(self.version.first().expect("coherent adversary"))
        })
    }
}

impl Teacher for TreeAdversary {
    fn respond(&mut self, mv: &Move) -> Response {
        if let Some(t) = self.committed {
            return honest_answer(t, self.class.n(), mv);
        }
        let r = match (*mv, &self.tree) {
            (Move::Eq(b), MistakeTree::Node { element, zero, one }) => {
                let label = !b.label(*element);
                let next = if label { one } else { zero };
                let r = Response::Counterexample {
                    element: *element,
                    label,
                };
                self.tree = (**next).clone();
                r
            }
            (Move::Eq(_), MistakeTree::Leaf { .. }) => {
                let t = self.commit();
                return honest_answer(t, self.class.n(), mv);
            }
            (Move::Mq(x), _) => {
                let zero = self.class.split(&self.version, x, false);
                let one = self.class.split(&self.version, x, true);
                let label = self.class.ldim_of(&one) > self.class.ldim_of(&zero);
                let v = if label { one } else { zero };
                let h = self.class.ldim_of(&v) as usize;
                self.tree = mistake_tree(&self.class, &v, h);
                Response::Label(label)
            }
        };
        self.version = apply_response(&self.class, &self.version, mv, &r);
        r
    }

    fn class(&self) -> &ConceptClass {
        &self.class
    }
}

/// Answers according to a partial `A` that is n-consistent with the class
/// but has no extension among the hypotheses, for as long as that stays
/// coherent.
#[derive(Debug, Clone)]
pub struct WitnessAdversary {
    class: ConceptClass,
    witness: PartialConcept,
    version: ConceptSet,
    committed: Option<Concept>,
}

impl WitnessAdversary {
    pub fn new(
        class: &ConceptClass,
        hypotheses: &LazyHypothesisClass,
        witness: PartialConcept,
        n: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::pre("witness adversary needs n ≥ 1"));
        }
        if witness.mask() & !class.universe().full_mask() != 0 {
            return Err(Error::UniverseMismatch);
        }
        if !is_n_consistent(witness, class, n) {
            return Err(Error::pre(format!(
                "{} is not {n}-consistent with the class",
                witness.to_literal(class.n())
            )));
        }
        if let Some(h) = hypotheses.find_extension(witness) {
            return Err(Error::pre(format!(
                "{} extends to the hypothesis {}",
                witness.to_literal(class.n()),
                h.to_bitstring(class.n())
            )));
        }
        Ok(WitnessAdversary {
            class: class.clone(),
            witness,
            version: class.all(),
            committed: None,
        })
    }

    fn keeps(&self, x: usize, label: bool) -> bool {
        !self.class.split(&self.version, x, label).is_empty()
    }
}

impl Teacher for WitnessAdversary {
    fn respond(&mut self, mv: &Move) -> Response {
        if let Some(t) = self.committed {
            return honest_answer(t, self.class.n(), mv);
        }
        let fallback = self
            .class
            .concept(self.version.first().expect("coherent adversary"));
        let r = match *mv {
            Move::Eq(b) => {
                let diff = (b.bits() ^ self.witness.values()) & self.witness.mask();
                match bits(diff).find(|&x| self.keeps(x, self.witness.label(x).unwrap_or(false))) {
                    Some(x) => Response::Counterexample {
                        element: x,
                        label: !b.label(x),
                    },
                    None => {
                        self.committed = Some(fallback);
                        return honest_answer(fallback, self.class.n(), mv);
                    }
                }
            }
            Move::Mq(x) => match self.witness.label(x) {
                Some(l) if self.keeps(x, l) => Response::Label(l),
                _ => Response::Label(fallback.label(x)),
            },
        };
        self.version = apply_response(&self.class, &self.version, mv, &r);
        r
    }

    fn class(&self) -> &ConceptClass {
        &self.class
    }
}

/// Honest teacher drawing each counterexample from `μ` restricted to the
/// symmetric difference.
#[derive(Debug, Clone)]
pub struct RandomTeacher {
    class: ConceptClass,
    target: Concept,
    mu: Distribution,
    rng: SplitMix64,
}

impl RandomTeacher {
    pub fn new(class: &ConceptClass, target: usize, mu: &Distribution, seed: u64) -> Result<Self> {
        Self::with_rng(class, target, mu, SplitMix64::new(seed))
    }

    pub fn with_rng(class: &ConceptClass, target: usize, mu: &Distribution, rng: SplitMix64) -> Result<Self> {
        if target >= class.len() {
            return Err(Error::pre(format!("target index {target} out of range")));
        }
        if mu.len() != class.n() {
            return Err(Error::UniverseMismatch);
        }
        Ok(RandomTeacher {
            class: class.clone(),
            target: class.concept(target),
            mu: mu.clone(),
            rng,
        })
    }
}

impl Teacher for RandomTeacher {
    fn respond(&mut self, mv: &Move) -> Response {
        match *mv {
            Move::Eq(b) if b != self.target => {
                let diff = b.difference(self.target) & self.class.universe().full_mask();
                let x = self.mu.sample_in(diff, &mut self.rng);
                Response::Counterexample {
                    element: x,
                    label: self.target.label(x),
                }
            }
            _ => honest_answer(self.target, self.class.n(), mv),
        }
    }

    fn class(&self) -> &ConceptClass {
        &self.class
    }
}
