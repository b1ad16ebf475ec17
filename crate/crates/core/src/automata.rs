//! Binary DFAs as concept classes over the strings of length at most `m`.
//!
//! Strings are ordered by length, then lexicographically, and the empty
//! string is named `ε`. Right congruence is truncated at `m`: `z`
//! distinguishes `x` and `y` only when both `xz` and `yz` fit in the
//! universe.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use itertools::Itertools;

use crate::class::ConceptClass;
use crate::concept::{Concept, PartialConcept, Universe};
use crate::dimensions::consistency_dim;
use crate::error::{Error, Result};
use crate::format::content_lines;
use crate::hypothesis::LazyHypothesisClass;
use crate::learners::{run_session_in, CdimLearner, EqMqLearner, Learner, Transcript};
use crate::teachers::HonestTeacher;

pub const EMPTY_WORD: &str = "ε";

/// Longest strings a universe can hold: `2^(m+1) - 1 ≤ 64`.
pub const MAX_LENGTH: usize = 5;

/// Deterministic automaton over `{0,1}` starting in state 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    delta: Vec<[usize; 2]>,
    accept: Vec<bool>,
}

impl Dfa {
    pub fn new(delta: Vec<[usize; 2]>, accept: Vec<bool>) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::pre("a DFA needs at least one state"));
        }
        if accept.len() != n {
            return Err(Error::pre("accepting flags do not match the state count"));
        }
        if delta.iter().flatten().any(|&q| q >= n) {
            return Err(Error::pre("transition leaves the state set"));
        }
        Ok(Dfa { delta, accept })
    }

    /// Accepts words with an even number of ones.
    pub fn parity() -> Self {
        Dfa {
            delta: vec![[0, 1], [1, 0]],
            accept: vec![true, false],
        }
    }

    pub fn states(&self) -> usize {
        self.delta.len()
    }

    pub fn run(&self, word: &[bool]) -> usize {
        word.iter().fold(0, |q, &b| self.delta[q][b as usize])
    }

    pub fn accepts(&self, word: &[bool]) -> bool {
        self.accept[self.run(word)]
    }

    /// `states: n`, `accept: i j ...`, then one `from symbol to` per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (l, head) = lines.next().ok_or_else(|| Error::parse(1, "missing `states:` line"))?;
        let n: usize = head
            .strip_prefix("states:")
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::parse(l, "expected `states: <positive int>`"))?;
        let (l, acc) = lines.next().ok_or_else(|| Error::parse(l + 1, "missing `accept:` line"))?;
        let acc = acc
            .strip_prefix("accept:")
            .ok_or_else(|| Error::parse(l, "expected `accept: ...`"))?;
        let mut accept = vec![false; n];
        for tok in acc.split_whitespace() {
            let q: usize = tok
                .parse()
                .ok()
                .filter(|&q| q < n)
                .ok_or_else(|| Error::parse(l, format!("invalid state {tok}")))?;
            accept[q] = true;
        }
        let mut delta = vec![[None; 2]; n];
        for (l, row) in lines {
            let parts: Vec<&str> = row.split_whitespace().collect();
            let state = |s: &str| s.parse::<usize>().ok().filter(|&q| q < n);
            let (Some(from), Some(sym), Some(to)) = (
                parts.first().and_then(|s| state(s)),
                parts.get(1).and_then(|s| match *s {
                    "0" => Some(0),
                    "1" => Some(1),
                    _ => None,
                }),
                parts.get(2).and_then(|s| state(s)),
            ) else {
                return Err(Error::parse(l, "expected `from symbol to`"));
            };
            if parts.len() != 3 {
                return Err(Error::parse(l, "expected `from symbol to`"));
            }
            if delta[from][sym].replace(to).is_some() {
                return Err(Error::parse(l, format!("transition {from} {sym} given twice")));
            }
        }
        let delta = delta
            .into_iter()
            .enumerate()
            .map(|(q, t)| match t {
                [Some(a), Some(b)] => Ok([a, b]),
                _ => Err(Error::parse(0, format!("state {q} lacks a transition"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Dfa::new(delta, accept)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("states: {}\naccept:", self.states());
        for q in (0..self.states()).filter(|&q| self.accept[q]) {
            let _ = write!(out, " {q}");
        }
        out.push('\n');
        for (q, t) in self.delta.iter().enumerate() {
            let _ = writeln!(out, "{q} 0 {}\n{q} 1 {}", t[0], t[1]);
        }
        out
    }
}

/// Index of a word in length-then-lex order.
pub fn word_index(word: &[bool]) -> usize {
    let v = word.iter().fold(0usize, |v, &b| v << 1 | b as usize);
    (1 << word.len()) - 1 + v
}

/// The word at a given index in length-then-lex order.
pub fn word_at(index: usize) -> Vec<bool> {
    let len = (usize::BITS - 1 - (index + 1).leading_zeros()) as usize;
    let v = index + 1 - (1 << len);
    (0..len).rev().map(|i| v >> i & 1 == 1).collect()
}

pub fn word_name(word: &[bool]) -> String {
    if word.is_empty() {
        EMPTY_WORD.to_string()
    } else {
        word.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// All binary words of length at most `m`.
pub fn string_universe(m: usize) -> Result<Arc<Universe>> {
    if m > MAX_LENGTH {
        return Err(Error::TooLarge(format!("word length {m} (limit {MAX_LENGTH})")));
    }
    let names = (0..(1usize << (m + 1)) - 1).map(|i| word_name(&word_at(i)));
    Ok(Arc::new(Universe::new(names)?))
}

fn max_length(universe: &Universe) -> usize {
    (universe.len() + 1).trailing_zeros() as usize - 1
}

pub fn dfa_language(d: &Dfa, m: usize) -> Result<Concept> {
    let size = string_universe(m)?.len();
    Ok((0..size).fold(Concept::from_bits(0), |c, i| c.with_label(i, d.accepts(&word_at(i)))))
}

/// Every DFA with `k` states, by transition table then accepting set.
fn dfas_with(k: usize) -> impl Iterator<Item = Dfa> {
    let tables = (0..2 * k).map(|_| 0..k).multi_cartesian_product();
    tables.flat_map(move |t| {
        let delta: Vec<[usize; 2]> = t.chunks(2).map(|p| [p[0], p[1]]).collect();
        (0u32..1 << k).map(move |acc| Dfa {
            delta: delta.clone(),
            accept: (0..k).map(|q| acc >> q & 1 == 1).collect(),
        })
    })
}

/// The languages of all DFAs with at most `n` states, restricted to words
/// of length at most `m`, each kept at its first occurrence.
pub fn enumerate_dfa_class(n: usize, m: usize) -> Result<ConceptClass> {
    if n == 0 || n > 3 || m > 4 {
        return Err(Error::TooLarge(format!("DFA class with n = {n}, m = {m} (need 1 ≤ n ≤ 3, m ≤ 4)")));
    }
    let universe = string_universe(m)?;
    let mut seen = HashSet::new();
    let mut concepts = Vec::new();
    for k in 1..=n {
        for d in dfas_with(k) {
            let c = dfa_language(&d, m)?;
            if seen.insert(c) {
                concepts.push(c);
            }
        }
    }
    ConceptClass::new(universe, concepts)
}

/// `|DFA_2(n)| ≤ n^{2n} 2^n n / n!`.
pub fn dfa_count_bound(n: u32) -> u128 {
    let n = n as u128;
    let fact: u128 = (1..=n).product();
    n.pow(2 * n as u32) * (1 << n) * n / fact
}

/// Shortest-then-lex `z` with `A(xz) ≠ A(yz)` and both words of length ≤ m.
pub fn distinguishing_extension(a: Concept, m: usize, x: &[bool], y: &[bool]) -> Option<Vec<bool>> {
    let room = m.checked_sub(x.len().max(y.len()))?;
    (0..(1usize << (room + 1)) - 1).map(word_at).find(|z| {
        let xz = [x, z].concat();
        let yz = [y, z].concat();
        a.label(word_index(&xz)) != a.label(word_index(&yz))
    })
}

/// A restriction of `A` that no DFA with at most `n` states extends,
/// built from `n + 1` pairwise distinguishable prefixes.
pub fn nerode_witness(a: Concept, universe: &Universe, n: usize) -> Option<PartialConcept> {
    let m = max_length(universe);
    let size = universe.len();
    let mut apart = vec![0u64; size];
    for i in 0..size {
        for j in i + 1..size {
            if distinguishing_extension(a, m, &word_at(i), &word_at(j)).is_some() {
                apart[i] |= 1 << j;
                apart[j] |= 1 << i;
            }
        }
    }
    let reps = clique(&apart, n + 1, Vec::new(), (1u64 << size) - 1)?;
    let mut w = PartialConcept::unspecified();
    for (p, &i) in reps.iter().enumerate() {
        for &j in &reps[p + 1..] {
            let (xi, xj) = (word_at(i), word_at(j));
            let z = distinguishing_extension(a, m, &xi, &xj).expect("pair is distinguishable");
            for x in [&xi, &xj] {
                let k = word_index(&[x.as_slice(), &z].concat());
                w = w.with(k, a.label(k));
            }
        }
    }
    Some(w)
}

/// First clique of the given size in index order.
fn clique(adj: &[u64], want: usize, chosen: Vec<usize>, candidates: u64) -> Option<Vec<usize>> {
    if chosen.len() == want {
        return Some(chosen);
    }
    if (candidates.count_ones() as usize) < want - chosen.len() {
        return None;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut next = chosen.clone();
        next.push(v);
        if let Some(found) = clique(adj, want, next, rest & adj[v]) {
            return Some(found);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DfaMode {
    Eq,
    EqMq,
}

#[derive(Debug, Clone)]
pub struct DfaRun {
    pub class: ConceptClass,
    pub consistency_dim: usize,
    pub ldim: usize,
    pub bound: usize,
    pub transcript: Transcript,
}

/// Learn the language of `target` within `DFA_2(n)` on words up to length `m`.
pub fn learn_dfa(n: usize, m: usize, target: &Dfa, mode: DfaMode) -> Result<DfaRun> {
    if target.states() > n {
        return Err(Error::pre(format!("target has {} states, more than {n}", target.states())));
    }
    let class = enumerate_dfa_class(n, m)?;
    let h = LazyHypothesisClass::Explicit(class.clone());
    let c = consistency_dim(&class, &h)?;
    let idx = class
        .index_of(dfa_language(target, m)?)
        .ok_or_else(|| Error::Invariant("target language missing from the enumeration".into()))?;
    let (mut learner, bound): (Box<dyn Learner>, usize) = match mode {
        DfaMode::EqMq => (Box::new(EqMqLearner::with_dimension(&class, &h, c)), EqMqLearner::bound(&class, c)),
        DfaMode::Eq => (Box::new(CdimLearner::with_dimension(&class, &h, c)?), CdimLearner::bound(&class, c)),
    };
    let mut teacher = HonestTeacher::new(&class, idx)?;
    let transcript = run_session_in(&mut learner, &mut teacher, bound, &h)?;
    if !transcript.succeeded() {
        return Err(Error::Invariant(format!("DFA learner exceeded its bound of {bound} queries")));
    }
    Ok(DfaRun {
        ldim: class.ldim(),
        class,
        consistency_dim: c,
        bound,
        transcript,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(a: Concept, u: &Universe) -> Vec<&str> {
        (0..u.len()).filter(|&i| a.label(i)).map(|i| u.name(i)).collect()
    }

    #[test]
    fn word_order() {
        let u = string_universe(2).unwrap();
        assert_eq!(u.names(), ["ε", "0", "1", "00", "01", "10", "11"]);
        for i in 0..63 {
            assert_eq!(word_index(&word_at(i)), i);
        }
        assert_eq!(max_length(&u), 2);
    }

    #[test]
    fn languages() {
        let u = string_universe(2).unwrap();
        assert_eq!(names(dfa_language(&Dfa::parity(), 2).unwrap(), &u), ["ε", "0", "00", "11"]);
        let all = Dfa::new(vec![[0, 0]], vec![true]).unwrap();
        assert_eq!(dfa_language(&all, 2).unwrap().bits(), 0b111_1111);
        let none = Dfa::new(vec![[0, 0]], vec![false]).unwrap();
        assert_eq!(dfa_language(&none, 2).unwrap().bits(), 0);
    }

    #[test]
    fn file_round_trip() {
        let d = Dfa::parity();
        assert_eq!(Dfa::parse(&d.to_text()).unwrap(), d);
        assert!(Dfa::parse("states: 2\naccept: 0\n0 0 0\n0 1 1\n1 0 1\n").is_err());
        assert!(Dfa::parse("states: 1\naccept: 3\n0 0 0\n0 1 0\n").is_err());
        assert!(Dfa::parse("states: 1\naccept:\n0 2 0\n0 1 0\n").is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_dfa_class(1, 2).unwrap().len(), 2);
        let k = enumerate_dfa_class(2, 3).unwrap().len();
        assert!(k as u128 <= dfa_count_bound(2), "{k}");
        assert_eq!(dfa_count_bound(2), 64);
        assert!(enumerate_dfa_class(4, 2).is_err());
    }

    #[test]
    fn witnesses() {
        let u = string_universe(3).unwrap();
        let one_one = (0..u.len()).fold(Concept::from_bits(0), |c, i| {
            c.with_label(i, word_at(i).iter().filter(|&&b| b).count() == 1)
        });
        let w = nerode_witness(one_one, &u, 2).unwrap();
        assert!(w.size() <= 6);
        let class = enumerate_dfa_class(2, 3).unwrap();
        assert!(!class.has_extension(w));
        let dom: Vec<&str> = w.domain().map(|i| u.name(i)).collect();
        assert_eq!(dom, ["ε", "1", "11", "111"]);
        assert_eq!(nerode_witness(dfa_language(&Dfa::parity(), 3).unwrap(), &u, 2), None);
        assert_eq!(nerode_witness(Concept::from_bits(0), &u, 1), None);
    }

    #[test]
    fn learns_parity() {
        let run = learn_dfa(2, 3, &Dfa::parity(), DfaMode::EqMq).unwrap();
        assert!(run.transcript.succeeded());
        assert!(run.transcript.queries() <= run.bound);
        let tiny = learn_dfa(1, 2, &Dfa::new(vec![[0, 0]], vec![true]).unwrap(), DfaMode::Eq).unwrap();
        assert!(tiny.transcript.queries() <= 2);
        assert!(learn_dfa(1, 2, &Dfa::parity(), DfaMode::Eq).is_err());
    }
}
