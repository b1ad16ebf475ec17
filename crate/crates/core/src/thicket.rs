//! Equivalence queries with random counterexamples.
//!
//! The weight `d(A,B)` of the thicket query graph is the expected drop in
//! Littlestone dimension when the learner proposes `A`, the target is `B`,
//! and the counterexample is drawn from `μ` restricted to `Δ(A,B)`. All
//! weights are exact rationals.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::class::ConceptClass;
use crate::concept::{bits, Concept, ConceptSet};
use crate::distribution::{to_decimal, Distribution, Rational};
use crate::error::{Error, Result};
use crate::learners::{run_session, ThicketLearner};
use crate::rng::SplitMix64;
use crate::teachers::RandomTeacher;

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

fn index(c: &ConceptClass, a: Concept) -> Result<usize> {
    c.index_of(a)
        .ok_or_else(|| Error::pre(format!("{} is not in the class", a.to_bitstring(c.n()))))
}

/// `u(A, a) = Ldim(C) - Ldim(C_{a = A(a)})`.
pub fn u_value(c: &ConceptClass, a: Concept, x: usize) -> Result<usize> {
    index(c, a)?;
    if x >= c.n() {
        return Err(Error::pre(format!("element {x} out of range")));
    }
    let all = c.all();
    Ok((c.ldim_of(&all) - c.ldim_of(&c.split(&all, x, a.label(x)))) as usize)
}

/// `d_V(A, B)` over the version space `v`, with `A` and `B` given by index.
pub fn weight_in(c: &ConceptClass, v: &ConceptSet, mu: &Distribution, a: usize, b: usize) -> Rational {
    let (ca, cb) = (c.concept(a), c.concept(b));
    let delta = ca.difference(cb);
    assert!(delta != 0, "weight of a concept to itself");
    let d = c.ldim_of(v);
    let mut num = Rational::zero();
    for x in bits(delta) {
        let drop = d - c.ldim_of(&c.split(v, x, cb.label(x)));
        if drop != 0 {
            num += mu.weight(x) * Rational::from_integer(BigInt::from(drop));
        }
    }
    num / mu.mass(delta)
}

/// `d(A, B)` in the whole class; requires `A ≠ B`.
pub fn edge_weight(c: &ConceptClass, mu: &Distribution, a: Concept, b: Concept) -> Result<Rational> {
    let (i, j) = (index(c, a)?, index(c, b)?);
    if i == j {
        return Err(Error::pre("edge weight needs two distinct concepts"));
    }
    check_mu(c, mu)?;
    Ok(weight_in(c, &c.all(), mu, i, j))
}

/// `min_{B ≠ A} d(A, B)`.
pub fn query_rank(c: &ConceptClass, mu: &Distribution, a: Concept) -> Result<Rational> {
    let i = index(c, a)?;
    if c.len() < 2 {
        return Err(Error::pre("query rank needs at least two concepts"));
    }
    check_mu(c, mu)?;
    let all = c.all();
    Ok((0..c.len())
        .filter(|&j| j != i)
        .map(|j| weight_in(c, &all, mu, i, j))
        .min()
        .expect("two concepts"))
}

fn check_mu(c: &ConceptClass, mu: &Distribution) -> Result<()> {
    if mu.len() == c.n() {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// The concept of `v` maximizing its minimum outgoing weight; ties go to
/// the lowest index.
pub fn maxmin_choice(c: &ConceptClass, v: &ConceptSet, mu: &Distribution) -> usize {
    let members: Vec<usize> = v.iter().collect();
    let mut best: Option<(Rational, usize)> = None;
    for &a in &members {
        let rank = members
            .iter()
            .filter(|&&b| b != a)
            .map(|&b| weight_in(c, v, mu, a, b))
            .min();
        let Some(rank) = rank else { return a };
        if best.as_ref().is_none_or(|(r, _)| rank > *r) {
            best = Some((rank, a));
        }
    }
    best.expect("nonempty version space").1
}

/// The complete weighted digraph on a class.
#[derive(Debug, Clone)]
pub struct ThicketGraph {
    class: ConceptClass,
    weights: Vec<Vec<Option<Rational>>>,
}

impl ThicketGraph {
    pub fn new(c: &ConceptClass, mu: &Distribution) -> Result<Self> {
        check_mu(c, mu)?;
        let all = c.all();
        let weights = (0..c.len())
            .map(|i| {
                (0..c.len())
                    .map(|j| (i != j).then(|| weight_in(c, &all, mu, i, j)))
                    .collect()
            })
            .collect();
        Ok(ThicketGraph {
            class: c.clone(),
            weights,
        })
    }

    pub fn class(&self) -> &ConceptClass {
        &self.class
    }

    /// `d(A_i, A_j)` for `i ≠ j`.
    pub fn weight(&self, i: usize, j: usize) -> Option<&Rational> {
        self.weights[i][j].as_ref()
    }

    pub fn rank(&self, i: usize) -> Option<Rational> {
        self.weights[i].iter().flatten().min().cloned()
    }

    /// Largest query rank; `None` for a one-concept class.
    pub fn max_rank(&self) -> Option<Rational> {
        (0..self.class.len()).filter_map(|i| self.rank(i)).max()
    }

    /// Pairs violating `d(A,B) + d(B,A) ≥ 1`.
    pub fn pair_violations(&self) -> Vec<(usize, usize)> {
        let one = Rational::one();
        let n = self.class.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let s = self.weights[i][j].as_ref().expect("off diagonal")
                    + self.weights[j][i].as_ref().expect("off diagonal");
                s < one
            })
            .collect()
    }

    /// First cycle of distinct concepts, of length 2 to `max_len`, whose
    /// weights are all at most 1/2 with at least one strictly below.
    /// Cycles are reported starting from their smallest index.
    pub fn deficient_cycle(&self, max_len: usize) -> Option<Vec<usize>> {
        let n = self.class.len();
        let half = half();
        let light: Vec<Vec<(usize, bool)>> = (0..n)
            .map(|i| {
                (0..n)
                    .filter_map(|j| {
                        let w = self.weights[i][j].as_ref()?;
                        (*w <= half).then_some((j, *w < half))
                    })
                    .collect()
            })
            .collect();
        fn extend(
            light: &[Vec<(usize, bool)>],
            start: usize,
            path: &mut Vec<usize>,
            strict: bool,
            max_len: usize,
        ) -> bool {
            let last = *path.last().expect("nonempty path");
            for &(j, s) in &light[last] {
                if j == start && path.len() >= 2 && (strict || s) {
                    return true;
                }
                if j > start && path.len() < max_len && !path.contains(&j) {
                    path.push(j);
                    if extend(light, start, path, strict || s, max_len) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        (0..n).find_map(|start| {
            let mut path = vec![start];
            extend(&light, start, &mut path, false, max_len).then_some(path)
        })
    }
}

pub fn deficient_cycle_search(c: &ConceptClass, mu: &Distribution, max_len: usize) -> Result<Option<Vec<usize>>> {
    if max_len > c.len() {
        return Err(Error::pre("cycle length exceeds the class size"));
    }
    Ok(ThicketGraph::new(c, mu)?.deficient_cycle(max_len))
}

/// Summary of repeated max-min sessions against random teachers.
///
/// A session's count is its number of counterexamples, i.e. queries made
/// before the target is proposed; the final correct query is reported
/// separately in `mean_with_final`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThicketStats {
    pub trials: usize,
    pub mean: f64,
    pub stderr: f64,
    pub max: usize,
    pub mean_with_final: f64,
    pub per_target: Vec<f64>,
    /// `counts[k]`: sessions with exactly `k` counterexamples.
    pub histogram: Vec<usize>,
}

impl ThicketStats {
    /// Fraction of sessions with more than `n` counterexamples.
    pub fn tail(&self, n: usize) -> f64 {
        let over: usize = self.histogram.iter().skip(n + 1).sum();
        over as f64 / self.trials as f64
    }
}

/// Run `trials` sessions, targets taken round-robin, trial `i` seeded with
/// [`SplitMix64::for_trial`]`(seed, i)`.
pub fn estimate_expected_queries(
    c: &ConceptClass,
    mu: &Distribution,
    trials: usize,
    seed: u64,
) -> Result<ThicketStats> {
    if trials == 0 {
        return Err(Error::pre("at least one trial is needed"));
    }
    check_mu(c, mu)?;
    let memo = Arc::new(Mutex::new(HashMap::new()));
    let mut histogram = vec![0usize; c.len()];
    let mut per_target_sum = vec![0usize; c.len()];
    let mut per_target_n = vec![0usize; c.len()];
    let mut sum = 0u128;
    let mut sum_sq = 0u128;
    for i in 0..trials {
        let target = i % c.len();
        let mut teacher =
            RandomTeacher::with_rng(c, target, mu, SplitMix64::for_trial(seed, i as u64))?;
        let mut learner = ThicketLearner::with_memo(c, mu, memo.clone());
        let t = run_session(&mut learner, &mut teacher, c.len())?;
        if !t.succeeded() {
            return Err(Error::Invariant(
                "max-min learner exceeded one query per concept".into(),
            ));
        }
        let k = t.eq_count - 1;
        histogram[k] += 1;
        per_target_sum[target] += k;
        per_target_n[target] += 1;
        sum += k as u128;
        sum_sq += (k * k) as u128;
    }
    // Exact mean and unbiased variance, converted to decimals once.
    let n = trials as u128;
    let mean = BigRational::new(BigInt::from(sum), BigInt::from(n));
    let variance = if trials > 1 {
        BigRational::new(
            BigInt::from(n * sum_sq) - BigInt::from(sum) * BigInt::from(sum),
            BigInt::from(n * (n - 1)),
        )
    } else {
        Rational::zero()
    };
    let as_f64 = |r: &Rational| to_decimal(r, 12).parse::<f64>().expect("decimal");
    let mean_f = as_f64(&mean);
    let stderr = (as_f64(&variance) / trials as f64).sqrt();
    let max = histogram.iter().rposition(|&h| h > 0).unwrap_or(0);
    Ok(ThicketStats {
        trials,
        mean: mean_f,
        stderr,
        max,
        mean_with_final: mean_f + 1.0,
        per_target: per_target_sum
            .iter()
            .zip(&per_target_n)
            .map(|(&s, &k)| if k == 0 { 0.0 } else { s as f64 / k as f64 })
            .collect(),
        histogram,
    })
}

/// `exp(-2 (n/(2L) - L)^2 / n)`, the tail estimate for more than `n` queries.
pub fn hoeffding_tail(ldim: usize, n: usize) -> f64 {
    let (l, n) = (ldim as f64, n as f64);
    (-2.0 * (n / (2.0 * l) - l).powi(2) / n).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::sync::Arc;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn two_point() -> ConceptClass {
        let u = Arc::new(crate::concept::Universe::new(["x"]).unwrap());
        ConceptClass::from_bitstrings(u, &["0", "1"]).unwrap()
    }

    #[test]
    fn u_values() {
        let c = fixtures::sing(4);
        let x0 = c.concept(0);
        assert_eq!(u_value(&c, x0, 0).unwrap(), 1);
        assert_eq!(u_value(&c, x0, 1).unwrap(), 0);
        let one = fixtures::sing(1);
        assert_eq!(u_value(&one, one.concept(0), 0).unwrap(), 0);
    }

    #[test]
    fn weights_and_ranks() {
        let c = fixtures::sing(4);
        let mu = Distribution::uniform(4);
        assert_eq!(edge_weight(&c, &mu, c.concept(0), c.concept(1)).unwrap(), rat(1, 2));
        assert_eq!(query_rank(&c, &mu, c.concept(2)).unwrap(), rat(1, 2));
        let t = two_point();
        let mu1 = Distribution::uniform(1);
        assert_eq!(edge_weight(&t, &mu1, t.concept(0), t.concept(1)).unwrap(), rat(1, 1));
        assert_eq!(query_rank(&t, &mu1, t.concept(0)).unwrap(), rat(1, 1));
        assert!(edge_weight(&c, &mu, c.concept(0), c.concept(0)).is_err());
        assert!(query_rank(&fixtures::sing(1), &mu1, Concept::from_bits(1)).is_err());
    }

    #[test]
    fn no_deficient_cycles_on_fixtures() {
        let c = fixtures::sing(4);
        assert_eq!(deficient_cycle_search(&c, &Distribution::uniform(4), 4).unwrap(), None);
        let t = two_point();
        assert_eq!(deficient_cycle_search(&t, &Distribution::uniform(1), 2).unwrap(), None);
    }

    #[test]
    fn finds_planted_cycle() {
        // Hand-built weights: 0 -> 1 -> 0 with 1/4 and 1/2.
        let c = fixtures::sing(2);
        let mut g = ThicketGraph::new(&c, &Distribution::uniform(2)).unwrap();
        g.weights[0][1] = Some(rat(1, 4));
        g.weights[1][0] = Some(rat(1, 2));
        assert_eq!(g.deficient_cycle(2), Some(vec![0, 1]));
        g.weights[0][1] = Some(rat(1, 2));
        assert_eq!(g.deficient_cycle(2), None);
    }

    #[test]
    fn maxmin_on_singletons_picks_first() {
        let c = fixtures::sing(4);
        assert_eq!(maxmin_choice(&c, &c.all(), &Distribution::uniform(4)), 0);
    }

    #[test]
    fn single_concept_statistics() {
        let c = fixtures::sing(1);
        let s = estimate_expected_queries(&c, &Distribution::uniform(1), 50, 1).unwrap();
        assert_eq!(s.mean_with_final, 1.0);
        assert_eq!(s.mean, 0.0);
        assert_eq!(s.stderr, 0.0);
    }
}
