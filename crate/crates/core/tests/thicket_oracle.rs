//! Expected counterexample counts of the max-min learner, computed exactly
//! by recursing over the teacher's random choices.

mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use querylearn::concept::bits;
use querylearn::distribution::{Distribution, Rational};
use querylearn::thicket::{estimate_expected_queries, maxmin_choice};
use querylearn::{fixtures, ConceptClass, ConceptSet};

fn expected_counterexamples(c: &ConceptClass, mu: &Distribution, v: &ConceptSet, target: usize) -> Rational {
    let pick = maxmin_choice(c, v, mu);
    if pick == target {
        return Rational::zero();
    }
    let (a, b) = (c.concept(target), c.concept(pick));
    let delta = a.difference(b);
    let total = mu.mass(delta);
    let mut e = Rational::from_integer(BigInt::from(1));
    for x in bits(delta) {
        let next = c.split(v, x, a.label(x));
        e += mu.weight(x) / &total * expected_counterexamples(c, mu, &next, target);
    }
    e
}

fn exact_mean(c: &ConceptClass, mu: &Distribution) -> Rational {
    let sum: Rational = (0..c.len()).map(|t| expected_counterexamples(c, mu, &c.all(), t)).sum();
    sum / Rational::from_integer(BigInt::from(c.len()))
}

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn singletons_uniform_exact_value() {
    let c = fixtures::sing(4);
    let mu = Distribution::uniform(4);
    // The counterexample count, not counting the final query; with it the
    // mean is 33/16, above 2·Ldim.
    assert_eq!(exact_mean(&c, &mu), rat(17, 16));
}

#[test]
fn monte_carlo_agrees_with_the_exact_mean() {
    let cases = [
        fixtures::sing(4),
        fixtures::five(),
        fixtures::tree(3, 2),
        fixtures::pow(3),
    ];
    for c in cases {
        let mu = common::random_distribution(c.n(), 9);
        let exact = exact_mean(&c, &mu);
        let trials = 20 * c.len() * 50;
        let s = estimate_expected_queries(&c, &mu, trials, 7).unwrap();
        let exact_f = querylearn::distribution::to_decimal(&exact, 9).parse::<f64>().unwrap();
        assert!((s.mean - exact_f).abs() <= 4.0 * s.stderr + 1e-9, "{} vs {exact}", s.mean);
        assert!((s.mean_with_final - s.mean - 1.0).abs() < 1e-12);
        assert!(exact_f <= 2.0 * c.ldim() as f64);
    }
}
