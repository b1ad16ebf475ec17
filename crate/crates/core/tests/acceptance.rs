//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria that the underlying mathematics does not support are run in
//! full and reported as FAIL. The process still exits successfully as long
//! as every violation is of the documented kind; anything else is fatal.

mod common;

use std::time::{Duration, Instant};

use common::*;
use querylearn::automata::{dfa_count_bound, enumerate_dfa_class, learn_dfa, nerode_witness, string_universe, word_at, Dfa, DfaMode};
use querylearn::compression::check_round_trip;
use querylearn::dimensions::{consistency_dim, hypothesis_hm, strong_consistency_dim};
use querylearn::distribution::{Distribution, Rational};
use querylearn::gametree::{lc_eq_exact, lc_eqmq_exact};
use querylearn::learners::{
    run_session, CdimLearner, EqMqLearner, HalvingLearner, Learner, OptimalLearner, Sc2Learner,
};
use querylearn::teachers::{HonestTeacher, Teacher, TreeAdversary, WitnessAdversary};
use querylearn::thicket::{deficient_cycle_search, estimate_expected_queries, ThicketGraph};
use querylearn::{fixtures, Concept, ConceptClass, LazyHypothesisClass, PartialConcept};

/// Criteria whose statement is false at desk scale, with the only kind of
/// violation they are allowed to show.
const KNOWN_UNATTAINABLE: &[(usize, &str)] = &[
    (2, "ceil(SC ln|C|) fails whenever SC = 1: it is 0 for |C| = 1 and below Ldim+1 otherwise"),
    (4, "ceil(SC ln|C|) fails whenever SC = 1: it is 0 for |C| = 1 and below Ldim+1 otherwise"),
];

struct Verdict {
    pass: bool,
    detail: String,
    /// Violations outside the documented kind.
    unexpected: Vec<String>,
}

impl Verdict {
    fn from(expected: &[String], unexpected: Vec<String>, detail: String) -> Self {
        let pass = expected.is_empty() && unexpected.is_empty();
        let mut detail = detail;
        if !expected.is_empty() {
            detail.push_str(&format!("; {} violations, e.g. {}", expected.len(), expected[0]));
        }
        Verdict { pass, detail, unexpected }
    }
}

fn check(ok: bool, what: String, bad: &mut Vec<String>) {
    if !ok {
        bad.push(what);
    }
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let c = fixtures::tree(3, 2);
    let h = explicit(&c);
    let (d, cd, sc) = (c.ldim(), consistency_dim(&c, &h).unwrap(), strong_consistency_dim(&c, &h).unwrap());
    let lc = lc_eq_exact(&c, &h).unwrap().lc;
    let t = start.elapsed();
    let mut bad = Vec::new();
    check((d, cd, sc, lc) == (2, 4, 9, 9), format!("got ldim={d} cdim={cd} scdim={sc} lc={lc}"), &mut bad);
    check(t < Duration::from_secs(60), format!("took {t:?}"), &mut bad);
    Verdict::from(&[], bad, format!("ldim={d} cdim={cd} scdim={sc} lc_eq={lc} in {:.2}s", t.as_secs_f64()))
}

fn sandwich_instances() -> Vec<(String, ConceptClass, LazyHypothesisClass)> {
    let mut v: Vec<_> = fixture_classes()
        .into_iter()
        .map(|(n, c)| (format!("{n}/self"), c.clone(), explicit(&c)))
        .collect();
    v.push(("SING(4)/SINGE(4)".into(), fixtures::sing(4), explicit(&fixtures::singe(4))));
    for seed in 0..200 {
        let (c, h) = random_instance(seed, 6, 8, 12);
        v.push((format!("random#{seed}"), c, h));
    }
    v
}

/// `c^d` is certified for `c ≥ 2`; with `c = 1` the majority vote learner needs `d + 1`.
fn cdim_eq_bound(c: usize, d: usize) -> usize {
    if c <= 1 {
        d + 1
    } else {
        c.pow(d as u32)
    }
}

/// What the halving argument does establish: at most `ceil(c ln|C|)`
/// counterexamples with `c = max(SC, 2)`, plus the final query.
fn halving_corrected(sc: usize, size: usize) -> usize {
    ceil_ln_bound(sc.max(2), size) + 1
}

/// ln-bound violations split by `|C| = 1`, `SC = 1`, `SC ≥ 2`.
fn tally(kinds: &mut [usize; 3], sc: usize, size: usize) {
    kinds[if size == 1 { 0 } else if sc == 1 { 1 } else { 2 }] += 1;
}

fn show(kinds: &[usize; 3]) -> String {
    format!("[|C|=1: {}, SC=1: {}, SC>=2: {}]", kinds[0], kinds[1], kinds[2])
}

fn criterion_2(instances: &[(String, ConceptClass, LazyHypothesisClass)]) -> Verdict {
    let (mut expected, mut bad) = (Vec::new(), Vec::new());
    let mut kinds = [0; 3];
    for (name, c, h) in instances {
        let d = c.ldim();
        let cd = consistency_dim(c, h).unwrap();
        let sc = strong_consistency_dim(c, h).unwrap();
        let lc = lc_eq_exact(c, h).unwrap().lc;
        check(d < lc, format!("{name}: ldim+1={} > lc={lc}", d + 1), &mut bad);
        check(sc <= lc, format!("{name}: scdim={sc} > lc={lc}"), &mut bad);
        check(lc <= cdim_eq_bound(cd, d), format!("{name}: lc={lc} > c^d with c={cd} d={d}"), &mut bad);
        let bal = ceil_ln_bound(sc, c.len());
        if lc > bal {
            tally(&mut kinds, sc, c.len());
            let msg = format!("{name}: lc={lc} > ceil(SC ln|C|)={bal} (SC={sc}, |C|={})", c.len());
            if lc <= halving_corrected(sc, c.len()) {
                expected.push(msg);
            } else {
                bad.push(msg);
            }
        }
    }
    Verdict::from(&expected, bad, format!("{} instances, ln-bound violations {}", instances.len(), show(&kinds)))
}

fn criterion_3(instances: &[(String, ConceptClass, LazyHypothesisClass)]) -> Verdict {
    let mut bad = Vec::new();
    for (name, c, h) in instances {
        let d = c.ldim();
        let cd = consistency_dim(c, h).unwrap();
        let lc = lc_eqmq_exact(c, h).unwrap().lc;
        let upper = cd.saturating_sub(1).max(1) * d + 1;
        check(cd <= lc, format!("{name}: cdim={cd} > lc={lc}"), &mut bad);
        check(lc <= upper, format!("{name}: lc={lc} > c'd+1={upper}"), &mut bad);
    }
    Verdict::from(&[], bad, format!("{} instances", instances.len()))
}

fn criterion_4() -> Verdict {
    let mut pairs: Vec<(String, ConceptClass, LazyHypothesisClass)> = Vec::new();
    for (n, c) in fixture_classes() {
        pairs.push((format!("{n}/self"), c.clone(), explicit(&c)));
        pairs.push((format!("{n}/powerset"), c.clone(), LazyHypothesisClass::AllTotals(c.universe().clone())));
    }
    pairs.push(("SING(4)/SINGE(4)".into(), fixtures::sing(4), explicit(&fixtures::singe(4))));
    for seed in 0..30 {
        let c = random_small_class(1000 + seed, 5, 8);
        pairs.push((format!("random#{seed}/self"), c.clone(), explicit(&c)));
    }
    let (mut expected, mut bad) = (Vec::new(), Vec::new());
    let mut sessions = 0;
    let mut kinds = [0; 3];
    for (name, c, h) in &pairs {
        let d = c.ldim();
        let cd = consistency_dim(c, h).unwrap();
        let sc = strong_consistency_dim(c, h).unwrap();
        type Make<'a> = Box<dyn Fn() -> Box<dyn Learner> + 'a>;
        let mut learners: Vec<(&str, Make, usize)> = vec![
            ("optimal", Box::new(|| Box::new(OptimalLearner::new(c))), d + 1),
            ("cdim", Box::new(|| Box::new(CdimLearner::with_dimension(c, h, cd).unwrap())), cdim_eq_bound(cd, d)),
            ("halving", Box::new(|| Box::new(HalvingLearner::new(c, h).unwrap())), ceil_ln_bound(sc, c.len())),
            ("eqmq", Box::new(|| Box::new(EqMqLearner::with_dimension(c, h, cd))), cd.saturating_sub(1).max(1) * d + 1),
        ];
        if sc <= 2 {
            learners.push(("sc2", Box::new(|| Box::new(Sc2Learner::new(c, h).unwrap())), d + 1));
        }
        for (lname, make, bound) in &learners {
            let teachers: Vec<(String, Box<dyn Teacher>)> = (0..c.len())
                .map(|i| (format!("honest:{i}"), Box::new(HonestTeacher::new(c, i).unwrap()) as Box<dyn Teacher>))
                .chain(std::iter::once(("tree".to_string(), Box::new(TreeAdversary::new(c)) as Box<dyn Teacher>)))
                .collect();
            for (tname, mut teacher) in teachers {
                let mut learner = make();
                let t = run_session(learner.as_mut(), teacher.as_mut(), 10_000).unwrap();
                sessions += 1;
                if !t.succeeded() {
                    bad.push(format!("{lname} on {name} vs {tname}: did not finish"));
                    continue;
                }
                if t.queries() > *bound {
                    if *lname == "halving" {
                        tally(&mut kinds, sc, c.len());
                    }
                    let msg = format!("{lname} on {name} vs {tname}: {} > {bound}", t.queries());
                    if *lname == "halving" && t.queries() <= halving_corrected(sc, c.len()) {
                        expected.push(msg);
                    } else {
                        bad.push(msg);
                    }
                }
            }
        }
    }
    check(sessions >= 1000, format!("only {sessions} sessions"), &mut bad);
    Verdict::from(&expected, bad, format!("{sessions} sessions over {} (class, H) pairs, halving violations {}", pairs.len(), show(&kinds)))
}

fn criterion_5() -> Verdict {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (name, c) in [("SING(4)", fixtures::sing(4)), ("POW(3)", fixtures::pow(3)), ("TREE(3,2)", fixtures::tree(3, 2))] {
        let mut l = OptimalLearner::new(&c);
        let t = run_session(&mut l, &mut TreeAdversary::new(&c), 100).unwrap();
        check(t.eq_count > c.ldim(), format!("{name}: only {} EQs", t.eq_count), &mut bad);
        seen.push(format!("{name}:{}", t.eq_count));
    }
    let c = fixtures::sing(4);
    let h = explicit(&c);
    let a = PartialConcept::parse_literal("0000", 4).unwrap();
    let mut l = CdimLearner::new(&c, &h).unwrap();
    let mut w = WitnessAdversary::new(&c, &h, a, 3).unwrap();
    let t = run_session(&mut l, &mut w, 100).unwrap();
    let lc = lc_eq_exact(&c, &h).unwrap().lc;
    check(t.queries() >= 4 && lc == 4, format!("witness forced {} (lc={lc})", t.queries()), &mut bad);
    seen.push(format!("witness:{}", t.queries()));
    Verdict::from(&[], bad, seen.join(" "))
}

fn criterion_6() -> Verdict {
    let mut bad = Vec::new();
    let half = Rational::new(1.into(), 2.into());
    let mut cases: Vec<(String, ConceptClass, Distribution)> = fixture_classes()
        .into_iter()
        .flat_map(|(n, c)| {
            let u = Distribution::uniform(c.n());
            let r = random_distribution(c.n(), c.len() as u64);
            [(format!("{n}/uniform"), c.clone(), u), (format!("{n}/random"), c, r)]
        })
        .collect();
    for seed in 0..100u64 {
        let mut rng = querylearn::rng::SplitMix64::new(seed + 77);
        let nx = 2 + rng.below(4) as usize;
        let nc = (2 + rng.below(5) as usize).min(1 << nx);
        let c = fixtures::random_class(nx, nc, seed + 500).unwrap();
        let mu = random_distribution(nx, seed);
        cases.push((format!("random#{seed}"), c, mu));
    }
    let mut cycles_checked = 0;
    for (name, c, mu) in &cases {
        let g = ThicketGraph::new(c, mu).unwrap();
        check(g.pair_violations().is_empty(), format!("{name}: pair weights below 1"), &mut bad);
        let r = g.max_rank().unwrap();
        check(r >= half, format!("{name}: max rank {r}"), &mut bad);
        if c.len() <= 6 {
            cycles_checked += 1;
            let cyc = deficient_cycle_search(c, mu, c.len()).unwrap();
            check(cyc.is_none(), format!("{name}: deficient cycle {cyc:?}"), &mut bad);
        }
    }
    let s = fixtures::sing(4);
    let g = ThicketGraph::new(&s, &Distribution::uniform(4)).unwrap();
    let all_half = (0..4).all(|i| (0..4).all(|j| i == j || g.weight(i, j) == Some(&half)));
    check(all_half, "SING(4) uniform weights are not all 1/2".into(), &mut bad);
    Verdict::from(&[], bad, format!("{} instances, {cycles_checked} exhaustive cycle searches", cases.len()))
}

fn criterion_7() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut parts = Vec::new();
    for (name, c) in [("SING(4)", fixtures::sing(4)), ("TREE(3,2)", fixtures::tree(3, 2))] {
        let s = estimate_expected_queries(&c, &Distribution::uniform(c.n()), 10_000, 42).unwrap();
        let limit = 2.0 * c.ldim() as f64 + 3.0 * s.stderr;
        check(s.mean <= limit, format!("{name}: mean {:.4} > {limit:.4}", s.mean), &mut bad);
        parts.push(format!("{name} mean={:.4} stderr={:.4}", s.mean, s.stderr));
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(120), format!("took {t:?}"), &mut bad);
    Verdict::from(&[], bad, format!("{} in {:.2}s", parts.join(", "), t.as_secs_f64()))
}

fn criterion_8() -> Verdict {
    let mut bad = Vec::new();
    let mut classes: Vec<(String, ConceptClass)> = fixture_classes()
        .into_iter()
        .filter(|(n, _)| *n != "SINGE(4)")
        .map(|(n, c)| (n.to_string(), c))
        .collect();
    for seed in 0..100 {
        classes.push((format!("random#{seed}"), random_small_class(2000 + seed, 5, 10)));
    }
    let mut samples = 0;
    for (name, c) in &classes {
        let r = check_round_trip(c).unwrap();
        samples += r.samples;
        check(r.failure.is_none(), format!("{name}: {:?} not recovered", r.failure), &mut bad);
        check(r.d == c.ldim() && r.rhos == c.ldim() + 1, format!("{name}: d={} rhos={}", r.d, r.rhos), &mut bad);
    }
    let tree = check_round_trip(&fixtures::tree(3, 2)).unwrap();
    check(tree.rhos == 3, "TREE(3,2) needs 3 reconstruction functions".into(), &mut bad);
    Verdict::from(&[], bad, format!("{} classes, {samples} samples", classes.len()))
}

fn criterion_9() -> Verdict {
    let mut bad = Vec::new();
    let c = enumerate_dfa_class(2, 3).unwrap();
    let cd = consistency_dim(&c, &explicit(&c)).unwrap();
    check(cd <= 6, format!("cdim={cd} > 6"), &mut bad);
    check(c.len() as u128 <= dfa_count_bound(2), format!("{} languages > 64", c.len()), &mut bad);
    let mut runs = 0;
    for m in [3, 4] {
        for t in 0..16usize {
            for acc in 0..4usize {
                let d = Dfa::new(
                    vec![[t & 1, t >> 1 & 1], [t >> 2 & 1, t >> 3 & 1]],
                    vec![acc & 1 == 1, acc & 2 == 2],
                )
                .unwrap();
                match learn_dfa(2, m, &d, DfaMode::EqMq) {
                    Ok(r) if r.transcript.queries() <= r.bound => runs += 1,
                    other => bad.push(format!("m={m} target {t}/{acc}: {:?}", other.map(|r| r.transcript.queries()))),
                }
            }
        }
    }
    let u = string_universe(3).unwrap();
    let one_one = (0..u.len()).fold(Concept::from_bits(0), |a, i| {
        a.with_label(i, word_at(i).iter().filter(|&&b| b).count() == 1)
    });
    match nerode_witness(one_one, &u, 2) {
        Some(w) => {
            check(w.size() <= 6, format!("witness of size {}", w.size()), &mut bad);
            check(!c.has_extension(w), "witness extends into DFA_2(2)".into(), &mut bad);
            check(w.is_extended_by(one_one), "witness is not a restriction".into(), &mut bad);
        }
        None => bad.push("no witness for 'exactly one 1'".into()),
    }
    Verdict::from(&[], bad, format!("{} languages, cdim={cd}, {runs} learning runs", c.len()))
}

fn criterion_10() -> Verdict {
    let mut bad = Vec::new();
    let mut classes: Vec<(String, ConceptClass)> = fixture_classes().into_iter().map(|(n, c)| (n.to_string(), c)).collect();
    for seed in 0..100 {
        classes.push((format!("random#{seed}"), random_small_class(3000 + seed, 7, 10)));
    }
    for (name, c) in &classes {
        let d = c.ldim();
        let h = hypothesis_hm(c, d + 1).unwrap();
        let hd = h.enumerate().unwrap().ldim();
        let cd = consistency_dim(c, &h).unwrap();
        check(hd == d, format!("{name}: Ldim(H_m)={hd} != {d}"), &mut bad);
        check(cd <= d + 1, format!("{name}: C(C,H_m)={cd} > {}", d + 1), &mut bad);
    }
    Verdict::from(&[], bad, format!("{} classes", classes.len()))
}

fn main() {
    let names = [
        "TREE(3,2) exact values",
        "EQ sandwich",
        "EQ+MQ sandwich",
        "learner bounds",
        "lower-bound adversaries",
        "thicket exact",
        "thicket Monte Carlo",
        "compression round-trip",
        "DFA suite",
        "H_m hypotheses",
    ];
    let instances = sandwich_instances();
    let verdicts = vec![
        criterion_1(),
        criterion_2(&instances),
        criterion_3(&instances),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    let mut fatal = Vec::new();
    for (i, (name, v)) in names.iter().zip(&verdicts).enumerate() {
        let id = i + 1;
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{id:>2}] {name}: {}", v.detail);
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == id);
        if let Some((_, why)) = known.filter(|_| !v.pass) {
            println!("          known: {why}");
        }
        for u in &v.unexpected {
            fatal.push(format!("[{id}] {u}"));
        }
        if !v.pass && known.is_none() && v.unexpected.is_empty() {
            fatal.push(format!("[{id}] failed without a recorded reason"));
        }
    }
    if !fatal.is_empty() {
        for f in fatal.iter().take(20) {
            eprintln!("unexpected: {f}");
        }
        std::process::exit(1);
    }
}
