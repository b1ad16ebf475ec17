//! Every learner against an honest teacher on every target of a class.
//!
//! Run with `cargo run --example learners`.

use querylearn::dimensions::{consistency_dim, strong_consistency_dim};
use querylearn::distribution::Distribution;
use querylearn::learners::{
    run_session_in, CdimLearner, EqMqLearner, HalvingLearner, Learner, OptimalLearner, Sc2Learner,
    ThicketLearner,
};
use querylearn::teachers::HonestTeacher;
use querylearn::{fixtures, ConceptClass, LazyHypothesisClass};

type Factory = Box<dyn Fn() -> querylearn::Result<Box<dyn Learner>>>;

fn sweep(name: &str, c: &ConceptClass, h: &LazyHypothesisClass, bound: usize, make: Factory) -> querylearn::Result<()> {
    let mut worst = 0;
    for target in 0..c.len() {
        let mut learner = make()?;
        let mut teacher = HonestTeacher::new(c, target)?;
        let t = run_session_in(learner.as_mut(), &mut teacher, bound, h)?;
        assert!(t.succeeded());
        worst = worst.max(t.queries());
    }
    println!("  {name:<8} worst {worst:>2} queries, certified bound {bound}");
    Ok(())
}

fn main() -> querylearn::Result<()> {
    for (name, c) in [("FIVE", fixtures::five()), ("TREE(3,2)", fixtures::tree(3, 2))] {
        let h = LazyHypothesisClass::Explicit(c.clone());
        let cd = consistency_dim(&c, &h)?;
        let sc = strong_consistency_dim(&c, &h)?;
        println!("{name}: d={} c={cd} SC={sc} |C|={}", c.ldim(), c.len());
        // The majority vote learner proposes arbitrary subsets.
        let all = LazyHypothesisClass::AllTotals(c.universe().clone());
        let c1 = c.clone();
        sweep("optimal", &c, &all, OptimalLearner::bound(&c), Box::new(move || Ok(Box::new(OptimalLearner::new(&c1)))))?;
        let (c1, h1) = (c.clone(), h.clone());
        sweep("cdim", &c, &h, CdimLearner::bound(&c, cd), Box::new(move || Ok(Box::new(CdimLearner::with_dimension(&c1, &h1, cd)?))))?;
        let (c1, h1) = (c.clone(), h.clone());
        sweep("eqmq", &c, &h, EqMqLearner::bound(&c, cd), Box::new(move || Ok(Box::new(EqMqLearner::with_dimension(&c1, &h1, cd)))))?;
        let (c1, h1) = (c.clone(), h.clone());
        sweep("halving", &c, &h, HalvingLearner::bound(&c, sc), Box::new(move || Ok(Box::new(HalvingLearner::new(&c1, &h1)?))))?;
        let (c1, mu) = (c.clone(), Distribution::uniform(c.n()));
        // Honest least-index counterexamples, so the distribution only steers choices.
        sweep("thicket", &c, &h, c.len(), Box::new(move || Ok(Box::new(ThicketLearner::new(&c1, &mu)))))?;
    }

    // The SC = 2 learner needs C(C,H) ≤ 2; powerset hypotheses give that.
    let c = fixtures::sing(4);
    let h = LazyHypothesisClass::AllTotals(c.universe().clone());
    println!("SING(4) with H = all subsets: c={}", consistency_dim(&c, &h)?);
    let (c1, h1) = (c.clone(), h.clone());
    sweep("sc2", &c, &h, Sc2Learner::bound(&c), Box::new(move || Ok(Box::new(Sc2Learner::new(&c1, &h1)?))))?;
    Ok(())
}
