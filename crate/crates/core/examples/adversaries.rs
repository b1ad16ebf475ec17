//! Lower-bound teachers: the mistake-tree adversary and the witness adversary.
//!
//! Run with `cargo run --example adversaries`.

use querylearn::learners::{run_session, CdimLearner, OptimalLearner};
use querylearn::teachers::{TreeAdversary, WitnessAdversary};
use querylearn::{fixtures, LazyHypothesisClass, PartialConcept};

fn main() -> querylearn::Result<()> {
    for (name, c) in [
        ("SING(4)", fixtures::sing(4)),
        ("POW(3)", fixtures::pow(3)),
        ("TREE(3,2)", fixtures::tree(3, 2)),
    ] {
        let mut learner = OptimalLearner::new(&c);
        let mut teacher = TreeAdversary::new(&c);
        let t = run_session(&mut learner, &mut teacher, OptimalLearner::bound(&c))?;
        println!("{name}: Ldim {}, tree adversary forced {} queries", c.ldim(), t.queries());
        print!("{}", t.render(&c));
    }

    // All-zero is 3-consistent with SING(4) and outside H = SING(4), so the
    // teacher can answer every query as if it were the target.
    let c = fixtures::sing(4);
    let h = LazyHypothesisClass::Explicit(c.clone());
    let witness = PartialConcept::parse_literal("0000", 4)?;
    let mut learner = CdimLearner::new(&c, &h)?;
    let mut teacher = WitnessAdversary::new(&c, &h, witness, 3)?;
    let t = run_session(&mut learner, &mut teacher, 10)?;
    println!("SING(4): witness adversary forced {} queries", t.queries());
    print!("{}", t.render(&c));
    Ok(())
}
