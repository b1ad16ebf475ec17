//! DFA languages on short binary words: counting, Nerode witnesses and learning.
//!
//! Run with `cargo run --release --example dfa`.

use querylearn::automata::{
    dfa_count_bound, dfa_language, enumerate_dfa_class, learn_dfa, nerode_witness, string_universe, word_at, Dfa,
    DfaMode,
};
use querylearn::dimensions::consistency_dim;
use querylearn::{Concept, LazyHypothesisClass};

fn main() -> querylearn::Result<()> {
    for m in [3, 4] {
        let c = enumerate_dfa_class(2, m)?;
        let h = LazyHypothesisClass::Explicit(c.clone());
        println!(
            "2-state languages on words up to length {m}: {} (bound {}), Ldim {}, C(C,C) = {} (cap 6)",
            c.len(),
            dfa_count_bound(2),
            c.ldim(),
            consistency_dim(&c, &h)?
        );
    }

    let u = string_universe(3)?;
    let one_one = (0..u.len()).fold(Concept::from_bits(0), |a, i| {
        a.with_label(i, word_at(i).iter().filter(|&&b| b).count() == 1)
    });
    let w = nerode_witness(one_one, &u, 2).expect("three Nerode classes");
    let shown: Vec<String> = w
        .domain()
        .map(|i| format!("{}={}", u.name(i), w.label(i).expect("in domain") as u8))
        .collect();
    println!("'exactly one 1' is not 2-state: witness {{{}}}", shown.join(", "));

    let parity = Dfa::parity();
    println!("parity accepts: {}", dfa_language(&parity, 3)?.to_bitstring(u.len()));
    for mode in [DfaMode::EqMq, DfaMode::Eq] {
        let run = learn_dfa(2, 3, &parity, mode)?;
        println!("learning parity ({mode:?}): c={} d={} bound={}", run.consistency_dim, run.ldim, run.bound);
        print!("{}", run.transcript.render(&run.class));
    }
    Ok(())
}
