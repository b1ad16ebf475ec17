//! Exact learning complexity by minimax search, with and without membership queries.
//!
//! Run with `cargo run --release --example exact_oracle`.

use querylearn::gametree::{lc_eq_exact, lc_eqmq_exact, GameSolver, Mode};
use querylearn::{fixtures, ConceptClass, LazyHypothesisClass};

fn main() -> querylearn::Result<()> {
    let sing = fixtures::sing(4);
    let cases: Vec<(&str, ConceptClass, LazyHypothesisClass)> = vec![
        ("SING(4), H = C", sing.clone(), LazyHypothesisClass::Explicit(sing.clone())),
        ("SING(4), H = C + empty", sing.clone(), LazyHypothesisClass::Explicit(fixtures::singe(4))),
        ("SING(4), H = all subsets", sing.clone(), LazyHypothesisClass::AllTotals(sing.universe().clone())),
        ("POW(3), H = C", fixtures::pow(3), LazyHypothesisClass::Explicit(fixtures::pow(3))),
        ("FIVE, H = C", fixtures::five(), LazyHypothesisClass::Explicit(fixtures::five())),
        ("TREE(3,2), H = C", fixtures::tree(3, 2), LazyHypothesisClass::Explicit(fixtures::tree(3, 2))),
    ];
    for (name, c, h) in &cases {
        let eq = lc_eq_exact(c, h)?;
        let eqmq = lc_eqmq_exact(c, h)?;
        println!("{name:<26} LC^EQ={:<2} LC^EQ+MQ={:<2} ({} + {} positions)", eq.lc, eqmq.lc, eq.nodes, eqmq.nodes);
    }

    // Cutoffs only skip work; the value is unchanged.
    let c = fixtures::tree(3, 2);
    let h = LazyHypothesisClass::Explicit(c.clone());
    let pruned = GameSolver::new(&c, &h, Mode::Eq)?.solve();
    let plain = GameSolver::new(&c, &h, Mode::Eq)?.without_pruning().solve();
    println!("TREE(3,2): pruned {} in {} positions, unpruned {} in {}", pruned.lc, pruned.nodes, plain.lc, plain.nodes);
    Ok(())
}
