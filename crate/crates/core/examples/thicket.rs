//! Random counterexamples: the thicket query graph and Monte Carlo sessions.
//!
//! Run with `cargo run --release --example thicket`.

use querylearn::distribution::{to_decimal, Distribution};
use querylearn::thicket::{estimate_expected_queries, hoeffding_tail, ThicketGraph};
use querylearn::fixtures;

fn main() -> querylearn::Result<()> {
    let c = fixtures::sing(4);
    let mu = Distribution::uniform(c.n());
    let g = ThicketGraph::new(&c, &mu)?;
    println!("SING(4), uniform: edge weights d(A,B)");
    for i in 0..c.len() {
        let row: Vec<String> = (0..c.len())
            .map(|j| g.weight(i, j).map_or("-".into(), |w| w.to_string()))
            .collect();
        println!("  {}", row.join("  "));
    }
    println!("max query rank {}", g.max_rank().expect("two or more concepts"));
    println!("pairs with d(A,B)+d(B,A) < 1: {:?}", g.pair_violations());
    println!("deficient cycle: {:?}", g.deficient_cycle(c.len()));

    // A skewed distribution over the FIVE class.
    let five = fixtures::five();
    let mu5 = Distribution::parse("a 1/2\nb 1/4\nc 1/8\nd 1/16\ne 1/16\n", five.universe())?;
    let g5 = ThicketGraph::new(&five, &mu5)?;
    let rank = g5.max_rank().expect("two or more concepts");
    println!("FIVE, skewed: max query rank {} ~ {}", rank, to_decimal(&rank, 4));

    for (name, c) in [("SING(4)", fixtures::sing(4)), ("TREE(3,2)", fixtures::tree(3, 2))] {
        let mu = Distribution::uniform(c.n());
        let s = estimate_expected_queries(&c, &mu, 10_000, 42)?;
        println!(
            "{name}: {} trials, mean {:.4} counterexamples (± {:.4}), with final query {:.4}, max {}, 2·Ldim = {}",
            s.trials,
            s.mean,
            s.stderr,
            s.mean_with_final,
            s.max,
            2 * c.ldim()
        );
        let n = 4 * c.ldim();
        println!("  P(more than {n}) = {:.4}, Hoeffding estimate {:.4}", s.tail(n), hoeffding_tail(c.ldim(), n));
    }
    Ok(())
}
