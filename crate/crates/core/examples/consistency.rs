//! Partial concepts, inconsistency order and the m-consistent hypothesis classes.
//!
//! Run with `cargo run --example consistency`.

use querylearn::consistency::{inconsistency_order, is_n_consistent};
use querylearn::dimensions::{consistency_dim, hypothesis_hm};
use querylearn::format::{class_to_text, parse_class};
use querylearn::{fixtures, PartialConcept};

fn main() -> querylearn::Result<()> {
    let c = parse_class(
        "# four points, four concepts
elements: a b c d e
11100
11010
10111
01111
",
    )?;
    print!("{}", class_to_text(&c));

    for lit in ["11***", "00***", "*****", "0*0**", "11011"] {
        let a = PartialConcept::parse_literal(lit, c.n())?;
        let k = inconsistency_order(a, &c);
        let label = k.map_or("extends into C".to_string(), |k| format!("inconsistency order {k}"));
        println!("{lit}: {label}, 2-consistent={}", is_n_consistent(a, &c, 2));
    }

    // H_m: every total labeling all of whose m-point restrictions extend into C.
    let c = fixtures::tree(3, 2);
    let d = c.ldim();
    for m in 1..=d + 2 {
        let h = hypothesis_hm(&c, m)?;
        let hs = h.enumerate()?;
        println!(
            "TREE(3,2), H_{m}: {} hypotheses, Ldim {}, C(C, H_{m}) = {}",
            hs.len(),
            hs.ldim(),
            consistency_dim(&c, &h)?
        );
    }
    Ok(())
}
