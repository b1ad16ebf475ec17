//! Dimensions of the standard fixture classes.
//!
//! Run with `cargo run --example dimensions`.

use querylearn::dimensions::{ldim_with_tree, DimensionReport, MistakeTree};
use querylearn::{fixtures, ConceptClass, LazyHypothesisClass};

fn show_tree(c: &ConceptClass, t: &MistakeTree, depth: usize) {
    let pad = "  ".repeat(depth);
    match t {
        MistakeTree::Leaf { concept } => println!("{pad}-> {}", c.concept(*concept).to_bitstring(c.n())),
        MistakeTree::Node { element, zero, one } => {
            println!("{pad}{}?", c.universe().name(*element));
            show_tree(c, zero, depth + 1);
            show_tree(c, one, depth + 1);
        }
    }
}

fn main() -> querylearn::Result<()> {
    let classes = [
        ("SING(4)", fixtures::sing(4)),
        ("POW(3)", fixtures::pow(3)),
        ("FIVE", fixtures::five()),
        ("TREE(3,2)", fixtures::tree(3, 2)),
    ];
    for (name, c) in &classes {
        let h = LazyHypothesisClass::Explicit(c.clone());
        let r = DimensionReport::compute(c, Some(&h), true)?;
        println!("{name}: {}", r.to_string().trim_end().replace('\n', " "));
    }

    // Against a richer hypothesis class the consistency dimension drops.
    let sing = fixtures::sing(4);
    let singe = LazyHypothesisClass::Explicit(fixtures::singe(4));
    let r = DimensionReport::compute(&sing, Some(&singe), true)?;
    println!("SING(4) with H = SING(4) + empty: cdim={:?} scdim={:?}", r.cdim, r.scdim);

    let (d, tree) = ldim_with_tree(&fixtures::tree(2, 2));
    println!("\nA mistake tree of height {d} for TREE(2,2):");
    show_tree(&fixtures::tree(2, 2), &tree, 1);
    Ok(())
}
