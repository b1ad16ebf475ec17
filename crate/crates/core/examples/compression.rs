//! The Ldim-sized compression scheme with Ldim + 1 reconstruction functions.
//!
//! Run with `cargo run --example compression`.

use querylearn::compression::{check_round_trip, f_partial, CompressionScheme};
use querylearn::{fixtures, PartialConcept};

fn main() -> querylearn::Result<()> {
    let c = fixtures::tree(3, 2);
    let scheme = CompressionScheme::new(&c);
    println!("TREE(3,2): d = {}, f_C = {}", scheme.size(), f_partial(&c).to_literal(c.n()));
    for lit in ["1**1********", "0**0********", "*1*****1****", "1*0*********", "00**********"] {
        let f = PartialConcept::parse_literal(lit, c.n())?;
        let t = scheme.compress(f)?;
        let names: Vec<&str> = t.iter().map(|&x| c.universe().name(x)).collect();
        let recovered = scheme.recovering(f)?;
        let g = scheme.decompress(recovered[0], &t)?.expect("recovered");
        println!("  {lit} -> ({}) -> rho{} = {}", names.join(","), recovered[0], g.to_bitstring(c.n()));
    }

    for (name, c) in [
        ("SING(4)", fixtures::sing(4)),
        ("POW(3)", fixtures::pow(3)),
        ("FIVE", fixtures::five()),
        ("TREE(3,2)", fixtures::tree(3, 2)),
    ] {
        let r = check_round_trip(&c)?;
        println!("{name}: d={} rhos={} samples={} failures={:?}", r.d, r.rhos, r.samples, r.failure);
    }
    Ok(())
}
