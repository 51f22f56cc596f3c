//! τ-cotorsion pairs of `E` and their correspondence with support τ-tilting
//! subcategories, plus the torsion pair and approximation data of each.

use tautilt::regression::fixture;
use tautilt::tau_tilt::{acf_triple, enumerate_tau_cotorsion_pairs};

pub fn run_example() -> tautilt::Result<()> {
    let fx = fixture()?;
    let en = enumerate_tau_cotorsion_pairs(&fx.e)?;
    for (p, full) in en.pairs.iter().zip(&en.full) {
        let t = p.c.intersection(&p.d);
        let triple = acf_triple(&t, &fx.e);
        println!(
            "T = {:<10} C = {:<14} D = {:<14} F = {:<10} cotorsion pair: {full}, a.c.f. {}, torsion pair: {}",
            t.name(),
            p.c.name(),
            p.d.name(),
            triple.f.name(),
            triple.admissibly_contravariantly_finite,
            triple.torsion_pair
        );
    }
    println!("bijection with support τ-tilting: {}", en.is_bijection());
    println!(
        "full cotorsion pairs are the tilting ones: {}",
        en.full_is_tilting
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
