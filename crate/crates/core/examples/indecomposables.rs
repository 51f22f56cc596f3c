//! Enumerate the indecomposable modules of an algebra and compute the
//! Auslander-Reiten translate and Ext¹ between them.

use std::sync::Arc;

use tautilt::homology::{ext1, tau, tau_inverse};
use tautilt::pool::Pool;
use tautilt::regression::EXAMPLE_ALGEBRA;
use tautilt::Algebra;

pub fn run_example() -> tautilt::Result<()> {
    let alg = Arc::new(Algebra::parse(EXAMPLE_ALGEBRA)?);
    let pool = Pool::enumerate(alg)?;
    println!(
        "{} indecomposables (complete: {})",
        pool.len(),
        pool.is_complete()
    );
    for (i, m) in pool.members().iter().enumerate() {
        println!(
            "  {:>4}  dims {:?}  τ = {}  τ⁻¹ = {}",
            pool.label(i),
            m.dims(),
            pool.describe(&tau(m)),
            pool.describe(&tau_inverse(m))
        );
    }
    for (i, z) in pool.members().iter().enumerate() {
        for (j, x) in pool.members().iter().enumerate() {
            let e = ext1(z, x)?;
            for c in &e.classes {
                println!(
                    "  Ext¹({}, {}): 0 -> {} -> {} -> {} -> 0",
                    pool.label(i),
                    pool.label(j),
                    pool.label(j),
                    pool.describe(c.sequence.middle()),
                    pool.label(i)
                );
            }
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
