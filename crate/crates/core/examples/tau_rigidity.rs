//! τ-rigidity, condition (A) and support τ-tilting verdicts, in the module
//! category and in the exact subcategory `E = Fac(2+2/3+1/2)`.

use tautilt::regression::fixture;
use tautilt::subcat::Subcat;
use tautilt::tau_tilt::{
    complete_to_support_tau_tilting, is_tau_rigid, support_tau_tilting_report,
};

pub fn run_example() -> tautilt::Result<()> {
    let fx = fixture()?;
    let pool = &fx.pool;
    for spec in ["2+2/3+1/2", "1+2/3", "1/2+1"] {
        let t = Subcat::parse(pool, spec)?;
        for (name, ctx) in [("mod Λ", &fx.modules), ("E", &fx.e)] {
            let r = support_tau_tilting_report(&t, ctx);
            println!(
                "{spec} in {name}: τ-rigid {}, support τ-tilting {}",
                is_tau_rigid(&t, ctx),
                r.is_support_tau_tilting()
            );
            if let Some(why) = r.reason(pool) {
                println!("    {why}");
            }
        }
    }
    let t = Subcat::parse(pool, "2/3+1/2")?;
    println!(
        "completion of 2/3+1/2 in E: {}",
        complete_to_support_tau_tilting(&t, &fx.e)?.name()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
