//! Restrict to `E_T`, where a support τ-tilting `T` becomes tilting, and
//! check the counting results.

use tautilt::regression::fixture;
use tautilt::restriction::{restriction_report, successive_reduction_check};
use tautilt::subcat::Subcat;
use tautilt::Error;

pub fn run_example() -> tautilt::Result<()> {
    let fx = fixture()?;
    let pool = &fx.pool;
    println!("== T = 1 in mod Λ");
    print!(
        "{}",
        restriction_report(&Subcat::parse(pool, "1")?, &fx.modules)?.render(pool)
    );
    println!("== T = 1+2/3 in E");
    print!(
        "{}",
        restriction_report(&Subcat::parse(pool, "1+2/3")?, &fx.e)?.render(pool)
    );

    let t = Subcat::parse(pool, "2+2/3+1/2")?;
    for spec in ["2+2/3", "1+2/3+1/2"] {
        let t2 = Subcat::parse(pool, spec)?;
        match successive_reduction_check(&t, &t2, &fx.modules) {
            Ok(r) => println!(
                "{spec} below {}: |T'| + |T~| = |T| is {} (T~ = {})",
                t.name(),
                r.identity_holds,
                r.complement.name()
            ),
            Err(Error::HypothesisFailed(why)) => println!("{spec}: hypothesis fails: {why}"),
            Err(e) => return Err(e),
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
