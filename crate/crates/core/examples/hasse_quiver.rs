//! The support τ-tilting posets of the module category and of `E`, printed
//! as DOT graphs.

use tautilt::dot::hasse_to_dot;
use tautilt::regression::fixture;
use tautilt::tau_tilt::enumerate_stau_tilt;

pub fn run_example() -> tautilt::Result<()> {
    let fx = fixture()?;
    for (name, ctx) in [("mod", &fx.modules), ("E", &fx.e)] {
        let h = enumerate_stau_tilt(ctx)?;
        println!(
            "// {name}: {} vertices, {} cover edges",
            h.vertices.len(),
            h.edges.len()
        );
        print!("{}", hasse_to_dot(&h, name));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
