//! Build path algebras from quivers with relations, inspect their bases and
//! Cartan matrices, and build an algebra from structure constants.

use tautilt::algebra::{Algebra, Presentation, Quiver};
use tautilt::linalg::q;

pub fn run_example() -> tautilt::Result<()> {
    // 1 -a-> 2 -b-> 3 with a*b = 0, built in code (vertices are 0-based here)
    let quiver = Quiver::new(3).arrow("a", 0, 1).arrow("b", 1, 2);
    let lambda = Algebra::from_presentation(&Presentation::new(quiver).relation("a*b")?)?;
    println!("dim Λ = {}", lambda.dim());
    for b in lambda.basis() {
        println!("  {} : {} -> {}", b.label, b.source + 1, b.target + 1);
    }
    println!("Cartan matrix: {:?}", lambda.cartan_matrix());

    // the same kind of algebra from the text format, with a commutativity relation
    let square = Algebra::parse(
        "vertices: 4\narrow: a 1 2\narrow: b 2 4\narrow: c 1 3\narrow: d 3 4\nrelation: a*b - c*d\n",
    )?;
    println!("commutative square: dim {}", square.dim());

    // k[x]/(x^2) from structure constants: basis e, x with x*x = 0
    let dual_numbers = Algebra::from_structure_constants(
        vec!["1".into()],
        vec![("e".into(), 0, 0), ("x".into(), 0, 0)],
        vec![
            vec![vec![(0, q(1))], vec![(1, q(1))]],
            vec![vec![(1, q(1))], vec![]],
        ],
    )?;
    println!(
        "dual numbers: dim {}, associative {}",
        dual_numbers.dim(),
        dual_numbers.is_associative()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
