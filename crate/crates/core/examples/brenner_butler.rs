//! The Brenner-Butler correspondence for `T = 2+2/3+1/2`: the bimodule
//! `M = Hom(Λ, T)`, the functors `Hom_A(M, -)` and `- ⊗_B M`, and Tor.

use tautilt::brenner_butler::{
    build_bimodule, hom_functor, hom_into, tensor_functor, tor, verify_equivalence, verify_triangle,
};
use tautilt::regression::{fixture, EXAMPLE_T};
use tautilt::subcat::Subcat;

pub fn run_example() -> tautilt::Result<()> {
    let fx = fixture()?;
    let pool = &fx.pool;
    let p = fx.modules.projectives().clone();
    let t = Subcat::parse(pool, EXAMPLE_T)?;
    let m = build_bimodule(&p, &t)?;
    println!(
        "dim M = {}, bimodule axioms hold: {}",
        m.dim(),
        m.is_bimodule()
    );
    for x in fx.modules.fac(&t).members() {
        let xa = hom_into(&m.right, pool.member(*x))?;
        let n = hom_functor(&m, &xa.module)?;
        println!(
            "X = {:<4} Hom_A(M, X) dims {:?}, back to dim {}, Tor_1 = {}",
            pool.label(*x),
            n.module.dims(),
            tensor_functor(&m, &n.module)?.dim(),
            tor(&m, &n.module, 1)?
        );
    }
    let eq = verify_equivalence(&p, &t, &fx.modules)?;
    let tri = verify_triangle(&p, &t, &fx.modules)?;
    println!("equivalence: {}, triangle: {}", eq.holds(), tri.holds());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
