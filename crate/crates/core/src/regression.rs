//! The worked example `1 -> 2 -> 3` with the composite arrow killed, and a
//! battery of checks on it. Used by `tautilt check-all` and the acceptance
//! tests.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::brenner_butler::{verify_equivalence, verify_triangle};
use crate::decompose::{decompose, is_isomorphic};
use crate::dot::edge_names;
use crate::error::Result;
use crate::hom::hom_space;
use crate::homology::{ext1, syzygy, tau, tau_inverse};
use crate::linalg::{q, Matrix};
use crate::module::Module;
use crate::pool::Pool;
use crate::restriction::{
    counting_theorem, restricted_context, rigid_pair_inequality, verify_tilting,
};
use crate::subcat::Subcat;
use crate::tau_tilt::{
    check_condition_a, complete_to_support_tau_tilting, enumerate_stau_tilt,
    enumerate_tau_cotorsion_pairs, enumerate_tau_rigid_pairs, ExactContext, HasseGraph,
};

pub const EXAMPLE_ALGEBRA: &str = "\
# 1 -a-> 2 -b-> 3 with a*b = 0
vertices: 3
arrow: a 1 2
arrow: b 2 3
relation: a*b
";

/// Generator of the exact subcategory `E = Fac T`.
pub const EXAMPLE_T: &str = "2+2/3+1/2";

/// τ-rigid pairs of `E` satisfying (A), as `(T, Q)`.
pub const E_PAIRS: [(&str, &str); 8] = [
    ("0", "2+2/3+1/2"),
    ("2/3", "2+1/2"),
    ("1", "2+2/3"),
    ("2+2/3", "1/2"),
    ("2/3+1/2", "0"),
    ("1+2/3", "2"),
    ("2+2/3+1/2", "0"),
    ("1+2/3+1/2", "0"),
];

/// Cover relations of the support τ-tilting poset of `E`.
pub const E_EDGES: [(&str, &str); 8] = [
    ("2+2/3+1/2", "1+2/3+1/2"),
    ("1+2/3", "1"),
    ("1+2/3+1/2", "1+2/3"),
    ("1", "0"),
    ("2+2/3+1/2", "2+2/3"),
    ("2+2/3", "2/3"),
    ("2/3", "0"),
    ("1+2/3", "2/3"),
];

/// Cover relations of the support τ-tilting poset of the module category.
pub const MOD_EDGES: [(&str, &str); 18] = [
    ("3+2/3+1/2", "3+1/2+1"),
    ("3+1/2+1", "3+1"),
    ("3+1", "3"),
    ("3+2/3+1/2", "3+2/3"),
    ("3+2/3", "3"),
    ("3+2/3+1/2", "2+2/3+1/2"),
    ("2+2/3+1/2", "2+1/2"),
    ("2+1/2", "1/2+1"),
    ("1/2+1", "1"),
    ("1", "0"),
    ("2+2/3+1/2", "2+2/3"),
    ("2+2/3", "2"),
    ("2", "0"),
    ("2+1/2", "2"),
    ("3+1/2+1", "1/2+1"),
    ("3+2/3", "2+2/3"),
    ("3", "0"),
    ("3+1", "1"),
];

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(id: usize, name: &'static str, failures: Vec<String>, ok: String) -> Check {
        Check {
            id,
            name,
            passed: failures.is_empty(),
            detail: if failures.is_empty() {
                ok
            } else {
                failures.join("; ")
            },
        }
    }

    /// `PASS [n] name: detail` or `FAIL ...`.
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

/// The example pool with the module category and `E = Fac T` as contexts.
pub struct Fixture {
    pub pool: Arc<Pool>,
    pub modules: ExactContext,
    pub e: ExactContext,
}

pub fn fixture() -> Result<Fixture> {
    let alg = Arc::new(Algebra::parse(EXAMPLE_ALGEBRA)?);
    let pool = Arc::new(Pool::enumerate(alg)?);
    let modules = ExactContext::module_category(&pool);
    let e = ExactContext::of_fac(&Subcat::parse(&pool, EXAMPLE_T)?)?;
    Ok(Fixture { pool, modules, e })
}

fn normalize(pool: &Arc<Pool>, spec: &str) -> String {
    Subcat::parse(pool, spec)
        .map(|s| s.name())
        .unwrap_or_else(|_| format!("?{spec}"))
}

fn expected_edges(pool: &Arc<Pool>, edges: &[(&str, &str)]) -> Vec<(String, String)> {
    let mut e: Vec<(String, String)> = edges
        .iter()
        .map(|(a, b)| (normalize(pool, a), normalize(pool, b)))
        .collect();
    e.sort();
    e
}

fn compare_hasse(
    h: &HasseGraph,
    pool: &Arc<Pool>,
    vertices: usize,
    edges: &[(&str, &str)],
) -> Vec<String> {
    let mut f = Vec::new();
    if h.vertices.len() != vertices {
        f.push(format!(
            "{} vertices, expected {vertices}",
            h.vertices.len()
        ));
    }
    if edge_names(h) != expected_edges(pool, edges) {
        f.push(format!("cover edges differ: {:?}", edge_names(h)));
    }
    if h.tainted {
        f.push("pool incomplete".into());
    }
    f
}

pub fn pool_check(fx: &Fixture) -> Check {
    let got: BTreeSet<&str> = fx.pool.labels().iter().map(String::as_str).collect();
    let want: BTreeSet<&str> = ["3", "2/3", "2", "1/2", "1"].into_iter().collect();
    let mut f = Vec::new();
    if got != want {
        f.push(format!("pool {:?}", fx.pool.labels()));
    }
    if !fx.pool.is_complete() {
        f.push("completeness flag false".into());
    }
    Check::new(
        1,
        "indecomposables",
        f,
        format!("{} complete", fx.pool.labels().join(", ")),
    )
}

pub fn pairs_check(fx: &Fixture) -> Result<Check> {
    let p = &fx.pool;
    let pairs = enumerate_tau_rigid_pairs(&fx.e)?;
    let got: BTreeSet<(String, String)> = pairs
        .iter()
        .map(|(x, _)| (x.t.name(), x.q.name()))
        .collect();
    let want: BTreeSet<(String, String)> = E_PAIRS
        .iter()
        .map(|(a, b)| (normalize(p, a), normalize(p, b)))
        .collect();
    let mut f = Vec::new();
    if got != want {
        f.push(format!("pairs {got:?}"));
    }
    let failing: Vec<String> = pairs
        .iter()
        .filter(|(_, s)| !s)
        .map(|(x, _)| x.label())
        .collect();
    if failing != [format!("{} | 0", normalize(p, "2/3+1/2"))] {
        f.push(format!("non-support-τ-tilting pairs {failing:?}"));
    }
    match complete_to_support_tau_tilting(&Subcat::parse(p, "2/3+1/2")?, &fx.e) {
        Ok(c)
            if c.name() == normalize(p, "1+2/3+1/2")
                && fx.e.orthogonal_projectives(&c).is_empty() => {}
        Ok(c) => f.push(format!("completion {}", c.name())),
        Err(e) => f.push(format!("completion failed: {e}")),
    }
    Ok(Check::new(
        2,
        "τ-rigid pairs in E",
        f,
        format!(
            "{} pairs, only 2/3+1/2 | 0 fails, completed to 1+2/3+1/2 | 0",
            pairs.len()
        ),
    ))
}

pub fn e_hasse_check(fx: &Fixture) -> Result<Check> {
    let h = enumerate_stau_tilt(&fx.e)?;
    let f = compare_hasse(&h, &fx.pool, 7, &E_EDGES);
    Ok(Check::new(
        3,
        "Hasse quiver of E",
        f,
        format!(
            "{} vertices, {} cover edges",
            h.vertices.len(),
            h.edges.len()
        ),
    ))
}

pub fn mod_hasse_check(fx: &Fixture) -> Result<Check> {
    let h = enumerate_stau_tilt(&fx.modules)?;
    let f = compare_hasse(&h, &fx.pool, 12, &MOD_EDGES);
    Ok(Check::new(
        4,
        "Hasse quiver of mod Λ",
        f,
        format!(
            "{} vertices, {} cover edges",
            h.vertices.len(),
            h.edges.len()
        ),
    ))
}

pub fn condition_a_check(fx: &Fixture) -> Result<Check> {
    let p = &fx.pool;
    let report = check_condition_a(&Subcat::parse(p, "1/2+1")?, &fx.e);
    let mut f = Vec::new();
    match report.failure() {
        None => f.push("condition (A) holds".into()),
        Some(c) => {
            let got = (
                p.label(c.projective).to_string(),
                p.describe(&c.approximation.object),
                p.describe(&c.kernel),
                c.kernel_in_ambient,
            );
            if got != ("2/3".into(), "1/2".into(), "3".into(), false) {
                f.push(format!("witness {got:?}"));
            }
        }
    }
    let detail = report.describe_failure(p).unwrap_or_default();
    Ok(Check::new(5, "condition (A) witness", f, detail))
}

pub fn cotorsion_check(fx: &Fixture) -> Result<Check> {
    let en = enumerate_tau_cotorsion_pairs(&fx.e)?;
    let mut f = Vec::new();
    if en.pairs.len() != 7 || en.stau_tilt.len() != 7 {
        f.push(format!(
            "{} pairs, {} support τ-tilting",
            en.pairs.len(),
            en.stau_tilt.len()
        ));
    }
    if !en.pairs_to_tilt {
        f.push("(C, D) -> C ∩ D is not inverse to T -> (⊥Fac T, Fac T)".into());
    }
    if !en.full_is_tilting {
        f.push("full cotorsion pairs do not match tilting subcategories".into());
    }
    if !en.tilt_to_pairs {
        f.push("T -> (⊥Fac T, Fac T) -> C ∩ D is not the identity".into());
    }
    Ok(Check::new(
        6,
        "τ-cotorsion bijection",
        f,
        format!("{} pairs, both round trips identity", en.pairs.len()),
    ))
}

pub fn counting_check(fx: &Fixture) -> Result<Check> {
    let mut f = Vec::new();
    let mut n = 0;
    for ctx in [&fx.modules, &fx.e] {
        for v in enumerate_stau_tilt(ctx)?.vertices {
            n += 1;
            let (a, b) = counting_theorem(&v.t, ctx);
            if a != b {
                f.push(format!(
                    "{}: |T| = {a}, nonorthogonal projectives {b}",
                    v.t.name()
                ));
            }
        }
    }
    let pairs = enumerate_tau_rigid_pairs(&fx.e)?;
    for (pair, stt) in &pairs {
        let (lhs, rhs, eq) = rigid_pair_inequality(&pair.t, &fx.e);
        if lhs > rhs || eq != *stt {
            f.push(format!("{}: {lhs} vs {rhs}", pair.label()));
        }
    }
    Ok(Check::new(
        7,
        "counting",
        f,
        format!(
            "{n} support τ-tilting objects counted, inequality sharp on {} pairs",
            pairs.iter().filter(|p| p.1).count()
        ),
    ))
}

pub fn tilting_check(fx: &Fixture) -> Result<Check> {
    let mut f = Vec::new();
    let mut n = 0;
    for (name, ctx) in [("mod Λ", &fx.modules), ("E", &fx.e)] {
        for v in enumerate_stau_tilt(ctx)?.vertices {
            n += 1;
            let inner = restricted_context(&v.t, ctx)?;
            let verdict = verify_tilting(&v.t, &inner);
            if !verdict.holds() {
                f.push(format!("{} in {name}: {verdict:?}", v.t.name()));
            }
        }
    }
    Ok(Check::new(
        8,
        "tilting in E_T",
        f,
        format!("{n} objects tilting in their restriction"),
    ))
}

pub fn brenner_butler_check(fx: &Fixture) -> Result<Check> {
    let t = Subcat::parse(&fx.pool, EXAMPLE_T)?;
    let p = fx.modules.projectives();
    let eq = verify_equivalence(p, &t, &fx.modules)?;
    let tri = verify_triangle(p, &t, &fx.modules)?;
    let mut f = Vec::new();
    for o in eq.objects.iter().filter(|o| !o.holds()) {
        f.push(format!("{}: {o:?}", fx.pool.label(o.x)));
    }
    f.extend(eq.exactness_failures.iter().cloned());
    if !tri.holds() {
        f.push(format!("triangle: {tri:?}"));
    }
    Ok(Check::new(
        9,
        "Brenner-Butler",
        f,
        format!(
            "{} objects, {} conflations, {} morphisms natural",
            eq.objects.len(),
            eq.conflations,
            tri.morphisms_checked
        ),
    ))
}

/// Dimension of `Hom(M, N)` from the commuting-square equations, built
/// entry by entry.
pub fn brute_force_hom_dim(m: &Module, n: &Module) -> usize {
    let alg = m.algebra();
    let vc = alg.vertex_count();
    let mut offset = vec![0; vc + 1];
    for v in 0..vc {
        offset[v + 1] = offset[v] + n.dims()[v] * m.dims()[v];
    }
    let unknowns = offset[vc];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims()[v] + c;
    let mut rows: Vec<Vec<crate::linalg::Q>> = Vec::new();
    for (gi, g) in alg.generators().iter().enumerate() {
        let (s, t) = (g.source, g.target);
        let (ma, na) = (m.map(gi), n.map(gi));
        // (N_a φ_s − φ_t M_a)[i][j] = 0
        for i in 0..n.dims()[t] {
            for j in 0..m.dims()[s] {
                let mut row = vec![q(0); unknowns];
                for k in 0..n.dims()[s] {
                    row[var(s, k, j)] += na.get(i, k).clone();
                }
                for k in 0..m.dims()[t] {
                    row[var(t, i, k)] -= ma.get(k, j).clone();
                }
                rows.push(row);
            }
        }
    }
    let rank = if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(rows.len(), unknowns, rows).rank()
    };
    unknowns - rank
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> (Matrix, Matrix) {
    loop {
        let s = Matrix::from_fn(n, n, |_, _| q(rng.gen_range(-2..=2)));
        if let Some(inv) = s.inverse() {
            return (s, inv);
        }
    }
}

/// `M` transported along random per-vertex changes of basis.
pub fn scramble(m: &Module, rng: &mut ChaCha8Rng) -> Module {
    let alg = m.algebra();
    let bases: Vec<(Matrix, Matrix)> = m
        .dims()
        .iter()
        .map(|&d| random_invertible(rng, d))
        .collect();
    let maps = alg
        .generators()
        .iter()
        .enumerate()
        .map(|(gi, g)| &(&bases[g.target].0 * m.map(gi)) * &bases[g.source].1)
        .collect();
    Module::new(alg.clone(), m.dims().to_vec(), maps)
        .expect("a change of basis preserves the relations")
}

/// Property suites with brute-force oracles, deterministic in `seed`.
pub fn property_check(fx: &Fixture, samples: usize, seed: u64) -> Result<Check> {
    let pool = &fx.pool;
    let alg = pool.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Vec::new();
    let n = pool.len();

    for _ in 0..samples {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (a, b) = (pool.member(i), pool.member(j));
        let h = hom_space(a, b)?;
        if h.dim() != brute_force_hom_dim(a, b) || !h.basis().iter().all(|x| x.is_homomorphism()) {
            f.push(format!("hom({}, {})", pool.label(i), pool.label(j)));
        }
    }
    for v in 0..alg.vertex_count() {
        let pv = Module::projective(alg.clone(), v)?;
        let iv = Module::injective(alg.clone(), v)?;
        for x in pool.members() {
            if hom_space(&pv, x)?.dim() != x.dims()[v] || hom_space(x, &iv)?.dim() != x.dims()[v] {
                f.push(format!("Yoneda at vertex {}", v + 1));
            }
        }
    }

    for (i, x) in pool.members().iter().enumerate() {
        let t = tau(x);
        if pool.is_projective(i) {
            if !t.is_zero() {
                f.push(format!("τ({}) ≠ 0", pool.label(i)));
            }
        } else if !is_isomorphic(&tau_inverse(&t), x) {
            f.push(format!("τ⁻¹τ({}) ≇ {}", pool.label(i), pool.label(i)));
        }
        let ti = tau_inverse(x);
        if pool.is_injective(i) != ti.is_zero() || (!ti.is_zero() && !is_isomorphic(&tau(&ti), x)) {
            f.push(format!("ττ⁻¹ at {}", pool.label(i)));
        }
    }

    for (i, z) in pool.members().iter().enumerate() {
        let (omega, _, cover) = syzygy(z);
        for (j, x) in pool.members().iter().enumerate() {
            let e = ext1(z, x)?;
            // 0 -> Hom(Z,X) -> Hom(P0,X) -> Hom(ΩZ,X) -> Ext¹(Z,X) -> 0
            let expect = hom_space(&omega, x)?.dim() + hom_space(z, x)?.dim()
                - hom_space(&cover.projective, x)?.dim();
            let nonsplit = e
                .classes
                .iter()
                .all(|c| c.sequence.is_exact() && !c.sequence.splits());
            if e.dim() != expect || !nonsplit || e.dim() != pool.ext_dim(i, j) {
                f.push(format!("Ext¹({}, {})", pool.label(i), pool.label(j)));
            }
        }
    }

    for _ in 0..samples {
        let k = rng.gen_range(1..=3);
        let chosen: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
        let parts: Vec<Module> = chosen.iter().map(|&i| pool.member(i).clone()).collect();
        let sum = scramble(&Module::direct_sum(alg, &parts).0, &mut rng);
        let mut got: Vec<usize> = Vec::new();
        for (piece, mult) in decompose(&sum) {
            match pool.find(&piece) {
                Some(i) => got.extend(std::iter::repeat_n(i, mult)),
                None => got.push(usize::MAX),
            }
        }
        let mut want = chosen.clone();
        want.sort_unstable();
        got.sort_unstable();
        if got != want {
            f.push(format!("decompose {want:?} gave {got:?}"));
        }
    }

    let semisimple = Arc::new(Algebra::parse("vertices: 4\n")?);
    let sp = Arc::new(Pool::enumerate(semisimple)?);
    let h = enumerate_stau_tilt(&ExactContext::module_category(&sp))?;
    let boolean = h.vertices.len() == 16
        && h.edges.len() == 32
        && h.edges.iter().all(|&(a, b)| {
            let (x, y) = (&h.vertices[a].t, &h.vertices[b].t);
            y.is_subset(x) && x.len() == y.len() + 1
        })
        && h.vertices.iter().all(|v| v.t.len() + v.q.len() == 4);
    if !boolean {
        f.push(format!(
            "semisimple lattice: {} vertices, {} edges",
            h.vertices.len(),
            h.edges.len()
        ));
    }

    Ok(Check::new(
        10,
        "property suites",
        f,
        format!("hom, τ, Ext¹, decomposition ({samples} samples each) and the Boolean lattice agree with oracles"),
    ))
}

/// All ten checks in order.
pub fn run_all() -> Result<Vec<Check>> {
    let fx = fixture()?;
    Ok(vec![
        pool_check(&fx),
        pairs_check(&fx)?,
        e_hasse_check(&fx)?,
        mod_hasse_check(&fx)?,
        condition_a_check(&fx)?,
        cotorsion_check(&fx)?,
        counting_check(&fx)?,
        tilting_check(&fx)?,
        brenner_butler_check(&fx)?,
        property_check(&fx, 50, 0)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_hom_on_projectives() {
        let fx = fixture().unwrap();
        let p = fx.pool.member(fx.pool.index_of_label("1/2").unwrap());
        let s = fx.pool.member(fx.pool.index_of_label("2").unwrap());
        assert_eq!(brute_force_hom_dim(p, s), 0);
        assert_eq!(brute_force_hom_dim(p, p), 1);
    }

    #[test]
    fn scrambling_preserves_isomorphism_class() {
        let fx = fixture().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for m in fx.pool.members() {
            assert!(is_isomorphic(&scramble(m, &mut rng), m));
        }
    }
}
