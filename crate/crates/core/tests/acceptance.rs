//! One PASS/FAIL line per acceptance criterion. Each line combines the
//! library's regression check with assertions made directly here.

use std::process::ExitCode;

use tautilt::dot::hasse_to_dot;
use tautilt::regression::{self, Check, Fixture};
use tautilt::subcat::Subcat;
use tautilt::tau_tilt::{
    enumerate_stau_tilt, enumerate_tau_rigid_pairs, support_tau_tilting_report,
};

const GOLDEN_E_DOT: &str = include_str!("golden/e_hasse.dot");

fn extra(mut c: Check, failures: Vec<String>) -> Check {
    if !failures.is_empty() {
        c.passed = false;
        c.detail = format!("{}; {}", c.detail, failures.join("; "));
    }
    c
}

fn criterion_1(fx: &Fixture) -> tautilt::Result<Check> {
    let mut f = Vec::new();
    let proj: Vec<&str> = fx
        .pool
        .projectives()
        .iter()
        .map(|&i| fx.pool.label(i))
        .collect();
    if proj.len() != 3 {
        f.push(format!("projectives {proj:?}"));
    }
    for (i, m) in fx.pool.members().iter().enumerate() {
        if !tautilt::decompose::is_indecomposable(m) {
            f.push(format!("{} decomposes", fx.pool.label(i)));
        }
    }
    Ok(extra(regression::pool_check(fx), f))
}

fn criterion_2(fx: &Fixture) -> tautilt::Result<Check> {
    let pairs = enumerate_tau_rigid_pairs(&fx.e)?;
    let mut f = Vec::new();
    if pairs.len() != 8 {
        f.push(format!("{} pairs", pairs.len()));
    }
    for (p, stt) in &pairs {
        if support_tau_tilting_report(&p.t, &fx.e).is_support_tau_tilting() != *stt {
            f.push(format!("{} verdict disagrees with the report", p.label()));
        }
    }
    Ok(extra(regression::pairs_check(fx)?, f))
}

fn criterion_3(fx: &Fixture) -> tautilt::Result<Check> {
    let dot = hasse_to_dot(&enumerate_stau_tilt(&fx.e)?, "stau_tilt");
    let f = if dot == GOLDEN_E_DOT {
        Vec::new()
    } else {
        vec![format!("DOT output differs from golden file:\n{dot}")]
    };
    Ok(extra(regression::e_hasse_check(fx)?, f))
}

fn criterion_4(fx: &Fixture) -> tautilt::Result<Check> {
    let h = enumerate_stau_tilt(&fx.modules)?;
    let mut f = Vec::new();
    // In a Hasse quiver of a finite lattice every vertex but the top has an
    // arrow in and every vertex but the bottom has an arrow out.
    let n = h.vertices.len();
    for v in 1..n.saturating_sub(1) {
        let inn = h.edges.iter().any(|e| e.1 == v);
        let out = h.edges.iter().any(|e| e.0 == v);
        if !inn || !out {
            f.push(format!("{} is isolated on one side", h.vertices[v].label()));
        }
    }
    Ok(extra(regression::mod_hasse_check(fx)?, f))
}

fn criterion_5(fx: &Fixture) -> tautilt::Result<Check> {
    let t = Subcat::parse(&fx.pool, "1/2+1")?;
    let r = support_tau_tilting_report(&t, &fx.e);
    let mut f = Vec::new();
    if r.is_support_tau_tilting() || !r.tau_rigid() {
        f.push("1/2+1 should be τ-rigid but not support τ-tilting".into());
    }
    match r.reason(&fx.pool) {
        Some(why) if why.contains("2/3") && why.contains("kernel 3") => {}
        other => f.push(format!("reason {other:?}")),
    }
    Ok(extra(regression::condition_a_check(fx)?, f))
}

fn main() -> ExitCode {
    let fx = match regression::fixture() {
        Ok(fx) => fx,
        Err(e) => {
            println!("FAIL fixture: {e}");
            return ExitCode::FAILURE;
        }
    };
    let results: Vec<tautilt::Result<Check>> = vec![
        criterion_1(&fx),
        criterion_2(&fx),
        criterion_3(&fx),
        criterion_4(&fx),
        criterion_5(&fx),
        regression::cotorsion_check(&fx),
        regression::counting_check(&fx),
        regression::tilting_check(&fx),
        regression::brenner_butler_check(&fx),
        regression::property_check(&fx, 50, 0),
    ];
    let mut ok = true;
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(c) => {
                ok &= c.passed;
                println!("{}", c.line());
            }
            Err(e) => {
                ok = false;
                println!("FAIL [{}] error: {e}", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
