//! Command-line front end. [`run`] parses arguments, executes one verb and
//! returns the exit status with the report text.
//!
//! Exit status: 0 when the verdict is true or the command succeeded, 1 when
//! the verdict is false, 2 on usage, parse or data errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::algebra::Algebra;
use crate::brenner_butler::{verify_equivalence, verify_triangle};
use crate::dot::hasse_to_dot;
use crate::error::{Error, Result};
use crate::pool::Pool;
use crate::regression::run_all;
use crate::restriction::restriction_report;
use crate::subcat::Subcat;
use crate::tau_tilt::{
    complete_to_support_tau_tilting, enumerate_stau_tilt, enumerate_tau_cotorsion_pairs,
    rigidity_witness, support_tau_tilting_report, ExactContext,
};

#[derive(Debug, Parser)]
#[command(
    name = "tautilt",
    version,
    about = "τ-tilting theory over quiver algebras, in exact rational arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// Algebra file (`vertices:`, `arrow:`, `relation:` lines).
    pub algebra: PathBuf,
    /// Ambient exact category: `mod` or `fac:SPEC`.
    #[arg(long, default_value = "mod")]
    pub ambient: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the indecomposable modules.
    Indec {
        algebra: PathBuf,
        /// Print each module's structure matrices.
        #[arg(long)]
        dump: bool,
    },
    /// Decide τ-rigidity of `add T`.
    Taurigid {
        #[command(flatten)]
        common: Common,
        t: String,
    },
    /// Decide support τ-tilting with certificates.
    Stautilt {
        #[command(flatten)]
        common: Common,
        t: String,
    },
    /// Complete a τ-rigid `T` satisfying (A) to a support τ-tilting one.
    Complete {
        #[command(flatten)]
        common: Common,
        t: String,
    },
    /// Enumerate the support τ-tilting poset.
    Hasse {
        #[command(flatten)]
        common: Common,
        /// Write the Hasse quiver as a DOT graph.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate τ-cotorsion pairs and match them with support τ-tilting objects.
    Cotorsion {
        #[command(flatten)]
        common: Common,
    },
    /// The restricted category `E_T`, its projectives and the tilting verdict.
    Restrict {
        #[command(flatten)]
        common: Common,
        t: String,
    },
    /// Brenner-Butler checks for `M = Hom(P, T)`.
    Bb {
        #[command(flatten)]
        common: Common,
        t: String,
        /// Projective generator; defaults to the regular module.
        #[arg(long)]
        p: Option<String>,
    },
    /// Run every check on the built-in example.
    CheckAll,
}

/// Exit status and report text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn load_pool(path: &PathBuf) -> Result<Arc<Pool>> {
    let text = std::fs::read_to_string(path)?;
    let alg = Arc::new(Algebra::parse(&text)?);
    Ok(Arc::new(Pool::enumerate(alg)?))
}

fn context(pool: &Arc<Pool>, ambient: &str) -> Result<ExactContext> {
    if ambient == "mod" {
        return Ok(ExactContext::module_category(pool));
    }
    match ambient.strip_prefix("fac:") {
        Some(spec) => ExactContext::of_fac(&Subcat::parse(pool, spec)?),
        None => Err(Error::Parse {
            line: 0,
            message: format!("ambient must be `mod` or `fac:SPEC`, got `{ambient}`"),
        }),
    }
}

fn load(common: &Common) -> Result<(Arc<Pool>, ExactContext)> {
    let pool = load_pool(&common.algebra)?;
    let ctx = context(&pool, &common.ambient)?;
    Ok((pool, ctx))
}

fn header(out: &mut String, ctx: &ExactContext) {
    let _ = writeln!(out, "ambient: {}", ctx.ambient().name());
    let _ = writeln!(out, "projectives: {}", ctx.projectives().name());
    if ctx.is_tainted() {
        let _ = writeln!(out, "warning: the pool may be incomplete");
    }
}

fn execute(cmd: &Command) -> Result<Outcome> {
    let mut out = String::new();
    let status = match cmd {
        Command::Indec { algebra, dump } => {
            let pool = load_pool(algebra)?;
            for (i, m) in pool.members().iter().enumerate() {
                let mut flags = Vec::new();
                if pool.is_projective(i) {
                    flags.push("projective");
                }
                if pool.is_injective(i) {
                    flags.push("injective");
                }
                let _ = writeln!(
                    out,
                    "{}\tdims {:?}\t{}",
                    pool.label(i),
                    m.dims(),
                    flags.join(" ")
                );
                if *dump {
                    out.push_str(&m.dump());
                }
            }
            let _ = writeln!(
                out,
                "{} indecomposables, complete: {}",
                pool.len(),
                pool.is_complete()
            );
            0
        }
        Command::Taurigid { common, t } => {
            let (pool, ctx) = load(common)?;
            let t = Subcat::parse(&pool, t)?;
            header(&mut out, &ctx);
            if !t.is_subset(ctx.ambient()) {
                let _ = writeln!(
                    out,
                    "τ-rigid: NO: {} is not in the ambient category",
                    t.name()
                );
                1
            } else if let Some((a, x)) = rigidity_witness(&t, &ctx) {
                let _ = writeln!(
                    out,
                    "τ-rigid: NO: Ext1({}, {}) != 0 with {} in Fac",
                    pool.label(a),
                    pool.label(x),
                    pool.label(x)
                );
                1
            } else {
                let _ = writeln!(out, "τ-rigid: YES");
                0
            }
        }
        Command::Stautilt { common, t } => {
            let (pool, ctx) = load(common)?;
            let t = Subcat::parse(&pool, t)?;
            header(&mut out, &ctx);
            let r = support_tau_tilting_report(&t, &ctx);
            let verdict = r.is_support_tau_tilting();
            match r.reason(&pool) {
                Some(why) if !verdict => {
                    let _ = writeln!(out, "support τ-tilting: NO: {why}");
                }
                _ => {
                    let _ = writeln!(out, "support τ-tilting: {}", yes_no(verdict));
                }
            }
            let _ = writeln!(out, "Q: {}", r.q.name());
            for c in &r.condition_a.checks {
                let _ = writeln!(
                    out,
                    "  {} -> {}: image {}, kernel {}, cokernel {}, admissible {}",
                    pool.label(c.projective),
                    pool.describe(&c.approximation.object),
                    pool.describe(&c.image),
                    pool.describe(&c.kernel),
                    pool.describe(&c.cokernel),
                    yes_no(c.admissible())
                );
            }
            i32::from(!verdict)
        }
        Command::Complete { common, t } => {
            let (pool, ctx) = load(common)?;
            let t = Subcat::parse(&pool, t)?;
            header(&mut out, &ctx);
            match complete_to_support_tau_tilting(&t, &ctx) {
                Ok(c) => {
                    let _ = writeln!(
                        out,
                        "completion: {} | {}",
                        c.name(),
                        ctx.orthogonal_projectives(&c).name()
                    );
                    0
                }
                Err(Error::PreconditionFailed(why)) => {
                    let _ = writeln!(out, "no completion: {why}");
                    1
                }
                Err(e) => return Err(e),
            }
        }
        Command::Hasse { common, dot } => {
            let (_, ctx) = load(common)?;
            header(&mut out, &ctx);
            let h = enumerate_stau_tilt(&ctx)?;
            for (i, v) in h.vertices.iter().enumerate() {
                let _ = writeln!(out, "n{i}: {}", v.label());
            }
            for &(a, b) in &h.edges {
                let _ = writeln!(out, "n{a} -> n{b}");
            }
            let _ = writeln!(
                out,
                "{} vertices, {} cover edges",
                h.vertices.len(),
                h.edges.len()
            );
            if let Some(path) = dot {
                std::fs::write(path, hasse_to_dot(&h, "stau_tilt"))?;
            }
            0
        }
        Command::Cotorsion { common } => {
            let (_, ctx) = load(common)?;
            header(&mut out, &ctx);
            let en = enumerate_tau_cotorsion_pairs(&ctx)?;
            for (p, full) in en.pairs.iter().zip(&en.full) {
                let _ = writeln!(
                    out,
                    "C = {}, D = {}, C ∩ D = {}{}",
                    p.c.name(),
                    p.d.name(),
                    p.c.intersection(&p.d).name(),
                    if *full { ", cotorsion pair" } else { "" }
                );
            }
            let _ = writeln!(
                out,
                "{} τ-cotorsion pairs, {} support τ-tilting, bijection: {}",
                en.pairs.len(),
                en.stau_tilt.len(),
                yes_no(en.is_bijection())
            );
            i32::from(!en.is_bijection())
        }
        Command::Restrict { common, t } => {
            let (pool, ctx) = load(common)?;
            let t = Subcat::parse(&pool, t)?;
            header(&mut out, &ctx);
            let r = restriction_report(&t, &ctx)?;
            out.push_str(&r.render(&pool));
            i32::from(!r.tilting.holds())
        }
        Command::Bb { common, t, p } => {
            let (pool, ctx) = load(common)?;
            let t = Subcat::parse(&pool, t)?;
            let p = match p {
                Some(spec) => Subcat::parse(&pool, spec)?,
                None => Subcat::new(&pool, pool.projectives()),
            };
            header(&mut out, &ctx);
            let eq = verify_equivalence(&p, &t, &ctx)?;
            for o in &eq.objects {
                let _ = writeln!(
                    out,
                    "{}: counit iso {}, unit iso {}, Tor_1..2 = {:?}",
                    pool.label(o.x),
                    yes_no(o.counit_iso),
                    yes_no(o.unit_iso),
                    o.tor
                );
            }
            let _ = writeln!(
                out,
                "exactness on {} conflations: {}",
                eq.conflations,
                yes_no(eq.exactness_failures.is_empty())
            );
            for fail in &eq.exactness_failures {
                let _ = writeln!(out, "  not exact: {fail}");
            }
            let tri = verify_triangle(&p, &t, &ctx)?;
            let _ = writeln!(
                out,
                "triangle: {} ({} morphisms checked for naturality)",
                yes_no(tri.holds()),
                tri.morphisms_checked
            );
            let ok = eq.holds() && tri.holds();
            let _ = writeln!(out, "equivalence: {}", yes_no(ok));
            i32::from(!ok)
        }
        Command::CheckAll => {
            let checks = run_all()?;
            for c in &checks {
                let _ = writeln!(out, "{}", c.line());
            }
            i32::from(!checks.iter().all(|c| c.passed))
        }
    };
    Ok(Outcome {
        status,
        output: out,
    })
}

/// Parse `args` (including the program name) and run.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                status,
                output: e.to_string(),
            };
        }
    };
    match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => Outcome {
            status: 2,
            output: format!("error: {e}\n"),
        },
    }
}
