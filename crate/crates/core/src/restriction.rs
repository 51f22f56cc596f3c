//! The ideal `I` of morphisms between projectives killed by `Hom(-, T)`,
//! the restricted exact category `E_T` with its projectives `P_T`, the
//! functor `ρ`, tilting verification and the counting results.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::decompose::indecomposable_summands;
use crate::error::{Error, Result};
use crate::hom::hom_space;
use crate::linalg::{q, Matrix, Q};
use crate::module::{Module, Morphism};
use crate::pool::Pool;
use crate::subcat::{
    fac_members, is_extension_closed, left_approximation, right_approximation, sub_members, Subcat,
};
use crate::tau_tilt::{is_support_tau_tilting, ExactContext};

/// `I(Q, Q')` for every ordered pair of context projectives.
#[derive(Clone, Debug)]
pub struct MorphismIdeal {
    pub projectives: Vec<usize>,
    /// `basis[i][j]` spans `I(Q_i, Q_j)` inside `Hom(Q_i, Q_j)`.
    pub basis: Vec<Vec<Vec<Morphism>>>,
}

impl MorphismIdeal {
    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.basis[i][j].len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.iter().flatten().all(Vec::is_empty)
    }

    /// Is `f: Q_i -> Q_j` in the ideal?
    pub fn contains(&self, i: usize, j: usize, f: &Morphism) -> bool {
        let mut cols: Vec<Vec<Q>> = self.basis[i][j].iter().map(Morphism::flatten).collect();
        let before = crate::linalg::rank_of(&cols, f.flatten().len());
        cols.push(f.flatten());
        crate::linalg::rank_of(&cols, f.flatten().len()) == before
    }

    /// Two-sided ideal property on basis elements: `g ∘ f ∘ h ∈ I` for
    /// hom-basis elements `h` into `Q_i` and `g` out of `Q_j`.
    pub fn is_two_sided(&self, pool: &Pool) -> bool {
        let n = self.projectives.len();
        for i in 0..n {
            for j in 0..n {
                for f in &self.basis[i][j] {
                    for k in 0..n {
                        for h in pool.hom(self.projectives[k], self.projectives[i]).basis() {
                            if !self.contains(k, j, &h.then(f)) {
                                return false;
                            }
                        }
                        for g in pool.hom(self.projectives[j], self.projectives[k]).basis() {
                            if !self.contains(i, k, &f.then(g)) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// Morphisms `f: Q -> Q'` between context projectives with `g ∘ f = 0`
/// for every `g: Q' -> t`, `t ∈ T`.
pub fn ideal_of(t: &Subcat, ctx: &ExactContext) -> MorphismIdeal {
    let pool = ctx.pool();
    let projectives = ctx.projectives().members().to_vec();
    let basis = projectives
        .iter()
        .map(|&a| {
            projectives
                .iter()
                .map(|&b| {
                    let hom = pool.hom(a, b);
                    let mut rows: Vec<Vec<Q>> = vec![Vec::new(); hom.dim()];
                    for &x in t.members() {
                        for g in pool.hom(b, x).basis() {
                            for (k, f) in hom.basis().iter().enumerate() {
                                rows[k].extend(f.then(g).flatten());
                            }
                        }
                    }
                    let len = rows.first().map_or(0, Vec::len);
                    // columns index hom-basis elements
                    let m = Matrix::from_columns(len, &rows);
                    m.nullspace()
                        .columns()
                        .iter()
                        .map(|c| hom.combination(c))
                        .collect()
                })
                .collect()
        })
        .collect();
    MorphismIdeal { projectives, basis }
}

fn kills(ideal: &MorphismIdeal, pool: &Pool, x: usize) -> bool {
    (0..ideal.projectives.len()).all(|i| {
        (0..ideal.projectives.len()).all(|j| {
            ideal.basis[i][j].iter().all(|f| {
                pool.hom(ideal.projectives[j], x)
                    .basis()
                    .iter()
                    .all(|h| f.then(h).is_zero())
            })
        })
    })
}

/// `E_T`: ambient members `X` with `h ∘ f = 0` for all `f ∈ I` and all
/// `h: Q' -> X`.
pub fn restricted_category(t: &Subcat, ctx: &ExactContext) -> Subcat {
    let ideal = ideal_of(t, ctx);
    let pool = ctx.pool();
    Subcat::new(
        pool,
        ctx.ambient()
            .members()
            .iter()
            .copied()
            .filter(|&x| kills(&ideal, pool, x)),
    )
}

/// Basis of the two-sided ideal `ann T = {a | T·a = 0}` of the algebra.
pub fn annihilator(t: &Subcat) -> Vec<Vec<Q>> {
    let alg = t.pool().algebra();
    let module = t.module();
    let n = alg.dim();
    let cols: Vec<Vec<Q>> = (0..n)
        .map(|b| {
            let mut x = vec![q(0); n];
            x[b] = q(1);
            module.element_action(&x).to_vec()
        })
        .collect();
    let len = module.dim() * module.dim();
    Matrix::from_columns(len, &cols).nullspace().columns()
}

/// Pool members annihilated by `ann T` (the module category of `Λ/ann T`).
pub fn annihilator_category(t: &Subcat) -> Subcat {
    let pool = t.pool();
    let ann = annihilator(t);
    Subcat::new(
        pool,
        (0..pool.len()).filter(|&i| {
            ann.iter()
                .all(|a| pool.member(i).element_action(a).is_zero())
        }),
    )
}

/// Indecomposable summands of `Λ/ann T` as a right module.
pub fn annihilator_projectives(t: &Subcat) -> Result<Subcat> {
    let pool = t.pool();
    let alg = pool.algebra();
    let ann = annihilator(t);
    let mut found = Vec::new();
    for v in 0..alg.vertex_count() {
        let p = Module::projective(alg.clone(), v)?;
        let spaces: Vec<Matrix> = (0..alg.vertex_count())
            .map(|w| {
                let between = alg.basis_between(v, w);
                let cols: Vec<Vec<Q>> = ann
                    .iter()
                    .map(|a| between.iter().map(|&b| a[b].clone()).collect())
                    .collect();
                Matrix::from_columns(between.len(), &cols)
            })
            .collect();
        let (quo, _) = p.quotient(&spaces);
        for piece in indecomposable_summands(&quo) {
            found.push(pool.find(&piece).ok_or_else(|| {
                Error::IncompletePool(format!(
                    "summand {} of Λ/ann T is not in the pool",
                    piece.layer_label()
                ))
            })?);
        }
    }
    Ok(Subcat::new(pool, found))
}

/// One row of the ρ table: projective `Q`, the epi `Q -> K(Q)` onto the
/// image of its minimal left `T`-approximation.
#[derive(Clone, Debug)]
pub struct RhoEntry {
    pub projective: usize,
    pub image: Module,
    pub epi: Morphism,
    /// Pool indices of the indecomposable summands of `K(Q)`.
    pub summands: Vec<usize>,
}

/// Every member of `E_T` receives a deflation from `add P_T` with kernel in `E_T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnoughProjectives {
    pub holds: bool,
    pub witness: Option<usize>,
}

pub fn restricted_projectives(t: &Subcat, ctx: &ExactContext) -> Result<(Subcat, Vec<RhoEntry>)> {
    let pool = ctx.pool();
    let report = crate::tau_tilt::check_condition_a(t, ctx);
    if !report.holds() {
        return Err(Error::PreconditionFailed(
            report.describe_failure(pool).unwrap_or_default(),
        ));
    }
    let mut table = Vec::new();
    let mut all = Vec::new();
    for &q in ctx.projectives().members() {
        let a = left_approximation(pool.member(q), t);
        let (image, _, epi) = a.map.image();
        let summands: Vec<usize> = pool.locate(&image)?.into_iter().map(|(i, _)| i).collect();
        all.extend(summands.iter().copied());
        table.push(RhoEntry {
            projective: q,
            image,
            epi,
            summands,
        });
    }
    Ok((Subcat::new(pool, all), table))
}

pub fn enough_projectives(e_t: &Subcat, p_t: &Subcat) -> EnoughProjectives {
    let pool = e_t.pool();
    let witness = e_t.members().iter().copied().find(|&x| {
        let a = right_approximation(pool.member(x), p_t);
        !(a.map.is_surjective() && e_t.contains_module(&a.kernel()))
    });
    EnoughProjectives {
        holds: witness.is_none(),
        witness,
    }
}

/// `ρ(a)`: the unique `K(Q) -> K(Q')` with `ρ(a) ∘ j = j' ∘ a`.
pub fn rho(a: &Morphism, from: &RhoEntry, to: &RhoEntry) -> Option<Morphism> {
    a.then(&to.epi).factor_through_epi(&from.epi)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoCheck {
    /// `dim Hom(Q, Q') − dim I(Q, Q') = dim Hom(K(Q), K(Q'))` on every pair.
    pub dimensions: bool,
    /// `ρ` is defined on every hom-basis element and kills exactly `I`.
    pub well_defined: bool,
    /// `ρ(b ∘ a) = ρ(b) ∘ ρ(a)` on basis pairs.
    pub functorial: bool,
    /// `ρ` is surjective on every hom space.
    pub full: bool,
}

impl RhoCheck {
    pub fn holds(&self) -> bool {
        self.dimensions && self.well_defined && self.functorial && self.full
    }
}

pub fn rho_equivalence_check(t: &Subcat, ctx: &ExactContext) -> Result<RhoCheck> {
    let pool = ctx.pool();
    let ideal = ideal_of(t, ctx);
    let (_, table) = restricted_projectives(t, ctx)?;
    let n = table.len();
    let mut check = RhoCheck {
        dimensions: true,
        well_defined: true,
        functorial: true,
        full: true,
    };
    for i in 0..n {
        for j in 0..n {
            let hom = pool.hom(table[i].projective, table[j].projective);
            let target = hom_space(&table[i].image, &table[j].image)?;
            if hom.dim() - ideal.dim(i, j) != target.dim() {
                check.dimensions = false;
            }
            let mut images = Vec::new();
            for a in hom.basis() {
                match rho(a, &table[i], &table[j]) {
                    Some(r) => images.push(r.flatten()),
                    None => check.well_defined = false,
                }
            }
            if ideal.basis[i][j]
                .iter()
                .any(|f| !rho(f, &table[i], &table[j]).is_some_and(|r| r.is_zero()))
            {
                check.well_defined = false;
            }
            let len = images.first().map_or(0, Vec::len);
            if crate::linalg::rank_of(&images, len) != target.dim() {
                check.full = false;
            }
            for k in 0..n {
                for a in hom.basis() {
                    for b in pool.hom(table[j].projective, table[k].projective).basis() {
                        let lhs = rho(&a.then(b), &table[i], &table[k]);
                        let rhs = rho(a, &table[i], &table[j]).zip(rho(b, &table[j], &table[k]));
                        match (lhs, rhs) {
                            (Some(l), Some((ra, rb))) if l.flatten() == ra.then(&rb).flatten() => {}
                            _ => check.functorial = false,
                        }
                    }
                }
            }
        }
    }
    Ok(check)
}

/// `E_T` with projectives `P_T`.
pub fn restricted_context(t: &Subcat, ctx: &ExactContext) -> Result<ExactContext> {
    let e_t = restricted_category(t, ctx);
    let (p_t, _) = restricted_projectives(t, ctx)?;
    Ok(ExactContext::with_projectives(e_t, p_t))
}

/// Closure properties of a subcategory relative to the ambient category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closures {
    pub factors: bool,
    pub subobjects: bool,
    pub extensions: bool,
}

pub fn closures(c: &Subcat, ctx: &ExactContext) -> Closures {
    Closures {
        factors: fac_members(c).intersection(ctx.ambient()) == *c,
        subobjects: sub_members(c).intersection(ctx.ambient()) == *c,
        extensions: is_extension_closed(c).0.holds(),
    }
}

/// Result of the three-leg tilting test; each failed leg keeps a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingVerdict {
    pub contained: bool,
    /// `(t, t')` with `Ext¹(t, t') ≠ 0`.
    pub self_orthogonality: Option<(usize, usize)>,
    /// A generator whose relative syzygy is not in `add P`.
    pub projective_dimension: Option<usize>,
    /// A projective with no conflation `K ↣ T⁰ ↠ T¹` in `add T`.
    pub coresolution: Option<usize>,
}

impl TiltingVerdict {
    pub fn holds(&self) -> bool {
        self.contained
            && self.self_orthogonality.is_none()
            && self.projective_dimension.is_none()
            && self.coresolution.is_none()
    }
}

/// Is `T` a (1-)tilting subcategory of the context?
pub fn verify_tilting(t: &Subcat, ctx: &ExactContext) -> TiltingVerdict {
    let pool = ctx.pool();
    let p = ctx.projectives();
    let mut self_orthogonality = None;
    'outer: for &a in t.members() {
        for &b in t.members() {
            if pool.ext_dim(a, b) != 0 {
                self_orthogonality = Some((a, b));
                break 'outer;
            }
        }
    }
    let projective_dimension = t.members().iter().copied().find(|&x| {
        let a = right_approximation(pool.member(x), p);
        !(a.map.is_surjective() && p.contains_module(&a.kernel()))
    });
    let coresolution = p.members().iter().copied().find(|&k| {
        let a = left_approximation(pool.member(k), t);
        !(a.map.is_injective() && t.contains_module(&a.cokernel()))
    });
    TiltingVerdict {
        contained: t.is_subset(ctx.ambient()),
        self_orthogonality,
        projective_dimension,
        coresolution,
    }
}

/// Everything computed for one `T`.
#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub t: Subcat,
    pub ideal: MorphismIdeal,
    pub e_t: Subcat,
    pub p_t: Subcat,
    pub rho_table: Vec<RhoEntry>,
    pub rho: RhoCheck,
    pub enough_projectives: EnoughProjectives,
    pub closures: Closures,
    pub tilting: TiltingVerdict,
    pub counting: (usize, usize),
    /// Agreement with the annihilator description (module category only).
    pub annihilator_agrees: Option<bool>,
}

pub fn restriction_report(t: &Subcat, ctx: &ExactContext) -> Result<RestrictionReport> {
    let ideal = ideal_of(t, ctx);
    let e_t = restricted_category(t, ctx);
    let (p_t, rho_table) = restricted_projectives(t, ctx)?;
    let rho = rho_equivalence_check(t, ctx)?;
    let inner = ExactContext::with_projectives(e_t.clone(), p_t.clone());
    let annihilator_agrees = if *ctx.ambient() == Subcat::whole(ctx.pool()) {
        Some(annihilator_category(t) == e_t && annihilator_projectives(t)? == p_t)
    } else {
        None
    };
    Ok(RestrictionReport {
        enough_projectives: enough_projectives(&e_t, &p_t),
        closures: closures(&e_t, ctx),
        tilting: verify_tilting(t, &inner),
        counting: counting_theorem(t, ctx),
        t: t.clone(),
        ideal,
        e_t,
        p_t,
        rho_table,
        rho,
        annihilator_agrees,
    })
}

impl RestrictionReport {
    /// Structured plain-text rendering.
    pub fn render(&self, pool: &Arc<Pool>) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        let _ = writeln!(s, "T: {}", self.t.name());
        let _ = writeln!(s, "E_T: {}", self.e_t.name());
        let _ = writeln!(s, "P_T: {}", self.p_t.name());
        let _ = writeln!(s, "rho:");
        for r in &self.rho_table {
            let _ = writeln!(
                s,
                "  {} -> {}",
                pool.label(r.projective),
                pool.describe(&r.image)
            );
        }
        let _ = writeln!(
            s,
            "rho equivalence: {} (dimensions {}, defined {}, functorial {}, full {})",
            yes(self.rho.holds()),
            yes(self.rho.dimensions),
            yes(self.rho.well_defined),
            yes(self.rho.functorial),
            yes(self.rho.full)
        );
        let _ = writeln!(
            s,
            "enough projectives: {}",
            yes(self.enough_projectives.holds)
        );
        if let Some(a) = self.annihilator_agrees {
            let _ = writeln!(s, "annihilator description agrees: {}", yes(a));
        }
        let _ = writeln!(s, "tilting in E_T: {}", yes(self.tilting.holds()));
        if let Some((a, b)) = self.tilting.self_orthogonality {
            let _ = writeln!(s, "  Ext1({}, {}) != 0", pool.label(a), pool.label(b));
        }
        if let Some(x) = self.tilting.projective_dimension {
            let _ = writeln!(s, "  syzygy of {} is not projective", pool.label(x));
        }
        if let Some(k) = self.tilting.coresolution {
            let _ = writeln!(s, "  {} has no coresolution by add T", pool.label(k));
        }
        let _ = writeln!(
            s,
            "|T| = {}, projectives not orthogonal to T = {}",
            self.counting.0, self.counting.1
        );
        s
    }
}

/// `(|T|, #{Q projective | Hom(Q, T) ≠ 0})`.
pub fn counting_theorem(t: &Subcat, ctx: &ExactContext) -> (usize, usize) {
    let orthogonal = ctx.orthogonal_projectives(t).len();
    (t.len(), ctx.projectives().len() - orthogonal)
}

/// `(|T| + |Q|, |P|, equality)` with `Q` the projectives orthogonal to `T`.
pub fn rigid_pair_inequality(t: &Subcat, ctx: &ExactContext) -> (usize, usize, bool) {
    let lhs = t.len() + ctx.orthogonal_projectives(t).len();
    let rhs = ctx.projectives().len();
    (lhs, rhs, lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCheck {
    /// `T'` is support τ-tilting in `Fac T` with projectives `add T`.
    pub reduced_support_tau_tilting: bool,
    /// Summands of `T` with no maps to `T'`.
    pub complement: Subcat,
    pub identity_holds: bool,
}

/// For `T' ≤ T`, check `|T'| + |T̃| = |T|` with `T̃ ⊆ T` the summands
/// `Hom`-orthogonal to `T'`.
pub fn successive_reduction_check(
    t: &Subcat,
    t2: &Subcat,
    ctx: &ExactContext,
) -> Result<ReductionCheck> {
    let pool = ctx.pool();
    if !is_support_tau_tilting(t, ctx) || !is_support_tau_tilting(t2, ctx) {
        return Err(Error::HypothesisFailed(
            "both arguments must be support τ-tilting".into(),
        ));
    }
    let fac = ctx.fac(t);
    if !ctx.fac(t2).is_subset(&fac) {
        return Err(Error::HypothesisFailed(format!(
            "{} is not below {}",
            t2.name(),
            t.name()
        )));
    }
    for &x in t.members() {
        let k = left_approximation(pool.member(x), t2).kernel();
        if !fac.contains_module(&k) {
            return Err(Error::HypothesisFailed(format!(
                "the kernel {} of the left add {}-approximation of {} is not in Fac {}",
                pool.describe(&k),
                t2.name(),
                pool.label(x),
                t.name()
            )));
        }
    }
    let inner = ExactContext::with_projectives(fac, t.clone());
    let reduced = is_support_tau_tilting(t2, &inner);
    let complement = Subcat::new(
        pool,
        t.members()
            .iter()
            .copied()
            .filter(|&a| t2.members().iter().all(|&b| pool.hom_dim(a, b) == 0)),
    );
    Ok(ReductionCheck {
        reduced_support_tau_tilting: reduced,
        identity_holds: t2.len() + complement.len() == t.len(),
        complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::tau_tilt::enumerate_stau_tilt;

    fn setup() -> (Arc<Pool>, ExactContext, ExactContext) {
        let alg = Arc::new(
            Algebra::parse("vertices: 3\narrow: a 1 2\narrow: b 2 3\nrelation: a*b\n").unwrap(),
        );
        let pool = Arc::new(Pool::enumerate(alg).unwrap());
        let m = ExactContext::module_category(&pool);
        let e = ExactContext::of_fac(&Subcat::parse(&pool, "2+2/3+1/2").unwrap()).unwrap();
        (pool, m, e)
    }

    #[test]
    fn ideal_extremes() {
        let (p, m, _) = setup();
        let t = Subcat::parse(&p, "2+2/3+1/2").unwrap();
        let i = ideal_of(&t, &m);
        assert!(i.is_zero());
        let all = ideal_of(&Subcat::empty(&p), &m);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(
                    all.dim(a, b),
                    p.hom_dim(all.projectives[a], all.projectives[b])
                );
            }
        }
        assert!(ideal_of(&Subcat::parse(&p, "1").unwrap(), &m).is_two_sided(&p));
    }

    #[test]
    fn restriction_to_a_simple() {
        let (p, m, _) = setup();
        let t = Subcat::parse(&p, "1").unwrap();
        let e_t = restricted_category(&t, &m);
        assert_eq!(e_t, annihilator_category(&t));
        assert!(e_t.contains(p.index_of_label("1").unwrap()));
        assert!(!e_t.contains(p.index_of_label("2/3").unwrap()));
        assert!(restricted_category(&Subcat::empty(&p), &m).is_empty());
    }

    #[test]
    fn tilting_module_restricts_to_everything() {
        let (p, m, _) = setup();
        let t = Subcat::parse(&p, "2+2/3+1/2").unwrap();
        let r = restriction_report(&t, &m).unwrap();
        assert_eq!(r.e_t, Subcat::whole(&p));
        assert_eq!(r.p_t.name(), "3+2/3+1/2");
        assert_eq!(r.annihilator_agrees, Some(true));
        assert!(r.rho.holds());
        assert!(r.tilting.holds());
        assert_eq!(r.counting, (3, 3));
    }

    #[test]
    fn every_support_tau_tilting_object_is_tilting_after_restriction() {
        let (_, m, e) = setup();
        for ctx in [&m, &e] {
            for v in enumerate_stau_tilt(ctx).unwrap().vertices {
                let r = restriction_report(&v.t, ctx).unwrap();
                assert!(r.tilting.holds(), "{}", v.t.name());
                assert!(r.rho.holds(), "{}", v.t.name());
                assert!(r.enough_projectives.holds, "{}", v.t.name());
                assert_ne!(r.annihilator_agrees, Some(false), "{}", v.t.name());
                assert_eq!(r.counting.0, r.counting.1);
            }
        }
    }

    #[test]
    fn counting_in_e() {
        let (p, _, e) = setup();
        let t = Subcat::parse(&p, "1+2/3").unwrap();
        assert_eq!(counting_theorem(&t, &e), (2, 2));
        assert_eq!(rigid_pair_inequality(&t, &e), (3, 3, true));
        assert_eq!(
            rigid_pair_inequality(&Subcat::parse(&p, "2/3+1/2").unwrap(), &e),
            (2, 3, false)
        );
    }

    #[test]
    fn reduction_along_an_edge() {
        let (p, m, _) = setup();
        let t = Subcat::parse(&p, "2+2/3+1/2").unwrap();
        let same = successive_reduction_check(&t, &t, &m).unwrap();
        assert!(same.identity_holds && same.complement.is_empty());
        match successive_reduction_check(&t, &Subcat::parse(&p, "2+2/3").unwrap(), &m) {
            Ok(r) => assert!(r.identity_holds && r.reduced_support_tau_tilting),
            Err(Error::HypothesisFailed(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}
