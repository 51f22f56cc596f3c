//! Endomorphism rings, Krull-Schmidt decomposition and isomorphism tests.
//!
//! The radical of `End(M)` is the kernel of the trace form
//! `(x, y) -> tr(xy)`, which is exact in characteristic zero. Modules are
//! split along Fitting decompositions `M = ker z^N ⊕ im z^N` for
//! `z = y - λ`, where `y` runs over candidate endomorphisms and `λ` over
//! their rational eigenvalues. This finds every split when the semisimple
//! quotients of the endomorphism rings are products of matrix rings over ℚ.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::hom::{hom_space, HomSpace};
use crate::linalg::{q, Matrix, Q};
use crate::module::{Module, Morphism};

const RANDOM_CANDIDATES: usize = 24;
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

/// `End(M)` with its radical.
pub struct EndRing {
    pub space: HomSpace,
    /// Basis of the radical in coordinates of `space`.
    pub radical: Matrix,
}

impl EndRing {
    pub fn new(m: &Module) -> EndRing {
        let space = hom_space(m, m).expect("same algebra");
        let mats: Vec<Matrix> = space.basis().iter().map(Morphism::total).collect();
        let d = mats.len();
        let gram = Matrix::from_fn(d, d, |i, j| (&mats[i] * &mats[j]).trace());
        EndRing {
            radical: gram.nullspace(),
            space,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn radical_dim(&self) -> usize {
        self.radical.cols()
    }

    /// Local with residue field ℚ.
    pub fn is_split_local(&self) -> bool {
        self.dim() >= 1 && self.dim() - self.radical_dim() == 1
    }
}

/// Outcome of splitting a module into indecomposables.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Indecomposable summands with multiplicities, grouped up to isomorphism.
    pub summands: Vec<(Module, usize)>,
    /// Set when some summand was declared indecomposable without its
    /// endomorphism ring being certified local with residue field ℚ.
    pub uncertified: bool,
}

/// Split `m` into indecomposables, grouped up to isomorphism.
pub fn decompose(m: &Module) -> Vec<(Module, usize)> {
    decompose_certified(m).summands
}

pub fn decompose_certified(m: &Module) -> Decomposition {
    let mut pieces = Vec::new();
    let mut uncertified = false;
    split_rec(m, &mut pieces, &mut uncertified);
    let mut groups: Vec<(Module, usize)> = Vec::new();
    for p in pieces {
        match groups.iter_mut().find(|(g, _)| is_isomorphic(g, &p)) {
            Some(slot) => slot.1 += 1,
            None => groups.push((p, 1)),
        }
    }
    groups.sort_by(|a, b| (a.0.dim(), a.0.dims()).cmp(&(b.0.dim(), b.0.dims())));
    Decomposition {
        summands: groups,
        uncertified,
    }
}

/// Indecomposable summands listed with repetition.
pub fn indecomposable_summands(m: &Module) -> Vec<Module> {
    let mut pieces = Vec::new();
    let mut uncertified = false;
    split_rec(m, &mut pieces, &mut uncertified);
    pieces
}

fn split_rec(m: &Module, out: &mut Vec<Module>, uncertified: &mut bool) {
    if m.is_zero() {
        return;
    }
    let end = EndRing::new(m);
    if end.is_split_local() {
        out.push(m.clone());
        return;
    }
    match split_once(m, &end) {
        Some((a, b)) => {
            split_rec(&a, out, uncertified);
            split_rec(&b, out, uncertified);
        }
        None => {
            *uncertified = true;
            out.push(m.clone());
        }
    }
}

/// Is `m` indecomposable? Certified when the endomorphism ring is local.
pub fn is_indecomposable(m: &Module) -> bool {
    if m.is_zero() {
        return false;
    }
    let end = EndRing::new(m);
    end.is_split_local() || split_once(m, &end).is_none()
}

fn candidates(end: &EndRing) -> Vec<Morphism> {
    let basis = end.space.basis();
    let mut out: Vec<Morphism> = basis.to_vec();
    for x in basis {
        for y in basis {
            out.push(x.then(y));
        }
    }
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            out.push(x.add(y));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..RANDOM_CANDIDATES {
        let coeffs: Vec<Q> = basis.iter().map(|_| q(rng.gen_range(-3..=3))).collect();
        out.push(end.space.combination(&coeffs));
    }
    out
}

fn split_once(m: &Module, end: &EndRing) -> Option<(Module, Module)> {
    let (quot, _) = end.radical.quotient_map();
    let one = end
        .space
        .coordinates(&m.identity())
        .expect("identity is an endomorphism");
    for y in candidates(end) {
        for lambda in residue_eigenvalues(end, &quot, &one, &y) {
            if let Some(split) = fitting_split(m, &y, &lambda) {
                return Some(split);
            }
        }
    }
    None
}

/// Rational roots of the minimal polynomial of `y` modulo the radical.
fn residue_eigenvalues(end: &EndRing, quot: &Matrix, one: &[Q], y: &Morphism) -> Vec<Q> {
    let reduce = |coords: &[Q]| quot.apply(coords);
    let mut powers: Vec<Vec<Q>> = vec![reduce(one)];
    let mut cur = y.clone();
    loop {
        let coords = end
            .space
            .coordinates(&cur)
            .expect("closed under composition");
        let v = reduce(&coords);
        let basis = Matrix::from_columns(quot.rows(), &powers);
        if let Some(sol) = basis.solve(&v) {
            // y^k = Σ sol_i y^i mod rad
            let mut poly: Vec<Q> = sol.iter().map(|c| -c.clone()).collect();
            poly.push(Q::one());
            return rational_roots(&poly);
        }
        powers.push(v);
        cur = cur.then(y);
    }
}

fn fitting_split(m: &Module, y: &Morphism, lambda: &Q) -> Option<(Module, Module)> {
    let n = m.dim() as u32;
    let mut kers = Vec::new();
    let mut ims = Vec::new();
    for (v, block) in y.blocks().iter().enumerate() {
        let d = m.dims()[v];
        let z = block - &Matrix::scalar(d, lambda);
        let zn = z.pow(n);
        kers.push(zn.nullspace());
        ims.push(zn.column_space());
    }
    let kdim: usize = kers.iter().map(Matrix::cols).sum();
    if kdim == 0 || kdim == m.dim() {
        return None;
    }
    let (a, _) = m.submodule(&kers);
    let (b, _) = m.submodule(&ims);
    Some((a, b))
}

/// Rational roots of `Σ c_i x^i`, without repetition.
pub(crate) fn rational_roots(coeffs: &[Q]) -> Vec<Q> {
    let mut c: Vec<Q> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    if c[0].is_zero() {
        roots.push(Q::zero());
        while c.first().is_some_and(Zero::is_zero) {
            c.remove(0);
        }
    }
    if c.len() <= 1 {
        return roots;
    }
    // clear denominators
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|x| (x * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let (a0, an) = (ints[0].abs(), ints[ints.len() - 1].abs());
    let (Some(a0), Some(an)) = (a0.to_u64(), an.to_u64()) else {
        return roots;
    };
    if a0 > DIVISOR_LIMIT || an > DIVISOR_LIMIT {
        return roots;
    }
    let eval = |x: &Q| c.iter().rev().fold(Q::zero(), |acc, k| acc * x + k);
    for p in divisors(a0) {
        for qd in divisors(an) {
            for sign in [1i64, -1] {
                let r = Q::new(BigInt::from(p) * sign, BigInt::from(qd));
                if eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Multiplicity of the indecomposable `x` (with `End(x)/rad = ℚ`) as a
/// summand of `m`: the rank of the pairing `(f, g) -> tr(g∘f) / dim x`.
pub fn multiplicity(x: &Module, m: &Module) -> usize {
    if x.is_zero() || m.is_zero() {
        return 0;
    }
    let into = hom_space(x, m).expect("same algebra");
    let out = hom_space(m, x).expect("same algebra");
    if into.dim() == 0 || out.dim() == 0 {
        return 0;
    }
    let pairing = Matrix::from_fn(into.dim(), out.dim(), |i, j| {
        into.basis()[i].then(&out.basis()[j]).total().trace()
    });
    pairing.rank()
}

pub fn is_isomorphic(m: &Module, n: &Module) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let h = match hom_space(m, n) {
        Ok(h) => h,
        Err(_) => return false,
    };
    if h.dim() == 0 {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..3 {
        let coeffs: Vec<Q> = (0..h.dim()).map(|_| q(rng.gen_range(-9..=9))).collect();
        if h.combination(&coeffs).is_isomorphism() {
            return true;
        }
    }
    // exhaustive fallback: compare multiplicities of every summand of m
    let parts = indecomposable_summands(m);
    let mut seen: Vec<Module> = Vec::new();
    for p in &parts {
        if seen
            .iter()
            .any(|s| s.dims() == p.dims() && multiplicity(s, p) == 1)
        {
            continue;
        }
        if multiplicity(p, m) != multiplicity(p, n) {
            return false;
        }
        seen.push(p.clone());
    }
    let covered: usize = seen.iter().map(|s| multiplicity(s, n) * s.dim()).sum();
    covered == n.dim()
}

/// The endomorphism algebra of `T_1 ⊕ ... ⊕ T_r` for pairwise
/// non-isomorphic indecomposables with residue field ℚ.
///
/// Basis: the identities of the `T_k` (the vertex idempotents), then for
/// every pair a basis of `Hom(T_l, T_k)` (radical part on the diagonal).
/// The product is composition, `x * y = x ∘ y`, so a map `T_l -> T_k` has
/// source vertex `k` and target vertex `l`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Arc<Algebra>,
    pub summands: Vec<Module>,
    /// `(k, l, f)` with `f: T_l -> T_k`, aligned with the algebra basis.
    pub elements: Vec<(usize, usize, Morphism)>,
}

impl EndAlgebra {
    /// Coordinates of a map `T_l -> T_k` in the algebra basis.
    pub fn coordinates(&self, k: usize, l: usize, f: &Morphism) -> Vec<Q> {
        element_coordinates(&self.elements, k, l, f)
    }
}

fn element_coordinates(
    elements: &[(usize, usize, Morphism)],
    k: usize,
    l: usize,
    f: &Morphism,
) -> Vec<Q> {
    let idx: Vec<usize> = (0..elements.len())
        .filter(|&i| elements[i].0 == k && elements[i].1 == l)
        .collect();
    let cols: Vec<Vec<Q>> = idx.iter().map(|&i| elements[i].2.flatten()).collect();
    let flat = f.flatten();
    let m = Matrix::from_columns(flat.len(), &cols);
    let sol = m.solve(&flat).expect("map lies in the hom space");
    let mut out = vec![Q::zero(); elements.len()];
    for (i, c) in idx.iter().zip(sol) {
        out[*i] = c;
    }
    out
}

pub fn end_algebra(summands: &[Module], labels: Vec<String>) -> Result<EndAlgebra> {
    let r = summands.len();
    for (i, a) in summands.iter().enumerate() {
        if !EndRing::new(a).is_split_local() {
            return Err(Error::PreconditionFailed(format!(
                "summand {} is not indecomposable with residue field ℚ",
                i + 1
            )));
        }
        for b in &summands[..i] {
            if is_isomorphic(a, b) {
                return Err(Error::PreconditionFailed(
                    "summands must be pairwise non-isomorphic".into(),
                ));
            }
        }
    }
    let mut elements: Vec<(usize, usize, Morphism)> = Vec::new();
    for (k, t) in summands.iter().enumerate() {
        elements.push((k, k, t.identity()));
    }
    for k in 0..r {
        for l in 0..r {
            let h = hom_space(&summands[l], &summands[k])?;
            if k == l {
                // trace-zero endomorphisms span the radical
                let traces: Vec<Q> = h.basis().iter().map(|f| f.total().trace()).collect();
                let row = Matrix::from_rows(1, traces.len(), vec![traces]);
                for v in row.nullspace().columns() {
                    elements.push((k, l, h.combination(&v)));
                }
            } else {
                for f in h.basis() {
                    elements.push((k, l, f.clone()));
                }
            }
        }
    }
    let d = elements.len();
    let mut products = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let (ki, li, ref fi) = elements[i];
            let (kj, lj, ref fj) = elements[j];
            if li != kj {
                continue;
            }
            // x * y = x ∘ y : T_lj -> T_ki
            let comp = fj.then(fi);
            let coords = element_coordinates(&elements, ki, lj, &comp);
            products[i][j] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
    }
    let element_labels: Vec<(String, usize, usize)> = elements
        .iter()
        .enumerate()
        .map(|(i, (k, l, _))| {
            if i < r {
                (format!("e{}", k + 1), *k, *l)
            } else {
                (format!("x{}_{}_{}", k + 1, l + 1, i), *k, *l)
            }
        })
        .collect();
    Ok(EndAlgebra {
        algebra: Arc::new(Algebra::from_structure_constants(
            labels,
            element_labels,
            products,
        )?),
        summands: summands.to_vec(),
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;

    fn lambda() -> Arc<Algebra> {
        Arc::new(
            Algebra::parse("vertices: 3\narrow: a 1 2\narrow: b 2 3\nrelation: a*b\n").unwrap(),
        )
    }

    #[test]
    fn roots() {
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let r = rational_roots(&[q(0), q_frac(-3, 2), q_frac(5, 2), q(1)]);
        assert_eq!(r.len(), 3);
        assert!(r.contains(&q_frac(1, 2)) && r.contains(&q(-3)) && r.contains(&q(0)));
        assert!(rational_roots(&[q(-2), q(0), q(1)]).is_empty());
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        let alg = lambda();
        let reg = Module::regular(alg.clone());
        let parts = decompose(&reg);
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|(_, k)| *k == 1));
        for v in 0..3 {
            let p = Module::projective(alg.clone(), v).unwrap();
            assert!(parts.iter().any(|(x, _)| is_isomorphic(x, &p)));
        }
    }

    #[test]
    fn repeated_summands_are_counted() {
        let alg = lambda();
        let p1 = Module::projective(alg.clone(), 0).unwrap();
        let s2 = Module::simple(alg.clone(), 1).unwrap();
        let m = Module::direct_sum(&alg, &[p1.clone(), s2.clone(), p1.clone(), p1.clone()]).0;
        let parts = decompose(&m);
        assert_eq!(parts.len(), 2);
        assert_eq!(multiplicity(&p1, &m), 3);
        assert_eq!(multiplicity(&s2, &m), 1);
        let total: usize = parts.iter().map(|(x, k)| x.dim() * k).sum();
        assert_eq!(total, m.dim());
    }

    #[test]
    fn end_algebra_of_regular_module_has_dimension_five() {
        let alg = lambda();
        let ps: Vec<Module> = (0..3)
            .map(|v| Module::projective(alg.clone(), v).unwrap())
            .collect();
        let e = end_algebra(&ps, vec!["1".into(), "2".into(), "3".into()]).unwrap();
        assert_eq!(e.algebra.dim(), 5);
        assert!(e.algebra.is_associative());
    }

    #[test]
    fn isomorphism_detects_distinct_modules() {
        let alg = lambda();
        let s2 = Module::simple(alg.clone(), 1).unwrap();
        let s3 = Module::simple(alg.clone(), 2).unwrap();
        assert!(!is_isomorphic(&s2, &s3));
        let p1 = Module::projective(alg.clone(), 0).unwrap();
        let i2 = Module::injective(alg.clone(), 1).unwrap();
        assert!(is_isomorphic(&p1, &i2));
        assert!(is_isomorphic(&p1, &p1.sum(&Module::zero(alg))));
    }
}
