//! Projective covers, syzygies, Ext¹ with realizing sequences, the
//! Nakayama functor and the Auslander-Reiten translate.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::hom::hom_space;
use crate::linalg::{Matrix, Q};
use crate::module::{generator_element, same_algebra, Module, Morphism};

/// The map `P(v) -> target` sending the idempotent `e_v` to `vector`, a
/// vector in the vertex-`v` space of `target`.
pub fn map_from_projective(p: &Module, v: usize, target: &Module, vector: &[Q]) -> Morphism {
    let alg = target.algebra();
    let m = Matrix::from_columns(target.dims()[v], &[vector.to_vec()]);
    let blocks = (0..alg.vertex_count())
        .map(|w| {
            let cols: Vec<Vec<Q>> = alg
                .basis_between(v, w)
                .iter()
                .map(|&b| (&target.action(b) * &m).column(0))
                .collect();
            Matrix::from_columns(target.dims()[w], &cols)
        })
        .collect();
    Morphism::from_blocks(p.clone(), target.clone(), blocks)
}

/// A projective cover `⊕ P(v_k) -> M`, with the generator of each summand.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub projective: Module,
    pub epi: Morphism,
    /// Vertex of each indecomposable summand, in order.
    pub vertices: Vec<usize>,
    /// Image of the idempotent of each summand, a vector at its vertex.
    pub generators: Vec<Vec<Q>>,
    /// Inclusion of each summand.
    pub inclusions: Vec<Morphism>,
}

pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let alg = m.algebra().clone();
    let rad = m.radical_spaces();
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let (_, section) = r.quotient_map();
        for c in section.columns() {
            vertices.push(v);
            generators.push(c);
        }
    }
    let parts: Vec<Module> = vertices
        .iter()
        .map(|&v| Module::projective(alg.clone(), v).expect("vertex in range"))
        .collect();
    let (p, inclusions, _) = Module::direct_sum(&alg, &parts);
    let comps: Vec<Morphism> = parts
        .iter()
        .zip(&vertices)
        .zip(&generators)
        .map(|((pp, &v), g)| map_from_projective(pp, v, m, g))
        .collect();
    let epi = Morphism::from_columns(&p, &comps, m);
    ProjectiveCover {
        projective: p,
        epi,
        vertices,
        generators,
        inclusions,
    }
}

/// `ΩM` with its inclusion into the projective cover.
pub fn syzygy(m: &Module) -> (Module, Morphism, ProjectiveCover) {
    let cover = projective_cover(m);
    let (k, incl) = cover.epi.kernel();
    (k, incl, cover)
}

/// `P1 -> P0 -> M -> 0` with `P0`, `P1` projective covers of `M`, `ΩM`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: ProjectiveCover,
    pub p1: ProjectiveCover,
    /// `P1 -> P0`.
    pub map: Morphism,
    /// `elements[a][b]` lies in `e_{i_a} A e_{j_b}` where `i_a`, `j_b` are the
    /// vertices of the `a`-th summand of `P0` and `b`-th summand of `P1`;
    /// coordinates over `basis_between(i_a, j_b)`.
    pub elements: Vec<Vec<Vec<Q>>>,
}

pub fn minimal_presentation(m: &Module) -> Presentation {
    let (omega, incl, p0) = syzygy(m);
    let p1 = projective_cover(&omega);
    let map = p1.epi.then(&incl);
    let alg = m.algebra();
    let mut elements = vec![vec![Vec::new(); p1.vertices.len()]; p0.vertices.len()];
    for (b, (&j, g)) in p1.vertices.iter().zip(&p1.generators).enumerate() {
        let image = incl.block(j).apply(g);
        let mut pos = 0;
        for (a, &i) in p0.vertices.iter().enumerate() {
            let len = alg.basis_between(i, j).len();
            elements[a][b] = image[pos..pos + len].to_vec();
            pos += len;
        }
    }
    Presentation {
        p0,
        p1,
        map,
        elements,
    }
}

/// `Tr M = coker(P0* -> P1*)`, a module over `opposite`.
pub fn transpose(m: &Module, opposite: &Arc<Algebra>) -> Module {
    if m.is_zero() {
        return Module::zero(opposite.clone());
    }
    let pres = minimal_presentation(m);
    let op = opposite;
    let src_parts: Vec<Module> = pres
        .p0
        .vertices
        .iter()
        .map(|&i| Module::projective(op.clone(), i).expect("vertex in range"))
        .collect();
    let tgt_parts: Vec<Module> = pres
        .p1
        .vertices
        .iter()
        .map(|&j| Module::projective(op.clone(), j).expect("vertex in range"))
        .collect();
    let (src, _, _) = Module::direct_sum(op, &src_parts);
    let (tgt, _, _) = Module::direct_sum(op, &tgt_parts);
    let comps: Vec<Morphism> = pres
        .p0
        .vertices
        .iter()
        .enumerate()
        .map(|(a, &i)| {
            // generator of P_op(i) goes to (f_ab)_b inside the vertex-i space
            let vector: Vec<Q> = pres.elements[a].iter().flatten().cloned().collect();
            debug_assert_eq!(vector.len(), tgt.dims()[i]);
            map_from_projective(&src_parts[a], i, &tgt, &vector)
        })
        .collect();
    let dual_map = Morphism::from_columns(&src, &comps, &tgt);
    dual_map.cokernel().0
}

/// `τM = D Tr M`.
pub fn tau(m: &Module) -> Module {
    let op = Arc::new(m.algebra().opposite());
    transpose(m, &op).dual_over(m.algebra().clone())
}

/// `τ⁻¹M = Tr D M`.
pub fn tau_inverse(m: &Module) -> Module {
    let alg = m.algebra().clone();
    let op = Arc::new(alg.opposite());
    transpose(&m.dual_over(op), &alg)
}

/// The Nakayama functor `νM = D Hom_A(M, A)`.
pub fn nakayama(m: &Module) -> Module {
    let alg = m.algebra().clone();
    let op = Arc::new(alg.opposite());
    let n = alg.vertex_count();
    let ps: Vec<Module> = (0..n)
        .map(|v| Module::projective(alg.clone(), v).expect("vertex in range"))
        .collect();
    let homs: Vec<_> = ps
        .iter()
        .map(|p| hom_space(m, p).expect("same algebra"))
        .collect();
    let dims: Vec<usize> = homs.iter().map(|h| h.dim()).collect();
    // generator a: s -> t acts on Hom(M, A) from the vertex-t space to the
    // vertex-s space by left multiplication with a
    let maps = alg
        .generators()
        .iter()
        .enumerate()
        .map(|(gi, g)| {
            let x = generator_element(&alg, gi);
            let coords: Vec<Q> = alg
                .basis_between(g.source, g.target)
                .iter()
                .map(|&b| x[b].clone())
                .collect();
            let left = map_from_projective(&ps[g.target], g.target, &ps[g.source], &coords);
            let cols: Vec<Vec<Q>> = homs[g.target]
                .basis()
                .iter()
                .map(|phi| {
                    homs[g.source]
                        .coordinates(&phi.then(&left))
                        .expect("lands in Hom(M, P)")
                })
                .collect();
            Matrix::from_columns(dims[g.source], &cols)
        })
        .collect();
    Module::raw(op, dims, maps).dual_over(alg)
}

/// A short exact sequence `X -> E -> Z`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub inflation: Morphism,
    pub deflation: Morphism,
}

impl ShortExactSequence {
    pub fn middle(&self) -> &Module {
        self.inflation.target()
    }

    pub fn left(&self) -> &Module {
        self.inflation.source()
    }

    pub fn right(&self) -> &Module {
        self.deflation.target()
    }

    pub fn is_exact(&self) -> bool {
        self.inflation.is_injective()
            && self.deflation.is_surjective()
            && self.inflation.then(&self.deflation).is_zero()
            && self.left().dim() + self.right().dim() == self.middle().dim()
    }

    /// Split iff the deflation has a section.
    pub fn splits(&self) -> bool {
        let z = self.right();
        let e = self.middle();
        let h = hom_space(z, e).expect("same algebra");
        let cols: Vec<Vec<Q>> = h
            .basis()
            .iter()
            .map(|s| s.then(&self.deflation).flatten())
            .collect();
        let id = z.identity().flatten();
        let m = Matrix::from_columns(id.len(), &cols);
        m.solve(&id).is_some()
    }
}

/// An element of `Ext¹(Z, X)` with a realizing sequence.
#[derive(Clone, Debug)]
pub struct ExtClass {
    /// A map `ΩZ -> X` representing the class.
    pub cocycle: Morphism,
    pub sequence: ShortExactSequence,
}

#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub z: Module,
    pub x: Module,
    pub classes: Vec<ExtClass>,
    syzygy: Morphism,
    cover: Morphism,
    cocycles: crate::hom::HomSpace,
    /// Coordinates (in `cocycles`) of the basis classes.
    representatives: Matrix,
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    /// The class `Σ c_k class_k`, realized.
    pub fn combination(&self, coeffs: &[Q]) -> ExtClass {
        let v = self.representatives.apply(coeffs);
        let c = self.cocycles.combination(&v);
        realize(&self.x, &self.z, &self.syzygy, &self.cover, c)
    }
}

fn realize(x: &Module, z: &Module, iota: &Morphism, pi: &Morphism, c: Morphism) -> ExtClass {
    let alg = x.algebra();
    let p0 = pi.source();
    let omega = iota.source();
    let (sum, incl, _) = Module::direct_sum(alg, &[x.clone(), p0.clone()]);
    let u = Morphism::from_rows(omega, &[c.clone(), iota.neg()], &sum);
    let (e, proj) = u.cokernel();
    let inflation = incl[0].then(&proj);
    let down = Morphism::from_columns(&sum, &[Morphism::zero(x, z), pi.clone()], z);
    let deflation = down
        .factor_through_epi(&proj)
        .expect("(0, π) kills the image");
    let _ = e;
    ExtClass {
        cocycle: c,
        sequence: ShortExactSequence {
            inflation,
            deflation,
        },
    }
}

/// `Ext¹(Z, X) = coker(Hom(P0, X) -> Hom(ΩZ, X))`.
pub fn ext1(z: &Module, x: &Module) -> Result<ExtSpace> {
    if !same_algebra(z.algebra(), x.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let (omega, iota, cover) = syzygy(z);
    let cocycles = hom_space(&omega, x)?;
    let reps = coboundary_complement(&cover.projective, &iota, x, &cocycles)?;
    let classes = reps
        .columns()
        .into_iter()
        .map(|col| realize(x, z, &iota, &cover.epi, cocycles.combination(&col)))
        .collect();
    Ok(ExtSpace {
        z: z.clone(),
        x: x.clone(),
        classes,
        syzygy: iota,
        cover: cover.epi,
        cocycles,
        representatives: reps,
    })
}

/// Columns spanning a complement of the coboundaries inside the cocycles.
fn coboundary_complement(
    p0: &Module,
    iota: &Morphism,
    x: &Module,
    cocycles: &crate::hom::HomSpace,
) -> Result<Matrix> {
    let from_p0 = hom_space(p0, x)?;
    let cols: Vec<Vec<Q>> = from_p0
        .basis()
        .iter()
        .map(|phi| {
            cocycles
                .coordinates(&iota.then(phi))
                .expect("restriction is a cocycle")
        })
        .collect();
    let b = Matrix::from_columns(cocycles.dim(), &cols);
    Ok(b.quotient_map().1)
}

/// `dim Ext¹(Z, X)` without realizing the classes.
pub fn ext1_dim(z: &Module, x: &Module) -> Result<usize> {
    if !same_algebra(z.algebra(), x.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if z.is_zero() || x.is_zero() {
        return Ok(0);
    }
    let (omega, iota, cover) = syzygy(z);
    let cocycles = hom_space(&omega, x)?;
    if cocycles.dim() == 0 {
        return Ok(0);
    }
    Ok(coboundary_complement(&cover.projective, &iota, x, &cocycles)?.cols())
}

pub fn is_projective(m: &Module) -> bool {
    syzygy(m).0.is_zero()
}

pub fn is_injective(m: &Module) -> bool {
    let op = Arc::new(m.algebra().opposite());
    is_projective(&m.dual_over(op))
}

#[allow(dead_code)]
fn nonzero(v: &[Q]) -> bool {
    v.iter().any(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{decompose, is_isomorphic};

    fn lambda() -> Arc<Algebra> {
        Arc::new(
            Algebra::parse("vertices: 3\narrow: a 1 2\narrow: b 2 3\nrelation: a*b\n").unwrap(),
        )
    }

    fn simple(v: usize) -> Module {
        Module::simple(lambda(), v).unwrap()
    }

    #[test]
    fn covers_and_syzygies() {
        let alg = lambda();
        let c = projective_cover(&simple(0));
        assert_eq!(c.projective.dims(), [1, 1, 0]);
        assert!(c.epi.is_surjective());
        assert_eq!(syzygy(&simple(0)).0.dims(), [0, 1, 0]);
        assert_eq!(syzygy(&simple(1)).0.dims(), [0, 0, 1]);
        let p = Module::projective(alg.clone(), 1).unwrap();
        assert!(syzygy(&p).0.is_zero());
        let two_three = simple(1).sum(&simple(2));
        assert_eq!(projective_cover(&two_three).projective.dims(), [0, 1, 2]);
    }

    #[test]
    fn tau_of_simples() {
        let t2 = tau(&simple(1));
        assert!(is_isomorphic(&t2, &simple(2)));
        let t1 = tau(&simple(0));
        assert!(is_isomorphic(&t1, &simple(1)));
        let p1 = Module::projective(lambda(), 0).unwrap();
        assert!(tau(&p1).is_zero());
        assert!(is_isomorphic(&tau_inverse(&simple(2)), &simple(1)));
        assert!(tau_inverse(&Module::injective(lambda(), 0).unwrap()).is_zero());
    }

    #[test]
    fn nakayama_sends_projectives_to_injectives() {
        let alg = lambda();
        for v in 0..3 {
            let p = Module::projective(alg.clone(), v).unwrap();
            let i = Module::injective(alg.clone(), v).unwrap();
            assert!(is_isomorphic(&nakayama(&p), &i));
        }
    }

    #[test]
    fn ext_between_simples() {
        let e = ext1(&simple(0), &simple(1)).unwrap();
        assert_eq!(e.dim(), 1);
        let seq = &e.classes[0].sequence;
        assert!(seq.is_exact());
        assert!(!seq.splits());
        let mid = decompose(seq.middle());
        assert_eq!(mid.len(), 1);
        assert!(is_isomorphic(
            &mid[0].0,
            &Module::projective(lambda(), 0).unwrap()
        ));
        // αβ = 0 kills the length-two extension
        assert_eq!(ext1_dim(&simple(0), &simple(2)).unwrap(), 0);
        let zero = e.combination(&[crate::linalg::q(0)]);
        assert!(zero.sequence.is_exact() && zero.sequence.splits());
    }
}
