//! Additively closed subcategories of a pool, Fac and Sub, minimal
//! approximations, Ext-projectives and closure tests.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::hom_space;
use crate::linalg::{q, Matrix, Q};
use crate::module::{Module, Morphism};
use crate::pool::Pool;

/// The additive closure of a set of pool members.
#[derive(Clone)]
pub struct Subcat {
    pool: Arc<Pool>,
    members: Vec<usize>,
}

impl PartialEq for Subcat {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pool, &other.pool) && self.members == other.members
    }
}

impl Eq for Subcat {}

impl fmt::Debug for Subcat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "add({})", self.name())
    }
}

impl fmt::Display for Subcat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Subcat {
    pub fn new(pool: &Arc<Pool>, members: impl IntoIterator<Item = usize>) -> Subcat {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        assert!(
            members.iter().all(|&i| i < pool.len()),
            "pool index out of range"
        );
        Subcat {
            pool: pool.clone(),
            members,
        }
    }

    pub fn empty(pool: &Arc<Pool>) -> Subcat {
        Subcat::new(pool, [])
    }

    pub fn whole(pool: &Arc<Pool>) -> Subcat {
        Subcat::new(pool, 0..pool.len())
    }

    /// Parse a `+`-separated list of pool labels; `0` is the zero category.
    pub fn parse(pool: &Arc<Pool>, spec: &str) -> Result<Subcat> {
        let spec = spec.trim();
        if spec == "0" || spec.is_empty() {
            return Ok(Subcat::empty(pool));
        }
        let mut idx = Vec::new();
        for part in spec.split('+') {
            let part = part.trim();
            idx.push(
                pool.index_of_label(part)
                    .ok_or_else(|| Error::UnknownModule(part.to_string()))?,
            );
        }
        Ok(Subcat::new(pool, idx))
    }

    pub fn pool(&self) -> &Arc<Pool> {
        &self.pool
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &Subcat) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, other: &Subcat) -> Subcat {
        Subcat::new(
            &self.pool,
            self.members.iter().copied().filter(|&i| other.contains(i)),
        )
    }

    pub fn union(&self, other: &Subcat) -> Subcat {
        Subcat::new(
            &self.pool,
            self.members.iter().chain(&other.members).copied(),
        )
    }

    /// Generator labels in pool order joined by `+`, or `0`.
    pub fn name(&self) -> String {
        if self.members.is_empty() {
            "0".to_string()
        } else {
            self.members
                .iter()
                .map(|&i| self.pool.label(i))
                .collect::<Vec<_>>()
                .join("+")
        }
    }

    /// The direct sum of the members.
    pub fn module(&self) -> Module {
        let parts: Vec<Module> = self
            .members
            .iter()
            .map(|&i| self.pool.member(i).clone())
            .collect();
        Module::direct_sum(self.pool.algebra(), &parts).0
    }

    /// Is `m` in the additive closure? Modules with a summand outside the
    /// pool are not.
    pub fn contains_module(&self, m: &Module) -> bool {
        match self.pool.locate(m) {
            Ok(parts) => parts.iter().all(|&(i, _)| self.contains(i)),
            Err(_) => false,
        }
    }
}

/// Sum of the images of all maps from members of `t` into `x`, with its inclusion.
pub fn trace(t: &Subcat, x: &Module) -> (Module, Morphism) {
    let n = x.dims().len();
    let mut spans: Vec<Vec<Matrix>> = vec![Vec::new(); n];
    for &i in t.members() {
        let h = hom_space(t.pool().member(i), x).expect("same algebra");
        for f in h.basis() {
            for (v, span) in spans.iter_mut().enumerate() {
                span.push(f.block(v).clone());
            }
        }
    }
    let spaces: Vec<Matrix> = spans
        .iter()
        .enumerate()
        .map(|(v, s)| {
            let refs: Vec<&Matrix> = s.iter().collect();
            if refs.is_empty() {
                Matrix::zeros(x.dims()[v], 0)
            } else {
                Matrix::hstack(&refs)
            }
        })
        .collect();
    x.submodule(&spaces)
}

/// Intersection of the kernels of all maps from `x` into members of `t`.
pub fn reject(t: &Subcat, x: &Module) -> (Module, Morphism) {
    let n = x.dims().len();
    let mut rows: Vec<Vec<Matrix>> = vec![Vec::new(); n];
    for &i in t.members() {
        let h = hom_space(x, t.pool().member(i)).expect("same algebra");
        for f in h.basis() {
            for (v, r) in rows.iter_mut().enumerate() {
                r.push(f.block(v).clone());
            }
        }
    }
    let spaces: Vec<Matrix> = rows
        .iter()
        .enumerate()
        .map(|(v, r)| {
            if r.is_empty() {
                Matrix::identity(x.dims()[v])
            } else {
                let refs: Vec<&Matrix> = r.iter().collect();
                Matrix::vstack(&refs).nullspace()
            }
        })
        .collect();
    x.submodule(&spaces)
}

/// Pool members `x` with `trace(t, x) = x`.
pub fn fac_members(t: &Subcat) -> Subcat {
    let pool = t.pool();
    Subcat::new(
        pool,
        (0..pool.len()).filter(|&i| trace(t, pool.member(i)).0.dim() == pool.member(i).dim()),
    )
}

/// Pool members `x` with `reject(t, x) = 0`.
pub fn sub_members(t: &Subcat) -> Subcat {
    let pool = t.pool();
    Subcat::new(
        pool,
        (0..pool.len()).filter(|&i| reject(t, pool.member(i)).0.is_zero()),
    )
}

/// A minimal approximation by `add T`.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// Pool indices of the summands of the approximating object, with repetition.
    pub summands: Vec<usize>,
    /// The approximating object `⊕ T_k`.
    pub object: Module,
    /// `X -> object` for left approximations, `object -> X` for right ones.
    pub map: Morphism,
    pub minimal: bool,
}

impl Approximation {
    pub fn kernel(&self) -> Module {
        self.map.kernel().0
    }

    pub fn cokernel(&self) -> Module {
        self.map.cokernel().0
    }

    pub fn image(&self) -> Module {
        self.map.image().0
    }
}

fn spans(vectors: &[Vec<Q>], len: usize, dim: usize) -> bool {
    crate::linalg::rank_of(vectors, len) == dim
}

/// Minimal left `add T`-approximation `X -> T^X`: the universal map into
/// `⊕ T_i^{dim Hom(X, T_i)}`, with target summands deleted last to first
/// while the approximation property survives.
pub fn left_approximation(x: &Module, t: &Subcat) -> Approximation {
    let pool = t.pool();
    let mut parts: Vec<(usize, Morphism)> = Vec::new();
    let mut target_dims = Vec::new();
    for &i in t.members() {
        let h = hom_space(x, pool.member(i)).expect("same algebra");
        target_dims.push((i, h.dim()));
        for f in h.basis() {
            parts.push((i, f.clone()));
        }
    }
    let holds = |keep: &[bool]| {
        target_dims.iter().all(|&(j, dim)| {
            let vecs: Vec<Vec<Q>> = parts
                .iter()
                .zip(keep)
                .filter(|(_, k)| **k)
                .flat_map(|((i, c), _)| {
                    pool.hom(*i, j)
                        .basis()
                        .iter()
                        .map(move |h| c.then(h).flatten())
                })
                .collect();
            let len = x
                .dims()
                .iter()
                .zip(pool.member(j).dims())
                .map(|(a, b)| a * b)
                .sum();
            spans(&vecs, len, dim)
        })
    };
    let mut keep = vec![true; parts.len()];
    for k in (0..parts.len()).rev() {
        keep[k] = false;
        if !holds(&keep) {
            keep[k] = true;
        }
    }
    let kept: Vec<(usize, Morphism)> = parts
        .into_iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(p, _)| p)
        .collect();
    let summands: Vec<usize> = kept.iter().map(|(i, _)| *i).collect();
    let mods: Vec<Module> = summands.iter().map(|&i| pool.member(i).clone()).collect();
    let (object, _, _) = Module::direct_sum(pool.algebra(), &mods);
    let maps: Vec<Morphism> = kept.into_iter().map(|(_, f)| f).collect();
    let map = Morphism::from_rows(x, &maps, &object);
    Approximation {
        summands,
        object,
        map,
        minimal: true,
    }
}

/// Minimal right `add T`-approximation `T_X -> X`.
pub fn right_approximation(x: &Module, t: &Subcat) -> Approximation {
    let pool = t.pool();
    let mut parts: Vec<(usize, Morphism)> = Vec::new();
    let mut source_dims = Vec::new();
    for &i in t.members() {
        let h = hom_space(pool.member(i), x).expect("same algebra");
        source_dims.push((i, h.dim()));
        for f in h.basis() {
            parts.push((i, f.clone()));
        }
    }
    let holds = |keep: &[bool]| {
        source_dims.iter().all(|&(j, dim)| {
            let vecs: Vec<Vec<Q>> = parts
                .iter()
                .zip(keep)
                .filter(|(_, k)| **k)
                .flat_map(|((i, c), _)| {
                    pool.hom(j, *i)
                        .basis()
                        .iter()
                        .map(move |h| h.then(c).flatten())
                })
                .collect();
            let len = x
                .dims()
                .iter()
                .zip(pool.member(j).dims())
                .map(|(a, b)| a * b)
                .sum();
            spans(&vecs, len, dim)
        })
    };
    let mut keep = vec![true; parts.len()];
    for k in (0..parts.len()).rev() {
        keep[k] = false;
        if !holds(&keep) {
            keep[k] = true;
        }
    }
    let kept: Vec<(usize, Morphism)> = parts
        .into_iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(p, _)| p)
        .collect();
    let summands: Vec<usize> = kept.iter().map(|(i, _)| *i).collect();
    let mods: Vec<Module> = summands.iter().map(|&i| pool.member(i).clone()).collect();
    let (object, _, _) = Module::direct_sum(pool.algebra(), &mods);
    let maps: Vec<Morphism> = kept.into_iter().map(|(_, f)| f).collect();
    let map = Morphism::from_columns(&object, &maps, x);
    Approximation {
        summands,
        object,
        map,
        minimal: true,
    }
}

/// Members `x` of `c` with `Ext¹(x, y) = 0` for all members `y`.
pub fn ext_projectives(c: &Subcat) -> Subcat {
    let pool = c.pool();
    Subcat::new(
        pool,
        c.members()
            .iter()
            .copied()
            .filter(|&x| c.members().iter().all(|&y| pool.ext_dim(x, y) == 0)),
    )
}

/// Members `y` of `c` with `Ext¹(x, y) = 0` for all members `x`.
pub fn ext_injectives(c: &Subcat) -> Subcat {
    let pool = c.pool();
    Subcat::new(
        pool,
        c.members()
            .iter()
            .copied()
            .filter(|&y| c.members().iter().all(|&x| pool.ext_dim(x, y) == 0)),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    Exact(bool),
    /// Every checked middle term passed, but some Ext¹ has dimension at
    /// least 2, so finitely many checks are not exhaustive.
    HeuristicTrue,
}

impl Closure {
    pub fn holds(self) -> bool {
        !matches!(self, Closure::Exact(false))
    }
}

/// Witness of a failed extension-closure test: `Ext¹(z, x)` has a class
/// whose middle term leaves the subcategory.
#[derive(Clone, Debug)]
pub struct ExtensionWitness {
    pub z: usize,
    pub x: usize,
    pub middle: String,
}

pub fn is_extension_closed(c: &Subcat) -> (Closure, Option<ExtensionWitness>) {
    let pool = c.pool();
    let mut heuristic = false;
    for &z in c.members() {
        for &x in c.members() {
            let d = pool.ext_dim(z, x);
            if d == 0 {
                continue;
            }
            let ext = crate::homology::ext1(pool.member(z), pool.member(x)).expect("same algebra");
            let mut middles: Vec<Module> = ext
                .classes
                .iter()
                .map(|e| e.sequence.middle().clone())
                .collect();
            if d >= 2 {
                heuristic = true;
                for coeffs in sign_vectors(d) {
                    middles.push(ext.combination(&coeffs).sequence.middle().clone());
                }
            }
            for m in middles {
                if !c.contains_module(&m) {
                    return (
                        Closure::Exact(false),
                        Some(ExtensionWitness {
                            z,
                            x,
                            middle: pool.describe(&m),
                        }),
                    );
                }
            }
        }
    }
    if heuristic {
        (Closure::HeuristicTrue, None)
    } else {
        (Closure::Exact(true), None)
    }
}

/// Nonzero coefficient vectors with entries in {-1, 0, 1}, capped.
fn sign_vectors(d: usize) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    let total = 3usize.saturating_pow(d.min(6) as u32);
    for code in 1..total {
        let mut c = code;
        let v: Vec<Q> = (0..d)
            .map(|_| {
                let digit = c % 3;
                c /= 3;
                q(digit as i64 - 1)
            })
            .collect();
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    fn pool() -> Arc<Pool> {
        let alg = Arc::new(
            Algebra::parse("vertices: 3\narrow: a 1 2\narrow: b 2 3\nrelation: a*b\n").unwrap(),
        );
        Arc::new(Pool::enumerate(alg).unwrap())
    }

    #[test]
    fn names_round_trip() {
        let p = pool();
        let t = Subcat::parse(&p, "2+2/3+1/2").unwrap();
        assert_eq!(t.name(), "2+2/3+1/2");
        assert_eq!(Subcat::parse(&p, "1/2+2/3+2").unwrap(), t);
        assert!(matches!(
            Subcat::parse(&p, "4"),
            Err(Error::UnknownModule(_))
        ));
        assert_eq!(Subcat::empty(&p).name(), "0");
    }

    #[test]
    fn fac_and_sub_of_example() {
        let p = pool();
        let t = Subcat::parse(&p, "2+2/3+1/2").unwrap();
        assert_eq!(fac_members(&t).name(), "2+1+2/3+1/2");
        assert_eq!(
            sub_members(&Subcat::parse(&p, "2/3").unwrap()).name(),
            "3+2/3"
        );
        let proj = Subcat::new(&p, p.projectives());
        assert_eq!(fac_members(&proj), Subcat::whole(&p));
    }

    #[test]
    fn trace_examples() {
        let p = pool();
        let one = p.member(p.index_of_label("1").unwrap());
        let (tr, _) = trace(&Subcat::parse(&p, "1/2").unwrap(), one);
        assert_eq!(tr.dim(), 1);
        let (tr, _) = trace(&Subcat::parse(&p, "3").unwrap(), one);
        assert!(tr.is_zero());
    }

    #[test]
    fn approximation_of_two_three() {
        let p = pool();
        let x = p.member(p.index_of_label("2/3").unwrap());
        let a = left_approximation(x, &Subcat::parse(&p, "1+1/2").unwrap());
        assert_eq!(a.summands, vec![p.index_of_label("1/2").unwrap()]);
        assert_eq!(p.describe(&a.kernel()), "3");
        let three = p.member(p.index_of_label("3").unwrap());
        let z = left_approximation(three, &Subcat::parse(&p, "2+1/2").unwrap());
        assert!(z.object.is_zero());
    }

    #[test]
    fn extension_closure() {
        let p = pool();
        let simples = Subcat::parse(&p, "3+2+1").unwrap();
        let (c, w) = is_extension_closed(&simples);
        assert_eq!(c, Closure::Exact(false));
        assert!(w.is_some());
        let fac = Subcat::parse(&p, "2+1+2/3+1/2").unwrap();
        assert_eq!(is_extension_closed(&fac).0, Closure::Exact(true));
        assert_eq!(
            is_extension_closed(&Subcat::whole(&p)).0,
            Closure::Exact(true)
        );
    }

    #[test]
    fn ext_projectives_of_example() {
        let p = pool();
        let fac = fac_members(&Subcat::parse(&p, "2+2/3+1/2").unwrap());
        assert_eq!(ext_projectives(&fac).name(), "2+2/3+1/2");
        assert_eq!(
            ext_projectives(&Subcat::whole(&p)),
            Subcat::new(&p, p.projectives())
        );
    }
}
