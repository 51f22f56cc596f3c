//! Enumeration of indecomposable modules by knitting from the projectives.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::decompose::{indecomposable_summands, is_isomorphic, multiplicity};
use crate::error::{Error, Result};
use crate::hom::{hom_space, HomSpace};
use crate::homology::{ext1, ext1_dim, is_injective, is_projective, tau_inverse};
use crate::module::Module;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PoolOptions {
    /// Modules of larger total dimension are not explored.
    pub max_dim: usize,
    /// Maximal number of pool members.
    pub max_steps: usize,
}

impl Default for PoolOptions {
    fn default() -> Self {
        PoolOptions {
            max_dim: 30,
            max_steps: 1000,
        }
    }
}

/// A canonically ordered list of pairwise non-isomorphic indecomposables,
/// with their hom spaces and Ext¹ dimensions precomputed.
pub struct Pool {
    algebra: Arc<Algebra>,
    members: Vec<Module>,
    labels: Vec<String>,
    complete: bool,
    /// Some Ext¹ between members had dimension at least 2, so knitting
    /// along basis classes may have missed middle terms.
    qualified: bool,
    hom: Vec<Vec<HomSpace>>,
    ext: Vec<Vec<usize>>,
    projective: Vec<bool>,
    injective: Vec<bool>,
}

impl fmt::Debug for Pool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pool")
            .field("members", &self.labels)
            .field("complete", &self.complete)
            .finish()
    }
}

impl Pool {
    /// Knit the pool of `algebra` with default caps.
    pub fn enumerate(algebra: Arc<Algebra>) -> Result<Pool> {
        enumerate_indecomposables(algebra, PoolOptions::default())
    }

    /// A pool from given indecomposables (assumed pairwise non-isomorphic).
    pub fn from_members(algebra: Arc<Algebra>, members: Vec<Module>, complete: bool) -> Pool {
        Pool::finish(algebra, members, complete, false)
    }

    fn finish(
        algebra: Arc<Algebra>,
        members: Vec<Module>,
        complete: bool,
        qualified: bool,
    ) -> Pool {
        let mut keyed: Vec<(usize, Vec<usize>, String, usize, Module)> = members
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m.dim(), m.dims().to_vec(), m.layer_label(), i, m))
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1, &a.2, a.3).cmp(&(b.0, &b.1, &b.2, b.3)));
        let members: Vec<Module> = keyed.into_iter().map(|k| k.4).collect();
        let raw: Vec<String> = members.iter().map(Module::layer_label).collect();
        let labels = raw
            .iter()
            .zip(&members)
            .map(|(l, m)| {
                if raw.iter().filter(|x| *x == l).count() > 1 {
                    m.dimension_label()
                } else {
                    l.clone()
                }
            })
            .collect();
        let hom = members
            .iter()
            .map(|a| {
                members
                    .iter()
                    .map(|b| hom_space(a, b).expect("same algebra"))
                    .collect()
            })
            .collect();
        let ext = members
            .iter()
            .map(|a| {
                members
                    .iter()
                    .map(|b| ext1_dim(a, b).expect("same algebra"))
                    .collect()
            })
            .collect();
        let projective = members.iter().map(is_projective).collect();
        let injective = members.iter().map(is_injective).collect();
        Pool {
            algebra,
            members,
            labels,
            complete,
            qualified,
            hom,
            ext,
            projective,
            injective,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Module] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Module {
        &self.members[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Knitting reached a fixpoint below the caps.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Completeness is only relative to basis extension classes.
    pub fn is_qualified(&self) -> bool {
        self.qualified
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.hom[i][j]
    }

    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.hom[i][j].dim()
    }

    pub fn ext_dim(&self, i: usize, j: usize) -> usize {
        self.ext[i][j]
    }

    pub fn is_projective(&self, i: usize) -> bool {
        self.projective[i]
    }

    pub fn is_injective(&self, i: usize) -> bool {
        self.injective[i]
    }

    pub fn projectives(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.projective[i]).collect()
    }

    /// Index of the member isomorphic to `m`, if any.
    pub fn find(&self, m: &Module) -> Option<usize> {
        (0..self.len())
            .find(|&i| self.members[i].dims() == m.dims() && is_isomorphic(&self.members[i], m))
    }

    /// Multiplicities of pool members as summands of `m`; fails if `m` has
    /// a summand outside the pool.
    pub fn locate(&self, m: &Module) -> Result<Vec<(usize, usize)>> {
        if m.is_zero() {
            return Ok(Vec::new());
        }
        if let Some(i) = self.find(m) {
            return Ok(vec![(i, 1)]);
        }
        let mut out = Vec::new();
        let mut covered = 0;
        for (i, x) in self.members.iter().enumerate() {
            if x.dims().iter().zip(m.dims()).any(|(a, b)| a > b) {
                continue;
            }
            let k = multiplicity(x, m);
            if k > 0 {
                out.push((i, k));
                covered += k * x.dim();
            }
        }
        if covered != m.dim() {
            return Err(Error::IncompletePool(format!(
                "a module with dimension vector {:?} has summands outside the pool",
                m.dims()
            )));
        }
        Ok(out)
    }

    /// Human-readable name of an arbitrary module in terms of pool labels,
    /// e.g. `2+1/2^2`; falls back to the layer label.
    pub fn describe(&self, m: &Module) -> String {
        if m.is_zero() {
            return "0".to_string();
        }
        match self.locate(m) {
            Ok(parts) => parts
                .iter()
                .map(|&(i, k)| {
                    if k == 1 {
                        self.labels[i].clone()
                    } else {
                        format!("{}^{}", self.labels[i], k)
                    }
                })
                .collect::<Vec<_>>()
                .join("+"),
            Err(_) => m.layer_label(),
        }
    }

    /// The vertex of a projective member's top.
    pub fn projective_vertex(&self, i: usize) -> Option<usize> {
        if !self.projective[i] {
            return None;
        }
        let (top, _) = self.members[i].top();
        top.dims().iter().position(|&d| d > 0)
    }
}

/// Knit: start with the indecomposable projectives and close under `τ⁻¹`,
/// radicals, tops and middle terms of basis extension classes.
pub fn enumerate_indecomposables(algebra: Arc<Algebra>, opts: PoolOptions) -> Result<Pool> {
    let mut members: Vec<Module> = Vec::new();
    let mut work: VecDeque<usize> = VecDeque::new();
    let mut capped = false;
    let mut qualified = false;

    let insert =
        |m: &Module, members: &mut Vec<Module>, work: &mut VecDeque<usize>, capped: &mut bool| {
            for piece in indecomposable_summands(m) {
                if piece.dim() > opts.max_dim {
                    *capped = true;
                    continue;
                }
                if members
                    .iter()
                    .any(|x| x.dims() == piece.dims() && is_isomorphic(x, &piece))
                {
                    continue;
                }
                if members.len() >= opts.max_steps {
                    *capped = true;
                    continue;
                }
                members.push(piece);
                work.push_back(members.len() - 1);
            }
        };

    for v in 0..algebra.vertex_count() {
        let p = Module::projective(algebra.clone(), v)?;
        insert(&p, &mut members, &mut work, &mut capped);
    }
    while let Some(i) = work.pop_front() {
        let x = members[i].clone();
        let mut next = vec![tau_inverse(&x), x.radical().0, x.top().0];
        for j in 0..members.len() {
            let y = members[j].clone();
            for (z, w) in [(&x, &y), (&y, &x)] {
                let e = ext1(z, w)?;
                if e.dim() >= 2 {
                    qualified = true;
                }
                for c in &e.classes {
                    next.push(c.sequence.middle().clone());
                }
            }
        }
        for m in next {
            insert(&m, &mut members, &mut work, &mut capped);
        }
    }
    let pool = Pool::finish(algebra, members, !capped, qualified);
    if capped {
        return Err(Error::CapExceeded {
            partial: Box::new(pool),
        });
    }
    Ok(pool)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_pool_has_five_members() {
        let alg = Arc::new(
            Algebra::parse("vertices: 3\narrow: a 1 2\narrow: b 2 3\nrelation: a*b\n").unwrap(),
        );
        let pool = Pool::enumerate(alg).unwrap();
        assert_eq!(pool.labels(), ["3", "2", "1", "2/3", "1/2"]);
        assert!(pool.is_complete());
        assert!(!pool.is_qualified());
        assert_eq!(pool.projectives(), vec![0, 3, 4]);
    }

    #[test]
    fn semisimple_pool_is_the_simples() {
        let alg = Arc::new(Algebra::parse("vertices: 3\n").unwrap());
        let pool = Pool::enumerate(alg).unwrap();
        assert_eq!(pool.len(), 3);
        assert!(pool.members().iter().all(|m| m.dim() == 1));
    }

    #[test]
    fn caps_return_the_partial_pool() {
        let alg = Arc::new(Algebra::parse("vertices: 3\narrow: a 1 2\narrow: b 2 3\n").unwrap());
        let err = enumerate_indecomposables(
            alg,
            PoolOptions {
                max_dim: 30,
                max_steps: 2,
            },
        )
        .unwrap_err();
        match err {
            Error::CapExceeded { partial } => assert_eq!(partial.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
