//! Homomorphism spaces, found by solving the commuting-square equations.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::module::{same_algebra, Module, Morphism};

/// A basis of `Hom(source, target)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Module,
    target: Module,
    basis: Vec<Morphism>,
    /// Flattened basis morphisms as columns, for coordinate lookups.
    flat: Matrix,
}

impl HomSpace {
    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f` in the basis, or `None` if `f` is not in the space.
    pub fn coordinates(&self, f: &Morphism) -> Option<Vec<Q>> {
        self.flat.solve(&f.flatten())
    }

    pub fn combination(&self, coeffs: &[Q]) -> Morphism {
        let mut f = Morphism::zero(&self.source, &self.target);
        for (b, c) in self.basis.iter().zip(coeffs) {
            if !c.is_zero() {
                f = f.add(&b.scale(c));
            }
        }
        f
    }
}

/// Number of unknowns and the offset of each vertex block.
fn layout(m: &Module, n: &Module) -> (usize, Vec<usize>) {
    let mut offsets = Vec::new();
    let mut total = 0;
    for (&a, &b) in m.dims().iter().zip(n.dims()) {
        offsets.push(total);
        total += a * b;
    }
    (total, offsets)
}

/// All module homomorphisms `m -> n`.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let (unknowns, offsets) = layout(m, n);
    let dm = m.dims();
    let dn = n.dims();
    // unknown for phi_v[r][c] sits at offsets[v] + r * dm[v] + c
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (gi, g) in m.algebra().generators().iter().enumerate() {
        let (s, t) = (g.source, g.target);
        let (ma, na) = (m.map(gi), n.map(gi));
        // (N_a phi_s - phi_t M_a)[i][j] = 0 for i < dn[t], j < dm[s]
        for i in 0..dn[t] {
            for j in 0..dm[s] {
                let mut row = vec![Q::zero(); unknowns];
                for k in 0..dn[s] {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        row[offsets[s] + k * dm[s] + j] += c;
                    }
                }
                for k in 0..dm[t] {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        row[offsets[t] + i * dm[t] + k] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(rows.len(), unknowns, rows);
    let null = system.nullspace();
    let basis: Vec<Morphism> = null
        .columns()
        .iter()
        .map(|v| Morphism::unflatten(m, n, v))
        .collect();
    Ok(HomSpace {
        source: m.clone(),
        target: n.clone(),
        flat: null,
        basis,
    })
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use std::sync::Arc;

    fn lambda() -> Arc<Algebra> {
        Arc::new(
            Algebra::parse("vertices: 3\narrow: a 1 2\narrow: b 2 3\nrelation: a*b\n").unwrap(),
        )
    }

    #[test]
    fn hom_between_projectives_matches_cartan() {
        let alg = lambda();
        let cartan = alg.cartan_matrix();
        for i in 0..3 {
            for j in 0..3 {
                let pi = Module::projective(alg.clone(), i).unwrap();
                let pj = Module::projective(alg.clone(), j).unwrap();
                // Hom(e_i A, e_j A) = e_j A e_i
                assert_eq!(hom_dim(&pi, &pj).unwrap(), cartan[j][i]);
            }
        }
    }

    #[test]
    fn identity_lies_in_end() {
        let alg = lambda();
        let m = Module::regular(alg);
        let h = hom_space(&m, &m).unwrap();
        assert_eq!(h.dim(), 5);
        assert!(h.coordinates(&m.identity()).is_some());
        assert!(h.basis().iter().all(Morphism::is_homomorphism));
    }
}
