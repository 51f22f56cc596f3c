//! Right modules over an [`Algebra`], stored as representations: one vector
//! space per vertex and one matrix per generator.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, Matrix, Q};

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

struct Inner {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    /// `maps[g]` has shape `dims[target(g)] x dims[source(g)]`.
    maps: Vec<Matrix>,
}

/// A finite-dimensional right module. Cloning is cheap.
#[derive(Clone)]
pub struct Module {
    inner: Arc<Inner>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims())
    }
}

impl Module {
    /// Build and validate a module from generator matrices.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Module> {
        if dims.len() != algebra.vertex_count() {
            return Err(Error::InvalidModule(format!(
                "expected {} vertex dimensions, got {}",
                algebra.vertex_count(),
                dims.len()
            )));
        }
        if maps.len() != algebra.generators().len() {
            return Err(Error::InvalidModule(format!(
                "expected {} generator matrices, got {}",
                algebra.generators().len(),
                maps.len()
            )));
        }
        for (g, m) in algebra.generators().iter().zip(&maps) {
            if m.shape() != (dims[g.target], dims[g.source]) {
                return Err(Error::InvalidModule(format!(
                    "matrix for `{}` has shape {:?}, expected {:?}",
                    g.label,
                    m.shape(),
                    (dims[g.target], dims[g.source])
                )));
            }
        }
        let m = Module::raw(algebra, dims, maps);
        m.check_structure()?;
        Ok(m)
    }

    pub(crate) fn raw(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Module {
        Module {
            inner: Arc::new(Inner {
                algebra,
                dims,
                maps,
            }),
        }
    }

    fn check_structure(&self) -> Result<()> {
        let alg = self.algebra();
        let acts: Vec<Matrix> = (0..alg.dim()).map(|b| self.action(b)).collect();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let (bi, bj) = (&alg.basis()[i], &alg.basis()[j]);
                if bi.target != bj.source {
                    continue;
                }
                let lhs = &acts[j] * &acts[i];
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for (k, c) in alg.product(i, j) {
                    rhs = &rhs + &acts[*k].scale(c);
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action violates the product {} * {}",
                        bi.label, bj.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>) -> Module {
        let n = algebra.vertex_count();
        let maps = algebra
            .generators()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        Module::raw(algebra, vec![0; n], maps)
    }

    pub fn simple(algebra: Arc<Algebra>, v: usize) -> Result<Module> {
        if v >= algebra.vertex_count() {
            return Err(Error::VertexOutOfRange(v));
        }
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        let maps = algebra
            .generators()
            .iter()
            .map(|g| Matrix::zeros(dims[g.target], dims[g.source]))
            .collect();
        Ok(Module::raw(algebra, dims, maps))
    }

    /// The indecomposable projective `e_v A`: its vertex-`w` space has the
    /// basis elements from `v` to `w`, and generators act by right
    /// multiplication.
    pub fn projective(algebra: Arc<Algebra>, v: usize) -> Result<Module> {
        if v >= algebra.vertex_count() {
            return Err(Error::VertexOutOfRange(v));
        }
        let n = algebra.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| algebra.basis_between(v, w).len()).collect();
        let maps = algebra
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let x = generator_element(&algebra, gi);
                algebra.right_mult_block(v, g.source, g.target, &x)
            })
            .collect();
        Ok(Module::raw(algebra, dims, maps))
    }

    /// The indecomposable injective with socle at `v`: the dual of the
    /// projective of the opposite algebra.
    pub fn injective(algebra: Arc<Algebra>, v: usize) -> Result<Module> {
        let op = Arc::new(algebra.opposite());
        let p = Module::projective(op, v)?;
        Ok(p.dual_over(algebra))
    }

    /// The regular module `A_A`.
    pub fn regular(algebra: Arc<Algebra>) -> Module {
        let parts: Vec<Module> = (0..algebra.vertex_count())
            .map(|v| Module::projective(algebra.clone(), v).expect("vertex in range"))
            .collect();
        Module::direct_sum(&algebra, &parts).0
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.inner.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }

    pub fn dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, generator: usize) -> &Matrix {
        &self.inner.maps[generator]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.inner.maps
    }

    /// Offset of the vertex-`v` block inside the total space.
    pub fn offset(&self, v: usize) -> usize {
        self.inner.dims[..v].iter().sum()
    }

    /// Matrix of a basis element acting from its source space to its target space.
    pub fn action(&self, b: usize) -> Matrix {
        let be = &self.algebra().basis()[b];
        let mut m = Matrix::identity(self.dims()[be.source]);
        for &g in &be.word {
            m = &self.inner.maps[g] * &m;
        }
        m
    }

    /// Action of an algebra element (basis coordinates) on the total space.
    pub fn element_action(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (b, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let be = &self.algebra().basis()[b];
            let block = self.action(b).scale(c);
            let (r0, c0) = (self.offset(be.target), self.offset(be.source));
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    *out.entry_mut(r0 + i, c0 + j) += block.get(i, j).clone();
                }
            }
        }
        out
    }

    /// Direct sum with canonical inclusions and projections.
    pub fn direct_sum(
        algebra: &Arc<Algebra>,
        parts: &[Module],
    ) -> (Module, Vec<Morphism>, Vec<Morphism>) {
        let n = algebra.vertex_count();
        let dims: Vec<usize> = (0..n)
            .map(|v| parts.iter().map(|p| p.dims()[v]).sum())
            .collect();
        let maps = (0..algebra.generators().len())
            .map(|g| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| p.map(g)).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        let sum = Module::raw(algebra.clone(), dims, maps);
        let mut incl = Vec::new();
        let mut proj = Vec::new();
        let mut before = vec![0usize; n];
        for p in parts {
            let mut ib = Vec::new();
            let mut pb = Vec::new();
            for v in 0..n {
                let mut i = Matrix::zeros(sum.dims()[v], p.dims()[v]);
                i.paste(before[v], 0, &Matrix::identity(p.dims()[v]));
                pb.push(i.transpose());
                ib.push(i);
                before[v] += p.dims()[v];
            }
            incl.push(Morphism::from_blocks(p.clone(), sum.clone(), ib));
            proj.push(Morphism::from_blocks(sum.clone(), p.clone(), pb));
        }
        (sum, incl, proj)
    }

    pub fn sum(&self, other: &Module) -> Module {
        Module::direct_sum(self.algebra(), &[self.clone(), other.clone()]).0
    }

    /// Direct sum of `k` copies.
    pub fn power(&self, k: usize) -> Module {
        Module::direct_sum(self.algebra(), &vec![self.clone(); k]).0
    }

    /// The submodule spanned per vertex by the columns of `spaces[v]`
    /// (assumed invariant; columns need not be independent).
    pub fn submodule(&self, spaces: &[Matrix]) -> (Module, Morphism) {
        let bases: Vec<Matrix> = spaces.iter().map(Matrix::column_space).collect();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = self
            .algebra()
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let img = self.map(gi) * &bases[g.source];
                bases[g.target]
                    .solve_matrix(&img)
                    .expect("subspace is invariant under the action")
            })
            .collect();
        let sub = Module::raw(self.algebra().clone(), dims, maps);
        let incl = Morphism::from_blocks(sub.clone(), self.clone(), bases);
        (sub, incl)
    }

    /// The quotient by the invariant subspaces spanned by `spaces[v]`.
    pub fn quotient(&self, spaces: &[Matrix]) -> (Module, Morphism) {
        let qs: Vec<(Matrix, Matrix)> = spaces.iter().map(Matrix::quotient_map).collect();
        let dims: Vec<usize> = qs.iter().map(|(q, _)| q.rows()).collect();
        let maps = self
            .algebra()
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, g)| &(&qs[g.target].0 * self.map(gi)) * &qs[g.source].1)
            .collect();
        let quo = Module::raw(self.algebra().clone(), dims, maps);
        let proj = Morphism::from_blocks(
            self.clone(),
            quo.clone(),
            qs.into_iter().map(|(q, _)| q).collect(),
        );
        (quo, proj)
    }

    /// Per-vertex spans of `rad M = M J`.
    pub fn radical_spaces(&self) -> Vec<Matrix> {
        let alg = self.algebra();
        (0..alg.vertex_count())
            .map(|v| {
                let mut cols: Vec<&Matrix> = Vec::new();
                let imgs: Vec<Matrix> = alg
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| g.target == v)
                    .map(|(gi, _)| self.map(gi).clone())
                    .collect();
                let empty = Matrix::zeros(self.dims()[v], 0);
                cols.push(&empty);
                cols.extend(imgs.iter());
                Matrix::hstack(&cols).column_space()
            })
            .collect()
    }

    pub fn radical(&self) -> (Module, Morphism) {
        self.submodule(&self.radical_spaces())
    }

    pub fn top(&self) -> (Module, Morphism) {
        self.quotient(&self.radical_spaces())
    }

    /// Per-vertex socle spaces: vectors killed by every generator.
    pub fn socle_spaces(&self) -> Vec<Matrix> {
        let alg = self.algebra();
        (0..alg.vertex_count())
            .map(|v| {
                let outs: Vec<&Matrix> = alg
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| g.source == v)
                    .map(|(gi, _)| self.map(gi))
                    .collect();
                if outs.is_empty() {
                    Matrix::identity(self.dims()[v])
                } else {
                    Matrix::vstack(&outs).nullspace()
                }
            })
            .collect()
    }

    pub fn socle(&self) -> (Module, Morphism) {
        self.submodule(&self.socle_spaces())
    }

    /// Dimension vectors of the radical layers `rad^i M / rad^(i+1) M`.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (rad, _) = cur.radical();
            layers.push(
                cur.dims()
                    .iter()
                    .zip(rad.dims())
                    .map(|(a, b)| a - b)
                    .collect(),
            );
            if rad.dim() == cur.dim() {
                break;
            }
            cur = rad;
        }
        layers
    }

    /// Composition-style label such as `2/3`, read off the radical layers.
    pub fn layer_label(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let alg = self.algebra();
        let sep = if alg.vertex_labels().iter().all(|l| l.chars().count() == 1) {
            ""
        } else {
            ","
        };
        self.radical_layers()
            .iter()
            .map(|layer| {
                let mut parts = Vec::new();
                for (v, &k) in layer.iter().enumerate() {
                    for _ in 0..k {
                        parts.push(alg.vertex_label(v).to_string());
                    }
                }
                parts.join(sep)
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn dimension_label(&self) -> String {
        let d: Vec<String> = self.dims().iter().map(usize::to_string).collect();
        format!("d({})", d.join(","))
    }

    /// The vector-space dual, a module over `target` (the opposite algebra
    /// of this module's algebra, up to equality).
    pub fn dual_over(&self, target: Arc<Algebra>) -> Module {
        let maps = self.maps().iter().map(Matrix::transpose).collect();
        Module::raw(target, self.dims().to_vec(), maps)
    }

    pub fn dual(&self) -> Module {
        self.dual_over(Arc::new(self.algebra().opposite()))
    }

    pub fn identity(&self) -> Morphism {
        let blocks = self.dims().iter().map(|&d| Matrix::identity(d)).collect();
        Morphism::from_blocks(self.clone(), self.clone(), blocks)
    }

    /// Text block: one `dims:` line, then one line per generator with the
    /// row-major entries of its matrix.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let d: Vec<String> = self.dims().iter().map(usize::to_string).collect();
        out.push_str(&format!("dims: {}\n", d.join(" ")));
        for (g, m) in self.algebra().generators().iter().zip(self.maps()) {
            let entries: Vec<String> = m.to_vec().iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("{}: {}\n", g.label, entries.join(" ")).replace(": \n", ":\n"));
        }
        out
    }

    pub fn parse_dump(algebra: Arc<Algebra>, text: &str) -> Result<Module> {
        let mut dims: Option<Vec<usize>> = None;
        let mut maps: Vec<Option<Matrix>> = vec![None; algebra.generators().len()];
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected `key: values`".into(),
            })?;
            let key = key.trim();
            if key == "dims" {
                let d: std::result::Result<Vec<usize>, _> =
                    value.split_whitespace().map(str::parse).collect();
                dims = Some(d.map_err(|_| Error::Parse {
                    line: line_no,
                    message: "dimensions must be non-negative integers".into(),
                })?);
                continue;
            }
            let d = dims.as_ref().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "`dims` must come first".into(),
            })?;
            let gi = algebra
                .generators()
                .iter()
                .position(|g| g.label == key)
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: format!("unknown generator `{key}`"),
                })?;
            let g = &algebra.generators()[gi];
            let (rows, cols) = (
                *d.get(g.target).unwrap_or(&0),
                *d.get(g.source).unwrap_or(&0),
            );
            let entries: Option<Vec<Q>> = value.split_whitespace().map(parse_rational).collect();
            let entries =
                entries
                    .filter(|e| e.len() == rows * cols)
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: format!("expected {} rational entries", rows * cols),
                    })?;
            maps[gi] = Some(Matrix::from_vec(rows, cols, entries));
        }
        let dims = dims.ok_or_else(|| Error::Parse {
            line: 0,
            message: "missing `dims` line".into(),
        })?;
        if dims.len() != algebra.vertex_count() {
            return Err(Error::InvalidModule("wrong number of dimensions".into()));
        }
        let maps = maps
            .into_iter()
            .zip(algebra.generators())
            .map(|(m, g)| m.unwrap_or_else(|| Matrix::zeros(dims[g.target], dims[g.source])))
            .collect();
        Module::new(algebra, dims, maps)
    }
}

/// The generator as an element of the algebra in basis coordinates.
pub(crate) fn generator_element(alg: &Algebra, g: usize) -> Vec<Q> {
    let idx = alg
        .basis()
        .iter()
        .position(|b| b.word == [g])
        .expect("every generator is a basis element");
    alg.unit_vector(idx)
}

/// A module homomorphism given by one matrix per vertex.
#[derive(Clone)]
pub struct Morphism {
    source: Module,
    target: Module,
    blocks: Vec<Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism{:?}->{:?} {:?}",
            self.source.dims(),
            self.target.dims(),
            self.blocks
        )
    }
}

impl Morphism {
    pub(crate) fn from_blocks(source: Module, target: Module, blocks: Vec<Matrix>) -> Morphism {
        debug_assert_eq!(blocks.len(), source.dims().len());
        Morphism {
            source,
            target,
            blocks,
        }
    }

    /// Build and check that the blocks intertwine the actions.
    pub fn new(source: Module, target: Module, blocks: Vec<Matrix>) -> Result<Morphism> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let n = source.dims().len();
        if blocks.len() != n
            || (0..n).any(|v| blocks[v].shape() != (target.dims()[v], source.dims()[v]))
        {
            return Err(Error::InvalidModule(
                "morphism blocks have the wrong shapes".into(),
            ));
        }
        let f = Morphism::from_blocks(source, target, blocks);
        if !f.is_homomorphism() {
            return Err(Error::InvalidModule(
                "blocks do not commute with the action".into(),
            ));
        }
        Ok(f)
    }

    pub fn zero(source: &Module, target: &Module) -> Morphism {
        let blocks = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| Matrix::zeros(t, s))
            .collect();
        Morphism::from_blocks(source.clone(), target.clone(), blocks)
    }

    /// Assemble from a matrix on total spaces (block-diagonal by vertex).
    pub fn from_total(source: &Module, target: &Module, m: &Matrix) -> Morphism {
        let blocks = (0..source.dims().len())
            .map(|v| {
                m.submatrix(
                    target.offset(v),
                    source.offset(v),
                    target.dims()[v],
                    source.dims()[v],
                )
            })
            .collect();
        Morphism::from_blocks(source.clone(), target.clone(), blocks)
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn is_homomorphism(&self) -> bool {
        self.source
            .algebra()
            .generators()
            .iter()
            .enumerate()
            .all(|(gi, g)| {
                &self.blocks[g.target] * self.source.map(gi)
                    == self.target.map(gi) * &self.blocks[g.source]
            })
    }

    /// Matrix on total spaces.
    pub fn total(&self) -> Matrix {
        let refs: Vec<&Matrix> = self.blocks.iter().collect();
        Matrix::block_diag(&refs)
    }

    /// Entries of all blocks, concatenated; a coordinate vector in the space
    /// of all vertexwise linear maps.
    pub fn flatten(&self) -> Vec<Q> {
        self.blocks.iter().flat_map(|b| b.to_vec()).collect()
    }

    pub fn unflatten(source: &Module, target: &Module, v: &[Q]) -> Morphism {
        let mut pos = 0;
        let blocks = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| {
                let b = Matrix::from_vec(t, s, v[pos..pos + s * t].to_vec());
                pos += s * t;
                b
            })
            .collect();
        Morphism::from_blocks(source.clone(), target.clone(), blocks)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(f, g)| g * f)
            .collect();
        Morphism::from_blocks(self.source.clone(), other.target.clone(), blocks)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(f, g)| f + g)
            .collect();
        Morphism::from_blocks(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: &Q) -> Morphism {
        let blocks = self.blocks.iter().map(|f| f.scale(c)).collect();
        Morphism::from_blocks(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn neg(&self) -> Morphism {
        let blocks = self.blocks.iter().map(|f| -f).collect();
        Morphism::from_blocks(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims() == self.target.dims() && self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let blocks: Option<Vec<Matrix>> = self.blocks.iter().map(Matrix::inverse).collect();
        Some(Morphism::from_blocks(
            self.target.clone(),
            self.source.clone(),
            blocks?,
        ))
    }

    pub fn kernel(&self) -> (Module, Morphism) {
        let spaces: Vec<Matrix> = self.blocks.iter().map(Matrix::nullspace).collect();
        self.source.submodule(&spaces)
    }

    pub fn cokernel(&self) -> (Module, Morphism) {
        self.target.quotient(&self.blocks)
    }

    /// Image with its inclusion into the target and the corestriction
    /// `source -> image`.
    pub fn image(&self) -> (Module, Morphism, Morphism) {
        let (im, incl) = self.target.submodule(&self.blocks);
        let blocks = self
            .blocks
            .iter()
            .zip(incl.blocks())
            .map(|(f, i)| i.solve_matrix(f).expect("image contains the columns"))
            .collect();
        let coim = Morphism::from_blocks(self.source.clone(), im.clone(), blocks);
        (im, incl, coim)
    }

    /// The morphism `(f_1, ..., f_k): X_1 ⊕ ... ⊕ X_k -> Y` out of a given sum.
    pub fn from_columns(sum: &Module, parts: &[Morphism], target: &Module) -> Morphism {
        let blocks = (0..target.dims().len())
            .map(|v| {
                let refs: Vec<&Matrix> = parts.iter().map(|p| p.block(v)).collect();
                let empty = Matrix::zeros(target.dims()[v], 0);
                if refs.is_empty() {
                    empty
                } else {
                    Matrix::hstack(&refs)
                }
            })
            .collect();
        Morphism::from_blocks(sum.clone(), target.clone(), blocks)
    }

    /// The morphism `(f_1; ...; f_k): X -> Y_1 ⊕ ... ⊕ Y_k` into a given sum.
    pub fn from_rows(source: &Module, parts: &[Morphism], sum: &Module) -> Morphism {
        let blocks = (0..source.dims().len())
            .map(|v| {
                let refs: Vec<&Matrix> = parts.iter().map(|p| p.block(v)).collect();
                if refs.is_empty() {
                    Matrix::zeros(0, source.dims()[v])
                } else {
                    Matrix::vstack(&refs)
                }
            })
            .collect();
        Morphism::from_blocks(source.clone(), sum.clone(), blocks)
    }

    /// The unique `g` with `g ∘ epi = self`, if `self` kills the kernel of
    /// the surjection `epi`.
    pub fn factor_through_epi(&self, epi: &Morphism) -> Option<Morphism> {
        let blocks: Option<Vec<Matrix>> = self
            .blocks
            .iter()
            .zip(epi.blocks())
            .map(|(h, e)| {
                e.transpose()
                    .solve_matrix(&h.transpose())
                    .map(|g| g.transpose())
            })
            .collect();
        Some(Morphism::from_blocks(
            epi.target.clone(),
            self.target.clone(),
            blocks?,
        ))
    }

    /// The unique `g` with `mono ∘ g = self`, if the image of `self` lies in
    /// the image of the injection `mono`.
    pub fn factor_through_mono(&self, mono: &Morphism) -> Option<Morphism> {
        let blocks: Option<Vec<Matrix>> = self
            .blocks
            .iter()
            .zip(mono.blocks())
            .map(|(h, i)| i.solve_matrix(h))
            .collect();
        Some(Morphism::from_blocks(
            self.source.clone(),
            mono.source.clone(),
            blocks?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn lambda() -> Arc<Algebra> {
        Arc::new(
            Algebra::parse("vertices: 3\narrow: a 1 2\narrow: b 2 3\nrelation: a*b\n").unwrap(),
        )
    }

    #[test]
    fn projectives_and_injectives_of_the_example() {
        let alg = lambda();
        let p: Vec<Module> = (0..3)
            .map(|v| Module::projective(alg.clone(), v).unwrap())
            .collect();
        assert_eq!(p[0].dims(), [1, 1, 0]);
        assert_eq!(p[1].dims(), [0, 1, 1]);
        assert_eq!(p[2].dims(), [0, 0, 1]);
        assert_eq!(p[0].layer_label(), "1/2");
        let i: Vec<Module> = (0..3)
            .map(|v| Module::injective(alg.clone(), v).unwrap())
            .collect();
        assert_eq!(i[0].dims(), [1, 0, 0]);
        assert_eq!(i[1].dims(), [1, 1, 0]);
        assert_eq!(i[2].dims(), [0, 1, 1]);
        assert_eq!(i[2].layer_label(), "2/3");
        for (v, m) in i.iter().enumerate() {
            let (soc, _) = m.socle();
            let mut expect = vec![0; 3];
            expect[v] = 1;
            assert_eq!(soc.dims(), expect);
        }
        for (v, m) in p.iter().enumerate() {
            let (top, _) = m.top();
            let mut expect = vec![0; 3];
            expect[v] = 1;
            assert_eq!(top.dims(), expect);
        }
    }

    #[test]
    fn invalid_action_is_rejected() {
        let alg = lambda();
        let one = Matrix::from_i64(1, 1, &[1]);
        let err = Module::new(alg, vec![1, 1, 1], vec![one.clone(), one]).unwrap_err();
        assert!(matches!(err, Error::InvalidModule(_)));
    }

    #[test]
    fn kernel_cokernel_image() {
        let alg = lambda();
        let p2 = Module::projective(alg.clone(), 1).unwrap();
        let s2 = Module::simple(alg.clone(), 1).unwrap();
        let f = Morphism::new(
            p2.clone(),
            s2.clone(),
            vec![
                Matrix::zeros(0, 0),
                Matrix::from_i64(1, 1, &[1]),
                Matrix::zeros(0, 1),
            ],
        )
        .unwrap();
        let (k, incl) = f.kernel();
        assert_eq!(k.dims(), [0, 0, 1]);
        assert!(incl.then(&f).is_zero());
        let (c, _) = f.cokernel();
        assert!(c.is_zero());
        let (im, i, co) = f.image();
        assert_eq!(im.dims(), [0, 1, 0]);
        let back = co.then(&i);
        assert_eq!(back.flatten(), f.flatten());
        assert_eq!(k.dim() + im.dim(), p2.dim());
    }

    #[test]
    fn dump_round_trip() {
        let alg = lambda();
        let m = Module::projective(alg.clone(), 0)
            .unwrap()
            .sum(&Module::projective(alg.clone(), 1).unwrap());
        let text = m.dump();
        let back = Module::parse_dump(alg, &text).unwrap();
        assert_eq!(back.dims(), m.dims());
        assert_eq!(back.maps(), m.maps());
    }

    #[test]
    fn element_action_of_unit_is_identity() {
        let alg = lambda();
        let m = Module::regular(alg.clone());
        assert_eq!(m.dim(), 5);
        assert_eq!(m.element_action(&alg.one()), Matrix::identity(5));
        let _ = q(0);
    }
}
