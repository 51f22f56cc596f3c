//! Finite-dimensional algebras: path algebras of quivers modulo admissible
//! relations, and abstract algebras given by structure constants.
//!
//! Conventions. Paths compose left to right: `a*b` traverses `a` first and
//! then `b`, which matches the action on right modules. A basis element `x`
//! with `e_s x e_t = x` has source `s` and target `t`; on a right module it
//! maps the vertex-`s` space into the vertex-`t` space. The first
//! `vertex_count` basis elements are always the vertex idempotents.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, q, Matrix, Q};

const MAX_PATHS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize) -> Self {
        Quiver {
            vertex_count,
            arrows: Vec::new(),
        }
    }

    /// Add an arrow between 0-based vertices.
    pub fn arrow(mut self, label: &str, source: usize, target: usize) -> Self {
        self.arrows.push(Arrow {
            label: label.to_string(),
            source,
            target,
        });
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertex_count == 0 {
            return Err(Error::InvalidAlgebra(
                "quiver needs at least one vertex".into(),
            ));
        }
        let mut seen = HashMap::new();
        for a in &self.arrows {
            if a.source >= self.vertex_count || a.target >= self.vertex_count {
                return Err(Error::InvalidAlgebra(format!(
                    "arrow `{}` has an endpoint out of range",
                    a.label
                )));
            }
            if seen.insert(a.label.clone(), ()).is_some() {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate arrow label `{}`",
                    a.label
                )));
            }
        }
        Ok(())
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    fn is_acyclic(&self) -> bool {
        let n = self.vertex_count;
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }
}

/// A path as a sequence of arrow indices; the trivial path at `v` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    pub fn label(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.source + 1)
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A formal rational combination of parallel paths.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Q, Path)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(quiver: Quiver) -> Self {
        Presentation {
            quiver,
            relations: Vec::new(),
        }
    }

    /// Add a relation given in the text syntax, e.g. `a*b - 2 c*d`.
    pub fn relation(mut self, text: &str) -> Result<Self> {
        let rel = parse_relation(&self.quiver, text, 0)?;
        self.relations.push(rel);
        Ok(self)
    }

    /// Parse the line-oriented algebra file format:
    ///
    /// ```text
    /// vertices: 3
    /// arrow: a 1 2
    /// arrow: b 2 3
    /// relation: a*b
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut quiver: Option<Quiver> = None;
        let mut relation_lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once(':') else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `key: value`, got `{line}`"),
                });
            };
            let value = value.trim();
            match key.trim() {
                "vertices" => {
                    if quiver.is_some() {
                        return Err(parse_err(line_no, "duplicate `vertices` line"));
                    }
                    let n: usize = value.parse().map_err(|_| {
                        parse_err(line_no, "vertex count must be a positive integer")
                    })?;
                    if n == 0 {
                        return Err(parse_err(line_no, "vertex count must be positive"));
                    }
                    quiver = Some(Quiver::new(n));
                }
                "arrow" => {
                    let q = quiver
                        .as_mut()
                        .ok_or_else(|| parse_err(line_no, "`arrow` before `vertices`"))?;
                    let parts: Vec<&str> = value.split_whitespace().collect();
                    if parts.len() != 3 {
                        return Err(parse_err(line_no, "expected `arrow: LABEL SOURCE TARGET`"));
                    }
                    let label = parts[0];
                    if label.contains('*') || parse_rational(label).is_some() {
                        return Err(parse_err(
                            line_no,
                            "arrow labels must not be numbers or contain `*`",
                        ));
                    }
                    let s: usize = parts[1]
                        .parse()
                        .map_err(|_| parse_err(line_no, "source must be a vertex number"))?;
                    let t: usize = parts[2]
                        .parse()
                        .map_err(|_| parse_err(line_no, "target must be a vertex number"))?;
                    if s == 0 || t == 0 || s > q.vertex_count || t > q.vertex_count {
                        return Err(parse_err(
                            line_no,
                            "vertex numbers run from 1 to `vertices`",
                        ));
                    }
                    if q.arrow_index(label).is_some() {
                        return Err(parse_err(line_no, &format!("duplicate arrow `{label}`")));
                    }
                    q.arrows.push(Arrow {
                        label: label.to_string(),
                        source: s - 1,
                        target: t - 1,
                    });
                }
                "relation" => relation_lines.push((line_no, value.to_string())),
                other => {
                    return Err(parse_err(line_no, &format!("unknown key `{other}`")));
                }
            }
        }
        let quiver = quiver.ok_or_else(|| parse_err(0, "missing `vertices` line"))?;
        let mut relations = Vec::new();
        for (line_no, text) in relation_lines {
            relations.push(parse_relation(&quiver, &text, line_no)?);
        }
        Ok(Presentation { quiver, relations })
    }
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn parse_path(quiver: &Quiver, word: &str, line: usize) -> Result<Path> {
    let mut arrows = Vec::new();
    for label in word.split('*') {
        let label = label.trim();
        let a = quiver
            .arrow_index(label)
            .ok_or_else(|| parse_err(line, &format!("unknown arrow `{label}`")))?;
        if let Some(&prev) = arrows.last() {
            let prev: usize = prev;
            if quiver.arrows[prev].target != quiver.arrows[a].source {
                return Err(parse_err(line, &format!("path `{word}` is not composable")));
            }
        }
        arrows.push(a);
    }
    Ok(Path {
        source: quiver.arrows[arrows[0]].source,
        target: quiver.arrows[*arrows.last().unwrap()].target,
        arrows,
    })
}

fn parse_relation(quiver: &Quiver, text: &str, line: usize) -> Result<Relation> {
    // split into signed chunks: a sign starts a new term
    let mut spaced = String::new();
    for ch in text.chars() {
        if ch == '+' || ch == '-' {
            spaced.push(' ');
            spaced.push(ch);
            spaced.push(' ');
        } else {
            spaced.push(ch);
        }
    }
    let tokens: Vec<&str> = spaced.split_whitespace().collect();
    let mut terms: Vec<(Q, Path)> = Vec::new();
    let mut sign = Q::one();
    let mut coeff: Option<Q> = None;
    let mut expecting_term = true;
    for tok in tokens {
        match tok {
            "+" | "-" => {
                if coeff.is_some() {
                    return Err(parse_err(line, "dangling coefficient"));
                }
                if tok == "-" {
                    sign = -sign;
                }
                expecting_term = true;
            }
            _ => {
                if let Some(c) = parse_rational(tok) {
                    if coeff.is_some() {
                        return Err(parse_err(line, "two coefficients in a row"));
                    }
                    coeff = Some(c);
                } else {
                    if !expecting_term && coeff.is_none() {
                        return Err(parse_err(line, "missing `+` or `-` between terms"));
                    }
                    let path = parse_path(quiver, tok, line)?;
                    let c = coeff.take().unwrap_or_else(Q::one) * &sign;
                    terms.push((c, path));
                    sign = Q::one();
                    expecting_term = false;
                }
            }
        }
    }
    if coeff.is_some() || terms.is_empty() {
        return Err(parse_err(line, "relation must end with a path"));
    }
    let (s, t) = (terms[0].1.source, terms[0].1.target);
    if terms.iter().any(|(_, p)| p.source != s || p.target != t) {
        return Err(parse_err(line, "paths in a relation must be parallel"));
    }
    Ok(Relation { terms })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Path,
    Abstract,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub source: usize,
    pub target: usize,
    /// Word in the algebra's generators whose product is this element.
    pub word: Vec<usize>,
}

/// A finite-dimensional algebra with a basis adapted to a complete set of
/// orthogonal idempotents.
///
/// `generators` play the role of arrows: every module stores one matrix per
/// generator, and each basis element acts as the product along its word.
/// For a path algebra the generators are the quiver arrows; for an abstract
/// algebra they are the basis elements spanning the radical.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    kind: AlgebraKind,
    vertex_count: usize,
    generators: Vec<Arrow>,
    basis: Vec<BasisElement>,
    /// `products[i][j]` = sparse coordinates of `basis[i] * basis[j]`.
    products: Vec<Vec<Vec<(usize, Q)>>>,
    vertex_labels: Vec<String>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("kind", &self.kind)
            .field("vertices", &self.vertex_count)
            .field(
                "basis",
                &self
                    .basis
                    .iter()
                    .map(|b| b.label.as_str())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl Algebra {
    /// Build `kQ/I` with a basis of residue classes of paths.
    pub fn from_presentation(pres: &Presentation) -> Result<Algebra> {
        let quiver = &pres.quiver;
        quiver.validate()?;
        for r in &pres.relations {
            if r.terms.iter().any(|(_, p)| p.len() < 2) {
                return Err(Error::NonAdmissible(
                    "every path in a relation must have length at least 2".into(),
                ));
            }
        }
        let acyclic = quiver.is_acyclic();
        if !acyclic && pres.relations.is_empty() {
            return Err(Error::NonAdmissible(
                "quiver has an oriented cycle and no relations".into(),
            ));
        }
        let max_rel = pres
            .relations
            .iter()
            .flat_map(|r| r.terms.iter().map(|(_, p)| p.len()))
            .max()
            .unwrap_or(2);
        let mut bound = quiver.vertex_count * max_rel * 4;
        if acyclic {
            bound = bound.max(quiver.vertex_count);
        }

        // paths of length <= bound, grouped by length
        let mut paths: Vec<Path> = (0..quiver.vertex_count).map(Path::trivial).collect();
        let mut frontier: Vec<Path> = paths.clone();
        for _ in 0..bound {
            let mut next = Vec::new();
            for p in &frontier {
                for (ai, a) in quiver.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path {
                            source: p.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            paths.extend(next.iter().cloned());
            if paths.len() > MAX_PATHS {
                return Err(Error::NonAdmissible(format!(
                    "more than {MAX_PATHS} paths below the nilpotency cutoff {bound}"
                )));
            }
            frontier = next;
        }
        let index: HashMap<Path, usize> = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let npaths = paths.len();

        // ideal generators u*r*v truncated at length `bound`
        let mut gens: Vec<Vec<Q>> = Vec::new();
        for r in &pres.relations {
            let (rs, rt) = (r.terms[0].1.source, r.terms[0].1.target);
            let min_len = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
            for u in paths.iter().filter(|u| u.target == rs) {
                for v in paths.iter().filter(|v| v.source == rt) {
                    if u.len() + v.len() + min_len > bound {
                        continue;
                    }
                    let mut row = vec![Q::zero(); npaths];
                    let mut any = false;
                    for (c, p) in &r.terms {
                        let w = u.concat(p).and_then(|w| w.concat(v)).expect("composable");
                        if let Some(&k) = index.get(&w) {
                            row[k] += c;
                            any = true;
                        }
                    }
                    if any {
                        gens.push(row);
                    }
                }
            }
        }

        // smallest L with J^L inside I + J^(L+1)
        let max_len = paths.iter().map(Path::len).max().unwrap_or(0);
        let mut nil_len = None;
        for l in 1..=max_len + 1 {
            let longer: Vec<usize> = (0..npaths).filter(|&i| paths[i].len() > l).collect();
            let exact: Vec<usize> = (0..npaths).filter(|&i| paths[i].len() == l).collect();
            if exact.is_empty() {
                nil_len = Some(l);
                break;
            }
            let mut span: Vec<Vec<Q>> = gens.clone();
            for &i in &longer {
                span.push(unit(npaths, i));
            }
            let base_rank = crate::linalg::rank_of(&span, npaths);
            for &i in &exact {
                span.push(unit(npaths, i));
            }
            if crate::linalg::rank_of(&span, npaths) == base_rank {
                nil_len = Some(l);
                break;
            }
        }
        let Some(nil_len) = nil_len else {
            return Err(Error::NonAdmissible(format!(
                "arrow ideal is not nilpotent modulo the relations within cutoff {bound}"
            )));
        };
        if !acyclic && nil_len > bound {
            return Err(Error::NonAdmissible(format!(
                "arrow ideal is not nilpotent modulo the relations within cutoff {bound}"
            )));
        }

        // row-reduce the ideal I + J^L with long (then late) paths as pivots
        let mut span = gens;
        for i in 0..npaths {
            if paths[i].len() >= nil_len {
                span.push(unit(npaths, i));
            }
        }
        let mut order: Vec<usize> = (0..npaths).collect();
        order.sort_by(|&a, &b| paths[b].len().cmp(&paths[a].len()).then(b.cmp(&a)));
        let m = Matrix::from_fn(span.len(), npaths, |r, c| span[r][order[c]].clone());
        let (red, pivots) = m.rref();
        let pivot_paths: Vec<usize> = pivots.iter().map(|&c| order[c]).collect();
        let basis_paths: Vec<usize> = (0..npaths).filter(|i| !pivot_paths.contains(i)).collect();
        let basis_pos: HashMap<usize, usize> = basis_paths
            .iter()
            .enumerate()
            .map(|(k, &p)| (p, k))
            .collect();

        // normal form of every path in the basis of surviving paths
        let mut normal: Vec<Vec<(usize, Q)>> = vec![Vec::new(); npaths];
        for &p in &basis_paths {
            normal[p] = vec![(basis_pos[&p], Q::one())];
        }
        for (row, &pc) in pivots.iter().enumerate() {
            let p = order[pc];
            let mut nf = Vec::new();
            for c in 0..npaths {
                let path = order[c];
                if let Some(&k) = basis_pos.get(&path) {
                    let v = red.get(row, c);
                    if !v.is_zero() {
                        nf.push((k, -v.clone()));
                    }
                }
            }
            normal[p] = nf;
        }

        let basis: Vec<BasisElement> = basis_paths
            .iter()
            .map(|&p| BasisElement {
                label: paths[p].label(quiver),
                source: paths[p].source,
                target: paths[p].target,
                word: paths[p].arrows.clone(),
            })
            .collect();
        let dim = basis.len();
        let mut products = vec![vec![Vec::new(); dim]; dim];
        for (i, &pi) in basis_paths.iter().enumerate() {
            for (j, &pj) in basis_paths.iter().enumerate() {
                if let Some(w) = paths[pi].concat(&paths[pj]) {
                    products[i][j] = match index.get(&w) {
                        Some(&k) => normal[k].clone(),
                        None => Vec::new(), // beyond the cutoff, hence in J^L
                    };
                }
            }
        }
        let alg = Algebra {
            kind: AlgebraKind::Path,
            vertex_count: quiver.vertex_count,
            generators: quiver.arrows.clone(),
            basis,
            products,
            vertex_labels: (1..=quiver.vertex_count).map(|v| v.to_string()).collect(),
        };
        debug_assert!(alg.is_associative());
        Ok(alg)
    }

    /// Parse and build in one step.
    pub fn parse(text: &str) -> Result<Algebra> {
        Algebra::from_presentation(&Presentation::parse(text)?)
    }

    /// An algebra given by structure constants.
    ///
    /// `elements[..vertex_count]` must be the vertex idempotents; the
    /// remaining elements must span a nilpotent ideal (the radical). They
    /// become the generators.
    pub fn from_structure_constants(
        vertex_labels: Vec<String>,
        elements: Vec<(String, usize, usize)>,
        products: Vec<Vec<Vec<(usize, Q)>>>,
    ) -> Result<Algebra> {
        let n = vertex_labels.len();
        let dim = elements.len();
        if dim < n || products.len() != dim || products.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidAlgebra(
                "structure constant table has the wrong shape".into(),
            ));
        }
        for (i, (_, s, t)) in elements.iter().enumerate().take(n) {
            if *s != i || *t != i {
                return Err(Error::InvalidAlgebra(
                    "leading elements must be the idempotents".into(),
                ));
            }
        }
        let generators: Vec<Arrow> = elements[n..]
            .iter()
            .map(|(label, s, t)| Arrow {
                label: label.clone(),
                source: *s,
                target: *t,
            })
            .collect();
        let basis = elements
            .iter()
            .enumerate()
            .map(|(i, (label, s, t))| BasisElement {
                label: label.clone(),
                source: *s,
                target: *t,
                word: if i < n { Vec::new() } else { vec![i - n] },
            })
            .collect();
        let alg = Algebra {
            kind: AlgebraKind::Abstract,
            vertex_count: n,
            generators,
            basis,
            products,
            vertex_labels,
        };
        if !alg.is_associative() {
            return Err(Error::InvalidAlgebra(
                "structure constants are not associative".into(),
            ));
        }
        if !alg.idempotents_are_unit() {
            return Err(Error::InvalidAlgebra(
                "idempotents do not act as a unit".into(),
            ));
        }
        if !alg.radical_is_nilpotent() {
            return Err(Error::InvalidAlgebra(
                "non-idempotent elements do not span a nilpotent ideal".into(),
            ));
        }
        Ok(alg)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn generators(&self) -> &[Arrow] {
        &self.generators
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.products[i][j]
    }

    /// Basis indices `x` with `e_s x e_t = x`, in basis order.
    pub fn basis_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == s && self.basis[i].target == t)
            .collect()
    }

    /// Multiply two elements given in basis coordinates.
    pub fn multiply(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.products[i][j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Q> {
        unit(self.dim(), i)
    }

    pub fn one(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for x in v.iter_mut().take(self.vertex_count) {
            *x = Q::one();
        }
        v
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = sparse_to_dense(&self.products[i][j], d);
                for k in 0..d {
                    let ek = unit(d, k);
                    let left = self.multiply(&ij, &ek);
                    let jk = sparse_to_dense(&self.products[j][k], d);
                    let right = self.multiply(&unit(d, i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn idempotents_are_unit(&self) -> bool {
        let one = self.one();
        (0..self.dim()).all(|i| {
            let e = unit(self.dim(), i);
            self.multiply(&one, &e) == e && self.multiply(&e, &one) == e
        })
    }

    fn radical_is_nilpotent(&self) -> bool {
        // products of dim+1 radical elements vanish iff the radical power does
        let d = self.dim();
        let n = self.vertex_count;
        let mut layer: Vec<Vec<Q>> = (n..d).map(|i| unit(d, i)).collect();
        for _ in 0..=d {
            if layer.iter().all(|v| v.iter().all(Zero::is_zero)) {
                return true;
            }
            let mut next = Vec::new();
            for v in &layer {
                for i in n..d {
                    next.push(self.multiply(v, &unit(d, i)));
                }
            }
            let m = Matrix::from_columns(d, &next);
            layer = m.column_space().columns();
        }
        false
    }

    /// `dim e_i A e_j` for all vertex pairs.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut c = vec![vec![0; n]; n];
        for b in &self.basis {
            c[b.source][b.target] += 1;
        }
        c
    }

    /// The opposite algebra: same basis, reversed sources, targets, words
    /// and products.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim();
        let mut products = vec![vec![Vec::new(); d]; d];
        for (i, row) in products.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = self.products[j][i].clone();
            }
        }
        Algebra {
            kind: self.kind,
            vertex_count: self.vertex_count,
            generators: self
                .generators
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
            basis: self
                .basis
                .iter()
                .map(|b| BasisElement {
                    label: b.label.clone(),
                    source: b.target,
                    target: b.source,
                    word: b.word.iter().rev().copied().collect(),
                })
                .collect(),
            products,
            vertex_labels: self.vertex_labels.clone(),
        }
    }

    /// Matrix of right multiplication by `x` restricted to `e_s A`, viewed
    /// from the `e_s A e_t` block to the `e_s A e_u` block.
    pub(crate) fn right_mult_block(&self, s: usize, t: usize, u: usize, x: &[Q]) -> Matrix {
        let from = self.basis_between(s, t);
        let to = self.basis_between(s, u);
        let mut m = Matrix::zeros(to.len(), from.len());
        for (c, &bi) in from.iter().enumerate() {
            let prod = self.multiply(&unit(self.dim(), bi), x);
            for (r, &bj) in to.iter().enumerate() {
                m.set(r, c, prod[bj].clone());
            }
        }
        m
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = q(1);
    v
}

fn sparse_to_dense(s: &[(usize, Q)], d: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    for (k, c) in s {
        v[*k] += c;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "vertices: 3\narrow: a 1 2\narrow: b 2 3\nrelation: a*b\n";

    #[test]
    fn example_algebra_has_dimension_five() {
        let alg = Algebra::parse(EXAMPLE).unwrap();
        assert_eq!(alg.dim(), 5);
        let labels: Vec<&str> = alg.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["e1", "e2", "e3", "a", "b"]);
        assert!(alg.is_associative());
    }

    #[test]
    fn base_field() {
        let alg = Algebra::from_presentation(&Presentation::new(Quiver::new(1))).unwrap();
        assert_eq!(alg.dim(), 1);
    }

    #[test]
    fn a3_without_relations_counts_paths() {
        let q = Quiver::new(3).arrow("a", 0, 1).arrow("b", 1, 2);
        let alg = Algebra::from_presentation(&Presentation::new(q.clone())).unwrap();
        // brute force path count: trivial paths plus all arrow chains
        let mut count = q.vertex_count;
        let mut frontier: Vec<usize> = (0..q.arrows.len()).collect();
        while !frontier.is_empty() {
            count += frontier.len();
            frontier = frontier
                .iter()
                .flat_map(|&a| {
                    let t = q.arrows[a].target;
                    let arrows = &q.arrows;
                    (0..arrows.len()).filter(move |&b| arrows[b].source == t)
                })
                .collect();
        }
        assert_eq!(count, 6);
        assert_eq!(alg.dim(), count);
    }

    #[test]
    fn rejects_short_relations_and_free_cycles() {
        let qv = Quiver::new(1).arrow("x", 0, 0);
        assert!(matches!(
            Algebra::from_presentation(&Presentation::new(qv.clone())),
            Err(Error::NonAdmissible(_))
        ));
        let ok = Presentation::new(qv).relation("x*x").unwrap();
        assert_eq!(Algebra::from_presentation(&ok).unwrap().dim(), 2);

        let q2 = Quiver::new(2).arrow("a", 0, 1).arrow("b", 0, 1);
        let bad = Presentation {
            quiver: q2.clone(),
            relations: vec![Relation {
                terms: vec![(
                    q(1),
                    Path {
                        source: 0,
                        target: 1,
                        arrows: vec![0],
                    },
                )],
            }],
        };
        assert!(matches!(
            Algebra::from_presentation(&bad),
            Err(Error::NonAdmissible(_))
        ));
    }

    #[test]
    fn commutativity_relation_on_square() {
        let text = "vertices: 4\narrow: a 1 2\narrow: b 2 4\narrow: c 1 3\narrow: d 3 4\nrelation: a*b - c*d\n";
        let alg = Algebra::parse(text).unwrap();
        // 4 idempotents, 4 arrows, one surviving length-2 path
        assert_eq!(alg.dim(), 9);
        let text2 = "vertices: 4\narrow: a 1 2\narrow: b 2 4\narrow: c 1 3\narrow: d 3 4\nrelation: 3/2 a*b - 1 c*d\n";
        assert_eq!(Algebra::parse(text2).unwrap().dim(), 9);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = Presentation::parse("vertices: 2\narrow: a 1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Presentation::parse("vertices: 2\narrow: a 1 2\nrelation: a*a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(Presentation::parse("arrow: a 1 2").is_err());
    }

    #[test]
    fn opposite_twice_is_identity() {
        let alg = Algebra::parse(EXAMPLE).unwrap();
        assert_eq!(alg.opposite().opposite(), alg);
        assert!(alg.opposite().is_associative());
    }
}
