//! Exceptional objects and collections in `Perf A`, graded Hom spaces,
//! (block) mutations and endomorphism algebras of strong collections.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, Elem};
use crate::complex::{cone, BlockMatrix, PerfectComplex, PerfectMap};
use crate::field::Field;
use crate::linalg::{extend_basis, solve, Matrix};
use crate::module::{piece_coords, piece_elem, ModuleError, RightModule};
use crate::quiver::{classify_underlying, DynkinReport, Quiver};
use crate::resolution::min_resolution;

/// Graded dimension table `i ↦ dim Hom^i`, zero entries omitted.
pub type GradedDims = BTreeMap<i32, usize>;

/// Render a graded table as `0:2,1:1`, or `0` when empty.
pub fn format_graded(t: &GradedDims) -> String {
    if t.is_empty() {
        return String::from("0");
    }
    let parts: Vec<String> = t.iter().map(|(d, n)| format!("{d}:{n}")).collect();
    parts.join(",")
}

/// Parse `0:2,1:1`; `0` or empty means the zero table.
pub fn parse_graded(s: &str) -> Option<GradedDims> {
    let s = s.trim();
    let mut out = BTreeMap::new();
    if s.is_empty() || s == "0" {
        return Some(out);
    }
    for part in s.split(',') {
        let (d, n) = part.split_once(':')?;
        let n: usize = n.trim().parse().ok()?;
        if n > 0 {
            out.insert(d.trim().parse().ok()?, n);
        }
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CollectionError {
    #[error("Hom^*({0}, {1}) lives in several degrees; mixed-degree Hom not supported")]
    MixedDegree(String, String),
    #[error("position {0} out of range")]
    OutOfRange(usize),
    #[error("positions {0}..{1} do not form a block")]
    NotBlock(usize, usize),
    #[error("collection is not strong")]
    NotStrong,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
}

/// Layout of `Hom^n(X, Y) = ⊕_i ⊕_{r,c} A_{Y^{i+n}_r, X^i_c}`.
struct Layout {
    /// `(i, r, c, offset, len)`
    blocks: Vec<(i32, usize, usize, usize, usize)>,
    index: BTreeMap<(i32, usize, usize), usize>,
    dim: usize,
}

fn layout<F: Field>(a: &Algebra<F>, x: &PerfectComplex<F>, y: &PerfectComplex<F>, n: i32) -> Layout {
    let mut blocks = Vec::new();
    let mut index = BTreeMap::new();
    let mut off = 0;
    for i in x.degrees() {
        let (xs, ys) = (x.term(i), y.term(i + n));
        for (r, &w) in ys.iter().enumerate() {
            for (c, &u) in xs.iter().enumerate() {
                let len = a.piece_dim(w, u);
                index.insert((i, r, c), blocks.len());
                blocks.push((i, r, c, off, len));
                off += len;
            }
        }
    }
    Layout { blocks, index, dim: off }
}

/// The total Hom complex `Hom^•(X, Y)` with `D f = d_Y f - (-1)^n f d_X`.
pub struct HomComplex<'a, F: Field> {
    a: &'a Algebra<F>,
    x: &'a PerfectComplex<F>,
    y: &'a PerfectComplex<F>,
    layouts: BTreeMap<i32, Layout>,
}

impl<'a, F: Field> HomComplex<'a, F> {
    pub fn new(a: &'a Algebra<F>, x: &'a PerfectComplex<F>, y: &'a PerfectComplex<F>) -> Self {
        HomComplex { a, x, y, layouts: BTreeMap::new() }
    }

    /// Degrees where `Hom^n` can be nonzero.
    pub fn degree_range(&self) -> core::ops::RangeInclusive<i32> {
        if self.x.is_zero() || self.y.is_zero() {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        (self.y.lo() - self.x.hi())..=(self.y.hi() - self.x.lo())
    }

    fn layout(&mut self, n: i32) -> &Layout {
        let (a, x, y) = (self.a, self.x, self.y);
        self.layouts.entry(n).or_insert_with(|| layout(a, x, y, n))
    }

    pub fn dim(&mut self, n: i32) -> usize {
        self.layout(n).dim
    }

    /// `D^n: Hom^n -> Hom^{n+1}`.
    pub fn differential(&mut self, n: i32) -> Matrix<F> {
        let (a, x, y) = (self.a, self.x, self.y);
        self.layout(n);
        self.layout(n + 1);
        let src = &self.layouts[&n];
        let dst = &self.layouts[&(n + 1)];
        let mut m = Matrix::<F>::zeros(dst.dim, src.dim);
        let sign = if n % 2 == 0 { F::one().neg() } else { F::one() };
        for &(i, r, c, off, len) in &src.blocks {
            let w = y.term(i + n)[r];
            let u = x.term(i)[c];
            let start = a.piece(w, u).start;
            let dy = y.diff(i + n);
            let dx = x.diff(i - 1);
            for k in 0..len {
                let e = Elem::basis(start + k);
                // d_Y ∘ f lands in block (i, r', c)
                for rr in 0..dy.row_vertices().len() {
                    let coef = dy.get(rr, r);
                    if coef.is_zero() {
                        continue;
                    }
                    let prod = a.mul(coef, &e);
                    let (_, _, _, toff, _) = dst.blocks[dst.index[&(i, rr, c)]];
                    for (t, v) in piece_coords(a, &prod, y.term(i + n + 1)[rr], u).into_iter().enumerate() {
                        if !v.is_zero() {
                            let cur = m.get(toff + t, off + k).add(&v);
                            m.set(toff + t, off + k, cur);
                        }
                    }
                }
                // -(-1)^n f ∘ d_X lands in block (i-1, r, c')
                for cc in 0..dx.col_vertices().len() {
                    let coef = dx.get(c, cc);
                    if coef.is_zero() {
                        continue;
                    }
                    let prod = a.mul(&e, coef).scale(&sign);
                    let (_, _, _, toff, _) = dst.blocks[dst.index[&(i - 1, r, cc)]];
                    for (t, v) in piece_coords(a, &prod, w, x.term(i - 1)[cc]).into_iter().enumerate() {
                        if !v.is_zero() {
                            let cur = m.get(toff + t, off + k).add(&v);
                            m.set(toff + t, off + k, cur);
                        }
                    }
                }
            }
        }
        m
    }

    /// `dim H^n` for every nonzero degree.
    pub fn cohomology_dims(&mut self) -> GradedDims {
        let range = self.degree_range();
        if range.is_empty() {
            return BTreeMap::new();
        }
        let (lo, hi) = (*range.start(), *range.end());
        let ranks: BTreeMap<i32, usize> = (lo - 1..=hi).map(|n| (n, self.differential(n).rank())).collect();
        let mut out = BTreeMap::new();
        for n in lo..=hi {
            let d = self.dim(n) - ranks[&n] - ranks[&(n - 1)];
            if d > 0 {
                out.insert(n, d);
            }
        }
        out
    }

    /// Cocycles representing a basis of `H^n`, plus the coboundary basis.
    fn cohomology_basis(&mut self, n: i32) -> (Matrix<F>, Matrix<F>) {
        let z = self.differential(n).kernel();
        let b = self.differential(n - 1).image();
        let reps = z.select_columns(&extend_basis(&b, &z));
        (reps, b)
    }

    /// Components of a cochain given in layout coordinates.
    fn split_degrees(&mut self, n: i32, v: &[F]) -> BTreeMap<i32, BlockMatrix<F>> {
        let (a, x, y) = (self.a, self.x, self.y);
        let lay = self.layout(n);
        let mut out: BTreeMap<i32, BlockMatrix<F>> = BTreeMap::new();
        for &(i, r, c, off, len) in &lay.blocks {
            let (w, u) = (y.term(i + n)[r], x.term(i)[c]);
            let e = piece_elem(a, &v[off..off + len], w, u);
            out.entry(i).or_insert_with(|| BlockMatrix::zeros(y.term(i + n), x.term(i))).set(r, c, e);
        }
        out
    }

    fn join_degrees(&mut self, n: i32, comps: &BTreeMap<i32, BlockMatrix<F>>) -> Vec<F> {
        let a = self.a;
        let lay = self.layout(n);
        let mut v = vec![F::zero(); lay.dim];
        for &(i, r, c, off, len) in &lay.blocks {
            if let Some(b) = comps.get(&i) {
                let w = b.row_vertices()[r];
                let u = b.col_vertices()[c];
                let coords = piece_coords(a, b.get(r, c), w, u);
                debug_assert_eq!(coords.len(), len);
                v[off..off + len].clone_from_slice(&coords);
            }
        }
        v
    }
}

/// `dim Hom^i(X, Y)` for all `i`.
pub fn hom_complex<F: Field>(a: &Algebra<F>, x: &PerfectComplex<F>, y: &PerfectComplex<F>) -> GradedDims {
    HomComplex::new(a, x, y).cohomology_dims()
}

/// Cocycle representatives `f: X -> Y[n]` of a basis of `Hom^n(X, Y)`;
/// `f[i]: X^i -> Y^{i+n}`.
pub fn hom_basis<F: Field>(a: &Algebra<F>, x: &PerfectComplex<F>, y: &PerfectComplex<F>, n: i32) -> Vec<BTreeMap<i32, BlockMatrix<F>>> {
    let mut h = HomComplex::new(a, x, y);
    let (reps, _) = h.cohomology_basis(n);
    (0..reps.cols()).map(|k| h.split_degrees(n, &reps.column(k))).collect()
}

/// An object of `Perf A`, kept minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DObject<F> {
    pub label: String,
    pub complex: PerfectComplex<F>,
}

impl<F: Field> DObject<F> {
    pub fn new(a: &Algebra<F>, label: impl Into<String>, complex: PerfectComplex<F>) -> Self {
        DObject { label: label.into(), complex: complex.minimalize(a) }
    }

    pub fn projective(a: &Algebra<F>, v: usize) -> Self {
        DObject { label: format!("P{}", a.quiver().vertex_name(v)), complex: PerfectComplex::single(v, 0) }
    }

    pub fn shift(&self, k: i32) -> Self {
        DObject { label: format!("{}[{k}]", self.label), complex: self.complex.shift(k) }
    }
}

/// The minimal projective resolution of a module, as an object.
pub fn module_object<F: Field>(a: &Algebra<F>, label: impl Into<String>, m: &RightModule<F>, cap: usize) -> Result<DObject<F>, ModuleError> {
    Ok(DObject { label: label.into(), complex: min_resolution(a, m, cap)? })
}

pub fn is_exceptional<F: Field>(a: &Algebra<F>, x: &DObject<F>) -> bool {
    let t = hom_complex(a, &x.complex, &x.complex);
    t.len() == 1 && t.get(&0) == Some(&1)
}

/// `Hom^degree(E_from, E_to) ≠ 0` where it should vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub from: usize,
    pub to: usize,
    pub degree: i32,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.from + 1, self.to + 1, self.degree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcCollection<F> {
    objects: Vec<DObject<F>>,
    /// `table[k][l] = Hom^•(E_k, E_l)`
    table: Vec<Vec<GradedDims>>,
}

impl<F: Field> ExcCollection<F> {
    pub fn new(a: &Algebra<F>, objects: Vec<DObject<F>>) -> Self {
        let table = objects.iter().map(|x| objects.iter().map(|y| hom_complex(a, &x.complex, &y.complex)).collect()).collect();
        ExcCollection { objects, table }
    }

    pub fn projectives(a: &Algebra<F>, vertices: &[usize]) -> Self {
        Self::new(a, vertices.iter().map(|&v| DObject::projective(a, v)).collect())
    }

    pub fn from_vertex_names(a: &Algebra<F>, names: &[&str]) -> Result<Self, CollectionError> {
        let vs = names
            .iter()
            .map(|n| a.quiver().vertex_index(n).map_err(|_| CollectionError::UnknownVertex(String::from(*n))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::projectives(a, &vs))
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[DObject<F>] {
        &self.objects
    }

    pub fn hom(&self, k: usize, l: usize) -> &GradedDims {
        &self.table[k][l]
    }

    /// Violations of exceptionality: self-Hom other than `k[0]` is reported
    /// as `(k, k, i)`, nonzero backward Hom as `(k, l, i)` with `k > l`.
    pub fn exceptional_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for k in 0..self.len() {
            for l in 0..=k {
                for (&i, &d) in &self.table[k][l] {
                    if k == l && i == 0 && d == 1 {
                        continue;
                    }
                    out.push(Violation { from: k, to: l, degree: i });
                }
                if k == l && !self.table[k][k].contains_key(&0) {
                    out.push(Violation { from: k, to: k, degree: 0 });
                }
            }
        }
        out
    }

    /// All violations of strong exceptionality, including `Hom^{i≠0}` forward.
    pub fn strong_violations(&self) -> Vec<Violation> {
        let mut out = self.exceptional_violations();
        for k in 0..self.len() {
            for l in k + 1..self.len() {
                for &i in self.table[k][l].keys() {
                    if i != 0 {
                        out.push(Violation { from: k, to: l, degree: i });
                    }
                }
            }
        }
        out
    }

    pub fn is_exceptional(&self) -> bool {
        self.exceptional_violations().is_empty()
    }

    pub fn is_strong(&self) -> bool {
        self.strong_violations().is_empty()
    }

    /// Positions `p..=q` are mutually orthogonal.
    pub fn is_block(&self, p: usize, q: usize) -> bool {
        (p..=q).all(|k| (k + 1..=q).all(|l| self.table[k][l].is_empty() && self.table[l][k].is_empty()))
    }

    pub fn replace(&self, a: &Algebra<F>, objects: Vec<DObject<F>>) -> Self {
        Self::new(a, objects)
    }

    /// Shift the object at `pos` by `k`.
    pub fn shift(&self, a: &Algebra<F>, pos: usize, k: i32) -> Result<Self, CollectionError> {
        if pos >= self.len() {
            return Err(CollectionError::OutOfRange(pos));
        }
        let mut objs = self.objects.clone();
        objs[pos] = objs[pos].shift(k);
        Ok(Self::new(a, objs))
    }
}

/// Degree-wise blocks of a map of perfect complexes.
type Components<F> = BTreeMap<i32, BlockMatrix<F>>;
type Cocycles<F> = (i32, Vec<Components<F>>);

/// Single-degree cocycle data `(d, basis)` of `Hom^•(x, y)`, or `None` when zero.
fn single_degree<F: Field>(a: &Algebra<F>, x: &DObject<F>, y: &DObject<F>) -> Result<Option<Cocycles<F>>, CollectionError> {
    let t = hom_complex(a, &x.complex, &y.complex);
    match t.len() {
        0 => Ok(None),
        1 => {
            let d = *t.keys().next().unwrap();
            Ok(Some((d, hom_basis(a, &x.complex, &y.complex, d))))
        }
        _ => Err(CollectionError::MixedDegree(x.label.clone(), y.label.clone())),
    }
}

/// `L_{E_1..E_n}(F) = Cone(⊕ Hom^•(E_i, F) ⊗ E_i -> F)`.
pub fn left_mutation_object<F: Field>(a: &Algebra<F>, block: &[&DObject<F>], f: &DObject<F>) -> Result<DObject<F>, CollectionError> {
    let mut parts: Vec<PerfectComplex<F>> = Vec::new();
    let mut maps: Vec<(i32, BTreeMap<i32, BlockMatrix<F>>)> = Vec::new();
    for e in block {
        if let Some((d, basis)) = single_degree(a, e, f)? {
            for g in basis {
                parts.push(e.complex.shift(-d));
                maps.push((d, g));
            }
        }
    }
    let refs: Vec<&PerfectComplex<F>> = parts.iter().collect();
    let src = PerfectComplex::direct_sum(&refs);
    let tgt = &f.complex;
    // component at degree t: [g_1^{t-d_1} | g_2^{t-d_2} | ...]
    let mut comps = BTreeMap::new();
    for t in src.degrees() {
        let mut m = BlockMatrix::zeros(tgt.term(t), src.term(t));
        let mut c0 = 0;
        for (p, (d, g)) in parts.iter().zip(&maps) {
            let width = p.term(t).len();
            if let Some(b) = g.get(&(t - d)) {
                for r in 0..tgt.term(t).len() {
                    for c in 0..width {
                        m.set(r, c0 + c, b.get(r, c).clone());
                    }
                }
            }
            c0 += width;
        }
        comps.insert(t, m);
    }
    let ev = PerfectMap { comps };
    debug_assert!(ev.is_chain_map(a, &src, tgt));
    let labels: Vec<&str> = block.iter().map(|e| e.label.as_str()).collect();
    Ok(DObject::new(a, format!("L_{{{}}}({})", labels.join(","), f.label), cone(&src, tgt, &ev)))
}

/// `R_{F_1..F_n}(E) = Cone(E -> ⊕ Hom^•(E, F_i)^* ⊗ F_i)[-1]`.
pub fn right_mutation_object<F: Field>(a: &Algebra<F>, e: &DObject<F>, block: &[&DObject<F>]) -> Result<DObject<F>, CollectionError> {
    let mut parts: Vec<PerfectComplex<F>> = Vec::new();
    let mut maps: Vec<(i32, BTreeMap<i32, BlockMatrix<F>>)> = Vec::new();
    for f in block {
        if let Some((d, basis)) = single_degree(a, e, f)? {
            for g in basis {
                parts.push(f.complex.shift(d));
                maps.push((d, g));
            }
        }
    }
    let refs: Vec<&PerfectComplex<F>> = parts.iter().collect();
    let tgt = PerfectComplex::direct_sum(&refs);
    let src = &e.complex;
    // component at degree t: rows stacked, g^t: E^t -> F^{t+d}
    let mut comps = BTreeMap::new();
    for t in src.degrees() {
        let mut m = BlockMatrix::zeros(tgt.term(t), src.term(t));
        let mut r0 = 0;
        for (p, (_, g)) in parts.iter().zip(&maps) {
            let height = p.term(t).len();
            if let Some(b) = g.get(&t) {
                for r in 0..height {
                    for c in 0..src.term(t).len() {
                        m.set(r0 + r, c, b.get(r, c).clone());
                    }
                }
            }
            r0 += height;
        }
        comps.insert(t, m);
    }
    let coev = PerfectMap { comps };
    debug_assert!(coev.is_chain_map(a, src, &tgt));
    let labels: Vec<&str> = block.iter().map(|f| f.label.as_str()).collect();
    Ok(DObject::new(a, format!("R_{{{}}}({})", labels.join(","), e.label), cone(src, &tgt, &coev).shift(-1)))
}

/// Left block mutation: the object at `q + 1` moves to position `p`.
pub fn block_mutate_left<F: Field>(a: &Algebra<F>, c: &ExcCollection<F>, p: usize, q: usize) -> Result<ExcCollection<F>, CollectionError> {
    if p > q || q + 1 >= c.len() {
        return Err(CollectionError::OutOfRange(q + 1));
    }
    if !c.is_block(p, q) {
        return Err(CollectionError::NotBlock(p, q));
    }
    let block: Vec<&DObject<F>> = c.objects[p..=q].iter().collect();
    let l = left_mutation_object(a, &block, &c.objects[q + 1])?;
    let mut objs = c.objects[..p].to_vec();
    objs.push(l);
    objs.extend_from_slice(&c.objects[p..=q]);
    objs.extend_from_slice(&c.objects[q + 2..]);
    Ok(ExcCollection::new(a, objs))
}

/// Right block mutation: the object at `p - 1` moves to position `q`.
pub fn block_mutate_right<F: Field>(a: &Algebra<F>, c: &ExcCollection<F>, p: usize, q: usize) -> Result<ExcCollection<F>, CollectionError> {
    if p == 0 || p > q || q >= c.len() {
        return Err(CollectionError::OutOfRange(p.saturating_sub(1)));
    }
    if !c.is_block(p, q) {
        return Err(CollectionError::NotBlock(p, q));
    }
    let block: Vec<&DObject<F>> = c.objects[p..=q].iter().collect();
    let r = right_mutation_object(a, &c.objects[p - 1], &block)?;
    let mut objs = c.objects[..p - 1].to_vec();
    objs.extend_from_slice(&c.objects[p..=q]);
    objs.push(r);
    objs.extend_from_slice(&c.objects[q + 1..]);
    Ok(ExcCollection::new(a, objs))
}

/// `(E_i, E_{i+1}) ↦ (L_{E_i} E_{i+1}, E_i)`.
pub fn left_mutate<F: Field>(a: &Algebra<F>, c: &ExcCollection<F>, i: usize) -> Result<ExcCollection<F>, CollectionError> {
    block_mutate_left(a, c, i, i)
}

/// `(E_{i-1}, E_i) ↦ (E_i, R_{E_i} E_{i-1})`.
pub fn right_mutate<F: Field>(a: &Algebra<F>, c: &ExcCollection<F>, i: usize) -> Result<ExcCollection<F>, CollectionError> {
    block_mutate_right(a, c, i, i)
}

/// Degree-0 endomorphism algebra of a strong collection.
#[derive(Debug, Clone)]
pub struct EndAlgebra {
    /// `dims[k][l] = dim Hom(E_k, E_l)`
    pub dims: Vec<Vec<usize>>,
    /// Gabriel quiver: arrow `k -> l` for each irreducible morphism `E_k -> E_l`.
    pub quiver: Quiver,
    pub total_dim: usize,
    pub shape: DynkinReport,
    /// Total dimension equals the path count of the Gabriel quiver.
    pub hereditary: bool,
}

impl EndAlgebra {
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.dims.len();
        let mut out = vec![vec![0; n]; n];
        for ar in self.quiver.arrows() {
            out[ar.source][ar.target] += 1;
        }
        out
    }
}

pub fn end_algebra<F: Field>(a: &Algebra<F>, c: &ExcCollection<F>) -> Result<EndAlgebra, CollectionError> {
    if !c.is_strong() {
        return Err(CollectionError::NotStrong);
    }
    let n = c.len();
    let dims: Vec<Vec<usize>> = (0..n).map(|k| (0..n).map(move |l| c.hom(k, l).get(&0).copied().unwrap_or(0))).map(|r| r.collect()).collect();
    let objs = c.objects();
    let mut quiver = Quiver::new(objs.iter().map(|o| o.label.clone())).expect("labels");
    for k in 0..n {
        for l in 0..n {
            if k == l || dims[k][l] == 0 {
                continue;
            }
            // rad^2(k, l): compositions through intermediate objects
            let (x, y) = (&objs[k].complex, &objs[l].complex);
            let mut hom = HomComplex::new(a, x, y);
            let (reps, bound) = hom.cohomology_basis(0);
            let full = bound.hstack(&reps);
            let mut products = Matrix::zeros(reps.cols(), 0);
            for (m, mid) in objs.iter().enumerate() {
                if m == k || m == l || dims[k][m] == 0 || dims[m][l] == 0 {
                    continue;
                }
                let first = hom_basis(a, x, &mid.complex, 0);
                let second = hom_basis(a, &mid.complex, y, 0);
                for f in &first {
                    for g in &second {
                        let comp: BTreeMap<i32, BlockMatrix<F>> = f.iter().filter_map(|(i, fi)| g.get(i).map(|gi| (*i, gi.compose(a, fi)))).collect();
                        let v = hom.join_degrees(0, &comp);
                        let rhs = Matrix::from_columns(v.len(), &[v]);
                        let coords = solve(&full, &rhs).expect("shape").expect("composite is a cocycle");
                        let h = coords.block(bound.cols(), 0, reps.cols(), 1);
                        products = products.hstack(&h);
                    }
                }
            }
            let irreducible = dims[k][l] - products.rank();
            for j in 0..irreducible {
                quiver.add_arrow(&format!("{k}_{l}_{j}"), k, l).expect("vertices exist");
            }
        }
    }
    let total_dim = dims.iter().flatten().sum();
    let hereditary = quiver.path_count().is_some_and(|p| p == total_dim);
    let shape = classify_underlying(&quiver);
    Ok(EndAlgebra { dims, quiver, total_dim, shape, hereditary })
}

/// Exceptional pair `(E_1, E_2)` with `Hom^•(E_1, E_2) = k^2[0]` and
/// `Hom^•(E_2, E_1) = 0`: the Kronecker algebra embeds.
#[derive(Debug, Clone)]
pub struct KroneckerCertificate {
    pub first: String,
    pub second: String,
}

pub fn check_kronecker_pair<F: Field>(a: &Algebra<F>, e1: &DObject<F>, e2: &DObject<F>) -> bool {
    let forward = hom_complex(a, &e1.complex, &e2.complex);
    is_exceptional(a, e1)
        && is_exceptional(a, e2)
        && forward.len() == 1
        && forward.get(&0) == Some(&2)
        && hom_complex(a, &e2.complex, &e1.complex).is_empty()
}

/// Verify the hinted pair, or scan pairs of indecomposable projectives.
pub fn kronecker_certificate<F: Field>(a: &Algebra<F>, hint: Option<(&DObject<F>, &DObject<F>)>) -> Option<KroneckerCertificate> {
    if let Some((e1, e2)) = hint {
        return check_kronecker_pair(a, e1, e2).then(|| KroneckerCertificate { first: e1.label.clone(), second: e2.label.clone() });
    }
    let n = a.vertex_count();
    for u in 0..n {
        for v in 0..n {
            // Hom(P_u, P_v) = A_{vu}
            if u != v && a.piece_dim(v, u) == 2 && a.piece_dim(u, v) == 0 {
                let (e1, e2) = (DObject::projective(a, u), DObject::projective(a, v));
                if check_kronecker_pair(a, &e1, &e2) {
                    return Some(KroneckerCertificate { first: e1.label, second: e2.label });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::Q;
    use crate::quiver::DynkinType;

    #[test]
    fn hom_between_projectives() {
        let a = catalog::example_8_2::<Q>().unwrap();
        let p0 = PerfectComplex::single(0, 0);
        let p1 = PerfectComplex::single(1, 0);
        assert_eq!(hom_complex(&a, &p0, &p1), BTreeMap::from([(0, 1)]));
        assert_eq!(hom_complex(&a, &p0, &p0), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn shifted_hom() {
        let a = catalog::linear_a::<Q>(2).unwrap();
        let p0 = PerfectComplex::single(0, 0);
        let p1 = PerfectComplex::single(1, 0).shift(2);
        assert_eq!(hom_complex(&a, &p0, &p1), BTreeMap::from([(-2, 1)]));
    }

    #[test]
    fn projectives_are_strong() {
        for a in [catalog::b_power::<Q>(2, 2).unwrap(), catalog::example_8_1().unwrap(), catalog::linear_a(4).unwrap()] {
            let order = a.quiver().order().unwrap().to_vec();
            let c = ExcCollection::projectives(&a, &order);
            assert!(c.is_strong(), "{:?}", c.strong_violations());
        }
        let b2 = catalog::linear_a::<Q>(2).unwrap();
        let rev = ExcCollection::projectives(&b2, &[1, 0]);
        assert_eq!(rev.exceptional_violations(), [Violation { from: 1, to: 0, degree: 0 }]);
    }

    #[test]
    fn d4_from_b2_squared() {
        let a = catalog::b_power::<Q>(2, 2).unwrap();
        let c = ExcCollection::from_vertex_names(&a, &["00", "01", "10", "11"]).unwrap();
        let c = block_mutate_left(&a, &c, 1, 2).unwrap();
        let c = c.shift(&a, 1, -1).unwrap();
        assert!(c.is_strong());
        let e = end_algebra(&a, &c).unwrap();
        assert_eq!(e.shape.kind, DynkinType::D(4));
        assert_eq!(e.total_dim, 9);
        assert!(e.hereditary);
    }

    #[test]
    fn orthogonal_mutation_swaps() {
        let a = catalog::b_power::<Q>(2, 2).unwrap();
        let c = ExcCollection::from_vertex_names(&a, &["00", "01", "10", "11"]).unwrap();
        let m = left_mutate(&a, &c, 1).unwrap();
        assert_eq!(m.objects()[1].complex, c.objects()[2].complex);
        assert_eq!(m.objects()[2].complex, c.objects()[1].complex);
    }

    #[test]
    fn mutations_invert() {
        let a = catalog::linear_a::<Q>(3).unwrap();
        let c = ExcCollection::projectives(&a, &[0, 1, 2]);
        let l = left_mutate(&a, &c, 0).unwrap();
        let back = right_mutate(&a, &l, 1).unwrap();
        for k in 0..3 {
            for j in 0..3 {
                assert_eq!(back.hom(k, j), c.hom(k, j));
            }
        }
    }

    #[test]
    fn kronecker_pairs() {
        let a = catalog::canonical::<Q>(&[2, 2, 2], None).unwrap();
        assert!(kronecker_certificate(&a, None).is_some());
        let b = catalog::linear_a::<Q>(2).unwrap();
        assert!(kronecker_certificate(&b, None).is_none());
    }

    #[test]
    fn graded_format_round_trip() {
        let t = parse_graded("0:2,1:1").unwrap();
        assert_eq!(format_graded(&t), "0:2,1:1");
        assert!(parse_graded("0").unwrap().is_empty());
    }
}
