//! Finite-dimensional quotients `kQ/I` of path algebras with an explicit
//! basis of path classes and structure constants.
//!
//! The basis is sorted by `(target, source, length, path)` so that each
//! piece `A_{uv} = e_u A e_v` (paths from `v` to `u`) is a contiguous range.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::field::Field;
use crate::linalg::Matrix;
use crate::quiver::{enumerate_paths, quiver_length, Path, Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("quiver has an oriented cycle; a length cap is required")]
    NeedsCap,
    #[error("not provably finite-dimensional at cap {0}")]
    NotFinite(usize),
    #[error("relation {0} has terms with different endpoints")]
    InhomogeneousEndpoints(usize),
    #[error("relation {0} has a term of length < 2 without permission")]
    ShortTerm(usize),
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("relation {0} mixes path lengths; only allowed on acyclic quivers")]
    InhomogeneousOnCycle(usize),
}

/// A linear combination of paths with common endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<F> {
    pub terms: Vec<(F, Path)>,
    /// Allow terms of length 1 (non-admissible relations such as `yx - tz`).
    pub allow_short: bool,
}

impl<F: Field> Relation<F> {
    pub fn new(terms: Vec<(F, Path)>) -> Self {
        Relation { terms, allow_short: false }
    }

    pub fn permit_short(mut self) -> Self {
        self.allow_short = true;
        self
    }

    /// Terms given as `(coefficient, written word)`, e.g. `(1, "y x")`.
    pub fn written(q: &Quiver, terms: &[(F, &str)]) -> Result<Self, QuiverError> {
        let terms = terms.iter().map(|(c, w)| Ok((c.clone(), q.path_written(w)?))).collect::<Result<Vec<_>, QuiverError>>()?;
        Ok(Relation::new(terms))
    }

    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.first().map(|(_, p)| (p.source, p.target))
    }

    fn is_length_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].1.len() == w[1].1.len())
    }
}

/// Sparse element of an algebra: sorted `(basis index, nonzero coefficient)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem<F> {
    terms: Vec<(usize, F)>,
}

impl<F> Default for Elem<F> {
    fn default() -> Self {
        Elem { terms: Vec::new() }
    }
}

impl<F: Field> Elem<F> {
    pub fn zero() -> Self {
        Elem { terms: Vec::new() }
    }

    pub fn basis(i: usize) -> Self {
        Elem { terms: vec![(i, F::one())] }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, c) in terms {
            let e = acc.entry(i).or_insert_with(F::zero);
            *e = e.add(&c);
        }
        Elem { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(v: &[F]) -> Self {
        Elem { terms: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect() }
    }

    pub fn terms(&self) -> &[(usize, F)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize) -> F {
        match self.terms.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            let take_left = j == rhs.terms.len() || (i < self.terms.len() && self.terms[i].0 < rhs.terms[j].0);
            let take_right = i == self.terms.len() || (j < rhs.terms.len() && rhs.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                out.push(rhs.terms[j].clone());
                j += 1;
            } else {
                let s = self.terms[i].1.add(&rhs.terms[j].1);
                if !s.is_zero() {
                    out.push((self.terms[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        Elem { terms: out }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Elem::zero();
        }
        Elem { terms: self.terms.iter().map(|(i, c)| (*i, c.mul(s))).collect() }
    }

    pub fn neg(&self) -> Self {
        Elem { terms: self.terms.iter().map(|(i, c)| (*i, c.neg())).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<F> {
        let mut v = vec![F::zero(); dim];
        for (i, c) in &self.terms {
            v[*i] = c.clone();
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    /// Representative standard path.
    pub path: Path,
}

impl BasisElement {
    pub fn source(&self) -> usize {
        self.path.source
    }
    pub fn target(&self) -> usize {
        self.path.target
    }
    pub fn length(&self) -> usize {
        self.path.len()
    }
}

#[derive(Debug, Clone)]
pub struct Algebra<F> {
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    cap: Option<usize>,
    basis: Vec<BasisElement>,
    /// `piece_start[t * n + s]`; one extra entry holding the dimension.
    piece_start: Vec<usize>,
    idempotents: Vec<usize>,
    products: Vec<Elem<F>>,
    arrow_elems: Vec<Elem<F>>,
    /// Basis matrices of `R^1, R^2, ...` (nonzero powers only).
    radical: Vec<Matrix<F>>,
    max_len: usize,
    normal_forms: BTreeMap<Path, Elem<F>>,
}

fn column_order(a: &Path, b: &Path) -> core::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.arrows.cmp(&b.arrows))
}

/// Build `kQ/(rels)` with an explicit basis.
pub fn build_algebra<F: Field>(q: Quiver, rels: Vec<Relation<F>>, cap: Option<usize>) -> Result<Algebra<F>, AlgebraError> {
    let n = q.vertex_count();
    let acyclic = !q.has_oriented_cycle();
    let max_len = if acyclic { quiver_length(&q)? } else { cap.ok_or(AlgebraError::NeedsCap)? };

    let mut relations = Vec::with_capacity(rels.len());
    for (k, r) in rels.into_iter().enumerate() {
        let mut merged: Vec<(F, Path)> = Vec::new();
        for (c, p) in r.terms {
            if let Some(e) = merged.iter_mut().find(|(_, m)| *m == p) {
                e.0 = e.0.add(&c);
            } else {
                merged.push((c, p));
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        let Some((_, first)) = merged.first() else {
            return Err(AlgebraError::ZeroRelation(k));
        };
        let (s, t) = (first.source, first.target);
        for (_, p) in &merged {
            if p.source != s || p.target != t {
                return Err(AlgebraError::InhomogeneousEndpoints(k));
            }
            if p.is_empty() || (p.len() < 2 && !r.allow_short) {
                return Err(AlgebraError::ShortTerm(k));
            }
        }
        let rel = Relation { terms: merged, allow_short: r.allow_short };
        if !acyclic && !rel.is_length_homogeneous() {
            return Err(AlgebraError::InhomogeneousOnCycle(k));
        }
        relations.push(rel);
    }

    let grouped = enumerate_paths(&q, max_len);
    let mut by_piece: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
    for ((s, t, _), ps) in &grouped {
        by_piece.entry((*s, *t)).or_default().extend(ps.iter().cloned());
    }

    // Local normal forms: piece -> (standard monomials, path -> coefficients on them)
    let mut standard: Vec<Path> = Vec::new();
    let mut local_nf: Vec<(Path, Vec<(Path, F)>)> = Vec::new();
    for (&(s, t), paths) in by_piece.iter_mut() {
        paths.sort_by(column_order);
        let col_of: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows: Vec<Vec<F>> = Vec::new();
        for r in &relations {
            let (rs, rt) = r.endpoints().expect("nonempty");
            let rlen = r.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0);
            let rights: Vec<&Path> = grouped.iter().filter(|((a, b, _), _)| *a == s && *b == rs).flat_map(|(_, v)| v).collect();
            let lefts: Vec<&Path> = grouped.iter().filter(|((a, b, _), _)| *a == rt && *b == t).flat_map(|(_, v)| v).collect();
            for qp in &rights {
                for pp in &lefts {
                    if qp.len() + pp.len() + rlen > max_len {
                        continue;
                    }
                    let mut row = vec![F::zero(); paths.len()];
                    for (c, term) in &r.terms {
                        let full = pp.compose(&term.compose(qp).expect("composable")).expect("composable");
                        let col = col_of[&full];
                        row[col] = row[col].add(c);
                    }
                    rows.push(row);
                }
            }
        }
        let m = if rows.is_empty() { Matrix::zeros(0, paths.len()) } else { Matrix::from_rows(rows) };
        let (rr, pivots) = m.rref();
        let mut pivot_row = vec![None; paths.len()];
        for (i, &p) in pivots.iter().enumerate() {
            pivot_row[p] = Some(i);
        }
        for (c, p) in paths.iter().enumerate() {
            let nf = match pivot_row[c] {
                None => {
                    standard.push(p.clone());
                    vec![(p.clone(), F::one())]
                }
                Some(i) => (0..paths.len())
                    .filter(|&c2| pivot_row[c2].is_none() && !rr.get(i, c2).is_zero())
                    .map(|c2| (paths[c2].clone(), rr.get(i, c2).neg()))
                    .collect(),
            };
            local_nf.push((p.clone(), nf));
        }
    }

    if let Some(cap) = cap {
        if let Some((_, nf)) = local_nf.iter().find(|(p, nf)| p.len() >= cap && !nf.is_empty()) {
            let _ = nf;
            return Err(AlgebraError::NotFinite(cap));
        }
    }
    standard.retain(|p| cap.is_none_or(|c| p.len() < c));
    standard.sort_by(|a, b| (a.target, a.source, a.len(), &a.arrows).cmp(&(b.target, b.source, b.len(), &b.arrows)));
    let index: BTreeMap<&Path, usize> = standard.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut normal_forms = BTreeMap::new();
    for (p, nf) in &local_nf {
        let e = Elem::from_terms(nf.iter().map(|(m, c)| (index[m], c.clone())));
        normal_forms.insert(p.clone(), e);
    }
    drop(index);

    let dim = standard.len();
    let mut piece_start = vec![0usize; n * n + 1];
    {
        let mut counts = vec![0usize; n * n];
        for p in &standard {
            counts[p.target * n + p.source] += 1;
        }
        for k in 0..n * n {
            piece_start[k + 1] = piece_start[k] + counts[k];
        }
    }
    let idempotents: Vec<usize> =
        (0..n).map(|v| standard.iter().position(|p| p.is_empty() && p.source == v).expect("trivial path survives")).collect();

    let mut products = vec![Elem::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            if standard[i].source != standard[j].target {
                continue;
            }
            let c = standard[i].compose(&standard[j]).expect("composable");
            if c.len() <= max_len {
                products[i * dim + j] = normal_forms.get(&c).cloned().unwrap_or_default();
            }
        }
    }
    let arrow_elems = (0..q.arrows().len())
        .map(|a| {
            let p = q.path_from_ids(vec![a]).expect("arrow");
            normal_forms.get(&p).cloned().unwrap_or_default()
        })
        .collect();

    let mut radical = Vec::new();
    for k in 1..=max_len {
        let cols: Vec<Vec<F>> = normal_forms.iter().filter(|(p, _)| p.len() == k).map(|(_, e)| e.to_dense(dim)).collect();
        if cols.is_empty() {
            break;
        }
        let img = Matrix::from_columns(dim, &cols).image();
        if img.cols() == 0 {
            break;
        }
        radical.push(img);
    }

    let basis = standard.into_iter().map(|path| BasisElement { path }).collect();
    Ok(Algebra { quiver: q, relations, cap, basis, piece_start, idempotents, products, arrow_elems, radical, max_len, normal_forms })
}

impl<F: Field> Algebra<F> {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Basis indices of `A_{uv} = e_u A e_v` (paths from `v` to `u`).
    pub fn piece(&self, u: usize, v: usize) -> Range<usize> {
        let n = self.vertex_count();
        self.piece_start[u * n + v]..self.piece_start[u * n + v + 1]
    }

    pub fn piece_dim(&self, u: usize, v: usize) -> usize {
        self.piece(u, v).len()
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    /// Product of basis elements `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &Elem<F> {
        &self.products[i * self.dim() + j]
    }

    pub fn mul(&self, x: &Elem<F>, y: &Elem<F>) -> Elem<F> {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let p = self.basis_product(*i, *j);
                if p.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in p.terms() {
                    let e = acc.entry(*k).or_insert_with(F::zero);
                    e.add_mul_assign(&ab, c);
                }
            }
        }
        Elem { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Class of an arbitrary path.
    pub fn path_elem(&self, p: &Path) -> Elem<F> {
        if p.len() > self.max_len {
            return Elem::zero();
        }
        self.normal_forms.get(p).cloned().unwrap_or_default()
    }

    pub fn arrow_elem(&self, a: usize) -> &Elem<F> {
        &self.arrow_elems[a]
    }

    /// `R^1, R^2, ...` as column bases (only the nonzero powers).
    pub fn radical_filtration(&self) -> &[Matrix<F>] {
        &self.radical
    }

    /// An element lies in the radical iff it has no idempotent component.
    pub fn in_radical(&self, x: &Elem<F>) -> bool {
        self.idempotents.iter().all(|&e| x.coeff(e).is_zero())
    }

    /// The source and target of a nonzero element inside one piece.
    pub fn piece_of(&self, x: &Elem<F>) -> Option<(usize, usize)> {
        let (i, _) = x.terms().first()?;
        let b = &self.basis[*i];
        Some((b.target(), b.source()))
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical.is_empty()
    }

    pub fn basis_label(&self, i: usize) -> String {
        format!("{}", self.basis[i].path.display(&self.quiver))
    }

    /// Total dimension of `A_{uv}` summed over all pairs equals `dim`.
    pub fn piece_dims(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        (0..n).map(|u| (0..n).map(|v| self.piece_dim(u, v)).collect()).collect()
    }
}

/// Smallest `d` with `R^{d+1} = 0`.
pub fn radical_degree<F: Field>(a: &Algebra<F>) -> usize {
    a.radical.len()
}

/// Product-quiver presentation of `a ⊗_k b`.
pub fn tensor_algebra<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Result<Algebra<F>, AlgebraError> {
    let (qa, qb) = (a.quiver(), b.quiver());
    let (na, nb) = (qa.vertex_count(), qb.vertex_count());
    let mut names: Vec<String> = Vec::with_capacity(na * nb);
    for i in 0..na {
        for j in 0..nb {
            names.push(format!("{}{}", qa.vertex_name(i), qb.vertex_name(j)));
        }
    }
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != names.len() {
        names.clear();
        for i in 0..na {
            for j in 0..nb {
                names.push(format!("({},{})", qa.vertex_name(i), qb.vertex_name(j)));
            }
        }
    }
    let vid = |i: usize, j: usize| i * nb + j;
    let mut a_names = Vec::new();
    let mut b_names = Vec::new();
    for al in qa.arrows() {
        for j in 0..nb {
            a_names.push(format!("{}@{}", al.name, qb.vertex_name(j)));
        }
    }
    for i in 0..na {
        for be in qb.arrows() {
            b_names.push(format!("{}@{}", qa.vertex_name(i), be.name));
        }
    }
    let mut all: Vec<&String> = a_names.iter().chain(b_names.iter()).collect();
    all.sort();
    all.dedup();
    if all.len() != a_names.len() + b_names.len() {
        a_names =
            qa.arrows().iter().flat_map(|al| (0..nb).map(move |j| (al, j))).map(|(al, j)| format!("({},{})", al.name, qb.vertex_name(j))).collect();
        b_names =
            (0..na).flat_map(|i| qb.arrows().iter().map(move |be| (i, be))).map(|(i, be)| format!("({},{})", qa.vertex_name(i), be.name)).collect();
    }

    let mut q = Quiver::new(names)?;
    // arrow ids: alpha x j and i x beta
    let mut a_id = vec![vec![0usize; nb]; qa.arrows().len()];
    for (k, al) in qa.arrows().iter().enumerate() {
        for j in 0..nb {
            a_id[k][j] = q.add_arrow(&a_names[k * nb + j], vid(al.source, j), vid(al.target, j))?;
        }
    }
    let mut b_id = vec![vec![0usize; qb.arrows().len()]; na];
    for i in 0..na {
        for (k, be) in qb.arrows().iter().enumerate() {
            b_id[i][k] = q.add_arrow(&b_names[i * qb.arrows().len() + k], vid(i, be.source), vid(i, be.target))?;
        }
    }
    if let (Some(oa), Some(ob)) = (qa.order(), qb.order()) {
        let mut seq: Vec<(usize, usize)> = (0..na * nb).map(|v| (oa[v / nb] * nb + ob[v % nb], v)).collect();
        seq.sort_unstable();
        q.set_order(&seq.iter().map(|(_, v)| *v).collect::<Vec<_>>())?;
    }

    let mut rels: Vec<Relation<F>> = Vec::new();
    for (ka, al) in qa.arrows().iter().enumerate() {
        for (kb, be) in qb.arrows().iter().enumerate() {
            // (alpha, t(beta)) after (s(alpha), beta)  vs  (t(alpha), beta) after (alpha, s(beta))
            let p1 = q.path_from_ids(vec![b_id[al.source][kb], a_id[ka][be.target]])?;
            let p2 = q.path_from_ids(vec![a_id[ka][be.source], b_id[al.target][kb]])?;
            rels.push(Relation::new(vec![(F::one(), p1), (F::one().neg(), p2)]));
        }
    }
    for r in a.relations() {
        for j in 0..nb {
            let terms = r
                .terms
                .iter()
                .map(|(c, p)| Ok((c.clone(), q.path_from_ids(p.arrows.iter().map(|&x| a_id[x][j]).collect())?)))
                .collect::<Result<Vec<_>, QuiverError>>()?;
            rels.push(Relation { terms, allow_short: r.allow_short });
        }
    }
    for r in b.relations() {
        for i in 0..na {
            let terms = r
                .terms
                .iter()
                .map(|(c, p)| Ok((c.clone(), q.path_from_ids(p.arrows.iter().map(|&x| b_id[i][x]).collect())?)))
                .collect::<Result<Vec<_>, QuiverError>>()?;
            rels.push(Relation { terms, allow_short: r.allow_short });
        }
    }
    let cap = match (a.cap(), b.cap()) {
        (None, None) if !qa.has_oriented_cycle() && !qb.has_oriented_cycle() => None,
        (ca, cb) => {
            let ca = ca.unwrap_or(a.max_len + 1);
            let cb = cb.unwrap_or(b.max_len + 1);
            Some(ca + cb - 1)
        }
    };
    build_algebra(q, rels, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    pub(crate) fn example_8_1() -> Algebra<Q> {
        let mut quiver = Quiver::with_vertex_count(3);
        quiver.add_arrow("x", 0, 1).unwrap();
        quiver.add_arrow("y", 1, 2).unwrap();
        quiver.add_arrow("z", 0, 2).unwrap();
        let r = Relation::written(&quiver, &[(q(1), "y x")]).unwrap();
        build_algebra(quiver, vec![r], None).unwrap()
    }

    #[test]
    fn example_8_1_dimension_and_piece() {
        let a = example_8_1();
        assert_eq!(a.dim(), 6);
        let r = a.piece(2, 0);
        assert_eq!(r.len(), 1);
        assert_eq!(a.basis_label(r.start), "z");
        assert_eq!(radical_degree(&a), 1);
    }

    #[test]
    fn two_cycle_with_cap() {
        let mut quiver = Quiver::with_vertex_count(2);
        quiver.add_arrow("x", 0, 1).unwrap();
        quiver.add_arrow("y", 1, 0).unwrap();
        let r = Relation::written(&quiver, &[(q(1), "x y")]).unwrap();
        let a = build_algebra(quiver.clone(), vec![r.clone()], Some(4)).unwrap();
        assert_eq!(a.dim(), 5);
        let labels: Vec<_> = (0..a.dim()).map(|i| a.basis_label(i)).collect();
        assert!(labels.contains(&"y x".into()));
        assert!(matches!(build_algebra(quiver.clone(), vec![r], None), Err(AlgebraError::NeedsCap)));
        assert!(matches!(build_algebra::<Q>(quiver, vec![], Some(4)), Err(AlgebraError::NotFinite(4))));
    }

    #[test]
    fn inhomogeneous_relation_keeps_arrows() {
        let mut quiver = Quiver::with_vertex_count(3);
        quiver.add_arrow("x", 0, 1).unwrap();
        quiver.add_arrow("y", 1, 2).unwrap();
        quiver.add_arrow("z", 0, 2).unwrap();
        let r = Relation::written(&quiver, &[(q(1), "y x"), (q(-1), "z")]).unwrap();
        assert!(matches!(build_algebra(quiver.clone(), vec![r.clone()], None), Err(AlgebraError::ShortTerm(0))));
        let a = build_algebra(quiver, vec![r.permit_short()], None).unwrap();
        assert_eq!(a.dim(), 6);
        let yx = a.mul(a.arrow_elem(1), a.arrow_elem(0));
        assert_eq!(&yx, a.arrow_elem(2));
        assert_eq!(radical_degree(&a), 2);
    }

    #[test]
    fn relation_errors() {
        let mut quiver = Quiver::with_vertex_count(3);
        quiver.add_arrow("x", 0, 1).unwrap();
        quiver.add_arrow("y", 1, 2).unwrap();
        quiver.add_arrow("w", 1, 2).unwrap();
        let bad = Relation::written(&quiver, &[(q(1), "y x"), (q(1), "w")]).unwrap();
        assert!(matches!(build_algebra(quiver.clone(), vec![bad], None), Err(AlgebraError::InhomogeneousEndpoints(0))));
        assert!(Relation::<Q>::written(&quiver, &[(q(1), "nope")]).is_err());
    }

    #[test]
    fn tensor_square_of_a2() {
        let mut quiver = Quiver::with_vertex_count(2);
        quiver.add_arrow("a", 0, 1).unwrap();
        let b2 = build_algebra::<Q>(quiver, vec![], None).unwrap();
        let t = tensor_algebra(&b2, &b2).unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(t.relations().len(), 1);
        assert_eq!(t.quiver().vertices(), ["00", "01", "10", "11"]);
        let unit = build_algebra::<Q>(Quiver::with_vertex_count(1), vec![], None).unwrap();
        assert_eq!(tensor_algebra(&unit, &b2).unwrap().dim(), 3);
    }
}
