//! Bounded cochain complexes of modules and perfect complexes of
//! indecomposable projectives. Cohomological grading; `C[k]^i = C^{i+k}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};
use crate::field::Field;
use crate::linalg::{solve, Matrix};
use crate::module::{piece_coords, projective_sum, ModuleMap, RightModule};

/// Matrix of algebra elements describing a map `⊕_c P_{cols[c]} -> ⊕_r P_{rows[r]}`;
/// entry `(r, c)` lies in `A_{rows[r] cols[c]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrix<F> {
    rows: Vec<usize>,
    cols: Vec<usize>,
    entries: Vec<Elem<F>>,
}

impl<F: Field> BlockMatrix<F> {
    pub fn zeros(rows: &[usize], cols: &[usize]) -> Self {
        BlockMatrix { rows: rows.to_vec(), cols: cols.to_vec(), entries: vec![Elem::zero(); rows.len() * cols.len()] }
    }

    pub fn from_fn(rows: &[usize], cols: &[usize], mut f: impl FnMut(usize, usize) -> Elem<F>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows.len() {
            for c in 0..cols.len() {
                m.entries[r * cols.len() + c] = f(r, c);
            }
        }
        m
    }

    pub fn identity(a: &Algebra<F>, vertices: &[usize]) -> Self {
        Self::from_fn(vertices, vertices, |r, c| if r == c { Elem::basis(a.idempotent(vertices[r])) } else { Elem::zero() })
    }

    pub fn row_vertices(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_vertices(&self) -> &[usize] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem<F> {
        &self.entries[r * self.cols.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Elem<F>) {
        let n = self.cols.len();
        self.entries[r * n + c] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn neg(&self) -> Self {
        BlockMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries: self.entries.iter().map(|e| e.neg()).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        BlockMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries: self.entries.iter().map(|e| e.scale(s)).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "block shape");
        BlockMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().zip(&rhs.entries).map(|(x, y)| x.add(y)).collect(),
        }
    }

    /// `self ∘ rhs`
    pub fn compose(&self, a: &Algebra<F>, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "block composition");
        Self::from_fn(&self.rows, &rhs.cols, |r, c| {
            let mut acc = Elem::zero();
            for k in 0..self.cols.len() {
                let (x, y) = (self.get(r, k), rhs.get(k, c));
                if !x.is_zero() && !y.is_zero() {
                    acc = acc.add(&a.mul(x, y));
                }
            }
            acc
        })
    }

    /// Entries must sit in the right pieces.
    pub fn is_well_typed(&self, a: &Algebra<F>) -> bool {
        (0..self.rows.len()).all(|r| {
            (0..self.cols.len()).all(|c| {
                let range = a.piece(self.rows[r], self.cols[c]);
                self.get(r, c).terms().iter().all(|(i, _)| range.contains(i))
            })
        })
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let rv: Vec<usize> = rows.iter().map(|&r| self.rows[r]).collect();
        let cv: Vec<usize> = cols.iter().map(|&c| self.cols[c]).collect();
        Self::from_fn(&rv, &cv, |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// Block matrix `[[tl, tr], [bl, br]]`.
    pub fn assemble(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Self {
        let rows: Vec<usize> = tl.rows.iter().chain(&bl.rows).copied().collect();
        let cols: Vec<usize> = tl.cols.iter().chain(&tr.cols).copied().collect();
        let (r0, c0) = (tl.rows.len(), tl.cols.len());
        Self::from_fn(&rows, &cols, |r, c| match (r < r0, c < c0) {
            (true, true) => tl.get(r, c).clone(),
            (true, false) => tr.get(r, c - c0).clone(),
            (false, true) => bl.get(r - r0, c).clone(),
            (false, false) => br.get(r - r0, c - c0).clone(),
        })
    }

    /// Matrix of the induced linear map at vertex `u`.
    pub fn at_vertex(&self, a: &Algebra<F>, u: usize) -> Matrix<F> {
        let row_dims: Vec<usize> = self.rows.iter().map(|&w| a.piece_dim(w, u)).collect();
        let col_dims: Vec<usize> = self.cols.iter().map(|&v| a.piece_dim(v, u)).collect();
        let mut m = Matrix::zeros(row_dims.iter().sum(), col_dims.iter().sum());
        let mut c0 = 0;
        for (c, &v) in self.cols.iter().enumerate() {
            let mut r0 = 0;
            for (r, &w) in self.rows.iter().enumerate() {
                let x = self.get(r, c);
                if !x.is_zero() {
                    for (j, i) in a.piece(v, u).enumerate() {
                        let y = a.mul(x, &Elem::basis(i));
                        for (k, val) in piece_coords(a, &y, w, u).into_iter().enumerate() {
                            if !val.is_zero() {
                                m.set(r0 + k, c0 + j, val);
                            }
                        }
                    }
                }
                r0 += row_dims[r];
            }
            c0 += col_dims[c];
        }
        m
    }

    pub fn to_module_map(&self, a: &Algebra<F>) -> ModuleMap<F> {
        ModuleMap { comps: (0..a.vertex_count()).map(|u| self.at_vertex(a, u)).collect() }
    }
}

/// Inverse of a unit `x ∈ e_v A e_v`.
pub fn local_inverse<F: Field>(a: &Algebra<F>, x: &Elem<F>, v: usize) -> Option<Elem<F>> {
    let range = a.piece(v, v);
    let cols: Vec<Vec<F>> = range.clone().map(|i| piece_coords(a, &a.mul(x, &Elem::basis(i)), v, v)).collect();
    let l = Matrix::from_columns(range.len(), &cols);
    let target = piece_coords(a, &Elem::basis(a.idempotent(v)), v, v);
    let rhs = Matrix::from_columns(range.len(), &[target]);
    let sol = solve(&l, &rhs).ok()??;
    let coords = sol.column(0);
    Some(Elem::from_terms(coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (range.start + k, c))))
}

/// Bounded complex of right modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex<F> {
    lo: i32,
    terms: Vec<RightModule<F>>,
    /// `diffs[k]: terms[k] -> terms[k + 1]`
    diffs: Vec<ModuleMap<F>>,
}

#[derive(Debug, Clone)]
pub struct Homology<F> {
    pub modules: BTreeMap<i32, RightModule<F>>,
}

impl<F> Homology<F> {
    pub fn inf(&self) -> Option<i32> {
        self.modules.keys().next().copied()
    }

    pub fn sup(&self) -> Option<i32> {
        self.modules.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.modules.is_empty()
    }
}

impl<F: Field> Complex<F> {
    pub fn new(lo: i32, terms: Vec<RightModule<F>>, diffs: Vec<ModuleMap<F>>) -> Self {
        assert_eq!(diffs.len(), terms.len().saturating_sub(1), "differential count");
        Complex { lo, terms, diffs }
    }

    pub fn single(m: RightModule<F>, degree: i32) -> Self {
        Complex { lo: degree, terms: vec![m], diffs: Vec::new() }
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn terms(&self) -> &[RightModule<F>] {
        &self.terms
    }

    pub fn term(&self, i: i32) -> Option<&RightModule<F>> {
        if i < self.lo {
            return None;
        }
        self.terms.get((i - self.lo) as usize)
    }

    /// `d^i: C^i -> C^{i+1}`, when both ends lie in the stored range.
    pub fn diff(&self, i: i32) -> Option<&ModuleMap<F>> {
        if i < self.lo {
            return None;
        }
        self.diffs.get((i - self.lo) as usize)
    }

    pub fn is_complex(&self, a: &Algebra<F>) -> bool {
        let maps_ok = self.diffs.iter().enumerate().all(|(k, d)| d.is_homomorphism(a, &self.terms[k], &self.terms[k + 1]));
        maps_ok && self.diffs.windows(2).all(|w| w[1].compose(&w[0]).is_zero())
    }

    pub fn shift(&self, k: i32) -> Self {
        let diffs = if k % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(|d| d.scale(&F::one().neg())).collect() };
        Complex { lo: self.lo - k, terms: self.terms.clone(), diffs }
    }

    fn ker_im(&self, i: usize) -> (Vec<Matrix<F>>, Vec<Matrix<F>>) {
        let m = &self.terms[i];
        let z = match self.diffs.get(i) {
            Some(d) => d.kernel(),
            None => m.dims().iter().map(|&d| Matrix::identity(d)).collect(),
        };
        let b = if i == 0 { m.dims().iter().map(|&d| Matrix::zeros(d, 0)).collect() } else { self.diffs[i - 1].image() };
        (z, b)
    }

    pub fn homology(&self, a: &Algebra<F>) -> Homology<F> {
        let mut modules = BTreeMap::new();
        for i in 0..self.terms.len() {
            let (z, b) = self.ker_im(i);
            let h = self.terms[i].subquotient(a, &z, &b);
            if !h.is_zero() {
                modules.insert(self.lo + i as i32, h);
            }
        }
        Homology { modules }
    }

    /// Dimension vectors of the nonzero cohomology.
    pub fn homology_dims(&self) -> BTreeMap<i32, Vec<usize>> {
        let mut out = BTreeMap::new();
        for i in 0..self.terms.len() {
            let m = &self.terms[i];
            let dims: Vec<usize> = (0..m.dims().len())
                .map(|v| {
                    let rank_out = self.diffs.get(i).map_or(0, |d| d.comps[v].rank());
                    let rank_in = if i == 0 { 0 } else { self.diffs[i - 1].comps[v].rank() };
                    m.dims()[v] - rank_out - rank_in
                })
                .collect();
            if dims.iter().any(|&d| d > 0) {
                out.insert(self.lo + i as i32, dims);
            }
        }
        out
    }
}

/// Bounded complex of finitely generated projectives `⊕ P_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectComplex<F> {
    lo: i32,
    terms: Vec<Vec<usize>>,
    /// `diffs[k]: terms[k] -> terms[k + 1]`
    diffs: Vec<BlockMatrix<F>>,
}

impl<F: Field> PerfectComplex<F> {
    pub fn zero() -> Self {
        PerfectComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// Panics on shape mismatch; use [`PerfectComplex::is_complex`] to check `d∘d = 0`.
    pub fn new(lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<BlockMatrix<F>>) -> Self {
        assert_eq!(diffs.len(), terms.len().saturating_sub(1), "differential count");
        for (k, d) in diffs.iter().enumerate() {
            assert!(d.cols == terms[k] && d.rows == terms[k + 1], "differential shape");
        }
        PerfectComplex { lo, terms, diffs }.trimmed()
    }

    /// `P_v` in degree `degree`.
    pub fn single(v: usize, degree: i32) -> Self {
        PerfectComplex { lo: degree, terms: vec![vec![v]], diffs: Vec::new() }
    }

    /// `⊕_j P_{v_j}` in one degree.
    pub fn sum_in_degree(vertices: &[usize], degree: i32) -> Self {
        PerfectComplex { lo: degree, terms: vec![vertices.to_vec()], diffs: Vec::new() }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn degrees(&self) -> core::ops::RangeInclusive<i32> {
        if self.is_zero() {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        self.lo..=self.hi()
    }

    pub fn term(&self, i: i32) -> &[usize] {
        if i < self.lo {
            return &[];
        }
        self.terms.get((i - self.lo) as usize).map_or(&[], |t| t.as_slice())
    }

    /// `d^i: C^i -> C^{i+1}`.
    pub fn diff(&self, i: i32) -> BlockMatrix<F> {
        if i >= self.lo && ((i - self.lo) as usize) < self.diffs.len() {
            return self.diffs[(i - self.lo) as usize].clone();
        }
        BlockMatrix::zeros(self.term(i + 1), self.term(i))
    }

    pub fn diff_ref(&self, i: i32) -> Option<&BlockMatrix<F>> {
        if i < self.lo {
            return None;
        }
        self.diffs.get((i - self.lo) as usize)
    }

    /// Total number of indecomposable summands.
    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    pub fn is_complex(&self, a: &Algebra<F>) -> bool {
        self.diffs.iter().all(|d| d.is_well_typed(a)) && self.diffs.windows(2).all(|w| w[1].compose(a, &w[0]).is_zero())
    }

    /// All differential entries lie in the radical.
    pub fn is_minimal(&self, a: &Algebra<F>) -> bool {
        self.diffs.iter().all(|d| d.entries.iter().all(|e| a.in_radical(e)))
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let diffs = if k % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(|d| d.neg()).collect() };
        PerfectComplex { lo: self.lo - k, terms: self.terms.clone(), diffs }
    }

    pub fn direct_sum(parts: &[&PerfectComplex<F>]) -> Self {
        let nonzero: Vec<&&PerfectComplex<F>> = parts.iter().filter(|p| !p.is_zero()).collect();
        if nonzero.is_empty() {
            return Self::zero();
        }
        let lo = nonzero.iter().map(|p| p.lo).min().unwrap();
        let hi = nonzero.iter().map(|p| p.hi()).max().unwrap();
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|i| nonzero.iter().flat_map(|p| p.term(i).iter().copied()).collect()).collect();
        let diffs = (lo..hi)
            .map(|i| {
                let mut d = BlockMatrix::zeros(&terms[(i + 1 - lo) as usize], &terms[(i - lo) as usize]);
                let (mut r0, mut c0) = (0, 0);
                for p in &nonzero {
                    let pd = p.diff(i);
                    for r in 0..pd.rows.len() {
                        for c in 0..pd.cols.len() {
                            d.set(r0 + r, c0 + c, pd.get(r, c).clone());
                        }
                    }
                    r0 += pd.rows.len();
                    c0 += pd.cols.len();
                }
                d
            })
            .collect();
        PerfectComplex { lo, terms, diffs }
    }

    /// Realise as a complex of modules.
    pub fn to_complex(&self, a: &Algebra<F>) -> Complex<F> {
        if self.is_zero() {
            return Complex::single(RightModule::zero(a), 0);
        }
        let terms = self.terms.iter().map(|t| projective_sum(a, t)).collect();
        let diffs = self.diffs.iter().map(|d| d.to_module_map(a)).collect();
        Complex::new(self.lo, terms, diffs)
    }

    /// Dimension vectors of the nonzero cohomology, computed vertexwise.
    pub fn homology_dims(&self, a: &Algebra<F>) -> BTreeMap<i32, Vec<usize>> {
        let n = a.vertex_count();
        let mut out = BTreeMap::new();
        let ranks: Vec<Vec<usize>> = self.diffs.iter().map(|d| (0..n).map(|u| d.at_vertex(a, u).rank()).collect()).collect();
        for (k, t) in self.terms.iter().enumerate() {
            let dims: Vec<usize> = (0..n)
                .map(|u| {
                    let total: usize = t.iter().map(|&v| a.piece_dim(v, u)).sum();
                    let out_rank = ranks.get(k).map_or(0, |r| r[u]);
                    let in_rank = if k == 0 { 0 } else { ranks[k - 1][u] };
                    total - out_rank - in_rank
                })
                .collect();
            if dims.iter().any(|&d| d > 0) {
                out.insert(self.lo + k as i32, dims);
            }
        }
        out
    }

    /// `(inf, sup)` of the cohomology support, `None` when acyclic.
    pub fn support(&self, a: &Algebra<F>) -> Option<(i32, i32)> {
        let h = self.homology_dims(a);
        Some((*h.keys().next()?, *h.keys().next_back()?))
    }

    /// Cancel invertible differential entries until every entry lies in the
    /// radical. The result is homotopy equivalent to `self`.
    pub fn minimalize(&self, a: &Algebra<F>) -> Self {
        let mut c = self.clone();
        'outer: loop {
            for k in 0..c.diffs.len() {
                let d = &c.diffs[k];
                for r in 0..d.rows.len() {
                    for col in 0..d.cols.len() {
                        let v = d.cols[col];
                        if d.rows[r] != v || d.get(r, col).coeff(a.idempotent(v)).is_zero() {
                            continue;
                        }
                        c.cancel(a, k, r, col);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        c.trimmed()
    }

    /// Gaussian elimination on the unit entry `(r, col)` of `diffs[k]`.
    fn cancel(&mut self, a: &Algebra<F>, k: usize, r: usize, col: usize) {
        let d = &self.diffs[k];
        let v = d.cols[col];
        let phi_inv = local_inverse(a, d.get(r, col), v).expect("unit entry");
        let keep_rows: Vec<usize> = (0..d.rows.len()).filter(|&i| i != r).collect();
        let keep_cols: Vec<usize> = (0..d.cols.len()).filter(|&j| j != col).collect();
        // ε - γ φ⁻¹ δ with δ = row r, γ = column col
        let delta: Vec<Elem<F>> = keep_cols.iter().map(|&j| a.mul(&phi_inv, d.get(r, j))).collect();
        let new_d = BlockMatrix::from_fn(
            &keep_rows.iter().map(|&i| d.rows[i]).collect::<Vec<_>>(),
            &keep_cols.iter().map(|&j| d.cols[j]).collect::<Vec<_>>(),
            |i, j| {
                let eps = d.get(keep_rows[i], keep_cols[j]);
                let gamma = d.get(keep_rows[i], col);
                if gamma.is_zero() || delta[j].is_zero() {
                    eps.clone()
                } else {
                    eps.sub(&a.mul(gamma, &delta[j]))
                }
            },
        );
        self.diffs[k] = new_d;
        // d^{k-1} loses row `col`, d^{k+1} loses column `r`
        if k > 0 {
            let prev = &self.diffs[k - 1];
            let cols: Vec<usize> = (0..prev.cols.len()).collect();
            self.diffs[k - 1] = prev.select(&keep_cols, &cols);
        }
        if k + 1 < self.diffs.len() {
            let next = &self.diffs[k + 1];
            let rows: Vec<usize> = (0..next.rows.len()).collect();
            self.diffs[k + 1] = next.select(&rows, &keep_rows);
        }
        self.terms[k].remove(col);
        self.terms[k + 1].remove(r);
    }
}

/// Chain map `X -> Y` of degree 0: `comps[i]: X^i -> Y^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectMap<F> {
    pub comps: BTreeMap<i32, BlockMatrix<F>>,
}

impl<F: Field> PerfectMap<F> {
    pub fn component(&self, x: &PerfectComplex<F>, y: &PerfectComplex<F>, i: i32) -> BlockMatrix<F> {
        self.comps.get(&i).cloned().unwrap_or_else(|| BlockMatrix::zeros(y.term(i), x.term(i)))
    }

    pub fn is_chain_map(&self, a: &Algebra<F>, x: &PerfectComplex<F>, y: &PerfectComplex<F>) -> bool {
        let lo = x.lo().min(y.lo()) - 1;
        let hi = x.hi().max(y.hi()) + 1;
        (lo..=hi).all(|i| {
            let lhs = y.diff(i).compose(a, &self.component(x, y, i));
            let rhs = self.component(x, y, i + 1).compose(a, &x.diff(i));
            lhs == rhs || lhs.add(&rhs.neg()).is_zero()
        })
    }

    pub fn identity(a: &Algebra<F>, x: &PerfectComplex<F>) -> Self {
        PerfectMap { comps: x.degrees().map(|i| (i, BlockMatrix::identity(a, x.term(i)))).collect() }
    }
}

/// `Cone(f)^i = X^{i+1} ⊕ Y^i`, `d = [[-d_X, 0], [f, d_Y]]`.
pub fn cone<F: Field>(x: &PerfectComplex<F>, y: &PerfectComplex<F>, f: &PerfectMap<F>) -> PerfectComplex<F> {
    if x.is_zero() && y.is_zero() {
        return PerfectComplex::zero();
    }
    let bounds: Vec<i32> = [x.lo() - 1, x.hi() - 1, y.lo(), y.hi()]
        .into_iter()
        .zip([!x.is_zero(), !x.is_zero(), !y.is_zero(), !y.is_zero()])
        .filter(|(_, ok)| *ok)
        .map(|(b, _)| b)
        .collect();
    let lo = *bounds.iter().min().unwrap();
    let hi = *bounds.iter().max().unwrap();
    let terms: Vec<Vec<usize>> = (lo..=hi).map(|i| x.term(i + 1).iter().chain(y.term(i)).copied().collect()).collect();
    let diffs = (lo..hi)
        .map(|i| {
            let tl = x.diff(i + 1).neg();
            let tr = BlockMatrix::zeros(x.term(i + 2), y.term(i));
            let bl = f.component(x, y, i + 1);
            let br = y.diff(i);
            BlockMatrix::assemble(&tl, &tr, &bl, &br)
        })
        .collect();
    PerfectComplex::new(lo, terms, diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::Q;

    #[test]
    fn cone_of_identity_is_contractible() {
        let a = catalog::example_8_1::<Q>().unwrap();
        let p = PerfectComplex::single(2, 0);
        let c = cone(&p, &p, &PerfectMap::identity(&a, &p));
        assert!(c.is_complex(&a));
        assert_eq!(c.total_rank(), 2);
        assert!(c.homology_dims(&a).is_empty());
        assert!(c.minimalize(&a).is_zero());
    }

    #[test]
    fn resolution_of_s1_has_homology_s1() {
        // [P0 -> P1] in degrees -1, 0 via the arrow x: 0 -> 1 of Example 8.1
        let a = catalog::example_8_1::<Q>().unwrap();
        let x = a.quiver().arrow_index("x").unwrap();
        let d = BlockMatrix::from_fn(&[1], &[0], |_, _| a.arrow_elem(x).clone());
        let c = PerfectComplex::new(-1, vec![vec![0], vec![1]], vec![d]);
        assert!(c.is_complex(&a) && c.is_minimal(&a));
        let h = c.homology_dims(&a);
        assert_eq!(h.len(), 1);
        assert_eq!(h[&0], [0, 1, 0]);
        let hm = c.to_complex(&a).homology(&a);
        assert_eq!((hm.inf(), hm.sup()), (Some(0), Some(0)));
        assert_eq!(c.support(&a), Some((0, 0)));
    }

    #[test]
    fn shift_moves_left() {
        let c = PerfectComplex::<Q>::single(0, 0).shift(2);
        assert_eq!((c.lo(), c.hi()), (-2, -2));
    }
}
