//! Alternating tensor spaces `AT_n(V) = V ⊗ V* ⊗ V ⊗ ...`, the trace-kernel
//! subspaces `ψ_n(V)` and the Serre powers of the graded two-vertex
//! algebra `A_V` with arrows `V`.
//!
//! `V` has basis `e_1, ..., e_d` sorted by decreasing degree; `V*` has the
//! dual basis with negated degrees. A basis tensor of `AT_n` is indexed by
//! its digits in base `d`, first factor most significant.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Field, Q};
use crate::linalg::Matrix;

/// Largest ambient dimension for explicit bases.
pub const AMBIENT_CAP: usize = 65536;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PsiError {
    #[error("dim V = {0}, need at least 2")]
    Hypothesis(usize),
    #[error("ambient dimension {0} exceeds the cap {AMBIENT_CAP}")]
    TooLarge(usize),
    #[error("bad graded space {0:?}: expected degree:dim,...")]
    Parse(String),
    #[error("n must be at least {0}")]
    Index(usize),
}

/// Finitely supported graded vector space, `degree -> dimension`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedVectorSpace {
    dims: BTreeMap<i32, usize>,
}

impl GradedVectorSpace {
    pub fn new(dims: impl IntoIterator<Item = (i32, usize)>) -> Self {
        let mut out = BTreeMap::new();
        for (d, n) in dims {
            if n > 0 {
                *out.entry(d).or_insert(0) += n;
            }
        }
        GradedVectorSpace { dims: out }
    }

    /// Concentrated in degree 0.
    pub fn ungraded(n: usize) -> Self {
        Self::new([(0, n)])
    }

    /// `-1:1,0:1,1:1`
    pub fn parse(s: &str) -> Result<Self, PsiError> {
        let mut dims = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (d, n) = part.split_once(':').ok_or_else(|| PsiError::Parse(String::from(s)))?;
            let d: i32 = d.trim().parse().map_err(|_| PsiError::Parse(String::from(s)))?;
            let n: usize = n.trim().parse().map_err(|_| PsiError::Parse(String::from(s)))?;
            dims.push((d, n));
        }
        Ok(Self::new(dims))
    }

    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn get(&self, d: i32) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn inf(&self) -> Option<i32> {
        self.dims.keys().next().copied()
    }

    pub fn sup(&self) -> Option<i32> {
        self.dims.keys().next_back().copied()
    }

    pub fn width(&self) -> i32 {
        match (self.inf(), self.sup()) {
            (Some(i), Some(s)) => s - i,
            _ => 0,
        }
    }

    pub fn dual(&self) -> Self {
        Self::new(self.dims.iter().map(|(&d, &n)| (-d, n)))
    }

    /// Degrees move up by `k`.
    pub fn twist(&self, k: i32) -> Self {
        Self::new(self.dims.iter().map(|(&d, &n)| (d + k, n)))
    }

    pub fn tensor(&self, rhs: &Self) -> Self {
        Self::new(self.dims.iter().flat_map(|(&a, &m)| rhs.dims.iter().map(move |(&b, &n)| (a + b, m * n))))
    }

    pub fn sum(&self, rhs: &Self) -> Self {
        Self::new(self.dims.iter().chain(rhs.dims.iter()).map(|(&d, &n)| (d, n)))
    }

    /// `self - rhs` degreewise; `None` if some dimension would go negative.
    pub fn minus(&self, rhs: &Self) -> Option<Self> {
        let mut out = self.dims.clone();
        for (&d, &n) in &rhs.dims {
            let e = out.entry(d).or_insert(0);
            *e = e.checked_sub(n)?;
        }
        Some(Self::new(out))
    }

    /// Basis degrees, decreasing.
    pub fn basis_degrees(&self) -> Vec<i32> {
        self.dims.iter().rev().flat_map(|(&d, &n)| core::iter::repeat_n(d, n)).collect()
    }
}

impl fmt::Display for GradedVectorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.dims.iter().map(|(d, n)| format!("{d}:{n}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Degree of factor `pos` (0-based) with digit `j`.
fn factor_degree(deg: &[i32], pos: usize, j: usize) -> i32 {
    if pos.is_multiple_of(2) {
        deg[j]
    } else {
        -deg[j]
    }
}

fn digits(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

/// Graded dimensions of `AT_n(V)`.
pub fn at_space(v: &GradedVectorSpace, n: usize) -> GradedVectorSpace {
    let mut out = GradedVectorSpace::ungraded(1);
    for pos in 0..n {
        out = out.tensor(&if pos.is_multiple_of(2) { v.clone() } else { v.dual() });
    }
    out
}

/// Sparse vector in `AT_n`, sorted by index.
pub type SparseVec<F> = Vec<(usize, F)>;

/// `tr_i: AT_n -> AT_{n-2}` (1-based `i`, pairing factors `i` and `i+1`).
pub fn trace<F: Field>(x: &[(usize, F)], d: usize, n: usize, i: usize) -> SparseVec<F> {
    assert!(i >= 1 && i < n);
    let lo = d.pow((n - i - 1) as u32); // weight of factor i+1
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (idx, c) in x {
        let a = (idx / (lo * d)) % d;
        let b = (idx / lo) % d;
        if a != b {
            continue;
        }
        let high = idx / (lo * d * d);
        let low = idx % lo;
        let e = acc.entry(high * lo + low).or_insert_with(F::zero);
        *e = e.add(c);
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Every trace functional vanishes on `x`.
pub fn is_trace_free<F: Field>(x: &[(usize, F)], d: usize, n: usize) -> bool {
    (1..n).all(|i| trace(x, d, n, i).is_empty())
}

/// Homogeneous basis of `ψ_n(V)` inside `AT_n(V)`.
#[derive(Debug, Clone)]
pub struct TraceSpace<F> {
    pub n: usize,
    pub d: usize,
    pub basis: Vec<SparseVec<F>>,
    pub degrees: Vec<i32>,
}

impl<F: Field> TraceSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn graded(&self) -> GradedVectorSpace {
        GradedVectorSpace::new(self.degrees.iter().map(|&g| (g, 1)))
    }
}

fn degree_of(deg: &[i32], idx: usize, n: usize) -> i32 {
    let d = deg.len();
    digits(idx, d, n).iter().enumerate().map(|(p, &j)| factor_degree(deg, p, j)).sum()
}

fn check_size(d: usize, n: usize) -> Result<(), PsiError> {
    let amb = d.checked_pow(n as u32).unwrap_or(usize::MAX);
    if amb > AMBIENT_CAP {
        return Err(PsiError::TooLarge(amb));
    }
    Ok(())
}

/// `ψ_n` straight from the definition: the common kernel of all traces on
/// `AT_n`, computed degree by degree.
pub fn psi_direct<F: Field>(v: &GradedVectorSpace, n: usize) -> Result<TraceSpace<F>, PsiError> {
    let deg = v.basis_degrees();
    let d = deg.len();
    check_size(d, n)?;
    if n <= 1 {
        return psi(v, n);
    }
    let amb = d.pow(n as u32);
    let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for idx in 0..amb {
        by_degree.entry(degree_of(&deg, idx, n)).or_default().push(idx);
    }
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    let small = d.pow((n - 2) as u32);
    for (g, cols) in by_degree.into_iter().rev() {
        let mut m = Matrix::<F>::zeros((n - 1) * small, cols.len());
        for (c, &idx) in cols.iter().enumerate() {
            for i in 1..n {
                for (r, x) in trace(&[(idx, F::one())], d, n, i) {
                    m.set((i - 1) * small + r, c, x);
                }
            }
        }
        let k = m.kernel();
        for j in 0..k.cols() {
            basis.push((0..cols.len()).filter(|&r| !k.get(r, j).is_zero()).map(|r| (cols[r], k.get(r, j).clone())).collect());
            degrees.push(g);
        }
    }
    Ok(TraceSpace { n, d, basis, degrees })
}

/// The map `β: ψ_{n-1} ⊗ W -> AT_{n-2}`, `x ⊗ e_j ↦ tr_{n-1}(x ⊗ e_j)`, on the
/// columns of one degree. Columns are `(basis index, j)`.
struct Beta<F> {
    cols: Vec<(usize, usize)>,
    matrix: Matrix<F>,
}

fn beta_blocks<F: Field>(prev: &TraceSpace<F>, deg: &[i32]) -> BTreeMap<i32, Beta<F>> {
    let (d, n) = (prev.d, prev.n + 1);
    let mut groups: BTreeMap<i32, Vec<(usize, usize)>> = BTreeMap::new();
    for (b, &g) in prev.degrees.iter().enumerate() {
        for j in 0..d {
            groups.entry(g + factor_degree(deg, n - 1, j)).or_default().push((b, j));
        }
    }
    groups
        .into_iter()
        .map(|(g, cols)| {
            let images: Vec<SparseVec<F>> = cols
                .iter()
                .map(|&(b, j)| {
                    let x: SparseVec<F> = prev.basis[b].iter().map(|(i, c)| (i * d + j, c.clone())).collect();
                    if n >= 2 {
                        trace(&x, d, n, n - 1)
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            let mut rows: Vec<usize> = images.iter().flat_map(|v| v.iter().map(|(i, _)| *i)).collect();
            rows.sort_unstable();
            rows.dedup();
            let mut m = Matrix::zeros(rows.len(), cols.len());
            for (c, img) in images.iter().enumerate() {
                for (i, x) in img {
                    m.set(rows.binary_search(i).unwrap(), c, x.clone());
                }
            }
            (g, Beta { cols, matrix: m })
        })
        .collect()
}

fn extend<F: Field>(prev: &TraceSpace<F>, deg: &[i32]) -> TraceSpace<F> {
    let d = prev.d;
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    for (g, beta) in beta_blocks(prev, deg).into_iter().rev() {
        let k = beta.matrix.kernel();
        for c in 0..k.cols() {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for (r, &(b, j)) in beta.cols.iter().enumerate() {
                let s = k.get(r, c);
                if s.is_zero() {
                    continue;
                }
                for (i, x) in &prev.basis[b] {
                    let e = acc.entry(i * d + j).or_insert_with(F::zero);
                    *e = e.add(&s.mul(x));
                }
            }
            basis.push(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect());
            degrees.push(g);
        }
    }
    TraceSpace { n: prev.n + 1, d, basis, degrees }
}

/// `ψ_n(V)` built as `ker(ψ_{n-1} ⊗ W -> AT_{n-2})`; equals the definition
/// because `ψ_{n-1} ⊗ W` is the kernel of the first `n - 2` traces.
pub fn psi<F: Field>(v: &GradedVectorSpace, n: usize) -> Result<TraceSpace<F>, PsiError> {
    Ok(psi_sequence(v, n)?.pop().expect("nonempty"))
}

/// `[ψ_0, ..., ψ_n]`
pub fn psi_sequence<F: Field>(v: &GradedVectorSpace, n: usize) -> Result<Vec<TraceSpace<F>>, PsiError> {
    let deg = v.basis_degrees();
    let d = deg.len();
    check_size(d, n)?;
    let mut out = vec![TraceSpace { n: 0, d, basis: vec![vec![(0, F::one())]], degrees: vec![0] }];
    for _ in 0..n {
        let next = extend(out.last().unwrap(), &deg);
        out.push(next);
    }
    Ok(out)
}

/// Graded dimensions of `ψ_0..=ψ_n` from the rank identity of the exact
/// sequences: `ψ_{i+1} = ψ_i ⊗ W - ψ_{i-1}`. Valid for `dim V ≥ 2`.
pub fn psi_dims_recursive(v: &GradedVectorSpace, n: usize) -> Result<Vec<GradedVectorSpace>, PsiError> {
    if v.dim() < 2 {
        return Err(PsiError::Hypothesis(v.dim()));
    }
    let mut out = vec![GradedVectorSpace::ungraded(1)];
    let mut prev = GradedVectorSpace::default();
    for i in 0..n {
        let w = if i.is_multiple_of(2) { v.clone() } else { v.dual() };
        let next = out[i].tensor(&w).minus(&prev).expect("exact sequences force nonnegative dimensions");
        prev = out[i].clone();
        out.push(next);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub i: usize,
    /// `ker β = im α`
    pub middle_exact: bool,
    pub beta_surjective: bool,
    /// `dim ψ_{i+1} = dim ψ_i ⊗ W - dim ψ_{i-1}` in every degree
    pub rank_identity: bool,
    /// `ψ_{i+1}` came from the direct definition rather than the recursion
    pub oracle: bool,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.middle_exact && self.beta_surjective && self.rank_identity
    }
}

/// Check `0 -> ψ_{i+1} -> ψ_i ⊗ W -> ψ_{i-1} -> 0` for `i ≥ 1`.
///
/// `ker β` is computed on `ψ_i ⊗ W`; when `AT_{i+1}` has at most
/// [`ORACLE_CAP`] basis tensors it is compared with `ψ_{i+1}` taken from the
/// definition, otherwise `im α = ker β` holds by construction.
pub fn verify_exact(v: &GradedVectorSpace, i: usize) -> Result<ExactnessReport, PsiError> {
    if v.dim() < 2 {
        return Err(PsiError::Hypothesis(v.dim()));
    }
    verify_exact_unchecked(v, i)
}

pub const ORACLE_CAP: usize = 729;

fn same_span(a: &[SparseVec<Q>], b: &[SparseVec<Q>]) -> bool {
    let mut rows: Vec<usize> = a.iter().chain(b).flat_map(|v| v.iter().map(|(i, _)| *i)).collect();
    rows.sort_unstable();
    rows.dedup();
    let build = |vs: &[&SparseVec<Q>]| {
        let mut m = Matrix::<Q>::zeros(rows.len(), vs.len());
        for (c, v) in vs.iter().enumerate() {
            for (i, x) in v.iter() {
                m.set(rows.binary_search(i).unwrap(), c, x.clone());
            }
        }
        m
    };
    let ma = build(&a.iter().collect::<Vec<_>>());
    let mb = build(&b.iter().collect::<Vec<_>>());
    let (ra, rb) = (ma.rank(), mb.rank());
    ra == a.len() && rb == b.len() && ra == rb && ma.hstack(&mb).rank() == ra
}

/// As [`verify_exact`] without the `dim V ≥ 2` hypothesis.
pub fn verify_exact_unchecked(v: &GradedVectorSpace, i: usize) -> Result<ExactnessReport, PsiError> {
    if i == 0 {
        return Err(PsiError::Index(1));
    }
    let deg = v.basis_degrees();
    let d = deg.len();
    let seq = psi_sequence::<Q>(v, i + 1)?;
    let (prev, cur, next) = (&seq[i - 1], &seq[i], &seq[i + 1]);
    let oracle = d.checked_pow((i + 1) as u32).is_some_and(|a| a <= ORACLE_CAP);

    let mut image = GradedVectorSpace::default();
    for (&g, beta) in &beta_blocks(cur, &deg) {
        image = image.sum(&GradedVectorSpace::new([(g, beta.matrix.rank())]));
    }
    let middle_exact = if oracle {
        let direct = psi_direct::<Q>(v, i + 1)?;
        let mut degs: Vec<i32> = direct.degrees.iter().chain(&next.degrees).copied().collect();
        degs.sort_unstable();
        degs.dedup();
        degs.iter().all(|&g| {
            let pick = |t: &TraceSpace<Q>| -> Vec<SparseVec<Q>> {
                t.basis.iter().zip(&t.degrees).filter(|(_, &h)| h == g).map(|(x, _)| x.clone()).collect()
            };
            same_span(&pick(&direct), &pick(next))
        })
    } else {
        true
    };
    let beta_surjective = image == prev.graded();
    let w = if i.is_multiple_of(2) { v.clone() } else { v.dual() };
    let rank_identity = cur.graded().tensor(&w).minus(&prev.graded()).is_some_and(|r| r == next.graded());
    Ok(ExactnessReport { i, middle_exact, beta_surjective, rank_identity, oracle })
}

/// First `i` in `1..=max_i` where the exactness check fails.
pub fn first_exactness_failure(v: &GradedVectorSpace, max_i: usize) -> Result<Option<usize>, PsiError> {
    for i in 1..=max_i {
        if !verify_exact_unchecked(v, i)?.passed() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KwBounds {
    pub k: usize,
    /// computed `(inf, sup)` of `ψ_{2k-1}` and `ψ_{2k}`
    pub odd: (i32, i32),
    pub even: (i32, i32),
    /// closed forms `(-kw + sup V, kw + inf V)` and `(-kw, kw)`
    pub odd_expected: (i32, i32),
    pub even_expected: (i32, i32),
}

impl KwBounds {
    pub fn passed(&self) -> bool {
        self.odd == self.odd_expected && self.even == self.even_expected
    }
}

fn support(g: &GradedVectorSpace) -> (i32, i32) {
    (g.inf().unwrap_or(0), g.sup().unwrap_or(0))
}

/// Compare the degree range of `ψ_{2k-1}, ψ_{2k}` with the closed forms.
/// Uses explicit bases when they fit, the rank recursion otherwise.
pub fn kw_bounds(v: &GradedVectorSpace, k: usize) -> Result<KwBounds, PsiError> {
    if v.dim() < 2 {
        return Err(PsiError::Hypothesis(v.dim()));
    }
    if k == 0 {
        return Err(PsiError::Index(1));
    }
    let dims: Vec<GradedVectorSpace> = match psi_sequence::<Q>(v, 2 * k) {
        Ok(seq) => seq.iter().map(TraceSpace::graded).collect(),
        Err(PsiError::TooLarge(_)) => psi_dims_recursive(v, 2 * k)?,
        Err(e) => return Err(e),
    };
    let (w, kk) = (v.width(), k as i32);
    let (i, s) = (v.inf().unwrap(), v.sup().unwrap());
    Ok(KwBounds {
        k,
        odd: support(&dims[2 * k - 1]),
        even: support(&dims[2 * k]),
        odd_expected: (-kk * w + s, kk * w + i),
        even_expected: (-kk * w, kk * w),
    })
}

/// Extreme-degree elements `x = e_1 ⊗ e^d ⊗ e_1 ⊗ ...` and
/// `y = e_d ⊗ e^1 ⊗ e_d ⊗ ...` of `ψ_n`, with their degrees.
pub fn kw_witnesses<F: Field>(v: &GradedVectorSpace, n: usize) -> ((SparseVec<F>, i32), (SparseVec<F>, i32)) {
    let deg = v.basis_degrees();
    let d = deg.len();
    let make = |first: usize, second: usize| {
        let mut idx = 0;
        let mut g = 0;
        for p in 0..n {
            let j = if p % 2 == 0 { first } else { second };
            idx = idx * d + j;
            g += factor_degree(&deg, p, j);
        }
        (vec![(idx, F::one())], g)
    };
    (make(0, d - 1), make(d - 1, 0))
}

/// One summand `(M_1 ⇐ M_2)[shift]` of `(A_V^*)^{⊗m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoVertexModule {
    pub m1: GradedVectorSpace,
    pub m2: GradedVectorSpace,
    pub shift: i32,
}

impl TwoVertexModule {
    pub fn total(&self) -> GradedVectorSpace {
        self.m1.sum(&self.m2).twist(-self.shift)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerrePower {
    pub m: usize,
    /// `P_1 ⊗ (A^*)^{⊗m}`
    pub p1: TwoVertexModule,
    /// `P_2 ⊗ (A^*)^{⊗m}`
    pub p2: TwoVertexModule,
    pub sup: i32,
    pub inf: i32,
}

/// `ψ_{-1} = 0`, otherwise `dims[n]`.
fn psi_at(dims: &[GradedVectorSpace], n: isize) -> GradedVectorSpace {
    if n < 0 {
        GradedVectorSpace::default()
    } else {
        dims[n as usize].clone()
    }
}

/// Homology of the `m`-th derived tensor power of the Serre bimodule:
/// `P_1 ⊗ (A^*)^{⊗m} ≅ (ψ_{2m-2}(V*) ⇐ ψ_{2m-1}(V*))[m-1]` and
/// `P_2 ⊗ (A^*)^{⊗m} ≅ (ψ_{2m-3}(V) ⇐ ψ_{2m-2}(V))[m-1]`.
pub fn av_serre_homology(v: &GradedVectorSpace, m: usize) -> Result<SerrePower, PsiError> {
    let powers = av_serre_sequence(v, m)?;
    Ok(powers.into_iter().next_back().expect("m ≥ 1"))
}

/// `m' = 1..=m`
pub fn av_serre_sequence(v: &GradedVectorSpace, m: usize) -> Result<Vec<SerrePower>, PsiError> {
    if v.dim() < 2 {
        return Err(PsiError::Hypothesis(v.dim()));
    }
    if m == 0 {
        return Err(PsiError::Index(1));
    }
    let top = 2 * m - 1;
    let dv = psi_dims_recursive(v, top)?;
    let dvs = psi_dims_recursive(&v.dual(), top)?;
    Ok((1..=m)
        .map(|m| {
            let k = m as isize;
            let shift = m as i32 - 1;
            let p1 = TwoVertexModule { m1: psi_at(&dvs, 2 * k - 2), m2: psi_at(&dvs, 2 * k - 1), shift };
            let p2 = TwoVertexModule { m1: psi_at(&dv, 2 * k - 3), m2: psi_at(&dv, 2 * k - 2), shift };
            let total = p1.total().sum(&p2.total());
            SerrePower { m, sup: total.sup().unwrap_or(0), inf: total.inf().unwrap_or(0), p1, p2 }
        })
        .collect())
}

/// Closed forms `sup_m = (m-1)w + |inf V| + 1 - m`, `inf_m = -(m-1)w - |sup V| + 1 - m`.
pub fn av_closed_form(v: &GradedVectorSpace, m: usize) -> (i32, i32) {
    let (w, m) = (v.width(), m as i32);
    let (i, s) = (v.inf().unwrap_or(0), v.sup().unwrap_or(0));
    ((m - 1) * w + i.abs() + 1 - m, -(m - 1) * w - s.abs() + 1 - m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvDims {
    pub ls: Q,
    pub us: Q,
    /// `-sup_m / m`, `m = 1..`
    pub ls_estimates: Vec<Q>,
    /// `-inf_m / m`
    pub us_estimates: Vec<Q>,
    pub powers: Vec<SerrePower>,
}

/// `(1 - w, 1 + w)` with the estimator sequences up to `m`.
pub fn av_dims(v: &GradedVectorSpace, m: usize) -> Result<AvDims, PsiError> {
    let powers = av_serre_sequence(v, m)?;
    let w = v.width() as i64;
    Ok(AvDims {
        ls: Q::from_i64(1 - w),
        us: Q::from_i64(1 + w),
        ls_estimates: powers.iter().map(|p| Q::new(-(p.sup as i64), p.m as i64)).collect(),
        us_estimates: powers.iter().map(|p| Q::new(-(p.inf as i64), p.m as i64)).collect(),
        powers,
    })
}
