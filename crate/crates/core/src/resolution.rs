//! Projective resolutions of modules and bounded complexes, Ext and
//! global dimension.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};
use crate::complex::{BlockMatrix, Complex, PerfectComplex};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{map_from_generators, piece_elem, projective_sum, simple, top_generators, ModuleError, ModuleMap, RightModule};

/// Default cap: `dim A + 2`.
pub fn default_cap<F: Field>(a: &Algebra<F>) -> usize {
    a.dim() + 2
}

/// A minimal perfect complex quasi-isomorphic to `x`.
///
/// Works from the top degree down: at degree `n` it covers the cocycles of
/// the cone of the partial comparison map `P^{≥n+1} -> X` modulo the
/// coboundaries coming from `X`, then minimalizes. Fails when a projective
/// is needed more than `cap` degrees below the bottom of `x`.
pub fn resolve_complex<F: Field>(a: &Algebra<F>, x: &Complex<F>, cap: usize) -> Result<PerfectComplex<F>, ModuleError> {
    let nv = a.vertex_count();
    let (lo, hi) = (x.lo(), x.hi());
    let zero = RightModule::zero(a);
    let xterm = |i: i32| x.term(i).unwrap_or(&zero);

    let mut terms: Vec<Vec<usize>> = Vec::new(); // from the top degree down
    let mut diffs: Vec<BlockMatrix<F>> = Vec::new(); // diffs[k]: terms[k+1] -> terms[k]

    // data for P^{n+1}
    let mut p_next: Vec<usize> = Vec::new();
    let mut p_next_mod = projective_sum(a, &p_next);
    let mut dp_next: Option<ModuleMap<F>> = None; // P^{n+1} -> P^{n+2}
    let mut f_next = ModuleMap::zero(&p_next_mod, xterm(hi + 1));
    let mut p_next2_dims: Vec<usize> = vec![0; nv];

    let mut n = hi;
    loop {
        let xn = xterm(n);
        let xn1 = xterm(n + 1);
        if n < lo && p_next.is_empty() {
            break;
        }
        let c = RightModule::direct_sum(&[&p_next_mod, xn]);
        let mut z = Vec::with_capacity(nv);
        let mut b = Vec::with_capacity(nv);
        for u in 0..nv {
            let (pd, xd) = (p_next_mod.dims()[u], xn.dims()[u]);
            let (pd2, xd1) = (p_next2_dims[u], xn1.dims()[u]);
            let mut dc = Matrix::zeros(pd2 + xd1, pd + xd);
            if let Some(dp) = &dp_next {
                dc.set_block(0, 0, &dp.comps[u].neg());
            }
            dc.set_block(pd2, 0, &f_next.comps[u]);
            if let Some(dx) = x.diff(n) {
                dc.set_block(pd2, pd, &dx.comps[u]);
            }
            z.push(dc.kernel());
            let mut bu = Matrix::zeros(pd + xd, 0);
            if let Some(dx) = x.diff(n - 1) {
                let img = dx.comps[u].image();
                let mut padded = Matrix::zeros(pd + xd, img.cols());
                padded.set_block(pd, 0, &img);
                bu = padded;
            }
            b.push(bu);
        }
        let gens = top_generators(&c, a, &z, &b);
        if !gens.is_empty() && n < lo - cap as i32 {
            return Err(ModuleError::CapExceeded(cap));
        }
        let summands: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
        // split generators into the P^{n+1} and X^n components
        let mut dp_block = BlockMatrix::zeros(&p_next, &summands);
        let mut x_gens = Vec::with_capacity(gens.len());
        for (j, (u, g)) in gens.iter().enumerate() {
            let mut off = 0;
            for (r, &w) in p_next.iter().enumerate() {
                let len = a.piece_dim(w, *u);
                let e: Elem<F> = piece_elem(a, &g[off..off + len], w, *u);
                dp_block.set(r, j, e.neg());
                off += len;
            }
            x_gens.push(g[off..].to_vec());
        }
        let f_n = map_from_generators(a, &summands, &x_gens, xn);
        let p_mod = projective_sum(a, &summands);
        if !terms.is_empty() || !p_next.is_empty() {
            diffs.push(dp_block.clone());
        }
        terms.push(summands.clone());

        p_next2_dims = p_next_mod.dims().to_vec();
        dp_next = Some(dp_block.to_module_map(a));
        p_next = summands;
        p_next_mod = p_mod;
        f_next = f_n;
        n -= 1;
    }
    if terms.is_empty() {
        return Ok(PerfectComplex::zero());
    }
    // terms[0] is degree hi, terms[k] is degree hi - k; diffs[k]: terms[k+1] -> terms[k]
    let top = hi;
    let count = terms.len();
    let degree_lo = top - count as i32 + 1;
    terms.reverse();
    diffs.truncate(count - 1);
    diffs.reverse();
    Ok(PerfectComplex::new(degree_lo, terms, diffs).minimalize(a))
}

/// Minimal projective resolution `P^{-k} -> ... -> P^0` of `m`.
pub fn min_resolution<F: Field>(a: &Algebra<F>, m: &RightModule<F>, cap: usize) -> Result<PerfectComplex<F>, ModuleError> {
    resolve_complex(a, &Complex::single(m.clone(), 0), cap)
}

/// Projective dimension from a minimal resolution.
pub fn projective_dimension<F: Field>(a: &Algebra<F>, m: &RightModule<F>, cap: usize) -> Result<usize, ModuleError> {
    let p = min_resolution(a, m, cap)?;
    Ok(if p.is_zero() { 0 } else { (-p.lo()) as usize })
}

/// `dim Ext^i(m, n)` for `i = 0..=pd(m)`.
pub fn ext_table<F: Field>(a: &Algebra<F>, m: &RightModule<F>, n: &RightModule<F>, cap: usize) -> Result<Vec<usize>, ModuleError> {
    let p = min_resolution(a, m, cap)?;
    if p.is_zero() {
        return Ok(vec![0]);
    }
    let len = (-p.lo()) as usize;
    // Hom(P^{-j}, N) = ⊕ N_v and δ^j: Hom(P^{-j}, N) -> Hom(P^{-j-1}, N)
    let hom_dim = |j: usize| -> usize { p.term(-(j as i32)).iter().map(|&v| n.dims()[v]).sum() };
    let delta = |j: usize| -> Matrix<F> {
        let src = p.term(-(j as i32));
        let dst = p.term(-(j as i32) - 1);
        let d = p.diff(-(j as i32) - 1); // P^{-j-1} -> P^{-j}
        let rows: usize = dst.iter().map(|&v| n.dims()[v]).sum();
        let cols: usize = src.iter().map(|&w| n.dims()[w]).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for (c, &v) in dst.iter().enumerate() {
            let mut c0 = 0;
            for (r, &w) in src.iter().enumerate() {
                let e = d.get(r, c);
                if !e.is_zero() {
                    m.set_block(r0, c0, &n.elem_action(a, e, w, v));
                }
                c0 += n.dims()[w];
            }
            r0 += n.dims()[v];
        }
        m
    };
    let ranks: Vec<usize> = (0..=len).map(|j| delta(j).rank()).collect();
    Ok((0..=len).map(|j| hom_dim(j) - ranks[j] - if j == 0 { 0 } else { ranks[j - 1] }).collect())
}

pub fn ext<F: Field>(a: &Algebra<F>, m: &RightModule<F>, n: &RightModule<F>, i: usize, cap: usize) -> Result<usize, ModuleError> {
    Ok(ext_table(a, m, n, cap)?.get(i).copied().unwrap_or(0))
}

/// Maximum projective dimension of the simples.
pub fn gldim<F: Field>(a: &Algebra<F>, cap: usize) -> Result<usize, ModuleError> {
    let mut best = 0;
    for v in 0..a.vertex_count() {
        best = best.max(projective_dimension(a, &simple(a, v)?, cap)?);
    }
    Ok(best)
}

/// Euler form `Σ (-1)^i dim Ext^i(m, n)`.
pub fn euler_form<F: Field>(a: &Algebra<F>, m: &RightModule<F>, n: &RightModule<F>, cap: usize) -> Result<i64, ModuleError> {
    Ok(ext_table(a, m, n, cap)?.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum())
}
