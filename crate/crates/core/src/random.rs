//! Random test objects. Randomness comes from the caller as
//! `next(n) -> value in 0..n`, so any generator can drive these.

use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};
use crate::complex::{BlockMatrix, PerfectComplex};
use crate::field::Field;
use crate::linalg::Matrix;

pub type Source<'a> = &'a mut dyn FnMut(u64) -> u64;

/// Small nonzero-biased scalar in `-3..=3`.
pub fn scalar<F: Field>(next: Source) -> F {
    F::from_i64(next(7) as i64 - 3)
}

/// Random element of the piece `A_{uv}`.
pub fn elem<F: Field>(a: &Algebra<F>, u: usize, v: usize, next: Source) -> Elem<F> {
    Elem::from_terms(a.piece(u, v).map(|i| (i, scalar::<F>(next))).collect::<Vec<_>>())
}

pub fn vertices(n: usize, max_rank: usize, next: Source) -> Vec<usize> {
    let k = 1 + next(max_rank as u64) as usize;
    (0..k).map(|_| next(n as u64) as usize).collect()
}

pub fn block_matrix<F: Field>(a: &Algebra<F>, rows: &[usize], cols: &[usize], next: Source) -> BlockMatrix<F> {
    BlockMatrix::from_fn(rows, cols, |r, c| elem(a, rows[r], cols[c], next))
}

/// Random `d: cols -> rows` with `d ∘ prev = 0`.
fn differential_after<F: Field>(a: &Algebra<F>, prev: &BlockMatrix<F>, rows: &[usize], next: Source) -> BlockMatrix<F> {
    let cols = prev.row_vertices();
    let mut vars = Vec::new();
    for r in 0..rows.len() {
        for c in 0..cols.len() {
            for i in a.piece(rows[r], cols[c]) {
                vars.push((r, c, i));
            }
        }
    }
    let out_cols = prev.col_vertices().len();
    let n = a.dim();
    let mut constraint = Matrix::<F>::zeros(rows.len() * out_cols * n, vars.len());
    for (j, &(r, c, i)) in vars.iter().enumerate() {
        let mut unit = BlockMatrix::zeros(rows, cols);
        unit.set(r, c, Elem::basis(i));
        let comp = unit.compose(a, prev);
        for rr in 0..rows.len() {
            for cc in 0..out_cols {
                for (k, x) in comp.get(rr, cc).terms() {
                    constraint.set((rr * out_cols + cc) * n + k, j, x.clone());
                }
            }
        }
    }
    let kernel = constraint.kernel();
    let mut d = BlockMatrix::zeros(rows, cols);
    for k in 0..kernel.cols() {
        let s: F = scalar(next);
        if s.is_zero() {
            continue;
        }
        for (j, &(r, c, i)) in vars.iter().enumerate() {
            let x = kernel.get(j, k);
            if !x.is_zero() {
                let e = d.get(r, c).add(&Elem::from_terms([(i, x.mul(&s))]));
                d.set(r, c, e);
            }
        }
    }
    d
}

/// Complex with up to `max_len` terms of up to `max_rank` summands, lowest
/// degree in `-2..=0`. Differentials are random subject to `d∘d = 0`.
pub fn complex<F: Field>(a: &Algebra<F>, max_len: usize, max_rank: usize, next: Source) -> PerfectComplex<F> {
    let len = 1 + next(max_len as u64) as usize;
    let lo = -(next(3) as i32);
    let terms: Vec<Vec<usize>> = (0..len).map(|_| vertices(a.vertex_count(), max_rank, next)).collect();
    let mut diffs: Vec<BlockMatrix<F>> = Vec::new();
    for k in 1..len {
        let d = match diffs.last() {
            None => block_matrix(a, &terms[k], &terms[k - 1], next),
            Some(prev) => differential_after(a, prev, &terms[k], next),
        };
        diffs.push(d);
    }
    PerfectComplex::new(lo, terms, diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::Q;

    #[test]
    fn random_complexes_are_complexes() {
        let a = catalog::example_8_1::<Q>().unwrap();
        let mut state = 12345u64;
        let mut next = |n: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % n
        };
        for _ in 0..20 {
            let c = complex(&a, 4, 3, &mut next);
            assert!(c.is_complex(&a));
        }
    }
}
