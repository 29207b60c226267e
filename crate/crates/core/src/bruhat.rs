//! Bruhat decomposition `g = u1 n_w h u2` in `SL_n(q)`.
//!
//! The cell of `g` is read off the rank pattern of its lower-left
//! submatrices, which left and right multiplication by upper triangular
//! matrices preserve. The explicit factorization eliminates with row
//! operations from `U` (adding a lower row to a higher one) and column
//! operations from `U` (adding an earlier column to a later one) until a
//! monomial matrix `n_w h` remains.
//!
//! For `PSL` the factors are kept as `SL` matrices so the product is exact
//! before canonicalization; cells are constant on center cosets.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::exec::Exec;
use crate::matgroup::{GroupSpec, Mat, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruhatForm {
    pub u1: Mat,
    pub w: Perm,
    pub h: Mat,
    pub u2: Mat,
}

/// Rank of the submatrix on rows `i..n` and columns `0..j`.
fn corner_rank(spec: &GroupSpec, g: &Mat, i: usize, j: usize) -> usize {
    let n = spec.n();
    let f = spec.field();
    let rows = n - i;
    let mut m = [[0u8; 4]; 4];
    for r in 0..rows {
        for c in 0..j {
            m[r][c] = g.at(i + r, c);
        }
    }
    let mut rank = 0;
    for c in 0..j {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(p, rank);
        let inv = f.inv_code(m[rank][c]);
        for r in rank + 1..rows {
            if m[r][c] == 0 {
                continue;
            }
            let factor = f.neg_code(f.mul_code(m[r][c], inv));
            for cc in c..j {
                m[r][cc] = f.add_code(m[r][cc], f.mul_code(factor, m[rank][cc]));
            }
        }
        rank += 1;
    }
    rank
}

/// The permutation `w` with `g` in `B n_w B`.
pub fn cell_of(spec: &GroupSpec, g: &Mat) -> Perm {
    let n = spec.n();
    let mut r = [[0usize; 5]; 5];
    for (i, row) in r.iter_mut().enumerate().take(n) {
        for (j, x) in row.iter_mut().enumerate().take(n + 1).skip(1) {
            *x = corner_rank(spec, g, i, j);
        }
    }
    let mut perm = vec![usize::MAX; n];
    for (j, slot) in perm.iter_mut().enumerate() {
        for i in 0..n {
            let jump = r[i][j + 1] + r[i + 1][j] - r[i][j] - r[i + 1][j + 1];
            if jump == 1 {
                *slot = i;
            }
        }
    }
    Perm::new(perm).expect("rank jumps of an invertible matrix form a permutation")
}

/// True when every lower-left `k x k` corner minor is nonzero, `k < n`.
pub fn in_big_cell(spec: &GroupSpec, g: &Mat) -> bool {
    let n = spec.n();
    (1..n).all(|k| {
        let rows: Vec<usize> = (n - k..n).collect();
        let cols: Vec<usize> = (0..k).collect();
        spec.minor(g, &rows, &cols) != 0
    })
}

pub fn decompose(spec: &GroupSpec, g: &Mat) -> BruhatForm {
    let n = spec.n();
    let f = spec.field();
    let mut m = *g;
    let mut x = spec.identity();
    let mut y = spec.identity();
    let mut perm = vec![0usize; n];
    for j in 0..n {
        let i = (0..n)
            .rev()
            .find(|&i| m.at(i, j) != 0)
            .expect("group elements have no zero column");
        perm[j] = i;
        let pinv = f.inv_code(m.at(i, j));
        for r in 0..i {
            let c = m.at(r, j);
            if c == 0 {
                continue;
            }
            let c = f.neg_code(f.mul_code(c, pinv));
            for k in 0..n {
                m.set(r, k, f.add_code(m.at(r, k), f.mul_code(c, m.at(i, k))));
                x.set(r, k, f.add_code(x.at(r, k), f.mul_code(c, x.at(i, k))));
            }
        }
        for k in j + 1..n {
            let c = m.at(i, k);
            if c == 0 {
                continue;
            }
            let c = f.neg_code(f.mul_code(c, pinv));
            for r in 0..n {
                m.set(r, k, f.add_code(m.at(r, k), f.mul_code(c, m.at(r, j))));
                y.set(r, k, f.add_code(y.at(r, k), f.mul_code(c, y.at(r, j))));
            }
        }
    }
    let w = Perm::new(perm).expect("pivot rows are distinct");
    let nw = spec.weyl_rep_raw(&w);
    let h = spec.mul_raw(&spec.inv_raw(&nw).unwrap(), &m);
    BruhatForm {
        u1: spec.inv_raw(&x).unwrap(),
        w,
        h,
        u2: spec.inv_raw(&y).unwrap(),
    }
}

/// `u1 n_w h u2`, canonicalized for `PSL`.
pub fn recompose(spec: &GroupSpec, form: &BruhatForm) -> Mat {
    let nw = spec.weyl_rep_raw(&form.w);
    let p = spec.mul_raw(&spec.mul_raw(&form.u1, &nw), &spec.mul_raw(&form.h, &form.u2));
    spec.canonicalize(&p)
}

/// For `g` in the big cell, `(b1, b2)` in `B` with `g = b1 n_w0 b2`.
pub fn opposite_conjugacy_witness(spec: &GroupSpec, g: &Mat) -> Option<(Mat, Mat)> {
    if !in_big_cell(spec, g) {
        return None;
    }
    let form = decompose(spec, g);
    debug_assert_eq!(form.w, Perm::reversal(spec.n()));
    let b2 = spec.mul_raw(&form.h, &form.u2);
    Some((spec.canonicalize(&form.u1), spec.canonicalize(&b2)))
}

/// Size of every Bruhat cell, over the full group.
pub fn cell_census(spec: &GroupSpec, cap: u128) -> Result<BTreeMap<Perm, u64>> {
    cell_census_with(spec, cap, Exec::default())
}

pub fn cell_census_with(spec: &GroupSpec, cap: u128, exec: Exec) -> Result<BTreeMap<Perm, u64>> {
    let all = spec.enumerate_group_with(cap, exec)?.mats();
    Ok(exec
        .fold_chunks(
            &all,
            1024,
            |part| {
                let mut counts = BTreeMap::new();
                for g in part {
                    *counts.entry(cell_of(spec, g)).or_insert(0u64) += 1;
                }
                counts
            },
            |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            },
        )
        .unwrap_or_default())
}
