//! Dense linear algebra over a prime field `F_q`: row reduction, kernels and
//! characteristic polynomials, as needed for eigenspace splitting.

use crate::arith::{add_mod, inv_mod, mul_mod, sub_mod};
use crate::poly::Poly;

pub type Matrix = Vec<Vec<u64>>;

/// In-place reduced row echelon form; returns pivot columns. Zero rows are
/// removed.
pub fn rref(rows: &mut Matrix, q: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][c], q).expect("q prime");
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, q);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = sub_mod(*x, mul_mod(f, y, q), q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right kernel `{x : A x = 0}` of a (rows × cols) matrix.
pub fn kernel(a: &Matrix, ncols: usize, q: u64) -> Matrix {
    let mut m = a.clone();
    let pivots = rref(&mut m, q);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; ncols];
            v[fc] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = sub_mod(0, row[fc], q);
            }
            v
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[u64], q: u64) -> Vec<u64> {
    a.iter()
        .map(|row| {
            if q <= u32::MAX as u64 {
                // Products fit in 64 bits; reduce every few terms.
                let mut acc = 0u64;
                for (chunk_a, chunk_v) in row.chunks(8).zip(v.chunks(8)) {
                    for (&x, &y) in chunk_a.iter().zip(chunk_v) {
                        acc = (acc + x * y) % q;
                    }
                }
                acc
            } else {
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&x, &y)| add_mod(acc, mul_mod(x, y, q), q))
            }
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)` (monic, little-endian) via
/// reduction to upper Hessenberg form.
pub fn charpoly(a: &Matrix, q: u64) -> Poly {
    let n = a.len();
    let mut h = a.clone();
    // Similarity transform to Hessenberg form.
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let inv = inv_mod(h[k + 1][k], q).unwrap();
        for i in k + 2..n {
            if h[i][k] == 0 {
                continue;
            }
            let f = mul_mod(h[i][k], inv, q);
            // row_i -= f * row_{k+1}
            let (top, bottom) = h.split_at_mut(i);
            for (x, &y) in bottom[0].iter_mut().zip(&top[k + 1]) {
                *x = sub_mod(*x, mul_mod(f, y, q), q);
            }
            // col_{k+1} += f * col_i
            for row in h.iter_mut() {
                let t = mul_mod(f, row[i], q);
                row[k + 1] = add_mod(row[k + 1], t, q);
            }
        }
    }
    // Recurrence for characteristic polynomials of leading principal blocks.
    let mut polys: Vec<Poly> = vec![vec![1]];
    for m in 1..=n {
        // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_{i<m-1} h[i][m-1] * prod_{j=i+1}^{m-1} h[j][j-1] * p_i
        let mut pm = shift(&polys[m - 1]);
        let diag = h[m - 1][m - 1];
        axpy(&mut pm, &polys[m - 1], sub_mod(0, diag, q), q);
        let mut prod = 1u64;
        for i in (0..m - 1).rev() {
            prod = mul_mod(prod, h[i + 1][i], q);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(h[i][m - 1], prod, q);
            axpy(&mut pm, &polys[i], sub_mod(0, coef, q), q);
        }
        polys.push(pm);
    }
    let mut out = polys.pop().unwrap();
    crate::poly::trim(&mut out);
    out
}

fn shift(p: &[u64]) -> Poly {
    let mut out = vec![0];
    out.extend_from_slice(p);
    out
}

fn axpy(acc: &mut Poly, p: &[u64], c: u64, q: u64) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, &x) in acc.iter_mut().zip(p) {
        *a = add_mod(*a, mul_mod(c, x, q), q);
    }
}
