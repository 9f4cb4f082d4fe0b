//! Dense univariate polynomials over a prime field `F_p`.
//!
//! Coefficients are stored little-endian and kept trimmed, so the zero
//! polynomial is the empty vector.

use crate::arith::{add_mod, inv_mod, mul_mod, prime_factors, sub_mod};

pub type Poly = Vec<u64>;

pub fn trim(f: &mut Poly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub fn degree(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn add(f: &[u64], g: &[u64], p: u64) -> Poly {
    let n = f.len().max(g.len());
    let mut out: Poly = (0..n)
        .map(|i| add_mod(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub fn sub(f: &[u64], g: &[u64], p: u64) -> Poly {
    let n = f.len().max(g.len());
    let mut out: Poly = (0..n)
        .map(|i| sub_mod(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub fn mul(f: &[u64], g: &[u64], p: u64) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `g` must be nonzero.
pub fn divrem(f: &[u64], g: &[u64], p: u64) -> (Poly, Poly) {
    assert!(!g.is_empty(), "division by the zero polynomial");
    let mut r = f.to_vec();
    trim(&mut r);
    if r.len() < g.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*g.last().unwrap(), p).expect("leading coefficient invertible");
    let dg = g.len() - 1;
    let mut q = vec![0u64; r.len() - dg];
    for i in (0..q.len()).rev() {
        let c = mul_mod(r[i + dg], lead_inv, p);
        q[i] = c;
        if c != 0 {
            for (j, &b) in g.iter().enumerate() {
                r[i + j] = sub_mod(r[i + j], mul_mod(c, b, p), p);
            }
        }
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub fn rem(f: &[u64], g: &[u64], p: u64) -> Poly {
    divrem(f, g, p).1
}

pub fn monic(f: &[u64], p: u64) -> Poly {
    match f.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = inv_mod(lead, p).expect("nonzero leading coefficient");
            f.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(f: &[u64], g: &[u64], p: u64) -> Poly {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `base^exp mod modulus`.
pub fn pow_rem(base: &[u64], mut exp: u128, modulus: &[u64], p: u64) -> Poly {
    let mut acc: Poly = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter()
        .rev()
        .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// Distinct roots in `F_p` of `f`, in increasing order.
///
/// Uses `gcd(f, x^p - x)` followed by equal-degree splitting with the
/// deterministic shifts `(x + a)^((p-1)/2) - 1`, `a = 0, 1, 2, ...`.
pub fn distinct_roots(f: &[u64], p: u64) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    if p <= 64 {
        return (0..p).filter(|&x| eval(&f, x, p) == 0).collect();
    }
    let f = monic(&f, p);
    let xq = pow_rem(&[0, 1], p as u128, &f, p);
    let g = gcd(&f, &sub(&xq, &[0, 1], p), p);
    let mut roots = Vec::new();
    split_linear(&g, p, &mut roots);
    roots.sort_unstable();
    roots
}

fn split_linear(g: &[u64], p: u64, roots: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => roots.push(sub_mod(0, g[0], p)),
        _ => {
            let half = ((p - 1) / 2) as u128;
            for a in 0..p {
                let h = pow_rem(&[a, 1], half, g, p);
                let d = gcd(g, &sub(&h, &[1], p), p);
                if d.len() > 1 && d.len() < g.len() {
                    let (other, _) = divrem(g, &d, p);
                    split_linear(&d, p, roots);
                    split_linear(&monic(&other, p), p, roots);
                    return;
                }
            }
            // Unreachable for squarefree split input; fall back to brute force.
            roots.extend((0..p).filter(|&x| eval(g, x, p) == 0));
        }
    }
}

/// Rabin's irreducibility test for a monic polynomial over `F_p`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = match degree(f) {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    // x^(p^k) mod f for k = 0..=n
    let mut frob = vec![rem(&x, f, p)];
    for k in 1..=n {
        let next = pow_rem(&frob[k - 1], p as u128, f, p);
        frob.push(next);
    }
    if sub(&frob[n], &rem(&x, f, p), p) != Vec::<u64>::new() {
        return false;
    }
    prime_factors(n as u64).iter().all(|&r| {
        let k = n / r as usize;
        gcd(f, &sub(&frob[k], &x, p), p).len() == 1
    })
}

/// The polynomial `x^k` as coefficient vector.
pub fn monomial(k: usize) -> Poly {
    let mut v = vec![0; k + 1];
    v[k] = 1;
    v
}
