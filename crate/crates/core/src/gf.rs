//! Finite fields `F_{p^f}` realized as `F_p[x] / (g)` for the first monic
//! irreducible `g` of degree `f` in lexicographic coefficient order.

use crate::arith::{add_mod, prime_factors, sub_mod};
use crate::poly;

/// An element of `F_{p^f}`: coefficient vector of length exactly `f`.
pub type GfElem = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    p: u64,
    f: usize,
    modulus: Vec<u64>,
    size: u128,
}

impl ExtField {
    /// Builds `F_{p^f}`. Returns `None` if `p^f` overflows `u128`.
    pub fn new(p: u64, f: usize) -> Option<Self> {
        assert!(f >= 1);
        let mut size: u128 = 1;
        for _ in 0..f {
            size = size.checked_mul(p as u128)?;
        }
        let modulus = if f == 1 {
            vec![0, 1]
        } else {
            first_irreducible(p, f)
        };
        Some(ExtField {
            p,
            f,
            modulus,
            size,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    pub fn size(&self) -> u128 {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> GfElem {
        vec![0; self.f]
    }

    pub fn one(&self) -> GfElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: u64) -> GfElem {
        let mut v = self.zero();
        v[0] = n % self.p;
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> GfElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| add_mod(x, y, self.p))
            .collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> GfElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| sub_mod(x, y, self.p))
            .collect()
    }

    pub fn scale(&self, a: &[u64], c: u64) -> GfElem {
        let c = c % self.p;
        a.iter()
            .map(|&x| crate::arith::mul_mod(x, c, self.p))
            .collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> GfElem {
        let prod = poly::mul(a, b, self.p);
        self.pad(poly::rem(&prod, &self.modulus, self.p))
    }

    pub fn pow(&self, a: &[u64], mut e: u128) -> GfElem {
        let mut acc = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &[u64]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    /// The `index`-th element in base-`p` counting order of its coefficients.
    pub fn element(&self, mut index: u128) -> GfElem {
        let mut v = self.zero();
        for c in v.iter_mut() {
            *c = (index % self.p as u128) as u64;
            index /= self.p as u128;
        }
        v
    }

    /// Multiplicative order of a nonzero element dividing `p^f - 1`.
    pub fn has_order(&self, a: &[u64], m: u64) -> bool {
        if !self.is_one(&self.pow(a, m as u128)) {
            return false;
        }
        prime_factors(m)
            .iter()
            .all(|&r| !self.is_one(&self.pow(a, (m / r) as u128)))
    }

    /// The first primitive `m`-th root of unity obtained as `a^((p^f-1)/m)`
    /// for `a` running over the field in counting order. Requires `m | p^f - 1`.
    pub fn primitive_root_of_unity(&self, m: u64) -> Option<GfElem> {
        let order = self.size - 1;
        if m == 0 || !order.is_multiple_of(m as u128) {
            return None;
        }
        let cofactor = order / m as u128;
        let mut idx = 1u128;
        while idx < self.size {
            let cand = self.pow(&self.element(idx), cofactor);
            if self.has_order(&cand, m) {
                return Some(cand);
            }
            idx += 1;
        }
        None
    }

    fn pad(&self, mut v: Vec<u64>) -> GfElem {
        v.resize(self.f, 0);
        v
    }
}

fn first_irreducible(p: u64, f: usize) -> Vec<u64> {
    let mut idx: u128 = 0;
    loop {
        let mut g = vec![0u64; f + 1];
        g[f] = 1;
        let mut rest = idx;
        for c in g.iter_mut().take(f) {
            *c = (rest % p as u128) as u64;
            rest /= p as u128;
        }
        if g[0] != 0 && poly::is_irreducible(&g, p) {
            return g;
        }
        idx += 1;
    }
}
