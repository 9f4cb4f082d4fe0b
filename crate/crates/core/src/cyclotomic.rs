//! Exact elements of `Z[ζ_n]`.
//!
//! A value with modulus `n` is stored by its coordinates in the power basis
//! `1, ζ_n, .., ζ_n^{φ(n)-1}`, i.e. as the remainder of `Σ c_k x^k` modulo the
//! cyclotomic polynomial `Φ_n`. This basis is an integral basis of `Z[ζ_n]`,
//! so two values are equal exactly when their remainders agree, and an
//! algebraic integer has integer coordinates.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd, lcm};

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(c) = cyclotomic_cache().lock().unwrap().get(&n) {
        return c.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &phi_d);
        }
    }
    let phi = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(n, phi.clone());
    phi
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

#[derive(Clone)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<BigInt>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic::from_int(0)
    }

    pub fn one() -> Self {
        Cyclotomic::from_int(1)
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Cyclotomic {
            n: 1,
            coeffs: vec![v.into()],
        }
    }

    /// The integer `v` viewed in `Z[ζ_n]`.
    pub fn int_in(n: u64, v: impl Into<BigInt>) -> Self {
        let mut c = Cyclotomic::zero_in(n);
        c.coeffs[0] = v.into();
        c
    }

    pub fn zero_in(n: u64) -> Self {
        let phi = cyclotomic_polynomial(n);
        Cyclotomic {
            n,
            coeffs: vec![BigInt::zero(); phi.len() - 1],
        }
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u64, k: u64) -> Self {
        Cyclotomic::from_terms(n, [(BigInt::one(), k)])
    }

    /// `Σ c·ζ_n^k` over the given `(c, k)` terms.
    pub fn from_terms<I>(n: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, u64)>,
    {
        let mut dense = vec![BigInt::zero(); n as usize];
        for (c, k) in terms {
            dense[(k % n) as usize] += c;
        }
        Cyclotomic::reduce(n, dense)
    }

    fn reduce(n: u64, mut dense: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        for i in (deg..dense.len()).rev() {
            if dense[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut dense[i]);
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    dense[i - deg + j] -= &c * pj;
                }
            }
        }
        dense.resize(deg, BigInt::zero());
        Cyclotomic { n, coeffs: dense }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Power-basis coordinates.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The same value in `Z[ζ_m]`; `m` must be a multiple of the modulus.
    pub fn lift(&self, m: u64) -> Self {
        assert!(
            m.is_multiple_of(self.n),
            "cannot lift modulus {} to {}",
            self.n,
            m
        );
        if m == self.n {
            return self.clone();
        }
        let step = m / self.n;
        Cyclotomic::from_terms(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), k as u64 * step)),
        )
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.n == other.n {
            return (self.clone(), other.clone());
        }
        let m = lcm(self.n, other.n);
        (self.lift(m), other.lift(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.n == other.n {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return Cyclotomic { n: self.n, coeffs };
        }
        let (a, b) = self.common(other);
        a.add(&b)
    }

    pub fn add_assign(&mut self, other: &Self) {
        if self.n == other.n {
            for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
                *a += b;
            }
        } else {
            *self = self.add(other);
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.n != other.n {
            let (a, b) = self.common(other);
            return a.mul(&b);
        }
        if self.n == 1 {
            return Cyclotomic::from_int(&self.coeffs[0] * &other.coeffs[0]);
        }
        let len = self.coeffs.len();
        let mut dense = vec![BigInt::zero(); 2 * len - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, b)| !b.is_zero())
            {
                dense[i + j] += a * b;
            }
        }
        Cyclotomic::reduce(self.n, dense)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Image under `ζ_n ↦ ζ_n^k`; `k` must be prime to the modulus.
    pub fn galois(&self, k: u64) -> Self {
        assert!(
            gcd(k % self.n, self.n) == 1 || self.n == 1,
            "{k} is not a unit mod {}",
            self.n
        );
        Cyclotomic::from_terms(
            self.n,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), (i as u64 * k) % self.n)),
        )
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(self.n - 1)
    }

    /// `self / d`, when every coordinate is divisible by `d`.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(Cyclotomic { n: self.n, coeffs })
    }

    /// Order on the stored representation (modulus, then coordinates). Only
    /// meaningful for values of equal modulus, where it is consistent with
    /// equality; used for deterministic sorting.
    pub fn cmp_repr(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// The value written over `ζ_e` (`e` a multiple of the modulus), as
    /// `(coefficient, exponent)` pairs with zero coefficients dropped.
    pub fn terms_over(&self, e: u64) -> Vec<(BigInt, u64)> {
        assert!(e.is_multiple_of(self.n));
        let step = e / self.n;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), k as u64 * step))
            .collect()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integers print plainly; other values as sums of `z<n>^k`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.to_integer() {
            return write!(f, "{v}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let abs = c.abs();
            let mag = if k == 0 {
                abs.to_string()
            } else if abs.is_one() {
                String::new()
            } else {
                format!("{abs}*")
            };
            let root = match k {
                0 => String::new(),
                1 => format!("z{}", self.n),
                _ => format!("z{}^{}", self.n, k),
            };
            write!(f, "{sign}{mag}{root}")?;
            first = false;
        }
        Ok(())
    }
}
