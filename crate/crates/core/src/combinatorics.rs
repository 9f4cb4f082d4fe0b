//! Partitions, hook lengths, symmetric-group degrees, `ℓ`-cores on the
//! abacus, Nakayama blocks and irreducible degrees of `C_d ≀ S_a`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, valuation};

/// Partitions are enumerated only up to this size.
pub const MAX_PARTITION_SIZE: u32 = 60;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombError {
    #[error("parts {0:?} are not positive and weakly decreasing")]
    NotAPartition(Vec<u32>),
    #[error("partitions of {0} exceed the enumeration limit {MAX_PARTITION_SIZE}")]
    TooLarge(u32),
    #[error("{0} is not a prime")]
    NotAPrime(u64),
    #[error("{0} must be at least 2")]
    BadModulus(u64),
    #[error("a = {a} outside [ℓ, ℓ²) for ℓ = {ell}")]
    OutOfRange { a: u32, ell: u32 },
    #[error("ℓ = {ell} does not divide |C_{d} wr S_{a}|")]
    NotDividing { d: u32, a: u32, ell: u32 },
    #[error("wreath label has {found} components, expected {expected}")]
    BadLabel { expected: usize, found: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = CombError;

    fn try_from(parts: Vec<u32>) -> Result<Self, CombError> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Drops zeros and sorts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// First-column hook lengths `λ_i + (k - i)` (0-based `i`) for `k` parts.
    pub fn beta_numbers(&self, k: usize) -> Vec<u32> {
        assert!(k >= self.len());
        (0..k)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + (k - 1 - i) as u32)
            .collect()
    }

    fn from_beta(mut beta: Vec<u32>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let k = beta.len() as u32;
        Partition::from_unsorted(
            beta.iter()
                .enumerate()
                .map(|(i, &b)| b + 1 + i as u32 - k)
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // rightmost part > 1, decrease it and refill greedily
        if let Some(i) = cur.iter().rposition(|&x| x > 1) {
            let mut nxt = cur[..i].to_vec();
            let v = cur[i] - 1;
            let mut rest: u32 = cur[i..].iter().sum::<u32>() - v;
            nxt.push(v);
            while rest > 0 {
                let t = rest.min(v);
                nxt.push(t);
                rest -= t;
            }
            self.next = Some(nxt);
        }
        Some(Partition { parts: cur })
    }
}

pub fn partitions(n: u32) -> Result<Partitions, CombError> {
    if n > MAX_PARTITION_SIZE {
        return Err(CombError::TooLarge(n));
    }
    Ok(Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    })
}

/// Hook lengths in row-major cell order.
pub fn hook_lengths(lambda: &Partition) -> Vec<u64> {
    let conj = lambda.conjugate();
    let mut out = Vec::with_capacity(lambda.size() as usize);
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.parts[j] as usize - i - 1;
            out.push((arm + leg + 1) as u64);
        }
    }
    out
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `ν_ℓ(n!)` by Legendre's formula.
pub fn legendre(n: u64, ell: u64) -> u32 {
    let mut v = 0;
    let mut q = n / ell;
    while q > 0 {
        v += q as u32;
        q /= ell;
    }
    v
}

fn big_valuation(x: &BigUint, ell: u64) -> u32 {
    let ell = BigUint::from(ell);
    let mut x = x.clone();
    let mut v = 0;
    while !x.is_zero() && (&x % &ell).is_zero() {
        x /= &ell;
        v += 1;
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degree {
    #[serde(with = "biguint_string")]
    pub degree: BigUint,
    pub ell: u64,
    pub valuation: u32,
}

mod biguint_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// `n!/∏ hooks`.
pub fn degree_sn(lambda: &Partition) -> BigUint {
    let hooks: BigUint = hook_lengths(lambda)
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    let n = factorial(lambda.size() as u64);
    debug_assert!((&n % &hooks).is_zero());
    n / hooks
}

/// Degree and `ℓ`-adic valuation; the valuation is computed both from the
/// big integer and as `ν_ℓ(n!) - Σ ν_ℓ(hooks)`, and the two must agree.
pub fn degree_sn_valuation(lambda: &Partition, ell: u64) -> Degree {
    let degree = degree_sn(lambda);
    let arithmetic = legendre(lambda.size() as u64, ell)
        - hook_lengths(lambda)
            .iter()
            .map(|&h| valuation(h, ell))
            .sum::<u32>();
    let direct = big_valuation(&degree, ell);
    assert_eq!(direct, arithmetic, "valuation routes disagree for {lambda}");
    Degree {
        degree,
        ell,
        valuation: direct,
    }
}

fn check_modulus(ell: u64) -> Result<(), CombError> {
    if ell < 2 {
        Err(CombError::BadModulus(ell))
    } else {
        Ok(())
    }
}

/// `ℓ`-core via the abacus: beta-numbers for a bead count padded to a
/// multiple of `ℓ`, each runner's beads pushed to the top.
pub fn ell_core(lambda: &Partition, ell: u64) -> Result<Partition, CombError> {
    check_modulus(ell)?;
    let ell = ell as usize;
    let k = lambda.len().div_ceil(ell).max(1) * ell;
    let beta = lambda.beta_numbers(k);
    let mut counts = vec![0u32; ell];
    for &b in &beta {
        counts[b as usize % ell] += 1;
    }
    let core_beta = counts
        .iter()
        .enumerate()
        .flat_map(|(r, &c)| (0..c).map(move |i| r as u32 + i * ell as u32))
        .collect();
    Ok(Partition::from_beta(core_beta))
}

/// `(|λ| - |core|) / ℓ`.
pub fn ell_weight(lambda: &Partition, ell: u64) -> Result<u32, CombError> {
    Ok((lambda.size() - ell_core(lambda, ell)?.size()) / ell as u32)
}

/// No hook length divisible by `ℓ`.
pub fn is_ell_core(lambda: &Partition, ell: u64) -> Result<bool, CombError> {
    check_modulus(ell)?;
    Ok(hook_lengths(lambda).iter().all(|h| h % ell != 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreWitness {
    pub b: u32,
    pub core: Partition,
}

/// For `ℓ ≤ a < ℓ²`: an `ℓ`-core of size `b` with `ℓ ≤ b < 2ℓ` and
/// `b ≡ a (mod ℓ)`, the first in enumeration order; `None` if there is none.
pub fn core_existence(a: u32, ell: u32) -> Result<Option<CoreWitness>, CombError> {
    if !is_prime(ell as u64) {
        return Err(CombError::NotAPrime(ell as u64));
    }
    if a < ell || a >= ell * ell {
        return Err(CombError::OutOfRange { a, ell });
    }
    for b in (ell..2 * ell).filter(|b| b % ell == a % ell) {
        for lambda in partitions(b)? {
            if is_ell_core(&lambda, ell as u64)? {
                return Ok(Some(CoreWitness { b, core: lambda }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakayamaBlock {
    pub core: Partition,
    pub weight: u32,
    pub partitions: Vec<Partition>,
}

/// Partitions of `n` grouped by `ℓ`-core, blocks in order of first
/// appearance in the enumeration.
pub fn nakayama_blocks(n: u32, ell: u64) -> Result<Vec<NakayamaBlock>, CombError> {
    let mut blocks: Vec<NakayamaBlock> = Vec::new();
    for lambda in partitions(n)? {
        let core = ell_core(&lambda, ell)?;
        match blocks.iter_mut().find(|b| b.core == core) {
            Some(b) => b.partitions.push(lambda),
            None => blocks.push(NakayamaBlock {
                weight: (n - core.size()) / ell as u32,
                core,
                partitions: vec![lambda],
            }),
        }
    }
    Ok(blocks)
}

/// A `d`-tuple of partitions of total size `a`, labeling an irreducible
/// character of `C_d ≀ S_a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathLabel {
    pub components: Vec<Partition>,
}

impl WreathLabel {
    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for WreathLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "[{}]", s.join(", "))
    }
}

/// All labels for `(d, a)`, produced lazily: compositions of `a` into `d`
/// parts in reverse lexicographic order, then partitions per component.
pub struct WreathLabels {
    d: usize,
    by_size: Vec<Vec<Partition>>,
    // current composition and per-component partition indices
    composition: Option<Vec<u32>>,
    odometer: Vec<usize>,
}

impl WreathLabels {
    fn advance_composition(&mut self) {
        let Some(c) = self.composition.as_mut() else {
            return;
        };
        // the last nonzero entry among the first d-1 moves one unit right
        let d = c.len();
        match (0..d.saturating_sub(1)).rev().find(|&i| c[i] > 0) {
            Some(i) => {
                c[i] -= 1;
                let tail: u32 = c[i + 1..].iter().sum::<u32>() + 1;
                for x in &mut c[i + 1..] {
                    *x = 0;
                }
                c[i + 1] = tail;
            }
            None => self.composition = None,
        }
        self.odometer = vec![0; self.d];
    }
}

impl Iterator for WreathLabels {
    type Item = WreathLabel;

    fn next(&mut self) -> Option<WreathLabel> {
        let comp = self.composition.as_ref()?;
        let components: Vec<Partition> = comp
            .iter()
            .zip(&self.odometer)
            .map(|(&s, &i)| self.by_size[s as usize][i].clone())
            .collect();
        // step the odometer, last component fastest
        let mut k = self.d;
        loop {
            if k == 0 {
                self.advance_composition();
                break;
            }
            k -= 1;
            let limit = self.by_size[comp[k] as usize].len();
            if self.odometer[k] + 1 < limit {
                self.odometer[k] += 1;
                break;
            }
            self.odometer[k] = 0;
        }
        Some(WreathLabel { components })
    }
}

pub fn wreath_labels(d: u32, a: u32) -> Result<WreathLabels, CombError> {
    let by_size = (0..=a)
        .map(|s| partitions(s).map(Iterator::collect))
        .collect::<Result<_, _>>()?;
    let d = d.max(1) as usize;
    let mut composition = vec![0; d];
    composition[0] = a;
    Ok(WreathLabels {
        d,
        by_size,
        composition: Some(composition),
        odometer: vec![0; d],
    })
}

/// `multinomial(a; |λ^(1)|, …, |λ^(d)|) · ∏ f_{λ^(i)}` with its `ℓ`-adic
/// valuation, again cross-checked against a purely arithmetic route.
pub fn wreath_degree(label: &WreathLabel, ell: u64) -> Degree {
    let a = label.size() as u64;
    let mut degree = factorial(a);
    let mut arithmetic = legendre(a, ell) as i64;
    for lambda in &label.components {
        let s = lambda.size() as u64;
        degree /= factorial(s);
        arithmetic -= legendre(s, ell) as i64;
        let part = degree_sn_valuation(lambda, ell);
        degree *= part.degree;
        arithmetic += part.valuation as i64;
    }
    let direct = big_valuation(&degree, ell);
    assert_eq!(
        direct as i64, arithmetic,
        "valuation routes disagree for {label}"
    );
    Degree {
        degree,
        ell,
        valuation: direct,
    }
}

/// A label whose degree has `ℓ`-part exactly `ℓ`, the first in
/// enumeration order, or `None`.
pub fn check_unipdef(d: u32, a: u32, ell: u32) -> Result<Option<(WreathLabel, Degree)>, CombError> {
    if !is_prime(ell as u64) {
        return Err(CombError::NotAPrime(ell as u64));
    }
    if valuation(d as u64, ell as u64) == 0 && legendre(a as u64, ell as u64) == 0 {
        return Err(CombError::NotDividing { d, a, ell });
    }
    for label in wreath_labels(d, a)? {
        let deg = wreath_degree(&label, ell as u64);
        if deg.valuation == 1 {
            return Ok(Some((label, deg)));
        }
    }
    Ok(None)
}

/// Sum of squared degrees over all labels, as a `u128` when it fits.
pub fn wreath_degree_square_sum(d: u32, a: u32) -> Result<Option<u128>, CombError> {
    let mut total = BigUint::zero();
    for label in wreath_labels(d, a)? {
        let deg = wreath_degree(&label, 2).degree;
        total += &deg * &deg;
    }
    Ok(total.to_u128())
}
