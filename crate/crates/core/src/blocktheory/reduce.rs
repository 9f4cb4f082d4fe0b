//! Reduction of cyclotomic integers modulo a prime over `p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{gcd, inv_mod, multiplicative_order, split_p_part};
use crate::cyclotomic::Cyclotomic;
use crate::gf::{ExtField, GfElem};

use super::BlockError;

/// The ring map `Z[ζ_e] → F_{p^f}`, `ζ_e ↦ ω̄^u`, where `e = p^a·m`,
/// `f = ord_m(p)`, `ω̄` is a primitive `m`-th root of unity and
/// `u ≡ (p^a)^{-1} (mod m)`, so `p`-power roots of unity go to `1`.
#[derive(Clone, Debug)]
pub struct Reduction {
    e: u64,
    m: u64,
    u: u64,
    field: ExtField,
    // powers[k] = ω̄^k for k < m
    powers: Vec<GfElem>,
}

impl Reduction {
    pub fn new(e: u64, p: u64) -> Result<Self, BlockError> {
        Reduction::with_root(e, p, 0)
    }

    /// `root_choice` selects `ω̄ = ω̄_0^k` for the `root_choice`-th `k`
    /// coprime to `m` (taken modulo `φ(m)`), where `ω̄_0` is the field's
    /// first primitive `m`-th root.
    pub fn with_root(e: u64, p: u64, root_choice: usize) -> Result<Self, BlockError> {
        let (a, m) = split_p_part(e, p);
        let f = multiplicative_order(p % m.max(1), m);
        let field = usize::try_from(f)
            .ok()
            .and_then(|f| ExtField::new(p, f))
            .filter(|k| k.size() <= 1 << 40)
            .ok_or(BlockError::FieldTooLarge { p, f })?;
        let base = field.primitive_root_of_unity(m).expect("m divides p^f - 1");
        let coprime: Vec<u64> = (1..=m).filter(|&k| gcd(k, m) == 1).collect();
        let k = coprime[root_choice % coprime.len()];
        let root = field.pow(&base, k as u128);
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = field.one();
        for _ in 0..m {
            powers.push(cur.clone());
            cur = field.mul(&cur, &root);
        }
        let pa = p.pow(a) % m.max(1);
        let u = if m == 1 {
            0
        } else {
            inv_mod(pa, m).expect("p^a is a unit mod m")
        };
        Ok(Reduction {
            e,
            m,
            u,
            field,
            powers,
        })
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    /// Number of distinct root choices, `φ(m)`.
    pub fn root_choices(&self) -> usize {
        (1..=self.m).filter(|&k| gcd(k, self.m) == 1).count()
    }

    /// Image of `x`, whose modulus must divide `e`.
    pub fn reduce(&self, x: &Cyclotomic) -> GfElem {
        let n = x.modulus();
        assert!(
            self.e.is_multiple_of(n),
            "modulus {n} does not divide {}",
            self.e
        );
        let p = BigInt::from(self.field.characteristic());
        // ζ_n = ζ_e^{e/n} ↦ ω̄^{u·e/n}
        let step = (self.u as u128 * (self.e / n) as u128 % self.m as u128) as u64;
        let mut acc = self.field.zero();
        let mut exp = 0u64;
        for c in x.coeffs() {
            let c = c.mod_floor(&p).to_u64().expect("reduced below p");
            if c != 0 {
                let term = self.field.scale(&self.powers[exp as usize], c);
                acc = self.field.add(&acc, &term);
            }
            exp = (exp + step) % self.m;
        }
        acc
    }
}

/// Reduces `x` modulo `p` in the residue field of `Z[ζ_n]`, `n` its modulus.
pub fn reduce_mod_p(x: &Cyclotomic, p: u64) -> Result<GfElem, BlockError> {
    Ok(Reduction::new(x.modulus(), p)?.reduce(x))
}
