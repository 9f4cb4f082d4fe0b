//! Permutation realizations of split metacyclic groups, extraspecial groups
//! of order `p^3` and wreath products `C_d ≀ S_a`, and `mh(P)` for `p`-groups.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime, is_prime_power_of, pow_mod, valuation};
use crate::blocktheory::MinHeight;
use crate::chartable::{dixon_degrees, CharTableError, DixonOptions};
use crate::perm::Perm;
use crate::permgroup::{derived_subgroup, ConjClasses, PermGroup, PermGroupError};

#[derive(Debug, thiserror::Error)]
pub enum PGroupError {
    #[error("action parameter r = {r} does not satisfy r^(p^n) = 1 mod p^m with r a unit")]
    BadActionParameter { r: u64 },
    #[error("group of order {order} is not a {p}-group")]
    NotAPGroup { order: u64, p: u64 },
    #[error("{0} is not a prime")]
    NotAPrime(u64),
    #[error("{linear} linear characters but [P:P'] = {index}")]
    LinearCountMismatch { linear: usize, index: u64 },
    #[error("parameters too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Group(#[from] PermGroupError),
    #[error(transparent)]
    Table(#[from] CharTableError),
}

/// `⟨x, y | x^{p^m} = y^{p^n} = 1, x^y = x^r⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetacyclicSpec {
    pub p: u64,
    pub m: u32,
    pub n: u32,
    pub r: u64,
}

impl MetacyclicSpec {
    fn moduli(&self) -> Result<(u64, u64), PGroupError> {
        let too_large = || {
            PGroupError::TooLarge(format!(
                "{}^{} + {}^{} points",
                self.p, self.m, self.p, self.n
            ))
        };
        let pm = self.p.checked_pow(self.m).ok_or_else(too_large)?;
        let pn = self.p.checked_pow(self.n).ok_or_else(too_large)?;
        if pm + pn > crate::perm::MAX_DEGREE as u64 {
            return Err(too_large());
        }
        Ok((pm, pn))
    }

    pub fn is_valid(&self) -> bool {
        self.moduli().is_ok_and(|(pm, pn)| {
            gcd(self.r % pm, pm) == 1 && pow_mod(self.r, pn as u128, pm) == 1 % pm
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.moduli().is_ok_and(|(pm, _)| (self.r % pm) == 1 % pm)
    }
}

/// Realizes the split metacyclic group on `p^m + p^n` points: `x` cycles
/// `Z/p^m`, `y` multiplies it by `r` while cycling `Z/p^n`.
pub fn metacyclic(spec: MetacyclicSpec) -> Result<PermGroup, PGroupError> {
    if !is_prime(spec.p) {
        return Err(PGroupError::NotAPrime(spec.p));
    }
    let (pm, pn) = spec.moduli()?;
    if !spec.is_valid() {
        return Err(PGroupError::BadActionParameter { r: spec.r });
    }
    let (pm_, pn_) = (pm as usize, pn as usize);
    let degree = pm_ + pn_;
    let r = (spec.r % pm) as usize;
    let mut x: Vec<u16> = (0..degree as u16).collect();
    let mut y = x.clone();
    for i in 0..pm_ {
        x[i] = ((i + 1) % pm_) as u16;
        y[i] = ((i * r) % pm_) as u16;
    }
    for j in 0..pn_ {
        y[pm_ + j] = (pm_ + (j + 1) % pn_) as u16;
    }
    let x = Perm::from_images(x).map_err(PermGroupError::from)?;
    let y = Perm::from_images(y).map_err(PermGroupError::from)?;
    debug_assert!(x.pow(pm).is_identity() && y.pow(pn).is_identity());
    debug_assert_eq!(x.conjugate_by(&y), x.pow(r as u64));
    let name = format!("M({},{},{},{})", spec.p, spec.m, spec.n, spec.r);
    Ok(PermGroup::new(name, degree, vec![x, y])?)
}

/// All valid action parameters `r ∈ [1, p^m)` for `(p, m, n)`.
pub fn metacyclic_parameters(p: u64, m: u32, n: u32) -> Vec<u64> {
    let pm = p.pow(m);
    (1..pm.max(2))
        .filter(|&r| MetacyclicSpec { p, m, n, r }.is_valid())
        .collect()
}

/// Lemma-style witness for a non-abelian split metacyclic group: a linear
/// character `λ_k: x ↦ ζ^k` of `⟨x⟩` whose stabilizer has index exactly `p`,
/// obtained as a power `λ_base^power` of the first non-invariant character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerWitness {
    pub base: u64,
    pub power: u64,
    pub character: u64,
    pub orbit: u64,
}

/// Computes the witness from the realized group: reads off `s` with
/// `x^y = x^s` from the permutations, then orbits of `k ↦ k·s` on `Z/p^m`.
pub fn metacyclic_stabilizer_witness(
    spec: MetacyclicSpec,
) -> Result<Option<StabilizerWitness>, PGroupError> {
    let g = metacyclic(spec)?;
    let (pm, _) = spec.moduli()?;
    let (x, y) = (
        &g.generators()[0],
        g.generators()
            .get(1)
            .cloned()
            .unwrap_or_else(|| Perm::identity(g.degree())),
    );
    let conj = x.conjugate_by(&y);
    let s = (0..pm)
        .find(|&k| x.pow(k) == conj)
        .expect("x^y lies in <x>");
    let orbit_len = |k: u64| {
        let mut len = 1;
        let mut cur = k * s % pm;
        while cur != k {
            cur = cur * s % pm;
            len += 1;
        }
        len
    };
    let Some(base) = (1..pm).find(|&k| orbit_len(k) > 1) else {
        return Ok(None);
    };
    Ok((1..pm)
        .find(|&j| orbit_len(base * j % pm) == spec.p)
        .map(|power| StabilizerWitness {
            base,
            power,
            character: base * power % pm,
            orbit: spec.p,
        }))
}

/// Heisenberg group mod `p` on `p^2` points: `(u,v) ↦ (u+1,v)` and
/// `(u,v) ↦ (u,v+u)`. Extraspecial of exponent `p` for odd `p`; `D_8` for
/// `p = 2`.
pub fn heisenberg(p: u64) -> Result<PermGroup, PGroupError> {
    if !is_prime(p) {
        return Err(PGroupError::NotAPrime(p));
    }
    if p * p > crate::perm::MAX_DEGREE as u64 {
        return Err(PGroupError::TooLarge(format!("{p}^2 points")));
    }
    let p = p as usize;
    let pt = |u: usize, v: usize| (u % p * p + v % p) as u16;
    let a: Vec<u16> = (0..p * p).map(|i| pt(i / p + 1, i % p)).collect();
    let b: Vec<u16> = (0..p * p).map(|i| pt(i / p, i % p + i / p)).collect();
    let gens = vec![
        Perm::from_images(a).map_err(PermGroupError::from)?,
        Perm::from_images(b).map_err(PermGroupError::from)?,
    ];
    Ok(PermGroup::new(format!("{p}^(1+2)+"), p * p, gens)?)
}

/// Extraspecial group of order `p^3`: exponent `p` (Heisenberg) or
/// exponent `p^2` (split metacyclic with `r = 1 + p`). For `p = 2` these
/// are `D_8` and `Q_8` is not produced.
pub fn extraspecial(p: u64, exponent_p: bool) -> Result<PermGroup, PGroupError> {
    if exponent_p {
        heisenberg(p)
    } else {
        Ok(metacyclic(MetacyclicSpec {
            p,
            m: 2,
            n: 1,
            r: 1 + p,
        })?
        .with_name(format!("{p}^(1+2)-")))
    }
}

/// `d^a·a!`, if it fits in `u64`.
pub fn wreath_order(d: u64, a: u64) -> Option<u64> {
    let mut n = d.checked_pow(u32::try_from(a).ok()?)?;
    for k in 2..=a {
        n = n.checked_mul(k)?;
    }
    Some(n)
}

/// `C_d ≀ S_a` acting imprimitively on `d·a` points (block `b` holds points
/// `b·d .. b·d + d - 1`). Fails with `CapExceeded` when the order exceeds
/// `cap`.
pub fn wreath_cyclic_symmetric(d: usize, a: usize, cap: usize) -> Result<PermGroup, PGroupError> {
    if d == 0 || a == 0 {
        return Err(PGroupError::TooLarge("d and a must be positive".into()));
    }
    let order = wreath_order(d as u64, a as u64).filter(|&n| n <= cap as u64);
    if order.is_none() {
        return Err(PermGroupError::CapExceeded { cap }.into());
    }
    let n = d * a;
    if n > crate::perm::MAX_DEGREE {
        return Err(PGroupError::TooLarge(format!("{n} points")));
    }
    let mut gens = Vec::new();
    let base: Vec<u16> = (0..n)
        .map(|i| {
            if i < d {
                ((i + 1) % d) as u16
            } else {
                i as u16
            }
        })
        .collect();
    gens.push(base);
    if a >= 2 {
        let block_map = |f: &dyn Fn(usize) -> usize| -> Vec<u16> {
            (0..n).map(|i| (f(i / d) * d + i % d) as u16).collect()
        };
        gens.push(block_map(&|b| match b {
            0 => 1,
            1 => 0,
            _ => b,
        }));
        gens.push(block_map(&|b| (b + 1) % a));
    }
    gens.dedup();
    let perms = gens
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<Vec<_>, _>>()
        .map_err(PermGroupError::from)?;
    Ok(PermGroup::new(format!("C{d}wrS{a}"), n, perms)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PGroupMh {
    pub p: u64,
    pub order: u64,
    /// Sorted irreducible degrees.
    pub degrees: Vec<u64>,
    /// `[P : P']`.
    pub abelianization: u64,
    pub mh: MinHeight,
}

impl PGroupMh {
    pub fn count_of_degree(&self, d: u64) -> usize {
        self.degrees.iter().filter(|&&x| x == d).count()
    }
}

/// `log_p` of the smallest nonlinear degree of `P`, `∞` iff `P` is abelian.
/// Checks that the number of linear characters equals `[P : P']`.
pub fn mh_pgroup(group: &PermGroup, p: u64, cap: usize) -> Result<PGroupMh, PGroupError> {
    if !is_prime(p) {
        return Err(PGroupError::NotAPrime(p));
    }
    let elements = group.enumerate(cap)?;
    let order = elements.order();
    if !is_prime_power_of(order, p) {
        return Err(PGroupError::NotAPGroup { order, p });
    }
    let classes = ConjClasses::compute(&elements);
    let degrees = dixon_degrees(&elements, &classes, &DixonOptions::default())?;
    let derived = derived_subgroup(group, cap)?.enumerate(cap)?.order();
    let abelianization = order / derived;
    let linear = degrees.iter().filter(|&&d| d == 1).count();
    if linear as u64 != abelianization {
        return Err(PGroupError::LinearCountMismatch {
            linear,
            index: abelianization,
        });
    }
    let mh = degrees
        .iter()
        .find(|&&d| d > 1)
        .map_or(MinHeight::Infinite, |&d| MinHeight::Finite(valuation(d, p)));
    Ok(PGroupMh {
        p,
        order,
        degrees,
        abelianization,
        mh,
    })
}
