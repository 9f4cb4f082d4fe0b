//! Finite permutation groups: enumeration, conjugacy classes, power maps,
//! Sylow subgroups and class fusion.

mod chain;
mod classes;
mod elements;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub use chain::StabilizerChain;
pub use classes::ConjClasses;
pub use elements::Enumerated;

use crate::arith::{is_prime, is_prime_power_of, valuation};
use crate::perm::{Perm, PermError};

/// Default element-enumeration cap.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermGroupError {
    #[error("group has more than {cap} elements (enumeration cap)")]
    CapExceeded { cap: usize },
    #[error("element {0} of the proposed subgroup is not in the group")]
    NotASubgroup(String),
    #[error("generator degree {found} does not match group degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{0} is not a prime")]
    NotAPrime(u64),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group file: {0}")]
    Format(String),
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
}

impl PermGroup {
    /// Empty generator lists are replaced by the identity.
    pub fn new(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Perm>,
    ) -> Result<Self, PermGroupError> {
        if degree == 0 || degree > crate::perm::MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree).into());
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermGroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut generators: Vec<Perm> = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        if generators.is_empty() {
            generators.push(Perm::identity(degree));
        }
        Ok(PermGroup {
            name: name.into(),
            degree,
            generators,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new("1", degree, Vec::new()).expect("valid degree")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Group order from a stabilizer chain, independent of enumeration.
    pub fn order_by_chain(&self) -> BigUint {
        StabilizerChain::new(self.degree, &self.generators).order()
    }

    pub fn enumerate(&self, cap: usize) -> Result<Enumerated, PermGroupError> {
        Enumerated::build(self, cap)
    }

    /// Subgroup generated by the given elements (same degree).
    pub fn subgroup(
        &self,
        name: impl Into<String>,
        generators: Vec<Perm>,
    ) -> Result<PermGroup, PermGroupError> {
        PermGroup::new(name, self.degree, generators)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.mul(b) == b.mul(a))
        })
    }
}

/// Whether `sub` is normalized by every generator of `group` (and contained
/// in it).
pub fn is_normal(sub: &Enumerated, group: &Enumerated) -> bool {
    sub.iter().all(|x| group.id_of(x).is_some())
        && group.group().generators().iter().all(|g| {
            sub.group()
                .generators()
                .iter()
                .all(|h| sub.contains(&h.conjugate_by(g)))
        })
}

/// Normal closure of `seeds` in the group generated by `ambient_gens`.
pub fn normal_closure(
    degree: usize,
    ambient_gens: &[Perm],
    seeds: Vec<Perm>,
    cap: usize,
) -> Result<PermGroup, PermGroupError> {
    let mut gens = seeds;
    loop {
        let h = PermGroup::new("closure", degree, gens.clone())?;
        let elts = h.enumerate(cap)?;
        let mut added = false;
        for g in ambient_gens {
            for x in h.generators() {
                let c = x.conjugate_by(g);
                if !elts.contains(&c) && !gens.contains(&c) {
                    gens.push(c);
                    added = true;
                }
            }
        }
        if !added {
            return Ok(h);
        }
    }
}

/// Commutator subgroup, as the normal closure of generator commutators.
pub fn derived_subgroup(group: &PermGroup, cap: usize) -> Result<PermGroup, PermGroupError> {
    let gens = group.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    let name = format!("{}'", group.name());
    Ok(normal_closure(group.degree(), gens, comms, cap)?.with_name(name))
}

/// A Sylow `p`-subgroup, built by normalizer climbing: starting from the
/// cyclic group of the first element of order `p`, repeatedly adjoin the
/// first `p`-element (in id order) that normalizes but lies outside the
/// current subgroup.
pub fn sylow_subgroup(group: &Enumerated, p: u64) -> Result<PermGroup, PermGroupError> {
    if !is_prime(p) {
        return Err(PermGroupError::NotAPrime(p));
    }
    let n = group.order();
    let name = format!("Syl{}({})", p, group.group().name());
    let target = p.pow(valuation(n, p));
    let degree = group.degree();
    if target == 1 {
        return Ok(PermGroup::trivial(degree).with_name(name));
    }
    let p_elements: Vec<usize> = (0..group.len())
        .filter(|&x| {
            let o = group.element_order(x);
            o > 1 && is_prime_power_of(o, p)
        })
        .collect();
    let first = p_elements
        .iter()
        .copied()
        .find(|&x| group.element_order(x) == p)
        .expect("Cauchy: an element of order p exists");
    let mut gens = vec![group.perm(first)];
    loop {
        let current = PermGroup::new(name.clone(), degree, gens.clone())?;
        let elts = current.enumerate(target as usize)?;
        if elts.order() == target {
            return Ok(current);
        }
        let next = p_elements.iter().copied().find(|&x| {
            let img = group.images(x);
            if elts.id_of(img).is_some() {
                return false;
            }
            let g = group.perm(x);
            gens.iter().all(|h| elts.contains(&h.conjugate_by(&g)))
        });
        match next {
            Some(x) => gens.push(group.perm(x)),
            None => unreachable!("a non-Sylow p-subgroup grows inside its normalizer"),
        }
    }
}

/// For each class of `sub`, the class of `group` containing its
/// representative.
pub fn class_fusion(
    sub: &Enumerated,
    sub_classes: &ConjClasses,
    group: &Enumerated,
    group_classes: &ConjClasses,
) -> Result<Vec<usize>, PermGroupError> {
    if let Some(bad) = sub.iter().find(|x| group.id_of(x).is_none()) {
        return Err(PermGroupError::NotASubgroup(
            Perm::from_images(bad.to_vec())?.to_string(),
        ));
    }
    Ok(sub_classes
        .reps()
        .iter()
        .map(|&r| group_classes.class_of(group.id_of(sub.images(r)).unwrap()))
        .collect())
}

/// On-disk group description: 1-based image lists.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subgroups: BTreeMap<String, Vec<Vec<usize>>>,
}

impl GroupFile {
    pub fn from_group(g: &PermGroup) -> Self {
        GroupFile {
            name: g.name().to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.one_based()).collect(),
            subgroups: BTreeMap::new(),
        }
    }

    pub fn to_group(&self) -> Result<PermGroup, PermGroupError> {
        let gens = parse_generators(self.degree, &self.generators)?;
        PermGroup::new(self.name.clone(), self.degree, gens)
    }

    pub fn subgroup(&self, name: &str) -> Result<Option<PermGroup>, PermGroupError> {
        match self.subgroups.get(name) {
            None => Ok(None),
            Some(list) => {
                let gens = parse_generators(self.degree, list)?;
                Ok(Some(PermGroup::new(name, self.degree, gens)?))
            }
        }
    }
}

fn parse_generators(degree: usize, list: &[Vec<usize>]) -> Result<Vec<Perm>, PermGroupError> {
    list.iter()
        .map(|imgs| {
            if imgs.len() != degree {
                return Err(PermGroupError::DegreeMismatch {
                    expected: degree,
                    found: imgs.len(),
                });
            }
            Ok(Perm::from_one_based(imgs)?)
        })
        .collect()
}
