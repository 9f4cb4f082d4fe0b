//! Ordinary character tables: computation by Dixon–Schneider, JSON import and
//! export, validation, inner products and restriction.

mod dixon;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm, prime_factors};
use crate::cyclotomic::Cyclotomic;
use crate::permgroup::PermGroupError;

pub use dixon::{admissible_prime, dixon_degrees, dixon_schneider, DixonOptions};

#[derive(Debug, thiserror::Error)]
pub enum CharTableError {
    #[error("no prime q = 1 mod {exponent} found below the search bound")]
    NoSuitablePrime { exponent: u64 },
    #[error("eigenspace splitting failed: {0}")]
    EigenspaceSplitFailure(String),
    #[error("malformed character table: {0}")]
    Format(String),
    #[error("character table invariant violated: {0}")]
    InvariantViolation(String),
    #[error("restriction of character {character} has non-integral multiplicity of constituent {constituent}")]
    NonIntegralMultiplicity {
        character: usize,
        constituent: usize,
    },
    #[error(transparent)]
    Group(#[from] PermGroupError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    name: String,
    order: u64,
    exponent: u64,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    // powers[j][k] = class of g_j^k for k < orders[j]
    powers: Vec<Vec<usize>>,
    // rows are characters; the value in column j has modulus orders[j]
    irr: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
}

impl CharacterTable {
    /// Assembles a table from raw parts and validates it.
    pub fn new(
        name: impl Into<String>,
        order: u64,
        sizes: Vec<u64>,
        orders: Vec<u64>,
        powers: Vec<Vec<usize>>,
        irr: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, CharTableError> {
        let t = Self::assemble(name.into(), order, sizes, orders, powers, irr)?;
        t.validate()?;
        Ok(t)
    }

    fn assemble(
        name: String,
        order: u64,
        sizes: Vec<u64>,
        orders: Vec<u64>,
        powers: Vec<Vec<usize>>,
        irr: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, CharTableError> {
        let r = sizes.len();
        if orders.len() != r || powers.len() != r {
            return Err(CharTableError::Format("class data lengths differ".into()));
        }
        if r == 0 || sizes[0] != 1 || orders[0] != 1 {
            return Err(CharTableError::Format(
                "class 0 must be the identity class".into(),
            ));
        }
        let mut degrees = Vec::with_capacity(irr.len());
        for (i, row) in irr.iter().enumerate() {
            if row.len() != r {
                return Err(CharTableError::Format(format!(
                    "row {i} has {} values for {r} classes",
                    row.len()
                )));
            }
            let d = row[0]
                .to_integer()
                .and_then(|d| d.to_u64())
                .filter(|&d| d > 0)
                .ok_or_else(|| {
                    CharTableError::InvariantViolation(format!(
                        "degree of character {i} is not a positive integer"
                    ))
                })?;
            degrees.push(d);
        }
        let exponent = orders.iter().fold(1, |acc, &o| lcm(acc, o));
        Ok(CharacterTable {
            name,
            order,
            exponent,
            sizes,
            orders,
            powers,
            irr,
            degrees,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    /// Class of `g_j^k`.
    pub fn power_map(&self, k: u64, j: usize) -> usize {
        self.powers[j][(k % self.orders[j]) as usize]
    }

    pub fn inverse_class(&self, j: usize) -> usize {
        self.power_map(self.orders[j] - 1, j)
    }

    pub fn irreducibles(&self) -> &[Vec<Cyclotomic>] {
        &self.irr
    }

    pub fn character(&self, i: usize) -> &[Cyclotomic] {
        &self.irr[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Checks class data, degrees and first orthogonality.
    pub fn validate(&self) -> Result<(), CharTableError> {
        let r = self.num_classes();
        let bad = |m: String| Err(CharTableError::InvariantViolation(m));
        if self.irr.len() != r {
            return bad(format!("{} irreducibles for {r} classes", self.irr.len()));
        }
        if self.sizes.iter().sum::<u64>() != self.order {
            return bad("class sizes do not sum to the group order".into());
        }
        for j in 0..r {
            if !self.order.is_multiple_of(self.sizes[j])
                || !self.order.is_multiple_of(self.orders[j])
            {
                return bad(format!(
                    "class {j}: size or element order does not divide |G|"
                ));
            }
            if self.powers[j].len() != self.orders[j] as usize {
                return bad(format!("class {j}: incomplete power map"));
            }
            for (k, &c) in self.powers[j].iter().enumerate() {
                if c >= r || self.orders[c] != self.orders[j] / gcd(k as u64, self.orders[j]) {
                    return bad(format!(
                        "class {j}: power map {k} has the wrong element order"
                    ));
                }
            }
            for row in &self.irr {
                if !self.orders[j].is_multiple_of(row[j].modulus()) {
                    return bad(format!("class {j}: value outside Q(ζ_{})", self.orders[j]));
                }
            }
        }
        let sum_sq: u128 = self.degrees.iter().map(|&d| d as u128 * d as u128).sum();
        if sum_sq != self.order as u128 {
            return bad(format!(
                "sum of squared degrees is {sum_sq}, not {}",
                self.order
            ));
        }
        if let Some(d) = self
            .degrees
            .iter()
            .find(|&&d| !self.order.is_multiple_of(d))
        {
            return bad(format!("degree {d} does not divide |G|"));
        }
        let conj: Vec<Vec<Cyclotomic>> = self
            .irr
            .iter()
            .map(|row| row.iter().map(Cyclotomic::conj).collect())
            .collect();
        for a in 0..r {
            for (b, cb) in conj.iter().enumerate().skip(a) {
                let s = weighted_sum(&self.sizes, &self.irr[a], cb);
                let expected = if a == b { self.order } else { 0 };
                if s != Cyclotomic::from_int(expected) {
                    return bad(format!(
                        "characters {a} and {b} violate first orthogonality"
                    ));
                }
            }
        }
        Ok(())
    }

    /// Second orthogonality: `Σ_χ χ(g_j)·conj(χ(g_k)) = δ_jk·|C_G(g_j)|`.
    pub fn check_column_orthogonality(&self) -> Result<(), CharTableError> {
        let r = self.num_classes();
        let ones = vec![1u64; r];
        for j in 0..r {
            let col_j: Vec<Cyclotomic> = self.irr.iter().map(|row| row[j].clone()).collect();
            for k in j..r {
                let col_k: Vec<Cyclotomic> = self.irr.iter().map(|row| row[k].conj()).collect();
                let s = weighted_sum(&ones, &col_j, &col_k);
                let expected = if j == k {
                    self.order / self.sizes[j]
                } else {
                    0
                };
                if s != Cyclotomic::from_int(expected) {
                    return Err(CharTableError::InvariantViolation(format!(
                        "classes {j} and {k} violate second orthogonality"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `⟨a, b⟩ = |G|^{-1} Σ_j |K_j|·a_j·conj(b_j)` for class functions given
    /// by value vectors; `None` if the result is not an integer.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Option<BigInt> {
        let conj: Vec<Cyclotomic> = b.iter().map(Cyclotomic::conj).collect();
        let s = weighted_sum(&self.sizes, a, &conj).to_integer()?;
        let (q, r) = s.div_rem(&BigInt::from(self.order));
        r.is_zero().then_some(q)
    }

    /// Constituents of the restriction of `chi` (a class function of this
    /// table's group, given on the overgroup's classes) to the subgroup
    /// described by `self`, where `fusion[j]` is the overgroup class of
    /// subgroup class `j`.
    pub fn restrict(
        &self,
        chi_index: usize,
        chi: &[Cyclotomic],
        fusion: &[usize],
    ) -> Result<Vec<(usize, u64)>, CharTableError> {
        if fusion.len() != self.num_classes() {
            return Err(CharTableError::Format(
                "fusion map length differs from class count".into(),
            ));
        }
        let res: Vec<Cyclotomic> = fusion.iter().map(|&j| chi[j].clone()).collect();
        let mut out = Vec::new();
        let mut total = BigInt::zero();
        for (i, psi) in self.irr.iter().enumerate() {
            let m = self
                .inner_product(&res, psi)
                .filter(|m| !m.is_negative())
                .ok_or(CharTableError::NonIntegralMultiplicity {
                    character: chi_index,
                    constituent: i,
                })?;
            if !m.is_zero() {
                total += &m * self.degrees[i];
                out.push((i, m.to_u64().expect("multiplicity fits in u64")));
            }
        }
        if Some(total) != res[0].to_integer() {
            return Err(CharTableError::InvariantViolation(format!(
                "constituent degrees of character {chi_index} do not add up"
            )));
        }
        Ok(out)
    }

    pub fn to_file(&self) -> Result<TableFile, CharTableError> {
        let e = self.exponent;
        let classes = (0..self.num_classes())
            .map(|j| ClassRecord {
                size: self.sizes[j],
                order: self.orders[j],
                powermaps: self.powers[j]
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| (k as u64, c))
                    .collect(),
            })
            .collect();
        let irreducibles = self
            .irr
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.terms_over(e)
                            .into_iter()
                            .map(|(c, k)| {
                                c.to_i64().map(|c| (c, k)).ok_or_else(|| {
                                    CharTableError::Format("coefficient exceeds 64 bits".into())
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Ok(TableFile {
            name: self.name.clone(),
            order: self.order,
            exponent: e,
            classes,
            irreducibles,
        })
    }

    pub fn to_json(&self) -> Result<String, CharTableError> {
        serde_json::to_string_pretty(&self.to_file()?)
            .map_err(|e| CharTableError::Format(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self, CharTableError> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| CharTableError::Format(e.to_string()))?;
        CharacterTable::from_file(&file)
    }

    /// Imports and re-validates a table file.
    pub fn from_file(file: &TableFile) -> Result<Self, CharTableError> {
        let e = file.exponent;
        let fmt = |m: String| CharTableError::Format(m);
        if e == 0
            || file
                .classes
                .iter()
                .any(|c| c.order == 0 || !e.is_multiple_of(c.order))
        {
            return Err(fmt("every element order must divide the exponent".into()));
        }
        let sizes: Vec<u64> = file.classes.iter().map(|c| c.size).collect();
        let orders: Vec<u64> = file.classes.iter().map(|c| c.order).collect();
        let powers =
            complete_power_maps(&orders, file.classes.iter().map(|c| &c.powermaps).collect())?;
        let mut irr = Vec::with_capacity(file.irreducibles.len());
        for (i, row) in file.irreducibles.iter().enumerate() {
            if row.len() != orders.len() {
                return Err(fmt(format!(
                    "row {i} has {} values for {} classes",
                    row.len(),
                    orders.len()
                )));
            }
            let mut values = Vec::with_capacity(row.len());
            for (j, terms) in row.iter().enumerate() {
                let step = e / orders[j];
                if let Some(&(_, k)) = terms.iter().find(|(_, k)| k % step != 0) {
                    return Err(fmt(format!(
                        "value ({i}, {j}) uses ζ_{e}^{k}, which is not a power of ζ_{}",
                        orders[j]
                    )));
                }
                values.push(Cyclotomic::from_terms(
                    orders[j],
                    terms.iter().map(|&(c, k)| (BigInt::from(c), k / step)),
                ));
            }
            irr.push(values);
        }
        let table = CharacterTable::new(file.name.clone(), file.order, sizes, orders, powers, irr)?;
        if table.exponent != e {
            return Err(fmt(format!(
                "declared exponent {e}, element orders give {}",
                table.exponent
            )));
        }
        Ok(table)
    }

    /// Indices of linear characters.
    pub fn linear_characters(&self) -> Vec<usize> {
        (0..self.degrees.len())
            .filter(|&i| self.degrees[i] == 1)
            .collect()
    }
}

/// `Σ_j w_j·a_j·b_j`, accumulating per modulus before lifting.
fn weighted_sum(weights: &[u64], a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
    let mut acc: BTreeMap<u64, Cyclotomic> = BTreeMap::new();
    for ((w, x), y) in weights.iter().zip(a).zip(b) {
        let term = x.mul(y).scale(&BigInt::from(*w));
        match acc.get_mut(&term.modulus()) {
            Some(s) => s.add_assign(&term),
            None => {
                acc.insert(term.modulus(), term);
            }
        }
    }
    acc.into_values().fold(Cyclotomic::zero(), |s, t| s.add(&t))
}

/// Fills every power map `k < order` from the given ones, composing prime
/// power maps where entries are missing.
fn complete_power_maps(
    orders: &[u64],
    given: Vec<&BTreeMap<u64, usize>>,
) -> Result<Vec<Vec<usize>>, CharTableError> {
    let r = orders.len();
    let mut table: Vec<Vec<Option<usize>>> =
        orders.iter().map(|&o| vec![None; o as usize]).collect();
    for j in 0..r {
        table[j][0] = Some(0);
        if orders[j] > 1 {
            table[j][1] = Some(j);
        }
        for (&k, &c) in given[j] {
            if c >= r {
                return Err(CharTableError::Format(format!(
                    "power map of class {j} points to class {c}"
                )));
            }
            let slot = &mut table[j][(k % orders[j]) as usize];
            if slot.is_some_and(|old| old != c) {
                return Err(CharTableError::Format(format!(
                    "inconsistent power map {k} of class {j}"
                )));
            }
            *slot = Some(c);
        }
    }
    fn resolve(
        table: &mut [Vec<Option<usize>>],
        orders: &[u64],
        j: usize,
        k: u64,
        depth: usize,
    ) -> Option<usize> {
        let k = k % orders[j];
        if let Some(c) = table[j][k as usize] {
            return Some(c);
        }
        if depth > 64 {
            return None;
        }
        let p = *prime_factors(k).first()?;
        if p == k {
            return None;
        }
        let c = resolve(table, orders, j, k / p, depth + 1)?;
        let out = resolve(table, orders, c, p, depth + 1)?;
        table[j][k as usize] = Some(out);
        Some(out)
    }
    for j in 0..r {
        for k in 0..orders[j] {
            if resolve(&mut table, orders, j, k, 0).is_none() {
                return Err(CharTableError::Format(format!(
                    "power map {k} of class {j} is missing"
                )));
            }
        }
    }
    Ok(table
        .into_iter()
        .map(|row| row.into_iter().map(|c| c.unwrap()).collect())
        .collect())
}

/// On-disk table: each value is a list of `[coefficient, exponent]` pairs
/// over `ζ_exponent`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TableFile {
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassRecord>,
    pub irreducibles: Vec<Vec<Vec<(i64, u64)>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ClassRecord {
    pub size: u64,
    pub order: u64,
    pub powermaps: BTreeMap<u64, usize>,
}

/// The trivial character's row index (always 0 for computed tables).
pub fn trivial_index(table: &CharacterTable) -> Option<usize> {
    table.irreducibles().iter().position(|row| {
        row.iter()
            .all(|v| v.to_integer().is_some_and(|x| x.is_one()))
    })
}

#[cfg(test)]
mod tests;
