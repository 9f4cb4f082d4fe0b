//! `p`-blocks from the central-character congruence: defects, heights,
//! minimal positive heights, block covering and the `mh(B) = mh(D)` report.

mod covering;
mod em;
mod reduce;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, valuation};
use crate::chartable::{trivial_index, CharTableError, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::permgroup::PermGroupError;

pub use covering::{
    block_covering, covering_from_tables, invariant_blocks, normal_index_check, Covering,
    IndexCheck,
};
pub use em::{verify_em, verify_em_group, DefectGroupStatus, EmBlock, EmReport, Verdict};
pub use reduce::{reduce_mod_p, Reduction};

#[derive(Debug, thiserror::Error)]
pub enum BlockError {
    #[error("omega of character {character} at class {class} is not an algebraic integer")]
    NonIntegralOmega { character: usize, class: usize },
    #[error("{0} is not a prime")]
    NotAPrime(u64),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("user defect group for block {block} has order {order}, expected {expected}")]
    DefectOrderMismatch {
        block: usize,
        order: u64,
        expected: u64,
    },
    #[error("no block with index {0}")]
    UnknownBlock(usize),
    #[error("residue field F_{p}^{f} is too large")]
    FieldTooLarge { p: u64, f: u64 },
    #[error(transparent)]
    Table(#[from] CharTableError),
    #[error(transparent)]
    Group(#[from] PermGroupError),
    #[error(transparent)]
    PGroup(#[from] crate::pgroups::PGroupError),
}

/// A minimal positive height (or minimal nonlinear `log_p` degree); `∞`
/// when there is none. Serialized as an integer or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinHeight {
    Finite(u32),
    Infinite,
}

impl MinHeight {
    pub fn is_infinite(self) -> bool {
        self == MinHeight::Infinite
    }
}

impl fmt::Display for MinHeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinHeight::Finite(h) => write!(f, "{h}"),
            MinHeight::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for MinHeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MinHeight::Finite(h) => s.serialize_u32(*h),
            MinHeight::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for MinHeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(h) => Ok(MinHeight::Finite(h)),
            Raw::Str(s) if s == "inf" => Ok(MinHeight::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "expected an integer or \"inf\", got {s:?}"
            ))),
        }
    }
}

/// `ω_χ(K̂_j) = |K_j|·χ(g_j)/χ(1)`, checked to be integral.
pub fn central_character(
    table: &CharacterTable,
    chi: usize,
) -> Result<Vec<Cyclotomic>, BlockError> {
    let d = BigInt::from(table.degrees()[chi]);
    table
        .character(chi)
        .iter()
        .zip(table.class_sizes())
        .enumerate()
        .map(|(j, (v, &size))| {
            v.scale(&BigInt::from(size))
                .div_exact(&d)
                .ok_or(BlockError::NonIntegralOmega {
                    character: chi,
                    class: j,
                })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// Character indices, increasing.
    pub characters: Vec<usize>,
    pub defect: u32,
    pub principal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPartition {
    pub p: u64,
    /// `ν_p(|G|)`.
    pub full_defect: u32,
    /// Blocks ordered by their smallest character index.
    pub blocks: Vec<Block>,
    pub block_of: Vec<usize>,
    /// Height of each character within its block.
    pub heights: Vec<u32>,
}

impl BlockPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn principal(&self) -> usize {
        self.blocks.iter().position(|b| b.principal).unwrap_or(0)
    }

    /// Minimal positive height in block `b`.
    pub fn mh(&self, b: usize) -> MinHeight {
        mh_block(self, b)
    }

    pub fn block_heights(&self, b: usize) -> Vec<u32> {
        self.blocks[b]
            .characters
            .iter()
            .map(|&c| self.heights[c])
            .collect()
    }
}

pub fn mh_block(partition: &BlockPartition, b: usize) -> MinHeight {
    partition.blocks[b]
        .characters
        .iter()
        .map(|&c| partition.heights[c])
        .filter(|&h| h > 0)
        .min()
        .map_or(MinHeight::Infinite, MinHeight::Finite)
}

pub fn block_partition(table: &CharacterTable, p: u64) -> Result<BlockPartition, BlockError> {
    block_partition_with_root(table, p, 0)
}

/// As [`block_partition`], reducing with the `root_choice`-th primitive
/// root of unity of the residue field (see [`Reduction::with_root`]).
pub fn block_partition_with_root(
    table: &CharacterTable,
    p: u64,
    root_choice: usize,
) -> Result<BlockPartition, BlockError> {
    if !is_prime(p) {
        return Err(BlockError::NotAPrime(p));
    }
    let red = Reduction::with_root(table.exponent(), p, root_choice)?;
    let n = table.num_classes();
    let mut key_to_block: HashMap<Vec<Vec<u64>>, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut block_of = Vec::with_capacity(n);
    for chi in 0..n {
        let key: Vec<Vec<u64>> = central_character(table, chi)?
            .iter()
            .map(|w| red.reduce(w))
            .collect();
        let b = *key_to_block.entry(key).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[b].push(chi);
        block_of.push(b);
    }
    Ok(assemble_partition(table, p, members, block_of))
}

/// Builds defects and heights from an explicit grouping of characters.
pub fn assemble_partition(
    table: &CharacterTable,
    p: u64,
    members: Vec<Vec<usize>>,
    block_of: Vec<usize>,
) -> BlockPartition {
    let full_defect = valuation(table.order(), p);
    let nu: Vec<u32> = table.degrees().iter().map(|&d| valuation(d, p)).collect();
    let trivial = trivial_index(table);
    let mut heights = vec![0; nu.len()];
    let blocks = members
        .into_iter()
        .map(|characters| {
            let min = characters.iter().map(|&c| nu[c]).min().unwrap_or(0);
            for &c in &characters {
                heights[c] = nu[c] - min;
            }
            Block {
                principal: trivial.is_some_and(|t| characters.contains(&t)),
                defect: full_defect - min,
                characters,
            }
        })
        .collect();
    BlockPartition {
        p,
        full_defect,
        blocks,
        block_of,
        heights,
    }
}

#[cfg(test)]
mod tests;
