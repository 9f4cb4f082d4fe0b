//! Blocks of a normal subgroup covered by blocks of the whole group.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::analysis::GroupAnalysis;
use crate::arith::{is_prime_power_of, valuation};
use crate::chartable::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::perm::Perm;

use super::{BlockError, BlockPartition};

/// `covers[B]` lists the subgroup blocks covered by group block `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Covering {
    pub covers: Vec<Vec<usize>>,
}

impl Covering {
    /// Group blocks covering subgroup block `b`.
    pub fn covering_blocks(&self, b: usize) -> Vec<usize> {
        (0..self.covers.len())
            .filter(|&bb| self.covers[bb].contains(&b))
            .collect()
    }
}

/// `B` covers `b` iff some `χ ∈ B` restricts with a constituent in `b`.
pub fn covering_from_tables(
    group_table: &CharacterTable,
    group_blocks: &BlockPartition,
    sub_table: &CharacterTable,
    sub_blocks: &BlockPartition,
    fusion: &[usize],
) -> Result<Covering, BlockError> {
    let covers = group_blocks
        .blocks
        .iter()
        .map(|block| {
            let mut set = BTreeSet::new();
            for &chi in &block.characters {
                for (psi, _) in sub_table.restrict(chi, group_table.character(chi), fusion)? {
                    set.insert(sub_blocks.block_of[psi]);
                }
            }
            Ok(set.into_iter().collect())
        })
        .collect::<Result<_, BlockError>>()?;
    Ok(Covering { covers })
}

fn check_normal(group: &GroupAnalysis, sub: &GroupAnalysis) -> Result<Vec<usize>, BlockError> {
    let fusion = sub.fusion_into(group)?;
    for s in group.group.generators() {
        for n in sub.group.generators() {
            let c = n.conjugate_by(s);
            if !sub.elements.contains(&c) {
                return Err(BlockError::NotNormal(format!(
                    "{} conjugated by {} leaves {}",
                    n,
                    s,
                    sub.group.name()
                )));
            }
        }
    }
    Ok(fusion)
}

/// Covering relation for `sub ⊴ group`; normality is verified on generators.
pub fn block_covering(
    group: &GroupAnalysis,
    group_blocks: &BlockPartition,
    sub: &GroupAnalysis,
    sub_blocks: &BlockPartition,
) -> Result<Covering, BlockError> {
    let fusion = check_normal(group, sub)?;
    covering_from_tables(&group.table, group_blocks, &sub.table, sub_blocks, &fusion)
}

/// Permutation of `sub`'s irreducibles induced by `χ ↦ χ^s`,
/// `χ^s(x) = χ(s x s^{-1})`.
fn character_action(sub: &GroupAnalysis, s: &Perm) -> Result<Vec<usize>, BlockError> {
    let s_inv = s.inverse();
    let class_image: Vec<usize> = sub
        .classes
        .reps()
        .iter()
        .map(|&r| {
            let x = sub.elements.perm(r).conjugate_by(&s_inv);
            sub.elements
                .id_of(x.images())
                .map(|id| sub.classes.class_of(id))
                .ok_or_else(|| BlockError::NotNormal(format!("{x} is not in {}", sub.group.name())))
        })
        .collect::<Result<_, _>>()?;
    let irr = sub.table.irreducibles();
    irr.iter()
        .map(|row| {
            let image: Vec<Cyclotomic> = class_image.iter().map(|&j| row[j].clone()).collect();
            irr.iter().position(|r| *r == image).ok_or_else(|| {
                BlockError::NotNormal("conjugate character is not irreducible".into())
            })
        })
        .collect()
}

/// Which blocks of `sub` are invariant under conjugation by `group`.
pub fn invariant_blocks(
    group: &GroupAnalysis,
    sub: &GroupAnalysis,
    sub_blocks: &BlockPartition,
) -> Result<Vec<bool>, BlockError> {
    check_normal(group, sub)?;
    let mut invariant = vec![true; sub_blocks.len()];
    for s in group.group.generators() {
        let action = character_action(sub, s)?;
        for (chi, &img) in action.iter().enumerate() {
            let b = sub_blocks.block_of[chi];
            if sub_blocks.block_of[img] != b {
                invariant[b] = false;
            }
        }
    }
    Ok(invariant)
}

/// Defect comparison for one invariant block `b` of a normal subgroup of
/// index `p^a`: exactly one block `B` covers `b` and `d(B) = d(b) + a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexCheck {
    pub sub_block: usize,
    pub sub_defect: u32,
    pub covering: Vec<usize>,
    pub defects: Vec<u32>,
    pub a: u32,
    pub holds: bool,
}

/// Runs the defect comparison over every `group`-invariant block of `sub`.
/// Returns `None` if `[group : sub]` is not a power of `p`.
pub fn normal_index_check(
    group: &GroupAnalysis,
    group_blocks: &BlockPartition,
    sub: &GroupAnalysis,
    sub_blocks: &BlockPartition,
) -> Result<Option<Vec<IndexCheck>>, BlockError> {
    let p = group_blocks.p;
    let index = group.order() / sub.order();
    if !group.order().is_multiple_of(sub.order()) || !is_prime_power_of(index, p) {
        return Ok(None);
    }
    let a = valuation(index, p);
    let covering = block_covering(group, group_blocks, sub, sub_blocks)?;
    let invariant = invariant_blocks(group, sub, sub_blocks)?;
    let checks = (0..sub_blocks.len())
        .filter(|&b| invariant[b])
        .map(|b| {
            let cov = covering.covering_blocks(b);
            let defects: Vec<u32> = cov
                .iter()
                .map(|&bb| group_blocks.blocks[bb].defect)
                .collect();
            let sub_defect = sub_blocks.blocks[b].defect;
            IndexCheck {
                sub_block: b,
                sub_defect,
                holds: defects.len() == 1 && defects[0] == sub_defect + a,
                covering: cov,
                defects,
                a,
            }
        })
        .collect();
    Ok(Some(checks))
}
