//! Per-block comparison of `mh(B)` with `mh(D)` for a defect group `D`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::analysis::GroupAnalysis;
use crate::chartable::CharacterTable;
use crate::permgroup::{sylow_subgroup, PermGroup};
use crate::pgroups::mh_pgroup;

use super::{block_partition, BlockError, BlockPartition, MinHeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DefectGroupStatus {
    /// Full defect: `D` is a Sylow subgroup.
    Sylow,
    /// Supplied by the caller with the right order; not certified.
    UserAsserted,
    /// Defect zero.
    Trivial,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "open: D unknown")]
    Open,
    #[serde(rename = "mismatch")]
    Mismatch,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Open => "open: D unknown",
            Verdict::Mismatch => "mismatch",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmBlock {
    pub index: usize,
    pub principal: bool,
    pub characters: Vec<usize>,
    pub degrees: Vec<u64>,
    pub defect: u32,
    pub heights: Vec<u32>,
    pub mh_b: MinHeight,
    pub defect_group: DefectGroupStatus,
    pub mh_d: Option<MinHeight>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmReport {
    pub group: String,
    pub p: u64,
    pub order: u64,
    pub blocks: Vec<EmBlock>,
}

impl EmReport {
    /// The most severe verdict (`Holds` for an empty report).
    pub fn worst(&self) -> Verdict {
        self.blocks
            .iter()
            .map(|b| b.verdict)
            .max()
            .unwrap_or(Verdict::Holds)
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} (order {}), p = {}: {} block(s)\n",
            self.group,
            self.order,
            self.p,
            self.blocks.len()
        );
        for b in &self.blocks {
            let mh_d = b.mh_d.map_or("?".to_string(), |m| m.to_string());
            let _ = writeln!(
                s,
                "  B{}{}: defect {}, degrees {:?}, heights {:?}, mh(B) = {}, mh(D) = {} [{:?}] -> {}",
                b.index,
                if b.principal { " (principal)" } else { "" },
                b.defect,
                b.degrees,
                b.heights,
                b.mh_b,
                mh_d,
                b.defect_group,
                b.verdict
            );
        }
        s
    }
}

/// Builds the report for an already partitioned table. `sylow` is used for
/// blocks of full defect; `user` maps block indices to asserted defect
/// groups, which must have order `p^{d(B)}`.
pub fn verify_em(
    table: &CharacterTable,
    partition: &BlockPartition,
    sylow: Option<&PermGroup>,
    user: &BTreeMap<usize, PermGroup>,
    cap: usize,
) -> Result<EmReport, BlockError> {
    let p = partition.p;
    for (&b, g) in user {
        let Some(block) = partition.blocks.get(b) else {
            return Err(BlockError::UnknownBlock(b));
        };
        let expected = p.pow(block.defect);
        let order = g.order_by_chain().to_u64().unwrap_or(u64::MAX);
        if order != expected {
            return Err(BlockError::DefectOrderMismatch {
                block: b,
                order,
                expected,
            });
        }
    }
    let mut sylow_mh = None;
    let mut blocks = Vec::with_capacity(partition.len());
    for (index, block) in partition.blocks.iter().enumerate() {
        let mh_b = partition.mh(index);
        let (status, mh_d) = if block.defect == 0 {
            (DefectGroupStatus::Trivial, Some(MinHeight::Infinite))
        } else if let (true, Some(s)) = (block.defect == partition.full_defect, sylow) {
            if sylow_mh.is_none() {
                sylow_mh = Some(mh_pgroup(s, p, cap)?.mh);
            }
            (DefectGroupStatus::Sylow, sylow_mh)
        } else if let Some(d) = user.get(&index) {
            (
                DefectGroupStatus::UserAsserted,
                Some(mh_pgroup(d, p, cap)?.mh),
            )
        } else {
            (DefectGroupStatus::Unknown, None)
        };
        let verdict = match mh_d {
            None => Verdict::Open,
            Some(m) if m == mh_b => Verdict::Holds,
            Some(_) => Verdict::Mismatch,
        };
        blocks.push(EmBlock {
            index,
            principal: block.principal,
            characters: block.characters.clone(),
            degrees: block
                .characters
                .iter()
                .map(|&c| table.degrees()[c])
                .collect(),
            defect: block.defect,
            heights: partition.block_heights(index),
            mh_b,
            defect_group: status,
            mh_d,
            verdict,
        });
    }
    Ok(EmReport {
        group: table.name().to_string(),
        p,
        order: table.order(),
        blocks,
    })
}

/// Full pipeline for an enumerated group: blocks, Sylow subgroup, report.
pub fn verify_em_group(
    analysis: &GroupAnalysis,
    p: u64,
    user: &BTreeMap<usize, PermGroup>,
    cap: usize,
) -> Result<EmReport, BlockError> {
    let partition = block_partition(&analysis.table, p)?;
    let sylow = sylow_subgroup(&analysis.elements, p)?;
    verify_em(&analysis.table, &partition, Some(&sylow), user, cap)
}
