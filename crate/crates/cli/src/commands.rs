//! One function per subcommand, each returning a serializable report with a
//! plain-text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use blockheight::arith::{is_prime, prime_factors};
use blockheight::blocktheory::{
    block_partition, verify_em, verify_em_group, BlockPartition, EmReport, MinHeight,
};
use blockheight::chartable::{CharacterTable, TableFile};
use blockheight::combinatorics::{
    check_unipdef, core_existence, ell_core, ell_weight, CoreWitness, Degree, Partition,
};
use blockheight::permgroup::{GroupFile, PermGroup};
use blockheight::pgroups::{self, mh_pgroup, MetacyclicSpec, StabilizerWitness};
use serde::Serialize;

use crate::source::{builtin, read_group_file, Family, Loaded};
use crate::CliError;

/// Human-readable rendering of a report.
pub trait Render {
    fn text(&self) -> String;
}

impl Render for EmReport {
    fn text(&self) -> String {
        self.summary()
    }
}

fn require_prime(p: u64) -> Result<(), CliError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{p} is not a prime")))
    }
}

#[derive(Debug, Serialize)]
pub struct TableReport {
    pub name: String,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    pub degrees: Vec<u64>,
    #[serde(skip)]
    pub rows: Vec<Vec<String>>,
    pub table: TableFile,
}

impl Render for TableReport {
    fn text(&self) -> String {
        let mut s = format!(
            "{} (order {}), {} classes\n",
            self.name,
            self.order,
            self.class_sizes.len()
        );
        let _ = writeln!(s, "  sizes  {:?}", self.class_sizes);
        let _ = writeln!(s, "  orders {:?}", self.element_orders);
        for (i, row) in self.rows.iter().enumerate() {
            let _ = writeln!(s, "  X{:<3} {}", i + 1, row.join("  "));
        }
        s
    }
}

/// Optionally writes the table file to `export`.
pub fn chartable(loaded: &Loaded, export: Option<&Path>) -> Result<TableReport, CliError> {
    let t = loaded.table();
    if let Some(path) = export {
        std::fs::write(path, t.to_json()? + "\n")
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(TableReport {
        name: t.name().to_string(),
        order: t.order(),
        class_sizes: t.class_sizes().to_vec(),
        element_orders: t.element_orders().to_vec(),
        degrees: t.degrees().to_vec(),
        rows: t
            .irreducibles()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect(),
        table: t.to_file()?,
    })
}

#[derive(Debug, Serialize)]
pub struct BlockRecord {
    pub index: usize,
    pub principal: bool,
    pub defect: u32,
    pub characters: Vec<usize>,
    pub degrees: Vec<u64>,
    pub heights: Vec<u32>,
    pub mh: MinHeight,
}

#[derive(Debug, Serialize)]
pub struct BlocksReport {
    pub group: String,
    pub order: u64,
    pub p: u64,
    pub full_defect: u32,
    pub blocks: Vec<BlockRecord>,
}

impl BlocksReport {
    pub fn new(table: &CharacterTable, part: &BlockPartition) -> Self {
        let blocks = part
            .blocks
            .iter()
            .enumerate()
            .map(|(b, block)| BlockRecord {
                index: b,
                principal: block.principal,
                defect: block.defect,
                characters: block.characters.clone(),
                degrees: block
                    .characters
                    .iter()
                    .map(|&c| table.degrees()[c])
                    .collect(),
                heights: part.block_heights(b),
                mh: part.mh(b),
            })
            .collect();
        BlocksReport {
            group: table.name().to_string(),
            order: table.order(),
            p: part.p,
            full_defect: part.full_defect,
            blocks,
        }
    }
}

impl Render for BlocksReport {
    fn text(&self) -> String {
        let mut s = format!(
            "{} (order {}), p = {}: {} block(s), full defect {}\n",
            self.group,
            self.order,
            self.p,
            self.blocks.len(),
            self.full_defect
        );
        for b in &self.blocks {
            let _ = writeln!(
                s,
                "  B{}{}: defect {}, degrees {:?}, heights {:?}",
                b.index,
                if b.principal { " (principal)" } else { "" },
                b.defect,
                b.degrees,
                b.heights
            );
        }
        s
    }
}

pub fn blocks(loaded: &Loaded, p: u64) -> Result<BlocksReport, CliError> {
    require_prime(p)?;
    let t = loaded.table();
    Ok(BlocksReport::new(t, &block_partition(t, p)?))
}

#[derive(Debug, Serialize)]
pub struct MhRecord {
    pub index: usize,
    pub principal: bool,
    pub defect: u32,
    pub mh: MinHeight,
    /// Characters of height `mh`.
    pub attained_by: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct MhReport {
    pub group: String,
    pub p: u64,
    pub blocks: Vec<MhRecord>,
}

impl Render for MhReport {
    fn text(&self) -> String {
        let mut s = format!("{}, p = {}\n", self.group, self.p);
        for b in &self.blocks {
            let _ = writeln!(
                s,
                "  B{}{}: defect {}, mh = {} ({} character(s))",
                b.index,
                if b.principal { " (principal)" } else { "" },
                b.defect,
                b.mh,
                b.attained_by.len()
            );
        }
        s
    }
}

pub fn mh(loaded: &Loaded, p: u64) -> Result<MhReport, CliError> {
    require_prime(p)?;
    let t = loaded.table();
    let part = block_partition(t, p)?;
    let blocks = (0..part.len())
        .map(|b| {
            let mh = part.mh(b);
            let attained_by = match mh {
                MinHeight::Finite(h) => part.blocks[b]
                    .characters
                    .iter()
                    .copied()
                    .filter(|&c| part.heights[c] == h)
                    .collect(),
                MinHeight::Infinite => Vec::new(),
            };
            MhRecord {
                index: b,
                principal: part.blocks[b].principal,
                defect: part.blocks[b].defect,
                mh,
                attained_by,
            }
        })
        .collect();
    Ok(MhReport {
        group: t.name().to_string(),
        p,
        blocks,
    })
}

/// A `BLOCK=REF` defect-group assertion. `REF` is a subgroup named in the
/// loaded group file, a group file path, or a catalog name.
pub fn parse_defect_group(arg: &str, loaded: &Loaded) -> Result<(usize, PermGroup), CliError> {
    let (block, reference) = arg
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("expected BLOCK=GROUP, got {arg:?}")))?;
    let block = block
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad block index {block:?}")))?;
    Ok((
        block,
        resolve_reference(reference.trim(), loaded, Path::new("."))?,
    ))
}

pub fn resolve_reference(
    reference: &str,
    loaded: &Loaded,
    base: &Path,
) -> Result<PermGroup, CliError> {
    if let Some(g) = loaded.subgroup(reference) {
        return Ok(g.clone());
    }
    let path = base.join(reference);
    if path.exists() {
        return Ok(read_group_file(&path)?.to_group()?);
    }
    builtin(reference)
}

pub fn verify(
    loaded: &Loaded,
    p: u64,
    user: &BTreeMap<usize, PermGroup>,
    cap: usize,
) -> Result<EmReport, CliError> {
    require_prime(p)?;
    Ok(match loaded {
        Loaded::Group { analysis, .. } => verify_em_group(analysis, p, user, cap)?,
        Loaded::Table(t) => verify_em(t, &block_partition(t, p)?, None, user, cap)?,
    })
}

#[derive(Debug, Serialize)]
pub struct PGroupReport {
    pub group: String,
    pub p: u64,
    pub order: u64,
    pub degrees: Vec<u64>,
    pub abelianization: u64,
    pub mh: MinHeight,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<StabilizerWitness>,
}

impl Render for PGroupReport {
    fn text(&self) -> String {
        let mut s = format!(
            "{} (order {}), p = {}: mh = {}, [P:P'] = {}\n  degrees {:?}\n",
            self.group, self.order, self.p, self.mh, self.abelianization, self.degrees
        );
        if let Some(w) = &self.witness {
            let _ = writeln!(
                s,
                "  stabilizer witness: lambda_{} = lambda_{}^{} has orbit of length {}",
                w.character, w.base, w.power, w.orbit
            );
        }
        s
    }
}

/// `p` defaults to the unique prime dividing the order.
pub fn pgroup_mh(
    group: &PermGroup,
    family: Option<&Family>,
    p: Option<u64>,
    cap: usize,
    export: Option<&Path>,
) -> Result<PGroupReport, CliError> {
    if let Some(path) = export {
        let text = serde_json::to_string_pretty(&GroupFile::from_group(group))
            .expect("group file serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    let p = match p {
        Some(p) => {
            require_prime(p)?;
            p
        }
        None => {
            let order: u64 = group
                .order_by_chain()
                .try_into()
                .map_err(|_| CliError::Usage("group order exceeds 64 bits".into()))?;
            match prime_factors(order).as_slice() {
                [p] => *p,
                _ => {
                    return Err(CliError::Usage(format!(
                        "order {order} is not a prime power; pass -p"
                    )))
                }
            }
        }
    };
    let r = mh_pgroup(group, p, cap)?;
    let witness = match family {
        Some(&Family::Metacyclic { p, m, n, r }) => {
            pgroups::metacyclic_stabilizer_witness(MetacyclicSpec { p, m, n, r })?
        }
        _ => None,
    };
    Ok(PGroupReport {
        group: group.name().to_string(),
        p: r.p,
        order: r.order,
        degrees: r.degrees,
        abelianization: r.abelianization,
        mh: r.mh,
        witness,
    })
}

pub fn parse_partition(text: &str) -> Result<Partition, CliError> {
    let parts = text
        .trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad part {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

#[derive(Debug, Serialize)]
pub struct CoreReport {
    pub partition: Partition,
    pub ell: u64,
    pub core: Partition,
    pub weight: u32,
}

impl Render for CoreReport {
    fn text(&self) -> String {
        format!(
            "{}-core of {} is {}, weight {}\n",
            self.ell, self.partition, self.core, self.weight
        )
    }
}

pub fn core(partition: Partition, ell: u64) -> Result<CoreReport, CliError> {
    Ok(CoreReport {
        core: ell_core(&partition, ell)?,
        weight: ell_weight(&partition, ell)?,
        partition,
        ell,
    })
}

#[derive(Debug, Serialize)]
pub struct CoreExistsReport {
    pub a: u32,
    pub ell: u32,
    pub witness: Option<CoreWitness>,
}

impl Render for CoreExistsReport {
    fn text(&self) -> String {
        match &self.witness {
            Some(w) => format!(
                "{}-core {} of size {} (a = {})\n",
                self.ell, w.core, w.b, self.a
            ),
            None => "none\n".to_string(),
        }
    }
}

pub fn core_exists(a: u32, ell: u32) -> Result<CoreExistsReport, CliError> {
    Ok(CoreExistsReport {
        witness: core_existence(a, ell)?,
        a,
        ell,
    })
}

#[derive(Debug, Serialize)]
pub struct UnipdefWitness {
    pub label: String,
    pub degree: Degree,
}

#[derive(Debug, Serialize)]
pub struct UnipdefReport {
    pub d: u32,
    pub a: u32,
    pub ell: u32,
    pub witness: Option<UnipdefWitness>,
}

impl Render for UnipdefReport {
    fn text(&self) -> String {
        match &self.witness {
            Some(w) => format!(
                "witness {}: degree {}, {}-part {}\n",
                w.label, w.degree.degree, self.ell, self.ell
            ),
            None => "no witness (exceptional case)\n".to_string(),
        }
    }
}

pub fn unipdef(d: u32, a: u32, ell: u32) -> Result<UnipdefReport, CliError> {
    let witness = check_unipdef(d, a, ell)?.map(|(label, degree)| UnipdefWitness {
        label: label.to_string(),
        degree,
    });
    Ok(UnipdefReport { d, a, ell, witness })
}
