//! Group and table inputs: files, catalog names and parametrized families.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use blockheight::analysis::GroupAnalysis;
use blockheight::catalog;
use blockheight::chartable::CharacterTable;
use blockheight::permgroup::{GroupFile, PermGroup};
use blockheight::pgroups::{self, MetacyclicSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A parametrized group family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Family {
    Metacyclic { p: u64, m: u32, n: u32, r: u64 },
    Wreath { d: usize, a: usize },
    Heisenberg { p: u64 },
    Extraspecial { p: u64, exponent_p: bool },
    Affine { n: usize, multipliers: Vec<usize> },
}

impl Family {
    pub fn build(&self, cap: usize) -> Result<PermGroup, CliError> {
        Ok(match self {
            Family::Metacyclic { p, m, n, r } => pgroups::metacyclic(MetacyclicSpec {
                p: *p,
                m: *m,
                n: *n,
                r: *r,
            })?,
            Family::Wreath { d, a } => pgroups::wreath_cyclic_symmetric(*d, *a, cap)?,
            Family::Heisenberg { p } => pgroups::heisenberg(*p)?,
            Family::Extraspecial { p, exponent_p } => pgroups::extraspecial(*p, *exponent_p)?,
            Family::Affine { n, multipliers } => {
                if *n < 2
                    || multipliers
                        .iter()
                        .any(|&m| blockheight::arith::gcd(m as u64, *n as u64) != 1)
                {
                    return Err(CliError::Usage(format!(
                        "affine group on Z/{n} needs unit multipliers"
                    )));
                }
                catalog::affine_cyclic(*n, multipliers)
            }
        })
    }
}

/// Exactly one of a catalog name, a group file or a family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_file: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

impl GroupRef {
    pub fn resolve(&self, base: &Path, cap: usize) -> Result<PermGroup, CliError> {
        match (&self.group, &self.group_file, &self.family) {
            (Some(name), None, None) => builtin(name),
            (None, Some(path), None) => Ok(read_group_file(&base.join(path))?.to_group()?),
            (None, None, Some(f)) => f.build(cap),
            _ => Err(CliError::Input(
                "expected exactly one of group, group_file, family".into(),
            )),
        }
    }
}

pub fn builtin(name: &str) -> Result<PermGroup, CliError> {
    catalog::by_name(name).ok_or_else(|| CliError::Input(format!("unknown group {name:?}")))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_group_file(path: &Path) -> Result<GroupFile, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_table_file(path: &Path) -> Result<CharacterTable, CliError> {
    CharacterTable::from_json(&read(path)?).map_err(CliError::from)
}

/// What a command operates on.
#[derive(Debug)]
pub enum Loaded {
    Group {
        analysis: Box<GroupAnalysis>,
        subgroups: BTreeMap<String, PermGroup>,
    },
    Table(Box<CharacterTable>),
}

impl Loaded {
    pub fn table(&self) -> &CharacterTable {
        match self {
            Loaded::Group { analysis, .. } => &analysis.table,
            Loaded::Table(t) => t,
        }
    }

    pub fn analysis(&self) -> Option<&GroupAnalysis> {
        match self {
            Loaded::Group { analysis, .. } => Some(analysis),
            Loaded::Table(_) => None,
        }
    }

    pub fn subgroup(&self, name: &str) -> Option<&PermGroup> {
        match self {
            Loaded::Group { subgroups, .. } => subgroups.get(name),
            Loaded::Table(_) => None,
        }
    }
}

pub fn analyze(group: PermGroup, cap: usize) -> Result<GroupAnalysis, CliError> {
    Ok(GroupAnalysis::new(group, cap)?)
}

/// A path to a group or table file, or a catalog name.
pub fn load(source: &str, cap: usize) -> Result<Loaded, CliError> {
    let path = Path::new(source);
    if !path.exists() {
        return Ok(Loaded::Group {
            analysis: Box::new(analyze(builtin(source)?, cap)?),
            subgroups: BTreeMap::new(),
        });
    }
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if value.get("irreducibles").is_some() {
        return Ok(Loaded::Table(Box::new(CharacterTable::from_json(&text)?)));
    }
    let file: GroupFile = serde_json::from_value(value)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let subgroups = file
        .subgroups
        .keys()
        .map(|name| Ok((name.clone(), file.subgroup(name)?.expect("listed subgroup"))))
        .collect::<Result<_, CliError>>()?;
    Ok(Loaded::Group {
        analysis: Box::new(analyze(file.to_group()?, cap)?),
        subgroups,
    })
}
