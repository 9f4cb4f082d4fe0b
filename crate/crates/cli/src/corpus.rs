//! Directory-driven regression runs: one JSON entry per file, each checked
//! at its listed primes against optional pinned expectations.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use blockheight::blocktheory::{
    block_partition, verify_em, verify_em_group, EmReport, MinHeight, Verdict,
};
use blockheight::permgroup::PermGroup;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::commands::{resolve_reference, Render};
use crate::source::{analyze, read_table_file, Family, GroupRef, Loaded};
use crate::{CliError, EXIT_COMPUTE, EXIT_MISMATCH, EXIT_OK};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_file: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_file: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    pub primes: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub defect_groups: Vec<DefectGroupEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expectations: Vec<Expectation>,
}

/// An asserted defect group for block `block` at prime `p`. `reference` is
/// a subgroup of the entry's group file, a group file or a catalog name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefectGroupEntry {
    pub p: u64,
    pub block: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defects: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mh: Option<Vec<MinHeight>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal_mh: Option<MinHeight>,
    /// Number of principal-block characters of height `principal_mh`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal_mh_attained: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Open,
    Mismatch,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub file: String,
    pub name: String,
    pub status: Status,
    pub reports: Vec<EmReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub group: String,
    pub p: u64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub entries: Vec<EntryReport>,
    pub summary: Vec<SummaryRow>,
}

impl CorpusReport {
    /// 65 if any entry errored, else 2 on any mismatch or failed
    /// expectation, else 0.
    pub fn exit_code(&self) -> i32 {
        match self.entries.iter().map(|e| e.status).max() {
            Some(Status::Error) => EXIT_COMPUTE,
            Some(Status::Mismatch) => EXIT_MISMATCH,
            _ => EXIT_OK,
        }
    }
}

impl Render for CorpusReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let _ = writeln!(s, "{:<24} {:<16} {:?}", e.file, e.name, e.status);
            for f in &e.failures {
                let _ = writeln!(s, "    expectation failed: {f}");
            }
            if let Some(err) = &e.error {
                let _ = writeln!(s, "    error: {err}");
            }
        }
        for row in &self.summary {
            let _ = writeln!(s, "{:<24} p={:<3} {}", row.group, row.p, row.verdict);
        }
        let _ = writeln!(
            s,
            "{} entr{}",
            self.entries.len(),
            if self.entries.len() == 1 { "y" } else { "ies" }
        );
        s
    }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

/// Entry files (`*.json`) sorted by file name.
pub fn entry_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| io_err(dir, e))?
        .map(|d| d.map(|d| d.path()).map_err(|e| io_err(dir, e)))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

pub fn parse_entry(path: &Path) -> Result<CorpusEntry, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    serde_json::from_str(&text).map_err(|e| io_err(path, e))
}

fn load_entry(entry: &CorpusEntry, base: &Path, cap: usize) -> Result<Loaded, CliError> {
    if let Some(t) = &entry.table_file {
        if entry.group.is_some() || entry.group_file.is_some() || entry.family.is_some() {
            return Err(CliError::Input(
                "expected exactly one of group, group_file, table_file, family".into(),
            ));
        }
        return Ok(Loaded::Table(Box::new(read_table_file(&base.join(t))?)));
    }
    let source = GroupRef {
        group: entry.group.clone(),
        group_file: entry.group_file.clone(),
        family: entry.family.clone(),
    };
    let group = source.resolve(base, cap)?;
    let subgroups = match &entry.group_file {
        Some(path) => {
            let file = crate::source::read_group_file(&base.join(path))?;
            file.subgroups
                .keys()
                .map(|n| Ok((n.clone(), file.subgroup(n)?.expect("listed subgroup"))))
                .collect::<Result<_, CliError>>()?
        }
        None => BTreeMap::new(),
    };
    Ok(Loaded::Group {
        analysis: Box::new(analyze(group, cap)?),
        subgroups,
    })
}

fn check(exp: &Expectation, report: &EmReport, failures: &mut Vec<String>) {
    let p = exp.p;
    let mut expect = |what: &str, want: String, got: String| {
        if want != got {
            failures.push(format!("p={p} {what}: expected {want}, got {got}"));
        }
    };
    if let Some(n) = exp.blocks {
        expect("blocks", n.to_string(), report.blocks.len().to_string());
    }
    if let Some(d) = &exp.defects {
        expect(
            "defects",
            format!("{d:?}"),
            format!(
                "{:?}",
                report.blocks.iter().map(|b| b.defect).collect::<Vec<_>>()
            ),
        );
    }
    if let Some(mh) = &exp.mh {
        let got: Vec<MinHeight> = report.blocks.iter().map(|b| b.mh_b).collect();
        expect("mh", fmt_heights(mh), fmt_heights(&got));
    }
    let principal = report.blocks.iter().find(|b| b.principal);
    if let Some(want) = exp.principal_mh {
        expect(
            "principal mh",
            want.to_string(),
            principal.map_or("none".into(), |b| b.mh_b.to_string()),
        );
    }
    if let Some(want) = exp.principal_mh_attained {
        let got = principal.map_or(0, |b| match b.mh_b {
            MinHeight::Finite(h) => b.heights.iter().filter(|&&x| x == h).count(),
            MinHeight::Infinite => 0,
        });
        expect(
            "principal mh attained by",
            want.to_string(),
            got.to_string(),
        );
    }
    if let Some(want) = exp.verdict {
        expect("verdict", want.to_string(), report.worst().to_string());
    }
}

fn fmt_heights(h: &[MinHeight]) -> String {
    let parts: Vec<String> = h.iter().map(MinHeight::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn run_loaded(
    entry: &CorpusEntry,
    base: &Path,
    cap: usize,
) -> Result<(Vec<EmReport>, Vec<String>), CliError> {
    let loaded = load_entry(entry, base, cap)?;
    if let Some(e) = entry
        .expectations
        .iter()
        .find(|e| !entry.primes.contains(&e.p))
    {
        return Err(CliError::Input(format!(
            "expectation for p={} which is not listed in primes",
            e.p
        )));
    }
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for &p in &entry.primes {
        if !blockheight::arith::is_prime(p) {
            return Err(CliError::Input(format!("{p} is not a prime")));
        }
        let user: BTreeMap<usize, PermGroup> = entry
            .defect_groups
            .iter()
            .filter(|d| d.p == p)
            .map(|d| {
                let g = match (&d.reference, &d.family) {
                    (Some(r), None) => resolve_reference(r, &loaded, base)?,
                    (None, Some(f)) => f.build(cap)?,
                    _ => {
                        return Err(CliError::Input(
                            "defect group needs exactly one of reference, family".into(),
                        ))
                    }
                };
                Ok((d.block, g))
            })
            .collect::<Result<_, CliError>>()?;
        let report = match &loaded {
            Loaded::Group { analysis, .. } => verify_em_group(analysis, p, &user, cap)?,
            Loaded::Table(t) => verify_em(t, &block_partition(t, p)?, None, &user, cap)?,
        };
        for exp in entry.expectations.iter().filter(|e| e.p == p) {
            check(exp, &report, &mut failures);
        }
        reports.push(report);
    }
    Ok((reports, failures))
}

fn run_file(path: &Path, cap: usize) -> EntryReport {
    let file = path
        .file_name()
        .map_or_else(String::new, |f| f.to_string_lossy().into_owned());
    let base = path.parent().unwrap_or(Path::new("."));
    let entry = match parse_entry(path) {
        Ok(e) => e,
        Err(err) => {
            return EntryReport {
                name: file.clone(),
                file,
                status: Status::Error,
                reports: Vec::new(),
                failures: Vec::new(),
                error: Some(err.to_string()),
            }
        }
    };
    match run_loaded(&entry, base, cap) {
        Ok((reports, failures)) => {
            let worst = reports
                .iter()
                .map(EmReport::worst)
                .max()
                .unwrap_or(Verdict::Holds);
            let status = if !failures.is_empty() || worst == Verdict::Mismatch {
                Status::Mismatch
            } else if worst == Verdict::Open {
                Status::Open
            } else {
                Status::Ok
            };
            EntryReport {
                file,
                name: entry.name,
                status,
                reports,
                failures,
                error: None,
            }
        }
        Err(err) => EntryReport {
            file,
            name: entry.name,
            status: Status::Error,
            reports: Vec::new(),
            failures: Vec::new(),
            error: Some(err.to_string()),
        },
    }
}

/// Runs every entry in `dir` on the rayon pool; the report is in file-name
/// order regardless of completion order.
pub fn run_corpus(dir: &Path, cap: usize) -> Result<CorpusReport, CliError> {
    let files = entry_files(dir)?;
    let entries: Vec<EntryReport> = files.par_iter().map(|f| run_file(f, cap)).collect();
    let summary = entries
        .iter()
        .flat_map(|e| {
            e.reports.iter().map(|r| SummaryRow {
                group: e.name.clone(),
                p: r.p,
                verdict: r.worst(),
            })
        })
        .collect();
    Ok(CorpusReport { entries, summary })
}
