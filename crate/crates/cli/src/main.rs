use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use blockheight_cli::commands::{self, Render};
use blockheight_cli::corpus::run_corpus;
use blockheight_cli::source::{builtin, load, read_group_file, Family};
use blockheight_cli::{resolve_cap, CliError, CAP_ENV, EXIT_OK, EXIT_USAGE};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "blockheight",
    version,
    about = "Character tables, p-blocks and heights of finite permutation groups"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Element enumeration cap (default: $BLOCKHEIGHT_CAP or 1000000).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Accepted for interface stability; every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and print (or export) the character table.
    Chartable {
        /// Group file, table file or catalog name.
        source: String,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Print the p-block partition with defects and heights.
    Blocks {
        source: String,
        #[arg(short)]
        p: u64,
    },
    /// Print the minimal positive height of every p-block.
    Mh {
        source: String,
        #[arg(short)]
        p: u64,
    },
    /// Compare mh(B) with mh(D) block by block.
    VerifyEm {
        source: String,
        #[arg(short)]
        p: u64,
        /// BLOCK=GROUP, where GROUP is a subgroup name of the group file, a
        /// group file or a catalog name. Repeatable.
        #[arg(long = "defect-group")]
        defect_groups: Vec<String>,
    },
    /// mh of a p-group given by a family or a source.
    PgroupMh(PGroupArgs),
    /// The l-core and weight of a partition.
    Core {
        /// Parts separated by commas, e.g. 4,2,1.
        partition: String,
        #[arg(short = 'l')]
        ell: u64,
    },
    /// Search for an l-core of size b with l <= b < 2l and b = a (mod l).
    CoreExists {
        #[arg(short = 'l')]
        ell: u32,
        #[arg(short)]
        a: u32,
    },
    /// Search C_d wr S_a for an irreducible degree with l-part exactly l.
    UnipdefCheck {
        #[arg(short)]
        d: u32,
        #[arg(short)]
        a: u32,
        #[arg(short = 'l')]
        ell: u32,
    },
    /// Run every entry of a corpus directory.
    Corpus { dir: PathBuf },
}

#[derive(Args)]
struct PGroupArgs {
    /// Group file or catalog name, when no family is given.
    source: Option<String>,
    #[arg(short)]
    p: Option<u64>,
    /// Split metacyclic <x,y | x^(p^m), y^(p^n), x^y = x^r>.
    #[arg(long, num_args = 4, value_names = ["P", "M", "N", "R"])]
    metacyclic: Option<Vec<u64>>,
    /// C_d wr S_a.
    #[arg(long, num_args = 2, value_names = ["D", "A"])]
    wreath: Option<Vec<usize>>,
    #[arg(long, value_name = "P")]
    heisenberg: Option<u64>,
    #[arg(long, value_name = "P")]
    extraspecial: Option<u64>,
    /// With --extraspecial: exponent p rather than p^2.
    #[arg(long, requires = "extraspecial")]
    exponent_p: bool,
    /// Write the constructed group as a group file.
    #[arg(long)]
    export: Option<PathBuf>,
}

impl PGroupArgs {
    fn family(&self) -> Result<Option<Family>, CliError> {
        let mut found = Vec::new();
        if let Some(v) = &self.metacyclic {
            let m = u32::try_from(v[1]).map_err(|_| CliError::Usage("m too large".into()))?;
            let n = u32::try_from(v[2]).map_err(|_| CliError::Usage("n too large".into()))?;
            found.push(Family::Metacyclic {
                p: v[0],
                m,
                n,
                r: v[3],
            });
        }
        if let Some(v) = &self.wreath {
            found.push(Family::Wreath { d: v[0], a: v[1] });
        }
        if let Some(p) = self.heisenberg {
            found.push(Family::Heisenberg { p });
        }
        if let Some(p) = self.extraspecial {
            found.push(Family::Extraspecial {
                p,
                exponent_p: self.exponent_p,
            });
        }
        match (found.len(), &self.source) {
            (0, Some(_)) => Ok(None),
            (1, None) => Ok(found.pop()),
            _ => Err(CliError::Usage(
                "give exactly one of a source or a family".into(),
            )),
        }
    }
}

fn emit<T: Serialize + Render>(report: &T, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("reports serialize")
        );
    } else {
        print!("{}", report.text());
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cap = resolve_cap(cli.cap, std::env::var(CAP_ENV).ok().as_deref())?;
    let json = cli.json;
    match cli.command {
        Command::Chartable { source, export } => emit(
            &commands::chartable(&load(&source, cap)?, export.as_deref())?,
            json,
        ),
        Command::Blocks { source, p } => emit(&commands::blocks(&load(&source, cap)?, p)?, json),
        Command::Mh { source, p } => emit(&commands::mh(&load(&source, cap)?, p)?, json),
        Command::VerifyEm {
            source,
            p,
            defect_groups,
        } => {
            let loaded = load(&source, cap)?;
            let user = defect_groups
                .iter()
                .map(|a| commands::parse_defect_group(a, &loaded))
                .collect::<Result<BTreeMap<_, _>, _>>()?;
            let report = commands::verify(&loaded, p, &user, cap)?;
            emit(&report, json);
            if report.worst() == blockheight::blocktheory::Verdict::Mismatch {
                return Ok(blockheight_cli::EXIT_MISMATCH);
            }
        }
        Command::PgroupMh(args) => {
            let family = args.family()?;
            let group = match (&family, &args.source) {
                (Some(f), _) => f.build(cap)?,
                (None, Some(s)) if std::path::Path::new(s).exists() => {
                    read_group_file(s.as_ref())?.to_group()?
                }
                (None, Some(s)) => builtin(s)?,
                (None, None) => unreachable!("checked by PGroupArgs::family"),
            };
            emit(
                &commands::pgroup_mh(&group, family.as_ref(), args.p, cap, args.export.as_deref())?,
                json,
            );
        }
        Command::Core { partition, ell } => emit(
            &commands::core(commands::parse_partition(&partition)?, ell)?,
            json,
        ),
        Command::CoreExists { ell, a } => emit(&commands::core_exists(a, ell)?, json),
        Command::UnipdefCheck { d, a, ell } => emit(&commands::unipdef(d, a, ell)?, json),
        Command::Corpus { dir } => {
            let report = run_corpus(&dir, cap)?;
            emit(&report, json);
            return Ok(report.exit_code());
        }
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!(
                "{}",
                serde_json::to_string(&err.record()).expect("error record serializes")
            );
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
