//! CLI front end. Exit codes: 0 = success, 1 = usage error,
//! 2 = verification counterexample, 3 = internal-consistency error.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cascade_index::cascade::cascade;
use cascade_index::chevalley::{
    build_chevalley, index_oracle, SelectionKind, SubalgebraSelection,
};
use cascade_index::error::Error;
use cascade_index::index::IndexContext;
use cascade_index::report::{
    cardinality_table, cascade_table, maximal_a_table, minimal_table, render_index_report,
    OutputFormat,
};
use cascade_index::rootsys::{RootSystem, SimpleType, Subset};
use cascade_index::verify::{parse_type_ranges, run, RunConfig, Sabotage};

#[derive(Parser)]
#[command(
    name = "cascade-index",
    version,
    about = "Kostant cascades and exact index computations for parabolic subalgebras \
             (simple roots use Bourbaki numbering, 1-based)"
)]
struct Cli {
    /// Optional key=value config file; command-line flags win.
    #[arg(long, global = true, env = "CASCADE_INDEX_CONFIG")]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, env = "CASCADE_INDEX_FORMAT")]
    format: Option<OutputFormat>,

    /// Write output here instead of stdout.
    #[arg(long, global = true, env = "CASCADE_INDEX_OUT")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the cascade K(S) for a type and subset.
    Cascade {
        /// Simple type, e.g. E6, A5, G2.
        r#type: String,
        /// `all`, `none`, or comma-separated 1-based simple-root indices.
        #[arg(long, default_value = "all")]
        subset: String,
    },
    /// Print the index report for p_S and u_S.
    Index {
        r#type: String,
        #[arg(long, default_value = "all")]
        subset: String,
    },
    /// Index reports for every subset of a type.
    Enumerate { r#type: String },
    /// Emit the cascade cardinality, minimal-parabolic and maximal-A tables.
    Tables {
        /// Type ranges, e.g. "A1..A12,B2..B10,D4..D10,E6,E7,E8,F4,G2".
        #[arg(long, env = "CASCADE_INDEX_TYPES")]
        types: Option<String>,
    },
    /// Run all verification suites; nonzero exit on any failure.
    Verify {
        #[arg(long, env = "CASCADE_INDEX_TYPES")]
        types: Option<String>,
        #[arg(long, env = "CASCADE_INDEX_MAX_ENUM_RANK")]
        max_enum_rank: Option<usize>,
        #[arg(long, env = "CASCADE_INDEX_ORACLE_RANK_CAP")]
        oracle_rank_cap: Option<usize>,
        #[arg(long, env = "CASCADE_INDEX_TRIALS")]
        trials: Option<u32>,
        #[arg(long, env = "CASCADE_INDEX_SEED")]
        seed: Option<u64>,
        /// Skip the oracle spot checks on F4/A5/D5.
        #[arg(long)]
        no_spot_checks: bool,
        /// Harness self-test: corrupt the sum formula and expect failures.
        #[arg(long, hide = true)]
        self_test_corrupt: bool,
    },
    /// Brute-force index of p_S, u_S and u_S⁻ versus the closed formulas.
    Oracle {
        r#type: String,
        #[arg(long, default_value = "all")]
        subset: String,
        #[arg(long, env = "CASCADE_INDEX_TRIALS")]
        trials: Option<u32>,
        #[arg(long, env = "CASCADE_INDEX_SEED")]
        seed: Option<u64>,
    },
}

fn parse_subset(spec: &str, rank: usize) -> Result<Subset, Error> {
    match spec.trim() {
        "all" => Ok(Subset::full(rank)),
        "none" | "" => Ok(Subset::EMPTY),
        list => {
            let mut s = Subset::EMPTY;
            for part in list.split(',') {
                let i: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad subset index {part:?}")))?;
                if i == 0 || i > rank {
                    return Err(Error::Usage(format!(
                        "subset index {i} out of range 1..={rank}"
                    )));
                }
                s.insert(i - 1);
            }
            Ok(s)
        }
    }
}

fn load_config_file(path: &PathBuf) -> Result<HashMap<String, String>, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(Error::Usage(format!(
                "{}:{}: expected key=value",
                path.display(),
                lineno + 1
            )));
        };
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn build_system(label: &str) -> Result<RootSystem, Error> {
    let t = SimpleType::parse(label)?;
    if t.is_degenerate() {
        eprintln!("warning: D3 is isomorphic to A3; computing as requested");
    }
    RootSystem::build(t)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run_cli(cli: Cli) -> Result<u8, Error> {
    let file_cfg = match &cli.config {
        Some(path) => load_config_file(path)?,
        None => HashMap::new(),
    };
    let fmt = cli
        .format
        .or_else(|| match file_cfg.get("format").map(String::as_str) {
            Some("json") => Some(OutputFormat::Json),
            Some("csv") => Some(OutputFormat::Csv),
            Some("markdown") => Some(OutputFormat::Markdown),
            _ => None,
        })
        .unwrap_or(OutputFormat::Json);
    let out = cli.out.clone().or_else(|| file_cfg.get("out").map(PathBuf::from));

    // flag value, else config-file value, else default
    fn pick<T: std::str::FromStr>(
        flag: Option<T>,
        file: Option<&String>,
        default: T,
    ) -> Result<T, Error> {
        match flag {
            Some(v) => Ok(v),
            None => match file {
                Some(raw) => raw
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad config value {raw:?}"))),
                None => Ok(default),
            },
        }
    }

    match cli.cmd {
        Cmd::Cascade { r#type, subset } => {
            let rs = build_system(&r#type)?;
            let s = parse_subset(&subset, rs.rank)?;
            let c = cascade(&rs, s);
            emit(&out, &cascade_table(&rs, &c).render(fmt))?;
            Ok(0)
        }
        Cmd::Index { r#type, subset } => {
            let rs = build_system(&r#type)?;
            let s = parse_subset(&subset, rs.rank)?;
            let ctx = IndexContext::new(&rs);
            let report = ctx.index_report(s)?;
            emit(&out, &render_index_report(&report, fmt))?;
            Ok(0)
        }
        Cmd::Enumerate { r#type } => {
            let rs = build_system(&r#type)?;
            let ctx = IndexContext::new(&rs);
            let reports = ctx.enumerate_equality()?;
            let text = match fmt {
                OutputFormat::Json => {
                    let list: Vec<_> = reports.iter().map(|(_, r)| r).collect();
                    serde_json::to_string_pretty(&list)? + "\n"
                }
                _ => reports
                    .iter()
                    .map(|(_, r)| render_index_report(r, fmt))
                    .collect::<String>(),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Tables { types } => {
            let spec = types
                .or_else(|| file_cfg.get("types").cloned())
                .unwrap_or_else(|| "A1..A12,B2..B10,C2..C10,D4..D10,E6,E7,E8,F4,G2".into());
            let types = parse_type_ranges(&spec)?;
            let max_a = types
                .iter()
                .filter(|t| t.family == cascade_index::rootsys::Family::A)
                .map(|t| t.rank)
                .max()
                .unwrap_or(0);
            let mut text = String::new();
            text.push_str(&cardinality_table(&types)?.render(fmt));
            text.push_str(&minimal_table(&types)?.render(fmt));
            if max_a >= 2 {
                text.push_str(&maximal_a_table(max_a)?.render(fmt));
            }
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Verify {
            types,
            max_enum_rank,
            oracle_rank_cap,
            trials,
            seed,
            no_spot_checks,
            self_test_corrupt,
        } => {
            let defaults = RunConfig::default();
            let types = match types.or_else(|| file_cfg.get("types").cloned()) {
                Some(spec) => parse_type_ranges(&spec)?,
                None => defaults.types,
            };
            let config = RunConfig {
                types,
                max_enum_rank: pick(
                    max_enum_rank,
                    file_cfg.get("max_enum_rank"),
                    defaults.max_enum_rank,
                )?,
                oracle_rank_cap: pick(
                    oracle_rank_cap,
                    file_cfg.get("oracle_rank_cap"),
                    defaults.oracle_rank_cap,
                )?,
                spot_checks: if no_spot_checks {
                    vec![]
                } else {
                    RunConfig::default_spot_checks()
                },
                trials: pick(trials, file_cfg.get("trials"), defaults.trials)?,
                seed: pick(seed, file_cfg.get("seed"), defaults.seed)?,
            };
            let sabotage = if self_test_corrupt { Sabotage::CorruptSum } else { Sabotage::None };
            let report = run(&config, sabotage)?;
            emit(&out, &(serde_json::to_string_pretty(&report)? + "\n"))?;
            for suite in &report.suites {
                eprintln!(
                    "{}: {} checks, {} failures",
                    suite.name,
                    suite.checks,
                    suite.failures.len()
                );
            }
            Ok(if report.passed { 0 } else { 2 })
        }
        Cmd::Oracle { r#type, subset, trials, seed } => {
            let rs = build_system(&r#type)?;
            let s = parse_subset(&subset, rs.rank)?;
            let trials = pick(trials, file_cfg.get("trials"), 5)?;
            let seed = pick(seed, file_cfg.get("seed"), 1)?;
            let ctx = IndexContext::new(&rs);
            let report = ctx.index_report(s)?;
            let alg = build_chevalley(&rs)?;
            let p = SubalgebraSelection::new(&alg, SelectionKind::Parabolic, s)?;
            let u = SubalgebraSelection::new(&alg, SelectionKind::Nilradical, s)?;
            let um = SubalgebraSelection::new(&alg, SelectionKind::OppositeNilradical, s)?;
            let oracle_p = index_oracle(&p, trials, seed)?;
            let oracle_u = index_oracle(&u, trials, seed)?;
            let oracle_um = index_oracle(&um, trials, seed)?;
            let matches = oracle_p == report.chi_p && oracle_u == report.chi_u;
            let diag = serde_json::json!({
                "type": rs.type_label(),
                "subset": s.indices_1based(),
                "oracle": {"chi_p": oracle_p, "chi_u": oracle_u, "chi_u_minus": oracle_um},
                "formula": {"chi_p": report.chi_p, "chi_u": report.chi_u},
                "trials": trials,
                "seed": seed,
                "match": matches,
            });
            emit(&out, &(serde_json::to_string_pretty(&diag)? + "\n"))?;
            Ok(if matches { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run_cli(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Usage(_) | Error::InvalidType(_) | Error::BadSubset(_) | Error::NotARoot(_) => 1,
                Error::TheoremViolation(_) => 2,
                Error::Internal(_) => 3,
                Error::Io(_) | Error::Json(_) => 1,
            };
            ExitCode::from(code)
        }
    }
}
