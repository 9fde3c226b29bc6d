use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use classinv::catalog::{golden_forms, normalize_key};
use classinv::run::{coeffs_text, OracleChoice, OutputFormat, RunConfig, RunError, DEFAULT_MAX_DEGREE};
use classinv::suite::{branch_json, branch_terms, branch_text, check_entry, exterior_report, golden_comparison};
use classinv_core::exterior::ExteriorKind;
use classinv_core::symfunc::lr_coefficient;
use classinv_core::{GroupId, GroupKind, Partition};
use serde_json::json;

#[derive(Parser)]
#[command(name = "classinv", version, about = "Hilbert series of invariants of Sp(n), O(n), SO(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// sp, o or so
    #[arg(long)]
    group: GroupKind,
    #[arg(long)]
    n: usize,
}

impl GroupArgs {
    fn id(&self) -> Result<GroupId, RunError> {
        GroupId::new(self.group, self.n).map_err(|e| RunError::Usage(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series of C[W]^G to a given degree
    Series {
        #[command(flatten)]
        group: GroupArgs,
        /// e.g. "V + L2(V)", "S3(V)", "2*[2,1]"; empty for the zero module
        #[arg(long, default_value = "")]
        spec: String,
        #[arg(long)]
        maxdeg: usize,
        #[arg(long, default_value = "none")]
        oracle: OracleChoice,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// catalog key such as 5.4/sp/2
        #[arg(long)]
        golden: Option<String>,
    },
    /// Invariants of the exterior algebra of S^2 V or Λ^2 V
    Exterior {
        #[command(flatten)]
        group: GroupArgs,
        /// sym2 or alt2
        #[arg(long)]
        kind: ExteriorKind,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Restriction of V^n_λ to G
    Branch {
        #[command(flatten)]
        group: GroupArgs,
        /// e.g. [2,1]
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Littlewood-Richardson coefficient c^λ_{μν}
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Check every catalog entry (or one, with --golden) against the engine
    Golden {
        #[arg(long)]
        golden: Option<String>,
        /// overrides each entry's own check degree
        #[arg(long)]
        maxdeg: Option<usize>,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn execute(command: Command) -> Result<u8, RunError> {
    match command {
        Command::Series { group, spec, maxdeg, oracle, format, golden } => {
            let mut config = RunConfig::new(group.id()?, spec, maxdeg);
            config.oracle = oracle;
            config.format = format;
            config.golden_key = golden;
            let report = classinv::run(&config)?;
            print!("{}", report.render(format));
            Ok(report.exit_code() as u8)
        }
        Command::Exterior { group, kind, format } => {
            let report = exterior_report(kind, group.id()?)?;
            match format {
                OutputFormat::Json => print_json(&report.to_json()),
                OutputFormat::Text => print!("{}", report.to_text()),
            }
            if report.closed_form_agrees {
                Ok(0)
            } else {
                Err(RunError::Inconsistent("filter and closed form disagree".into()))
            }
        }
        Command::Branch { group, lambda, format } => {
            let g = group.id()?;
            let terms = branch_terms(&lambda, g)?;
            match format {
                OutputFormat::Json => print_json(&branch_json(&lambda, g, &terms)),
                OutputFormat::Text => print!("{}", branch_text(&lambda, g, &terms)),
            }
            Ok(0)
        }
        Command::Lr { lambda, mu, nu } => {
            println!("{}", lr_coefficient(&lambda, &mu, &nu));
            Ok(0)
        }
        Command::Golden { golden, maxdeg, format } => {
            if let Some(d) = maxdeg {
                if d > DEFAULT_MAX_DEGREE {
                    return Err(RunError::Usage(format!("maxdeg {d} exceeds the cap {DEFAULT_MAX_DEGREE}")));
                }
            }
            let selected: Vec<_> = match &golden {
                None => golden_forms().iter().collect(),
                Some(key) => {
                    let key = normalize_key(key).ok_or_else(|| RunError::Usage(format!("malformed golden key {key:?}")))?;
                    let found: Vec<_> = golden_forms().iter().filter(|e| e.key == key).collect();
                    if found.is_empty() {
                        return Err(RunError::Usage(format!("no golden entry {key}")));
                    }
                    found
                }
            };
            let mut all_match = true;
            let mut rows = Vec::new();
            for entry in selected {
                let report = check_entry(entry, maxdeg)?;
                let c = golden_comparison(&report);
                all_match &= report.is_match();
                match format {
                    OutputFormat::Text => {
                        let tail = match c.first_difference() {
                            None => String::new(),
                            Some(d) => format!(" (first difference at t^{d})"),
                        };
                        println!("{:<10} {:<9} {}{tail}", entry.key, c.verdict().name(), entry.printed);
                    }
                    OutputFormat::Json => rows.push(json!({
                        "key": entry.key,
                        "maxdeg": report.maxdeg,
                        "verdict": c.verdict().name(),
                        "first_difference": c.first_difference(),
                        "engine": coeffs_text(&report.series),
                    })),
                }
            }
            if format == OutputFormat::Json {
                print_json(&json!({ "entries": rows }));
            }
            Ok(if all_match { 0 } else { 2 })
        }
    }
}
