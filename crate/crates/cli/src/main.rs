//! `semiflat` — workbench CLI over finite semirings and semimodules.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use semiflat::{catalog, exec, FiniteSemiring, Limits, Side};
use semiflat_cli::config::{
    module_from_construct, parse_workspace, semiring_from_catalog, Analysis, CliError, Workspace,
};
use semiflat_cli::report::Report;
use semiflat_cli::{repro, runner};

#[derive(Parser)]
#[command(
    name = "semiflat",
    version,
    about = "Exhaustive analyses over finite semirings and semimodules",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Run batch items one at a time (reports are identical either way).
    #[arg(long, global = true)]
    sequential: bool,

    /// Include wall-clock timings in reports (off by default so output is
    /// byte-identical across runs).
    #[arg(long, global = true)]
    timings: bool,

    /// Override the tensor size cap `|F| * |M|`.
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Override the congruence-closure slack.
    #[arg(long, global = true)]
    slack: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable report.
    Text,
    /// JSON report with a stable schema.
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a workspace file without running anything.
    Validate {
        /// Workspace file (JSON).
        #[arg(long)]
        workspace: PathBuf,
    },
    /// Run every analysis declared in a workspace file.
    Analyze {
        /// Workspace file (JSON).
        #[arg(long)]
        workspace: PathBuf,
    },
    /// Build one tensor product over a catalog semiring.
    Tensor {
        /// Catalog semiring id (e.g. `chain:4`, `zmod:6`).
        base: String,
        /// Construct for the right-semimodule factor.
        #[arg(long, default_value = "self")]
        left: String,
        /// Construct for the left-semimodule factor.
        #[arg(long, default_value = "self")]
        right: String,
    },
    /// Decide flatness of one module, or survey the whole census.
    Flatness {
        /// Catalog semiring id.
        base: String,
        /// Construct for the right-semimodule subject; omit to survey the
        /// census of all semimodules up to the bound.
        #[arg(long)]
        subject: Option<String>,
        /// Construct for a single left-semimodule target (with --subject).
        #[arg(long)]
        target: Option<String>,
        /// Size bound for the census survey (without --subject).
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Regularity profile of a catalog semiring.
    Regularity {
        /// Catalog semiring id.
        base: String,
        /// Also scan the n-by-n matrix semiring for regularity.
        #[arg(long, value_name = "N")]
        matrix: Option<usize>,
        /// Also probe for a non-e-flat semimodule up to this size.
        #[arg(long, value_name = "BOUND")]
        probe: Option<usize>,
        /// Also check m-flatness of normally generated semimodules up to
        /// this size (Bezout + regular premises).
        #[arg(long, value_name = "BOUND")]
        bezout: Option<usize>,
    },
    /// Re-derive the bundled suite of known results as a claim -> verdict
    /// table; exits 0 only if every claim passes.
    #[command(name = "reproduce-paper")]
    ReproducePaper {
        /// Run a single row by its slug (see the table for slugs).
        #[arg(long, value_name = "ROW")]
        only: Option<String>,
    },
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the catalog semirings and their named module families.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.sequential {
        exec::force_sequential(true);
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}

fn overridden_limits(cli: &Cli, base: Limits) -> Result<Limits, CliError> {
    let mut limits = base;
    if let Some(cap) = cli.cap {
        if cap == 0 {
            return Err(CliError::BadCaps("tensor_cap must be positive, got 0".into()));
        }
        limits.tensor_cap = cap;
    }
    if let Some(slack) = cli.slack {
        limits.slack = slack;
    }
    Ok(limits)
}

fn emit(cli: &Cli, report: &Report) -> ExitCode {
    match cli.format {
        Format::Text => print!("{}", report.render_text(cli.timings)),
        Format::Structured => print!("{}", report.render_structured(cli.timings)),
    }
    ExitCode::from(report.exit_code())
}

fn one_off(cli: &Cli, semirings: Vec<(String, Arc<FiniteSemiring>)>, analyses: Vec<Analysis>) -> Result<ExitCode, CliError> {
    let ws = Workspace {
        limits: overridden_limits(cli, Limits::default())?,
        semirings,
        semimodules: Vec::new(),
        morphisms: Vec::new(),
        analyses,
    };
    Ok(emit(cli, &runner::run(&ws)))
}

fn dispatch(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Validate { workspace } => {
            let ws = parse_workspace(workspace)?;
            match cli.format {
                Format::Text => {
                    println!(
                        "workspace ok: {} semirings, {} semimodules, {} morphisms, {} analyses",
                        ws.semirings.len(),
                        ws.semimodules.len(),
                        ws.morphisms.len(),
                        ws.analyses.len()
                    );
                }
                Format::Structured => {
                    let value = serde_json::json!({
                        "schema": semiflat_cli::report::SCHEMA,
                        "overall": "ok",
                        "semirings": ws.semirings.len(),
                        "semimodules": ws.semimodules.len(),
                        "morphisms": ws.morphisms.len(),
                        "analyses": ws.analyses.len(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializes"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { workspace } => {
            let mut ws = parse_workspace(workspace)?;
            ws.limits = overridden_limits(cli, ws.limits)?;
            Ok(emit(cli, &runner::run(&ws)))
        }
        Command::Tensor { base, left, right } => {
            let limits = overridden_limits(cli, Limits::default())?;
            let s = semiring_from_catalog(base)?;
            let f = module_from_construct(&s, Side::Right, left, &limits)?;
            let m = module_from_construct(&s, Side::Left, right, &limits)?;
            let analysis = Analysis::Tensor {
                label: format!("tensor {left} (x) {right}"),
                left: f,
                right: m,
            };
            one_off(cli, vec![(base.clone(), s)], vec![analysis])
        }
        Command::Flatness { base, subject, target, bound } => {
            let limits = overridden_limits(cli, Limits::default())?;
            let s = semiring_from_catalog(base)?;
            let analysis = match subject {
                Some(expr) => {
                    let f = module_from_construct(&s, Side::Right, expr, &limits)?;
                    let (label, m) = match target {
                        Some(texpr) => (
                            format!("flatness {expr} wrt {texpr}"),
                            Some(module_from_construct(&s, Side::Left, texpr, &limits)?),
                        ),
                        None => (format!("flatness {expr} wrt base"), None),
                    };
                    Analysis::Flatness { label, subject: f, target: m }
                }
                None => {
                    if target.is_some() {
                        return Err(CliError::BadCaps(
                            "--target needs --subject; omit both to survey".into(),
                        ));
                    }
                    let bound = bound.unwrap_or(limits.module_size_bound);
                    Analysis::Survey {
                        label: format!("survey {base} bound={bound}"),
                        semiring: s.clone(),
                        bound,
                    }
                }
            };
            one_off(cli, vec![(base.clone(), s)], vec![analysis])
        }
        Command::Regularity { base, matrix, probe, bezout } => {
            let s = semiring_from_catalog(base)?;
            let mut analyses = vec![Analysis::Regularity {
                label: format!("regularity {base}"),
                semiring: s.clone(),
            }];
            if let Some(n) = matrix {
                analyses.push(Analysis::MatrixScan {
                    label: format!("matrix-scan {base} n={n}"),
                    semiring: s.clone(),
                    n: *n,
                    elements: None,
                });
            }
            if let Some(b) = probe {
                analyses.push(Analysis::Probe {
                    label: format!("probe {base} bound={b}"),
                    semiring: s.clone(),
                    bound: *b,
                });
            }
            if let Some(b) = bezout {
                analyses.push(Analysis::BezoutCheck {
                    label: format!("bezout-check {base} bound={b}"),
                    semiring: s.clone(),
                    bound: *b,
                });
            }
            one_off(cli, vec![(base.clone(), s)], analyses)
        }
        Command::ReproducePaper { only } => {
            let limits = overridden_limits(cli, Limits::default())?;
            let report = repro::reproduce(only.as_deref(), &limits)?;
            Ok(emit(cli, &report))
        }
        Command::Catalog { what: CatalogCmd::List } => {
            let limits = Limits::default();
            match cli.format {
                Format::Text => {
                    for s in catalog::semirings() {
                        println!("{} (size {})", s.name(), s.size());
                        for side in [Side::Left, Side::Right] {
                            let mods = catalog::modules_for(&s, side, &limits);
                            let list: Vec<String> = mods
                                .iter()
                                .map(|nm| format!("{}({})", nm.name, nm.module.size()))
                                .collect();
                            let tag = match side {
                                Side::Left => "left",
                                Side::Right => "right",
                            };
                            println!("  {tag}: {}", list.join(" "));
                        }
                    }
                }
                Format::Structured => {
                    let value: Vec<serde_json::Value> = catalog::semirings()
                        .iter()
                        .map(|s| {
                            let family = |side: Side| -> Vec<serde_json::Value> {
                                catalog::modules_for(s, side, &limits)
                                    .iter()
                                    .map(|nm| {
                                        serde_json::json!({
                                            "name": nm.name,
                                            "size": nm.module.size(),
                                        })
                                    })
                                    .collect()
                            };
                            serde_json::json!({
                                "name": s.name(),
                                "size": s.size(),
                                "left": family(Side::Left),
                                "right": family(Side::Right),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializes"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
