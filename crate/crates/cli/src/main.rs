//! `wres`: computes the boundary residue cases, reconciles them against the
//! stored values and prints a JSON or markdown report.

use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, ValueEnum};
use wres_core::report::{run, Format, OperatorChoice, OracleMode, RunConfig, Substitution};
use wres_core::symbols::dump_catalog;

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OperatorArg {
    Type1,
    Type2,
    Both,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SubstituteArg {
    Primitive,
    Geometric,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Markdown,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OracleArg {
    Off,
    Arbitrate,
}

#[derive(Parser, Debug)]
#[command(name = "wres", version, about = "Boundary noncommutative residues of spectral Einstein operators")]
struct Cli {
    #[arg(long, value_enum, default_value = "both")]
    operator: OperatorArg,
    /// Restrict the run to one case, for example `aII` or `Phi**`.
    #[arg(long)]
    case: Option<String>,
    #[arg(long, value_enum, default_value = "geometric")]
    substitute: SubstituteArg,
    #[arg(long, value_enum, default_value = "markdown")]
    format: FormatArg,
    /// Arbitrate every mismatch with the numeric pipeline.
    #[arg(long, value_enum, default_value = "off")]
    oracle: OracleArg,
    /// Sample points per arbitration.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Print the symbol catalog and exit.
    #[arg(long, conflicts_with_all = ["case", "oracle", "verbose"])]
    dump_catalog: bool,
    /// Include every pipeline stage of each case.
    #[arg(long)]
    verbose: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn catalog_text(json: bool) -> String {
    let rows = dump_catalog();
    if json {
        let v: Vec<_> = rows
            .iter()
            .map(|(name, order, sphere, text)| {
                serde_json::json!({"symbol": name, "order": order, "sphere_only": sphere, "value": text})
            })
            .collect();
        return serde_json::to_string_pretty(&v).expect("catalog serializes");
    }
    let mut out = String::from("| symbol | order | sphere only | value |\n|---|---|---|---|\n");
    for (name, order, sphere, text) in rows {
        out.push_str(&format!("| {name} | {order} | {sphere} | `{text}` |\n"));
    }
    out
}

fn config(cli: &Cli) -> RunConfig {
    RunConfig {
        operator: match cli.operator {
            OperatorArg::Type1 => OperatorChoice::Type1,
            OperatorArg::Type2 => OperatorChoice::Type2,
            OperatorArg::Both => OperatorChoice::Both,
        },
        case: cli.case.clone(),
        substitution: match cli.substitute {
            SubstituteArg::Primitive => Substitution::Primitive,
            SubstituteArg::Geometric => Substitution::Geometric,
        },
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Markdown => Format::Markdown,
        },
        oracle: match cli.oracle {
            OracleArg::Off => OracleMode::Off,
            OracleArg::Arbitrate => OracleMode::Arbitrate,
        },
        verbose: cli.verbose,
        samples: cli.samples,
        seed: cli.seed,
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> Result<bool> {
        if cli.dump_catalog {
            emit(&catalog_text(matches!(cli.format, FormatArg::Json)), &cli.output)?;
            return Ok(true);
        }
        let out = run(&config(&cli))?;
        emit(&out.text, &cli.output)?;
        Ok(out.success)
    })();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
