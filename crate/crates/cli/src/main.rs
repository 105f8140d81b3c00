use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use sjplane_cli::{
    load_document, run_command, CliError, Command, DEFAULT_BMAX, DEFAULT_CMAX, DEFAULT_NMAX,
};

/// Exact computations with modules over the super Jordan plane.
#[derive(Parser)]
#[command(name = "sjplane", version)]
struct Cli {
    /// Emit the report as a JSON object.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the defining relations on a module file (`-` reads stdin).
    Check { file: String },
    /// Canonical label, or labels of the indecomposable summands.
    Classify { file: String },
    /// Indecomposable summands with bases and restricted matrices.
    Decompose { file: String },
    /// Whether two modules are isomorphic.
    Iso { file_a: String, file_b: String },
    /// Matrices for a canonical label such as `Dim2U(2,3)`.
    Construct { label: String },
    /// PBW normal form of a word such as "x2 x1".
    Nf { word: String },
    /// Identity suite, confluence and classification round trips.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_BMAX)]
        bmax: u32,
        #[arg(long, default_value_t = DEFAULT_CMAX)]
        cmax: u32,
        #[arg(long, default_value_t = DEFAULT_NMAX)]
        nmax: u32,
    },
}

fn build(cmd: Cmd) -> Result<Command, CliError> {
    Ok(match cmd {
        Cmd::Check { file } => Command::Check(load_document(&file)?),
        Cmd::Classify { file } => Command::Classify(load_document(&file)?),
        Cmd::Decompose { file } => Command::Decompose(load_document(&file)?),
        Cmd::Iso { file_a, file_b } => {
            if file_a == "-" && file_b == "-" {
                return Err(CliError::Usage("only one input can come from stdin".into()));
            }
            Command::Iso(load_document(&file_a)?, load_document(&file_b)?)
        }
        Cmd::Construct { label } => Command::Construct(label),
        Cmd::Nf { word } => Command::Nf(word),
        Cmd::Selftest { bmax, cmax, nmax } => Command::Selftest { bmax, cmax, nmax },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match build(cli.cmd).and_then(|c| run_command(&c)) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.json());
            } else {
                print!("{}", report.text());
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                let v = json!({ "error": e.name(), "message": e.to_string() });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            }
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(2)
        }
    }
}
