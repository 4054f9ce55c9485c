use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ialex::laurent::DEFAULT_DEGREE_CAP;
use ialex_cli::{corpus, run_value, Failure, Options, Report};

/// Intersection Alexander polynomials and Laurent-module algebra from JSON
/// case files.
#[derive(Parser)]
#[command(name = "ialex", version)]
struct Cli {
    /// Case file or payload; standard input when absent.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Aligned plain-text tables instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Largest degree the factorizer accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: usize,
    /// Take every high-degree kernel part to be 1 in product cases.
    #[arg(long, global = true)]
    assume_zero_kernel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a case file of any kind.
    Run,
    /// Run every `*.json` case file of a directory.
    Corpus { dir: PathBuf },
    Factor,
    Snf,
    #[command(subcommand)]
    Seq(SeqCmd),
    #[command(subcommand)]
    Ia(IaCmd),
    #[command(subcommand)]
    Bounds(BoundsCmd),
    Homology,
    E2,
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Exactness of a fully known sequence.
    Check,
    /// Fill in unknown entries from splittings.
    Solve,
}

#[derive(Subcommand)]
enum IaCmd {
    Point,
    Product,
    Dual,
    Verify,
}

#[derive(Subcommand)]
enum BoundsCmd {
    Allowed,
    AllowedGeneral,
    Exclude,
    ExcludeGeneral,
    Maxpower,
    Check,
}

fn read_input(path: Option<&PathBuf>) -> Result<Value, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::new("io", format!("{}: {e}", p.display()), None))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::new("io", e.to_string(), None))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::new("json", e.to_string(), None))
}

/// Accepts a full case file of the expected kind or a bare payload.
fn as_case(v: Value, kind: &str, op: Option<&str>) -> Result<Value, Failure> {
    let mut case = match v.get("kind") {
        Some(k) if k == kind => v,
        Some(k) => {
            return Err(Failure::new("kind-mismatch", format!("case file has kind {k}, expected {kind:?}"), Some("kind".into())))
        }
        None => json!({ "kind": kind, "payload": v }),
    };
    if let (Some(op), Some(payload)) = (op, case.get_mut("payload").and_then(Value::as_object_mut)) {
        match payload.get("op") {
            Some(o) if o != op => {
                return Err(Failure::new(
                    "kind-mismatch",
                    format!("payload has op {o}, expected {op:?}"),
                    Some("payload.op".into()),
                ))
            }
            Some(_) => {}
            None => {
                payload.insert("op".into(), json!(op));
            }
        }
    }
    Ok(case)
}

fn no_unknowns(case: &Value) -> Result<(), Failure> {
    let polys = case.pointer("/payload/polys").and_then(Value::as_array);
    if let Some(i) = polys.and_then(|p| p.iter().position(Value::is_null)) {
        return Err(Failure::new(
            "schema",
            "seq check takes no unknown entries; use seq solve",
            Some(format!("payload.polys[{i}]")),
        ));
    }
    Ok(())
}

fn dispatch(cli: &Cli, opts: &Options) -> Report {
    let (kind, op) = match &cli.command {
        Command::Corpus { dir } => return corpus(dir, opts),
        Command::Run => ("", None),
        Command::Factor => ("factor", None),
        Command::Snf => ("snf", None),
        Command::Seq(_) => ("seq", None),
        Command::Ia(IaCmd::Point) => ("ia-point", None),
        Command::Ia(IaCmd::Product) => ("ia-product", None),
        Command::Ia(IaCmd::Dual) => ("ia-dual", None),
        Command::Ia(IaCmd::Verify) => ("verify", None),
        Command::Bounds(b) => (
            "bounds",
            Some(match b {
                BoundsCmd::Allowed => "allowed",
                BoundsCmd::AllowedGeneral => "allowed-general",
                BoundsCmd::Exclude => "exclude",
                BoundsCmd::ExcludeGeneral => "exclude-general",
                BoundsCmd::Maxpower => "maxpower",
                BoundsCmd::Check => "check",
            }),
        ),
        Command::Homology => ("homology", None),
        Command::E2 => ("e2", None),
    };
    let label = if kind.is_empty() { "unknown" } else { kind };
    let prepared = read_input(cli.input.as_ref()).and_then(|v| {
        if kind.is_empty() {
            return Ok(v);
        }
        let case = as_case(v, kind, op)?;
        if matches!(cli.command, Command::Seq(SeqCmd::Check)) {
            no_unknowns(&case)?;
        }
        Ok(case)
    });
    match prepared {
        Ok(case) => run_value(case, opts),
        Err(f) => Report::error(label, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options { degree_cap: cli.degree_cap, assume_zero_kernel: cli.assume_zero_kernel };
    let report = dispatch(&cli, &opts);
    if cli.text {
        print!("{}", report.to_text());
    } else {
        print!("{}", report.to_json());
    }
    ExitCode::from(report.exit_code() as u8)
}
