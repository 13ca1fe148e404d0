use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use moncross_cli::{failure_document, run_text, Command, Failure, Flags, Limits};

/// Exact classification and division tools for unions of linear subspaces
/// and coordinate varieties. Reads one JSON case, or an array of cases,
/// and writes one JSON report per case.
#[derive(Parser)]
#[command(name = "moncross", version)]
struct Args {
    command: Command,
    /// Read the case from a file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    pretty: bool,
    /// Resource guards, e.g. `m=12,s=12,perm=1000000`.
    #[arg(long, default_value = "m=12,s=12,perm=1000000")]
    limits: Limits,
    /// divide: rewrite every entry over a minimal generator.
    #[arg(long)]
    fold_minimal: bool,
    /// equiv: allow the members of the second family to be reordered.
    #[arg(long)]
    reorder: bool,
    /// loss: the target is a normal crossing divisor.
    #[arg(long)]
    divisor: bool,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Schema(format!("{}: {e}", p.display())))?;
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::Schema(e.to_string()))?;
        }
    }
    Ok(text)
}

fn render(value: &serde_json::Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    }
}

fn fail(f: &Failure) -> ExitCode {
    eprintln!("error: {f}");
    ExitCode::from(f.exit_code() as u8)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let flags = Flags { fold_minimal: args.fold_minimal, reorder: args.reorder, divisor: args.divisor };
    let output = match read_input(args.input.as_ref()).and_then(|t| run_text(args.command, &t, flags, args.limits)) {
        Ok(o) => o,
        Err(f) => return fail(&f),
    };
    let mut code = 0;
    for doc in &output.documents {
        match doc {
            Ok(v) => println!("{}", render(v, args.pretty)),
            Err(f) if output.batch => {
                eprintln!("error: {f}");
                println!("{}", render(&failure_document(f), args.pretty));
                if code == 0 {
                    code = f.exit_code();
                }
            }
            Err(f) => return fail(f),
        }
    }
    ExitCode::from(code as u8)
}
