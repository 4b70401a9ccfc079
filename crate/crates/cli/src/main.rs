mod commands;
mod input;

use clap::Parser;
use commands::{run_command, InputError, Options};
use input::{parse_input, InputDocument};
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

/// Exact computations for finite group extensions of shifts of finite type.
#[derive(Parser, Debug)]
#[command(name = "gsft", version, after_help = commands_help())]
struct Cli {
    /// Command to run (see the list below).
    command: String,
    /// Input document, text or JSON; `-` reads stdin.
    #[arg(long)]
    input: Option<String>,
    /// Seed for randomized corpora.
    #[arg(long, default_value_t = 20240601)]
    seed: u64,
    /// Enumeration cap for the brute-force oracles.
    #[arg(long, default_value_t = gsft_core::oracle::DEFAULT_BUDGET)]
    budget: u64,
    /// Tolerance for the floating point checks.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Also write the report to this file.
    #[arg(long)]
    json: Option<String>,
}

fn commands_help() -> String {
    format!("Commands: {}", commands::COMMANDS.join(", "))
}

fn read_input(cli: &Cli) -> Result<InputDocument, InputError> {
    let text = match cli.input.as_deref() {
        None => return Ok(InputDocument::default()),
        Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| InputError(format!("stdin: {e}")))?;
            s
        }
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))?
        }
    };
    // verify-* take a certificate (or a whole report) as input
    if cli.command.starts_with("verify-") {
        let mut doc = InputDocument::default();
        doc.values.insert("certificate".into(), text);
        return Ok(doc);
    }
    parse_input(&text).map_err(|e| InputError(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        seed: cli.seed,
        budget: cli.budget,
        tol: cli.tol,
    };
    let started = Instant::now();
    let outcome = read_input(&cli).and_then(|doc| {
        let echo = if cli.command.starts_with("verify-") {
            json!({})
        } else {
            let norm = doc.normalize().map_err(|e| InputError(e.to_string()))?;
            json!({"group": norm.group, "values": norm.values, "document": norm.render()})
        };
        run_command(&cli.command, &doc, &opts).map(|o| (echo, o))
    });
    let elapsed = started.elapsed().as_secs_f64() * 1000.0;
    let (report, code) = match outcome {
        Ok((echo, o)) => {
            let verified = o.verified();
            let report = json!({
                "command": cli.command,
                "input": echo,
                "options": {"seed": opts.seed, "budget": opts.budget, "tol": opts.tol},
                "canonical": o.canonical(),
                "verified": verified,
                "timing_ms": elapsed,
            });
            (report, if verified { 0 } else { 1 })
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            (json!({"command": cli.command, "error": msg}), 2)
        }
    };
    let text = to_text(&report);
    println!("{text}");
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: {path}: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}

fn to_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}
