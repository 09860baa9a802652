//! `abacus`: command-line access to the block combinatorics library.
//!
//! Every invocation prints one JSON document
//! `{"elapsed_ms": .., "payload": .., "status": "ok" | "error"}` with sorted
//! keys. Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

mod commands;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use commands::Cli;

fn emit(status: &str, payload: Value, elapsed_ms: u128, text: bool) {
    if text {
        print!("{}", render::text(status, &payload));
    } else {
        let doc = json!({ "elapsed_ms": elapsed_ms as u64, "payload": payload, "status": status });
        println!("{doc}");
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string().trim().to_string();
            let text = std::env::args().any(|a| a == "--text");
            emit("error", json!({ "code": "usage_error", "message": message }), 0, text);
            return ExitCode::from(2);
        }
    };
    let text = cli.text;
    match commands::run(cli) {
        Ok(commands::Output::Document(payload)) => {
            emit("ok", payload, start.elapsed().as_millis(), text);
            ExitCode::SUCCESS
        }
        Ok(commands::Output::Lines(lines)) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let payload = json!({ "code": e.code(), "message": e.to_string() });
            emit("error", payload, start.elapsed().as_millis(), text);
            ExitCode::from(1)
        }
    }
}
