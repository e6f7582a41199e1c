mod census;
mod replay;
mod report;
mod verify;

use anyhow::Result;
use clap::{Parser, Subcommand};
use std::path::PathBuf;

/// Verification toolkit for flips, twists and labeled pants decompositions.
#[derive(Parser)]
#[command(name = "fliptwist", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification and report pass/fail.
    Verify {
        /// One of: pentagon, handle-swap, rotation, reflection,
        /// z2-invariance, hexagon-orbits-strict, hexagon-orbits-labeled,
        /// labeled-graph-connectivity, general-position.
        name: String,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Search depth cap for word searches.
        #[arg(long, default_value_t = 8)]
        max_depth: usize,
        /// Enumeration bound on the number of pants.
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    /// Replay a move script against a state file.
    Replay {
        /// Model: graph | homology | hexagon | torus.
        model: String,
        /// State file (format depends on the model).
        state: PathBuf,
        /// Script file in the shared move DSL.
        script: PathBuf,
        /// Write the final state here as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate types or orbits.
    Census {
        /// Kind: graphs | labeled-orbits | hexagon.
        kind: String,
        /// `<genus> <holes>` for graph kinds, `strict|labeled` for hexagon.
        args: Vec<String>,
        /// Write the JSON census here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write DOT diagrams here (graph kinds).
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Enumeration bound on the number of pants.
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify {
            name,
            json,
            max_depth,
            bound,
        } => verify::run(&name, json.as_deref(), max_depth, bound),
        Command::Replay {
            model,
            state,
            script,
            json,
        } => replay::run(&model, &state, &script, json.as_deref()),
        Command::Census {
            kind,
            args,
            json,
            dot,
            bound,
        } => census::run(&kind, &args, json.as_deref(), dot.as_deref(), bound),
    }
}
