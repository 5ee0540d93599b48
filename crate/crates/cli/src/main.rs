use std::io::{self, Read};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand};
use syzygy_cli::run::{render_json, render_text, report_exit_code, Output};
use syzygy_cli::script::{parse_field, parse_order, Call, FieldDecl, OrderDecl};
use syzygy_cli::{parse_script, run, CliError, Options, EXIT_ERROR};
use syzygy_core::papersuite::verify_all;

#[derive(Parser)]
#[command(name = "syzygy", version, about = "Groebner bases, resolutions and linkage for homogeneous ideals")]
struct Cli {
    /// Coefficient field, `QQ` or `ZZ/p`; overrides the script's ring.
    #[arg(long, global = true, value_parser = field_arg)]
    field: Option<FieldDecl>,
    /// Monomial order, `grevlex` or `lex`; overrides the script's ring.
    #[arg(long, global = true, value_parser = order_arg)]
    order: Option<OrderDecl>,
    /// Seed for randomized steps (regular sequences, unmixed parts, checks).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// One JSON object per command instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Per-command time limit in seconds.
    #[arg(long, global = true)]
    timeout_secs: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script file, or standard input when the path is `-`.
    Run { path: PathBuf },
    /// Run the identity suite and report every check.
    VerifyPaper,
}

fn field_arg(s: &str) -> Result<FieldDecl, String> {
    parse_field(s).map_err(|e| e.to_string())
}

fn order_arg(s: &str) -> Result<OrderDecl, String> {
    parse_order(s).map_err(|e| e.to_string())
}

fn read_source(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn verify_paper(opts: &Options) -> Result<i32, CliError> {
    let field = opts.field.unwrap_or(FieldDecl::Prime(32003)).spec()?;
    let seed = opts.seed;
    let (tx, rx) = std::sync::mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(verify_all(seed, field));
    });
    let report = match opts.timeout {
        Some(t) => rx.recv_timeout(t).ok(),
        None => rx.recv().ok(),
    };
    let Some(report) = report else {
        println!("verify_paper: skipped/timeout");
        return Ok(EXIT_ERROR);
    };
    let code = report_exit_code(&report);
    let call = Call { name: "verify_paper".into(), args: Vec::new() };
    let out = Output::Report(report);
    if opts.json {
        println!("{}", render_json(&call, &out));
    } else {
        if let Output::Report(r) = &out {
            for e in &r.entries {
                println!("{:<7} {:<48} {}", format!("{:?}", e.status).to_lowercase(), e.check_id, e.detail);
            }
        }
        println!("{}", render_text(&call.name, &out));
    }
    Ok(code)
}

fn main() {
    let cli = Cli::parse();
    let opts = Options {
        field: cli.field,
        order: cli.order,
        seed: cli.seed,
        json: cli.json,
        timeout: cli.timeout_secs.map(Duration::from_secs),
    };
    let result = match &cli.command {
        Command::Run { path } => read_source(path)
            .map_err(CliError::from)
            .and_then(|src| parse_script(&src))
            .and_then(|script| run(&script, &opts, &mut io::stdout().lock(), &mut io::stderr().lock())),
        Command::VerifyPaper => verify_paper(&opts),
    };
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    };
    // A timed-out worker thread may still be running; exiting here ends it.
    std::process::exit(code)
}
