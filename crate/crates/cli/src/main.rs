mod commands;
mod config;
mod emit;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;
use hurwitz_core::chars::Curve;
use hurwitz_core::group::Hurwitz;
use hurwitz_core::Context;

use commands::Outcome;
use config::{check_degrees, Cli, Command, PipelineConfig};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn run(cmd: &Command, cfg: &PipelineConfig, degrees: Option<Vec<u32>>) -> Result<Outcome> {
    let ctx = match cmd {
        Command::Group => return Ok(commands::group(&Hurwitz::build()?)),
        _ => Context::build()?,
    };
    Ok(match cmd {
        Command::Group => commands::group(&ctx.hurwitz),
        Command::Chartab => commands::chartab(&ctx)?,
        Command::Decompose { .. } => commands::decompose(&ctx, &degrees.expect("checked"))?,
        Command::H0 { curve, .. } => {
            let curves = match curve {
                Some(c) => vec![Curve::from(*c)],
                None => vec![Curve::X1, Curve::X2],
            };
            commands::h0(&ctx, &curves, &degrees.expect("checked"))?
        }
        Command::Quadrics => commands::quadrics(&ctx, cfg)?.0,
        Command::Verify { quadrics } => commands::verify_cmd(&ctx, quadrics.as_deref(), cfg)?,
        Command::All => commands::all(&ctx, cfg)?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = match PipelineConfig::from_args(&cli.global) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let degrees = match &cli.command {
        Command::Decompose { degrees } => Some(check_degrees(degrees, 0..=10)),
        Command::H0 { degrees, .. } => Some(check_degrees(degrees, 1..=20)),
        _ => None,
    };
    let degrees = match degrees.transpose() {
        Ok(d) => d,
        Err(e) => return usage(e),
    };
    if let Some(n) = cfg.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return usage(e);
        }
    }

    let outcome = match run(&cli.command, &cfg, degrees) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("FAIL: {e:#}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    let rendered = emit::render_all(&outcome.sections, cfg.format);
    if let Some(dir) = &cfg.out {
        if let Err(e) = emit::write_outputs(dir, &outcome.sections, &outcome.artifacts, cfg.format) {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_FAIL);
        }
    }
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(rendered.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(EXIT_FAIL);
    }
    if outcome.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
