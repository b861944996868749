use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use ccr_lab::cli::{Cli, Command, RunConfig, SelftestArgs, CONFIG_VERSION};
use ccr_lab::{execute, Failure};
use clap::Parser;

fn threads_from_env() -> Result<(), Failure> {
    let Ok(v) = std::env::var("CCR_LAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| Failure::Invalid(format!("CCR_LAB_THREADS: expected a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Invalid(e.to_string()))
}

fn load_config(path: &Path) -> Result<RunConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    let cfg: RunConfig = serde_path_to_error::deserialize(de)
        .map_err(|e| Failure::Invalid(format!("{}: key `{}`: {}", path.display(), e.path(), e.inner())))?;
    if cfg.version != CONFIG_VERSION {
        return Err(Failure::Invalid(format!(
            "{}: key `version`: unsupported schema version {}, expected {CONFIG_VERSION}",
            path.display(),
            cfg.version
        )));
    }
    Ok(cfg)
}

fn emit(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    match out.write_all(text.as_bytes()) {
        // a closed reader (e.g. `| head`) is not an error
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => r.map_err(|e| Failure::Invalid(format!("stdout: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    threads_from_env()?;
    let command = match (cli.selftest, cli.command) {
        (true, None) => Some(Command::Selftest(SelftestArgs { only: Vec::new() })),
        (true, Some(_)) => return Err(Failure::Invalid("--selftest takes no subcommand".into())),
        (false, cmd) => cmd,
    };
    let (command, seed, out): (Command, u64, _) = match (cli.config, command) {
        (Some(path), None) => {
            let cfg = load_config(&path)?;
            (cfg.command, cfg.seed, cli.out.or(cfg.out))
        }
        (None, Some(cmd)) => (cmd, cli.seed, cli.out),
        (Some(_), Some(_)) => return Err(Failure::Invalid("give either --config or a subcommand, not both".into())),
        (None, None) => return Err(Failure::Invalid("no subcommand; see --help".into())),
    };
    let report = execute(&command, seed)?;
    let mut stdout = std::io::stdout().lock();
    if let Some((_, first)) = report.files.first() {
        emit(&mut stdout, first)?;
    }
    if let Some(dir) = out {
        std::fs::create_dir_all(&dir).map_err(|e| Failure::Invalid(format!("{}: {e}", dir.display())))?;
        for (name, body) in &report.files {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
        }
    } else {
        // secondary reports (summaries) go to stdout after the main one
        for (_, body) in report.files.iter().skip(1) {
            emit(&mut stdout, body)?;
        }
    }
    match report.failure {
        Some(msg) => Err(Failure::Numeric(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("ccr-lab: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
