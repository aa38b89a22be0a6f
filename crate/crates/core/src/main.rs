use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use toda_gauss::algebra::FieldTag;
use toda_gauss::harness::{run, ExperimentConfig, HarnessError, InstanceKind, Mode};

/// Exact verification harness for the discrete periodic Toda flow, its Jacobian
/// linearization and the periodic box-ball system.
///
/// Exit codes: 0 all checks pass, 1 the flow left its domain, 2 an identity was violated,
/// 3 bad input.
#[derive(Parser, Debug)]
#[command(name = "toda-gauss", version)]
struct Args {
    /// toda-run, bbs-run, jac-add, verify-theorem1, verify-torsion, verify-bbs-diagram
    /// or gen-random.
    mode: Mode,
    /// Instance JSON, or a trace whose input is replayed. Generated from the seed if absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Q or QT; instances that declare a field override this.
    #[arg(long, default_value = "Q")]
    field: FieldTag,
    /// Trace destination; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sites of generated Toda states.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Boxes of generated box-ball states.
    #[arg(long, default_value_t = 14)]
    boxes: usize,
    /// Solitons of generated box-ball states.
    #[arg(long, default_value_t = 3)]
    solitons: usize,
    /// Numerator and denominator bound of generated rationals.
    #[arg(long, default_value_t = 16)]
    height: u64,
    /// What gen-random produces: toda, boxball or divisors.
    #[arg(long)]
    kind: Option<InstanceKind>,
}

impl Args {
    fn config(&self) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::new(self.mode);
        cfg.steps = self.steps;
        cfg.seed = self.seed;
        cfg.field = self.field;
        cfg.n = self.n;
        cfg.boxes = self.boxes;
        cfg.solitons = self.solitons;
        cfg.height = self.height;
        if let Some(kind) = self.kind {
            cfg.kind = kind;
        }
        cfg
    }
}

/// Write through a sibling temporary file so readers never see a partial trace.
fn write_atomically(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

fn execute(args: &Args) -> Result<i32, HarnessError> {
    let input: Option<Value> = match &args.input {
        Some(path) => Some(serde_json::from_str(&fs::read_to_string(path)?)?),
        None => None,
    };
    let trace = run(&args.config(), input.as_ref())?;
    let text = trace.to_json_string();
    match &args.out {
        Some(path) => write_atomically(path, &text)?,
        None => print!("{text}"),
    }
    for c in trace.failures() {
        eprintln!(
            "{:?}: {} {}",
            c.outcome,
            c.id,
            c.reason.as_deref().unwrap_or("")
        );
    }
    Ok(trace.outcome.exit_code())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(3);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match execute(&args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
