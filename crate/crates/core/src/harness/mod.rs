//! Verification drivers, seeded instance generation and JSON traces.

pub mod json;
mod random;
mod run;
mod trace;
mod verify;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{EncodingError, FieldTag};
use crate::boxball::BoxBallError;
use crate::jacobian::JacobianError;
use crate::toda::TodaError;

pub use random::{
    gen_random_boxball, gen_random_divisor, gen_random_function_state, gen_random_instance,
    gen_random_rational_state, gen_random_tropical, rng_from_seed, RandomInstance, RESAMPLE_BUDGET,
};
pub use run::run;
pub use trace::{CheckOutcome, CheckVerdict, Outcome, TraceRecord, SCHEMA};
pub use verify::{
    bbs_run, jac_add, toda_run, verify_bbs_diagram, verify_torsion, verify_translation,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Encoding(#[from] EncodingError),
    #[error(transparent)]
    Toda(#[from] TodaError),
    #[error(transparent)]
    Jacobian(#[from] JacobianError),
    #[error(transparent)]
    BoxBall(#[from] BoxBallError),
    #[error("no admissible instance after {0} attempts")]
    ResampleBudget(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    TodaRun,
    BbsRun,
    JacAdd,
    VerifyTranslation,
    VerifyTorsion,
    VerifyBbsDiagram,
    GenRandom,
}

impl Mode {
    pub const ALL: [Mode; 7] = [
        Mode::TodaRun,
        Mode::BbsRun,
        Mode::JacAdd,
        Mode::VerifyTranslation,
        Mode::VerifyTorsion,
        Mode::VerifyBbsDiagram,
        Mode::GenRandom,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::TodaRun => "toda-run",
            Mode::BbsRun => "bbs-run",
            Mode::JacAdd => "jac-add",
            Mode::VerifyTranslation => "verify-theorem1",
            Mode::VerifyTorsion => "verify-torsion",
            Mode::VerifyBbsDiagram => "verify-bbs-diagram",
            Mode::GenRandom => "gen-random",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| HarnessError::BadInput(format!("unknown mode {s:?}")))
    }
}

/// What `gen-random` produces.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InstanceKind {
    Toda,
    BoxBall,
    /// A curve together with two divisors on it.
    Divisors,
}

impl InstanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceKind::Toda => "toda",
            InstanceKind::BoxBall => "boxball",
            InstanceKind::Divisors => "divisors",
        }
    }

    /// The instance a mode consumes; `gen-random` defaults to a Toda state.
    pub fn for_mode(mode: Mode) -> Self {
        match mode {
            Mode::BbsRun | Mode::VerifyBbsDiagram => InstanceKind::BoxBall,
            Mode::JacAdd => InstanceKind::Divisors,
            _ => InstanceKind::Toda,
        }
    }
}

impl FromStr for InstanceKind {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            InstanceKind::Toda,
            InstanceKind::BoxBall,
            InstanceKind::Divisors,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
        .ok_or_else(|| HarnessError::BadInput(format!("unknown instance kind {s:?}")))
    }
}

/// Everything that determines a run; equal configs give byte-identical traces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub kind: InstanceKind,
    pub steps: usize,
    pub seed: u64,
    pub field: FieldTag,
    /// Number of sites for random Toda states.
    pub n: usize,
    /// Number of boxes for random box-ball states.
    pub boxes: usize,
    /// Number of solitons for random box-ball states.
    pub solitons: usize,
    /// Bound on numerators and denominators of random rationals.
    pub height: u64,
}

impl ExperimentConfig {
    pub fn new(mode: Mode) -> Self {
        ExperimentConfig {
            mode,
            kind: InstanceKind::for_mode(mode),
            steps: 1,
            seed: 0,
            field: FieldTag::Rationals,
            n: 3,
            boxes: 14,
            solitons: 3,
            height: 16,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "mode": self.mode.as_str(),
            "kind": self.kind.as_str(),
            "steps": self.steps,
            "seed": self.seed,
            "field": self.field.as_str(),
            "n": self.n,
            "boxes": self.boxes,
            "solitons": self.solitons,
            "height": self.height,
        })
    }
}
