use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "toda-gauss/1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail,
    DomainExit,
}

/// Overall result of a run; maps to the process exit code.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    DomainExit,
    IdentityViolation,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::DomainExit => 1,
            Outcome::IdentityViolation => 2,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckVerdict {
    pub id: String,
    pub outcome: CheckOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct TraceRecord {
    pub schema: &'static str,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<Value>,
    pub input: Value,
    pub snapshots: Vec<Value>,
    pub checks: Vec<CheckVerdict>,
    pub outcome: Outcome,
}

impl TraceRecord {
    pub fn new(mode: &str, input: Value) -> Self {
        TraceRecord {
            schema: SCHEMA,
            mode: mode.to_string(),
            config: None,
            input,
            snapshots: Vec::new(),
            checks: Vec::new(),
            outcome: Outcome::Pass,
        }
    }

    fn push(
        &mut self,
        id: String,
        outcome: CheckOutcome,
        reason: Option<String>,
        detail: Option<Value>,
    ) {
        self.checks.push(CheckVerdict {
            id,
            outcome,
            reason,
            detail,
        });
        self.outcome = self.fold_outcome();
    }

    fn fold_outcome(&self) -> Outcome {
        let has = |o| self.checks.iter().any(|c| c.outcome == o);
        if has(CheckOutcome::Fail) {
            Outcome::IdentityViolation
        } else if has(CheckOutcome::DomainExit) {
            Outcome::DomainExit
        } else {
            Outcome::Pass
        }
    }

    /// Record a boolean check; a false value is an identity violation.
    pub fn check(&mut self, id: impl Into<String>, holds: bool) {
        let outcome = if holds {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        };
        self.push(id.into(), outcome, None, None);
    }

    pub fn check_with(&mut self, id: impl Into<String>, holds: bool, detail: Value) {
        let outcome = if holds {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        };
        self.push(id.into(), outcome, None, Some(detail));
    }

    /// Record a check that could not be evaluated because of an arithmetic failure.
    pub fn fail(&mut self, id: impl Into<String>, reason: impl ToString) {
        self.push(
            id.into(),
            CheckOutcome::Fail,
            Some(reason.to_string()),
            None,
        );
    }

    pub fn domain_exit(&mut self, id: impl Into<String>, reason: impl ToString) {
        self.push(
            id.into(),
            CheckOutcome::DomainExit,
            Some(reason.to_string()),
            None,
        );
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckVerdict> {
        self.checks
            .iter()
            .filter(|c| c.outcome != CheckOutcome::Pass)
    }

    pub fn verdict(&self, id: &str) -> Option<&CheckVerdict> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("traces serialize");
        s.push('\n');
        s
    }
}
