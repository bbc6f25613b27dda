//! Command reports in a free-form human mode and a stable key=value mode.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use baxter_core::{DefectReport, Error as CoreError};

use crate::error::CliError;

/// Residual entries listed per failed check in machine mode.
pub const RESIDUAL_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    InputError,
    ResourceLimit,
}

impl Status {
    /// The stable exit-code contract.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InputError => 2,
            Status::ResourceLimit => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::InputError => "input-error",
            Status::ResourceLimit => "resource-limit",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportMode {
    #[default]
    Human,
    Machine,
}

impl std::str::FromStr for ReportMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "human" => Ok(ReportMode::Human),
            "machine" => Ok(ReportMode::Machine),
            _ => Err(format!("unknown report mode `{s}` (human or machine)")),
        }
    }
}

/// One named check; it passes exactly when `defect` is `None` and no
/// `failure` note is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub defect: Option<DefectReport>,
    /// Reason for a failure that has no residual, such as unequal matrices.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.defect.is_none() && self.failure.is_none()
    }

    pub fn from_defect(name: impl Into<String>, defect: Option<DefectReport>) -> Self {
        Check {
            name: name.into(),
            defect,
            failure: None,
        }
    }

    pub fn boolean(name: impl Into<String>, ok: bool, why: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            defect: None,
            failure: (!ok).then(|| why.into()),
        }
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    /// Ordered extra results such as counts or operator entries.
    pub facts: Vec<(String, String)>,
    pub outputs: Vec<PathBuf>,
    pub error: Option<(Status, String)>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
            facts: Vec::new(),
            outputs: Vec::new(),
            error: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push((key.into(), value.to_string()));
    }

    /// Records a command error. Failed preconditions and postconditions are
    /// check failures; budget overruns are resource limits; everything else
    /// is an input error.
    pub fn fail_with(&mut self, e: CliError) {
        match e {
            CliError::Core(CoreError::Precondition { what, defect } | CoreError::Postcondition { what, defect }) => {
                self.checks.push(Check {
                    name: what.clone(),
                    defect: defect.map(|d| *d),
                    failure: Some(format!("{what} does not hold")),
                });
            }
            CliError::Core(e @ CoreError::BudgetExceeded { .. }) => {
                self.error = Some((Status::ResourceLimit, e.to_string()));
            }
            e => self.error = Some((Status::InputError, e.to_string())),
        }
    }

    /// Exit status 0 exactly when every check passed and nothing errored.
    pub fn status(&self) -> Status {
        match &self.error {
            Some((s, _)) => *s,
            None if self.checks.iter().all(Check::passed) => Status::Pass,
            None => Status::Fail,
        }
    }

    pub fn render(&self, mode: ReportMode) -> String {
        match mode {
            ReportMode::Human => self.render_human(),
            ReportMode::Machine => self.render_machine(),
        }
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "$ {}", self.command);
        for c in &self.checks {
            let mark = if c.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(out, "  {mark}  {}", c.name);
            if let Some(d) = &c.defect {
                let _ = writeln!(out, "        {d}");
                let shown: Vec<String> = d
                    .residual
                    .entries()
                    .take(4)
                    .map(|(i, v)| format!("{i:?} -> {v}"))
                    .collect();
                let _ = writeln!(out, "        residual: {}", shown.join(", "));
            } else if let Some(f) = &c.failure {
                let _ = writeln!(out, "        {f}");
            }
        }
        for (k, v) in &self.facts {
            let _ = writeln!(out, "  {k}: {v}");
        }
        for p in &self.outputs {
            let _ = writeln!(out, "  wrote {}", p.display());
        }
        if let Some((_, e)) = &self.error {
            let _ = writeln!(out, "  error: {e}");
        }
        let s = self.status();
        let _ = writeln!(
            out,
            "{} (exit {}) in {:.3}s",
            s.name(),
            s.exit_code(),
            self.elapsed.as_secs_f64()
        );
        out
    }

    /// Line-oriented `key=value` output with no timing, so identical inputs
    /// give identical bytes.
    fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command={}", self.command);
        let _ = writeln!(out, "checks={}", self.checks.len());
        for (i, c) in self.checks.iter().enumerate() {
            let _ = writeln!(out, "check.{i}.name={}", c.name);
            let _ = writeln!(out, "check.{i}.status={}", if c.passed() { "pass" } else { "fail" });
            if let Some(d) = &c.defect {
                let join = |ix: &[usize]| ix.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                let _ = writeln!(out, "check.{i}.identity={}", d.identity);
                let _ = writeln!(out, "check.{i}.witness_input={}", join(d.witness_input()));
                let _ = writeln!(out, "check.{i}.witness_output={}", join(d.witness_output()));
                let _ = writeln!(out, "check.{i}.residual_nnz={}", d.residual.nnz());
                let entries: Vec<String> = d
                    .residual
                    .entries()
                    .take(RESIDUAL_LIMIT)
                    .map(|(ix, v)| format!("{}:{v}", join(ix)))
                    .collect();
                let _ = writeln!(out, "check.{i}.residual={}", entries.join(";"));
            }
            if let Some(f) = &c.failure {
                let _ = writeln!(out, "check.{i}.reason={f}");
            }
        }
        for (k, v) in &self.facts {
            let _ = writeln!(out, "fact.{k}={v}");
        }
        for (i, p) in self.outputs.iter().enumerate() {
            let _ = writeln!(out, "output.{i}={}", p.display());
        }
        if let Some((_, e)) = &self.error {
            let _ = writeln!(out, "error={}", e.replace('\n', " "));
        }
        let s = self.status();
        let _ = writeln!(out, "status={}", s.name());
        let _ = writeln!(out, "exit={}", s.exit_code());
        out
    }
}
