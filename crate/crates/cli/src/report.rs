use std::fmt;
use std::io::Write;

use nfl_core::NflError;
use serde_json::{json, Value};

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_CLOSED: i32 = 3;
pub const EXIT_GUARD: i32 = 4;
pub const EXIT_FALSIFIED: i32 = 5;
pub const EXIT_OUTPUT: i32 = 1;

#[derive(Debug)]
pub enum CliError {
    /// A core error raised while reading `path` (if any).
    Core { path: Option<String>, source: NflError },
    Input(String),
    Output(std::io::Error),
}

impl CliError {
    pub fn at(path: &str) -> impl FnOnce(NflError) -> CliError + '_ {
        move |source| CliError::Core {
            path: Some(path.to_string()),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core { source, .. } => match source {
                NflError::GuardExceeded { .. } | NflError::ExactOverflowGuard { .. } => EXIT_GUARD,
                _ => EXIT_INPUT,
            },
            CliError::Input(_) => EXIT_INPUT,
            CliError::Output(_) => EXIT_OUTPUT,
        }
    }
}

impl From<NflError> for CliError {
    fn from(source: NflError) -> Self {
        CliError::Core { path: None, source }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core {
                path: Some(path),
                source: NflError::Json(e),
            } => write!(f, "{path}:{}:{}: {e}", e.line(), e.column()),
            CliError::Core { path: Some(path), source } => write!(f, "{path}: {source}"),
            CliError::Core { path: None, source } => write!(f, "{source}"),
            CliError::Input(msg) => f.write_str(msg),
            CliError::Output(e) => write!(f, "cannot write report: {e}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A CSV table: header plus rows.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// A finished command result, assembled in full before anything is written.
pub struct Report {
    pub result: Value,
    pub table: Table,
    pub exit: i32,
    /// Printed to stderr after the report.
    pub notice: Option<String>,
}

impl Report {
    pub fn new(result: Value, table: Table) -> Self {
        Report {
            result,
            table,
            exit: 0,
            notice: None,
        }
    }

    pub fn with_exit(mut self, exit: i32, notice: impl Into<String>) -> Self {
        self.exit = exit;
        self.notice = Some(notice.into());
        self
    }

    /// Marks the report as evidence that two computed results contradict
    /// each other.
    pub fn falsified(self, what: impl Into<String>) -> Self {
        let what = what.into();
        self.with_exit(EXIT_FALSIFIED, format!("internal inconsistency: {what}"))
    }

    pub fn render_json(&self, command: &str, config: Value) -> Vec<u8> {
        let doc = json!({
            "tool": "nfl-lab",
            "version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "config": config,
            "result": self.result,
        });
        let mut out = serde_json::to_vec_pretty(&doc).expect("report serializes");
        out.push(b'\n');
        out
    }

    pub fn render_csv(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.table.header).expect("in-memory write");
        for row in &self.table.rows {
            w.write_record(row).expect("in-memory write");
        }
        w.into_inner().expect("in-memory flush")
    }
}

pub fn write_output(bytes: &[u8], out: Option<&std::path::Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(CliError::Output),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes).and_then(|_| stdout.flush()).map_err(CliError::Output)
        }
    }
}
