//! Check records and run reports.

use std::collections::BTreeMap;
use std::time::Instant;

use baxter_core::check::Residual;
use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

pub const SCHEMA: &str = "baxter-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Where and how two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub name: String,
    pub anchor: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_location: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    pub timing_ms: f64,
}

impl Record {
    pub fn new(name: &str, anchor: &str) -> Self {
        Record {
            name: name.to_string(),
            anchor: anchor.to_string(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            residual_location: None,
            detail: None,
            data: None,
            timing_ms: 0.0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn detail(mut self, detail: impl ToString) -> Self {
        self.detail = Some(detail.to_string());
        self
    }

    pub fn data(mut self, data: Value) -> Self {
        self.data = Some(data);
        self
    }

    /// Pass on a zero residual, fail with a witness otherwise.
    pub fn residual(mut self, res: &Residual) -> Self {
        match &res.mismatch {
            None => self.status = Status::Pass,
            Some(m) => {
                self.status = Status::Fail;
                self.residual_location = Some(Witness {
                    row: m.row,
                    col: m.col,
                    lhs: m.lhs.to_string(),
                    rhs: m.rhs.to_string(),
                });
            }
        }
        self
    }

    /// Negative control: pass iff the residual is nonzero (the witness is kept).
    pub fn expect_nonzero(self, res: &Residual) -> Self {
        let status = if res.is_zero() { Status::Fail } else { Status::Pass };
        let mut r = self.residual(res);
        r.status = status;
        if status == Status::Fail {
            r.detail = Some("residual vanished where a nonzero residual was expected".into());
        }
        r
    }

    pub fn error(mut self, e: impl std::fmt::Display) -> Self {
        self.status = Status::Fail;
        self.detail = Some(e.to_string());
        self
    }

    pub fn skipped(mut self, why: impl ToString) -> Self {
        self.status = Status::Skipped;
        self.detail = Some(why.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Runs `f` and stamps its wall time on the record.
pub fn timed(f: impl FnOnce() -> Record) -> Record {
    let start = Instant::now();
    let mut r = f();
    r.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    r
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(config: RunConfig, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.parameters.cmp(&b.parameters)));
        let count = |s| records.iter().filter(|r| r.status == s).count();
        let summary = Summary { pass: count(Status::Pass), fail: count(Status::Fail), skipped: count(Status::Skipped) };
        Report { schema: SCHEMA, tool: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION"), config, summary, records }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// The report without timing fields, for reproducibility comparisons.
    pub fn body(&self) -> String {
        let mut v = self.to_value();
        if let Some(records) = v.get_mut("records").and_then(Value::as_array_mut) {
            for r in records {
                if let Some(o) = r.as_object_mut() {
                    o.remove("timing_ms");
                }
            }
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report serializes")
    }
}
