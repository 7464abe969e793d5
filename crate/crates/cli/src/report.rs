//! Reports and their text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use ghilb_core::ideals::RationalSeries;
use serde::Serialize;
use serde_json::Value;

use crate::job::{Command, JobSpec};

pub const SCHEMA: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesOut {
    pub numerator: Vec<i64>,
    pub denom_exponent: usize,
    pub text: String,
}

impl From<&RationalSeries> for SeriesOut {
    fn from(s: &RationalSeries) -> Self {
        SeriesOut { numerator: s.numerator().coeffs().to_vec(), denom_exponent: s.denom_exp(), text: s.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    CheckFailed,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema: &'static str,
    pub command: Command,
    pub input: JobSpec,
    pub seeds: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw_series: Option<SeriesOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_coeffs: Option<Vec<i64>>,
    pub values: BTreeMap<String, Value>,
    pub checks: Vec<CheckOut>,
    pub notes: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn new(command: Command, input: JobSpec, seeds: Vec<u64>) -> Self {
        Report {
            schema: SCHEMA,
            command,
            input,
            seeds,
            series: None,
            raw_series: None,
            j_coeffs: None,
            values: BTreeMap::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            status: Status::Ok,
            timings: None,
        }
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(v).expect("plain data serializes"));
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        if !pass && self.status == Status::Ok {
            self.status = Status::CheckFailed;
        }
        self.checks.push(CheckOut { name: name.into(), pass, detail });
    }

    /// Records the series; a zero series also gets a `W = 0` note.
    pub fn set_series(&mut self, s: &RationalSeries) {
        if s.is_zero() {
            self.notes.push("W = 0".into());
        }
        self.series = Some(s.into());
    }

    /// 0 on success, 1 when a check failed or was inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::CheckFailed | Status::Inconclusive => 1,
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "command: {}", report.command.name());
            let seeds: Vec<String> = report.seeds.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "seeds: {}", seeds.join(" "));
            if let Some(series) = &report.series {
                let _ = writeln!(s, "series: {}", series.text);
            }
            if let Some(raw) = &report.raw_series {
                let _ = writeln!(s, "raw series: {}", raw.text);
            }
            if let Some(j) = &report.j_coeffs {
                let j: Vec<String> = j.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "j: {}", j.join(" "));
            }
            for (k, v) in &report.values {
                let _ = writeln!(s, "{k}: {}", compact(v));
            }
            for c in &report.checks {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => {
                        let _ = writeln!(s, "check {}: {verdict} ({d})", c.name);
                    }
                    None => {
                        let _ = writeln!(s, "check {}: {verdict}", c.name);
                    }
                }
            }
            for n in &report.notes {
                let _ = writeln!(s, "note: {n}");
            }
            let status = match report.status {
                Status::Ok => "ok",
                Status::CheckFailed => "check-failed",
                Status::Inconclusive => "inconclusive",
            };
            let _ = writeln!(s, "status: {status}");
            if let Some(t) = &report.timings {
                for (k, v) in t {
                    let _ = writeln!(s, "time {k}: {v:.3}s");
                }
            }
            s
        }
    }
}
