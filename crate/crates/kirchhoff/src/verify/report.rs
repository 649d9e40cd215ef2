//! Verification reports and their line-based text form.
//!
//! ```text
//! kirchhoff-report 1
//! theorem_id: lower-bound
//! params: n=7 p=3
//! status: PASS
//! checked_count: 1330
//! witness<TAB>graph6<TAB>value<TAB>label
//! counterexample<TAB>graph6<TAB>observed<TAB>expected
//! elapsed_seconds: 0.021
//! ```
//!
//! Everything above the `elapsed_seconds` footer is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const FORMAT_HEADER: &str = "kirchhoff-report 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Violations observed, but only where the claim does not apply.
    Partial,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::Partial => 0,
            Status::Fail => 1,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Partial => "PARTIAL",
        })
    }
}

impl FromStr for Status {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "PASS" => Ok(Status::Pass),
            "FAIL" => Ok(Status::Fail),
            "PARTIAL" => Ok(Status::Partial),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub graph6: String,
    pub value: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Counterexample {
    pub graph6: String,
    pub observed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub checked_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub extremal_witnesses: Vec<Witness>,
    pub elapsed_seconds: f64,
}

fn clean(field: &str) -> String {
    field.replace(['\t', '\n', '\r'], " ")
}

impl VerificationReport {
    /// Status follows from the findings: PASS iff nothing failed and
    /// something was checked; failures outside the claimed range are PARTIAL.
    pub fn new(
        theorem_id: &str,
        params: BTreeMap<String, String>,
        checked_count: u64,
        counterexamples: Vec<Counterexample>,
        extremal_witnesses: Vec<Witness>,
        in_claimed_range: bool,
    ) -> Self {
        let status = match (counterexamples.is_empty(), checked_count > 0, in_claimed_range) {
            (true, true, _) => Status::Pass,
            (false, _, true) => Status::Fail,
            _ => Status::Partial,
        };
        VerificationReport {
            theorem_id: theorem_id.to_string(),
            params,
            status,
            checked_count,
            counterexamples,
            extremal_witnesses,
            elapsed_seconds: 0.0,
        }
    }

    /// The deterministic part of the text form.
    pub fn body(&self) -> String {
        let mut out = String::new();
        out.push_str(FORMAT_HEADER);
        out.push('\n');
        out.push_str(&format!("theorem_id: {}\n", self.theorem_id));
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("params: {}\n", params.join(" ")));
        out.push_str(&format!("status: {}\n", self.status));
        out.push_str(&format!("checked_count: {}\n", self.checked_count));
        for w in &self.extremal_witnesses {
            out.push_str(&format!("witness\t{}\t{}\t{}\n", w.graph6, clean(&w.value), clean(&w.label)));
        }
        for c in &self.counterexamples {
            out.push_str(&format!("counterexample\t{}\t{}\t{}\n", c.graph6, clean(&c.observed), clean(&c.expected)));
        }
        out
    }

    pub fn to_text(&self) -> String {
        format!("{}elapsed_seconds: {:.3}\n", self.body(), self.elapsed_seconds)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |line: usize, reason: &str| Error::MalformedReport { line, reason: reason.to_string() };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        if lines.next().map(|(_, l)| l) != Some(FORMAT_HEADER) {
            return Err(bad(1, "missing format header"));
        }
        let mut field = |name: &str| -> Result<(usize, String)> {
            let (no, line) = lines.next().ok_or_else(|| bad(0, "report ends early"))?;
            let rest = line.strip_prefix(name).and_then(|r| r.strip_prefix(':'));
            rest.map(|v| (no, v.trim_start().to_string()))
                .ok_or_else(|| bad(no, &format!("expected `{name}:`")))
        };

        let (_, theorem_id) = field("theorem_id")?;
        let (pl, params_text) = field("params")?;
        let mut params = BTreeMap::new();
        for item in params_text.split_whitespace() {
            let (k, v) = item.split_once('=').ok_or_else(|| bad(pl, "parameter without `=`"))?;
            params.insert(k.to_string(), v.to_string());
        }
        let (sl, status) = field("status")?;
        let status = status.parse().map_err(|_| bad(sl, "unknown status"))?;
        let (cl, checked) = field("checked_count")?;
        let checked_count = checked.parse().map_err(|_| bad(cl, "checked_count is not an integer"))?;

        let mut counterexamples = Vec::new();
        let mut extremal_witnesses = Vec::new();
        let mut elapsed_seconds = None;
        for (no, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l)).skip(5) {
            if let Some(v) = line.strip_prefix("elapsed_seconds: ") {
                elapsed_seconds = Some(v.parse().map_err(|_| bad(no, "elapsed_seconds is not a number"))?);
                continue;
            }
            let parts: Vec<&str> = line.split('\t').collect();
            match parts.as_slice() {
                ["witness", g, value, label] => extremal_witnesses.push(Witness {
                    graph6: g.to_string(),
                    value: value.to_string(),
                    label: label.to_string(),
                }),
                ["counterexample", g, observed, expected] => counterexamples.push(Counterexample {
                    graph6: g.to_string(),
                    observed: observed.to_string(),
                    expected: expected.to_string(),
                }),
                _ => return Err(bad(no, "unrecognised line")),
            }
        }
        Ok(VerificationReport {
            theorem_id,
            params,
            status,
            checked_count,
            counterexamples,
            extremal_witnesses,
            elapsed_seconds: elapsed_seconds.ok_or_else(|| bad(0, "missing elapsed_seconds footer"))?,
        })
    }
}
