use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueSource {
    /// A published theorem or lemma.
    Paper,
    /// Computed by an independent construction or oracle.
    Derived,
    /// Immediate from the definitions.
    Trivial,
    /// An open conjecture; never gates a run.
    Conjecture,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: Value,
    pub provenance: ValueSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: String,
    pub expected: Expected,
    pub computed: Value,
    pub status: Status,
    /// Certificates and witnesses; a failing report carries the refuting object here.
    pub evidence: Vec<Value>,
    pub elapsed: f64,
    /// Conjecture probes and optional searches; never gate an exit code.
    #[serde(default)]
    pub probe: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    /// `Pass` exactly when `computed == expected.value`.
    pub fn compare(
        claim_id: &str,
        parameters: impl Into<String>,
        expected: Expected,
        computed: Value,
        evidence: Vec<Value>,
        elapsed: f64,
    ) -> Self {
        let status = if computed == expected.value { Status::Pass } else { Status::Fail };
        VerificationReport {
            claim_id: claim_id.into(),
            parameters: parameters.into(),
            expected,
            computed,
            status,
            evidence,
            elapsed,
            probe: false,
            note: None,
        }
    }

    pub fn exhausted(claim_id: &str, parameters: impl Into<String>, expected: Expected, evidence: Vec<Value>, elapsed: f64) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            parameters: parameters.into(),
            expected,
            computed: Value::Null,
            status: Status::Exhausted,
            evidence,
            elapsed,
            probe: false,
            note: None,
        }
    }

    pub fn as_probe(mut self) -> Self {
        self.probe = true;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Canonical ordering: claim id, then parameters with embedded numbers
    /// compared numerically.
    pub fn sort_key_cmp(&self, other: &Self) -> Ordering {
        self.claim_id
            .cmp(&other.claim_id)
            .then_with(|| natural_cmp(&self.parameters, &other.parameters))
    }

    /// JSON with every timing field zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        strip_timing(&mut v);
        v
    }
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (key, val) in map.iter_mut() {
                if key == "elapsed" || key == "seconds" {
                    *val = Value::from(0.0);
                } else {
                    strip_timing(val);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<Result<u64, &str>> {
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let digit = rest.as_bytes()[0].is_ascii_digit();
            let end = rest
                .find(|c: char| c.is_ascii_digit() != digit)
                .unwrap_or(rest.len());
            let (head, tail) = rest.split_at(end);
            out.push(if digit { head.parse().map_err(|_| head) } else { Err(head) });
            rest = tail;
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let o = match (x, y) {
            (Ok(p), Ok(q)) => p.cmp(q),
            (Err(p), Err(q)) => p.cmp(q),
            (Ok(_), Err(_)) => Ordering::Less,
            (Err(_), Ok(_)) => Ordering::Greater,
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    ca.len().cmp(&cb.len())
}

/// Sorts reports into canonical order.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| a.sort_key_cmp(b));
}

/// Overall verdict over gating (non-probe) reports: 0 all pass, 2 any fail,
/// 3 exhausted without failures.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    let gating = reports.iter().filter(|r| !r.probe);
    let mut exhausted = false;
    for r in gating {
        match r.status {
            Status::Fail => return 2,
            Status::Exhausted => exhausted = true,
            Status::Pass => {}
        }
    }
    if exhausted {
        3
    } else {
        0
    }
}
