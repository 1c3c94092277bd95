//! Structured verification results.
//!
//! Every check is one [`CheckRecord`]: an identifier, the parameters it ran
//! with, a residual, the tolerance it was judged against and a status.
//! Reports sort their records by `(check_id, params)`, so identical inputs
//! serialize to identical bytes regardless of evaluation order.

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::scalar::fmt_sig17;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
}

impl Params {
    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }
    pub fn m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }
    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }
    pub fn zeta(mut self, zeta: impl Into<String>) -> Self {
        self.zeta = Some(zeta.into());
        self
    }
    pub fn z(mut self, z: impl Into<String>) -> Self {
        self.z = Some(z.into());
        self
    }
    pub fn variant(mut self, v: impl Into<String>) -> Self {
        self.variant = Some(v.into());
        self
    }
    pub fn mode(mut self, mode: impl Into<String>) -> Self {
        self.mode = Some(mode.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub params: Params,
    #[serde(serialize_with = "ser_f64")]
    pub residual: f64,
    #[serde(skip_serializing_if = "Vec::is_empty", serialize_with = "ser_f64_seq")]
    pub residuals: Vec<f64>,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    pub pass: bool,
    pub status: Status,
    pub note: String,
}

impl CheckRecord {
    /// Float judgement: passes when `residual ≤ tolerance`.
    pub fn measured(check_id: &str, params: Params, residual: f64, tolerance: f64) -> Self {
        let ok = residual.is_finite() && residual <= tolerance;
        Self::with_status(check_id, params, residual, tolerance, ok)
    }

    /// Exact judgement: passes only on an exact zero. `magnitude` is the
    /// binary64 size of the defect, for reporting.
    pub fn exact(check_id: &str, params: Params, is_zero: bool, magnitude: f64) -> Self {
        Self::with_status(check_id, params, magnitude, 0.0, is_zero)
    }

    /// Boolean judgement with an explicit residual.
    pub fn with_status(
        check_id: &str,
        params: Params,
        residual: f64,
        tolerance: f64,
        pass: bool,
    ) -> Self {
        CheckRecord {
            check_id: check_id.to_string(),
            params,
            residual,
            residuals: Vec::new(),
            tolerance,
            pass,
            status: if pass { Status::Pass } else { Status::Fail },
            note: String::new(),
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn residuals(mut self, r: Vec<f64>) -> Self {
        self.residuals = r;
        self
    }

    pub fn inconclusive(mut self) -> Self {
        self.status = Status::Inconclusive;
        self.pass = false;
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub config: serde_json::Value,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(config: serde_json::Value, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| {
            a.check_id
                .cmp(&b.check_id)
                .then_with(|| a.params.cmp(&b.params))
        });
        let summary = Summary {
            total: checks.len(),
            passed: checks.iter().filter(|c| c.status == Status::Pass).count(),
            failed: checks.iter().filter(|c| c.status == Status::Fail).count(),
            inconclusive: checks
                .iter()
                .filter(|c| c.status == Status::Inconclusive)
                .count(),
        };
        VerificationReport {
            version: REPORT_VERSION.to_string(),
            config,
            checks,
            summary,
        }
    }

    /// `true` when no check failed (inconclusive rows do not count).
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.is_fail())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// JSON number with 17 significant digits, or `null` when not finite.
pub fn json_number(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() {
        fmt_sig17(x)
    } else {
        "null".to_string()
    };
    RawValue::from_string(text).expect("valid JSON number")
}

fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    json_number(*x).serialize(s)
}

fn ser_f64_seq<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&json_number(*x))?;
    }
    seq.end()
}
