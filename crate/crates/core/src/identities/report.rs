use std::io::Write;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};
use crate::qseries::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
        }
    }
}

/// A power of `q`, or a monomial `a^i b^j c^k d^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    Single(usize),
    Multi([u32; 4]),
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Single(n) => n.serialize(s),
            Exponent::Multi(e) => e.serialize(s),
        }
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exponent::Single(n) => write!(f, "{n}"),
            Exponent::Multi([a, b, c, d]) => write!(f, "{a};{b};{c};{d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: Exponent,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    /// Wall time in milliseconds.
    pub ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Drops the timing so output depends only on the inputs.
    pub fn without_timing(mut self) -> Self {
        self.ms = None;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Writes reports as CSV with columns
/// `id,order,status,exponent,lhs,rhs,ms,error`.
pub fn write_csv<W: Write>(out: W, reports: &[VerificationReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| invalid("csv output", e.to_string());
    w.write_record(["id", "order", "status", "exponent", "lhs", "rhs", "ms", "error"]).map_err(io)?;
    for r in reports {
        let (e, l, rh) = match &r.first_mismatch {
            Some(m) => (m.exponent.to_string(), m.lhs.to_string(), m.rhs.to_string()),
            None => Default::default(),
        };
        w.write_record([
            r.id.clone(),
            r.order.to_string(),
            r.status.as_str().to_string(),
            e,
            l,
            rh,
            r.ms.map(|m| m.to_string()).unwrap_or_default(),
            r.error.clone().unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| invalid("csv output", e.to_string()))
}
