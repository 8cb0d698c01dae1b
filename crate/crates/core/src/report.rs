//! Check reporting: per-item pass/fail records and the JSON report envelope.

use serde::Serialize;
use std::collections::BTreeMap;
use std::panic::AssertUnwindSafe;
use std::time::Instant;

pub const TOOL: &str = "tyv";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Normalization tag recorded in every report and in the constant cache key:
/// Bourbaki numbering, short roots of squared length 2, η-symmetric rescaling
/// by √(d_α).
pub const NORMALIZATION: &str = "bourbaki-short2-eta-sqrt";

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckItem {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub millis: u128,
    pub detail: String,
}

/// Run one check; `f` returns `(ok, detail)`.  Panics (e.g. an exceeded index
/// budget) are converted to `Status::Error`.
pub fn run_item<F>(id: &str, anchor: &str, f: F) -> CheckItem
where
    F: FnOnce() -> (bool, String),
{
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(AssertUnwindSafe(f));
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok((true, detail)) => CheckItem {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Pass,
            millis,
            detail,
        },
        Ok((false, detail)) => CheckItem {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Fail,
            millis,
            detail,
        },
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            CheckItem {
                id: id.to_string(),
                anchor: anchor.to_string(),
                status: Status::Error,
                millis,
                detail: msg,
            }
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckReport {
    pub tool: String,
    pub version: String,
    pub suite: String,
    pub lie_type: String,
    pub params: BTreeMap<String, String>,
    pub normalization: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(suite: &str, lie_type: &str, params: BTreeMap<String, String>) -> Self {
        CheckReport {
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            suite: suite.to_string(),
            lie_type: lie_type.to_string(),
            params,
            normalization: NORMALIZATION.to_string(),
            items: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.status == Status::Pass)
    }

    pub fn any_error(&self) -> bool {
        self.items.iter().any(|i| i.status == Status::Error)
    }

    /// 0 all pass, 1 at least one fail, 2 usage/internal error.
    pub fn exit_code(&self) -> i32 {
        if self.any_error() {
            2
        } else if self.all_pass() {
            0
        } else {
            1
        }
    }
}

/// Mutation hook for negative-control runs: relation `id` gets its marked
/// coefficient replaced by `value`.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub id: String,
    pub value: crate::scalar::Scalar,
}

impl Mutation {
    /// Parse `ID:DELTA` with an integer or `p/q` rational delta.
    pub fn parse(s: &str) -> Result<Self, String> {
        let (id, delta) = s
            .split_once(':')
            .ok_or_else(|| format!("mutation {s:?} is not ID:DELTA"))?;
        let value = if let Some((p, q)) = delta.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|e| format!("bad delta: {e}"))?;
            let q: i64 = q.trim().parse().map_err(|e| format!("bad delta: {e}"))?;
            crate::scalar::Scalar::from_ratio(p, q)
        } else {
            let v: i64 = delta.trim().parse().map_err(|e| format!("bad delta: {e}"))?;
            crate::scalar::Scalar::from_int(v)
        };
        Ok(Mutation {
            id: id.trim().to_string(),
            value,
        })
    }

    pub fn applies(mutation: Option<&Mutation>, id: &str) -> Option<crate::scalar::Scalar> {
        mutation.and_then(|m| if m.id == id { Some(m.value.clone()) } else { None })
    }
}
