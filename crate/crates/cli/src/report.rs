use serde::Serialize;
use serde_json::Value;

use ialex::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Machine-readable code, prose, and the JSON path of the offending field
/// when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

impl Failure {
    pub fn new(code: impl Into<String>, message: impl Into<String>, path: Option<String>) -> Self {
        Failure { code: code.into(), message: message.into(), path }
    }

    pub fn core(e: Error, path: impl Into<Option<String>>) -> Self {
        Failure { code: e.code().to_string(), message: e.to_string(), path: path.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub kind: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub values: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Failure>,
}

impl Report {
    pub fn error(kind: impl Into<String>, failure: Failure) -> Self {
        Report { kind: kind.into(), status: Status::Error, values: Value::Null, certificates: None, error: Some(failure) }
    }

    /// 0 on pass, 2 when a computational cap was hit, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match (&self.status, &self.error) {
            (Status::Pass, _) => 0,
            (_, Some(f)) if f.code == "degree-cap-exceeded" => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        crate::render::text(self)
    }
}
