use std::collections::BTreeMap;

use serde::Serialize;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One JSON document per command run (or per input line for streaming
/// commands). Wall time is reported on stderr so identical runs print
/// identical bytes.
#[derive(Debug, Serialize)]
pub struct RunReport<T: Serialize> {
    pub command: &'static str,
    pub parameters: BTreeMap<&'static str, serde_json::Value>,
    pub version: &'static str,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

impl<T: Serialize> RunReport<T> {
    pub fn new(command: &'static str, result: T) -> Self {
        RunReport {
            command,
            parameters: BTreeMap::new(),
            version: VERSION,
            result,
            verified: None,
        }
    }

    pub fn param(mut self, name: &'static str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(name, value.into());
        self
    }

    pub fn verified(mut self, ok: bool) -> Self {
        self.verified = Some(ok);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}
