use netslope_core::presentation::{serialize, Presentation};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// The presentation a run used, embedded by value so the report can be
/// replayed without the original file.
#[derive(Clone, Debug, Serialize)]
pub struct InputRecord {
    /// `sha256:` of the canonical text below.
    pub digest: String,
    pub presentation: String,
}

impl InputRecord {
    pub fn new(pres: &Presentation) -> InputRecord {
        let text = serialize(pres);
        InputRecord { digest: digest(&text), presentation: text }
    }
}

pub fn digest(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: &'static str,
    pub input: Option<InputRecord>,
    pub params: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}
