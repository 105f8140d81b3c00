use serde_json::{json, Value};

/// Outcome of one command. Both renderings are byte-deterministic: the text
/// form is built from fixed-order lines and JSON objects keep sorted keys.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub verdict: String,
    /// False when the command ran but the answer is negative in the sense
    /// of a check (an invalid module, a failing self-test).
    pub ok: bool,
    pub lines: Vec<String>,
    pub payload: Value,
}

impl Report {
    pub fn new(command: &str, verdict: impl Into<String>) -> Self {
        Report {
            command: command.to_string(),
            verdict: verdict.into(),
            ok: true,
            lines: Vec::new(),
            payload: json!({}),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.verdict);
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }

    pub fn json(&self) -> String {
        let v = json!({
            "command": self.command,
            "verdict": self.verdict,
            "ok": self.ok,
            "payload": self.payload,
        });
        serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
    }
}
