//! Run reports: structured verdicts with witnesses, deterministic for a
//! fixed (workspace, seed, command) apart from timings.

use crate::workspace::Settings;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Pass,
    Counterexample,
    Unsupported,
    InputError,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Pass => 0,
            ExitStatus::Counterexample => 2,
            ExitStatus::Unsupported => 3,
            ExitStatus::InputError => 4,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerdictLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusExtension {
    pub name: String,
    pub provenance: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub workspace: String,
    pub settings: Settings,
    pub verdicts: Vec<VerdictLine>,
    pub counterexamples: Vec<String>,
    pub witnesses: serde_json::Value,
    pub corpus_extensions: Vec<CorpusExtension>,
    pub timings_ms: u128,
}

impl RunReport {
    pub fn new(command: &str, workspace: &str, settings: Settings) -> Self {
        RunReport {
            command: command.to_string(),
            workspace: workspace.to_string(),
            settings,
            verdicts: Vec::new(),
            counterexamples: Vec::new(),
            witnesses: serde_json::Value::Null,
            corpus_extensions: Vec::new(),
            timings_ms: 0,
        }
    }

    pub fn verdict(&mut self, name: &str, pass: bool, detail: String) {
        if !pass {
            self.counterexamples.push(format!("{name}: {detail}"));
        }
        self.verdicts.push(VerdictLine { name: name.to_string(), pass, detail });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn status(&self) -> ExitStatus {
        if self.all_pass() {
            ExitStatus::Pass
        } else {
            ExitStatus::Counterexample
        }
    }

    /// Human-readable rendering: one line per verdict plus counterexamples.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "== {} on `{}` (seed {}, depth {}, cap {}) ==\n",
            self.command, self.workspace, self.settings.seed, self.settings.depth,
            self.settings.cap
        ));
        for v in &self.verdicts {
            out.push_str(&format!(
                "  [{}] {:<44} {}\n",
                if v.pass { "PASS" } else { "FAIL" },
                v.name,
                v.detail
            ));
        }
        if !self.corpus_extensions.is_empty() {
            out.push_str("  corpus extensions:\n");
            for e in &self.corpus_extensions {
                out.push_str(&format!(
                    "    {} {:?} ({})\n",
                    e.name, e.dims, e.provenance
                ));
            }
        }
        out.push_str(&format!(
            "  result: {} ({} ms)\n",
            if self.all_pass() { "pass" } else { "counterexamples found" },
            self.timings_ms
        ));
        out
    }

    /// JSON with the volatile timing field zeroed, for determinism checks.
    pub fn canonical_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["timings_ms"] = serde_json::Value::from(0u64);
        v
    }
}
