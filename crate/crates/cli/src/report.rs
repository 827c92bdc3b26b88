use serde::Serialize;
use serde_json::Value;
use superstein::homology::Status;

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub name: String,
    pub value: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    fn from_status(name: String, status: Status) -> Self {
        let (verdict, detail) = match status {
            Status::Pass => ("pass", None),
            Status::Fail(w) => ("fail", Some(w)),
            Status::Skipped(r) => ("skipped", Some(r)),
        };
        Verdict { name, verdict, detail }
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == "fail"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Entry>,
    pub results: Vec<Entry>,
    pub verdicts: Vec<Verdict>,
    pub runtime_ms: u64,
    pub version: String,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            results: Vec::new(),
            verdicts: Vec::new(),
            runtime_ms: 0,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn input(&mut self, name: impl Into<String>, value: impl Into<Value>) {
        self.inputs.push(Entry { name: name.into(), value: value.into() });
    }

    pub fn result(&mut self, name: impl Into<String>, value: impl Into<Value>) {
        self.results.push(Entry { name: name.into(), value: value.into() });
    }

    pub fn status(&mut self, name: impl Into<String>, status: Status) {
        self.verdicts.push(Verdict::from_status(name.into(), status));
    }

    /// Pass if `ok`, otherwise fail with the given witness.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let status = if ok { Status::Pass } else { Status::Fail(witness()) };
        self.status(name, status);
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.status(name, Status::Skipped(reason.into()));
    }

    pub fn has_failure(&self) -> bool {
        self.verdicts.iter().any(Verdict::is_fail)
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failure())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for e in self.inputs.iter().chain(&self.results) {
            out.push_str(&format!("{}: {}\n", e.name, render(&e.value)));
        }
        for v in &self.verdicts {
            match &v.detail {
                Some(d) => out.push_str(&format!("[{}] {}: {}\n", v.verdict, v.name, d)),
                None => out.push_str(&format!("[{}] {}\n", v.verdict, v.name)),
            }
        }
        out.push_str(&format!("runtime_ms: {}\nversion: {}\n", self.runtime_ms, self.version));
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
