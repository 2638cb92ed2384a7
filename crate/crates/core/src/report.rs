use serde::Serialize;
use serde_json::Value;

/// Maximum number of failure witnesses kept per check.
pub const MAX_WITNESSES: usize = 5;

/// Outcome of a sampled property check.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub samples: usize,
    pub failures: usize,
    pub skipped: usize,
    pub witnesses: Vec<Value>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport { check: check.into(), ..Default::default() }
    }

    pub fn pass(&mut self) {
        self.samples += 1;
    }

    pub fn fail(&mut self, witness: Value) {
        self.samples += 1;
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    /// Records a pass or a failure depending on `ok`.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        if ok {
            self.pass();
        } else {
            self.fail(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.samples += other.samples;
        self.failures += other.failures;
        self.skipped += other.skipped;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }
}
