//! Pass/fail bookkeeping shared by every verification suite.

use serde::Serialize;
use std::collections::BTreeMap;

/// At most this many failure witnesses are kept per suite; the counters
/// still see every case.
pub const WITNESS_CAP: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub family: String,
    pub params: String,
    pub cases_total: u64,
    pub cases_failed: u64,
    pub witnesses: Vec<String>,
    /// Suite-specific facts (matrix dimensions, ranks, exact determinants).
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, String>,
}

impl Report {
    pub fn new(
        suite: impl Into<String>,
        family: impl Into<String>,
        params: impl Into<String>,
    ) -> Self {
        Report {
            suite: suite.into(),
            family: family.into(),
            params: params.into(),
            cases_total: 0,
            cases_failed: 0,
            witnesses: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }

    /// Record one case; `witness` is only rendered on failure.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases_total += 1;
        if !ok {
            self.cases_failed += 1;
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(witness());
            }
        }
    }

    /// Fold in cases that were checked elsewhere (e.g. on worker threads).
    pub fn absorb(&mut self, total: u64, failures: Vec<String>) {
        self.cases_total += total;
        self.cases_failed += failures.len() as u64;
        for w in failures {
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(w);
            }
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.cases_total += other.cases_total;
        self.cases_failed += other.cases_failed;
        for w in other.witnesses {
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(w);
            }
        }
        for (k, v) in other.details {
            self.details.insert(k, v);
        }
    }

    pub fn detail(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.details.insert(key.into(), value.into());
    }
}
