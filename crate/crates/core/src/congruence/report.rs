use std::fmt;

use serde::{Deserialize, Serialize};

/// Which proved statement a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "main_theorem")]
    MainTheorem,
    #[serde(rename = "komatsu_liu")]
    KomatsuLiu,
    #[serde(rename = "gessel")]
    Gessel,
    #[serde(rename = "prime_power")]
    PrimePower,
    #[serde(rename = "special_40")]
    Special40,
    #[serde(rename = "special_60")]
    Special60,
    #[serde(rename = "lemma_Xm")]
    LemmaXm,
    #[serde(rename = "lemma_series")]
    LemmaSeries,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::MainTheorem => "main_theorem",
            Self::KomatsuLiu => "komatsu_liu",
            Self::Gessel => "gessel",
            Self::PrimePower => "prime_power",
            Self::Special40 => "special_40",
            Self::Special60 => "special_60",
            Self::LemmaXm => "lemma_Xm",
            Self::LemmaSeries => "lemma_series",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The window was too small to decide (only eventual statements).
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Inconclusive => "inconclusive",
        })
    }
}

/// A failing instance: its parameters and both sides reduced to residues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub theorem_id: TheoremId,
    pub params: String,
    pub instances_checked: usize,
    pub status: Status,
    /// At most [`MAX_WITNESSES`] witnesses.
    pub failures: Vec<Failure>,
    pub failure_count: usize,
}

pub const MAX_WITNESSES: usize = 5;

impl CongruenceReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} ({} instances",
            self.theorem_id, self.params, self.status, self.instances_checked
        )?;
        if self.failure_count > 0 {
            write!(f, ", {} failing", self.failure_count)?;
        }
        write!(f, ")")?;
        for w in &self.failures {
            write!(f, "\n  {}: lhs={} rhs={}", w.params, w.lhs, w.rhs)?;
        }
        Ok(())
    }
}

pub(crate) struct ReportBuilder {
    id: TheoremId,
    params: String,
    checked: usize,
    failures: Vec<Failure>,
    failure_count: usize,
}

impl ReportBuilder {
    pub fn new(id: TheoremId, params: impl Into<String>) -> Self {
        Self {
            id,
            params: params.into(),
            checked: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Failure) {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(witness());
            }
        }
    }

    pub fn finish(self) -> CongruenceReport {
        let status = if self.failure_count == 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        self.finish_with(status)
    }

    pub fn finish_with(self, status: Status) -> CongruenceReport {
        CongruenceReport {
            theorem_id: self.id,
            params: self.params,
            instances_checked: self.checked,
            status,
            failures: self.failures,
            failure_count: self.failure_count,
        }
    }
}
