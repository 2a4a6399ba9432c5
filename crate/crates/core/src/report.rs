use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// `true` unless the verdict is an outright failure.
    pub fn is_ok(self) -> bool {
        self != Verdict::Fail
    }
}

/// A pass/fail verdict with the first witness of failure.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Check {
    pub status: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

impl Check {
    pub fn pass() -> Self {
        Check {
            status: Verdict::Pass,
            witness: None,
        }
    }

    pub fn from_witness(witness: Option<Vec<usize>>) -> Self {
        Check {
            status: Verdict::from_bool(witness.is_none()),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Verdict::Pass
    }
}
