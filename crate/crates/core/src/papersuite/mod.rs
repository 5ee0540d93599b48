//! Explicit instances of the multiplicity two and three structures, their
//! links and complexes, and a runner that checks every claimed identity.

mod checks;
mod constructors;
mod harness;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::field::FieldSpec;

pub use constructors::{
    case_checks, final_theorem_chain, lemma33_family, lemma35_ideal, lemma35_primary, prop34_type,
    stillman_example, triple_structure_example, CaseCheck, LinkChain, PdClaim, Prop34Type,
};
pub use harness::{link_bound, random_height_two, LinkBoundCase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

/// Outcome of [`verify_all`], sorted by check id. The runtime is not part of
/// the serialized form, so equal inputs serialize to equal bytes.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub field: FieldSpec,
    pub entries: Vec<CheckEntry>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    /// Check ids with their statuses, without details.
    pub fn status_vector(&self) -> Vec<(String, Status)> {
        self.entries.iter().map(|e| (e.check_id.clone(), e.status)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs every check. `seed` only drives random witnesses such as regular
/// sequences; outcomes do not depend on it.
pub fn verify_all(seed: u64, field: FieldSpec) -> CheckReport {
    let start = Instant::now();
    let mut entries: Vec<CheckEntry> = checks::groups()
        .into_par_iter()
        .flat_map_iter(|g| g(field, seed))
        .collect();
    entries.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    for w in entries.windows(2) {
        assert_ne!(w[0].check_id, w[1].check_id, "duplicate check id");
    }
    CheckReport {
        seed,
        field,
        entries,
        runtime: start.elapsed(),
    }
}
