use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use super::Variant;

/// Outcome of one exact identity check; both sides are kept in canonical
/// text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn compare<T: PartialEq + Display>(identity: &str, lhs: &T, rhs: &T) -> Self {
        Self {
            identity: identity.to_string(),
            params: BTreeMap::new(),
            passed: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub(crate) fn new<T: PartialEq + Display>(
        identity: &str,
        ell: i64,
        variant: Variant,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        Self::compare(identity, lhs, rhs)
            .with("l", ell)
            .with("variant", variant.name())
    }

    /// A check that could not be evaluated.
    pub fn error(identity: &str, reason: impl Display) -> Self {
        Self {
            identity: identity.to_string(),
            params: BTreeMap::new(),
            passed: false,
            lhs: format!("error: {reason}"),
            rhs: String::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

/// Checks run for one (polytope, weight, phi) combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartReport {
    pub polytope: String,
    pub weight: String,
    pub phi: String,
    pub checks: Vec<Check>,
}

impl EhrhartReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub polytope: String,
    pub polytope_hash: String,
    pub suite: String,
    pub lmax: i64,
    pub total_checks: usize,
    pub failed_checks: usize,
    pub passed: bool,
    pub reports: Vec<EhrhartReport>,
}

impl SuiteReport {
    pub fn new(polytope: &str, hash: &str, suite: &str, lmax: i64, reports: Vec<EhrhartReport>) -> Self {
        let total_checks = reports.iter().map(|r| r.checks.len()).sum();
        let failed_checks = reports.iter().map(|r| r.failures().count()).sum();
        Self {
            polytope: polytope.to_string(),
            polytope_hash: hash.to_string(),
            suite: suite.to_string(),
            lmax,
            total_checks,
            failed_checks,
            passed: failed_checks == 0,
            reports,
        }
    }
}
