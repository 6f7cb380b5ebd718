use serde::{Deserialize, Serialize};

use super::Facts;
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::invariants::{RadicalReport, DEFAULT_LATTICE_CAP};
use crate::properties::{Property, PropertyVerdict};
use crate::ring::FiniteRing;

pub const ANALYSIS_FORMAT: &str = "analysis v1";

/// A predicate that could not be decided, with the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Undecided {
    pub property: String,
    pub reason: String,
}

/// Every invariant and every predicate of one ring.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub format: String,
    pub name: String,
    pub order: usize,
    pub fingerprint: String,
    pub radical: RadicalReport,
    pub verdicts: Vec<PropertyVerdict>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub undecided: Vec<Undecided>,
}

impl AnalysisReport {
    pub fn verdict(&self, p: Property) -> Option<&PropertyVerdict> {
        self.verdicts.iter().find(|v| v.property == p.name())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: Self =
            serde_json::from_str(text).map_err(|e| Error::Format(format!("analysis: {e}")))?;
        if r.format != ANALYSIS_FORMAT {
            return Err(Error::Format(format!(
                "expected `{ANALYSIS_FORMAT}`, found `{}`",
                r.format
            )));
        }
        Ok(r)
    }
}

pub fn analyze(ring: &FiniteRing) -> Result<AnalysisReport> {
    analyze_with_cap(ring, DEFAULT_LATTICE_CAP)
}

/// Truncated lattices leave the affected predicates in `undecided`; any
/// other evaluation error is returned.
pub fn analyze_with_cap(ring: &FiniteRing, cap: usize) -> Result<AnalysisReport> {
    let facts = Facts::from_context(RingContext::with_cap(ring, cap));
    let mut verdicts = Vec::new();
    let mut undecided = Vec::new();
    for p in Property::ALL {
        match facts.verdict(p) {
            Ok(v) => verdicts.push(v.clone()),
            Err(e @ Error::LatticeTruncated { .. }) => undecided.push(Undecided {
                property: p.name().into(),
                reason: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(AnalysisReport {
        format: ANALYSIS_FORMAT.into(),
        name: ring.name().into(),
        order: ring.order(),
        fingerprint: ring.fingerprint().to_string(),
        radical: RadicalReport::from_context(facts.ctx()),
        verdicts,
        undecided,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, zmod};

    #[test]
    fn z4() {
        let r = analyze(&zmod(4).unwrap()).unwrap();
        assert_eq!(r.radical.jacobson.to_vec(), vec![0, 2]);
        assert!(r.verdict(Property::NjSymmetric).unwrap().holds);
        assert!(r.verdict(Property::Symmetric).unwrap().holds);
        assert_eq!(AnalysisReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn m2z2_fails_nj_with_witness() {
        let r = analyze(&matrix_ring(&zmod(2).unwrap(), 2).unwrap()).unwrap();
        let v = r.verdict(Property::NjSymmetric).unwrap();
        assert!(!v.holds && v.witness.is_some());
    }

    #[test]
    fn zero_ring_satisfies_all() {
        let r = analyze(&zmod(1).unwrap()).unwrap();
        assert_eq!(r.verdicts.len(), Property::ALL.len());
        assert!(r.verdicts.iter().all(|v| v.holds));
    }

    #[test]
    fn truncation_is_reported() {
        let r = analyze_with_cap(&matrix_ring(&zmod(2).unwrap(), 2).unwrap(), 2).unwrap();
        assert!(r.undecided.iter().any(|u| u.property == "left_quasi_duo"));
    }
}
