use serde::{Deserialize, Serialize};

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::ring::FiniteRing;

pub const RADICAL_FORMAT: &str = "radical v1";

/// The distinguished element sets of one ring. The nilradicals are absent
/// when the two-sided ideal lattice exceeded its cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRadicalReport", into = "RawRadicalReport")]
pub struct RadicalReport {
    pub order: usize,
    pub units: SubsetMask,
    pub nilpotents: SubsetMask,
    pub idempotents: SubsetMask,
    pub center: SubsetMask,
    pub jacobson: SubsetMask,
    pub lower_nil: Option<SubsetMask>,
    pub upper_nil: Option<SubsetMask>,
}

#[derive(Serialize, Deserialize)]
struct RawRadicalReport {
    format: String,
    order: usize,
    units: Vec<usize>,
    nilpotents: Vec<usize>,
    idempotents: Vec<usize>,
    center: Vec<usize>,
    jacobson: Vec<usize>,
    lower_nil: Option<Vec<usize>>,
    upper_nil: Option<Vec<usize>>,
}

impl From<RadicalReport> for RawRadicalReport {
    fn from(r: RadicalReport) -> Self {
        Self {
            format: RADICAL_FORMAT.into(),
            order: r.order,
            units: r.units.to_vec(),
            nilpotents: r.nilpotents.to_vec(),
            idempotents: r.idempotents.to_vec(),
            center: r.center.to_vec(),
            jacobson: r.jacobson.to_vec(),
            lower_nil: r.lower_nil.map(|m| m.to_vec()),
            upper_nil: r.upper_nil.map(|m| m.to_vec()),
        }
    }
}

impl TryFrom<RawRadicalReport> for RadicalReport {
    type Error = Error;

    fn try_from(raw: RawRadicalReport) -> Result<Self> {
        if raw.format != RADICAL_FORMAT {
            return Err(Error::Format(format!("expected `{RADICAL_FORMAT}`, found `{}`", raw.format)));
        }
        let n = raw.order;
        let mask = |v: Vec<usize>| -> Result<SubsetMask> {
            if let Some(&bad) = v.iter().find(|&&i| i >= n) {
                return Err(Error::Element(bad));
            }
            Ok(SubsetMask::from_indices(n, v))
        };
        Ok(Self {
            order: n,
            units: mask(raw.units)?,
            nilpotents: mask(raw.nilpotents)?,
            idempotents: mask(raw.idempotents)?,
            center: mask(raw.center)?,
            jacobson: mask(raw.jacobson)?,
            lower_nil: raw.lower_nil.map(mask).transpose()?,
            upper_nil: raw.upper_nil.map(mask).transpose()?,
        })
    }
}

impl RadicalReport {
    pub fn from_context(ctx: &RingContext<'_>) -> Self {
        Self {
            order: ctx.ring().order(),
            units: ctx.units().clone(),
            nilpotents: ctx.nilpotents().clone(),
            idempotents: ctx.idempotents().clone(),
            center: ctx.center().clone(),
            jacobson: ctx.jacobson().clone(),
            lower_nil: ctx.lower_nil().ok().cloned(),
            upper_nil: ctx.upper_nil().ok().cloned(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

/// Computes every set in a [`RadicalReport`] with the given lattice cap.
pub fn radical_report(ring: &FiniteRing, cap: usize) -> RadicalReport {
    RadicalReport::from_context(&RingContext::with_cap(ring, cap))
}
