//! Decision procedures for ring-class predicates.
//!
//! Each predicate is decided by scanning the defining quantifiers over every
//! element. On failure the verdict carries the lexicographically least
//! counterexample in element-index order, which [`recheck`] can confirm
//! against the raw tables.

mod predicates;
mod recheck;

pub use recheck::recheck;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::ring::{ElementId, FiniteRing};

/// Every predicate the crate decides. The snake-case names are stable
/// identifiers used on the command line and in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Symmetric,
    Semicommutative,
    WeakSymmetric,
    Gws,
    NjSymmetric,
    LeftQuasiDuo,
    RightQuasiDuo,
    Melt,
    Abelian,
    Clean,
    JClean,
    Exchange,
    JQuasipolar,
    Local,
    Regular,
    StronglyRegular,
    Semiperiodic,
    TwoPrimal,
    Reduced,
    Semiprime,
    Domain,
    Commutative,
}

impl Property {
    pub const ALL: [Property; 22] = [
        Property::Symmetric,
        Property::Semicommutative,
        Property::WeakSymmetric,
        Property::Gws,
        Property::NjSymmetric,
        Property::LeftQuasiDuo,
        Property::RightQuasiDuo,
        Property::Melt,
        Property::Abelian,
        Property::Clean,
        Property::JClean,
        Property::Exchange,
        Property::JQuasipolar,
        Property::Local,
        Property::Regular,
        Property::StronglyRegular,
        Property::Semiperiodic,
        Property::TwoPrimal,
        Property::Reduced,
        Property::Semiprime,
        Property::Domain,
        Property::Commutative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Symmetric => "symmetric",
            Property::Semicommutative => "semicommutative",
            Property::WeakSymmetric => "weak_symmetric",
            Property::Gws => "gws",
            Property::NjSymmetric => "nj_symmetric",
            Property::LeftQuasiDuo => "left_quasi_duo",
            Property::RightQuasiDuo => "right_quasi_duo",
            Property::Melt => "melt",
            Property::Abelian => "abelian",
            Property::Clean => "clean",
            Property::JClean => "j_clean",
            Property::Exchange => "exchange",
            Property::JQuasipolar => "j_quasipolar",
            Property::Local => "local",
            Property::Regular => "regular",
            Property::StronglyRegular => "strongly_regular",
            Property::Semiperiodic => "semiperiodic",
            Property::TwoPrimal => "two_primal",
            Property::Reduced => "reduced",
            Property::Semiprime => "semiprime",
            Property::Domain => "domain",
            Property::Commutative => "commutative",
        }
    }

    /// True for predicates that need an ideal lattice and can therefore fail
    /// with [`Error::LatticeTruncated`].
    pub fn needs_lattice(self) -> bool {
        matches!(
            self,
            Property::LeftQuasiDuo | Property::RightQuasiDuo | Property::Melt | Property::TwoPrimal
        )
    }

    /// Decides the predicate on the context's ring.
    pub fn evaluate(self, ctx: &RingContext<'_>) -> Result<PropertyVerdict> {
        let start = Instant::now();
        let (witness, method) = if ctx.ring().is_zero_ring() {
            (None, Method::Reduced)
        } else {
            (predicates::decide(self, ctx)?, Method::Exhaustive)
        };
        Ok(PropertyVerdict {
            property: self.name().to_string(),
            holds: witness.is_none(),
            witness,
            elapsed: start.elapsed(),
            method,
        })
    }

    /// Convenience wrapper building a fresh context.
    pub fn check(self, ring: &FiniteRing) -> Result<PropertyVerdict> {
        self.evaluate(&RingContext::new(ring))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Every quantifier was scanned.
    Exhaustive,
    /// Decided without a scan (the zero ring satisfies everything).
    Reduced,
}

/// A failing assignment: role-labeled elements plus, for ideal-theoretic
/// predicates, the offending ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub elements: Vec<(String, ElementId)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<ElementId>>,
}

impl Witness {
    pub fn new(roles: &[&str], values: &[ElementId]) -> Self {
        Self {
            elements: roles
                .iter()
                .zip(values)
                .map(|(r, &v)| (r.to_string(), v))
                .collect(),
            ideal: None,
        }
    }

    pub fn with_ideal(mut self, ideal: Vec<ElementId>) -> Self {
        self.ideal = Some(ideal);
        self
    }

    pub fn get(&self, role: &str) -> Option<ElementId> {
        self.elements.iter().find(|(r, _)| r == role).map(|&(_, v)| v)
    }

    pub fn values(&self) -> Vec<ElementId> {
        self.elements.iter().map(|&(_, v)| v).collect()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|(r, v)| format!("{r}={v}")).collect();
        write!(f, "{}", parts.join(", "))?;
        if let Some(ideal) = &self.ideal {
            write!(f, " in ideal {ideal:?}")?;
        }
        Ok(())
    }
}

/// Outcome of one predicate on one ring. `elapsed` is informational and is
/// neither serialized nor compared.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
    pub method: Method,
}

impl PartialEq for PropertyVerdict {
    fn eq(&self, other: &Self) -> bool {
        self.property == other.property
            && self.holds == other.holds
            && self.witness == other.witness
            && self.method == other.method
    }
}

impl Eq for PropertyVerdict {}

macro_rules! predicate_fns {
    ($($fn_name:ident => $variant:ident),* $(,)?) => {
        $(
            #[doc = concat!("Decides `", stringify!($variant), "` on a fresh context.")]
            pub fn $fn_name(ring: &FiniteRing) -> Result<PropertyVerdict> {
                Property::$variant.check(ring)
            }
        )*
    };
}

predicate_fns! {
    is_symmetric => Symmetric,
    is_semicommutative => Semicommutative,
    is_weak_symmetric => WeakSymmetric,
    is_gws => Gws,
    is_nj_symmetric => NjSymmetric,
    is_left_quasi_duo => LeftQuasiDuo,
    is_right_quasi_duo => RightQuasiDuo,
    is_melt => Melt,
    is_abelian => Abelian,
    is_clean => Clean,
    is_j_clean => JClean,
    is_exchange => Exchange,
    is_j_quasipolar => JQuasipolar,
    is_local => Local,
    is_regular => Regular,
    is_strongly_regular => StronglyRegular,
    is_semiperiodic => Semiperiodic,
    is_2_primal => TwoPrimal,
    is_reduced => Reduced,
    is_semiprime => Semiprime,
    is_domain => Domain,
    is_commutative => Commutative,
}

/// The three equivalent NJ-symmetric conditions, each as a separate scan:
/// `abc ∈ N ⇒ bac ∈ J`, `⇒ acb ∈ J`, `⇒ cba ∈ J`. Returns each formulation's
/// least counterexample.
pub fn nj_symmetric_formulations(ctx: &RingContext<'_>) -> [Option<[ElementId; 3]>; 3] {
    predicates::nj_formulations(ctx)
}

/// The two weak-symmetry conditions `abc ∈ N ⇒ acb ∈ N` and `⇒ bac ∈ N`.
pub fn weak_symmetric_formulations(ctx: &RingContext<'_>) -> [Option<[ElementId; 3]>; 2] {
    predicates::weak_formulations(ctx)
}

#[cfg(test)]
mod tests;
