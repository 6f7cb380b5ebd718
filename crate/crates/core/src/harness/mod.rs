//! Machine-checked statements about NJ-symmetric rings, evaluated over a
//! corpus of small rings, plus a counterexample searcher.

mod analysis;
mod corpus;
mod report;
mod rules;
mod search;

pub use analysis::{analyze, analyze_with_cap, AnalysisReport, Undecided, ANALYSIS_FORMAT};
pub use corpus::{
    default_corpus, random_entries, Corpus, CorpusEntry, SkippedEntry, CORPUS_ORDER_CAP,
};
pub use report::{
    RingSummary, RuleOutcome, RuleReport, RuleResult, RuleStatus, StatusCounts, REPORT_FORMAT,
};
pub use rules::{catalog, run_rules, Rule, RuleKind, DERIVED_ORDER_CAP};
pub use search::{search_counterexample, Literal, SearchOutcome};

pub use crate::expr::Origin;

use std::sync::OnceLock;

use crate::context::RingContext;
use crate::error::Result;
use crate::properties::{Property, PropertyVerdict};
use crate::ring::FiniteRing;

/// A ring context plus lazily computed verdicts for every predicate.
pub struct Facts<'r> {
    ctx: RingContext<'r>,
    verdicts: Vec<OnceLock<Result<PropertyVerdict>>>,
}

impl<'r> Facts<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        Self::from_context(RingContext::new(ring))
    }

    pub fn from_context(ctx: RingContext<'r>) -> Self {
        Self {
            ctx,
            verdicts: Property::ALL.iter().map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ctx.ring()
    }

    pub fn ctx(&self) -> &RingContext<'r> {
        &self.ctx
    }

    pub fn verdict(&self, p: Property) -> Result<&PropertyVerdict> {
        let slot = &self.verdicts[p as usize];
        slot.get_or_init(|| p.evaluate(&self.ctx))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn holds(&self, p: Property) -> Result<bool> {
        self.verdict(p).map(|v| v.holds)
    }
}
