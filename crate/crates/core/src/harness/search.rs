use rayon::prelude::*;

use super::corpus::CorpusEntry;
use super::Facts;
use crate::error::Result;
use crate::properties::{Property, PropertyVerdict};
use crate::ring::FiniteRing;

/// A hypothesis literal: `p` must hold, or `!p` must fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Literal {
    pub property: Property,
    pub holds: bool,
}

impl std::str::FromStr for Literal {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_prefix('!') {
            Some(rest) => Ok(Self { property: rest.trim().parse()?, holds: false }),
            None => Ok(Self { property: s.parse()?, holds: true }),
        }
    }
}

impl std::fmt::Display for Literal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if !self.holds {
            f.write_str("!")?;
        }
        write!(f, "{}", self.property)
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// The first ring in corpus order meeting every hypothesis and failing
    /// the target; `verdicts` lists the hypotheses and then the target.
    Found {
        name: String,
        ring: FiniteRing,
        verdicts: Vec<PropertyVerdict>,
    },
    Exhausted { examined: usize },
}

/// Looks at the first `budget` entries for a ring satisfying every literal
/// in `hypotheses` on which `target` fails. Rings whose verdicts cannot be
/// decided (lattice cap) are passed over.
pub fn search_counterexample(
    hypotheses: &[Literal],
    target: Property,
    entries: &[CorpusEntry],
    budget: usize,
) -> SearchOutcome {
    let examined = budget.min(entries.len());
    let hit = entries[..examined].par_iter().find_map_first(|entry| {
        let facts = Facts::new(&entry.ring);
        let mut verdicts = Vec::with_capacity(hypotheses.len() + 1);
        for lit in hypotheses {
            let v = facts.verdict(lit.property).ok()?;
            if v.holds != lit.holds {
                return None;
            }
            verdicts.push(v.clone());
        }
        let v = facts.verdict(target).ok()?;
        if v.holds {
            return None;
        }
        verdicts.push(v.clone());
        Some((entry.name.clone(), entry.ring.clone(), verdicts))
    });
    match hit {
        Some((name, ring, verdicts)) => SearchOutcome::Found { name, ring, verdicts },
        None => SearchOutcome::Exhausted { examined },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::default_corpus;
    use crate::properties::recheck;

    fn lits(s: &[&str]) -> Vec<Literal> {
        s.iter().map(|x| x.parse().unwrap()).collect()
    }

    #[test]
    fn finds_triangular_ring_that_is_nj_but_not_symmetric() {
        let c = default_corpus();
        let out = search_counterexample(&lits(&["nj_symmetric"]), Property::Symmetric, &c.entries, usize::MAX);
        match out {
            SearchOutcome::Found { name, ring, verdicts } => {
                assert_eq!(name, "T(2, Z(2))");
                assert!(verdicts.iter().all(|v| recheck(&ring, v).unwrap()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn symmetric_rings_are_never_non_nj() {
        let c = default_corpus();
        let out = search_counterexample(&lits(&["symmetric"]), Property::NjSymmetric, &c.entries, usize::MAX);
        assert!(matches!(out, SearchOutcome::Exhausted { examined } if examined == c.len()));
    }

    #[test]
    fn literal_parsing() {
        let l: Literal = "!melt".parse().unwrap();
        assert_eq!(l, Literal { property: Property::Melt, holds: false });
        assert_eq!(l.to_string(), "!melt");
        assert!("!bogus".parse::<Literal>().is_err());
    }
}
