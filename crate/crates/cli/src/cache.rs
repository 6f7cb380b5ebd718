//! On-disk cache of analysis reports. Entries are keyed by ring
//! fingerprint, lattice cap and the library version; tables are never
//! stored, only the reports computed from them.

use std::fs;
use std::path::{Path, PathBuf};

use ringlab::harness::{analyze_with_cap, AnalysisReport, ANALYSIS_FORMAT};
use ringlab::{FiniteRing, Result};

/// Bumped whenever the meaning of a cached report changes.
const SCHEMA: u32 = 1;

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    pub fn disabled() -> Self {
        Self { dir: None }
    }

    fn path(dir: &Path, ring: &FiniteRing, cap: usize) -> PathBuf {
        let tag = ANALYSIS_FORMAT.replace(' ', "-");
        dir.join(format!(
            "{}-n{}-cap{cap}-{tag}-s{SCHEMA}-{}.json",
            ring.fingerprint(),
            ring.order(),
            env!("CARGO_PKG_VERSION")
        ))
    }

    /// A previously stored analysis, without computing anything.
    pub fn cached(&self, ring: &FiniteRing, cap: usize) -> Option<AnalysisReport> {
        let dir = self.dir.as_ref()?;
        let text = fs::read_to_string(Self::path(dir, ring, cap)).ok()?;
        let report = AnalysisReport::from_json(&text).ok()?;
        // A fingerprint collision would show up as a mismatched order.
        (report.order == ring.order() && report.fingerprint == ring.fingerprint().to_string())
            .then_some(report)
    }

    fn store(&self, ring: &FiniteRing, cap: usize, report: &AnalysisReport) {
        let Some(dir) = &self.dir else { return };
        // Cache writes are best effort: a read-only directory only costs
        // recomputation next time.
        if fs::create_dir_all(dir).is_err() {
            return;
        }
        let path = Self::path(dir, ring, cap);
        let tmp = path.with_extension("tmp");
        if fs::write(&tmp, report.to_json()).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }

    /// The full analysis of `ring`, from the cache when possible. The
    /// report's name is always the caller's ring name.
    pub fn analysis(&self, ring: &FiniteRing, cap: usize) -> Result<AnalysisReport> {
        let mut report = match self.cached(ring, cap) {
            Some(r) => r,
            None => {
                let r = analyze_with_cap(ring, cap)?;
                self.store(ring, cap, &r);
                r
            }
        };
        report.name = ring.name().to_string();
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringlab::constructions::{matrix_ring, zmod};
    use ringlab::invariants::DEFAULT_LATTICE_CAP;

    #[test]
    fn hit_and_miss_agree() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let ring = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
        let miss = cache.analysis(&ring, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
        let hit = cache.analysis(&ring, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(miss.to_json(), hit.to_json());
        let fresh = Cache::disabled().analysis(&ring, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(fresh.to_json(), hit.to_json());
    }

    #[test]
    fn corrupt_entries_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let ring = zmod(6).unwrap();
        let good = cache.analysis(&ring, DEFAULT_LATTICE_CAP).unwrap();
        for e in fs::read_dir(dir.path()).unwrap() {
            fs::write(e.unwrap().path(), "{ nope").unwrap();
        }
        assert_eq!(cache.analysis(&ring, DEFAULT_LATTICE_CAP).unwrap(), good);
    }
}
