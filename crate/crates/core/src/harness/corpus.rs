use std::collections::HashSet;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{corner, quotient, dorroh, formal_triangular, trivial_morita, zmod, Bimodule};
use crate::context::RingContext;
use crate::error::Result;
use crate::expr::{Built, CorpusFile, IdealSpec, ModuleSpec, Origin, RingExpr};
use crate::ring::{Fingerprint, FiniteRing};

/// Rings built for the harness are kept at or below this order so the
/// cubic scans stay cheap.
pub const CORPUS_ORDER_CAP: usize = 256;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: FiniteRing,
    pub origin: Origin,
}

impl CorpusEntry {
    pub fn plain(ring: FiniteRing) -> Self {
        Self {
            name: ring.name().to_string(),
            ring,
            origin: Origin::Plain,
        }
    }

    fn from_built(b: Built) -> Self {
        Self {
            name: b.ring.name().to_string(),
            ring: b.ring,
            origin: b.origin,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SkippedEntry {
    pub name: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub skipped: Vec<SkippedEntry>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn push(&mut self, name: &str, built: Result<CorpusEntry>) {
        match built {
            Ok(entry) if entry.ring.order() > CORPUS_ORDER_CAP => self.skipped.push(SkippedEntry {
                name: name.to_string(),
                reason: format!("order {} exceeds corpus cap {CORPUS_ORDER_CAP}", entry.ring.order()),
            }),
            Ok(entry) => self.entries.push(entry),
            Err(e) => self.skipped.push(SkippedEntry {
                name: name.to_string(),
                reason: e.to_string(),
            }),
        }
    }

    fn push_expr(&mut self, src: &str) {
        let built = RingExpr::parse(src)
            .and_then(|e| e.eval(Path::new(".")))
            .map(CorpusEntry::from_built);
        self.push(src, built);
    }

    /// Appends every entry of `exprs`, resolving files against `base_dir`.
    pub fn extend_exprs(&mut self, exprs: &[RingExpr], base_dir: &Path) {
        for e in exprs {
            let built = e.eval(base_dir).map(CorpusEntry::from_built);
            self.push(&e.to_string(), built);
        }
    }

    /// Appends corners at every idempotent other than 0 and 1, and the
    /// quotients by J, the upper and the lower nilradical, of every current
    /// entry. Rings whose tables already occur are dropped.
    pub fn add_derived(&mut self) {
        let mut seen: HashSet<Fingerprint> = self.entries.iter().map(|e| e.ring.fingerprint()).collect();
        let mut derived: Vec<(String, Result<FiniteRing>)> = Vec::new();
        for entry in &self.entries {
            let r = &entry.ring;
            let ctx = RingContext::new(r);
            for e in ctx.idempotents().iter() {
                if e != r.zero() && e != r.one() {
                    derived.push((format!("Corner({}, {e})", entry.name), corner(r, e)));
                }
            }
            for spec in [IdealSpec::Jacobson, IdealSpec::Nstar, IdealSpec::Nlower] {
                let ideal = match spec {
                    IdealSpec::Jacobson => Ok(ctx.jacobson()),
                    IdealSpec::Nstar => ctx.upper_nil(),
                    _ => ctx.lower_nil(),
                };
                match ideal {
                    Ok(i) if i.count() > 1 => derived.push((
                        format!("Quo({}, {spec})", entry.name),
                        quotient(r, i).map(|(q, _)| q),
                    )),
                    Ok(_) => {}
                    Err(e) => derived.push((format!("Quo({}, {spec})", entry.name), Err(e))),
                }
            }
        }
        for (name, built) in derived {
            let built = built.map(|ring| CorpusEntry {
                name: name.clone(),
                ring: ring.with_name(name.clone()),
                origin: Origin::Plain,
            });
            match built {
                Ok(entry) if !seen.insert(entry.ring.fingerprint()) => {}
                other => self.push(&name, other),
            }
        }
    }

    /// Appends `count` seeded random compositions of small corpus rings.
    pub fn extend_random(&mut self, seed: u64, count: usize) {
        for entry in random_entries(seed, count) {
            self.entries.push(entry);
        }
    }

    /// Builds a corpus from a corpus file's expressions and random requests.
    pub fn from_file(file: &CorpusFile, base_dir: &Path) -> Self {
        let mut c = Corpus::default();
        c.extend_exprs(&file.exprs, base_dir);
        for &(seed, count) in &file.random {
            c.extend_random(seed, count);
        }
        c
    }
}

const BASE_EXPRESSIONS: &[&str] = &[
    "Z(1)",
    "Z(2)",
    "Z(3)",
    "Z(4)",
    "Z(5)",
    "Z(6)",
    "Z(7)",
    "Z(8)",
    "Z(9)",
    "Z(12)",
    "Z(16)",
    "M(2, Z(2))",
    "M(2, Z(3))",
    "T(2, Z(2))",
    "T(2, Z(3))",
    "T(2, Z(4))",
    "T(3, Z(2))",
    "CD(2, Z(2))",
    "CD(3, Z(2))",
    "CD(2, Z(4))",
    "CD(3, Z(4))",
    "Prod(Z(2), Z(2))",
    "Prod(Z(2), Z(3))",
    "Prod(Z(2), Z(4))",
    "Prod(Z(3), Z(3))",
    "Prod(Z(2), T(2, Z(2)))",
    "Prod(Z(3), M(2, Z(2)))",
    "Dorroh(Z(4), ideal(2))",
    "Dorroh(T(2, Z(2)), ideal(2))",
    "Dorroh(Z(2), reg)",
    "Tri(Z(2), Z(2), reg)",
    "Tri(Z(3), Z(3), reg)",
    "Tri(Z(4), Z(4), ideal(2))",
    "Tri(M(2, Z(2)), Z(2), zero)",
    "Morita(Z(2), Z(2), reg, reg)",
    "Morita(Z(2), Z(3), zero, zero)",
    "Morita(Z(2), M(2, Z(2)), zero, zero)",
    "SkewTrunc(Z(2), id, 3)",
    "SkewTrunc(Z(3), id, 2)",
    "SkewTrunc(Z(4), id, 2)",
    "SkewTrunc(Prod(Z(2), Z(2)), swap, 2)",
    "SkewTrunc(Prod(Z(2), Z(2)), swap, 3)",
    "WSC(0)",
];

/// `2ℤ₄ = {0, 2}` as a `(ℤ₂, ℤ₂)`-bimodule with square-zero multiplication.
fn two_z4_over_z2() -> Result<Bimodule> {
    Bimodule::from_tables(
        2,
        2,
        2,
        vec![0, 1, 1, 0],
        vec![0, 0, 0, 1],
        vec![0, 0, 0, 1],
        Some(vec![0, 0, 0, 0]),
        "2Z(4)",
    )
}

/// `ℤ₂` as a `(ℤ₄, ℤ₂)`-bimodule, `ℤ₄` acting through reduction mod 2.
fn z2_over_z4_z2() -> Result<Bimodule> {
    Bimodule::from_tables(
        2,
        4,
        2,
        vec![0, 1, 1, 0],
        vec![0, 0, 0, 1, 0, 0, 0, 1],
        vec![0, 0, 0, 1],
        None,
        "Z(2) over Z(4)",
    )
}

/// Same module with the sides exchanged: a `(ℤ₂, ℤ₄)`-bimodule.
fn z2_over_z2_z4() -> Result<Bimodule> {
    Bimodule::from_tables(
        2,
        2,
        4,
        vec![0, 1, 1, 0],
        vec![0, 0, 0, 1],
        vec![0, 0, 0, 0, 0, 1, 0, 1],
        None,
        "Z(2) under Z(4)",
    )
}

/// Entries whose bimodules are given by hand-written tables.
fn table_entries() -> Vec<(String, Result<CorpusEntry>)> {
    let z2 = || zmod(2);
    let z4 = || zmod(4);
    let mut out = Vec::new();

    let name = "Dorroh(Z(2), 2Z(4))".to_string();
    let built = (|| {
        let base = z2()?;
        let ext = dorroh(&base, &two_z4_over_z2()?)?;
        Ok(CorpusEntry {
            name: name.clone(),
            ring: ext.ring.with_name(name.clone()),
            origin: Origin::Dorroh {
                base: Box::new(base),
                quasi_regular: ext.quasi_regular,
            },
        })
    })();
    out.push((name, built));

    let name = "Tri(Z(4), Z(2), Z(2) over Z(4))".to_string();
    let built = (|| {
        let (l, r) = (z4()?, z2()?);
        let ring = formal_triangular(&l, &r, &z2_over_z4_z2()?)?.with_name(name.clone());
        Ok(CorpusEntry {
            name: name.clone(),
            ring,
            origin: Origin::FormalTriangular {
                left: Box::new(l),
                right: Box::new(r),
            },
        })
    })();
    out.push((name, built));

    let name = "Morita(Z(4), Z(2), Z(2) over Z(4), Z(2) under Z(4))".to_string();
    let built = (|| {
        let (l, r) = (z4()?, z2()?);
        let ring = trivial_morita(&l, &r, &z2_over_z4_z2()?, &z2_over_z2_z4()?)?
            .with_name(name.clone());
        Ok(CorpusEntry {
            name: name.clone(),
            ring,
            origin: Origin::Morita {
                left: Box::new(l),
                right: Box::new(r),
            },
        })
    })();
    out.push((name, built));
    out
}

/// The fixed corpus: small residue rings, matrix and triangular rings,
/// products, extensions, truncated skew polynomial rings, and then every
/// corner and radical quotient of those (deduplicated by tables).
pub fn default_corpus() -> Corpus {
    let mut c = Corpus::default();
    for src in BASE_EXPRESSIONS {
        c.push_expr(src);
    }
    for (name, built) in table_entries() {
        c.push(&name, built);
    }
    c.add_derived();
    c
}

const RANDOM_POOL: &[&str] = &[
    "Z(2)",
    "Z(3)",
    "Z(4)",
    "Z(6)",
    "Z(8)",
    "T(2, Z(2))",
    "CD(2, Z(2))",
    "M(2, Z(2))",
    "SkewTrunc(Z(2), id, 2)",
];

/// Seeded random compositions (products, Dorroh extensions by ideals,
/// formal triangular and Morita rings) of a small pool. The same seed
/// always yields the same list.
pub fn random_entries(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<RingExpr> = RANDOM_POOL
        .iter()
        .map(|s| RingExpr::parse(s).expect("pool expressions parse"))
        .collect();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 + 50 {
        attempts += 1;
        let a = Box::new(pool.choose(&mut rng).expect("pool is nonempty").clone());
        let b = Box::new(pool.choose(&mut rng).expect("pool is nonempty").clone());
        let expr = match rng.gen_range(0..5) {
            0 => RingExpr::Product(a, b),
            1 => RingExpr::Dorroh(a, ModuleSpec::Ideal(vec![rng.gen_range(0..4)])),
            2 => RingExpr::FormalTriangular(a.clone(), a, ModuleSpec::Regular),
            3 => RingExpr::FormalTriangular(a, b, ModuleSpec::Zero),
            _ => RingExpr::Morita(
                a.clone(),
                a,
                ModuleSpec::Ideal(vec![rng.gen_range(0..4)]),
                ModuleSpec::Zero,
            ),
        };
        // Oversized or ill-typed compositions (an ideal generator outside
        // the ring, mismatched module sides) are simply redrawn.
        if let Ok(b) = expr.eval(Path::new(".")) {
            if b.ring.order() <= CORPUS_ORDER_CAP {
                out.push(CorpusEntry::from_built(b));
            }
        }
    }
    out
}
