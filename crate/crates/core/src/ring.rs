//! Finite unital rings as explicit operation tables.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Index of an element inside one specific [`FiniteRing`].
pub type ElementId = usize;

/// Compiled-in default for [`max_order`].
pub const DEFAULT_MAX_ORDER: usize = 4096;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

/// Largest ring order any construction will produce.
pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Process-wide override of [`max_order`]. Intended for the CLI's
/// `--max-order` flag; library callers normally leave it alone.
pub fn set_max_order(n: usize) {
    MAX_ORDER.store(n.max(1), Ordering::Relaxed);
}

/// Fails with a size error when `requested` exceeds [`max_order`].
pub fn check_order(requested: u128) -> Result<usize> {
    let max = max_order();
    if requested == 0 || requested > max as u128 {
        return Err(Error::Size { requested, max });
    }
    Ok(requested as usize)
}

/// A finite associative ring with identity, stored as dense `n × n` tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: ElementId,
    one: ElementId,
    labels: Option<Vec<String>>,
    name: String,
}

impl FiniteRing {
    /// Builds a ring from row-major tables. Only the table shape and index
    /// ranges are checked here; the ring axioms are the job of
    /// [`verify_axioms`].
    pub fn from_tables(
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: ElementId,
        one: ElementId,
        name: impl Into<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::Structure("order must be positive".into()));
        }
        check_order(order as u128)?;
        let cells = order * order;
        if add.len() != cells || mul.len() != cells {
            return Err(Error::Structure(format!(
                "expected {cells} entries per table, got add={} mul={}",
                add.len(),
                mul.len()
            )));
        }
        if let Some(bad) = add.iter().chain(&mul).find(|&&v| v as usize >= order) {
            return Err(Error::Structure(format!("entry {bad} out of range 0..{order}")));
        }
        if zero >= order || one >= order {
            return Err(Error::Structure("zero/one out of range".into()));
        }
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] as usize == zero)
                    .unwrap_or(zero) as u32
            })
            .collect();
        Ok(Self {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            labels: None,
            name: name.into(),
        })
    }

    /// Builds tables from closures over element indices.
    pub fn from_fns(
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: ElementId,
        one: ElementId,
        name: impl Into<String>,
    ) -> Result<Self> {
        check_order(order as u128)?;
        let mut at = Vec::with_capacity(order * order);
        let mut mt = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                at.push(add(a, b) as u32);
                mt.push(mul(a, b) as u32);
            }
        }
        Self::from_tables(order, at, mt, zero, one, name)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Human-readable label, falling back to the index.
    pub fn label(&self, a: ElementId) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn find_label(&self, label: &str) -> Option<ElementId> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: ElementId, b: ElementId, c: ElementId) -> ElementId {
        self.mul(self.mul(a, b), c)
    }

    /// `a^k` with `a^0 = 1`.
    pub fn power(&self, a: ElementId, k: u64) -> ElementId {
        let mut result = self.one;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// `k · a` (repeated addition).
    pub fn scale(&self, k: u64, a: ElementId) -> ElementId {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    /// Same ring with the multiplication reversed.
    pub fn opposite(&self) -> FiniteRing {
        let n = self.order;
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul[b * n + a];
            }
        }
        FiniteRing {
            order: n,
            add: self.add.clone(),
            mul,
            neg: self.neg.clone(),
            zero: self.zero,
            one: self.one,
            labels: self.labels.clone(),
            name: format!("Op({})", self.name),
        }
    }

    /// True when both rings have identical tables and distinguished elements.
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }

    /// Checks that `map` carries `self` onto `other` table-for-table, i.e.
    /// that it is a bijective relabeling preserving 0, 1, + and ·.
    pub fn is_relabeling_of(&self, other: &FiniteRing, map: &[ElementId]) -> bool {
        if self.order != other.order || map.len() != self.order {
            return false;
        }
        let mut seen = vec![false; self.order];
        for &m in map {
            if m >= other.order || std::mem::replace(&mut seen[m], true) {
                return false;
            }
        }
        map[self.zero] == other.zero
            && map[self.one] == other.one
            && self.elements().all(|a| {
                self.elements().all(|b| {
                    map[self.add(a, b)] == other.add(map[a], map[b])
                        && map[self.mul(a, b)] == other.mul(map[a], map[b])
                })
            })
    }

    /// 64-bit digest of the tables. Deterministic across runs and platforms;
    /// names and labels do not contribute.
    pub fn fingerprint(&self) -> Fingerprint {
        let mut h = Sha256::new();
        h.update(b"ring v1");
        for v in [self.order, self.zero, self.one] {
            h.update((v as u64).to_le_bytes());
        }
        for v in self.add.iter().chain(&self.mul) {
            h.update(v.to_le_bytes());
        }
        let digest = h.finalize();
        let mut bytes = [0u8; 8];
        bytes.copy_from_slice(&digest[..8]);
        Fingerprint(u64::from_be_bytes(bytes))
    }

    /// Serializes to the `ring v1` text record.
    pub fn to_text(&self) -> String {
        let n = self.order;
        let mut out = format!(
            "ring v1 {} {} {} \"{}\"\n",
            n,
            self.zero,
            self.one,
            escape(&self.name)
        );
        for table in [&self.add, &self.mul] {
            for row in table.chunks(n) {
                let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        }
        out
    }

    /// Parses a `ring v1` record. Structure is validated; axioms are not.
    pub fn from_text(text: &str) -> Result<Self> {
        let text = text.trim_start();
        let (header, body) = text.split_once('\n').unwrap_or((text, ""));
        let mut fields = header.splitn(6, ' ');
        if fields.next() != Some("ring") || fields.next() != Some("v1") {
            return Err(Error::Format("expected header `ring v1`".into()));
        }
        let mut num = |what: &str| -> Result<usize> {
            fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Format(format!("bad or missing {what} in ring header")))
        };
        let n = num("order")?;
        let zero = num("zero")?;
        let one = num("one")?;
        let name = match fields.next() {
            Some(q) => unescape_quoted(q.trim_end())?,
            None => String::new(),
        };
        if n == 0 {
            return Err(Error::Structure("order must be positive".into()));
        }
        check_order(n as u128)?;
        let values = parse_indices(body)?;
        if values.len() != 2 * n * n {
            return Err(Error::Structure(format!(
                "expected {} table entries, found {}",
                2 * n * n,
                values.len()
            )));
        }
        let (add, mul) = values.split_at(n * n);
        Self::from_tables(n, add.to_vec(), mul.to_vec(), zero, one, name)
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

pub(crate) fn parse_indices(body: &str) -> Result<Vec<u32>> {
    body.split_ascii_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Format(format!("expected a decimal index, found `{t}`")))
        })
        .collect()
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub(crate) fn unescape_quoted(s: &str) -> Result<String> {
    let inner = s
        .strip_prefix('"')
        .and_then(|s| s.strip_suffix('"'))
        .ok_or_else(|| Error::Format(format!("expected a quoted name, found `{s}`")))?;
    let mut out = String::with_capacity(inner.len());
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next() {
                Some(e) => out.push(e),
                None => return Err(Error::Format("dangling escape in name".into())),
            }
        } else {
            out.push(c);
        }
    }
    Ok(out)
}

/// Table digest; see [`FiniteRing::fingerprint`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(pub u64);

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeIdentity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    /// `0 ≠ 1` unless the ring has a single element.
    DistinctIdentities,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::MultiplicativeIdentity => "multiplicative identity",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
            Axiom::DistinctIdentities => "distinct zero and one",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomReport {
    Ok,
    Violation { axiom: Axiom, witness: Vec<ElementId> },
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, AxiomReport::Ok)
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            AxiomReport::Ok => Ok(()),
            AxiomReport::Violation { axiom, witness } => Err(Error::Axiom {
                axiom: axiom.name().to_string(),
                witness,
            }),
        }
    }
}

/// How the O(n³) axioms are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleCheck {
    Exhaustive,
    /// `count` random triples from a seeded ChaCha stream. Witnesses are the
    /// first failing sample rather than the lexicographic minimum.
    Sampled { count: usize, seed: u64 },
}

/// Exhaustive check of every ring axiom. Witnesses are lexicographically least.
pub fn verify_axioms(ring: &FiniteRing) -> AxiomReport {
    verify_axioms_with(ring, TripleCheck::Exhaustive)
}

pub fn verify_axioms_with(ring: &FiniteRing, triples: TripleCheck) -> AxiomReport {
    let n = ring.order;
    let (zero, one) = (ring.zero, ring.one);
    let violation = |axiom, witness| AxiomReport::Violation { axiom, witness };

    if let Some(a) = (0..n).find(|&a| ring.add(zero, a) != a || ring.add(a, zero) != a) {
        return violation(Axiom::AdditiveIdentity, vec![a]);
    }
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| ring.add(a, b) == zero)) {
        return violation(Axiom::AdditiveInverse, vec![a]);
    }
    for a in 0..n {
        for b in 0..n {
            if ring.add(a, b) != ring.add(b, a) {
                return violation(Axiom::AdditiveCommutativity, vec![a, b]);
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| ring.mul(one, a) != a || ring.mul(a, one) != a) {
        return violation(Axiom::MultiplicativeIdentity, vec![a]);
    }
    if n > 1 && zero == one {
        return violation(Axiom::DistinctIdentities, vec![zero]);
    }

    let check = |a: usize, b: usize, c: usize| -> Option<Axiom> {
        if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)) {
            Some(Axiom::AdditiveAssociativity)
        } else if ring.mul3(a, b, c) != ring.mul(a, ring.mul(b, c)) {
            Some(Axiom::MultiplicativeAssociativity)
        } else if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
            Some(Axiom::LeftDistributivity)
        } else if ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)) {
            Some(Axiom::RightDistributivity)
        } else {
            None
        }
    };

    let found = match triples {
        TripleCheck::Exhaustive => (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                for c in 0..n {
                    if let Some(ax) = check(a, b, c) {
                        return Some((ax, vec![a, b, c]));
                    }
                }
            }
            None
        }),
        TripleCheck::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).find_map(|_| {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                check(a, b, c).map(|ax| (ax, vec![a, b, c]))
            })
        }
    };
    match found {
        Some((axiom, witness)) => violation(axiom, witness),
        None => AxiomReport::Ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, matrix_ring, zmod};
    use proptest::prelude::*;

    #[test]
    fn zmod_six_is_a_ring() {
        assert_eq!(verify_axioms(&zmod(6).unwrap()), AxiomReport::Ok);
    }

    #[test]
    fn broken_identity_is_reported() {
        let r = zmod(4).unwrap();
        let mut mul = r.mul_table().to_vec();
        mul[4 + 1] = 0;
        let broken = FiniteRing::from_tables(4, r.add_table().to_vec(), mul, 0, 1, "bad").unwrap();
        assert_eq!(
            verify_axioms(&broken),
            AxiomReport::Violation {
                axiom: Axiom::MultiplicativeIdentity,
                witness: vec![1]
            }
        );
    }

    #[test]
    fn matrix_ring_over_f2_is_a_ring() {
        assert!(verify_axioms(&matrix_ring(&zmod(2).unwrap(), 2).unwrap()).is_ok());
    }

    #[test]
    fn malformed_tables_are_structural_errors() {
        let err = FiniteRing::from_tables(2, vec![0, 1, 1], vec![0, 0, 0, 1], 0, 1, "x");
        assert!(matches!(err, Err(Error::Structure(_))));
        let err = FiniteRing::from_tables(2, vec![0, 1, 1, 2], vec![0, 0, 0, 1], 0, 1, "x");
        assert!(matches!(err, Err(Error::Structure(_))));
    }

    #[test]
    fn arithmetic_helpers() {
        let z4 = zmod(4).unwrap();
        assert_eq!(z4.power(2, 2), 0);
        assert_eq!(z4.power(3, 0), z4.one());
        let z5 = zmod(5).unwrap();
        assert_eq!(z5.sub(1, 3), 3);
        for k in 0..10 {
            assert_eq!(z5.power(z5.one(), k), z5.one());
        }
    }

    #[test]
    fn fingerprints() {
        let a = zmod(4).unwrap();
        assert_eq!(a.fingerprint(), zmod(4).unwrap().fingerprint());
        assert_ne!(a.fingerprint(), zmod(5).unwrap().fingerprint());
        // Golden value; must not change across runs, platforms or releases.
        let p = direct_product(&zmod(2).unwrap(), &zmod(2).unwrap()).unwrap();
        assert_eq!(p.fingerprint().to_string(), GOLDEN_Z2_X_Z2);
    }

    const GOLDEN_Z2_X_Z2: &str = include_str!("../tests/data/fingerprint_z2xz2.txt");

    #[test]
    fn text_round_trip_is_bit_exact() {
        let r = matrix_ring(&zmod(2).unwrap(), 2).unwrap().with_name("M(2, \"q\\\")");
        let text = r.to_text();
        let back = FiniteRing::from_text(&text).unwrap();
        assert!(back.same_tables(&r));
        assert_eq!(back.name(), r.name());
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn add_commutes_exhaustively_on_small_rings() {
        for r in [zmod(9).unwrap(), matrix_ring(&zmod(2).unwrap(), 2).unwrap()] {
            for a in r.elements() {
                for b in r.elements() {
                    assert_eq!(r.add(a, b), r.add(b, a));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn power_is_a_monoid_homomorphism(a in 0usize..16, i in 0u64..=8, j in 0u64..=8) {
            let r = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
            prop_assert_eq!(r.power(a, i + j), r.mul(r.power(a, i), r.power(a, j)));
        }
    }
}
