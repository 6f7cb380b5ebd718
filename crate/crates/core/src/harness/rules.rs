use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{RingSummary, RuleOutcome, RuleReport, RuleResult, RuleStatus};
use super::{Corpus, CorpusEntry, Facts, Origin};
use crate::constructions::{
    constant_diagonal, corner, matrix_ring, matrix_units, quotient, upper_triangular, zmod,
};
use crate::error::{Error, Result};
use crate::invariants::essential_unchecked;
use crate::mask::SubsetMask;
use crate::properties::{
    nj_symmetric_formulations, recheck, weak_symmetric_formulations, Method, Property,
    PropertyVerdict, Witness,
};
use crate::ring::{ElementId, Fingerprint, FiniteRing};

/// Rings derived inside a rule (triangular and constant-diagonal
/// extensions) are only built up to this order.
pub const DERIVED_ORDER_CAP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleKind {
    Implication,
    Equivalence,
    WitnessExhibit,
}

#[derive(Clone, Debug, Serialize)]
pub struct Rule {
    pub id: &'static str,
    pub description: &'static str,
    pub hypothesis: &'static [&'static str],
    pub conclusion: &'static str,
    pub kind: RuleKind,
    /// The statement being checked, in words.
    pub anchor: &'static str,
}

use RuleKind::*;

const CATALOG: [Rule; 27] = [
    Rule {
        id: "R1",
        description: "the three NJ-symmetry formulations (bac, acb, cba) agree",
        hypothesis: &[],
        conclusion: "formulations agree",
        kind: Equivalence,
        anchor: "abc ∈ N implies bac ∈ J iff it implies acb ∈ J iff it implies cba ∈ J",
    },
    Rule {
        id: "R2",
        description: "symmetric rings are NJ-symmetric",
        hypothesis: &["symmetric"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "symmetric rings are NJ-symmetric",
    },
    Rule {
        id: "R3",
        description: "semicommutative rings are NJ-symmetric",
        hypothesis: &["semicommutative"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "semicommutative rings are NJ-symmetric",
    },
    Rule {
        id: "R4",
        description: "weak symmetric rings are NJ-symmetric",
        hypothesis: &["weak_symmetric"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "a weak symmetric ring is NJ-symmetric",
    },
    Rule {
        id: "R5",
        description: "left or right quasi-duo rings are NJ-symmetric",
        hypothesis: &["left_quasi_duo | right_quasi_duo"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "left (right) quasi-duo rings are NJ-symmetric",
    },
    Rule {
        id: "R6",
        description: "abelian J-clean rings are NJ-symmetric",
        hypothesis: &["abelian", "j_clean"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "abelian J-clean rings are NJ-symmetric",
    },
    Rule {
        id: "R7",
        description: "abelian J-quasipolar rings are NJ-symmetric",
        hypothesis: &["abelian", "j_quasipolar"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "abelian J-quasipolar rings are NJ-symmetric",
    },
    Rule {
        id: "R8",
        description: "GWS rings of nilpotency index at most 2 are NJ-symmetric",
        hypothesis: &["gws", "x² = 0 for every nilpotent x"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "GWS rings whose nilpotents square to zero are NJ-symmetric",
    },
    Rule {
        id: "R9",
        description: "NJ-symmetric MELT rings are left quasi-duo",
        hypothesis: &["nj_symmetric", "melt"],
        conclusion: "left_quasi_duo",
        kind: Implication,
        anchor: "an NJ-symmetric MELT ring is left quasi-duo",
    },
    Rule {
        id: "R10",
        description: "in NJ-symmetric rings every non-essential maximal left ideal is two-sided",
        hypothesis: &["nj_symmetric", "M maximal left ideal, not essential"],
        conclusion: "M is a two-sided ideal",
        kind: Implication,
        anchor: "a maximal left ideal of an NJ-symmetric ring that is not essential is an ideal",
    },
    Rule {
        id: "R11",
        description: "NJ-symmetric exchange rings are clean and quasi-duo",
        hypothesis: &["nj_symmetric", "exchange"],
        conclusion: "clean, left_quasi_duo, right_quasi_duo",
        kind: Implication,
        anchor: "an NJ-symmetric exchange ring is clean and quasi-duo",
    },
    Rule {
        id: "R12",
        description: "R/J(R) NJ-symmetric implies R NJ-symmetric",
        hypothesis: &["R/J(R) is NJ-symmetric"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "if R/J(R) is NJ-symmetric then R is NJ-symmetric",
    },
    Rule {
        id: "R13",
        description: "R/I NJ-symmetric for a nil ideal I implies R NJ-symmetric",
        hypothesis: &["I is a nil ideal", "R/I is NJ-symmetric"],
        conclusion: "nj_symmetric",
        kind: Implication,
        anchor: "for a nil ideal I, R is NJ-symmetric when R/I is",
    },
    Rule {
        id: "R14",
        description: "R is NJ-symmetric iff eRe is for every idempotent e ≠ 0",
        hypothesis: &[],
        conclusion: "nj_symmetric(R) = ∧ nj_symmetric(eRe) over idempotents e ≠ 0",
        kind: Equivalence,
        anchor: "R is NJ-symmetric iff eRe is NJ-symmetric for all nonzero idempotents e",
    },
    Rule {
        id: "R15",
        description: "R NJ-symmetric iff T_k(R) NJ-symmetric, k = 2, 3",
        hypothesis: &[],
        conclusion: "nj_symmetric(R) = nj_symmetric(T_k(R))",
        kind: Equivalence,
        anchor: "R is NJ-symmetric iff the upper triangular matrix ring over R is",
    },
    Rule {
        id: "R16",
        description: "R NJ-symmetric iff CD_k(R) NJ-symmetric, k = 2, 3",
        hypothesis: &[],
        conclusion: "nj_symmetric(R) = nj_symmetric(CD_k(R))",
        kind: Equivalence,
        anchor: "R is NJ-symmetric iff the constant-diagonal triangular ring over R is",
    },
    Rule {
        id: "R17",
        description: "a trivial Morita context is NJ-symmetric iff both corner rings are",
        hypothesis: &["ring is a trivial Morita context"],
        conclusion: "nj_symmetric(ring) = nj_symmetric(R1) ∧ nj_symmetric(R2)",
        kind: Equivalence,
        anchor: "a Morita context with zero pairings is NJ-symmetric iff both diagonal rings are",
    },
    Rule {
        id: "R18",
        description: "a formal triangular ring is NJ-symmetric iff both diagonal rings are",
        hypothesis: &["ring is a formal triangular matrix ring"],
        conclusion: "nj_symmetric(ring) = nj_symmetric(R1) ∧ nj_symmetric(R2)",
        kind: Equivalence,
        anchor: "[[R1, M], [0, R2]] is NJ-symmetric iff R1 and R2 are",
    },
    Rule {
        id: "R19",
        description: "a Dorroh extension over a quasi-regular ideal is NJ-symmetric iff its base is",
        hypothesis: &["ring is a Dorroh extension", "every a has a + w + aw = 0 for some w"],
        conclusion: "nj_symmetric(ring) = nj_symmetric(base)",
        kind: Equivalence,
        anchor: "the Dorroh extension I(R; A) is NJ-symmetric iff R is, under quasi-regularity of A",
    },
    Rule {
        id: "R20",
        description: "NJ-symmetric semiperiodic rings have R/J(R) reduced",
        hypothesis: &["nj_symmetric", "semiperiodic"],
        conclusion: "R/J(R) is reduced",
        kind: Implication,
        anchor: "R/J(R) is reduced if R is NJ-symmetric and semiperiodic",
    },
    Rule {
        id: "R21",
        description: "NJ-symmetric semiperiodic rings have R/J(R) commutative",
        hypothesis: &["nj_symmetric", "semiperiodic"],
        conclusion: "R/J(R) is commutative",
        kind: Implication,
        anchor: "R/J(R) is commutative if R is NJ-symmetric and semiperiodic",
    },
    Rule {
        id: "R22",
        description: "the two weak-symmetry formulations (acb, bac) agree",
        hypothesis: &[],
        conclusion: "formulations agree",
        kind: Equivalence,
        anchor: "abc ∈ N implies acb ∈ N iff it implies bac ∈ N",
    },
    Rule {
        id: "R23",
        description: "in NJ-symmetric rings er(1−e) and (1−e)re lie in J for idempotent e",
        hypothesis: &["nj_symmetric"],
        conclusion: "e·r·(1−e) ∈ J and (1−e)·r·e ∈ J",
        kind: Implication,
        anchor: "idempotents of an NJ-symmetric ring are central modulo J",
    },
    Rule {
        id: "R24",
        description: "M₂(ℤ₂) is not NJ-symmetric: a = E11+E21, b = E22, c = E12+E22",
        hypothesis: &["ring is M₂(ℤ₂)"],
        conclusion: "abc = 0 and bac = E22 ∉ J",
        kind: WitnessExhibit,
        anchor: "full matrix rings of size at least 2 are never NJ-symmetric",
    },
    Rule {
        id: "R25",
        description: "M₂(ℤ₃) with x = E12, y = E21+E22: yx² ∈ N and xyx ∉ J",
        hypothesis: &["ring is M₂(ℤ₃)"],
        conclusion: "yx² ∈ N, xyx ∉ J, J = 0",
        kind: WitnessExhibit,
        anchor: "a quotient of an NJ-symmetric ring need not be NJ-symmetric; M₂(ℤ₃) is the witness",
    },
    Rule {
        id: "R26",
        description: "M₂(ℤ₂) is not GWS although every nilpotent squares to zero",
        hypothesis: &["ring is M₂(ℤ₂)"],
        conclusion: "not gws, x² = 0 for x ∈ N",
        kind: WitnessExhibit,
        anchor: "the index-2 hypothesis alone does not make a ring GWS",
    },
    Rule {
        id: "R27",
        description: "every proper corner of M₂(ℤ₂) is NJ-symmetric, M₂(ℤ₂) is not",
        hypothesis: &["ring is M₂(ℤ₂)"],
        conclusion: "eRe NJ-symmetric for e ∉ {0, 1}; R not NJ-symmetric",
        kind: WitnessExhibit,
        anchor: "NJ-symmetry of all proper corners does not lift to the ring",
    },
];

pub fn catalog() -> &'static [Rule] {
    &CATALOG
}

fn pass(note: impl Into<String>) -> RuleStatus {
    RuleStatus::Pass {
        note: Some(note.into()),
    }
}

fn fail(witness: Option<Witness>, detail: impl Into<String>) -> RuleStatus {
    RuleStatus::Fail {
        witness,
        detail: detail.into(),
    }
}

fn from_error(e: Error) -> RuleStatus {
    match e {
        Error::LatticeTruncated { .. } | Error::Size { .. } => RuleStatus::Skipped {
            reason: e.to_string(),
        },
        other => fail(None, other.to_string()),
    }
}

fn implication(f: &Facts<'_>, hyps: &[Property], concls: &[Property]) -> Result<RuleStatus> {
    for &h in hyps {
        if !f.holds(h)? {
            return Ok(RuleStatus::Vacuous);
        }
    }
    for &c in concls {
        let v = f.verdict(c)?;
        if !v.holds {
            return Ok(fail(v.witness.clone(), format!("hypotheses hold but {c} fails")));
        }
    }
    Ok(RuleStatus::Pass { note: None })
}

fn nj(ring: &FiniteRing) -> Result<PropertyVerdict> {
    Property::NjSymmetric.check(ring)
}

fn predicted_order(n: usize, exponent: u32) -> Option<usize> {
    (n as u128)
        .checked_pow(exponent)
        .filter(|&o| o <= DERIVED_ORDER_CAP as u128)
        .map(|o| o as usize)
}

/// `nj(R) = nj(ext_k(R))` for `k = 2, 3`, skipping extensions whose order
/// `|R|^exponent(k)` exceeds the cap.
fn extension_equivalence(
    f: &Facts<'_>,
    label: &str,
    exponent: fn(u32) -> u32,
    build: fn(&FiniteRing, usize) -> Result<FiniteRing>,
) -> Result<RuleStatus> {
    let r = f.ring();
    let base = f.holds(Property::NjSymmetric)?;
    let mut checked = Vec::new();
    for k in 2..=3u32 {
        if predicted_order(r.order(), exponent(k)).is_none() {
            continue;
        }
        let ext = build(r, k as usize)?;
        let v = nj(&ext)?;
        if v.holds != base {
            let detail = format!(
                "nj_symmetric(R) = {base} but nj_symmetric({label}_{k}(R)) = {}",
                v.holds
            );
            let witness = if base { v.witness } else { f.verdict(Property::NjSymmetric)?.witness.clone() };
            return Ok(fail(witness, detail));
        }
        checked.push(format!("k={k}"));
    }
    if checked.is_empty() {
        return Ok(RuleStatus::Skipped {
            reason: format!("{label}_k(R) exceeds order {DERIVED_ORDER_CAP} for k = 2, 3"),
        });
    }
    Ok(pass(format!("both sides {base} at {}", checked.join(", "))))
}

fn component_equivalence(f: &Facts<'_>, left: &FiniteRing, right: &FiniteRing) -> Result<RuleStatus> {
    let whole = f.holds(Property::NjSymmetric)?;
    let (l, r) = (nj(left)?.holds, nj(right)?.holds);
    if whole != (l && r) {
        return Ok(fail(
            f.verdict(Property::NjSymmetric)?.witness.clone(),
            format!("ring {whole}, components {l} and {r}"),
        ));
    }
    Ok(pass(format!("ring {whole}, components {l} and {r}")))
}

fn quotient_by_j(f: &Facts<'_>) -> Result<FiniteRing> {
    quotient(f.ring(), f.ctx().jacobson()).map(|(q, _)| q)
}

/// Fingerprints of the fixed rings used by the witness-exhibit rules.
struct Exhibits {
    m2z2: Fingerprint,
    m2z3: Fingerprint,
}

impl Exhibits {
    fn new() -> Result<Self> {
        Ok(Self {
            m2z2: matrix_ring(&zmod(2)?, 2)?.fingerprint(),
            m2z3: matrix_ring(&zmod(3)?, 2)?.fingerprint(),
        })
    }
}

fn units2(p: usize, entries: &[(usize, usize)]) -> Result<ElementId> {
    matrix_units(&zmod(p)?, 2, entries).ok_or_else(|| Error::Inconsistent("matrix unit".into()))
}

fn exhibit_nj_failure(f: &Facts<'_>, a: ElementId, b: ElementId, c: ElementId) -> Result<Option<String>> {
    let r = f.ring();
    let verdict = PropertyVerdict {
        property: Property::NjSymmetric.name().into(),
        holds: false,
        witness: Some(Witness::new(&["a", "b", "c"], &[a, b, c])),
        elapsed: Default::default(),
        method: Method::Exhaustive,
    };
    if !recheck(r, &verdict)? {
        return Ok(Some(format!("({a}, {b}, {c}) does not recheck from the tables")));
    }
    if f.holds(Property::NjSymmetric)? {
        return Ok(Some("NJ-symmetry scan reports the ring NJ-symmetric".into()));
    }
    Ok(None)
}

fn evaluate(rule: &str, entry: &CorpusEntry, f: &Facts<'_>, ex: &Exhibits) -> Option<RuleStatus> {
    use Property as P;
    let r = f.ring();
    let fp = r.fingerprint();
    let is_m2z2 = fp == ex.m2z2;
    let is_m2z3 = fp == ex.m2z3;
    let applicable = match rule {
        "R17" => matches!(entry.origin, Origin::Morita { .. }),
        "R18" => matches!(entry.origin, Origin::FormalTriangular { .. }),
        "R19" => matches!(entry.origin, Origin::Dorroh { .. }),
        "R24" | "R26" | "R27" => is_m2z2,
        "R25" => is_m2z3,
        _ => true,
    };
    if !applicable {
        return None;
    }
    let result: Result<RuleStatus> = (|| match rule {
        "R1" => {
            let forms = nj_symmetric_formulations(f.ctx());
            let fails: Vec<bool> = forms.iter().map(Option::is_some).collect();
            if fails.iter().all(|&x| x == fails[0]) {
                Ok(pass(if fails[0] { "all three fail" } else { "all three hold" }))
            } else {
                let t = forms.iter().flatten().next().expect("some formulation failed");
                Ok(fail(
                    Some(Witness::new(&["a", "b", "c"], t)),
                    format!("bac/acb/cba failures: {fails:?}"),
                ))
            }
        }
        "R2" => implication(f, &[P::Symmetric], &[P::NjSymmetric]),
        "R3" => implication(f, &[P::Semicommutative], &[P::NjSymmetric]),
        "R4" => implication(f, &[P::WeakSymmetric], &[P::NjSymmetric]),
        "R5" => {
            if !(f.holds(P::LeftQuasiDuo)? || f.holds(P::RightQuasiDuo)?) {
                return Ok(RuleStatus::Vacuous);
            }
            implication(f, &[], &[P::NjSymmetric])
        }
        "R6" => implication(f, &[P::Abelian, P::JClean], &[P::NjSymmetric]),
        "R7" => implication(f, &[P::Abelian, P::JQuasipolar], &[P::NjSymmetric]),
        "R8" => {
            let index_two = f.ctx().nilpotents().iter().all(|x| r.mul(x, x) == r.zero());
            if !index_two {
                return Ok(RuleStatus::Vacuous);
            }
            implication(f, &[P::Gws], &[P::NjSymmetric])
        }
        "R9" => implication(f, &[P::NjSymmetric, P::Melt], &[P::LeftQuasiDuo]),
        "R10" => {
            if !f.holds(P::NjSymmetric)? {
                return Ok(RuleStatus::Vacuous);
            }
            let candidates: Vec<SubsetMask> = f
                .ctx()
                .maximal_left_ideals()?
                .into_iter()
                .filter(|m| !essential_unchecked(r, m))
                .collect();
            if candidates.is_empty() {
                return Ok(RuleStatus::Vacuous);
            }
            for m in &candidates {
                for a in m.iter() {
                    if let Some(x) = r.elements().find(|&x| !m.contains(r.mul(a, x))) {
                        return Ok(fail(
                            Some(Witness::new(&["m", "r"], &[a, x]).with_ideal(m.to_vec())),
                            "non-essential maximal left ideal is not a right ideal",
                        ));
                    }
                }
            }
            Ok(pass(format!("{} non-essential maximal left ideal(s)", candidates.len())))
        }
        "R11" => implication(
            f,
            &[P::NjSymmetric, P::Exchange],
            &[P::Clean, P::LeftQuasiDuo, P::RightQuasiDuo],
        ),
        "R12" => {
            let q = quotient_by_j(f)?;
            if !nj(&q)?.holds {
                return Ok(RuleStatus::Vacuous);
            }
            implication(f, &[], &[P::NjSymmetric])
        }
        "R13" => {
            let nil = f.ctx().nilpotents();
            let lattice = f.ctx().two_sided_ideals();
            if lattice.truncated {
                return Err(Error::LatticeTruncated { cap: f.ctx().cap() });
            }
            let mut used = 0;
            for ideal in lattice.ideals.iter().filter(|i| i.count() > 1 && i.is_subset(nil)) {
                let (q, _) = quotient(r, ideal)?;
                if !nj(&q)?.holds {
                    continue;
                }
                used += 1;
                let v = f.verdict(P::NjSymmetric)?;
                if !v.holds {
                    return Ok(fail(
                        v.witness.clone().map(|w| w.with_ideal(ideal.to_vec())),
                        "R/I is NJ-symmetric for a nil ideal I but R is not",
                    ));
                }
            }
            if used == 0 {
                return Ok(RuleStatus::Vacuous);
            }
            Ok(pass(format!("{used} nonzero nil ideal(s) with R/I NJ-symmetric")))
        }
        "R14" => {
            // e = 1 is among the corners, so the converse is checked too.
            let whole = f.holds(P::NjSymmetric)?;
            let mut count = 0;
            let mut all = true;
            for e in f.ctx().idempotents().iter().filter(|&e| e != r.zero()) {
                let corner_nj = nj(&corner(r, e)?)?.holds;
                if whole && !corner_nj {
                    return Ok(fail(Some(Witness::new(&["e"], &[e])), "corner eRe is not NJ-symmetric"));
                }
                all &= corner_nj;
                count += 1;
            }
            if all != whole {
                return Ok(fail(None, format!("ring {whole} but corners {all}")));
            }
            Ok(pass(format!("ring and {count} corner(s) all {whole}")))
        }
        "R15" => extension_equivalence(f, "T", |k| k * (k + 1) / 2, upper_triangular),
        "R16" => extension_equivalence(f, "CD", |k| k * (k - 1) / 2 + 1, constant_diagonal),
        "R17" => match &entry.origin {
            Origin::Morita { left, right } => component_equivalence(f, left, right),
            _ => unreachable!("filtered by applicability"),
        },
        "R18" => match &entry.origin {
            Origin::FormalTriangular { left, right } => component_equivalence(f, left, right),
            _ => unreachable!("filtered by applicability"),
        },
        "R19" => match &entry.origin {
            Origin::Dorroh { quasi_regular: false, .. } => Ok(RuleStatus::Vacuous),
            Origin::Dorroh { base, .. } => {
                let (whole, b) = (f.holds(P::NjSymmetric)?, nj(base)?.holds);
                if whole != b {
                    Ok(fail(None, format!("extension {whole}, base {b}")))
                } else {
                    Ok(pass(format!("extension and base both {b}")))
                }
            }
            _ => unreachable!("filtered by applicability"),
        },
        "R20" | "R21" => {
            if !(f.holds(P::NjSymmetric)? && f.holds(P::Semiperiodic)?) {
                return Ok(RuleStatus::Vacuous);
            }
            let q = quotient_by_j(f)?;
            let target = if rule == "R20" { P::Reduced } else { P::Commutative };
            let v = target.check(&q)?;
            if v.holds {
                Ok(RuleStatus::Pass { note: None })
            } else {
                Ok(fail(v.witness, format!("R/J(R) is not {target} (indices in R/J)")))
            }
        }
        "R22" => {
            let [acb, bac] = weak_symmetric_formulations(f.ctx());
            if acb.is_some() == bac.is_some() {
                Ok(pass(if acb.is_some() { "both fail" } else { "both hold" }))
            } else {
                let t = acb.or(bac).expect("one formulation failed");
                Ok(fail(
                    Some(Witness::new(&["a", "b", "c"], &t)),
                    format!("acb fails: {}, bac fails: {}", acb.is_some(), bac.is_some()),
                ))
            }
        }
        "R23" => {
            if !f.holds(P::NjSymmetric)? {
                return Ok(RuleStatus::Vacuous);
            }
            let j = f.ctx().jacobson();
            let one = r.one();
            for e in f.ctx().idempotents().iter() {
                let ce = r.sub(one, e);
                if let Some(x) = r
                    .elements()
                    .find(|&x| !j.contains(r.mul3(e, x, ce)) || !j.contains(r.mul3(ce, x, e)))
                {
                    return Ok(fail(
                        Some(Witness::new(&["e", "r"], &[e, x])),
                        "er(1-e) or (1-e)re lies outside J",
                    ));
                }
            }
            Ok(RuleStatus::Pass { note: None })
        }
        "R24" => {
            let a = units2(2, &[(1, 1), (2, 1)])?;
            let b = units2(2, &[(2, 2)])?;
            let c = units2(2, &[(1, 2), (2, 2)])?;
            let bac = r.mul3(b, a, c);
            if r.mul3(a, b, c) != r.zero() || bac != b || f.ctx().jacobson().contains(bac) {
                return Ok(fail(None, "abc = 0, bac = E22 ∉ J does not reproduce"));
            }
            match exhibit_nj_failure(f, a, b, c)? {
                Some(why) => Ok(fail(None, why)),
                None => Ok(pass(format!("a={a}, b={b}, c={c}: abc=0, bac={bac} ∉ J"))),
            }
        }
        "R25" => {
            let x = units2(3, &[(1, 2)])?;
            let y = units2(3, &[(2, 1), (2, 2)])?;
            let yxx = r.mul3(y, x, x);
            let xyx = r.mul3(x, y, x);
            let j = f.ctx().jacobson();
            if !f.ctx().nilpotents().contains(yxx) || j.contains(xyx) || j.count() != 1 {
                return Ok(fail(None, "yx² ∈ N, xyx ∉ J, J = 0 does not reproduce"));
            }
            match exhibit_nj_failure(f, y, x, x)? {
                Some(why) => Ok(fail(None, why)),
                None => Ok(pass(format!("x={x}, y={y}: yx²={yxx} ∈ N, xyx={xyx} ∉ J = 0"))),
            }
        }
        "R26" => {
            let v = f.verdict(P::Gws)?;
            if v.holds || !recheck(r, v)? {
                return Ok(fail(None, "GWS failure does not reproduce"));
            }
            if let Some(x) = f.ctx().nilpotents().iter().find(|&x| r.mul(x, x) != r.zero()) {
                return Ok(fail(Some(Witness::new(&["x"], &[x])), "nilpotent with x² ≠ 0"));
            }
            let w = v.witness.as_ref().expect("failing verdict has a witness");
            Ok(pass(format!("not GWS at {w}; all nilpotents square to zero")))
        }
        "R27" => {
            let v = f.verdict(P::NjSymmetric)?;
            if v.holds || !recheck(r, v)? {
                return Ok(fail(None, "M₂(ℤ₂) NJ failure does not reproduce"));
            }
            let mut count = 0;
            for e in f.ctx().idempotents().iter().filter(|&e| e != r.zero() && e != r.one()) {
                let c = corner(r, e)?;
                if !nj(&c)?.holds || !P::Domain.check(&c)?.holds {
                    return Ok(fail(Some(Witness::new(&["e"], &[e])), "proper corner is not an NJ-symmetric domain"));
                }
                count += 1;
            }
            Ok(pass(format!("{count} proper corners, each a domain and NJ-symmetric")))
        }
        other => Err(Error::UnknownRule(other.into())),
    })();
    Some(result.unwrap_or_else(from_error))
}

/// Runs the selected rules (all when `selected` is empty) over every corpus
/// ring. Rings are processed in parallel; the report order is canonical.
pub fn run_rules(corpus: &Corpus, selected: &[String]) -> Result<RuleReport> {
    let rules: Vec<&Rule> = if selected.is_empty() {
        CATALOG.iter().collect()
    } else {
        selected
            .iter()
            .map(|id| {
                CATALOG
                    .iter()
                    .find(|r| r.id.eq_ignore_ascii_case(id.trim()))
                    .ok_or_else(|| Error::UnknownRule(id.clone()))
            })
            .collect::<Result<_>>()?
    };
    let exhibits = Exhibits::new()?;
    let per_ring: Vec<Vec<Option<RuleStatus>>> = corpus
        .entries
        .par_iter()
        .map(|entry| {
            let facts = Facts::new(&entry.ring);
            rules
                .iter()
                .map(|rule| evaluate(rule.id, entry, &facts, &exhibits))
                .collect()
        })
        .collect();
    let summaries: Vec<RingSummary> = corpus.entries.iter().map(RingSummary::of).collect();
    let results = rules
        .iter()
        .enumerate()
        .map(|(i, rule)| {
            let outcomes = per_ring
                .iter()
                .zip(&summaries)
                .filter_map(|(statuses, ring)| {
                    statuses[i].clone().map(|status| RuleOutcome {
                        ring: ring.name.clone(),
                        fingerprint: ring.fingerprint.clone(),
                        status,
                    })
                })
                .collect();
            RuleResult::new(rule, outcomes)
        })
        .collect();
    Ok(RuleReport::new(summaries, corpus.skipped.clone(), results))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Corpus;
    use crate::expr::RingExpr;
    use std::path::Path;

    fn corpus_of(exprs: &[&str]) -> Corpus {
        let mut c = Corpus::default();
        let parsed: Vec<RingExpr> = exprs.iter().map(|s| RingExpr::parse(s).unwrap()).collect();
        c.extend_exprs(&parsed, Path::new("."));
        c
    }

    #[test]
    fn catalog_ids_are_sequential() {
        for (i, r) in catalog().iter().enumerate() {
            assert_eq!(r.id, format!("R{}", i + 1));
        }
    }

    #[test]
    fn small_corpus_has_no_failures() {
        let c = corpus_of(&["Z(4)", "M(2, Z(2))", "T(2, Z(2))", "Tri(Z(2), Z(2), reg)", "Dorroh(Z(4), ideal(2))"]);
        let report = run_rules(&c, &[]).unwrap();
        assert!(report.failures().next().is_none(), "{}", report.table());
        let r24 = report.rule("R24").unwrap();
        assert_eq!(r24.verdict, "pass");
        assert_eq!(r24.outcomes.len(), 1);
        assert_eq!(report.rule("R25").unwrap().verdict, "vacuous");
    }

    #[test]
    fn triangular_equivalence_over_z4() {
        let c = corpus_of(&["Z(4)"]);
        let report = run_rules(&c, &["R15".into()]).unwrap();
        match &report.rules[0].outcomes[0].status {
            RuleStatus::Pass { note } => assert_eq!(note.as_deref(), Some("both sides true at k=2")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_rule_is_an_error() {
        assert!(matches!(
            run_rules(&Corpus::default(), &["R99".into()]),
            Err(Error::UnknownRule(_))
        ));
    }
}
