//! Cross-checks of the scans against naive definitions computed straight
//! from the operation tables.

use proptest::prelude::*;
use ringlab::constructions::{matrix_ring, zmod};
use ringlab::harness::{default_corpus, random_entries};
use ringlab::invariants::{maximal_left_ideals, DEFAULT_LATTICE_CAP};
use ringlab::properties::{recheck, Property};
use ringlab::{verify_axioms, AxiomReport, FiniteRing};

fn naive_nil(r: &FiniteRing) -> Vec<bool> {
    r.elements()
        .map(|a| {
            let mut p = a;
            for _ in 0..r.order() {
                if p == r.zero() {
                    return true;
                }
                p = r.mul(p, a);
            }
            p == r.zero()
        })
        .collect()
}

/// J as the intersection of the maximal left ideals.
fn j_from_maximal(r: &FiniteRing) -> Vec<bool> {
    let maximal = maximal_left_ideals(r, DEFAULT_LATTICE_CAP).unwrap();
    r.elements().map(|x| maximal.iter().all(|m| m.contains(x))).collect()
}

fn naive_nj(r: &FiniteRing, nil: &[bool], j: &[bool]) -> bool {
    r.elements().all(|a| {
        r.elements().all(|b| {
            r.elements().all(|c| !nil[r.mul(r.mul(a, b), c)] || j[r.mul(r.mul(b, a), c)])
        })
    })
}

fn naive_symmetric(r: &FiniteRing) -> bool {
    r.elements().all(|a| {
        r.elements().all(|b| {
            r.elements()
                .all(|c| r.mul3(a, b, c) != r.zero() || r.mul3(b, a, c) == r.zero())
        })
    })
}

fn naive_semicommutative(r: &FiniteRing) -> bool {
    r.elements().all(|a| {
        r.elements().all(|b| {
            r.mul(a, b) != r.zero() || r.elements().all(|x| r.mul3(a, x, b) == r.zero())
        })
    })
}

#[test]
fn unit_criterion_matches_maximal_ideal_intersection() {
    for e in default_corpus().entries {
        let r = &e.ring;
        let ctx = ringlab::RingContext::new(r);
        let j: Vec<bool> = r.elements().map(|x| ctx.jacobson().contains(x)).collect();
        assert_eq!(j, j_from_maximal(r), "{}", e.name);
    }
}

#[test]
fn nj_symmetry_matches_definition_and_nil_equals_j() {
    for e in default_corpus().entries {
        let r = &e.ring;
        let nil = naive_nil(r);
        let j = j_from_maximal(r);
        let v = Property::NjSymmetric.check(r).unwrap();
        assert_eq!(v.holds, nil == j, "N = J criterion on {}", e.name);
        if r.order() <= 64 {
            assert_eq!(v.holds, naive_nj(r, &nil, &j), "definition on {}", e.name);
        }
    }
}

#[test]
fn symmetry_family_matches_definition() {
    for e in default_corpus().entries.iter().filter(|e| e.ring.order() <= 32) {
        let r = &e.ring;
        assert_eq!(Property::Symmetric.check(r).unwrap().holds, naive_symmetric(r), "{}", e.name);
        assert_eq!(
            Property::Semicommutative.check(r).unwrap().holds,
            naive_semicommutative(r),
            "{}",
            e.name
        );
    }
}

#[test]
fn every_corpus_verdict_rechecks() {
    for e in default_corpus().entries {
        for p in Property::ALL {
            let v = p.check(&e.ring).unwrap();
            assert!(recheck(&e.ring, &v).unwrap(), "{p} on {}", e.name);
        }
    }
}

#[test]
fn corpus_rings_are_rings() {
    for e in default_corpus().entries {
        assert_eq!(verify_axioms(&e.ring), AxiomReport::Ok, "{}", e.name);
    }
}

#[test]
fn m2z3_is_fast_enough_for_a_triple_scan() {
    let m = matrix_ring(&zmod(3).unwrap(), 2).unwrap();
    assert_eq!(m.order(), 81);
    assert!(!Property::NjSymmetric.check(&m).unwrap().holds);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_compositions_are_rings_with_rechecked_verdicts(seed in any::<u64>()) {
        for e in random_entries(seed, 2) {
            prop_assert_eq!(verify_axioms(&e.ring), AxiomReport::Ok);
            let nj = Property::NjSymmetric.check(&e.ring).unwrap();
            prop_assert!(recheck(&e.ring, &nj).unwrap());
            prop_assert_eq!(nj.holds, naive_nil(&e.ring) == j_from_maximal(&e.ring));
            for p in [Property::WeakSymmetric, Property::Semicommutative, Property::Abelian] {
                let v = p.check(&e.ring).unwrap();
                prop_assert!(recheck(&e.ring, &v).unwrap());
            }
            // Implications that hold for every ring.
            let sym = Property::Symmetric.check(&e.ring).unwrap().holds;
            let semi = Property::Semicommutative.check(&e.ring).unwrap().holds;
            prop_assert!(!sym || semi);
            prop_assert!(!semi || nj.holds);
        }
    }
}
