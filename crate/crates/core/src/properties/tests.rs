use super::*;
use crate::constructions::{
    constant_diagonal, example_weak_symmetric_component, matrix_ring, truncated_skew_poly,
    upper_triangular, zmod, RingHom,
};

fn z(n: usize) -> FiniteRing {
    zmod(n).unwrap()
}

fn m2(p: usize) -> FiniteRing {
    matrix_ring(&z(p), 2).unwrap()
}

fn t2(n: usize) -> FiniteRing {
    upper_triangular(&z(n), 2).unwrap()
}

fn holds(p: Property, r: &FiniteRing) -> bool {
    let v = p.check(r).unwrap();
    assert!(recheck(r, &v).unwrap(), "{p} witness on {} did not recheck", r.name());
    v.holds
}

#[test]
fn names_round_trip() {
    for p in Property::ALL {
        assert_eq!(p.name().parse::<Property>().unwrap(), p);
    }
    assert!(matches!("nj".parse::<Property>(), Err(Error::UnknownProperty(_))));
}

#[test]
fn commutative_rings_satisfy_symmetry_family() {
    for n in [2, 4, 6, 8, 12] {
        let r = z(n);
        for p in [
            Property::Symmetric,
            Property::Semicommutative,
            Property::WeakSymmetric,
            Property::Gws,
            Property::NjSymmetric,
            Property::LeftQuasiDuo,
            Property::RightQuasiDuo,
            Property::Abelian,
            Property::Semiperiodic,
            Property::Commutative,
            Property::Exchange,
            Property::TwoPrimal,
        ] {
            assert!(holds(p, &r), "{p} on Z({n})");
        }
    }
}

#[test]
fn full_matrix_ring_over_z2() {
    let m = m2(2);
    for p in [
        Property::Symmetric,
        Property::Semicommutative,
        Property::WeakSymmetric,
        Property::Gws,
        Property::NjSymmetric,
        Property::LeftQuasiDuo,
        Property::RightQuasiDuo,
        Property::Abelian,
        Property::StronglyRegular,
        Property::TwoPrimal,
    ] {
        assert!(!holds(p, &m), "{p} should fail on M2(Z2)");
    }
    for p in [Property::Melt, Property::Regular, Property::Semiprime, Property::Exchange] {
        assert!(holds(p, &m), "{p} should hold on M2(Z2)");
    }
    holds(Property::Semiperiodic, &m);
}

#[test]
fn nj_witness_is_least_violating_triple() {
    let m = m2(2);
    let v = is_nj_symmetric(&m).unwrap();
    let w = v.witness.unwrap();
    // a = b = E22, c = E21: abc = bac = E21 is nilpotent and J = 0
    assert_eq!(w.values(), vec![1, 1, 2]);
    assert_eq!(m.mul3(1, 1, 2), 2);
    assert_eq!(m.mul(2, 2), m.zero());
}

#[test]
fn triangular_over_z2() {
    let t = t2(2);
    assert!(!holds(Property::Symmetric, &t));
    assert!(!holds(Property::Semicommutative, &t));
    assert!(holds(Property::NjSymmetric, &t));
    assert!(holds(Property::LeftQuasiDuo, &t));
    assert!(holds(Property::RightQuasiDuo, &t));
    assert!(holds(Property::Semiperiodic, &t));
}

#[test]
fn triangular_over_z4() {
    let t = t2(4);
    assert!(holds(Property::Gws, &t));
    assert!(holds(Property::Melt, &t));
}

#[test]
fn clean_and_j_clean() {
    assert!(holds(Property::JClean, &z(4)));
    assert!(holds(Property::Clean, &z(6)));
    assert!(!holds(Property::JClean, &z(6)));
    let v = is_j_clean(&z(6)).unwrap();
    assert_eq!(v.witness.unwrap().values(), vec![2]);
    assert!(!holds(Property::JClean, &z(5)));
    assert!(!holds(Property::JClean, &z(3)));
    assert!(holds(Property::JClean, &z(2)));
}

#[test]
fn quasipolar() {
    assert!(holds(Property::JQuasipolar, &z(4)));
    // Z6 is a product of fields: a + f ∈ {0} needs f = −a idempotent, which
    // fails for a = 1 (f = 5 is not idempotent).
    assert!(!holds(Property::JQuasipolar, &z(6)));
    assert!(holds(Property::JQuasipolar, &z(1)));
}

#[test]
fn local_rings() {
    assert!(holds(Property::Local, &z(4)));
    assert!(!holds(Property::Local, &z(6)));
    let s = truncated_skew_poly(&z(2), &RingHom::identity(&z(2)), 3).unwrap();
    assert!(holds(Property::Local, &s));
}

#[test]
fn regularity() {
    assert!(holds(Property::Regular, &z(6)));
    assert!(holds(Property::StronglyRegular, &z(6)));
    let v = is_regular(&z(4)).unwrap();
    assert_eq!(v.witness.unwrap().values(), vec![2]);
    assert!(!holds(Property::StronglyRegular, &z(4)));
}

#[test]
fn radical_based() {
    assert!(holds(Property::Reduced, &z(6)));
    assert!(holds(Property::TwoPrimal, &z(6)));
    assert!(!holds(Property::Reduced, &z(4)));
    assert!(holds(Property::TwoPrimal, &z(4)));
    assert!(!holds(Property::Semiprime, &z(4)));
    assert!(holds(Property::Domain, &z(5)));
    assert!(!holds(Property::Domain, &z(6)));
}

#[test]
fn abelian_constant_diagonal() {
    let cd = constant_diagonal(&z(2), 2).unwrap();
    assert!(holds(Property::Abelian, &cd));
}

#[test]
fn zero_ring_satisfies_everything() {
    let zero = z(1);
    for p in Property::ALL {
        let v = p.check(&zero).unwrap();
        assert!(v.holds);
        assert_eq!(v.method, Method::Reduced);
    }
}

#[test]
fn weak_symmetric_component_is_recorded() {
    let r = example_weak_symmetric_component(0).unwrap();
    let v = is_weak_symmetric(&r).unwrap();
    assert!(recheck(&r, &v).unwrap());
}

#[test]
fn lattice_cap_surfaces_as_error() {
    let m = m2(2);
    let ctx = RingContext::with_cap(&m, 2);
    assert!(matches!(
        Property::LeftQuasiDuo.evaluate(&ctx),
        Err(Error::LatticeTruncated { cap: 2 })
    ));
    assert!(Property::NjSymmetric.evaluate(&ctx).is_ok());
}

#[test]
fn tampered_witness_is_rejected() {
    let m = m2(2);
    let mut v = is_nj_symmetric(&m).unwrap();
    v.witness.as_mut().unwrap().elements[1].1 = m.zero();
    assert!(!recheck(&m, &v).unwrap());
    let mut v = is_symmetric(&z(4)).unwrap();
    v.holds = false;
    assert!(!recheck(&z(4), &v).unwrap());
}

#[test]
fn verdict_json_has_labeled_witness() {
    let v = is_commutative(&m2(2)).unwrap();
    let json = serde_json::to_string(&v).unwrap();
    assert!(json.contains("\"elements\":[[\"a\","), "{json}");
    assert!(!json.contains("elapsed"));
    let back: PropertyVerdict = serde_json::from_str(&json).unwrap();
    assert_eq!(back, v);
}
