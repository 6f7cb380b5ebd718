//! Distinguished element sets of a finite ring and its ideal structure.

mod lattice;
mod report;

pub use lattice::{
    all_left_ideals, all_right_ideals, all_two_sided_ideals, is_essential_left_ideal,
    is_left_ideal, is_right_ideal, is_two_sided_ideal, left_ideal_generated, lower_nilradical,
    lower_nilradical_from, maximal_left_ideals, maximal_right_ideals, right_ideal_generated,
    two_sided_ideal_generated, upper_nilradical, upper_nilradical_from, IdealLattice,
    SubgroupBuilder, DEFAULT_LATTICE_CAP,
};
pub(crate) use lattice::{essential_unchecked, is_prime};
pub use report::{radical_report, RadicalReport};

use rayon::prelude::*;

use crate::mask::SubsetMask;
use crate::ring::{ElementId, FiniteRing};

/// `a` is a unit iff some `b` has `ab = ba = 1`.
pub fn units(ring: &FiniteRing) -> SubsetMask {
    let one = ring.one();
    SubsetMask::from_predicate(ring.order(), |a| {
        ring.elements().any(|b| ring.mul(a, b) == one && ring.mul(b, a) == one)
    })
}

/// Least `k ≥ 1` with `a^k = 0`. Powers of `a` take at most `|R|` distinct
/// values, so checking `k ≤ |R|` is enough.
pub fn nilpotency_index(ring: &FiniteRing, a: ElementId) -> Option<usize> {
    let mut p = a;
    for k in 1..=ring.order() {
        if p == ring.zero() {
            return Some(k);
        }
        p = ring.mul(p, a);
    }
    None
}

pub fn nilpotents(ring: &FiniteRing) -> SubsetMask {
    SubsetMask::from_predicate(ring.order(), |a| nilpotency_index(ring, a).is_some())
}

pub fn idempotents(ring: &FiniteRing) -> SubsetMask {
    SubsetMask::from_predicate(ring.order(), |e| ring.mul(e, e) == e)
}

pub fn center(ring: &FiniteRing) -> SubsetMask {
    SubsetMask::from_predicate(ring.order(), |z| {
        ring.elements().all(|r| ring.mul(z, r) == ring.mul(r, z))
    })
}

/// `J(R) = {x : 1 − r·x is a unit for every r}`.
pub fn jacobson_radical(ring: &FiniteRing) -> SubsetMask {
    jacobson_from_units(ring, &units(ring))
}

pub fn jacobson_from_units(ring: &FiniteRing, units: &SubsetMask) -> SubsetMask {
    let one = ring.one();
    let members: Vec<bool> = (0..ring.order())
        .into_par_iter()
        .map(|x| {
            ring.elements()
                .all(|r| units.contains(ring.sub(one, ring.mul(r, x))))
        })
        .collect();
    SubsetMask::from_predicate(ring.order(), |x| members[x])
}

/// `comm(a) = {y : ya = ay}`.
pub fn commutant(ring: &FiniteRing, a: ElementId) -> SubsetMask {
    SubsetMask::from_predicate(ring.order(), |y| ring.mul(y, a) == ring.mul(a, y))
}

/// Elements commuting with every member of `comm(a)`.
pub fn double_commutant(ring: &FiniteRing, a: ElementId) -> SubsetMask {
    let comm = commutant(ring, a).to_vec();
    SubsetMask::from_predicate(ring.order(), |x| {
        comm.iter().all(|&y| ring.mul(y, x) == ring.mul(x, y))
    })
}

/// `l(a) = {x : xa = 0}`.
pub fn left_annihilator(ring: &FiniteRing, a: ElementId) -> SubsetMask {
    SubsetMask::from_predicate(ring.order(), |x| ring.mul(x, a) == ring.zero())
}

/// `r(a) = {x : ax = 0}`.
pub fn right_annihilator(ring: &FiniteRing, a: ElementId) -> SubsetMask {
    SubsetMask::from_predicate(ring.order(), |x| ring.mul(a, x) == ring.zero())
}
