//! Ideal generation and enumeration of ideal lattices.

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::ring::{ElementId, FiniteRing};

use super::nilpotents;

/// Default cap on the number of ideals a lattice enumeration may produce.
pub const DEFAULT_LATTICE_CAP: usize = 20_000;

/// Grows an additive subgroup one element at a time.
///
/// Adjoining `x` to a subgroup `S` yields the union of the cosets `S + t·x`,
/// so each step costs time proportional to the size of the result.
pub struct SubgroupBuilder<'r> {
    ring: &'r FiniteRing,
    mask: SubsetMask,
    members: Vec<ElementId>,
}

impl<'r> SubgroupBuilder<'r> {
    /// The zero subgroup.
    pub fn new(ring: &'r FiniteRing) -> Self {
        let mut mask = SubsetMask::empty(ring.order());
        mask.insert(ring.zero());
        Self {
            ring,
            mask,
            members: vec![ring.zero()],
        }
    }

    /// Starts from `subgroup`, which must already be an additive subgroup.
    pub fn from_subgroup(ring: &'r FiniteRing, subgroup: &SubsetMask) -> Self {
        Self {
            ring,
            mask: subgroup.clone(),
            members: subgroup.to_vec(),
        }
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.mask.contains(x)
    }

    /// Adjoins `x`, appending every newly added element to `fresh`.
    pub fn absorb(&mut self, x: ElementId, fresh: &mut Vec<ElementId>) {
        if self.mask.contains(x) {
            return;
        }
        let base = self.members.len();
        let mut shift = x;
        while !self.mask.contains(shift) {
            for i in 0..base {
                let y = self.ring.add(self.members[i], shift);
                if self.mask.insert(y) {
                    self.members.push(y);
                    fresh.push(y);
                }
            }
            shift = self.ring.add(shift, x);
        }
    }

    pub fn into_mask(self) -> SubsetMask {
        self.mask
    }
}

fn closure(
    ring: &FiniteRing,
    seeds: impl IntoIterator<Item = ElementId>,
    left: bool,
    right: bool,
) -> SubsetMask {
    let mut builder = SubgroupBuilder::new(ring);
    let mut queue = Vec::new();
    for s in seeds {
        builder.absorb(s, &mut queue);
    }
    while let Some(x) = queue.pop() {
        for r in ring.elements() {
            if left {
                builder.absorb(ring.mul(r, x), &mut queue);
            }
            if right {
                builder.absorb(ring.mul(x, r), &mut queue);
            }
        }
    }
    builder.into_mask()
}

/// Smallest left ideal containing `seeds`.
pub fn left_ideal_generated(ring: &FiniteRing, seeds: &SubsetMask) -> SubsetMask {
    closure(ring, seeds.iter(), true, false)
}

pub fn right_ideal_generated(ring: &FiniteRing, seeds: &SubsetMask) -> SubsetMask {
    closure(ring, seeds.iter(), false, true)
}

pub fn two_sided_ideal_generated(ring: &FiniteRing, seeds: &SubsetMask) -> SubsetMask {
    closure(ring, seeds.iter(), true, true)
}

fn is_subgroup(ring: &FiniteRing, set: &SubsetMask) -> bool {
    set.contains(ring.zero())
        && set
            .iter()
            .all(|a| set.iter().all(|b| set.contains(ring.add(a, b))))
}

pub fn is_left_ideal(ring: &FiniteRing, set: &SubsetMask) -> bool {
    is_subgroup(ring, set)
        && set
            .iter()
            .all(|a| ring.elements().all(|r| set.contains(ring.mul(r, a))))
}

pub fn is_right_ideal(ring: &FiniteRing, set: &SubsetMask) -> bool {
    is_subgroup(ring, set)
        && set
            .iter()
            .all(|a| ring.elements().all(|r| set.contains(ring.mul(a, r))))
}

pub fn is_two_sided_ideal(ring: &FiniteRing, set: &SubsetMask) -> bool {
    is_left_ideal(ring, set) && is_right_ideal(ring, set)
}

/// Every ideal of one kind (left or two-sided) of a ring.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    /// Sorted by size, then by mask order. Contains `{0}` and `R`.
    pub ideals: Vec<SubsetMask>,
    /// The distinct principal ideals the enumeration started from.
    pub generated_from: Vec<SubsetMask>,
    /// Set when enumeration stopped at the cap; the list is then incomplete.
    pub truncated: bool,
    maximal: Vec<bool>,
}

impl IdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// Proper ideals contained in no other proper ideal, sorted by mask.
    pub fn maximal(&self, cap: usize) -> Result<Vec<SubsetMask>> {
        if self.truncated {
            return Err(Error::LatticeTruncated { cap });
        }
        let mut out: Vec<_> = self
            .ideals
            .iter()
            .zip(&self.maximal)
            .filter(|(_, &m)| m)
            .map(|(i, _)| i.clone())
            .collect();
        out.sort();
        Ok(out)
    }
}

/// Enumerates ideals by adjoining principal ideals to known ideals until
/// nothing new appears. Every ideal is a finite sum of principal ones, so the
/// fixed point is the complete lattice.
fn enumerate(ring: &FiniteRing, principal: Vec<SubsetMask>, cap: usize) -> IdealLattice {
    let mut generated_from: Vec<SubsetMask> = Vec::new();
    for p in principal {
        if !generated_from.contains(&p) {
            generated_from.push(p);
        }
    }
    let full = SubsetMask::full(ring.order());
    let mut found: IndexMap<SubsetMask, bool> = IndexMap::new();
    found.insert(SubsetMask::from_indices(ring.order(), [ring.zero()]), false);
    let mut truncated = false;
    let mut i = 0;
    while i < found.len() {
        let current = found.get_index(i).expect("index in range").0.clone();
        let mut extends_properly = false;
        for gen in &generated_from {
            if gen.is_subset(&current) {
                continue;
            }
            let mut builder = SubgroupBuilder::from_subgroup(ring, &current);
            let mut scratch = Vec::new();
            for x in gen.iter() {
                builder.absorb(x, &mut scratch);
            }
            let sum = builder.into_mask();
            if sum != full {
                extends_properly = true;
            }
            if !found.contains_key(&sum) {
                if found.len() >= cap {
                    truncated = true;
                    continue;
                }
                found.insert(sum, false);
            }
        }
        *found.get_index_mut(i).expect("index in range").1 = !extends_properly && current != full;
        i += 1;
    }
    let mut pairs: Vec<(SubsetMask, bool)> = found.into_iter().collect();
    pairs.sort_by(|a, b| a.0.count().cmp(&b.0.count()).then_with(|| a.0.cmp(&b.0)));
    let (ideals, maximal) = pairs.into_iter().unzip();
    IdealLattice {
        ideals,
        generated_from,
        truncated,
        maximal,
    }
}

/// All left ideals, or a truncated prefix when more than `cap` exist.
pub fn all_left_ideals(ring: &FiniteRing, cap: usize) -> IdealLattice {
    let principal = ring
        .elements()
        .map(|a| SubsetMask::from_indices(ring.order(), ring.elements().map(|r| ring.mul(r, a))))
        .collect();
    enumerate(ring, principal, cap)
}

/// All right ideals (the left ideals of the opposite ring).
pub fn all_right_ideals(ring: &FiniteRing, cap: usize) -> IdealLattice {
    all_left_ideals(&ring.opposite(), cap)
}

pub fn all_two_sided_ideals(ring: &FiniteRing, cap: usize) -> IdealLattice {
    let principal = ring
        .elements()
        .map(|a| two_sided_ideal_generated(ring, &SubsetMask::from_indices(ring.order(), [a])))
        .collect();
    enumerate(ring, principal, cap)
}

pub fn maximal_left_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<SubsetMask>> {
    all_left_ideals(ring, cap).maximal(cap)
}

pub fn maximal_right_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<SubsetMask>> {
    all_right_ideals(ring, cap).maximal(cap)
}

/// `L` meets every nonzero left ideal nontrivially. Checking the principal
/// ideals `Ra`, `a ≠ 0`, suffices.
pub fn is_essential_left_ideal(ring: &FiniteRing, ideal: &SubsetMask) -> Result<bool> {
    if !is_left_ideal(ring, ideal) {
        return Err(Error::NotAnIdeal("not a left ideal".into()));
    }
    Ok(essential_unchecked(ring, ideal))
}

pub(crate) fn essential_unchecked(ring: &FiniteRing, ideal: &SubsetMask) -> bool {
    let zero = ring.zero();
    ring.elements()
        .filter(|&a| a != zero)
        .all(|a| ring.elements().any(|r| {
            let x = ring.mul(r, a);
            x != zero && ideal.contains(x)
        }))
}

/// `P` is prime iff for all `a, b ∉ P` some `r` has `arb ∉ P`.
pub(crate) fn is_prime(ring: &FiniteRing, p: &SubsetMask) -> bool {
    if p.is_full() {
        return false;
    }
    let outside: Vec<_> = p.complement().to_vec();
    outside.iter().all(|&a| {
        outside
            .iter()
            .all(|&b| ring.elements().any(|r| !p.contains(ring.mul3(a, r, b))))
    })
}

/// Intersection of all prime ideals, given the two-sided lattice.
pub fn lower_nilradical_from(ring: &FiniteRing, two_sided: &IdealLattice, cap: usize) -> Result<SubsetMask> {
    if two_sided.truncated {
        return Err(Error::LatticeTruncated { cap });
    }
    Ok(two_sided
        .ideals
        .iter()
        .filter(|p| is_prime(ring, p))
        .fold(SubsetMask::full(ring.order()), |acc, p| acc.intersection(p)))
}

/// Sum of all nil ideals, given the two-sided lattice and the nilpotent set.
pub fn upper_nilradical_from(
    ring: &FiniteRing,
    two_sided: &IdealLattice,
    nilpotent: &SubsetMask,
    cap: usize,
) -> Result<SubsetMask> {
    if two_sided.truncated {
        return Err(Error::LatticeTruncated { cap });
    }
    let mut builder = SubgroupBuilder::new(ring);
    let mut scratch = Vec::new();
    for ideal in two_sided.ideals.iter().filter(|i| i.is_subset(nilpotent)) {
        for x in ideal.iter() {
            builder.absorb(x, &mut scratch);
        }
    }
    Ok(builder.into_mask())
}

pub fn lower_nilradical(ring: &FiniteRing, cap: usize) -> Result<SubsetMask> {
    lower_nilradical_from(ring, &all_two_sided_ideals(ring, cap), cap)
}

pub fn upper_nilradical(ring: &FiniteRing, cap: usize) -> Result<SubsetMask> {
    upper_nilradical_from(ring, &all_two_sided_ideals(ring, cap), &nilpotents(ring), cap)
}
