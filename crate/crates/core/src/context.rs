//! Lazily computed invariants shared by the predicate scans.

use std::sync::OnceLock;

use crate::error::Result;
use crate::invariants::{self, IdealLattice, DEFAULT_LATTICE_CAP};
use crate::mask::SubsetMask;
use crate::ring::FiniteRing;

/// A ring together with memoized element sets and ideal lattices. Each
/// invariant is computed at most once, on first use; the context is `Sync`
/// and can be shared across scan workers.
pub struct RingContext<'r> {
    ring: &'r FiniteRing,
    cap: usize,
    opposite: OnceLock<FiniteRing>,
    units: OnceLock<SubsetMask>,
    nilpotents: OnceLock<SubsetMask>,
    idempotents: OnceLock<SubsetMask>,
    center: OnceLock<SubsetMask>,
    jacobson: OnceLock<SubsetMask>,
    left: OnceLock<IdealLattice>,
    right: OnceLock<IdealLattice>,
    two_sided: OnceLock<IdealLattice>,
    lower_nil: OnceLock<Result<SubsetMask>>,
    upper_nil: OnceLock<Result<SubsetMask>>,
}

impl<'r> RingContext<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        Self::with_cap(ring, DEFAULT_LATTICE_CAP)
    }

    pub fn with_cap(ring: &'r FiniteRing, cap: usize) -> Self {
        Self {
            ring,
            cap,
            opposite: OnceLock::new(),
            units: OnceLock::new(),
            nilpotents: OnceLock::new(),
            idempotents: OnceLock::new(),
            center: OnceLock::new(),
            jacobson: OnceLock::new(),
            left: OnceLock::new(),
            right: OnceLock::new(),
            two_sided: OnceLock::new(),
            lower_nil: OnceLock::new(),
            upper_nil: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn opposite(&self) -> &FiniteRing {
        self.opposite.get_or_init(|| self.ring.opposite())
    }

    pub fn units(&self) -> &SubsetMask {
        self.units.get_or_init(|| invariants::units(self.ring))
    }

    pub fn nilpotents(&self) -> &SubsetMask {
        self.nilpotents.get_or_init(|| invariants::nilpotents(self.ring))
    }

    pub fn idempotents(&self) -> &SubsetMask {
        self.idempotents.get_or_init(|| invariants::idempotents(self.ring))
    }

    pub fn center(&self) -> &SubsetMask {
        self.center.get_or_init(|| invariants::center(self.ring))
    }

    pub fn jacobson(&self) -> &SubsetMask {
        self.jacobson
            .get_or_init(|| invariants::jacobson_from_units(self.ring, self.units()))
    }

    pub fn left_ideals(&self) -> &IdealLattice {
        self.left
            .get_or_init(|| invariants::all_left_ideals(self.ring, self.cap))
    }

    /// Right ideals, as left ideals of the opposite ring (same indices).
    pub fn right_ideals(&self) -> &IdealLattice {
        self.right
            .get_or_init(|| invariants::all_left_ideals(self.opposite(), self.cap))
    }

    pub fn two_sided_ideals(&self) -> &IdealLattice {
        self.two_sided
            .get_or_init(|| invariants::all_two_sided_ideals(self.ring, self.cap))
    }

    pub fn maximal_left_ideals(&self) -> Result<Vec<SubsetMask>> {
        self.left_ideals().maximal(self.cap)
    }

    pub fn maximal_right_ideals(&self) -> Result<Vec<SubsetMask>> {
        self.right_ideals().maximal(self.cap)
    }

    pub fn lower_nil(&self) -> Result<&SubsetMask> {
        self.lower_nil
            .get_or_init(|| {
                invariants::lower_nilradical_from(self.ring, self.two_sided_ideals(), self.cap)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn upper_nil(&self) -> Result<&SubsetMask> {
        self.upper_nil
            .get_or_init(|| {
                invariants::upper_nilradical_from(
                    self.ring,
                    self.two_sided_ideals(),
                    self.nilpotents(),
                    self.cap,
                )
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}
