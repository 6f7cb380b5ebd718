//! Independent confirmation of failure witnesses.
//!
//! Everything here works from the raw tables only: no cached sets, no lattice
//! enumeration. A witness is accepted when substituting it into the defining
//! formula reproduces the violation.

use std::collections::HashMap;

use super::{Property, PropertyVerdict, Witness};
use crate::error::{Error, Result};
use crate::ring::{ElementId, FiniteRing};

struct Raw<'r> {
    r: &'r FiniteRing,
}

impl Raw<'_> {
    fn nil(&self, x: ElementId) -> bool {
        let mut p = x;
        for _ in 0..=self.r.order() {
            if p == self.r.zero() {
                return true;
            }
            p = self.r.mul(p, x);
        }
        false
    }

    fn unit(&self, x: ElementId) -> bool {
        let one = self.r.one();
        self.r
            .elements()
            .any(|y| self.r.mul(x, y) == one && self.r.mul(y, x) == one)
    }

    fn in_j(&self, x: ElementId) -> bool {
        let one = self.r.one();
        self.r
            .elements()
            .all(|y| self.unit(self.r.sub(one, self.r.mul(y, x))))
    }

    fn idempotent(&self, e: ElementId) -> bool {
        self.r.mul(e, e) == e
    }

    fn central(&self, z: ElementId) -> bool {
        self.r
            .elements()
            .all(|x| self.r.mul(z, x) == self.r.mul(x, z))
    }

    fn idempotents(&self) -> Vec<ElementId> {
        self.r.elements().filter(|&e| self.idempotent(e)).collect()
    }

    fn subgroup(&self, set: &[bool]) -> bool {
        set[self.r.zero()]
            && (0..set.len())
                .filter(|&x| set[x])
                .all(|x| (0..set.len()).filter(|&y| set[y]).all(|y| set[self.r.add(x, y)]))
    }

    /// Absorbs `x·m` (left) or `m·x` (right) for every ring element.
    fn one_sided_ideal(&self, set: &[bool], left: bool) -> bool {
        self.subgroup(set)
            && (0..set.len()).filter(|&m| set[m]).all(|m| {
                self.r.elements().all(|x| {
                    let y = if left { self.r.mul(x, m) } else { self.r.mul(m, x) };
                    set[y]
                })
            })
    }

    /// One-sided ideal generated by `set ∪ {extra}`, by saturating sums and
    /// products until nothing changes.
    fn generated(&self, set: &[bool], extra: ElementId, left: bool) -> Vec<bool> {
        let mut members = set.to_vec();
        members[extra] = true;
        loop {
            let current: Vec<ElementId> = (0..members.len()).filter(|&i| members[i]).collect();
            let mut grew = false;
            for &x in &current {
                for &y in &current {
                    let s = self.r.add(x, y);
                    grew |= !std::mem::replace(&mut members[s], true);
                }
                for y in self.r.elements() {
                    let p = if left { self.r.mul(y, x) } else { self.r.mul(x, y) };
                    grew |= !std::mem::replace(&mut members[p], true);
                }
            }
            if !grew {
                return members;
            }
        }
    }

    fn maximal(&self, set: &[bool], left: bool) -> bool {
        !set[self.r.one()]
            && (0..set.len())
                .filter(|&x| !set[x])
                .all(|x| self.generated(set, x, left)[self.r.one()])
    }

    fn essential(&self, set: &[bool]) -> bool {
        let zero = self.r.zero();
        self.r.elements().filter(|&a| a != zero).all(|a| {
            self.r.elements().any(|x| {
                let y = self.r.mul(x, a);
                y != zero && set[y]
            })
        })
    }

    fn prime(&self, set: &[bool]) -> bool {
        let outside: Vec<ElementId> = (0..set.len()).filter(|&x| !set[x]).collect();
        !outside.is_empty()
            && outside.iter().all(|&a| {
                outside
                    .iter()
                    .all(|&b| self.r.elements().any(|x| !set[self.r.mul3(a, x, b)]))
            })
    }

    fn no_opposite_parity_powers(&self, a: ElementId) -> bool {
        let bound = 3 * self.r.order() + 2;
        let mut powers = vec![a];
        while powers.len() < bound {
            powers.push(self.r.mul(*powers.last().unwrap(), a));
        }
        let mut memo = HashMap::new();
        for p in 0..bound {
            for q in (p + 1..bound).step_by(2) {
                let d = self.r.sub(powers[q], powers[p]);
                if *memo.entry(d).or_insert_with(|| self.nil(d)) {
                    return false;
                }
            }
        }
        true
    }
}

fn ideal_set(r: &FiniteRing, w: &Witness) -> Option<Vec<bool>> {
    let mut set = vec![false; r.order()];
    for &i in w.ideal.as_ref()? {
        *set.get_mut(i)? = true;
    }
    Some(set)
}

/// Confirms a verdict against the raw tables. A passing verdict is accepted
/// when it carries no witness; a failing one when its witness reproduces the
/// violation of the definition.
pub fn recheck(ring: &FiniteRing, verdict: &PropertyVerdict) -> Result<bool> {
    let property: Property = verdict.property.parse()?;
    let w = match (&verdict.witness, verdict.holds) {
        (None, true) => return Ok(true),
        (Some(_), true) | (None, false) => return Ok(false),
        (Some(w), false) => w,
    };
    let n = ring.order();
    if w.elements.iter().any(|&(_, v)| v >= n) {
        return Err(Error::Element(w.elements.iter().map(|&(_, v)| v).max().unwrap_or(0)));
    }
    let g = |role: &str| w.get(role);
    let raw = Raw { r: ring };
    let r = ring;
    let zero = r.zero();
    let one = r.one();

    let ok = match property {
        Property::Symmetric => triple(w, "c").is_some_and(|[a, b, c]| {
            r.mul3(a, b, c) == zero && r.mul3(b, a, c) != zero
        }),
        Property::Semicommutative => triple(w, "r").is_some_and(|[a, b, x]| {
            r.mul(a, b) == zero && r.mul3(a, x, b) != zero
        }),
        Property::WeakSymmetric => triple(w, "c").is_some_and(|[a, b, c]| {
            raw.nil(r.mul3(a, b, c)) && !raw.nil(r.mul3(a, c, b))
        }),
        Property::Gws => triple(w, "c").is_some_and(|[a, b, c]| {
            r.mul3(a, b, c) == zero && !raw.nil(r.mul3(b, a, c))
        }),
        Property::NjSymmetric => triple(w, "c").is_some_and(|[a, b, c]| {
            raw.nil(r.mul3(a, b, c)) && !raw.in_j(r.mul3(b, a, c))
        }),
        Property::LeftQuasiDuo | Property::RightQuasiDuo | Property::Melt => {
            let left = property != Property::RightQuasiDuo;
            match (ideal_set(r, w), g("m"), g("r")) {
                (Some(set), Some(m), Some(x)) => {
                    let moved = if left { r.mul(m, x) } else { r.mul(x, m) };
                    set[m]
                        && !set[moved]
                        && raw.one_sided_ideal(&set, left)
                        && raw.maximal(&set, left)
                        && (property != Property::Melt || raw.essential(&set))
                }
                _ => false,
            }
        }
        Property::Abelian => match (g("e"), g("r")) {
            (Some(e), Some(x)) => raw.idempotent(e) && r.mul(e, x) != r.mul(x, e),
            _ => false,
        },
        Property::Clean => g("a").is_some_and(|a| {
            raw.idempotents().into_iter().all(|e| !raw.unit(r.sub(a, e)))
        }),
        Property::JClean => g("a").is_some_and(|a| {
            raw.idempotents().into_iter().all(|e| !raw.in_j(r.sub(a, e)))
        }),
        Property::Exchange => g("a").is_some_and(|a| {
            let b = r.sub(one, a);
            raw.idempotents().into_iter().all(|e| {
                let f = r.sub(one, e);
                !(r.elements().any(|x| r.mul(x, a) == e) && r.elements().any(|x| r.mul(x, b) == f))
            })
        }),
        Property::JQuasipolar => g("a").is_some_and(|a| {
            let comm: Vec<ElementId> = r.elements().filter(|&y| r.mul(y, a) == r.mul(a, y)).collect();
            raw.idempotents().into_iter().all(|f| {
                let in_dc = comm.iter().all(|&y| r.mul(y, f) == r.mul(f, y));
                !(in_dc && raw.in_j(r.add(a, f)))
            })
        }),
        Property::Local => match (g("a"), g("b")) {
            (Some(a), Some(b)) => !raw.unit(a) && !raw.unit(b) && raw.unit(r.add(a, b)),
            _ => false,
        },
        Property::Regular => g("a").is_some_and(|a| r.elements().all(|x| r.mul3(a, x, a) != a)),
        Property::StronglyRegular => {
            g("a").is_some_and(|a| r.elements().all(|x| r.mul3(a, a, x) != a))
        }
        Property::Semiperiodic => g("a").is_some_and(|a| {
            !raw.in_j(a) && !raw.central(a) && raw.no_opposite_parity_powers(a)
        }),
        Property::TwoPrimal => match (ideal_set(r, w), g("a")) {
            (Some(set), Some(a)) => {
                raw.nil(a)
                    && !set[a]
                    && raw.one_sided_ideal(&set, true)
                    && raw.one_sided_ideal(&set, false)
                    && raw.prime(&set)
            }
            _ => false,
        },
        Property::Reduced => g("a").is_some_and(|a| a != zero && raw.nil(a)),
        Property::Semiprime => {
            g("a").is_some_and(|a| a != zero && r.elements().all(|x| r.mul3(a, x, a) == zero))
        }
        Property::Domain => match (g("a"), g("b")) {
            (Some(a), Some(b)) => a != zero && b != zero && r.mul(a, b) == zero,
            _ => false,
        },
        Property::Commutative => match (g("a"), g("b")) {
            (Some(a), Some(b)) => r.mul(a, b) != r.mul(b, a),
            _ => false,
        },
    };
    Ok(ok)
}

fn triple(w: &Witness, third: &str) -> Option<[ElementId; 3]> {
    Some([w.get("a")?, w.get("b")?, w.get(third)?])
}
