use rayon::prelude::*;

use super::{Property, Witness};
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::invariants::{double_commutant, essential_unchecked, is_prime};
use crate::mask::SubsetMask;
use crate::ring::{ElementId, FiniteRing};

type Found = Option<Witness>;

/// Least `a` satisfying `bad`, scanned in parallel over `a`.
fn first_single(n: usize, bad: impl Fn(ElementId) -> bool + Sync) -> Option<ElementId> {
    (0..n).into_par_iter().find_first(|&a| bad(a))
}

fn first_pair(n: usize, bad: impl Fn(ElementId, ElementId) -> bool + Sync) -> Option<[ElementId; 2]> {
    (0..n)
        .into_par_iter()
        .find_map_first(|a| (0..n).find(|&b| bad(a, b)).map(|b| [a, b]))
}

fn first_triple(
    n: usize,
    bad: impl Fn(ElementId, ElementId, ElementId) -> bool + Sync,
) -> Option<[ElementId; 3]> {
    (0..n).into_par_iter().find_map_first(|a| {
        (0..n).find_map(|b| (0..n).find(|&c| bad(a, b, c)).map(|c| [a, b, c]))
    })
}

fn triple_witness(found: Option<[ElementId; 3]>, roles: [&str; 3]) -> Found {
    found.map(|t| Witness::new(&roles, &t))
}

pub(super) fn decide(p: Property, ctx: &RingContext<'_>) -> Result<Found> {
    let r = ctx.ring();
    let n = r.order();
    let zero = r.zero();
    Ok(match p {
        Property::Symmetric => triple_witness(
            first_triple(n, |a, b, c| r.mul3(a, b, c) == zero && r.mul3(b, a, c) != zero),
            ["a", "b", "c"],
        ),
        Property::Semicommutative => triple_witness(
            first_triple(n, |a, b, x| r.mul(a, b) == zero && r.mul3(a, x, b) != zero),
            ["a", "b", "r"],
        ),
        Property::WeakSymmetric => {
            let [acb, bac] = weak_formulations(ctx);
            if acb.is_some() != bac.is_some() {
                return Err(Error::Inconsistent(format!(
                    "weak symmetry formulations disagree on {}: acb {:?}, bac {:?}",
                    r.name(),
                    acb,
                    bac
                )));
            }
            triple_witness(acb, ["a", "b", "c"])
        }
        Property::Gws => {
            let nil = ctx.nilpotents();
            triple_witness(
                first_triple(n, |a, b, c| {
                    r.mul3(a, b, c) == zero && !nil.contains(r.mul3(b, a, c))
                }),
                ["a", "b", "c"],
            )
        }
        Property::NjSymmetric => {
            let [bac, acb, cba] = nj_formulations(ctx);
            if bac.is_some() != acb.is_some() || bac.is_some() != cba.is_some() {
                return Err(Error::Inconsistent(format!(
                    "NJ-symmetry formulations disagree on {}: bac {:?}, acb {:?}, cba {:?}",
                    r.name(),
                    bac,
                    acb,
                    cba
                )));
            }
            triple_witness(bac, ["a", "b", "c"])
        }
        Property::LeftQuasiDuo => {
            let maximal = ctx.maximal_left_ideals()?;
            stable_under(r, &maximal, |m, x| r.mul(m, x))
        }
        Property::RightQuasiDuo => {
            let maximal = ctx.maximal_right_ideals()?;
            stable_under(r, &maximal, |m, x| r.mul(x, m))
        }
        Property::Melt => {
            let essential: Vec<SubsetMask> = ctx
                .maximal_left_ideals()?
                .into_iter()
                .filter(|m| essential_unchecked(r, m))
                .collect();
            stable_under(r, &essential, |m, x| r.mul(m, x))
        }
        Property::Abelian => {
            let idem = ctx.idempotents();
            first_pair(n, |e, x| idem.contains(e) && r.mul(e, x) != r.mul(x, e))
                .map(|p| Witness::new(&["e", "r"], &p))
        }
        Property::Clean => {
            let idem = ctx.idempotents().to_vec();
            let units = ctx.units();
            single(first_single(n, |a| !idem.iter().any(|&e| units.contains(r.sub(a, e)))))
        }
        Property::JClean => {
            let idem = ctx.idempotents().to_vec();
            let jac = ctx.jacobson();
            single(first_single(n, |a| !idem.iter().any(|&e| jac.contains(r.sub(a, e)))))
        }
        Property::Exchange => {
            let idem = ctx.idempotents().to_vec();
            let one = r.one();
            single(first_single(n, |a| {
                let left_a = left_multiples(r, a);
                let left_b = left_multiples(r, r.sub(one, a));
                !idem
                    .iter()
                    .any(|&e| left_a.contains(e) && left_b.contains(r.sub(one, e)))
            }))
        }
        Property::JQuasipolar => {
            let idem = ctx.idempotents().to_vec();
            let jac = ctx.jacobson();
            single(first_single(n, |a| {
                let mut candidates = idem.iter().filter(|&&f| jac.contains(r.add(a, f))).peekable();
                if candidates.peek().is_none() {
                    return true;
                }
                let dc = double_commutant(r, a);
                !candidates.any(|&f| dc.contains(f))
            }))
        }
        Property::Local => {
            let units = ctx.units();
            first_pair(n, |a, b| {
                !units.contains(a) && !units.contains(b) && units.contains(r.add(a, b))
            })
            .map(|p| Witness::new(&["a", "b"], &p))
        }
        Property::Regular => single(first_single(n, |a| {
            !r.elements().any(|x| r.mul3(a, x, a) == a)
        })),
        Property::StronglyRegular => single(first_single(n, |a| {
            let sq = r.mul(a, a);
            !r.elements().any(|x| r.mul(sq, x) == a)
        })),
        Property::Semiperiodic => {
            let jac = ctx.jacobson();
            let center = ctx.center();
            let nil = ctx.nilpotents();
            single(first_single(n, |a| {
                !jac.contains(a) && !center.contains(a) && !has_opposite_parity_powers(r, nil, a)
            }))
        }
        Property::TwoPrimal => {
            let lower = ctx.lower_nil()?;
            let nil = ctx.nilpotents();
            match nil.difference(lower).first() {
                None => None,
                Some(a) => {
                    let prime = ctx
                        .two_sided_ideals()
                        .ideals
                        .iter()
                        .find(|p| !p.contains(a) && is_prime(r, p))
                        .expect("an element outside the lower nilradical avoids some prime");
                    Some(Witness::new(&["a"], &[a]).with_ideal(prime.to_vec()))
                }
            }
        }
        Property::Reduced => single(ctx.nilpotents().iter().find(|&a| a != zero)),
        Property::Semiprime => single(first_single(n, |a| {
            a != zero && r.elements().all(|x| r.mul3(a, x, a) == zero)
        })),
        Property::Domain => first_pair(n, |a, b| a != zero && b != zero && r.mul(a, b) == zero)
            .map(|p| Witness::new(&["a", "b"], &p)),
        Property::Commutative => first_pair(n, |a, b| r.mul(a, b) != r.mul(b, a))
            .map(|p| Witness::new(&["a", "b"], &p)),
    })
}

fn single(a: Option<ElementId>) -> Found {
    a.map(|a| Witness::new(&["a"], &[a]))
}

/// `Ra = {x·a}`.
pub(super) fn left_multiples(r: &FiniteRing, a: ElementId) -> SubsetMask {
    let mut m = SubsetMask::empty(r.order());
    for x in r.elements() {
        m.insert(r.mul(x, a));
    }
    m
}

/// For each ideal in order, the least `(m, r)` with `m ∈ M` and
/// `act(m, r) ∉ M`.
fn stable_under(
    r: &FiniteRing,
    ideals: &[SubsetMask],
    act: impl Fn(ElementId, ElementId) -> ElementId,
) -> Found {
    ideals.iter().find_map(|ideal| {
        ideal.iter().find_map(|m| {
            r.elements()
                .find(|&x| !ideal.contains(act(m, x)))
                .map(|x| Witness::new(&["m", "r"], &[m, x]).with_ideal(ideal.to_vec()))
        })
    })
}

/// Powers `a^k` for `k ≤ 3|R| + 2`, split by parity of `k`; true when an
/// even-exponent and an odd-exponent power differ by a nilpotent.
pub(super) fn has_opposite_parity_powers(r: &FiniteRing, nil: &SubsetMask, a: ElementId) -> bool {
    let n = r.order();
    let bound = 3 * n + 2;
    let mut even = SubsetMask::empty(n);
    let mut odd = SubsetMask::empty(n);
    let mut p = a;
    for k in 1..=bound {
        if k % 2 == 0 {
            even.insert(p);
        } else {
            odd.insert(p);
        }
        p = r.mul(p, a);
    }
    let found = even.iter().any(|u| odd.iter().any(|v| nil.contains(r.sub(u, v))));
    found
}

pub(super) fn nj_formulations(ctx: &RingContext<'_>) -> [Option<[ElementId; 3]>; 3] {
    let r = ctx.ring();
    let n = r.order();
    let nil = ctx.nilpotents();
    let jac = ctx.jacobson();
    let scan = |swap: fn(ElementId, ElementId, ElementId) -> [ElementId; 3]| {
        first_triple(n, |a, b, c| {
            if !nil.contains(r.mul3(a, b, c)) {
                return false;
            }
            let [x, y, z] = swap(a, b, c);
            !jac.contains(r.mul3(x, y, z))
        })
    };
    [
        scan(|a, b, c| [b, a, c]),
        scan(|a, b, c| [a, c, b]),
        scan(|a, b, c| [c, b, a]),
    ]
}

pub(super) fn weak_formulations(ctx: &RingContext<'_>) -> [Option<[ElementId; 3]>; 2] {
    let r = ctx.ring();
    let n = r.order();
    let nil = ctx.nilpotents();
    let scan = |swap: fn(ElementId, ElementId, ElementId) -> [ElementId; 3]| {
        first_triple(n, |a, b, c| {
            if !nil.contains(r.mul3(a, b, c)) {
                return false;
            }
            let [x, y, z] = swap(a, b, c);
            !nil.contains(r.mul3(x, y, z))
        })
    };
    [scan(|a, b, c| [a, c, b]), scan(|a, b, c| [b, a, c])]
}
