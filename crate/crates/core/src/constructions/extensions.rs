//! Generalized matrix rings built from bimodules, and the Dorroh extension.

use crate::error::{Error, Result};
use crate::ring::{check_order, ElementId, FiniteRing};

use super::Bimodule;

/// `[[R₁, M], [0, R₂]]`. Element `(r₁, m, r₂)` has index
/// `(r₁·|M| + m)·|R₂| + r₂`. Any internal multiplication on `M` is ignored.
pub fn formal_triangular(left: &FiniteRing, right: &FiniteRing, module: &Bimodule) -> Result<FiniteRing> {
    module.validate_actions(left, right)?;
    let (n1, m, n2) = (left.order(), module.order(), right.order());
    let n = check_order(n1 as u128 * m as u128 * n2 as u128)?;
    let split = |x: usize| (x / (m * n2), (x / n2) % m, x % n2);
    let join = |a: usize, b: usize, c: usize| (a * m + b) * n2 + c;
    let ring = FiniteRing::from_fns(
        n,
        |x, y| {
            let ((a, p, c), (s, q, t)) = (split(x), split(y));
            join(left.add(a, s), module.add(p, q), right.add(c, t))
        },
        |x, y| {
            let ((a, p, c), (s, q, t)) = (split(x), split(y));
            let off = module.add(module.act_left(a, q), module.act_right(p, t));
            join(left.mul(a, s), off, right.mul(c, t))
        },
        join(left.zero(), module.zero(), right.zero()),
        join(left.one(), module.zero(), right.one()),
        format!("Tri({}, {}, {})", left.name(), right.name(), module.name()),
    )?;
    let labels = (0..n)
        .map(|x| {
            let (a, p, c) = split(x);
            format!("[{} {}; 0 {}]", left.label(a), p, right.label(c))
        })
        .collect();
    Ok(ring.with_labels(labels))
}

/// Morita context `[[R₁, M], [P, R₂]]` with zero context products. `M` is an
/// `(R₁, R₂)`-bimodule and `P` an `(R₂, R₁)`-bimodule. Element
/// `(r₁, m, p, r₂)` has index `((r₁·|M| + m)·|P| + p)·|R₂| + r₂`.
pub fn trivial_morita(
    left: &FiniteRing,
    right: &FiniteRing,
    m_mod: &Bimodule,
    p_mod: &Bimodule,
) -> Result<FiniteRing> {
    m_mod.validate_actions(left, right)?;
    p_mod.validate_actions(right, left)?;
    let (n1, m, p, n2) = (left.order(), m_mod.order(), p_mod.order(), right.order());
    let n = check_order(n1 as u128 * m as u128 * p as u128 * n2 as u128)?;
    let split = |x: usize| (x / (m * p * n2), (x / (p * n2)) % m, (x / n2) % p, x % n2);
    let join = |a: usize, b: usize, c: usize, d: usize| ((a * m + b) * p + c) * n2 + d;
    let ring = FiniteRing::from_fns(
        n,
        |x, y| {
            let ((a, b, c, d), (e, f, g, h)) = (split(x), split(y));
            join(left.add(a, e), m_mod.add(b, f), p_mod.add(c, g), right.add(d, h))
        },
        |x, y| {
            let ((a, b, c, d), (e, f, g, h)) = (split(x), split(y));
            // [[a b][c d]]·[[e f][g h]] with b·g = c·f = 0
            let mm = m_mod.add(m_mod.act_left(a, f), m_mod.act_right(b, h));
            let pp = p_mod.add(p_mod.act_right(c, e), p_mod.act_left(d, g));
            join(left.mul(a, e), mm, pp, right.mul(d, h))
        },
        join(left.zero(), m_mod.zero(), p_mod.zero(), right.zero()),
        join(left.one(), m_mod.zero(), p_mod.zero(), right.one()),
        format!(
            "Morita({}, {}, {}, {})",
            left.name(),
            right.name(),
            m_mod.name(),
            p_mod.name()
        ),
    )?;
    let labels = (0..n)
        .map(|x| {
            let (a, b, c, d) = split(x);
            format!("[{} {}; {} {}]", left.label(a), b, c, right.label(d))
        })
        .collect();
    Ok(ring.with_labels(labels))
}

/// Dorroh extension together with the brute-force status of the
/// quasi-regularity hypothesis `∀a ∃w: a + w + aw = 0`.
#[derive(Clone, Debug)]
pub struct DorrohExtension {
    pub ring: FiniteRing,
    pub quasi_regular: bool,
    /// Least `a` admitting no such `w`, when the hypothesis fails.
    pub obstruction: Option<ElementId>,
}

/// `R ⊕ A` with `(r, a)(s, w) = (rs, rw + as + aw)`; element `(r, a)` has
/// index `r·|A| + a`.
pub fn dorroh(base: &FiniteRing, ideal: &Bimodule) -> Result<DorrohExtension> {
    if !ideal.has_internal_mul() {
        return Err(Error::Bimodule("Dorroh extension needs an internal multiplication".into()));
    }
    ideal.validate(base, base)?;
    let (r, m) = (base.order(), ideal.order());
    let n = check_order(r as u128 * m as u128)?;
    let split = |x: usize| (x / m, x % m);
    let ring = FiniteRing::from_fns(
        n,
        |x, y| {
            let ((a, p), (b, q)) = (split(x), split(y));
            base.add(a, b) * m + ideal.add(p, q)
        },
        |x, y| {
            let ((a, p), (b, q)) = (split(x), split(y));
            let off = ideal.add(
                ideal.add(ideal.act_left(a, q), ideal.act_right(p, b)),
                ideal.mul(p, q),
            );
            base.mul(a, b) * m + off
        },
        base.zero() * m + ideal.zero(),
        base.one() * m + ideal.zero(),
        format!("Dorroh({}, {})", base.name(), ideal.name()),
    )?;
    let labels = (0..n)
        .map(|x| {
            let (a, p) = split(x);
            format!("({},{})", base.label(a), p)
        })
        .collect();
    let obstruction = (0..m).find(|&a| {
        !(0..m).any(|w| ideal.add(ideal.add(a, w), ideal.mul(a, w)) == ideal.zero())
    });
    Ok(DorrohExtension {
        ring: ring.with_labels(labels),
        quasi_regular: obstruction.is_none(),
        obstruction,
    })
}

impl Bimodule {
    /// Like [`Bimodule::validate`] but ignores any internal multiplication.
    pub fn validate_actions(&self, left: &FiniteRing, right: &FiniteRing) -> Result<()> {
        self.clone().without_internal_mul().validate(left, right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, quotient, upper_triangular, zmod};
    use crate::invariants::jacobson_radical;
    use crate::mask::SubsetMask;
    use crate::ring::verify_axioms;

    fn two_z4_over_z2() -> Bimodule {
        // {0, 2} ⊂ ℤ₄ relabeled as {0, 1}; ℤ₂ acts by 1·x = x, product 2·2 = 0
        Bimodule::from_tables(2, 2, 2, vec![0, 1, 1, 0], vec![0, 0, 0, 1], vec![0, 0, 0, 1], Some(vec![0; 4]), "2Z4")
            .unwrap()
    }

    #[test]
    fn formal_triangular_over_f2_is_t2() {
        let z2 = zmod(2).unwrap();
        let m = Bimodule::regular(&z2);
        let tri = formal_triangular(&z2, &z2, &m).unwrap();
        let t2 = upper_triangular(&z2, 2).unwrap();
        // both index (a, m, c) as a·4 + m·2 + c
        assert!(tri.same_tables(&t2));
    }

    #[test]
    fn zero_bimodule_gives_products() {
        let (z4, z3) = (zmod(4).unwrap(), zmod(3).unwrap());
        let zero = Bimodule::zero_module(&z4, &z3);
        let prod = direct_product(&z4, &z3).unwrap();
        assert!(formal_triangular(&z4, &z3, &zero).unwrap().same_tables(&prod));
        let zero_back = Bimodule::zero_module(&z3, &z4);
        assert!(trivial_morita(&z4, &z3, &zero, &zero_back).unwrap().same_tables(&prod));
    }

    #[test]
    fn formal_triangular_radical_is_block_formula() {
        let (z4, z2) = (zmod(4).unwrap(), zmod(2).unwrap());
        let (_, proj) = quotient(&z4, &SubsetMask::from_indices(4, [0, 2])).unwrap();
        let m = Bimodule::regular(&z2).without_internal_mul().restrict_left(&proj).unwrap();
        let tri = formal_triangular(&z4, &z2, &m).unwrap();
        assert!(verify_axioms(&tri).is_ok());
        let (j1, j2) = (jacobson_radical(&z4), jacobson_radical(&z2));
        let block: Vec<_> = tri
            .elements()
            .filter(|&x| j1.contains(x / 4) && j2.contains(x % 2))
            .collect();
        assert_eq!(jacobson_radical(&tri).to_vec(), block);
    }

    #[test]
    fn morita_over_f2() {
        let z2 = zmod(2).unwrap();
        let m = Bimodule::regular(&z2);
        let r = trivial_morita(&z2, &z2, &m, &m).unwrap();
        assert_eq!(r.order(), 16);
        assert!(verify_axioms(&r).is_ok());
        // 0 ⊕ M ⊕ P ⊕ 0 squares to zero
        let off: Vec<_> = r.elements().filter(|&x| x / 8 == 0 && x % 2 == 0).collect();
        for &a in &off {
            for &b in &off {
                assert_eq!(r.mul(a, b), r.zero());
            }
        }
    }

    #[test]
    fn dorroh_over_z4() {
        let z4 = zmod(4).unwrap();
        let a = Bimodule::from_ideal(&z4, &SubsetMask::from_indices(4, [0, 2])).unwrap();
        let d = dorroh(&z4, &a).unwrap();
        assert_eq!(d.ring.order(), 8);
        assert!(d.quasi_regular);
        assert!(verify_axioms(&d.ring).is_ok());
    }

    #[test]
    fn dorroh_with_zero_ideal_is_base() {
        let z6 = zmod(6).unwrap();
        let d = dorroh(&z6, &Bimodule::zero_module(&z6, &z6)).unwrap();
        assert!(d.ring.same_tables(&z6));
    }

    #[test]
    fn dorroh_over_f2() {
        let z2 = zmod(2).unwrap();
        let d = dorroh(&z2, &two_z4_over_z2()).unwrap();
        assert_eq!(d.ring.order(), 4);
        assert!(d.quasi_regular);
    }

    #[test]
    fn dorroh_hypothesis_can_fail() {
        // A = ℤ₂ with its unital product: a = 1 needs 1 + w + w = 0, impossible
        let z2 = zmod(2).unwrap();
        let d = dorroh(&z2, &Bimodule::regular(&z2)).unwrap();
        assert!(!d.quasi_regular);
        assert_eq!(d.obstruction, Some(1));
    }
}
