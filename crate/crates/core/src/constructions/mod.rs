//! Building new finite rings from old ones.

mod bimodule;
mod extensions;
mod matrix;
mod skew;

pub use bimodule::Bimodule;
pub use extensions::{dorroh, formal_triangular, trivial_morita, DorrohExtension};
pub use matrix::{
    constant_diagonal, matrix_element, matrix_ring, matrix_units, shaped_matrix_ring,
    upper_triangular, MatrixShape, Slot,
};
pub use skew::{truncated_skew_poly, RingHom};

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::ring::{check_order, ElementId, FiniteRing};

/// `ℤ/nℤ` with the natural tables.
pub fn zmod(n: usize) -> Result<FiniteRing> {
    check_order(n as u128)?;
    let one = if n == 1 { 0 } else { 1 };
    Ok(FiniteRing::from_fns(
        n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        0,
        one,
        format!("Z({n})"),
    )?
    .with_labels((0..n).map(|i| i.to_string()).collect()))
}

/// Componentwise product; element `(a, b)` has index `a·|R₂| + b`.
pub fn direct_product(left: &FiniteRing, right: &FiniteRing) -> Result<FiniteRing> {
    let (n1, n2) = (left.order(), right.order());
    let n = check_order(n1 as u128 * n2 as u128)?;
    let split = |x: usize| (x / n2, x % n2);
    let ring = FiniteRing::from_fns(
        n,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            left.add(a, c) * n2 + right.add(b, d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            left.mul(a, c) * n2 + right.mul(b, d)
        },
        left.zero() * n2 + right.zero(),
        left.one() * n2 + right.one(),
        format!("Prod({}, {})", left.name(), right.name()),
    )?;
    let labels = (0..n)
        .map(|x| {
            let (a, b) = split(x);
            format!("({},{})", left.label(a), right.label(b))
        })
        .collect();
    Ok(ring.with_labels(labels))
}

/// Describes why `ideal` fails to be a two-sided ideal, or `None` if it is one.
pub(crate) fn two_sided_ideal_violation(ring: &FiniteRing, ideal: &SubsetMask) -> Option<String> {
    if ideal.universe() != ring.order() {
        return Some("mask width differs from ring order".into());
    }
    if !ideal.contains(ring.zero()) {
        return Some("does not contain zero".into());
    }
    for a in ideal.iter() {
        for b in ideal.iter() {
            let s = ring.add(a, b);
            if !ideal.contains(s) {
                return Some(format!("{a} + {b} = {s} lies outside"));
            }
        }
        for r in ring.elements() {
            let (x, y) = (ring.mul(r, a), ring.mul(a, r));
            if !ideal.contains(x) {
                return Some(format!("{r}·{a} = {x} lies outside"));
            }
            if !ideal.contains(y) {
                return Some(format!("{a}·{r} = {y} lies outside"));
            }
        }
    }
    None
}

/// Quotient by a two-sided ideal together with the projection.
///
/// Each coset is represented by its least element; cosets are indexed in
/// increasing order of representative.
pub fn quotient(ring: &FiniteRing, ideal: &SubsetMask) -> Result<(FiniteRing, RingHom)> {
    if let Some(why) = two_sided_ideal_violation(ring, ideal) {
        return Err(Error::NotAnIdeal(why));
    }
    let n = ring.order();
    let members = ideal.to_vec();
    let mut rep = vec![usize::MAX; n];
    for x in 0..n {
        if rep[x] == usize::MAX {
            for &i in &members {
                rep[ring.add(x, i)] = x;
            }
        }
    }
    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let mut class = vec![0usize; n];
    for x in 0..n {
        class[x] = reps.binary_search(&rep[x]).expect("representative is listed");
    }
    let m = reps.len();
    let q = FiniteRing::from_fns(
        m,
        |a, b| class[ring.add(reps[a], reps[b])],
        |a, b| class[ring.mul(reps[a], reps[b])],
        class[ring.zero()],
        class[ring.one()],
        format!("Quo({}, {})", ring.name(), gen_spec(&members)),
    )?;
    let labels = reps.iter().map(|&r| format!("{}+I", ring.label(r))).collect();
    let q = q.with_labels(labels);
    let hom = RingHom::new(ring, &q, class)?;
    Ok((q, hom))
}

fn gen_spec(elements: &[ElementId]) -> String {
    let list: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
    format!("gen({})", list.join(", "))
}

/// Corner ring `eRe` with identity `e`.
pub fn corner(ring: &FiniteRing, e: ElementId) -> Result<FiniteRing> {
    corner_with_embedding(ring, e).map(|(c, _)| c)
}

/// Corner ring plus the map from corner indices to indices of `ring`.
/// Corner elements are ordered by their index in `ring`.
pub fn corner_with_embedding(
    ring: &FiniteRing,
    e: ElementId,
) -> Result<(FiniteRing, Vec<ElementId>)> {
    if e >= ring.order() {
        return Err(Error::Element(e));
    }
    if ring.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    let carrier = SubsetMask::from_indices(ring.order(), ring.elements().map(|r| ring.mul3(e, r, e)));
    let name = format!("Corner({}, {e})", ring.name());
    induced_subring(ring, &carrier, e, name)
}

/// Restricts `ring`'s tables to `carrier`, which must be closed under + and ·
/// and contain `identity` acting as a two-sided unit on it.
fn induced_subring(
    ring: &FiniteRing,
    carrier: &SubsetMask,
    identity: ElementId,
    name: String,
) -> Result<(FiniteRing, Vec<ElementId>)> {
    let embed = carrier.to_vec();
    let mut local = vec![usize::MAX; ring.order()];
    for (i, &x) in embed.iter().enumerate() {
        local[x] = i;
    }
    let pull = |x: usize| -> Result<usize> {
        match local[x] {
            usize::MAX => Err(Error::Structure(format!("subset not closed: {x} escapes"))),
            i => Ok(i),
        }
    };
    let m = embed.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &embed {
        for &b in &embed {
            add.push(pull(ring.add(a, b))? as u32);
            mul.push(pull(ring.mul(a, b))? as u32);
        }
    }
    let sub = FiniteRing::from_tables(m, add, mul, pull(ring.zero())?, pull(identity)?, name)?;
    let labels = embed.iter().map(|&x| ring.label(x)).collect();
    Ok((sub.with_labels(labels), embed))
}

/// Smallest subring containing `generators` (and 0, 1).
pub fn subring_generated(ring: &FiniteRing, generators: &[ElementId]) -> Result<FiniteRing> {
    subring_with_embedding(ring, generators).map(|(s, _)| s)
}

pub fn subring_with_embedding(
    ring: &FiniteRing,
    generators: &[ElementId],
) -> Result<(FiniteRing, Vec<ElementId>)> {
    if let Some(&bad) = generators.iter().find(|&&g| g >= ring.order()) {
        return Err(Error::Element(bad));
    }
    let mut mask = SubsetMask::empty(ring.order());
    let mut members = Vec::new();
    let mut queue = Vec::new();
    for x in [ring.zero(), ring.one()].into_iter().chain(generators.iter().copied()) {
        if mask.insert(x) {
            members.push(x);
            queue.push(x);
        }
    }
    while let Some(x) = queue.pop() {
        let snapshot = members.clone();
        let mut candidates = vec![ring.neg(x)];
        for &y in &snapshot {
            candidates.extend([ring.add(x, y), ring.mul(x, y), ring.mul(y, x)]);
        }
        for c in candidates {
            if mask.insert(c) {
                members.push(c);
                queue.push(c);
            }
        }
    }
    let list: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
    let name = format!("Sub({}, [{}])", ring.name(), list.join(", "));
    induced_subring(ring, &mask, ring.one(), name)
}

/// The block ring `[[D, xD], [xD, D]]` over `D = F₂[x]/(x^{n+2})`, realized as
/// a subring of `M₂(D)`. Order `2^(4n+6)`: 64 for `n = 0`, 1024 for `n = 1`.
pub fn example_weak_symmetric_component(n: usize) -> Result<FiniteRing> {
    if n > 1 {
        return Err(Error::Size {
            requested: 1u128 << (4 * n + 6).min(127),
            max: crate::ring::max_order(),
        });
    }
    let d = truncated_skew_poly(&zmod(2)?, &RingHom::identity(&zmod(2)?), n + 2)?;
    // x·D: the polynomials with zero constant term
    let x = d.elements().find(|&e| d.label(e) == "x").expect("x is an element of D");
    let xd: Vec<ElementId> = {
        let m = SubsetMask::from_indices(d.order(), d.elements().map(|r| d.mul(x, r)));
        m.to_vec()
    };
    let all: Vec<ElementId> = d.elements().collect();
    let slot = |p: (usize, usize), values: &Vec<ElementId>| Slot {
        positions: vec![p],
        values: values.clone(),
    };
    let shape = MatrixShape {
        size: 2,
        slots: vec![
            slot((0, 0), &all),
            slot((0, 1), &xd),
            slot((1, 0), &xd),
            slot((1, 1), &all),
        ],
    };
    shaped_matrix_ring(&d, &shape, format!("WSC({n})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{jacobson_radical, nilpotents};
    use crate::ring::verify_axioms;

    #[test]
    fn zmod_basics() {
        let z1 = zmod(1).unwrap();
        assert!(z1.is_zero_ring());
        assert_eq!(z1.zero(), z1.one());
        assert_eq!(zmod(2).unwrap().order(), 2);
        assert_eq!(nilpotents(&zmod(4).unwrap()).to_vec(), vec![0, 2]);
    }

    #[test]
    fn product_of_z2_and_z3_matches_z6_under_crt() {
        let p = direct_product(&zmod(2).unwrap(), &zmod(3).unwrap()).unwrap();
        let z6 = zmod(6).unwrap();
        // z6 element k sits at (k mod 2, k mod 3) = (k%2)*3 + k%3
        let map: Vec<_> = (0..6).map(|k| (k % 2) * 3 + k % 3).collect();
        assert!(z6.is_relabeling_of(&p, &map));
    }

    #[test]
    fn product_with_zero_ring_is_identity() {
        let z4 = zmod(4).unwrap();
        assert!(direct_product(&z4, &zmod(1).unwrap()).unwrap().same_tables(&z4));
    }

    #[test]
    fn product_radical() {
        let p = direct_product(&zmod(4).unwrap(), &zmod(2).unwrap()).unwrap();
        // {0,2} × {0} = indices 0 and 4
        assert_eq!(jacobson_radical(&p).to_vec(), vec![0, 4]);
    }

    #[test]
    fn quotients() {
        let z4 = zmod(4).unwrap();
        let (q, proj) = quotient(&z4, &SubsetMask::from_indices(4, [0, 2])).unwrap();
        assert!(q.same_tables(&zmod(2).unwrap()));
        assert_eq!(proj.map(), &[0, 1, 0, 1]);
        let (same, _) = quotient(&z4, &SubsetMask::from_indices(4, [0])).unwrap();
        assert!(same.same_tables(&z4));
        let err = quotient(&z4, &SubsetMask::from_indices(4, [0, 1])).unwrap_err();
        assert!(matches!(err, Error::NotAnIdeal(_)));
    }

    #[test]
    fn projection_kernel_is_the_ideal() {
        let t = upper_triangular(&zmod(2).unwrap(), 2).unwrap();
        let j = jacobson_radical(&t);
        let (q, proj) = quotient(&t, &j).unwrap();
        let kernel: Vec<_> = t.elements().filter(|&x| proj.apply(x) == q.zero()).collect();
        assert_eq!(kernel, j.to_vec());
        // T₂(ℤ₂)/J ≅ ℤ₂×ℤ₂; diagonal (a,b) ↦ quotient class of [[a,0],[0,b]]
        let z2 = zmod(2).unwrap();
        let prod = direct_product(&z2, &z2).unwrap();
        let shape = MatrixShape::upper_triangular(&z2, 2);
        let map: Vec<_> = (0..4)
            .map(|x| {
                let m = matrix_element(&t, &z2, &shape, &[((1, 1), x / 2), ((2, 2), x % 2)]).unwrap();
                proj.apply(m)
            })
            .collect();
        assert!(prod.is_relabeling_of(&q, &map));
    }

    #[test]
    fn corners() {
        let z6 = zmod(6).unwrap();
        let (c, embed) = corner_with_embedding(&z6, z6.one()).unwrap();
        assert!(c.same_tables(&z6));
        assert_eq!(embed, (0..6).collect::<Vec<_>>());
        assert!(matches!(corner(&z6, 2), Err(Error::NotIdempotent(2))));

        let z2 = zmod(2).unwrap();
        let m2 = matrix_ring(&z2, 2).unwrap();
        let e11 = matrix_units(&z2, 2, &[(1, 1)]).unwrap();
        assert!(corner(&m2, e11).unwrap().same_tables(&z2));

        let t2 = upper_triangular(&z2, 2).unwrap();
        let e = matrix_element(&t2, &z2, &MatrixShape::upper_triangular(&z2, 2), &[((1, 1), 1)]).unwrap();
        assert!(corner(&t2, e).unwrap().same_tables(&z2));
    }

    #[test]
    fn corner_multiplication_is_restriction() {
        let m2 = matrix_ring(&zmod(3).unwrap(), 2).unwrap();
        let e = matrix_units(&zmod(3).unwrap(), 2, &[(2, 2)]).unwrap();
        let (c, embed) = corner_with_embedding(&m2, e).unwrap();
        for a in c.elements() {
            for b in c.elements() {
                assert_eq!(embed[c.mul(a, b)], m2.mul(embed[a], embed[b]));
            }
        }
    }

    #[test]
    fn subrings() {
        let z6 = zmod(6).unwrap();
        assert_eq!(subring_generated(&z6, &[z6.one()]).unwrap().order(), 6);
        assert_eq!(subring_generated(&z6, &[3]).unwrap().order(), 6);
        let z2 = zmod(2).unwrap();
        let m2 = matrix_ring(&z2, 2).unwrap();
        let gens: Vec<_> = [(1, 1), (1, 2), (2, 2)]
            .iter()
            .map(|&p| matrix_units(&z2, 2, &[p]).unwrap())
            .collect();
        let (s, embed) = subring_with_embedding(&m2, &gens).unwrap();
        assert_eq!(s.order(), 8);
        assert!(verify_axioms(&s).is_ok());
        // every member is upper triangular
        assert!(embed.iter().all(|&x| m2.label(x).starts_with("[[") && m2.label(x).contains("],[0,")));
    }

    #[test]
    fn weak_symmetric_component_orders() {
        let r0 = example_weak_symmetric_component(0).unwrap();
        assert_eq!(r0.order(), 64);
        assert!(verify_axioms(&r0).is_ok());
        assert!(example_weak_symmetric_component(2).is_err());
    }
}
