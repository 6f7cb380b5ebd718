use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::ring::{parse_indices, ElementId, FiniteRing};

use super::RingHom;

/// A finite `(R₁, R₂)`-bimodule given by explicit tables, optionally carrying
/// an internal (not necessarily unital) multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    order: usize,
    left_order: usize,
    right_order: usize,
    add: Vec<u32>,
    /// `left_act[r * m + x] = r·x`
    left_act: Vec<u32>,
    /// `right_act[x * |R₂| + s] = x·s`
    right_act: Vec<u32>,
    internal_mul: Option<Vec<u32>>,
    zero: ElementId,
    name: String,
}

impl Bimodule {
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        order: usize,
        left_order: usize,
        right_order: usize,
        add: Vec<u32>,
        left_act: Vec<u32>,
        right_act: Vec<u32>,
        internal_mul: Option<Vec<u32>>,
        name: impl Into<String>,
    ) -> Result<Self> {
        let shape_err = |what: &str, want: usize, got: usize| {
            Error::Structure(format!("bimodule {what} table: expected {want} entries, got {got}"))
        };
        if order == 0 {
            return Err(Error::Structure("bimodule carrier must be nonempty".into()));
        }
        if add.len() != order * order {
            return Err(shape_err("add", order * order, add.len()));
        }
        if left_act.len() != left_order * order {
            return Err(shape_err("left action", left_order * order, left_act.len()));
        }
        if right_act.len() != order * right_order {
            return Err(shape_err("right action", order * right_order, right_act.len()));
        }
        if let Some(im) = &internal_mul {
            if im.len() != order * order {
                return Err(shape_err("internal multiplication", order * order, im.len()));
            }
        }
        let all = add
            .iter()
            .chain(&left_act)
            .chain(&right_act)
            .chain(internal_mul.iter().flatten());
        if let Some(bad) = all.clone().find(|&&v| v as usize >= order) {
            return Err(Error::Structure(format!("bimodule entry {bad} out of range")));
        }
        let zero = (0..order)
            .find(|&z| (0..order).all(|x| add[z * order + x] as usize == x))
            .ok_or_else(|| Error::Bimodule("addition has no identity".into()))?;
        Ok(Self {
            order,
            left_order,
            right_order,
            add,
            left_act,
            right_act,
            internal_mul,
            zero,
            name: name.into(),
        })
    }

    /// The zero bimodule over any pair of rings.
    pub fn zero_module(left: &FiniteRing, right: &FiniteRing) -> Self {
        Self {
            order: 1,
            left_order: left.order(),
            right_order: right.order(),
            add: vec![0],
            left_act: vec![0; left.order()],
            right_act: vec![0; right.order()],
            internal_mul: Some(vec![0]),
            zero: 0,
            name: "0".into(),
        }
    }

    /// `R` as an `(R, R)`-bimodule with its own multiplication.
    pub fn regular(ring: &FiniteRing) -> Self {
        Self::from_ideal(ring, &SubsetMask::full(ring.order()))
            .expect("the whole ring is an ideal")
            .with_name(format!("reg({})", ring.name()))
    }

    /// A two-sided ideal of `R` as an `(R, R)`-bimodule and general ring.
    /// Carrier elements are ordered by their index in `R`.
    pub fn from_ideal(ring: &FiniteRing, ideal: &SubsetMask) -> Result<Self> {
        if let Some(why) = super::two_sided_ideal_violation(ring, ideal) {
            return Err(Error::NotAnIdeal(why));
        }
        let members = ideal.to_vec();
        let m = members.len();
        let mut local = vec![0u32; ring.order()];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i as u32;
        }
        let mut add = Vec::with_capacity(m * m);
        let mut internal = Vec::with_capacity(m * m);
        for &a in &members {
            for &b in &members {
                add.push(local[ring.add(a, b)]);
                internal.push(local[ring.mul(a, b)]);
            }
        }
        let left_act = ring
            .elements()
            .flat_map(|r| members.iter().map(move |&x| (r, x)))
            .map(|(r, x)| local[ring.mul(r, x)])
            .collect();
        let right_act = members
            .iter()
            .flat_map(|&x| ring.elements().map(move |s| (x, s)))
            .map(|(x, s)| local[ring.mul(x, s)])
            .collect();
        let list: Vec<String> = members.iter().map(|x| x.to_string()).collect();
        Self::from_tables(
            m,
            ring.order(),
            ring.order(),
            add,
            left_act,
            right_act,
            Some(internal),
            format!("ideal({}, [{}])", ring.name(), list.join(", ")),
        )
    }

    /// Changes the left scalars along `hom: S → R₁`.
    pub fn restrict_left(&self, hom: &RingHom) -> Result<Self> {
        if hom.codomain_order() != self.left_order {
            return Err(Error::Bimodule("homomorphism codomain is not the left ring".into()));
        }
        let left_act = hom
            .map()
            .iter()
            .flat_map(|&r| (0..self.order).map(move |x| (r, x)))
            .map(|(r, x)| self.left_act[r * self.order + x])
            .collect();
        Ok(Self {
            left_order: hom.map().len(),
            left_act,
            name: format!("{}|left", self.name),
            ..self.clone()
        })
    }

    /// Changes the right scalars along `hom: S → R₂`.
    pub fn restrict_right(&self, hom: &RingHom) -> Result<Self> {
        if hom.codomain_order() != self.right_order {
            return Err(Error::Bimodule("homomorphism codomain is not the right ring".into()));
        }
        let s = hom.map().len();
        let right_act = (0..self.order)
            .flat_map(|x| hom.map().iter().map(move |&r| (x, r)))
            .map(|(x, r)| self.right_act[x * self.right_order + r])
            .collect();
        Ok(Self {
            right_order: s,
            right_act,
            name: format!("{}|right", self.name),
            ..self.clone()
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn without_internal_mul(mut self) -> Self {
        self.internal_mul = None;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn left_order(&self) -> usize {
        self.left_order
    }

    pub fn right_order(&self) -> usize {
        self.right_order
    }

    pub fn zero(&self) -> ElementId {
        self.zero
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_internal_mul(&self) -> bool {
        self.internal_mul.is_some()
    }

    #[inline]
    pub fn add(&self, x: ElementId, y: ElementId) -> ElementId {
        self.add[x * self.order + y] as usize
    }

    #[inline]
    pub fn act_left(&self, r: ElementId, x: ElementId) -> ElementId {
        self.left_act[r * self.order + x] as usize
    }

    #[inline]
    pub fn act_right(&self, x: ElementId, s: ElementId) -> ElementId {
        self.right_act[x * self.right_order + s] as usize
    }

    /// Internal product; panics if the bimodule has none.
    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.internal_mul.as_ref().expect("bimodule has no internal multiplication")
            [x * self.order + y] as usize
    }

    /// Checks the abelian group, the unital biadditive associative actions,
    /// and, when present, the internal multiplication laws.
    pub fn validate(&self, left: &FiniteRing, right: &FiniteRing) -> Result<()> {
        let bad = |msg: String| Err(Error::Bimodule(msg));
        if left.order() != self.left_order || right.order() != self.right_order {
            return bad(format!(
                "acting rings have orders ({}, {}), tables expect ({}, {})",
                left.order(),
                right.order(),
                self.left_order,
                self.right_order
            ));
        }
        let m = self.order;
        for x in 0..m {
            if !(0..m).any(|y| self.add(x, y) == self.zero) {
                return bad(format!("{x} has no additive inverse"));
            }
            for y in 0..m {
                if self.add(x, y) != self.add(y, x) {
                    return bad(format!("addition not commutative at ({x}, {y})"));
                }
                for z in 0..m {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return bad(format!("addition not associative at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        self.validate_side(left, true)?;
        self.validate_side(right, false)?;
        for r in left.elements() {
            for x in 0..m {
                for s in right.elements() {
                    if self.act_right(self.act_left(r, x), s) != self.act_left(r, self.act_right(x, s)) {
                        return bad(format!("(r·x)·s ≠ r·(x·s) at ({r}, {x}, {s})"));
                    }
                }
            }
        }
        if self.internal_mul.is_some() {
            self.validate_internal(left, right)?;
        }
        Ok(())
    }

    fn validate_side(&self, ring: &FiniteRing, is_left: bool) -> Result<()> {
        let act = |r: usize, x: usize| {
            if is_left {
                self.act_left(r, x)
            } else {
                self.act_right(x, r)
            }
        };
        let side = if is_left { "left" } else { "right" };
        let bad = |msg: String| Err(Error::Bimodule(format!("{side} action: {msg}")));
        for x in 0..self.order {
            if act(ring.one(), x) != x {
                return bad(format!("identity does not act trivially on {x}"));
            }
        }
        for r in ring.elements() {
            for x in 0..self.order {
                for y in 0..self.order {
                    if act(r, self.add(x, y)) != self.add(act(r, x), act(r, y)) {
                        return bad(format!("not additive in the module at ({r}, {x}, {y})"));
                    }
                }
                for s in ring.elements() {
                    if act(ring.add(r, s), x) != self.add(act(r, x), act(s, x)) {
                        return bad(format!("not additive in the ring at ({r}, {s}, {x})"));
                    }
                    // left: (rs)x = r(sx); right: x(sr) = (xs)r
                    let lhs = act(ring.mul(r, s), x);
                    let rhs = if is_left { act(r, act(s, x)) } else { act(s, act(r, x)) };
                    if lhs != rhs {
                        return bad(format!("not associative at ({r}, {s}, {x})"));
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_internal(&self, left: &FiniteRing, right: &FiniteRing) -> Result<()> {
        let m = self.order;
        let bad = |msg: String| Err(Error::Bimodule(format!("internal multiplication: {msg}")));
        for a in 0..m {
            for w in 0..m {
                for v in 0..m {
                    if self.mul(self.mul(a, w), v) != self.mul(a, self.mul(w, v)) {
                        return bad(format!("not associative at ({a}, {w}, {v})"));
                    }
                    if self.mul(a, self.add(w, v)) != self.add(self.mul(a, w), self.mul(a, v)) {
                        return bad(format!("not left distributive at ({a}, {w}, {v})"));
                    }
                    if self.mul(self.add(a, w), v) != self.add(self.mul(a, v), self.mul(w, v)) {
                        return bad(format!("not right distributive at ({a}, {w}, {v})"));
                    }
                }
                for r in right.elements() {
                    // (aw)r = a(wr)
                    if self.act_right(self.mul(a, w), r) != self.mul(a, self.act_right(w, r)) {
                        return bad(format!("(aw)r ≠ a(wr) at ({a}, {w}, {r})"));
                    }
                }
                if self.left_order == self.right_order {
                    for r in right.elements() {
                        // (ar)w = a(rw), only meaningful when both sides act by the same ring
                        if self.mul(self.act_right(a, r), w) != self.mul(a, self.act_left(r, w)) {
                            return bad(format!("(ar)w ≠ a(rw) at ({a}, {r}, {w})"));
                        }
                    }
                }
                for r in left.elements() {
                    // (ra)w = r(aw)
                    if self.mul(self.act_left(r, a), w) != self.act_left(r, self.mul(a, w)) {
                        return bad(format!("(ra)w ≠ r(aw) at ({r}, {a}, {w})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Serializes to the `bimodule v1` text record.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "bimodule v1 {} {} {} {}\n",
            self.order,
            self.left_order,
            self.right_order,
            u8::from(self.internal_mul.is_some())
        );
        let mut push = |table: &[u32], width: usize| {
            for row in table.chunks(width.max(1)) {
                let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        };
        push(&self.add, self.order);
        push(&self.left_act, self.order);
        push(&self.right_act, self.right_order);
        if let Some(im) = &self.internal_mul {
            push(im, self.order);
        }
        out
    }

    pub fn from_text(text: &str, name: impl Into<String>) -> Result<Self> {
        let text = text.trim_start();
        let (header, body) = text.split_once('\n').unwrap_or((text, ""));
        let fields: Vec<&str> = header.split_ascii_whitespace().collect();
        if fields.len() != 6 || fields[0] != "bimodule" || fields[1] != "v1" {
            return Err(Error::Format(
                "expected header `bimodule v1 <m> <|R1|> <|R2|> <has_internal_mul>`".into(),
            ));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Format(format!("bad number `{s}` in bimodule header")))
        };
        let (m, r1, r2) = (num(fields[2])?, num(fields[3])?, num(fields[4])?);
        let has_mul = match fields[5] {
            "0" | "false" => false,
            "1" | "true" => true,
            other => return Err(Error::Format(format!("bad internal-mul flag `{other}`"))),
        };
        let values = parse_indices(body)?;
        let expected = m * m + r1 * m + m * r2 + if has_mul { m * m } else { 0 };
        if values.len() != expected {
            return Err(Error::Structure(format!(
                "bimodule body: expected {expected} entries, found {}",
                values.len()
            )));
        }
        let (add, rest) = values.split_at(m * m);
        let (left, rest) = rest.split_at(r1 * m);
        let (right, rest) = rest.split_at(m * r2);
        let internal = has_mul.then(|| rest.to_vec());
        Self::from_tables(m, r1, r2, add.to_vec(), left.to_vec(), right.to_vec(), internal, name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zmod;

    #[test]
    fn regular_and_ideal_bimodules_validate() {
        let z4 = zmod(4).unwrap();
        Bimodule::regular(&z4).validate(&z4, &z4).unwrap();
        let two = Bimodule::from_ideal(&z4, &SubsetMask::from_indices(4, [0, 2])).unwrap();
        assert_eq!(two.order(), 2);
        two.validate(&z4, &z4).unwrap();
    }

    #[test]
    fn text_round_trip() {
        let z4 = zmod(4).unwrap();
        let two = Bimodule::from_ideal(&z4, &SubsetMask::from_indices(4, [0, 2])).unwrap();
        let text = two.to_text();
        let back = Bimodule::from_text(&text, two.name()).unwrap();
        assert_eq!(back, two);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn broken_action_is_rejected() {
        let z2 = zmod(2).unwrap();
        // 1·x = 0 violates unitality
        let m = Bimodule::from_tables(2, 2, 2, vec![0, 1, 1, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 1], None, "bad")
            .unwrap();
        assert!(matches!(m.validate(&z2, &z2), Err(Error::Bimodule(_))));
    }

    #[test]
    fn restriction_along_reduction() {
        let z4 = zmod(4).unwrap();
        let z2 = zmod(2).unwrap();
        let (_, proj) = crate::constructions::quotient(&z4, &SubsetMask::from_indices(4, [0, 2])).unwrap();
        let m = Bimodule::regular(&z2).without_internal_mul().restrict_left(&proj).unwrap();
        m.validate(&z4, &z2).unwrap();
        assert_eq!(m.act_left(3, 1), 1);
        assert_eq!(m.act_left(2, 1), 0);
    }
}
