//! Matrix-shaped rings over a base ring: full, upper triangular, constant
//! diagonal, and block subrings with restricted entries.
//!
//! Elements are encoded in mixed radix over "slots". A slot is a group of
//! matrix positions that always carry the same base-ring value (the diagonal
//! of a constant-diagonal matrix is one slot) together with the list of values
//! it may take. The first slot is the most significant digit, so index order
//! agrees with lexicographic order of the slot values.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{check_order, ElementId, FiniteRing};

#[derive(Clone, Debug)]
pub struct Slot {
    pub positions: Vec<(usize, usize)>,
    /// Admissible base-ring elements, in digit order.
    pub values: Vec<ElementId>,
}

/// Description of which `k × k` matrices over a base ring form the carrier.
#[derive(Clone, Debug)]
pub struct MatrixShape {
    pub size: usize,
    pub slots: Vec<Slot>,
}

impl MatrixShape {
    pub fn full(base: &FiniteRing, k: usize) -> Self {
        let all: Vec<_> = base.elements().collect();
        Self {
            size: k,
            slots: (0..k)
                .flat_map(|i| (0..k).map(move |j| (i, j)))
                .map(|p| Slot {
                    positions: vec![p],
                    values: all.clone(),
                })
                .collect(),
        }
    }

    pub fn upper_triangular(base: &FiniteRing, k: usize) -> Self {
        let all: Vec<_> = base.elements().collect();
        Self {
            size: k,
            slots: (0..k)
                .flat_map(|i| (i..k).map(move |j| (i, j)))
                .map(|p| Slot {
                    positions: vec![p],
                    values: all.clone(),
                })
                .collect(),
        }
    }

    pub fn constant_diagonal(base: &FiniteRing, k: usize) -> Self {
        let all: Vec<_> = base.elements().collect();
        let mut slots = vec![Slot {
            positions: (0..k).map(|i| (i, i)).collect(),
            values: all.clone(),
        }];
        slots.extend(
            (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .map(|p| Slot {
                    positions: vec![p],
                    values: all.clone(),
                }),
        );
        Self { size: k, slots }
    }

    fn order(&self) -> u128 {
        self.slots
            .iter()
            .try_fold(1u128, |acc, s| acc.checked_mul(s.values.len() as u128))
            .unwrap_or(u128::MAX)
    }
}

struct Codec<'a> {
    base: &'a FiniteRing,
    shape: &'a MatrixShape,
    radix: Vec<usize>,
    lookup: Vec<Vec<Option<usize>>>,
}

impl<'a> Codec<'a> {
    fn new(base: &'a FiniteRing, shape: &'a MatrixShape) -> Self {
        let radix = shape.slots.iter().map(|s| s.values.len()).collect();
        let lookup = shape
            .slots
            .iter()
            .map(|s| {
                let mut l = vec![None; base.order()];
                for (d, &v) in s.values.iter().enumerate() {
                    l[v] = Some(d);
                }
                l
            })
            .collect();
        Self {
            base,
            shape,
            radix,
            lookup,
        }
    }

    fn decode(&self, mut index: usize) -> Vec<ElementId> {
        let k = self.shape.size;
        let mut m = vec![self.base.zero(); k * k];
        for (slot, &r) in self.shape.slots.iter().zip(&self.radix).rev() {
            let v = slot.values[index % r];
            index /= r;
            for &(i, j) in &slot.positions {
                m[i * k + j] = v;
            }
        }
        m
    }

    fn encode(&self, m: &[ElementId]) -> Option<usize> {
        let k = self.shape.size;
        let mut covered = vec![false; k * k];
        let mut index = 0usize;
        for ((slot, &r), lookup) in self.shape.slots.iter().zip(&self.radix).zip(&self.lookup) {
            let (i0, j0) = slot.positions[0];
            let v = m[i0 * k + j0];
            for &(i, j) in &slot.positions {
                if m[i * k + j] != v {
                    return None;
                }
                covered[i * k + j] = true;
            }
            index = index * r + lookup[v]?;
        }
        let zero = self.base.zero();
        m.iter()
            .zip(&covered)
            .all(|(&v, &c)| c || v == zero)
            .then_some(index)
    }

    fn mat_add(&self, a: &[ElementId], b: &[ElementId]) -> Vec<ElementId> {
        a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)).collect()
    }

    fn mat_mul(&self, a: &[ElementId], b: &[ElementId]) -> Vec<ElementId> {
        let k = self.shape.size;
        let r = self.base;
        let mut out = vec![r.zero(); k * k];
        for i in 0..k {
            for j in 0..k {
                let mut acc = r.zero();
                for t in 0..k {
                    acc = r.add(acc, r.mul(a[i * k + t], b[t * k + j]));
                }
                out[i * k + j] = acc;
            }
        }
        out
    }

    fn label(&self, m: &[ElementId]) -> String {
        let k = self.shape.size;
        let rows: Vec<String> = (0..k)
            .map(|i| {
                let row: Vec<String> = (0..k).map(|j| self.base.label(m[i * k + j])).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Ring of matrices of the given shape. Fails if the shape's carrier is not
/// closed under matrix addition and multiplication or lacks the identity.
pub fn shaped_matrix_ring(
    base: &FiniteRing,
    shape: &MatrixShape,
    name: impl Into<String>,
) -> Result<FiniteRing> {
    let n = check_order(shape.order())?;
    let codec = Codec::new(base, shape);
    let k = shape.size;
    let elems: Vec<Vec<ElementId>> = (0..n).map(|i| codec.decode(i)).collect();

    let zero_m = vec![base.zero(); k * k];
    let mut one_m = zero_m.clone();
    for i in 0..k {
        one_m[i * k + i] = base.one();
    }
    let not_closed = |what: &str| Error::Structure(format!("matrix shape is not closed under {what}"));
    let zero = codec.encode(&zero_m).ok_or_else(|| not_closed("zero"))?;
    let one = codec.encode(&one_m).ok_or_else(|| not_closed("identity"))?;

    let rows: Vec<(Vec<u32>, Vec<u32>)> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut add_row = Vec::with_capacity(n);
            let mut mul_row = Vec::with_capacity(n);
            for b in 0..n {
                let s = codec.encode(&codec.mat_add(&elems[a], &elems[b]));
                let p = codec.encode(&codec.mat_mul(&elems[a], &elems[b]));
                match (s, p) {
                    (Some(s), Some(p)) => {
                        add_row.push(s as u32);
                        mul_row.push(p as u32);
                    }
                    _ => return Err(not_closed("the ring operations")),
                }
            }
            Ok((add_row, mul_row))
        })
        .collect::<Result<_>>()?;
    let (add, mul): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let labels = elems.iter().map(|m| codec.label(m)).collect();
    Ok(FiniteRing::from_tables(n, add.concat(), mul.concat(), zero, one, name)?.with_labels(labels))
}

/// Full matrix ring `M_k(R)`; index = row-major base-|R| digits of the entries.
pub fn matrix_ring(base: &FiniteRing, k: usize) -> Result<FiniteRing> {
    positive(k)?;
    shaped_matrix_ring(
        base,
        &MatrixShape::full(base, k),
        format!("M({k}, {})", base.name()),
    )
}

/// Upper triangular matrices `T_k(R)`.
pub fn upper_triangular(base: &FiniteRing, k: usize) -> Result<FiniteRing> {
    positive(k)?;
    shaped_matrix_ring(
        base,
        &MatrixShape::upper_triangular(base, k),
        format!("T({k}, {})", base.name()),
    )
}

/// Upper triangular matrices with a constant diagonal. The diagonal value is
/// the most significant digit.
pub fn constant_diagonal(base: &FiniteRing, k: usize) -> Result<FiniteRing> {
    positive(k)?;
    shaped_matrix_ring(
        base,
        &MatrixShape::constant_diagonal(base, k),
        format!("CD({k}, {})", base.name()),
    )
}

fn positive(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::Structure("matrix size must be positive".into()))
    } else {
        Ok(())
    }
}

/// Element of a matrix-family ring with the given `(row, col)` entries set
/// (1-based, matching the usual `E_ij` notation) and everything else zero.
pub fn matrix_element(
    ring: &FiniteRing,
    base: &FiniteRing,
    shape: &MatrixShape,
    entries: &[((usize, usize), ElementId)],
) -> Option<ElementId> {
    let k = shape.size;
    let mut m = vec![base.zero(); k * k];
    for &((i, j), v) in entries {
        m[(i - 1) * k + (j - 1)] = v;
    }
    let idx = Codec::new(base, shape).encode(&m)?;
    (idx < ring.order()).then_some(idx)
}

/// Sum of matrix units `E_ij` (1-based) with entry `1` in a full matrix ring.
pub fn matrix_units(base: &FiniteRing, k: usize, units: &[(usize, usize)]) -> Option<ElementId> {
    let shape = MatrixShape::full(base, k);
    let mut m = vec![base.zero(); k * k];
    for &(i, j) in units {
        let cell = &mut m[(i - 1) * k + (j - 1)];
        *cell = base.add(*cell, base.one());
    }
    Codec::new(base, &shape).encode(&m)
}
