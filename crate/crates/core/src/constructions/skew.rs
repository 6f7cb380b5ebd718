use crate::error::{Error, Result};
use crate::ring::{check_order, ElementId, FiniteRing};

/// A unital ring homomorphism, stored as its element table. The rings
/// themselves are not retained; the map was checked against them at
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    map: Vec<ElementId>,
    codomain_order: usize,
}

impl RingHom {
    /// Validates that `map` preserves +, · and 1.
    pub fn new(domain: &FiniteRing, codomain: &FiniteRing, map: Vec<ElementId>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(Error::NotAHomomorphism(format!(
                "map has {} entries, domain has {}",
                map.len(),
                domain.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&m| m >= codomain.order()) {
            return Err(Error::NotAHomomorphism(format!("image {bad} out of range")));
        }
        if map[domain.one()] != codomain.one() {
            return Err(Error::NotAHomomorphism("identity not preserved".into()));
        }
        for a in domain.elements() {
            for b in domain.elements() {
                if map[domain.add(a, b)] != codomain.add(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!("addition fails at ({a}, {b})")));
                }
                if map[domain.mul(a, b)] != codomain.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "multiplication fails at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self {
            map,
            codomain_order: codomain.order(),
        })
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        Self {
            map: ring.elements().collect(),
            codomain_order: ring.order(),
        }
    }

    /// The factor swap `(a, b) ↦ (b, a)` on a product `S × S` whose factor
    /// has order `factor_order`, under the product's `a·|S| + b` indexing.
    pub fn swap_factors(ring: &FiniteRing, factor_order: usize) -> Result<Self> {
        if factor_order * factor_order != ring.order() {
            return Err(Error::NotAHomomorphism(format!(
                "order {} is not the square of {factor_order}",
                ring.order()
            )));
        }
        let map = ring
            .elements()
            .map(|x| (x % factor_order) * factor_order + x / factor_order)
            .collect();
        Self::new(ring, ring, map)
    }

    /// Parses a `hom v1 <n>` record followed by `n` image indices.
    pub fn from_text(domain: &FiniteRing, codomain: &FiniteRing, text: &str) -> Result<Self> {
        let mut tokens = text.split_ascii_whitespace();
        if tokens.next() != Some("hom") || tokens.next() != Some("v1") {
            return Err(Error::Format("expected header `hom v1`".into()));
        }
        let n: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Format("missing map length".into()))?;
        let map: Vec<usize> = tokens
            .map(|t| t.parse().map_err(|_| Error::Format(format!("bad index `{t}`"))))
            .collect::<Result<_>>()?;
        if map.len() != n {
            return Err(Error::Format(format!("expected {n} images, found {}", map.len())));
        }
        Self::new(domain, codomain, map)
    }

    pub fn to_text(&self) -> String {
        let list: Vec<String> = self.map.iter().map(|m| m.to_string()).collect();
        format!("hom v1 {}\n{}\n", self.map.len(), list.join(" "))
    }

    #[inline]
    pub fn apply(&self, a: ElementId) -> ElementId {
        self.map[a]
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }
}

/// `R[x; Ψ] / (x^k)`: polynomials `Σ aᵢxⁱ` with `i < k`, `x·r = Ψ(r)·x`
/// and `x^k = 0`.
///
/// Coefficient vectors are encoded with the constant term as the most
/// significant base-|R| digit.
pub fn truncated_skew_poly(ring: &FiniteRing, psi: &RingHom, k: usize) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::Structure("truncation degree must be at least 1".into()));
    }
    if psi.map.len() != ring.order() || psi.codomain_order != ring.order() {
        return Err(Error::NotAHomomorphism("endomorphism does not match the ring".into()));
    }
    // Re-validate: the map may have been built against a different ring.
    let psi = RingHom::new(ring, ring, psi.map.clone())?;
    let r = ring.order();
    let n = check_order((r as u128).checked_pow(k as u32).unwrap_or(u128::MAX))?;

    // psi_pow[i][a] = Ψ^i(a)
    let mut psi_pow: Vec<Vec<ElementId>> = vec![ring.elements().collect()];
    for i in 1..k {
        let prev = &psi_pow[i - 1];
        psi_pow.push(prev.iter().map(|&a| psi.apply(a)).collect());
    }

    let decode = |mut x: usize| -> Vec<ElementId> {
        let mut c = vec![0; k];
        for slot in c.iter_mut().rev() {
            *slot = x % r;
            x /= r;
        }
        c
    };
    let encode = |c: &[ElementId]| c.iter().fold(0usize, |acc, &d| acc * r + d);
    let coeffs: Vec<Vec<ElementId>> = (0..n).map(decode).collect();

    let zero_poly = vec![ring.zero(); k];
    let mut one_poly = zero_poly.clone();
    one_poly[0] = ring.one();

    let poly = FiniteRing::from_fns(
        n,
        |a, b| {
            let s: Vec<_> = coeffs[a]
                .iter()
                .zip(&coeffs[b])
                .map(|(&x, &y)| ring.add(x, y))
                .collect();
            encode(&s)
        },
        |a, b| {
            let (pa, pb) = (&coeffs[a], &coeffs[b]);
            let mut out = zero_poly.clone();
            for i in 0..k {
                for j in 0..k - i {
                    let term = ring.mul(pa[i], psi_pow[i][pb[j]]);
                    out[i + j] = ring.add(out[i + j], term);
                }
            }
            encode(&out)
        },
        encode(&zero_poly),
        encode(&one_poly),
        format!("SkewTrunc({}, {}, {k})", ring.name(), hom_label(ring, &psi)),
    )?;
    let labels = coeffs.iter().map(|c| poly_label(ring, c)).collect();
    Ok(poly.with_labels(labels))
}

fn hom_label(ring: &FiniteRing, psi: &RingHom) -> String {
    if psi.map.iter().enumerate().all(|(i, &m)| i == m) {
        return "id".into();
    }
    let side = (ring.order() as f64).sqrt().round() as usize;
    if side * side == ring.order()
        && psi.map.iter().enumerate().all(|(x, &m)| m == (x % side) * side + x / side)
    {
        return "swap".into();
    }
    let list: Vec<String> = psi.map.iter().map(|m| m.to_string()).collect();
    format!("hom[{}]", list.join(" "))
}

fn poly_label(ring: &FiniteRing, c: &[ElementId]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != ring.zero())
        .map(|(i, &a)| {
            let coeff = ring.label(a);
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            match (i, a == ring.one()) {
                (0, _) => coeff,
                (_, true) => var,
                _ => format!("{coeff}{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        ring.label(ring.zero())
    } else {
        terms.join("+")
    }
}
