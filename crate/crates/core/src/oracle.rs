//! Brute-force plethysm by monomial substitution.
//!
//! `s_μ(x_1..x_n)` is expanded into its monomials (one per semistandard
//! tableau, so repeated monomials carry multiplicity), those monomials are
//! substituted as the variables of `s_λ`, and the resulting symmetric
//! polynomial is split into Schur polynomials by peeling off the
//! lexicographically leading term. Nothing here touches characters or the
//! Littlewood–Richardson rule, so it checks the main engine independently.
//!
//! A symmetric polynomial is determined by its coefficients on weakly
//! decreasing exponent vectors, and only those are stored.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::partition::Partition;

type Exponent = Vec<u16>;

/// Calls `visit` with the row-major entries (values in `0..letters`) of
/// every semistandard tableau of the given shape.
pub fn for_each_ssyt<F: FnMut(&[usize])>(shape: &Partition, letters: usize, visit: &mut F) {
    let heights = shape.conjugate();
    let mut boxes = Vec::with_capacity(shape.size());
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            // letters must leave room for the strictly larger entries below
            let below = heights.part(c) - r - 1;
            boxes.push(Slot { left: c > 0, above: (r > 0).then(|| boxes.len() - shape.part(r - 1)), below });
        }
    }
    let mut fill = vec![0usize; boxes.len()];
    ssyt_rec(&boxes, letters, 0, &mut fill, visit);
}

struct Slot {
    left: bool,
    above: Option<usize>,
    below: usize,
}

fn ssyt_rec<F: FnMut(&[usize])>(boxes: &[Slot], letters: usize, k: usize, fill: &mut Vec<usize>, visit: &mut F) {
    if k == boxes.len() {
        visit(fill);
        return;
    }
    let slot = &boxes[k];
    let mut lo = if slot.left { fill[k - 1] } else { 0 };
    if let Some(a) = slot.above {
        lo = lo.max(fill[a] + 1);
    }
    if letters <= slot.below {
        return;
    }
    let hi = letters - 1 - slot.below;
    for v in lo..=hi {
        fill[k] = v;
        ssyt_rec(boxes, letters, k + 1, fill, visit);
    }
}

fn is_dominant(e: &[u16]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

fn to_partition(e: &[u16]) -> Partition {
    Partition::from_unsorted(e.iter().map(|&x| x as usize).collect())
}

/// Dominant part of the Schur polynomial `s_shape(x_1..x_n)`.
fn schur_dominant(shape: &Partition, nvars: usize) -> HashMap<Exponent, i64> {
    let mut out: HashMap<Exponent, i64> = HashMap::new();
    let mut e = vec![0u16; nvars];
    for_each_ssyt(shape, nvars, &mut |t| {
        e.iter_mut().for_each(|x| *x = 0);
        for &v in t {
            e[v] += 1;
        }
        if is_dominant(&e) {
            *out.entry(e.clone()).or_default() += 1;
        }
    });
    out
}

/// Independent computation of `s_λ ∘ s_μ` in `nvars` variables.
///
/// Needs `nvars ≥ |λ|·|μ|`; with fewer variables partitions with many rows
/// would silently vanish.
pub fn plethysm_oracle(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<SchurExpansion> {
    let degree = lambda.size() * mu.size();
    if nvars < degree || nvars == 0 {
        return Err(Error::TooFewVariables {
            needed: degree.max(1),
            got: nvars,
        });
    }

    let mut monomials: Vec<Exponent> = Vec::new();
    for_each_ssyt(mu, nvars, &mut |t| {
        let mut e = vec![0u16; nvars];
        for &v in t {
            e[v] += 1;
        }
        monomials.push(e);
    });

    let mut poly: BTreeMap<Exponent, i64> = BTreeMap::new();
    let mut acc = vec![0u16; nvars];
    for_each_ssyt(lambda, monomials.len(), &mut |t| {
        acc.iter_mut().for_each(|x| *x = 0);
        for &v in t {
            for (a, b) in acc.iter_mut().zip(&monomials[v]) {
                *a += b;
            }
        }
        if is_dominant(&acc) {
            *poly.entry(acc.clone()).or_default() += 1;
        }
    });

    let mut out = SchurExpansion::new();
    while let Some((lead, &c)) = poly.iter().next_back() {
        let lead = lead.clone();
        let shape = to_partition(&lead);
        for (e, k) in schur_dominant(&shape, nvars) {
            let slot = poly.entry(e.clone()).or_default();
            *slot -= c * k;
            if *slot == 0 {
                poly.remove(&e);
            }
        }
        debug_assert!(!poly.contains_key(&lead));
        out.add_term(shape, BigInt::from(c));
    }
    Ok(out)
}
