//! Littlewood–Richardson fillings and coefficients.
//!
//! Fillings are enumerated by backtracking over the boxes of `outer/inner`
//! in reading order (rows top to bottom, each row right to left). Row
//! weakness, column strictness and goodness of the reading word are all
//! checked as each box is filled, so a branch is cut on its first violation.

use num_bigint::BigInt;
use serde::Serialize;

use crate::expansion::SchurExpansion;
use crate::partition::{Partition, SkewShape};

/// True iff every entry of `seq` is good: a `1`, or an `i > 1` preceded by
/// strictly more `i−1`s than `i`s.
pub fn is_good_sequence(seq: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &c in seq {
        if c == 0 {
            return false;
        }
        if counts.len() <= c {
            counts.resize(c + 1, 0);
        }
        if c > 1 && counts[c - 1] <= counts[c] {
            return false;
        }
        counts[c] += 1;
    }
    true
}

/// One Littlewood–Richardson filling of a skew shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LrFilling {
    pub shape: SkewShape,
    /// Row `r` holds the entries of columns `inner_r..outer_r`, left to right.
    pub rows: Vec<Vec<usize>>,
    #[serde(rename = "type")]
    pub content: Partition,
}

impl LrFilling {
    /// Entries read right to left, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// Entry at 0-based `(row, col)`, if that box belongs to the shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.shape.inner.part(row);
        col.checked_sub(start)
            .and_then(|k| self.rows.get(row).and_then(|r| r.get(k)))
            .copied()
    }
}

struct Cell {
    row: usize,
    right: Option<usize>,
    above: Option<usize>,
}

struct Layout {
    cells: Vec<Cell>,
}

impl Layout {
    fn new(shape: &SkewShape) -> Layout {
        let (outer, inner) = (&shape.outer, &shape.inner);
        let mut cells = Vec::new();
        // index of box (r, c) for the previous row, used to find "above"
        let mut prev_row: Vec<Option<usize>> = Vec::new();
        for r in 0..outer.len() {
            let (lo, hi) = (inner.part(r), outer.part(r));
            let mut this_row = vec![None; hi];
            for c in (lo..hi).rev() {
                let idx = cells.len();
                let right = (c + 1 < hi).then(|| idx - 1);
                let above = prev_row.get(c).copied().flatten();
                cells.push(Cell { row: r, right, above });
                this_row[c] = Some(idx);
            }
            prev_row = this_row;
        }
        Layout { cells }
    }
}

/// Depth-first walk over all LR fillings, optionally restricted to content
/// bounded by `bound` (which then forces content exactly `bound` when the
/// sizes agree). The visitor sees the values in reading order and the
/// content counts (index 0 unused).
fn walk<F: FnMut(&[usize], &[usize])>(shape: &SkewShape, bound: Option<&Partition>, visit: &mut F) {
    if !shape.is_contained() {
        return;
    }
    let layout = Layout::new(shape);
    let n = layout.cells.len();
    let max_value = bound.map_or(n, Partition::len);
    let mut values = vec![0usize; n];
    let mut counts = vec![0usize; max_value + 2];
    rec(&layout, bound, 0, 0, &mut values, &mut counts, visit);
}

fn rec<F: FnMut(&[usize], &[usize])>(
    layout: &Layout,
    bound: Option<&Partition>,
    k: usize,
    max_used: usize,
    values: &mut Vec<usize>,
    counts: &mut Vec<usize>,
    visit: &mut F,
) {
    if k == layout.cells.len() {
        visit(values, counts);
        return;
    }
    let cell = &layout.cells[k];
    let lo = cell.above.map_or(1, |a| values[a] + 1);
    let mut hi = cell.right.map_or(max_used + 1, |r| values[r]);
    // entries of row r never exceed r + 1 in an LR filling
    hi = hi.min(cell.row + 1);
    if let Some(b) = bound {
        hi = hi.min(b.len());
    }
    for v in lo..=hi {
        if v > 1 && counts[v - 1] <= counts[v] {
            continue;
        }
        if let Some(b) = bound {
            if counts[v] >= b.part(v - 1) {
                continue;
            }
        }
        values[k] = v;
        counts[v] += 1;
        rec(layout, bound, k + 1, max_used.max(v), values, counts, visit);
        counts[v] -= 1;
    }
}

fn content_of(counts: &[usize]) -> Partition {
    Partition::from_unsorted(counts.iter().skip(1).copied().collect())
}

/// Every LR filling of `shape`, of any type. Empty when the inner partition
/// does not fit inside the outer one.
pub fn lr_fillings(shape: &SkewShape) -> Vec<LrFilling> {
    let mut out = Vec::new();
    let outer = &shape.outer;
    let inner = &shape.inner;
    walk(shape, None, &mut |values, counts| {
        let mut rows = Vec::with_capacity(outer.len());
        let mut k = 0;
        for r in 0..outer.len() {
            let w = outer.part(r) - inner.part(r);
            let mut row: Vec<usize> = values[k..k + w].to_vec();
            row.reverse();
            rows.push(row);
            k += w;
        }
        out.push(LrFilling {
            shape: shape.clone(),
            rows,
            content: content_of(counts),
        });
    });
    out
}

/// `c^ν_{λ,μ}`: the number of LR fillings of `ν/μ` of type `λ`.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(mu) || !nu.contains(lambda) {
        return 0;
    }
    let mut count = 0u64;
    let shape = SkewShape::new(nu.clone(), mu.clone());
    walk(&shape, Some(lambda), &mut |_, _| count += 1);
    count
}

/// `s_{outer/inner} = Σ_μ c^{outer}_{inner,μ} s_μ`.
pub fn skew_schur_expansion(shape: &SkewShape) -> SchurExpansion {
    let mut tally: std::collections::HashMap<Vec<usize>, u64> = std::collections::HashMap::new();
    walk(shape, None, &mut |_, counts| {
        let key: Vec<usize> = counts.iter().skip(1).copied().take_while(|&c| c > 0).collect();
        *tally.entry(key).or_default() += 1;
    });
    tally
        .into_iter()
        .map(|(k, c)| (Partition::from_unsorted(k), BigInt::from(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn skew(t: &str) -> SkewShape {
        t.parse().unwrap()
    }

    #[test]
    fn good_sequences() {
        assert!(is_good_sequence(&[1, 1, 2]));
        assert!(!is_good_sequence(&[2, 1]));
        assert!(is_good_sequence(&[]));
        assert!(!is_good_sequence(&[1, 2, 2]));
        assert!(is_good_sequence(&[1, 2, 1, 2, 3]));
    }

    #[test]
    fn fillings_of_small_shapes() {
        let f = lr_fillings(&skew("2,1"));
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].content, p(&[2, 1]));
        assert_eq!(f[0].rows, vec![vec![1, 1], vec![2]]);

        let mut types: Vec<_> = lr_fillings(&skew("2,1/1")).into_iter().map(|f| f.content).collect();
        types.sort();
        assert_eq!(types, vec![p(&[2]), p(&[1, 1])]);

        assert!(lr_fillings(&skew("2/3")).is_empty());
    }

    #[test]
    fn filling_entry_lookup() {
        let f = &lr_fillings(&skew("3,1/1"))[0];
        assert_eq!(f.entry(0, 0), None);
        assert_eq!(f.entry(0, 1), Some(f.rows[0][0]));
    }

    #[test]
    fn coefficients() {
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[2]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[2]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[3]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2])), 0);
    }

    #[test]
    fn skew_expansions() {
        let e = skew_schur_expansion(&skew("2,1/1"));
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&p(&[2])), BigInt::from(1));
        assert_eq!(e.coefficient(&p(&[1, 1])), BigInt::from(1));
        assert_eq!(skew_schur_expansion(&skew("3,1")), SchurExpansion::single(p(&[3, 1])));
        assert!(skew_schur_expansion(&skew("2/3")).is_empty());
        assert_eq!(
            skew_schur_expansion(&skew("0")),
            SchurExpansion::single(Partition::empty())
        );
    }
}
