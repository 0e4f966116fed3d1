//! Integer partitions and skew shapes.
//!
//! A [`Partition`] is stored canonically: parts weakly decreasing, all
//! positive, no trailing zeros. Every constructor enforces this, so two
//! partitions are equal exactly when their part vectors are equal.
//!
//! Text syntax (shared by the CLI): comma-separated parts such as `3,2,1`;
//! the empty partition is written as the empty string or `0`. Skew shapes
//! are written `outer/inner`, e.g. `3,2,1/1,1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse {
                text: join_parts(&parts),
                reason: "parts must be positive and weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Componentwise sum `a + b`, padding the shorter operand with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n)
            .map(|i| {
                self.part(i)
                    .checked_add(other.part(i))
                    .expect("partition part overflow")
            })
            .collect();
        Partition { parts }
    }

    /// Multiset union of parts `a ⊔ b`.
    pub fn union_sort(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts }
    }

    /// Deletes the first column: `λ − (1^{l(λ)})`.
    pub fn hat(&self) -> Partition {
        Partition {
            parts: self.parts.iter().filter(|&&p| p > 1).map(|p| p - 1).collect(),
        }
    }

    /// Arm-and-legs growth `(α + (lj)) ⊔ ((m−l)^j)`.
    pub fn grow_arm_legs(&self, l: usize, m: usize, j: usize) -> Result<Partition> {
        check_growth(l, m)?;
        let arm = l.checked_mul(j).ok_or(Error::Overflow)?;
        let legs = Partition::from_unsorted(vec![m - l; j]);
        Ok(self.add(&Partition::row(arm)).union_sort(&legs))
    }

    /// Single-line growth: a row of `j` boxes when `m + l` is even,
    /// a column of `j` boxes when it is odd.
    pub fn grow_line(&self, l: usize, m: usize, j: usize) -> Result<Partition> {
        check_growth(l, m)?;
        Ok(if (m + l).is_multiple_of(2) {
            self.add(&Partition::row(j))
        } else {
            self.union_sort(&Partition::column(j))
        })
    }

    /// True iff the diagram of `inner` sits inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.size(), other.size());
        if a != b {
            return Err(Error::SizeMismatch { left: a, right: b });
        }
        let n = self.len().max(other.len());
        let (mut sa, mut sb) = (0, 0);
        for i in 0..n {
            sa += self.part(i);
            sb += other.part(i);
            if sa < sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiplicities `m_i` of each part size `i`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiplies every part by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p * k).collect())
    }

    /// All partitions contained in `self` with exactly `size` boxes.
    pub fn subpartitions_of_size(&self, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_rec(&self.parts, 0, usize::MAX, size, &mut cur, &mut out);
        out
    }

    pub fn to_text(&self) -> String {
        if self.is_empty() {
            "0".to_string()
        } else {
            join_parts(&self.parts)
        }
    }
}

fn sub_rec(
    bound: &[usize],
    row: usize,
    cap: usize,
    left: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if left == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if row == bound.len() {
        return;
    }
    // remaining rows can hold at most this many boxes
    let room: usize = bound[row..].iter().map(|&b| b.min(cap)).sum();
    if room < left {
        return;
    }
    let hi = bound[row].min(cap).min(left);
    for p in (1..=hi).rev() {
        cur.push(p);
        sub_rec(bound, row + 1, p, left - p, cur, out);
        cur.pop();
    }
}

fn check_growth(l: usize, m: usize) -> Result<()> {
    if m == 0 || l > m {
        return Err(Error::InvalidGrowth { l, m });
    }
    Ok(())
}

fn join_parts(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_parts(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|s| {
                s.trim().parse::<usize>().map_err(|e| Error::Parse {
                    text: text.to_string(),
                    reason: format!("bad part {:?}: {e}", s.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::Parse {
            text: text.to_string(),
            reason: "parts must be positive and weakly decreasing".into(),
        })
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout the tests: `p(&[3, 1])`.
pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition must be weakly decreasing")
}

/// A skew shape `outer/inner`. Containment is not required; a shape whose
/// inner partition does not fit denotes the zero skew Schur function.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        SkewShape { outer, inner }
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn is_contained(&self) -> bool {
        self.outer.contains(&self.inner)
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Box count `|outer| − |inner|`; `None` when the shape is not contained.
    pub fn size(&self) -> Option<usize> {
        self.is_contained()
            .then(|| self.outer.size() - self.inner.size())
    }

    /// `|outer| − |inner|` as a signed quantity, meaningful for any pair.
    pub fn signed_size(&self) -> i64 {
        self.outer.size() as i64 - self.inner.size() as i64
    }

    pub fn grow_arm_legs(&self, l: usize, m: usize, j: usize) -> Result<SkewShape> {
        Ok(SkewShape::new(self.outer.grow_arm_legs(l, m, j)?, self.inner.clone()))
    }

    pub fn grow_line(&self, l: usize, m: usize, j: usize) -> Result<SkewShape> {
        Ok(SkewShape::new(self.outer.grow_line(l, m, j)?, self.inner.clone()))
    }

    pub fn to_text(&self) -> String {
        if self.inner.is_empty() {
            self.outer.to_text()
        } else {
            format!("{}/{}", self.outer.to_text(), self.inner.to_text())
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.outer, self.inner)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut pieces = text.split('/');
        let outer = pieces.next().unwrap_or("").parse()?;
        let inner = match pieces.next() {
            Some(t) => t.parse()?,
            None => Partition::empty(),
        };
        if pieces.next().is_some() {
            return Err(Error::Parse {
                text: text.to_string(),
                reason: "more than one '/'".into(),
            });
        }
        Ok(SkewShape { outer, inner })
    }
}

impl Serialize for SkewShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order,
/// starting from `(n)` and ending at `(1^n)`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        self.current = successor(cur);
        Some(out)
    }
}

fn successor(mut parts: Vec<usize>) -> Option<Vec<usize>> {
    // strip trailing ones, remembering how many boxes they held
    let mut freed = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        freed += 1;
    }
    let last = parts.pop()?;
    let k = last - 1;
    parts.push(k);
    freed += 1;
    while freed > 0 {
        let take = freed.min(k);
        parts.push(take);
        freed -= take;
    }
    Some(parts)
}

pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}
