//! Sparse linear combinations indexed by partitions.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;

/// A finite integer combination of Schur functions. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(p: Partition) -> Self {
        let mut e = Self::new();
        e.add_term(p, BigInt::one());
        e
    }

    pub fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of `s_p`, zero when absent.
    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common size of all keys, or `None` if empty or mixed.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let d = sizes.next()?;
        sizes.all(|s| s == d).then_some(d)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

impl FromIterator<(Partition, BigInt)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut e = SchurExpansion::new();
        for (p, c) in iter {
            e.add_term(p, c);
        }
        e
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (p, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "s[{p}]")?;
            } else {
                write!(f, "{c}*s[{p}]")?;
            }
        }
        Ok(())
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            map.serialize_entry(&p.to_text(), &json_int::Wrap(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, serde_json::Number> = BTreeMap::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let p: Partition = k.parse().map_err(serde::de::Error::custom)?;
                let c: BigInt = v.to_string().parse().map_err(serde::de::Error::custom)?;
                Ok((p, c))
            })
            .collect()
    }
}

/// A finite rational combination of power sums `p_μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumExpansion {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single power sum `p_μ` with coefficient one.
    pub fn power_sum(mu: Partition) -> Self {
        let mut e = Self::new();
        e.add_term(mu, BigRational::one());
        e
    }

    pub fn add_term(&mut self, p: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, p: &Partition) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let d = sizes.next()?;
        sizes.all(|s| s == d).then_some(d)
    }

    pub fn scaled(&self, k: &BigRational) -> Self {
        self.terms
            .iter()
            .map(|(p, c)| (p.clone(), c * k))
            .collect()
    }

    /// Product in the power-sum basis: `p_α · p_β = p_{α ⊔ β}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union_sort(b), ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl FromIterator<(Partition, BigRational)> for PowerSumExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, BigRational)>>(iter: I) -> Self {
        let mut e = PowerSumExpansion::new();
        for (p, c) in iter {
            e.add_term(p, c);
        }
        e
    }
}

impl Serialize for PowerSumExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            map.serialize_entry(&p.to_text(), &c.to_string())?;
        }
        map.end()
    }
}

/// Serde glue that writes big integers as exact JSON numbers.
pub mod json_int {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub(crate) struct Wrap<'a>(pub &'a BigInt);

    impl Serialize for Wrap<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize(self.0, s)
        }
    }

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = v
            .to_string()
            .parse()
            .map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(Wrap))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            let raw = Vec::<serde_json::Number>::deserialize(d)?;
            raw.into_iter()
                .map(|n| n.to_string().parse().map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(x) => s.serialize_some(&Wrap(x)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            let raw = Option::<serde_json::Number>::deserialize(d)?;
            raw.map(|n| n.to_string().parse().map_err(serde::de::Error::custom))
                .transpose()
        }
    }
}
