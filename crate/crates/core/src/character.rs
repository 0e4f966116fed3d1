//! Symmetric-group characters via the Murnaghan–Nakayama rule.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `z_μ = Π_i i^{m_i} m_i!`.
pub fn z_factor(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, mult) in mu.multiplicities() {
        for k in 1..=mult {
            z *= BigInt::from(part) * BigInt::from(k);
        }
    }
    z
}

/// Every way to strip a rim hook of length `r` from `lambda`, with the sign
/// `(−1)^{height}` of each hook.
pub(crate) fn remove_rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, bool)> {
    let len = lambda.len();
    // beta-numbers, strictly decreasing
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next: Vec<usize> = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next
            .iter()
            .enumerate()
            .map(|(k, &x)| x - (len - 1 - k))
            .collect();
        out.push((Partition::from_unsorted(parts), between % 2 == 1));
    }
    out
}

impl Engine {
    /// The irreducible character `χ^λ` evaluated on cycle type `μ`.
    pub fn character_value(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch {
                left: lambda.size(),
                right: mu.size(),
            });
        }
        Ok(self.chi(lambda, mu))
    }

    pub(crate) fn chi(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.characters.get(&key) {
            return v.clone();
        }
        let r = mu.first_part();
        let rest = Partition::from_unsorted(mu.parts()[1..].to_vec());
        let mut total = BigInt::zero();
        for (smaller, negative) in remove_rim_hooks(lambda, r) {
            let v = self.chi(&smaller, &rest);
            if negative {
                total -= v;
            } else {
                total += v;
            }
        }
        self.characters.insert(key, total.clone());
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{p, partitions_of};

    #[test]
    fn trivial_character_is_one() {
        let e = Engine::new();
        for n in 0..=6 {
            for mu in partitions_of(n) {
                assert_eq!(e.character_value(&Partition::row(n), &mu).unwrap(), BigInt::one());
            }
        }
    }

    #[test]
    fn small_values() {
        let e = Engine::new();
        assert_eq!(e.character_value(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(-1));
        assert_eq!(e.character_value(&p(&[2]), &p(&[1, 1])).unwrap(), BigInt::from(1));
        // character table of S_3
        assert_eq!(e.character_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(e.character_value(&p(&[2, 1]), &p(&[2, 1])).unwrap(), BigInt::from(0));
        assert_eq!(e.character_value(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert!(e.character_value(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn sign_character() {
        let e = Engine::new();
        for mu in partitions_of(5) {
            let odd = mu.parts().iter().map(|x| x - 1).sum::<usize>() % 2 == 1;
            let expected = if odd { -1 } else { 1 };
            assert_eq!(e.character_value(&Partition::column(5), &mu).unwrap(), BigInt::from(expected));
        }
    }

    #[test]
    fn column_orthogonality_gives_z() {
        let e = Engine::new();
        for n in 1..=6 {
            for mu in partitions_of(n) {
                let s: BigInt = partitions_of(n).map(|l| e.chi(&l, &mu).pow(2)).sum();
                assert_eq!(s, z_factor(&mu));
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_factor(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z_factor(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(z_factor(&p(&[2, 2])), BigInt::from(8));
        assert_eq!(z_factor(&Partition::empty()), BigInt::one());
    }
}
