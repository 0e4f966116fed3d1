//! Plethysm of Schur functions.
//!
//! The workhorse is the power-sum route: expand both factors in power sums,
//! compose with `p_n ∘ p_m = p_{nm}`, and return to the Schur basis through
//! the character table. Single coefficients of large degree are taken from
//! the truncated ring in [`crate::truncated`] instead of a full expansion.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::character::z_factor;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::expansion::{PowerSumExpansion, SchurExpansion};
use crate::partition::{partitions_of, Partition, SkewShape};
use crate::truncated;

/// Largest degree `|λ||μ|` for which a single coefficient is read off the
/// full power-sum expansion rather than the truncated ring.
const FULL_EXPANSION_DEGREE: usize = 12;

/// `p_k ∘ g`: scale every index of `g` by `k`.
fn adams(k: usize, g: &PowerSumExpansion) -> PowerSumExpansion {
    g.iter().map(|(p, c)| (p.scale(k), c.clone())).collect()
}

/// Plethysm `f ∘ g` in the power-sum basis.
pub fn powersum_plethysm(f: &PowerSumExpansion, g: &PowerSumExpansion) -> PowerSumExpansion {
    let mut adams_cache: HashMap<usize, PowerSumExpansion> = HashMap::new();
    let mut out = PowerSumExpansion::new();
    for (rho, c) in f.iter() {
        let mut term = PowerSumExpansion::power_sum(Partition::empty());
        for &k in rho.parts() {
            let factor = adams_cache.entry(k).or_insert_with(|| adams(k, g));
            term = term.mul(factor);
        }
        out = out.add(&term.scaled(c));
    }
    out
}

/// The Eq. (1)-style convention for an empty inner partition:
/// `s_λ ∘ s_∅` is `s_∅` when `λ` has exactly one row and zero otherwise.
fn empty_inner(lambda: &Partition) -> SchurExpansion {
    if lambda.len() == 1 {
        SchurExpansion::single(Partition::empty())
    } else {
        SchurExpansion::new()
    }
}

impl Engine {
    /// `s_λ = Σ_μ (χ^λ_μ / z_μ) p_μ`.
    pub fn schur_to_powersum(&self, lambda: &Partition) -> PowerSumExpansion {
        partitions_of(lambda.size())
            .map(|mu| {
                let c = BigRational::new(self.chi(lambda, &mu), z_factor(&mu));
                (mu, c)
            })
            .collect()
    }

    /// Schur expansion of a homogeneous power-sum combination; the
    /// coefficient of `s_λ` is `Σ_μ d_μ χ^λ_μ`.
    pub fn powersum_to_schur(&self, f: &PowerSumExpansion) -> Result<SchurExpansion> {
        if f.is_empty() {
            return Ok(SchurExpansion::new());
        }
        let d = f.degree().ok_or(Error::NonHomogeneous)?;
        let mut out = SchurExpansion::new();
        for lambda in partitions_of(d) {
            let mut c = BigRational::zero();
            for (mu, dmu) in f.iter() {
                c += dmu * BigRational::from_integer(self.chi(&lambda, mu));
            }
            if !c.is_integer() {
                return Err(Error::NonIntegral {
                    partition: lambda.to_text(),
                });
            }
            out.add_term(lambda, c.to_integer());
        }
        Ok(out)
    }

    /// Full Schur expansion of `s_λ ∘ s_μ`, memoized.
    pub fn plethysm_schur(&self, lambda: &Partition, mu: &Partition) -> Arc<SchurExpansion> {
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.plethysms.get(&key) {
            return Arc::clone(&v);
        }
        let v = Arc::new(if mu.is_empty() {
            empty_inner(lambda)
        } else if lambda.is_empty() {
            SchurExpansion::single(Partition::empty())
        } else {
            let f = self.schur_to_powersum(lambda);
            let g = self.schur_to_powersum(mu);
            self.powersum_to_schur(&powersum_plethysm(&f, &g))
                .expect("plethysm of Schur functions has integral Schur coefficients")
        });
        self.plethysms.insert(key, Arc::clone(&v));
        v
    }

    /// `a^ν_{λ,μ} = ⟨s_λ ∘ s_μ, s_ν⟩`, memoized.
    pub fn plethysm_coefficient(&self, nu: &Partition, lambda: &Partition, mu: &Partition) -> BigInt {
        if mu.is_empty() {
            let one = nu.is_empty() && lambda.len() == 1;
            return if one { BigInt::one() } else { BigInt::zero() };
        }
        if nu.size() != lambda.size() * mu.size() {
            return BigInt::zero();
        }
        if lambda.is_empty() {
            return BigInt::one();
        }
        if mu.len() == 1 && nu.len() > lambda.size() {
            return BigInt::zero();
        }
        // the same bound transported through ω
        if mu.first_part() == 1 && nu.first_part() > lambda.size() {
            return BigInt::zero();
        }
        if mu.size() == 1 {
            return BigInt::from((nu == lambda) as u8);
        }
        if lambda.size() == 1 {
            return BigInt::from((nu == mu) as u8);
        }
        let key = (nu.clone(), lambda.clone(), mu.clone());
        if let Some(v) = self.coefficients.get(&key) {
            return v.clone();
        }
        let v = if nu.size() <= FULL_EXPANSION_DEGREE {
            self.plethysm_schur(lambda, mu).coefficient(nu)
        } else {
            truncated::coefficient(self, nu, lambda, mu)
        };
        self.coefficients.insert(key, v.clone());
        v
    }

    /// `a^{γ/α}_{δ/β,μ} = Σ_{η,ζ} c^δ_{η,β} c^γ_{ζ,α} a^ζ_{η,μ}`.
    pub fn skew_plethysm_coefficient(
        &self,
        target: &SkewShape,
        source: &SkewShape,
        mu: &Partition,
    ) -> BigInt {
        if !target.is_contained() || !source.is_contained() {
            return BigInt::zero();
        }
        if target.is_straight() && source.is_straight() {
            return self.plethysm_coefficient(&target.outer, &source.outer, mu);
        }
        let (Some(t), Some(s)) = (target.size(), source.size()) else {
            return BigInt::zero();
        };
        if t != s * mu.size() {
            return BigInt::zero();
        }
        let etas = self.skew_expansion(&source.outer, &source.inner);
        let zetas = self.skew_expansion(&target.outer, &target.inner);
        let mut total = BigInt::zero();
        for (eta, c_eta) in etas.iter() {
            for (zeta, c_zeta) in zetas.iter() {
                let a = self.plethysm_coefficient(zeta, eta, mu);
                if !a.is_zero() {
                    total += c_eta * c_zeta * a;
                }
            }
        }
        total
    }
}

/// `(ν, λ, μ) ↦ (ν', λ*, μ')` with `λ* = λ` for `|μ|` even and `λ'` for
/// `|μ|` odd; the plethysm coefficient is invariant under this map.
pub fn involution_map(nu: &Partition, lambda: &Partition, mu: &Partition) -> (Partition, Partition, Partition) {
    let lambda_star = if mu.size().is_multiple_of(2) {
        lambda.clone()
    } else {
        lambda.conjugate()
    };
    (nu.conjugate(), lambda_star, mu.conjugate())
}
