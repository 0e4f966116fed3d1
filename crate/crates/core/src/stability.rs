//! Sequences of plethysm coefficients under simultaneous growth, their
//! empirical stabilization, and the recurrence that lowers the inner degree.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::expansion::json_int;
use crate::partition::{partitions_of, Partition, SkewShape};

pub const DEFAULT_JMAX: usize = 12;
pub const DEFAULT_WINDOW: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub sigma: SkewShape,
    pub tau: SkewShape,
    pub l: usize,
    pub m: usize,
    pub j_max: usize,
}

impl SequenceSpec {
    pub fn new(sigma: SkewShape, tau: SkewShape, l: usize, m: usize, j_max: usize) -> Result<Self> {
        if m == 0 || l > m {
            return Err(Error::InvalidGrowth { l, m });
        }
        Ok(SequenceSpec { sigma, tau, l, m, j_max })
    }

    /// The shapes indexing term `j`: `(σ^{l,m}{j}, τ^{l,m}[j])`.
    pub fn term_shapes(&self, j: usize) -> Result<(SkewShape, SkewShape)> {
        Ok((
            self.sigma.grow_arm_legs(self.l, self.m, j)?,
            self.tau.grow_line(self.l, self.m, j)?,
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub spec: SequenceSpec,
    #[serde(with = "json_int::vec")]
    pub values: Vec<BigInt>,
    pub stabilization_index: Option<usize>,
    pub window_confirmed: bool,
    #[serde(with = "json_int::option")]
    pub limit: Option<BigInt>,
    pub weakly_increasing: bool,
}

impl SequenceReport {
    pub fn from_values(spec: SequenceSpec, values: Vec<BigInt>, window: usize) -> Result<Self> {
        let (stabilization_index, window_confirmed) = detect_stabilization(&values, window)?;
        let limit = stabilization_index.map(|j| values[j].clone());
        let weakly_increasing = values.windows(2).all(|w| w[0] <= w[1]);
        Ok(SequenceReport {
            spec,
            values,
            stabilization_index,
            window_confirmed,
            limit,
            weakly_increasing,
        })
    }
}

/// Least `J` with `values` constant on `[J, end]`, plus whether that run is
/// at least `window` long. No index is reported when the last two values
/// differ.
pub fn detect_stabilization<T: PartialEq>(values: &[T], window: usize) -> Result<(Option<usize>, bool)> {
    if window == 0 {
        return Err(Error::InvalidWindow);
    }
    let last = values.last().ok_or(Error::EmptySequence)?;
    let run = values.iter().rev().take_while(|v| *v == last).count();
    if run == 1 && values.len() > 1 {
        return Ok((None, false));
    }
    Ok((Some(values.len() - run), run >= window))
}

/// Which published statement, if any, predicts that a family of sequences
/// is weakly increasing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    /// `l = m`, or `m = 1` where the sequences are constant.
    ProvenFull,
    /// `l = 0`, obtained from the `l = m` case through the involution.
    ProvenEmpty,
    /// `l = 1, m = 2`.
    Conjectured,
    Exploratory,
}

impl Monotonicity {
    pub fn of(l: usize, m: usize) -> Self {
        if l == m || m == 1 {
            Monotonicity::ProvenFull
        } else if l == 0 {
            Monotonicity::ProvenEmpty
        } else if l == 1 && m == 2 {
            Monotonicity::Conjectured
        } else {
            Monotonicity::Exploratory
        }
    }

    pub fn is_proven(self) -> bool {
        matches!(self, Monotonicity::ProvenFull | Monotonicity::ProvenEmpty)
    }
}

/// Outcome of comparing both sides of the degree-lowering recurrence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub holds: bool,
    #[serde(with = "json_int::option")]
    pub lhs: Option<BigInt>,
    #[serde(with = "json_int::option")]
    pub rhs: Option<BigInt>,
    pub note: Option<String>,
}

impl IdentityCheck {
    fn vacuous(note: &str) -> Self {
        IdentityCheck {
            holds: true,
            lhs: None,
            rhs: None,
            note: Some(note.to_string()),
        }
    }
}

/// How the recurrence evaluates its inner coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RecurrenceMode {
    /// Inner factors come from the direct engine.
    #[default]
    Direct,
    /// Inner factors with inner degree at least two recurse again.
    Full,
}

impl Engine {
    /// The terms `a^{σ^{l,m}{j}}_{τ^{l,m}[j],(m)}` for `j = 0..=j_max`,
    /// with stabilization and monotonicity verdicts.
    pub fn sequence_a(&self, spec: &SequenceSpec, window: usize) -> Result<SequenceReport> {
        SequenceSpec::new(spec.sigma.clone(), spec.tau.clone(), spec.l, spec.m, spec.j_max)?;
        let n = spec.j_max + 1;
        let degree_mismatch = spec.sigma.signed_size() != spec.m as i64 * spec.tau.signed_size();
        let values = if !spec.sigma.is_contained() || !spec.tau.is_contained() || degree_mismatch {
            vec![BigInt::zero(); n]
        } else {
            let mu = Partition::row(spec.m);
            (0..n)
                .map(|j| {
                    let (target, source) = spec.term_shapes(j)?;
                    Ok(self.skew_plethysm_coefficient(&target, &source, &mu))
                })
                .collect::<Result<Vec<_>>>()?
        };
        SequenceReport::from_values(spec.clone(), values, window)
    }

    /// `a^ν_{λ,(m)}` computed through the recurrence in `l(ν)`, then checked
    /// against the direct computation.
    pub fn recurrence_coefficient(&self, lambda: &Partition, nu: &Partition, m: usize) -> Result<BigInt> {
        self.recurrence_coefficient_with(lambda, nu, m, RecurrenceMode::Direct)
    }

    pub fn recurrence_coefficient_with(
        &self,
        lambda: &Partition,
        nu: &Partition,
        m: usize,
        mode: RecurrenceMode,
    ) -> Result<BigInt> {
        let v = self.recurrence_raw(lambda, nu, m, mode)?;
        let direct = self.plethysm_coefficient(nu, lambda, &Partition::row(m));
        if v != direct || v.is_negative() {
            return Err(Error::Verification {
                what: format!("recurrence for a^{nu}_{{{lambda},({m})}}"),
                got: v,
                expected: direct,
            });
        }
        Ok(v)
    }

    fn recurrence_raw(&self, lambda: &Partition, nu: &Partition, m: usize, mode: RecurrenceMode) -> Result<BigInt> {
        if m < 2 {
            return Err(Error::RecurrenceDegree(m));
        }
        if lambda.is_empty() {
            return Err(Error::EmptyInner);
        }
        let n = lambda.size();
        if nu.size() != m * n || nu.len() > n {
            return Ok(BigInt::zero());
        }
        let k = n - nu.len();
        Ok(self.recurrence_sum(&lambda.conjugate(), &nu.hat(), k, m, mode))
    }

    /// `Σ_{i=0}^{k} (−1)^{k+i} Σ_{α ⊢ k+(m−1)i, β ⊢ i}
    ///   a^{α/(k−i)}_{β',(m)} · a^{ν̂/α}_{λ'/β,(m−1)}`,
    /// given `λ'` and `ν̂`.
    fn recurrence_sum(
        &self,
        lambda_conj: &Partition,
        nu_hat: &Partition,
        k: usize,
        m: usize,
        mode: RecurrenceMode,
    ) -> BigInt {
        let mut total = BigInt::zero();
        for i in 0..=k {
            let mut inner = BigInt::zero();
            let row = Partition::row(k - i);
            for alpha in partitions_of(k + (m - 1) * i) {
                if !nu_hat.contains(&alpha) || !alpha.contains(&row) {
                    continue;
                }
                for beta in partitions_of(i) {
                    if !lambda_conj.contains(&beta) {
                        continue;
                    }
                    let first = self.skew_coefficient_mode(
                        &SkewShape::new(alpha.clone(), row.clone()),
                        &SkewShape::straight(beta.conjugate()),
                        m,
                        mode,
                    );
                    if first.is_zero() {
                        continue;
                    }
                    let second = self.skew_coefficient_mode(
                        &SkewShape::new(nu_hat.clone(), alpha.clone()),
                        &SkewShape::new(lambda_conj.clone(), beta.clone()),
                        m - 1,
                        mode,
                    );
                    inner += first * second;
                }
            }
            if (k + i).is_multiple_of(2) {
                total += inner;
            } else {
                total -= inner;
            }
        }
        total
    }

    fn skew_coefficient_mode(&self, target: &SkewShape, source: &SkewShape, m: usize, mode: RecurrenceMode) -> BigInt {
        let mu = Partition::row(m);
        if mode == RecurrenceMode::Direct || m < 2 {
            return self.skew_plethysm_coefficient(target, source, &mu);
        }
        let (Some(t), Some(s)) = (target.size(), source.size()) else {
            return BigInt::zero();
        };
        if t != s * m {
            return BigInt::zero();
        }
        let etas = self.skew_expansion(&source.outer, &source.inner);
        let zetas = self.skew_expansion(&target.outer, &target.inner);
        let mut total = BigInt::zero();
        for (eta, c_eta) in etas.iter() {
            for (zeta, c_zeta) in zetas.iter() {
                let a = if eta.is_empty() {
                    self.plethysm_coefficient(zeta, eta, &mu)
                } else {
                    self.recurrence_raw(eta, zeta, m, mode)
                        .expect("m >= 2 and eta nonempty")
                };
                total += c_eta * c_zeta * a;
            }
        }
        total
    }

    /// Both sides of the recurrence applied to the grown pair
    /// `(ν^{l,m+1}{j}, λ^{l,m+1}[j])` with inner degree `m + 1`.
    pub fn verify_eqn_c(&self, nu: &Partition, lambda: &Partition, l: usize, m: usize, j: usize) -> Result<IdentityCheck> {
        if m == 0 || l > m {
            return Err(Error::InvalidGrowth { l, m });
        }
        let n = lambda.size();
        if n == 0 {
            return Ok(IdentityCheck::vacuous("lambda is empty"));
        }
        if nu.size() != (m + 1) * n {
            return Ok(IdentityCheck::vacuous("size mismatch: |nu| != (m+1)|lambda|"));
        }
        if nu.len() > n {
            return Ok(IdentityCheck::vacuous("l(nu) > |lambda|: both sides vanish"));
        }
        let k = n - nu.len();
        let nu_j = nu.grow_arm_legs(l, m + 1, j)?;
        let lambda_j = lambda.grow_line(l, m + 1, j)?;
        let lhs = self.plethysm_coefficient(&nu_j, &lambda_j, &Partition::row(m + 1));
        let rhs = self.recurrence_sum(&lambda_j.conjugate(), &nu_j.hat(), k, m + 1, RecurrenceMode::Direct);
        Ok(IdentityCheck {
            holds: lhs == rhs,
            lhs: Some(lhs),
            rhs: Some(rhs),
            note: None,
        })
    }

    /// Runs every cell of `bounds`, in parallel, and collects the results in
    /// a fixed order.
    pub fn scan(&self, bounds: &ScanBounds) -> Result<ScanReport> {
        if bounds.window == 0 {
            return Err(Error::InvalidWindow);
        }
        let specs = bounds.cells()?;
        let cells = specs
            .into_par_iter()
            .map(|spec| {
                let report = self.sequence_a(&spec, bounds.window)?;
                Ok(ScanCell {
                    family: Monotonicity::of(spec.l, spec.m),
                    stabilized: report.window_confirmed,
                    weakly_increasing: report.weakly_increasing,
                    report,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut violations = Vec::new();
        for (index, cell) in cells.iter().enumerate() {
            if !cell.stabilized {
                violations.push(Violation {
                    cell: index,
                    kind: ViolationKind::NotStabilized,
                    family: cell.family,
                });
            }
            if !cell.weakly_increasing {
                violations.push(Violation {
                    cell: index,
                    kind: ViolationKind::NotWeaklyIncreasing,
                    family: cell.family,
                });
            }
        }
        Ok(ScanReport { cells, violations })
    }
}

/// Enumeration bounds for a scan over straight (or skew) shapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanBounds {
    /// `τ` ranges over shapes with at most this many boxes.
    pub max_tau: usize,
    pub m_values: Vec<usize>,
    /// `l` values to visit; `None` means every `0..=m`.
    pub l_values: Option<Vec<usize>>,
    /// Restrict to `|σ| = m|τ|` (the only cells that can be nonzero).
    pub matching_degree: bool,
    /// Largest `|σ|` visited when `matching_degree` is off.
    pub max_sigma: usize,
    /// Inner partitions of both shapes range over sizes `0..=max_inner`.
    pub max_inner: usize,
    pub j_max: usize,
    pub window: usize,
}

impl ScanBounds {
    pub fn straight(max_tau: usize, m_values: Vec<usize>, j_max: usize, window: usize) -> Self {
        ScanBounds {
            max_tau,
            m_values,
            l_values: None,
            matching_degree: true,
            max_sigma: 0,
            max_inner: 0,
            j_max,
            window,
        }
    }

    /// Cell specifications in a fixed order: by `m`, then `l`, then `|τ|`,
    /// `τ`, `σ` (partitions in reverse-lexicographic order, inner shapes
    /// after outer ones).
    pub fn cells(&self) -> Result<Vec<SequenceSpec>> {
        let mut out = Vec::new();
        for &m in &self.m_values {
            let ls: Vec<usize> = match &self.l_values {
                Some(v) => v.iter().copied().filter(|&l| l <= m).collect(),
                None => (0..=m).collect(),
            };
            for l in ls {
                for tau in self.shapes_up_to(self.max_tau) {
                    let Some(tau_size) = tau.size() else { continue };
                    let sigmas: Vec<SkewShape> = if self.matching_degree {
                        self.shapes_of_size(m * tau_size)
                    } else {
                        self.shapes_up_to(self.max_sigma)
                    };
                    for sigma in sigmas {
                        out.push(SequenceSpec::new(sigma, tau.clone(), l, m, self.j_max)?);
                    }
                }
            }
        }
        Ok(out)
    }

    fn shapes_up_to(&self, max: usize) -> Vec<SkewShape> {
        (0..=max).flat_map(|s| self.shapes_of_size(s)).collect()
    }

    /// Contained skew shapes `outer/inner` with `|outer| − |inner| = size`
    /// and `|inner| ≤ max_inner`.
    fn shapes_of_size(&self, size: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for inner_size in 0..=self.max_inner {
            for inner in partitions_of(inner_size) {
                for outer in partitions_of(size + inner_size) {
                    if outer.contains(&inner) {
                        out.push(SkewShape::new(outer, inner.clone()));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCell {
    pub report: SequenceReport,
    pub family: Monotonicity,
    pub stabilized: bool,
    pub weakly_increasing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    NotStabilized,
    NotWeaklyIncreasing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub cell: usize,
    pub kind: ViolationKind,
    pub family: Monotonicity,
}

impl Violation {
    /// Failures contradict a theorem within the scan budget; everything
    /// else (conjectured or exploratory monotonicity) is an observation.
    pub fn is_failure(&self) -> bool {
        match self.kind {
            ViolationKind::NotStabilized => true,
            ViolationKind::NotWeaklyIncreasing => self.family.is_proven(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub cells: Vec<ScanCell>,
    pub violations: Vec<Violation>,
}

impl ScanReport {
    pub fn failures(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.is_failure())
    }

    /// Monotonicity violations in the conjectured family.
    pub fn potential_counterexamples(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| {
            v.kind == ViolationKind::NotWeaklyIncreasing && v.family == Monotonicity::Conjectured
        })
    }
}
