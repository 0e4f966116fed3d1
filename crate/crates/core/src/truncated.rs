//! Single plethysm coefficients by working modulo the Schur functions that
//! do not fit inside a fixed target partition `ν`.
//!
//! The span of `{s_κ : κ ⊄ ν}` is an ideal of the ring of symmetric
//! functions (a product `s_κ s_β` only involves shapes containing `κ`), so
//! ring operations can be carried out on the finitely many shapes `κ ⊆ ν`
//! without changing the coefficient of `s_ν`. The plethysm `s_λ ∘ s_μ` is
//! rebuilt from the images of `p_k ∘ s_μ`: Newton's identities give the
//! complete or elementary plethysms and Jacobi–Trudi assembles `s_λ`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::character::z_factor;
use crate::engine::Engine;
use crate::partition::{partitions_of, Partition};

/// Homogeneous element: degree plus coefficients on shapes inside `ν`.
#[derive(Clone, Debug)]
struct Elem {
    degree: usize,
    terms: HashMap<Partition, BigInt>,
}

impl Elem {
    fn one() -> Elem {
        let mut terms = HashMap::new();
        terms.insert(Partition::empty(), BigInt::one());
        Elem { degree: 0, terms }
    }

    fn zero(degree: usize) -> Elem {
        Elem {
            degree,
            terms: HashMap::new(),
        }
    }

    fn add_scaled(&mut self, other: &Elem, k: &BigInt) {
        if other.terms.is_empty() {
            return;
        }
        debug_assert_eq!(self.degree, other.degree);
        for (p, c) in &other.terms {
            let slot = self.terms.entry(p.clone()).or_insert_with(BigInt::zero);
            *slot += c * k;
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn divide_exact(&mut self, d: usize) {
        let d = BigInt::from(d);
        for c in self.terms.values_mut() {
            let (q, r) = c.div_rem(&d);
            assert!(r.is_zero(), "Newton recursion produced a non-integral term");
            *c = q;
        }
    }
}

struct Truncation<'a> {
    engine: &'a Engine,
    nu: Partition,
    shapes: HashMap<usize, Vec<Partition>>,
}

impl<'a> Truncation<'a> {
    fn new(engine: &'a Engine, nu: Partition) -> Self {
        Truncation {
            engine,
            nu,
            shapes: HashMap::new(),
        }
    }

    fn shapes(&mut self, size: usize) -> Vec<Partition> {
        let nu = &self.nu;
        self.shapes
            .entry(size)
            .or_insert_with(|| nu.subpartitions_of_size(size))
            .clone()
    }

    /// Coefficient of `s_θ` in `f · g`.
    fn product_coefficient(&self, f: &Elem, g: &Elem, theta: &Partition) -> BigInt {
        let (small, large) = if f.terms.len() <= g.terms.len() { (f, g) } else { (g, f) };
        let mut total = BigInt::zero();
        for (alpha, ca) in &small.terms {
            if !theta.contains(alpha) {
                continue;
            }
            let skew = self.engine.skew_expansion(theta, alpha);
            for (beta, c) in skew.iter() {
                if let Some(cb) = large.terms.get(beta) {
                    total += ca * cb * c;
                }
            }
        }
        total
    }

    fn product(&mut self, f: &Elem, g: &Elem) -> Elem {
        let degree = f.degree + g.degree;
        let mut out = Elem::zero(degree);
        if f.terms.is_empty() || g.terms.is_empty() {
            return out;
        }
        for theta in self.shapes(degree) {
            let c = self.product_coefficient(f, g, &theta);
            if !c.is_zero() {
                out.terms.insert(theta, c);
            }
        }
        out
    }

    /// Image of `p_k ∘ s_μ = s_μ[p_k]`.
    fn power_plethysm(&mut self, k: usize, mu: &Partition) -> Elem {
        let d = mu.size();
        let degree = k * d;
        let mut out = Elem::zero(degree);
        let classes: Vec<(Partition, BigRational)> = partitions_of(d)
            .filter_map(|sigma| {
                let chi = self.engine.chi(mu, &sigma);
                (!chi.is_zero()).then(|| {
                    let w = BigRational::new(chi, z_factor(&sigma));
                    (sigma.scale(k), w)
                })
            })
            .collect();
        for kappa in self.shapes(degree) {
            let mut c = BigRational::zero();
            for (cycle, w) in &classes {
                c += w * BigRational::from_integer(self.engine.chi(&kappa, cycle));
            }
            assert!(c.is_integer(), "non-integral Schur coefficient of s_mu[p_k]");
            let c = c.to_integer();
            if !c.is_zero() {
                out.terms.insert(kappa, c);
            }
        }
        out
    }

    /// Images of `h_a ∘ s_μ` (or `e_a ∘ s_μ` when `elementary`) for `a ≤ n`.
    fn newton(&mut self, n: usize, mu: &Partition, elementary: bool) -> Vec<Elem> {
        let d = mu.size();
        let powers: Vec<Elem> = (1..=n).map(|k| self.power_plethysm(k, mu)).collect();
        let mut seq = vec![Elem::one()];
        for a in 1..=n {
            let mut acc = Elem::zero(a * d);
            for i in 1..=a {
                let term = self.product(&powers[i - 1], &seq[a - i]);
                let sign = if elementary && i % 2 == 0 { -BigInt::one() } else { BigInt::one() };
                acc.add_scaled(&term, &sign);
            }
            acc.divide_exact(a);
            seq.push(acc);
        }
        seq
    }

    /// Coefficient of `s_ν` in `s_λ ∘ s_μ`.
    fn coefficient(&mut self, lambda: &Partition, mu: &Partition) -> BigInt {
        let elementary = lambda.len() > lambda.first_part();
        let shape = if elementary { lambda.conjugate() } else { lambda.clone() };
        let rows = shape.len();
        let n = shape.first_part() + rows;
        let seq = self.newton(n.min(lambda.size()), mu, elementary);
        let d = mu.size();

        // Jacobi–Trudi matrix entry (r, c) is seq[shape_r − r + c].
        let entry = |r: usize, c: usize| -> Option<&Elem> {
            let idx = (shape.part(r) + c).checked_sub(r)?;
            seq.get(idx)
        };

        // minors[S] = determinant of the bottom |S| rows restricted to columns S
        let full = (1usize << rows) - 1;
        let mut minors: HashMap<usize, Elem> = HashMap::new();
        minors.insert(0, Elem::one());
        for size in 1..rows {
            let row = rows - size;
            for set in subsets_of_size(rows, size) {
                let boxes = (row..rows).map(|r| shape.part(r)).sum::<usize>() + bits(set).sum::<usize>();
                let offset: usize = (row..rows).sum();
                let Some(boxes) = boxes.checked_sub(offset) else {
                    minors.insert(set, Elem::zero(0));
                    continue;
                };
                let mut acc = Elem::zero(boxes * d);
                for (pos, c) in bits(set).enumerate() {
                    let Some(a) = entry(row, c) else { continue };
                    let rest = &minors[&(set & !(1 << c))];
                    let term = self.product(a, rest);
                    let sign = if pos % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    acc.add_scaled(&term, &sign);
                }
                minors.insert(set, acc);
            }
        }
        let mut total = BigInt::zero();
        for (pos, c) in bits(full).enumerate() {
            let Some(a) = entry(0, c) else { continue };
            let rest = &minors[&(full & !(1 << c))];
            let v = self.product_coefficient(a, rest, &self.nu.clone());
            if pos % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        total
    }
}

fn bits(set: usize) -> impl Iterator<Item = usize> {
    (0..usize::BITS as usize).filter(move |&i| set & (1 << i) != 0)
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = usize> {
    (0usize..(1 << n)).filter(move |s| s.count_ones() as usize == k)
}

/// `⟨s_λ ∘ s_μ, s_ν⟩` for nonempty `λ`, `μ` with `|ν| = |λ||μ|`.
pub(crate) fn coefficient(engine: &Engine, nu: &Partition, lambda: &Partition, mu: &Partition) -> BigInt {
    debug_assert_eq!(nu.size(), lambda.size() * mu.size());
    let v = Truncation::new(engine, nu.clone()).coefficient(lambda, mu);
    debug_assert!(!v.is_negative());
    v
}
