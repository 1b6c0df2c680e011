//! Partitions and symmetric functions in the power-sum basis.
//!
//! Class functions on `S_n` map to degree-`n` symmetric functions by
//! `ch(f) = Σ_μ f(μ) p_μ / z_μ`, which sends `χ^λ` to the Schur function
//! `s_λ`. Everything here is exact.

mod partition;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use partition::{centralizer_order, contents, factorial, hook_product, partitions_of, Partition};

use crate::chartable::symmetric_group_character;
use crate::classfun::{ratio_pow, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Builtin, FiniteGroup, GroupSpec};
use crate::oracle::{oracle_class_function, Budget};
use crate::surface::SurfaceKind;
use crate::words::{recognize_shape, Word, WordShape};

/// A homogeneous symmetric function of degree `n` in the `p_μ` basis.
/// Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBasisVector {
    weight: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl PBasisVector {
    pub fn zero(weight: usize) -> Self {
        PBasisVector {
            weight,
            coeffs: BTreeMap::new(),
        }
    }

    /// `c · p_μ`.
    pub fn monomial(mu: Partition, c: BigRational) -> Self {
        let mut v = PBasisVector::zero(mu.weight());
        v.add_term(mu, c).expect("weights agree");
        v
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn coefficient(&self, mu: &Partition) -> BigRational {
        self.coeffs.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms, largest partition first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter().rev()
    }

    pub fn add_term(&mut self, mu: Partition, c: BigRational) -> Result<()> {
        if mu.weight() != self.weight {
            return Err(Error::WeightMismatch {
                left: self.weight,
                right: mu.weight(),
            });
        }
        let entry = self.coeffs.entry(mu).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &PBasisVector) -> Result<Self> {
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_term(mu.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return PBasisVector::zero(self.weight);
        }
        PBasisVector {
            weight: self.weight,
            coeffs: self.coeffs.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// Hall inner product, `⟨p_λ, p_μ⟩ = δ_λμ z_λ`.
    pub fn inner(&self, other: &PBasisVector) -> Result<BigRational> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch {
                left: self.weight,
                right: other.weight,
            });
        }
        Ok(self
            .coeffs
            .iter()
            .filter_map(|(mu, a)| other.coeffs.get(mu).map(|b| a * b * centralizer_order(mu)))
            .sum())
    }

    /// Principal specialization at `x_1 = ... = x_q = 1`: `p_μ ↦ q^{len μ}`.
    pub fn specialize_ones(&self, q: u64) -> BigRational {
        self.coeffs
            .iter()
            .map(|(mu, c)| c * BigInt::from(q).pow(mu.len() as u32))
            .sum()
    }
}

impl fmt::Display for PBasisVector {
    /// `1/2 p(1,1) + 1/2 p(2)`, largest partition first; zero prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (mu, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "p{mu}")?;
        }
        Ok(())
    }
}

/// `S_n` acting naturally on `n` points.
pub fn symmetric_group(n: usize) -> Result<Arc<FiniteGroup>> {
    let g = crate::group::build_group(&GroupSpec::Builtin(Builtin::Symmetric(n)))?;
    Ok(Arc::new(g))
}

/// Cycle type of each conjugacy class, or `NotSymmetricGroup`.
pub fn class_cycle_types(g: &FiniteGroup) -> Result<Vec<Partition>> {
    g.symmetric_degree().ok_or(Error::NotSymmetricGroup)?;
    let classes = g.classes();
    Ok((0..classes.len())
        .map(|c| Partition::new(g.element(classes.representative(c)).cycle_type()))
        .collect())
}

/// `ch(f) = Σ_μ f(μ) p_μ / z_μ` for a rational class function on `S_n`.
pub fn ch(f: &ClassFunction) -> Result<PBasisVector> {
    let g = f.group();
    let n = g.symmetric_degree().ok_or(Error::NotSymmetricGroup)?;
    let mut out = PBasisVector::zero(n);
    for (c, mu) in class_cycle_types(g)?.into_iter().enumerate() {
        let v = f
            .value(c)
            .to_rational()
            .ok_or_else(|| Error::InvalidArgument(format!("class function value {} is not rational", f.value(c))))?;
        let z = centralizer_order(&mu);
        out.add_term(mu, v / z)?;
    }
    Ok(out)
}

/// The inverse of `ch`: `f(μ) = z_μ · [p_μ] v`.
pub fn class_function_from_p(v: &PBasisVector, g: &Arc<FiniteGroup>) -> Result<ClassFunction> {
    let n = g.symmetric_degree().ok_or(Error::NotSymmetricGroup)?;
    if n != v.weight() {
        return Err(Error::WeightMismatch {
            left: v.weight(),
            right: n,
        });
    }
    let e = g.exponent();
    let values = class_cycle_types(g)?
        .iter()
        .map(|mu| Cyclotomic::from_rational(e, v.coefficient(mu) * centralizer_order(mu)))
        .collect();
    Ok(ClassFunction::new(g.clone(), values))
}

/// `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.
pub fn schur_in_p(lambda: &Partition) -> PBasisVector {
    let n = lambda.weight();
    let mut out = PBasisVector::zero(n);
    for mu in partitions_of(n) {
        let chi = symmetric_group_character(lambda, &mu).expect("same weight");
        let z = centralizer_order(&mu);
        out.add_term(mu, BigRational::new(chi.into(), z)).expect("same weight");
    }
    out
}

/// `χ^λ(1) = n! / H_λ`.
pub fn symmetric_degree_of(lambda: &Partition) -> BigInt {
    factorial(lambda.weight()) / hook_product(lambda)
}

/// `ν_m(χ^λ) = Σ_μ χ^λ(μ^m) / z_μ`, from Murnaghan-Nakayama values.
pub fn symmetric_indicator(lambda: &Partition, m: i64) -> Result<BigInt> {
    let n = lambda.weight();
    let mut s = BigRational::zero();
    for mu in partitions_of(n) {
        let chi = symmetric_group_character(lambda, &mu.power(m))?;
        s += BigRational::new(chi.into(), centralizer_order(&mu));
    }
    if !s.is_integer() {
        return Err(Error::NonIntegerIndicator {
            character: 0,
            n: m,
            value: s.to_string(),
        });
    }
    Ok(s.to_integer())
}

/// Closed-form coefficient `a_{χ^λ}` of a shaped word on `S_n`, with
/// degrees from hook lengths and indicators from Murnaghan-Nakayama.
fn symmetric_shape_coefficient(shape: &WordShape, lambda: &Partition) -> Result<BigRational> {
    let n = factorial(lambda.weight());
    let d = symmetric_degree_of(lambda);
    Ok(match shape {
        WordShape::ProductOfCommutators(g) => ratio_pow(&n, &d, 2 * *g as i64 - 1),
        WordShape::ProductOfSquares(k) => {
            let nu = BigRational::from_integer(symmetric_indicator(lambda, 2)?);
            num_traits::pow(nu, *k) * ratio_pow(&n, &d, *k as i64 - 1)
        }
        WordShape::GeneralizedCommutatorProduct(blocks) => {
            let mut a = ratio_pow(&n, &d, blocks.len() as i64 - 1);
            for &m in blocks {
                let eps = if m % 2 == 0 { 1 } else { 2 };
                a *= ratio_pow(&n, &BigInt::one(), m as i64 - 1) * ratio_pow(&BigInt::one(), &d, m as i64 - eps);
            }
            a
        }
        WordShape::PowerProduct(exps) => {
            let mut a = ratio_pow(&n, &d, exps.len() as i64 - 1);
            for &k in exps {
                a *= BigRational::from_integer(symmetric_indicator(lambda, k)?);
            }
            a
        }
        WordShape::Generic => return Err(Error::GenericShape),
    })
}

/// `(1/n!) Σ_{u ∈ S_n^r} p_{ρ(γ(u))}`, from the oracle's class function.
pub fn word_power_sum_average(w: &Word, n: usize, budget: &Budget) -> Result<PBasisVector> {
    let g = symmetric_group(n)?;
    ch(&oracle_class_function(w, &g, budget)?)
}

/// `Σ_λ a_λ s_λ` with `a_λ` from closed forms when the word is shaped,
/// otherwise `a_λ = ⟨f_γ, χ^λ⟩` with `f_γ` from the oracle.
pub fn schur_side(w: &Word, n: usize, budget: &Budget) -> Result<PBasisVector> {
    let shape = recognize_shape(w);
    let oracle_ch = match shape {
        WordShape::Generic => Some(word_power_sum_average(w, n, budget)?),
        _ => None,
    };
    let mut out = PBasisVector::zero(n);
    for lambda in partitions_of(n) {
        let s = schur_in_p(&lambda);
        let a = match &oracle_ch {
            Some(v) => v.inner(&s)?,
            None => symmetric_shape_coefficient(&shape, &lambda)?,
        };
        out = out.add(&s.scale(&a))?;
    }
    Ok(out)
}

/// Both sides of the `1^q` specialization of the word-average identity for
/// squares (`Nonorientable(k)`) or commutators (`Orientable(g)`):
/// `(1/n!) Σ_u q^{κ(γ(u))}` by enumeration, and `Σ_λ H_λ^e Π_t (q + c(t))`
/// with `e = k - 2` or `2g - 2`.
pub fn specialized_identity_check(
    kind: SurfaceKind,
    n: usize,
    q: u64,
    budget: &Budget,
) -> Result<(BigRational, BigRational)> {
    let e = match kind {
        SurfaceKind::Nonorientable(0) => {
            return Err(Error::InvalidArgument("square products need k ≥ 1".into()));
        }
        SurfaceKind::Nonorientable(k) => k as i64 - 2,
        SurfaceKind::Orientable(g) => 2 * g as i64 - 2,
    };
    let left = word_power_sum_average(&kind.relator(), n, budget)?.specialize_ones(q);
    let right = partitions_of(n)
        .iter()
        .map(|lambda| {
            let content_prod: BigInt = contents(lambda).iter().map(|&c| BigInt::from(q as i64 + c)).product();
            ratio_pow(&hook_product(lambda), &BigInt::one(), e) * content_prod
        })
        .sum();
    Ok((left, right))
}

pub const GENFUN_MAX_N: usize = 40;

/// Coefficients of `Σ_n Σ_{λ ⊢ n} (n!/H_λ)^e x^n` for `n = 0..=max_n`.
pub fn genfun_coefficients(e: i64, max_n: usize) -> Result<Vec<BigRational>> {
    if max_n > GENFUN_MAX_N {
        return Err(Error::InvalidArgument(format!(
            "series truncation {max_n} exceeds {GENFUN_MAX_N}"
        )));
    }
    Ok((0..=max_n)
        .map(|n| {
            partitions_of(n)
                .iter()
                .map(|lambda| ratio_pow(&symmetric_degree_of(lambda), &BigInt::one(), e))
                .sum()
        })
        .collect())
}
