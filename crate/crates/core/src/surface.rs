//! Homomorphism counts for surface groups and one-relator word equations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chartable::CharacterTable;
use crate::classfun::{ratio_pow, word_coefficients};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::oracle::{oracle_count_with_boundary, Budget};
use crate::words::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    /// Orientable of genus `g ≥ 0`.
    Orientable(usize),
    /// Nonorientable with `k ≥ 1` crosscaps.
    Nonorientable(usize),
}

impl SurfaceKind {
    /// The relator word without boundary: `Π [x_{2i-1}, x_{2i}]` or `Π x_i²`.
    pub fn relator(&self) -> Word {
        let letters: Vec<Letter> = match *self {
            SurfaceKind::Orientable(g) => (0..g)
                .flat_map(|i| {
                    let (a, b) = (2 * i, 2 * i + 1);
                    [(a, 1), (b, 1), (a, -1), (b, -1)]
                })
                .map(|(generator, exponent)| Letter { generator, exponent })
                .collect(),
            SurfaceKind::Nonorientable(k) => (0..k)
                .map(|generator| Letter { generator, exponent: 2 })
                .collect(),
        };
        let rank = match *self {
            SurfaceKind::Orientable(g) => 2 * g,
            SurfaceKind::Nonorientable(k) => k,
        };
        Word::new(rank, letters).expect("generators below rank")
    }

    /// Exponent `a` in the prefactor `|G|^a`: `2g-1` or `k-1`.
    fn free_exponent(&self) -> i64 {
        match *self {
            SurfaceKind::Orientable(g) => 2 * g as i64 - 1,
            SurfaceKind::Nonorientable(k) => k as i64 - 1,
        }
    }
}

/// A compact surface with boundary circles labelled by conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub kind: SurfaceKind,
    pub boundary: Vec<usize>,
}

impl SurfaceSpec {
    pub fn closed(kind: SurfaceKind) -> Self {
        SurfaceSpec {
            kind,
            boundary: Vec::new(),
        }
    }
}

/// An exact count together with the per-character summands it came from.
/// The summands include all prefactors, so they add up to `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCount {
    pub value: BigInt,
    pub terms: Vec<Cyclotomic>,
}

impl HomCount {
    fn from_terms(terms: Vec<Cyclotomic>, e: u64) -> Result<Self> {
        let mut total = Cyclotomic::zero(e);
        for t in &terms {
            total += t;
        }
        match total.to_integer() {
            Some(v) if !v.is_negative() => Ok(HomCount { value: v, terms }),
            _ => Err(Error::NonIntegerResult(total.to_string())),
        }
    }
}

fn check_boundary(table: &CharacterTable, boundary: &[usize]) -> Result<()> {
    let r = table.len();
    match boundary.iter().find(|&&c| c >= r) {
        Some(c) => Err(Error::InvalidArgument(format!(
            "class #{c} out of range: group has {r} classes"
        ))),
        None => Ok(()),
    }
}

fn check_kind(kind: SurfaceKind) -> Result<()> {
    match kind {
        SurfaceKind::Nonorientable(0) => Err(Error::InvalidArgument(
            "nonorientable surfaces need at least one crosscap".into(),
        )),
        _ => Ok(()),
    }
}

/// `Π_i χ(C_i)`.
fn class_product(table: &CharacterTable, chi: usize, boundary: &[usize]) -> Cyclotomic {
    boundary
        .iter()
        .fold(Cyclotomic::one(table.conductor()), |acc, &c| &acc * table.value(chi, c))
}

fn class_size_product(table: &CharacterTable, boundary: &[usize]) -> BigInt {
    let classes = table.group().classes();
    boundary.iter().map(|&c| BigInt::from(classes.size(c))).product()
}

/// Count for any surface, closed or bounded:
/// `|G|^a Π|C_i| Σ_χ w(χ) Π χ(C_i) / χ(1)^(n+a-1)` with `a = 2g-1, w = 1`
/// (orientable) or `a = k-1, w = ν(χ)^k` (nonorientable).
pub fn count_surface(table: &CharacterTable, spec: &SurfaceSpec) -> Result<HomCount> {
    check_kind(spec.kind)?;
    check_boundary(table, &spec.boundary)?;
    let order = BigInt::from(table.group().order());
    let a = spec.kind.free_exponent();
    let n = spec.boundary.len() as i64;
    let prefactor = ratio_pow(&order, &BigInt::one(), a) * BigRational::from_integer(class_size_product(table, &spec.boundary));
    let terms = (0..table.len())
        .map(|chi| {
            let weight = match spec.kind {
                SurfaceKind::Orientable(_) => BigInt::one(),
                SurfaceKind::Nonorientable(k) => num_traits::pow(BigInt::from(table.indicator(chi)), k),
            };
            if weight.is_zero() {
                return Cyclotomic::zero(table.conductor());
            }
            let d = BigInt::from(table.degree(chi));
            let scale = &prefactor * BigRational::from_integer(weight) * ratio_pow(&BigInt::one(), &d, n + a - 1);
            class_product(table, chi, &spec.boundary).scale(&scale)
        })
        .collect();
    HomCount::from_terms(terms, table.conductor())
}

/// `|G|^(2g-1) Σ_χ χ(1)^(2-2g)`.
pub fn count_closed_orientable(table: &CharacterTable, g: usize) -> Result<HomCount> {
    count_surface(table, &SurfaceSpec::closed(SurfaceKind::Orientable(g)))
}

/// `|G|^(k-1) Σ_χ ν(χ)^k χ(1)^(2-k)`.
pub fn count_closed_nonorientable(table: &CharacterTable, k: usize) -> Result<HomCount> {
    count_surface(table, &SurfaceSpec::closed(SurfaceKind::Nonorientable(k)))
}

pub fn count_bounded_orientable(table: &CharacterTable, g: usize, boundary: &[usize]) -> Result<HomCount> {
    count_surface(
        table,
        &SurfaceSpec {
            kind: SurfaceKind::Orientable(g),
            boundary: boundary.to_vec(),
        },
    )
}

pub fn count_bounded_nonorientable(table: &CharacterTable, k: usize, boundary: &[usize]) -> Result<HomCount> {
    count_surface(
        table,
        &SurfaceSpec {
            kind: SurfaceKind::Nonorientable(k),
            boundary: boundary.to_vec(),
        },
    )
}

/// `#{(g, c) ∈ G^r × ΠC_i : γ(g) c_1 ⋯ c_n = 1}` as
/// `Π|C_i| Σ_χ a_{χ̄} χ(1)^(1-n) Π χ(C_i)`.
///
/// Generic words get their coefficients from the oracle, within `budget`.
pub fn count_general(w: &Word, table: &CharacterTable, boundary: &[usize], budget: &Budget) -> Result<HomCount> {
    check_boundary(table, boundary)?;
    let coeffs = word_coefficients(w, table, budget)?;
    let sizes = BigRational::from_integer(class_size_product(table, boundary));
    let n = boundary.len() as i64;
    let terms = (0..table.len())
        .map(|chi| {
            let d = BigInt::from(table.degree(chi));
            let scale = &sizes * ratio_pow(&d, &BigInt::one(), 1 - n);
            (coeffs.get(table.conj_index(chi)) * &class_product(table, chi, boundary)).scale(&scale)
        })
        .collect();
    HomCount::from_terms(terms, table.conductor())
}

/// Brute-force count for a surface, for cross-checking.
pub fn oracle_surface_count(table: &CharacterTable, spec: &SurfaceSpec, budget: &Budget) -> Result<BigInt> {
    check_kind(spec.kind)?;
    oracle_count_with_boundary(&spec.kind.relator(), table.group(), &spec.boundary, budget)
}

/// All ordered `n`-tuples of class indices, row-major.
fn class_tuples(r: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = r.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % r;
            idx /= r;
        }
        t
    })
}

const MAX_CLASS_TUPLES: usize = 1 << 20;

fn check_tuple_count(r: usize, n: usize) -> Result<()> {
    match r.checked_pow(n as u32) {
        Some(t) if t <= MAX_CLASS_TUPLES => Ok(()),
        _ => Err(Error::InvalidArgument(format!("{r}^{n} class tuples is too many to sum"))),
    }
}

/// Sum over all ordered class `n`-tuples of the bounded count divided by
/// `|G|^(2g-1)` (or `|G|^(k-1)`), paired with `|G|^n`.
pub fn tuple_sum_identity(table: &CharacterTable, kind: SurfaceKind, n: usize) -> Result<(BigInt, BigInt)> {
    check_kind(kind)?;
    if n == 0 {
        return Err(Error::InvalidArgument("tuple sums need n ≥ 1".into()));
    }
    check_tuple_count(table.len(), n)?;
    let order = BigInt::from(table.group().order());
    let norm = ratio_pow(&order, &BigInt::one(), kind.free_exponent());
    let mut sum = BigRational::zero();
    for boundary in class_tuples(table.len(), n) {
        let c = count_surface(table, &SurfaceSpec { kind, boundary })?;
        sum += BigRational::from_integer(c.value) / &norm;
    }
    if !sum.is_integer() {
        return Err(Error::NonIntegerResult(sum.to_string()));
    }
    Ok((sum.to_integer(), num_traits::pow(order, n)))
}

/// `(|G|^n, S_1, S_ν)` where `S_1` sums `Π|C_i| Σ_χ Π χ(C_i)` over class
/// tuples and linear `χ`, and `S_ν` further restricts to `ν(χ) = 1`.
pub fn linear_character_identity(table: &CharacterTable, n: usize) -> Result<(BigInt, BigInt, BigInt)> {
    if n == 0 {
        return Err(Error::InvalidArgument("tuple sums need n ≥ 1".into()));
    }
    check_tuple_count(table.len(), n)?;
    let e = table.conductor();
    let linear: Vec<usize> = (0..table.len()).filter(|&chi| table.degree(chi) == 1).collect();
    let mut all = Cyclotomic::zero(e);
    let mut real = Cyclotomic::zero(e);
    for boundary in class_tuples(table.len(), n) {
        let sizes = class_size_product(table, &boundary);
        for &chi in &linear {
            let term = class_product(table, chi, &boundary).scale_int(&sizes);
            if table.indicator(chi) == 1 {
                real += &term;
            }
            all += &term;
        }
    }
    let as_int = |c: Cyclotomic| c.to_integer().ok_or_else(|| Error::NonIntegerResult(c.to_string()));
    Ok((
        num_traits::pow(BigInt::from(table.group().order()), n),
        as_int(all)?,
        as_int(real)?,
    ))
}

/// True iff the count is unchanged when the boundary is permuted by
/// `permutation` (position `i` receives `boundary[permutation[i]]`), and,
/// for nonorientable surfaces, when every class is replaced by its inverse.
pub fn reorder_and_invert_invariance(
    table: &CharacterTable,
    kind: SurfaceKind,
    boundary: &[usize],
    permutation: &[usize],
) -> Result<bool> {
    let mut sorted = permutation.to_vec();
    sorted.sort_unstable();
    if sorted != (0..boundary.len()).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument(format!(
            "{permutation:?} is not a permutation of {} positions",
            boundary.len()
        )));
    }
    let base = count_surface(
        table,
        &SurfaceSpec {
            kind,
            boundary: boundary.to_vec(),
        },
    )?;
    let reordered = SurfaceSpec {
        kind,
        boundary: permutation.iter().map(|&i| boundary[i]).collect(),
    };
    if count_surface(table, &reordered)?.value != base.value {
        return Ok(false);
    }
    if let SurfaceKind::Nonorientable(_) = kind {
        let classes = table.group().classes();
        let inverted = SurfaceSpec {
            kind,
            boundary: boundary.iter().map(|&c| classes.inverse_class(c)).collect(),
        };
        if count_surface(table, &inverted)?.value != base.value {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::compute_character_table;
    use crate::group::build_group;
    use crate::words::parse_word;
    use std::sync::Arc;

    fn table(spec: &str) -> CharacterTable {
        let g = Arc::new(build_group(&spec.parse().unwrap()).unwrap());
        compute_character_table(g).unwrap()
    }

    fn budget() -> Budget {
        Budget::new(1 << 22, 2)
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    // S3 classes: #0 identity, #1 3-cycles, #2 transpositions.
    #[test]
    fn closed_examples() {
        let s3 = table("builtin:sym:3");
        assert_eq!(count_closed_orientable(&s3, 0).unwrap().value, int(1));
        assert_eq!(count_closed_orientable(&s3, 1).unwrap().value, int(18));
        assert_eq!(count_closed_orientable(&s3, 2).unwrap().value, int(486));
        assert_eq!(count_closed_nonorientable(&s3, 1).unwrap().value, int(4));
        assert_eq!(count_closed_nonorientable(&s3, 2).unwrap().value, int(18));
        let q8 = table("builtin:q8");
        assert_eq!(count_closed_nonorientable(&q8, 1).unwrap().value, int(2));
        assert!(count_closed_nonorientable(&q8, 0).is_err());
        assert_eq!(count_closed_orientable(&table("builtin:cyc:1"), 3).unwrap().value, int(1));
    }

    #[test]
    fn terms_sum_to_value() {
        let t = table("builtin:cyc:7");
        let c = count_bounded_orientable(&t, 1, &[1, 2]).unwrap();
        let mut s = Cyclotomic::zero(7);
        for term in &c.terms {
            s += term;
        }
        assert_eq!(s.to_integer().unwrap(), c.value);
        assert!(c.terms.iter().any(|x| !x.is_rational()));
    }

    #[test]
    fn bounded_examples() {
        let s3 = table("builtin:sym:3");
        assert_eq!(count_bounded_orientable(&s3, 0, &[0]).unwrap().value, int(1));
        assert_eq!(count_bounded_orientable(&s3, 0, &[2, 2]).unwrap().value, int(3));
        assert_eq!(count_bounded_orientable(&s3, 0, &[1, 2]).unwrap().value, int(0));
        assert_eq!(count_bounded_nonorientable(&s3, 1, &[1]).unwrap().value, int(2));
        assert_eq!(count_bounded_nonorientable(&s3, 1, &[0]).unwrap().value, int(4));
        assert_eq!(
            count_bounded_nonorientable(&s3, 2, &[]).unwrap(),
            count_closed_nonorientable(&s3, 2).unwrap()
        );
        assert!(count_bounded_orientable(&s3, 1, &[3]).is_err());
    }

    #[test]
    fn formulas_match_oracle() {
        for spec in ["builtin:sym:3", "builtin:dih:4", "builtin:q8", "builtin:cyc:6", "builtin:alt:4"] {
            let t = table(spec);
            let r = t.len();
            let kinds = [
                SurfaceKind::Orientable(0),
                SurfaceKind::Orientable(1),
                SurfaceKind::Nonorientable(1),
                SurfaceKind::Nonorientable(2),
            ];
            for kind in kinds {
                for boundary in std::iter::once(vec![])
                    .chain(class_tuples(r, 1))
                    .chain(class_tuples(r, 2))
                {
                    let s = SurfaceSpec { kind, boundary };
                    let formula = count_surface(&t, &s).unwrap().value;
                    let brute = oracle_surface_count(&t, &s, &budget()).unwrap();
                    assert_eq!(formula, brute, "{spec} {s:?}");
                }
            }
        }
    }

    #[test]
    fn general_examples() {
        let s3 = table("builtin:sym:3");
        let b = budget();
        let empty = Word::identity(0);
        assert_eq!(count_general(&empty, &s3, &[2, 2], &b).unwrap().value, int(3));
        assert_eq!(count_general(&empty, &s3, &[1, 2], &b).unwrap().value, int(0));
        for (text, r) in [("x1^3", 1), ("[x1,x2,x3]", 3), ("x1^2 x2^3", 2), ("x1 x2 x1 x2^-1", 2)] {
            let w = parse_word(text, r).unwrap();
            for boundary in [vec![], vec![0], vec![1], vec![2], vec![1, 2]] {
                let formula = count_general(&w, &s3, &boundary, &b).unwrap().value;
                let brute = oracle_count_with_boundary(&w, s3.group(), &boundary, &b).unwrap();
                assert_eq!(formula, brute, "{text} {boundary:?}");
            }
        }
    }

    #[test]
    fn corollary_identities() {
        let s3 = table("builtin:sym:3");
        assert_eq!(
            tuple_sum_identity(&s3, SurfaceKind::Orientable(1), 2).unwrap(),
            (int(36), int(36))
        );
        assert_eq!(
            tuple_sum_identity(&s3, SurfaceKind::Nonorientable(1), 2).unwrap(),
            (int(36), int(36))
        );
        assert_eq!(linear_character_identity(&s3, 1).unwrap(), (int(6), int(6), int(6)));
        let q8 = table("builtin:q8");
        assert_eq!(linear_character_identity(&q8, 2).unwrap(), (int(64), int(64), int(64)));
    }

    #[test]
    fn invariance() {
        let s3 = table("builtin:sym:3");
        assert!(reorder_and_invert_invariance(&s3, SurfaceKind::Orientable(1), &[2, 1], &[1, 0]).unwrap());
        let z7 = table("builtin:cyc:7");
        let x = (1..7).find(|&c| z7.group().classes().inverse_class(c) != c).unwrap();
        assert!(reorder_and_invert_invariance(&z7, SurfaceKind::Nonorientable(1), &[x], &[0]).unwrap());
        assert!(reorder_and_invert_invariance(&z7, SurfaceKind::Nonorientable(1), &[x, 3], &[2]).is_err());
        // Orientation matters for orientable surfaces: C and C⁻¹ give
        // different counts in Z7, but the invariance check does not invert.
        let a = count_bounded_orientable(&z7, 0, &[x, x]).unwrap().value;
        let b = count_bounded_orientable(&z7, 0, &[x, z7.group().classes().inverse_class(x)]).unwrap().value;
        assert_ne!(a, b);
    }

    #[test]
    fn solomon_divisibility_of_closed_counts() {
        for spec in ["builtin:sym:4", "builtin:alt:5", "builtin:dih:5"] {
            let t = table(spec);
            let order = BigInt::from(t.group().order());
            for g in 1..=3 {
                assert!((count_closed_orientable(&t, g).unwrap().value % &order).is_zero());
            }
            for k in 2..=4 {
                assert!((count_closed_nonorientable(&t, k).unwrap().value % &order).is_zero());
            }
        }
    }
}
