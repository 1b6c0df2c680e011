//! Class functions, their character coefficients, and convolution.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::chartable::{generalized_indicator, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::oracle::{oracle_class_function, oracle_element_counts, Budget};
use crate::words::{recognize_shape, Word, WordShape};

/// A function on a group that is constant on conjugacy classes, stored as
/// one value per class in canonical class order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl ClassFunction {
    /// # Panics
    /// If `values` does not have one entry per conjugacy class.
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), group.classes().len(), "one value per class");
        ClassFunction { group, values }
    }

    pub fn from_integers(group: Arc<FiniteGroup>, values: &[i64]) -> Self {
        let e = group.exponent();
        let values = values.iter().map(|&v| Cyclotomic::from_integer(e, v)).collect();
        ClassFunction::new(group, values)
    }

    pub fn character(table: &CharacterTable, chi: usize) -> Self {
        ClassFunction::new(table.group().clone(), table.row(chi).to_vec())
    }

    /// `δ_1`: 1 on the identity, 0 elsewhere.
    pub fn identity_indicator(group: Arc<FiniteGroup>) -> Self {
        let e = group.exponent();
        let values = (0..group.classes().len())
            .map(|c| Cyclotomic::from_integer(e, i64::from(c == 0)))
            .collect();
        ClassFunction::new(group, values)
    }

    pub fn constant(group: Arc<FiniteGroup>, c: &Cyclotomic) -> Self {
        let values = vec![c.clone(); group.classes().len()];
        ClassFunction::new(group, values)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at an arbitrary element (by index).
    pub fn at(&self, element: usize) -> &Cyclotomic {
        &self.values[self.group.classes().class_of(element)]
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(q)).collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> Result<Self> {
        same_group(self, other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    /// Values as integers, if every value is one.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.values.iter().map(Cyclotomic::to_integer).collect()
    }
}

fn same_group(a: &ClassFunction, b: &ClassFunction) -> Result<()> {
    if Arc::ptr_eq(&a.group, &b.group) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

fn check_table(f: &ClassFunction, table: &CharacterTable) -> Result<()> {
    if Arc::ptr_eq(&f.group, table.group()) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// `(n/d)^exp` for a possibly negative exponent.
pub(crate) fn ratio_pow(n: &BigInt, d: &BigInt, exp: i64) -> BigRational {
    let base = BigRational::new(n.clone(), d.clone());
    let base = if exp < 0 { base.recip() } else { base };
    num_traits::pow(base, exp.unsigned_abs() as usize)
}

/// `⟨f1, f2⟩ = (1/|G|) Σ_g f1(g) conj(f2(g))`.
pub fn inner_product(f1: &ClassFunction, f2: &ClassFunction) -> Result<Cyclotomic> {
    same_group(f1, f2)?;
    let g = &f1.group;
    let classes = g.classes();
    let mut s = Cyclotomic::zero(g.exponent());
    for c in 0..classes.len() {
        let term = &f1.values[c] * &f2.values[c].conj();
        s += &term.scale_int(&BigInt::from(classes.size(c)));
    }
    Ok(s.scale(&BigRational::new(BigInt::one(), BigInt::from(g.order()))))
}

/// One coefficient `a_χ` per irreducible character, in table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientVector(pub Vec<Cyclotomic>);

impl CoefficientVector {
    pub fn get(&self, chi: usize) -> &Cyclotomic {
        &self.0[chi]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cyclotomic> {
        self.0.iter()
    }

    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0.iter().map(Cyclotomic::to_integer).collect()
    }

    pub fn to_rationals(&self) -> Option<Vec<BigRational>> {
        self.0.iter().map(Cyclotomic::to_rational).collect()
    }
}

/// `a_χ = ⟨f, χ⟩` for every irreducible `χ`.
pub fn coefficients_from_class_function(f: &ClassFunction, table: &CharacterTable) -> Result<CoefficientVector> {
    check_table(f, table)?;
    (0..table.len())
        .map(|chi| inner_product(f, &ClassFunction::character(table, chi)))
        .collect::<Result<_>>()
        .map(CoefficientVector)
}

/// `Σ_χ a_χ χ`.
pub fn expand(coeffs: &CoefficientVector, table: &CharacterTable) -> ClassFunction {
    let e = table.conductor();
    let r = table.group().classes().len();
    let values = (0..r)
        .map(|c| {
            let mut s = Cyclotomic::zero(e);
            for (chi, a) in coeffs.iter().enumerate() {
                s += &(a * table.value(chi, c));
            }
            s
        })
        .collect();
    ClassFunction::new(table.group().clone(), values)
}

/// Closed-form coefficients of `f_γ` for a recognized word shape.
pub fn closed_form_coefficients(shape: &WordShape, table: &CharacterTable) -> Result<CoefficientVector> {
    let n = BigInt::from(table.group().order());
    let e = table.conductor();
    let per_char = |chi: usize| -> Result<BigRational> {
        let d = BigInt::from(table.degree(chi));
        Ok(match shape {
            WordShape::ProductOfCommutators(g) => ratio_pow(&n, &d, 2 * *g as i64 - 1),
            WordShape::ProductOfSquares(k) => {
                let nu = BigRational::from_integer(table.indicator(chi).into());
                num_traits::pow(nu, *k) * ratio_pow(&n, &d, *k as i64 - 1)
            }
            WordShape::GeneralizedCommutatorProduct(blocks) => {
                let mut a = ratio_pow(&n, &d, blocks.len() as i64 - 1);
                for &m in blocks {
                    let eps = if m % 2 == 0 { 1 } else { 2 };
                    a *= ratio_pow(&n, &BigInt::one(), m as i64 - 1);
                    a *= ratio_pow(&BigInt::one(), &d, m as i64 - eps);
                }
                a
            }
            WordShape::PowerProduct(exps) => {
                let mut a = ratio_pow(&n, &d, exps.len() as i64 - 1);
                for &k in exps {
                    a *= BigRational::from_integer(generalized_indicator(table, chi, k)?);
                }
                a
            }
            WordShape::Generic => return Err(Error::GenericShape),
        })
    };
    (0..table.len())
        .map(|chi| per_char(chi).map(|q| Cyclotomic::from_rational(e, q)))
        .collect::<Result<_>>()
        .map(CoefficientVector)
}

/// Coefficients of `f_γ`: closed form when the shape is recognized, else
/// from the oracle class function.
pub fn word_coefficients(w: &Word, table: &CharacterTable, budget: &Budget) -> Result<CoefficientVector> {
    match closed_form_coefficients(&recognize_shape(w), table) {
        Err(Error::GenericShape) => {
            let f = oracle_class_function(w, table.group(), budget)?;
            coefficients_from_class_function(&f, table)
        }
        other => other,
    }
}

/// `F(w) = Σ_{u_1 ⋯ u_m = w} f_1(u_1) ⋯ f_m(u_m)`, via
/// `a_χ(F) = (|G|/χ(1))^{m-1} Π ⟨f_i, χ⟩`.
pub fn convolution(fs: &[ClassFunction], table: &CharacterTable) -> Result<ClassFunction> {
    let (first, rest) = fs
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("convolution of an empty list".into()))?;
    for f in rest {
        same_group(first, f)?;
    }
    check_table(first, table)?;
    let coeffs: Vec<CoefficientVector> = fs
        .iter()
        .map(|f| coefficients_from_class_function(f, table))
        .collect::<Result<_>>()?;
    let n = BigInt::from(table.group().order());
    let combined = (0..table.len())
        .map(|chi| {
            let scale = ratio_pow(&n, &BigInt::from(table.degree(chi)), fs.len() as i64 - 1);
            let prod = coeffs
                .iter()
                .skip(1)
                .fold(coeffs[0].get(chi).clone(), |acc, c| &acc * c.get(chi));
            prod.scale(&scale)
        })
        .collect();
    Ok(expand(&CoefficientVector(combined), table))
}

/// Convolution by the defining double sum, one pair at a time.
pub fn convolution_direct(fs: &[ClassFunction]) -> Result<ClassFunction> {
    let (first, rest) = fs
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("convolution of an empty list".into()))?;
    let g = first.group.clone();
    let classes = g.classes();
    let mut acc = first.clone();
    for f in rest {
        same_group(first, f)?;
        let values = (0..classes.len())
            .map(|c| {
                let w = classes.representative(c);
                let mut s = Cyclotomic::zero(g.exponent());
                for u in 0..g.order() {
                    let v = g.mul(g.inv(u), w);
                    s += &(acc.at(u) * f.at(v));
                }
                s
            })
            .collect();
        acc = ClassFunction::new(g.clone(), values);
    }
    Ok(acc)
}

/// True iff `|G|` divides `f_γ(1)`; requires rank at least 2.
pub fn solomon_check(w: &Word, group: &FiniteGroup, budget: &Budget) -> Result<bool> {
    if w.rank() < 2 {
        return Err(Error::InvalidArgument(format!(
            "divisibility check needs rank > 1, word has rank {}",
            w.rank()
        )));
    }
    let counts = oracle_element_counts(w, group, budget)?;
    Ok(counts[group.identity()] % group.order() as u64 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::compute_character_table;
    use crate::group::build_group;
    use crate::words::parse_word;

    fn table(spec: &str) -> CharacterTable {
        let g = Arc::new(build_group(&spec.parse().unwrap()).unwrap());
        compute_character_table(g).unwrap()
    }

    fn budget() -> Budget {
        Budget::new(1 << 22, 2)
    }

    fn ints(v: &CoefficientVector) -> Vec<i64> {
        v.to_integers()
            .unwrap()
            .into_iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn orthonormality() {
        let t = table("builtin:sym:4");
        for i in 0..t.len() {
            for j in 0..t.len() {
                let ip = inner_product(&ClassFunction::character(&t, i), &ClassFunction::character(&t, j)).unwrap();
                assert_eq!(ip, Cyclotomic::from_integer(t.conductor(), i64::from(i == j)));
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        let t = table("builtin:sym:3");
        let g = t.group().clone();
        let one = ClassFunction::constant(g.clone(), &Cyclotomic::one(t.conductor()));
        assert_eq!(ints(&coefficients_from_class_function(&one, &t).unwrap()), vec![1, 0, 0]);

        let delta = ClassFunction::identity_indicator(g.clone());
        let a = coefficients_from_class_function(&delta, &t).unwrap();
        let expected: Vec<_> = t
            .degrees()
            .iter()
            .map(|&d| Cyclotomic::from_rational(6, BigRational::new(d.into(), 6.into())))
            .collect();
        assert_eq!(a.0, expected);

        let comm = oracle_class_function(&parse_word("[x1,x2]", 2).unwrap(), &g, &budget()).unwrap();
        assert_eq!(ints(&coefficients_from_class_function(&comm, &t).unwrap()), vec![6, 6, 3]);

        let sq = oracle_class_function(&parse_word("x1^2", 1).unwrap(), &g, &budget()).unwrap();
        assert_eq!(ints(&coefficients_from_class_function(&sq, &t).unwrap()), vec![1, 1, 1]);
    }

    #[test]
    fn closed_form_examples() {
        let t = table("builtin:sym:3");
        assert_eq!(
            ints(&closed_form_coefficients(&WordShape::ProductOfCommutators(1), &t).unwrap()),
            vec![6, 6, 3]
        );
        assert_eq!(
            closed_form_coefficients(&WordShape::GeneralizedCommutatorProduct(vec![2]), &t).unwrap(),
            closed_form_coefficients(&WordShape::ProductOfCommutators(1), &t).unwrap()
        );
        let q8 = table("builtin:q8");
        assert_eq!(
            ints(&closed_form_coefficients(&WordShape::ProductOfSquares(1), &q8).unwrap()),
            vec![1, 1, 1, 1, -1]
        );
        assert_eq!(
            closed_form_coefficients(&WordShape::Generic, &t),
            Err(Error::GenericShape)
        );
    }

    #[test]
    fn closed_forms_match_oracle() {
        let words = [
            ("x1^2", 1),
            ("x1^2 x2^2", 2),
            ("x1^2 x2^2 x3^2", 3),
            ("[x1,x2]", 2),
            ("[x1,x2,x3]", 3),
            ("[x1,x2,x3,x4]", 4),
            ("[x1,x2][x3,x4]", 4),
            ("[x1,x2,x3][x4,x5]", 5),
            ("x1^3", 1),
            ("x1^-2", 1),
            ("x1^2 x2^3", 2),
            ("x1^4 x2^-1", 2),
        ];
        for spec in ["builtin:sym:3", "builtin:q8", "builtin:cyc:6", "builtin:dih:4"] {
            let t = table(spec);
            for (text, r) in words {
                let w = parse_word(text, r).unwrap();
                if (t.group().order() as u64).pow(r as u32) > 1 << 16 {
                    continue;
                }
                let closed = closed_form_coefficients(&recognize_shape(&w), &t).unwrap();
                let f = oracle_class_function(&w, t.group(), &budget()).unwrap();
                let from_oracle = coefficients_from_class_function(&f, &t).unwrap();
                assert_eq!(closed, from_oracle, "{text} on {spec}");
                assert!(closed.to_integers().is_some());
                assert_eq!(expand(&closed, &t), f);
            }
        }
    }

    #[test]
    fn convolution_identities() {
        let t = table("builtin:sym:3");
        let g = t.group().clone();
        let b = budget();
        let sq1 = oracle_class_function(&parse_word("x1^2", 1).unwrap(), &g, &b).unwrap();
        let sq2 = oracle_class_function(&parse_word("x1^2 x2^2", 2).unwrap(), &g, &b).unwrap();
        let delta = ClassFunction::identity_indicator(g.clone());

        assert_eq!(convolution(&[sq1.clone(), delta.clone()], &t).unwrap(), sq1);
        assert_eq!(convolution(&[sq1.clone(), sq1.clone()], &t).unwrap(), sq2);
        assert_eq!(convolution_direct(&[sq1.clone(), sq1.clone()]).unwrap(), sq2);

        for chi in 0..t.len() {
            let c = ClassFunction::character(&t, chi);
            let expected = c.scale(&BigRational::new(6.into(), t.degree(chi).into()));
            assert_eq!(convolution_direct(&[c.clone(), c.clone()]).unwrap(), expected);
            assert_eq!(convolution(&[c.clone(), c], &t).unwrap(), expected);
        }
    }

    #[test]
    fn convolution_paths_agree_on_small_groups() {
        for spec in ["builtin:sym:4", "builtin:q8", "builtin:alt:4", "builtin:cyc:7"] {
            let t = table(spec);
            let g = t.group().clone();
            let fs: Vec<ClassFunction> = (0..t.len().min(3))
                .map(|chi| {
                    let c = ClassFunction::character(&t, chi);
                    c.add(&ClassFunction::character(&t, t.len() - 1 - chi)).unwrap()
                })
                .chain([oracle_nth_roots(&g, 2)])
                .collect();
            assert_eq!(convolution(&fs, &t).unwrap(), convolution_direct(&fs).unwrap(), "{spec}");
        }
    }

    fn oracle_nth_roots(g: &Arc<FiniteGroup>, n: i64) -> ClassFunction {
        crate::oracle::oracle_nth_root_counts(g, n).unwrap()
    }

    #[test]
    fn group_mismatch() {
        let a = table("builtin:sym:3");
        let b = table("builtin:sym:3");
        let fa = ClassFunction::character(&a, 0);
        let fb = ClassFunction::character(&b, 0);
        assert_eq!(inner_product(&fa, &fb), Err(Error::GroupMismatch));
        assert_eq!(coefficients_from_class_function(&fa, &b), Err(Error::GroupMismatch));
    }

    #[test]
    fn solomon_examples() {
        let g = build_group(&"builtin:sym:3".parse().unwrap()).unwrap();
        for w in ["[x1,x2]", "x1 x2", "x1^2 x2^2"] {
            assert!(solomon_check(&parse_word(w, 2).unwrap(), &g, &budget()).unwrap());
        }
        assert!(solomon_check(&parse_word("x1^2", 1).unwrap(), &g, &budget()).is_err());
    }

    #[test]
    fn conjugate_symmetry_of_coefficients() {
        let t = table("builtin:cyc:7");
        for shape in [WordShape::ProductOfSquares(2), WordShape::ProductOfCommutators(1)] {
            let a = closed_form_coefficients(&shape, &t).unwrap();
            for chi in 0..t.len() {
                assert_eq!(a.get(chi), a.get(t.conj_index(chi)));
            }
        }
    }
}
