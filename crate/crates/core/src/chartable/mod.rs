//! Exact character tables, indicators and central characters.

mod dixon;
pub mod modp;
mod murnaghan;

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use dixon::dixon_prime;
pub use murnaghan::symmetric_group_character;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Class multiplication coefficients
/// `a_ijk = #{(x, y) ∈ C_i × C_j : xy = rep(C_k)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    r: usize,
    data: Vec<u64>,
}

impl StructureConstants {
    pub fn num_classes(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.r + j) * self.r + k]
    }
}

pub fn structure_constants(g: &FiniteGroup) -> StructureConstants {
    let classes = g.classes();
    let r = classes.len();
    let mut data = vec![0u64; r * r * r];
    for k in 0..r {
        let z = classes.representative(k);
        for x in 0..g.order() {
            // y = x^-1 z
            let y = g.mul(g.inv(x), z);
            let (i, j) = (classes.class_of(x), classes.class_of(y));
            data[(i * r + j) * r + k] += 1;
        }
    }
    StructureConstants { r, data }
}

/// The irreducible complex characters of a finite group, rows in canonical
/// order: ascending degree, then descending lexicographic order on the
/// value rows (so the trivial character comes first).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    values: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    fs_indicators: Vec<i8>,
    conj_index: Vec<usize>,
}

pub fn compute_character_table(group: Arc<FiniteGroup>) -> Result<CharacterTable> {
    let sc = structure_constants(&group);
    let mut raw = dixon::compute(&group, &sc)?;
    raw.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            a.values
                .iter()
                .zip(&b.values)
                .map(|(x, y)| y.cmp_coeffs(x))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    });
    let degrees: Vec<u64> = raw.iter().map(|c| c.degree).collect();
    let values: Vec<Vec<Cyclotomic>> = raw.into_iter().map(|c| c.values).collect();

    let conj_index = values
        .iter()
        .map(|row| {
            let conj: Vec<Cyclotomic> = row.iter().map(Cyclotomic::conj).collect();
            values.iter().position(|other| *other == conj).ok_or_else(|| {
                Error::LiftInconsistent("complex conjugate of a character is missing".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut table = CharacterTable {
        group,
        values,
        degrees,
        fs_indicators: Vec::new(),
        conj_index,
    };
    table.validate()?;
    table.fs_indicators = (0..table.len())
        .map(|chi| fs_indicator(&table, chi))
        .collect::<Result<_>>()?;
    Ok(table)
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Number of irreducible characters.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn fs_indicators(&self) -> &[i8] {
        &self.fs_indicators
    }

    /// Cached Frobenius-Schur indicator of `chi`.
    pub fn indicator(&self, chi: usize) -> i8 {
        self.fs_indicators[chi]
    }

    /// Index of the complex conjugate character.
    pub fn conj_index(&self, chi: usize) -> usize {
        self.conj_index[chi]
    }

    pub fn conductor(&self) -> u64 {
        self.group.exponent()
    }

    fn validate(&self) -> Result<()> {
        let g = &self.group;
        let classes = g.classes();
        let r = classes.len();
        let order = BigInt::from(g.order());
        let e = self.conductor();
        if self.len() != r {
            return Err(Error::LiftInconsistent(format!(
                "{} characters for {r} classes",
                self.len()
            )));
        }
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != g.order() as u64 {
            return Err(Error::LiftInconsistent(format!("sum of squared degrees is {sum_sq}")));
        }
        if let Some(d) = self.degrees.iter().find(|&&d| g.order() as u64 % d != 0) {
            return Err(Error::LiftInconsistent(format!("degree {d} does not divide |G|")));
        }
        let conj: Vec<Vec<Cyclotomic>> = self
            .values
            .iter()
            .map(|row| row.iter().map(Cyclotomic::conj).collect())
            .collect();
        for i in 0..r {
            for j in 0..r {
                let mut s = Cyclotomic::zero(e);
                for c in 0..r {
                    s += &(&self.values[i][c] * &conj[j][c]).scale_int(&BigInt::from(classes.size(c)));
                }
                let expected = if i == j { order.clone() } else { BigInt::zero() };
                if s != Cyclotomic::from_integer(e, expected) {
                    return Err(Error::LiftInconsistent(format!("rows {i}, {j} not orthonormal")));
                }
            }
        }
        for c in 0..r {
            for c2 in 0..r {
                let mut s = Cyclotomic::zero(e);
                for chi in 0..r {
                    s += &(&self.values[chi][c] * &conj[chi][c2]);
                }
                let expected = if c == c2 {
                    BigRational::new(order.clone(), BigInt::from(classes.size(c)))
                } else {
                    BigRational::zero()
                };
                if s != Cyclotomic::from_rational(e, expected) {
                    return Err(Error::LiftInconsistent(format!(
                        "columns {c}, {c2} not orthogonal"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `(1/|G|) Σ_g χ(g^n)` as an exact rational.
    fn power_average(&self, chi: usize, n: i64) -> Cyclotomic {
        let g = &self.group;
        let classes = g.classes();
        let e = self.conductor();
        let mut s = Cyclotomic::zero(e);
        for c in 0..classes.len() {
            let powered = classes.class_of(g.pow(classes.representative(c), n));
            s += &self.values[chi][powered].scale_int(&BigInt::from(classes.size(c)));
        }
        s.scale(&BigRational::new(BigInt::one(), BigInt::from(g.order())))
    }
}

/// Frobenius-Schur indicator `ν(χ) = (1/|G|) Σ_g χ(g²)`.
pub fn fs_indicator(table: &CharacterTable, chi: usize) -> Result<i8> {
    let v = table.power_average(chi, 2);
    match v.to_integer().and_then(|n| i8::try_from(n).ok()) {
        Some(n @ -1..=1) => Ok(n),
        _ => Err(Error::NonIndicatorValue {
            character: chi,
            value: v.to_string(),
        }),
    }
}

/// Generalized indicator `ν_n(χ) = (1/|G|) Σ_g χ(g^n)`.
pub fn generalized_indicator(table: &CharacterTable, chi: usize, n: i64) -> Result<BigInt> {
    let v = table.power_average(chi, n);
    v.to_integer().ok_or_else(|| Error::NonIntegerIndicator {
        character: chi,
        n,
        value: v.to_string(),
    })
}

/// Central character `ω_χ(C⁺) = |C| χ(C) / χ(1)`.
pub fn central_character(table: &CharacterTable, chi: usize, class: usize) -> Cyclotomic {
    let size = table.group().classes().size(class);
    table
        .value(chi, class)
        .scale(&BigRational::new(BigInt::from(size), BigInt::from(table.degree(chi))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn table(spec: &str) -> CharacterTable {
        let g = Arc::new(build_group(&spec.parse().unwrap()).unwrap());
        compute_character_table(g).unwrap()
    }

    #[test]
    fn cyclic_two() {
        let t = table("builtin:cyc:2");
        let rows: Vec<Vec<BigInt>> = (0..2)
            .map(|i| t.row(i).iter().map(|v| v.to_integer().unwrap()).collect())
            .collect();
        let expected: Vec<Vec<BigInt>> = vec![vec![1.into(), 1.into()], vec![1.into(), (-1).into()]];
        assert_eq!(rows, expected);
    }

    #[test]
    fn degrees() {
        assert_eq!(table("builtin:sym:3").degrees(), &[1, 1, 2]);
        assert_eq!(table("builtin:q8").degrees(), &[1, 1, 1, 1, 2]);
        assert_eq!(table("builtin:sym:4").degrees(), &[1, 1, 2, 3, 3]);
        assert_eq!(table("builtin:alt:4").degrees(), &[1, 1, 1, 3]);
        assert_eq!(table("builtin:alt:5").degrees(), &[1, 3, 3, 4, 5]);
        assert_eq!(table("builtin:cyc:1").degrees(), &[1]);
    }

    #[test]
    fn structure_constant_examples() {
        let g = build_group(&"builtin:cyc:1".parse().unwrap()).unwrap();
        let sc = structure_constants(&g);
        assert_eq!(sc.get(0, 0, 0), 1);

        let g = build_group(&"builtin:sym:3".parse().unwrap()).unwrap();
        let sc = structure_constants(&g);
        let trans = 2; // classes ordered by size: id, 3-cycles, transpositions
        assert_eq!(g.classes().size(trans), 3);
        assert_eq!(sc.get(trans, trans, 0), 3);
        let classes = g.classes();
        for i in 0..3 {
            for j in 0..3 {
                let lhs: u64 = (0..3).map(|k| sc.get(i, j, k) * classes.size(k) as u64).sum();
                assert_eq!(lhs, (classes.size(i) * classes.size(j)) as u64);
            }
        }

        let g = build_group(&"builtin:cyc:6".parse().unwrap()).unwrap();
        let sc = structure_constants(&g);
        assert!(sc.data.iter().all(|&a| a <= 1));
    }

    #[test]
    fn indicators() {
        let t = table("builtin:q8");
        assert_eq!(t.fs_indicators(), &[1, 1, 1, 1, -1]);
        let t = table("builtin:sym:3");
        assert_eq!(t.fs_indicators(), &[1, 1, 1]);
        let t = table("builtin:cyc:3");
        assert_eq!(t.fs_indicators(), &[1, 0, 0]);
        for chi in 0..t.len() {
            let expected = if t.degree(chi) == 1 && t.row(chi).iter().all(|v| v.to_integer() == Some(1.into())) {
                1
            } else {
                0
            };
            assert_eq!(generalized_indicator(&t, chi, 1).unwrap(), BigInt::from(expected));
            assert_eq!(
                generalized_indicator(&t, chi, 2).unwrap(),
                BigInt::from(fs_indicator(&t, chi).unwrap())
            );
        }
    }

    #[test]
    fn central_characters() {
        let t = table("builtin:sym:3");
        for chi in 0..t.len() {
            assert_eq!(central_character(&t, chi, 0), Cyclotomic::one(6));
        }
        // Trivial character is row 0.
        for c in 0..3 {
            let size = t.group().classes().size(c);
            assert_eq!(central_character(&t, 0, c), Cyclotomic::from_integer(6, size));
        }
        assert!(central_character(&t, 2, 2).is_zero());
    }
}
