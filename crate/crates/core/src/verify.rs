//! Named identity suites. Each check compares two independently computed
//! exact values; a suite passes when every check does.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chartable::{compute_character_table, symmetric_group_character, CharacterTable};
use crate::classfun::solomon_check;
use crate::error::{Error, Result};
use crate::group::build_group;
use crate::oracle::Budget;
use crate::surface::{linear_character_identity, tuple_sum_identity, SurfaceKind};
use crate::symfunc::{
    genfun_coefficients, partitions_of, schur_side, specialized_identity_check, symmetric_degree_of,
    word_power_sum_average, Partition,
};
use crate::words::parse_word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Solomon,
    TupleSum,
    LinearLimit,
    SymfuncTheorem,
    Specialization,
    Genfun,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "solomon",
        "tuple-sum",
        "linear-limit",
        "symfunc-theorem",
        "specialization",
        "genfun",
        "all",
    ];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Solomon,
                Suite::TupleSum,
                Suite::LinearLimit,
                Suite::SymfuncTheorem,
                Suite::Specialization,
                Suite::Genfun,
            ],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Solomon => "solomon",
            Suite::TupleSum => "tuple-sum",
            Suite::LinearLimit => "linear-limit",
            Suite::SymfuncTheorem => "symfunc-theorem",
            Suite::Specialization => "specialization",
            Suite::Genfun => "genfun",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "solomon" => Suite::Solomon,
            "tuple-sum" => Suite::TupleSum,
            "linear-limit" => Suite::LinearLimit,
            "symfunc-theorem" => Suite::SymfuncTheorem,
            "specialization" => Suite::Specialization,
            "genfun" => Suite::Genfun,
            "all" => Suite::All,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown suite `{s}` (expected one of {})",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One comparison: `left` and `right` are the two sides as printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub left: String,
    pub right: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.left == self.right
    }
}

/// The test-group zoo, by display name and spec.
pub const ZOO: [(&str, &str); 7] = [
    ("S3", "builtin:sym:3"),
    ("S4", "builtin:sym:4"),
    ("A4", "builtin:alt:4"),
    ("D4", "builtin:dih:4"),
    ("Q8", "builtin:q8"),
    ("Z6", "builtin:cyc:6"),
    ("Z7", "builtin:cyc:7"),
];

/// Character tables of the zoo groups, in `ZOO` order.
pub fn zoo_tables() -> Result<Vec<(&'static str, CharacterTable)>> {
    ZOO.iter()
        .map(|&(name, spec)| {
            let g = Arc::new(build_group(&spec.parse()?)?);
            Ok((name, compute_character_table(g)?))
        })
        .collect()
}

/// Words of rank at least 2 used for the divisibility checks.
pub const SOLOMON_WORDS: [(&str, usize); 7] = [
    ("[x1,x2]", 2),
    ("x1 x2", 2),
    ("x1^2 x2^2", 2),
    ("x1^2 x2^3", 2),
    ("x1 x2 x1 x2^-1", 2),
    ("[x1,x2,x3]", 3),
    ("x1^2 x2^2 x3^2", 3),
];

/// `p(n)` for `n = 0..=max` by Euler's pentagonal-number recurrence.
pub fn partition_numbers(max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); max + 1];
    p[0] = BigInt::from(1);
    for n in 1..=max {
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let mut term = p[n - g1].clone();
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                term += &p[n - g2];
            }
            p[n] += term * sign;
            k += 1;
        }
    }
    p
}

fn kind_name(kind: SurfaceKind) -> String {
    match kind {
        SurfaceKind::Orientable(g) => format!("g={g}"),
        SurfaceKind::Nonorientable(k) => format!("k={k}"),
    }
}

/// Runs a suite; checks come out in a fixed order.
pub fn run_suite(suite: Suite, budget: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let needs_zoo = suite
        .parts()
        .iter()
        .any(|s| matches!(s, Suite::Solomon | Suite::TupleSum | Suite::LinearLimit));
    let zoo = if needs_zoo { zoo_tables()? } else { Vec::new() };
    for part in suite.parts() {
        let name = part.name();
        let mut push = |check: String, left: String, right: String| {
            out.push(Check {
                suite: name,
                name: check,
                left,
                right,
            })
        };
        match part {
            Suite::Solomon => {
                for (gname, t) in &zoo {
                    for (text, r) in SOLOMON_WORDS {
                        let w = parse_word(text, r)?;
                        let divisible = solomon_check(&w, t.group(), budget)?;
                        push(
                            format!("{gname} {text}: |G| divides f(1)"),
                            divisible.to_string(),
                            true.to_string(),
                        );
                    }
                }
            }
            Suite::TupleSum => {
                let kinds = [
                    SurfaceKind::Orientable(0),
                    SurfaceKind::Orientable(1),
                    SurfaceKind::Nonorientable(1),
                    SurfaceKind::Nonorientable(2),
                ];
                for (gname, t) in &zoo {
                    for kind in kinds {
                        for n in 1..=2 {
                            let (sum, power) = tuple_sum_identity(t, kind, n)?;
                            push(
                                format!("{gname} {} n={n}: class-tuple sum = |G|^n", kind_name(kind)),
                                sum.to_string(),
                                power.to_string(),
                            );
                        }
                    }
                }
            }
            Suite::LinearLimit => {
                for (gname, t) in &zoo {
                    for n in 1..=2 {
                        let (power, linear, real) = linear_character_identity(t, n)?;
                        push(
                            format!("{gname} n={n}: linear characters"),
                            linear.to_string(),
                            power.to_string(),
                        );
                        push(
                            format!("{gname} n={n}: linear characters with indicator 1"),
                            real.to_string(),
                            power.to_string(),
                        );
                    }
                }
            }
            Suite::SymfuncTheorem => {
                for (text, r) in [("x1^2", 1), ("x1^2 x2^2", 2), ("[x1,x2]", 2)] {
                    let w = parse_word(text, r)?;
                    for n in 1..=4 {
                        push(
                            format!("{text} n={n}: power-sum average = Schur expansion"),
                            word_power_sum_average(&w, n, budget)?.to_string(),
                            schur_side(&w, n, budget)?.to_string(),
                        );
                    }
                }
                for n in 1..=8 {
                    for lambda in partitions_of(n) {
                        let mn = symmetric_group_character(&lambda, &Partition::column(n))?;
                        push(
                            format!("{lambda}: hook-length degree"),
                            symmetric_degree_of(&lambda).to_string(),
                            mn.to_string(),
                        );
                    }
                }
            }
            Suite::Specialization => {
                let kinds = [
                    SurfaceKind::Nonorientable(1),
                    SurfaceKind::Nonorientable(2),
                    SurfaceKind::Orientable(1),
                ];
                for kind in kinds {
                    for n in 1..=5 {
                        for q in 1..=3 {
                            let (l, r) = specialized_identity_check(kind, n, q, budget)?;
                            push(
                                format!("{} n={n} q={q}: specialization", kind_name(kind)),
                                l.to_string(),
                                r.to_string(),
                            );
                        }
                    }
                }
            }
            Suite::Genfun => {
                let coeffs = genfun_coefficients(0, 40)?;
                let counts = partition_numbers(40);
                for (n, (c, p)) in coeffs.iter().zip(&counts).enumerate() {
                    push(
                        format!("e=0 n={n}: coefficient = p(n)"),
                        c.to_string(),
                        p.to_string(),
                    );
                }
                let e1 = genfun_coefficients(1, 3)?;
                push(
                    "e=1 n=3: sum of S3 degrees".into(),
                    e1[3].to_string(),
                    BigRational::from_integer(4.into()).to_string(),
                );
            }
            Suite::All => unreachable!("expanded by parts()"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagonal_recurrence() {
        let p = partition_numbers(12);
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        assert_eq!(p, expected.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        assert_eq!(partition_numbers(40)[40], BigInt::from(37338));
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let b = Budget::new(1 << 24, 2);
        for suite in [Suite::Genfun, Suite::LinearLimit] {
            let checks = run_suite(suite, &b).unwrap();
            assert!(!checks.is_empty());
            assert!(checks.iter().all(Check::passed), "{suite}");
        }
    }
}
