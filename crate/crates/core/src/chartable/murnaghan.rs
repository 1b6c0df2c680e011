//! Characters of symmetric groups by the Murnaghan-Nakayama rule.
//!
//! Border strips are removed on the beta-set (abacus) of `λ`: removing an
//! `r`-strip moves one bead from position `b` to the empty position `b - r`,
//! with sign `(-1)^(beads strictly between)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::symfunc::Partition;

/// `χ^λ(μ)`, the value of the Specht-module character `λ` on cycle type `μ`.
pub fn symmetric_group_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut memo = HashMap::new();
    Ok(mn(beta, mu.parts(), &mut memo))
}

fn mn(beta: Vec<usize>, strips: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = strips.split_first() else {
        return 1;
    };
    let key = (beta, strips.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = &key.0;
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn(next, rest, memo);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(symmetric_group_character(&Partition::row(n), &mu).unwrap(), 1);
                assert_eq!(
                    symmetric_group_character(&Partition::column(n), &mu).unwrap(),
                    mu.sign()
                );
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(symmetric_group_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(symmetric_group_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(symmetric_group_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(symmetric_group_character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert_eq!(symmetric_group_character(&p(&[3, 1]), &p(&[4])).unwrap(), -1);
        assert_eq!(symmetric_group_character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn weight_mismatch() {
        assert_eq!(
            symmetric_group_character(&p(&[2]), &p(&[1])),
            Err(Error::WeightMismatch { left: 2, right: 1 })
        );
    }
}
