use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
///
/// The derived order is lexicographic on the parts, so among partitions of
/// the same weight `(n)` is the largest and `(1^n)` the smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..width)
                .map(|j| self.parts.iter().filter(|&&p| p > j).count())
                .collect(),
        }
    }

    /// Multiplicity `m_i` of each part size `i`, indexed from 0.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Cells `(row, col)`, 0-indexed.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Sign of a permutation with this cycle type: `(-1)^(n - length)`.
    pub fn sign(&self) -> i64 {
        if (self.weight() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle type of `w^k` when `w` has this cycle type: a cycle of length
    /// `l` splits into `gcd(l, k)` cycles of length `l / gcd(l, k)`.
    pub fn power(&self, k: i64) -> Partition {
        let k = k.unsigned_abs() as usize;
        let mut parts = Vec::with_capacity(self.weight());
        for &l in &self.parts {
            let g = num_integer::gcd(l, k);
            parts.extend(std::iter::repeat(l / g).take(g));
        }
        Partition::new(parts)
    }
}

/// All partitions of `n`, largest first in lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Product of all hook lengths.
pub fn hook_product(lambda: &Partition) -> BigInt {
    let conj = lambda.conjugate();
    lambda
        .cells()
        .map(|(i, j)| {
            let arm = lambda.parts[i] - j - 1;
            let leg = conj.parts[j] - i - 1;
            BigInt::from(arm + leg + 1)
        })
        .product()
}

/// Contents `col - row` of every cell, in row-major cell order.
pub fn contents(lambda: &Partition) -> Vec<i64> {
    lambda.cells().map(|(i, j)| j as i64 - i as i64).collect()
}

/// `z_μ = Π_i i^{m_i} m_i!`, the centralizer order of cycle type `μ`.
pub fn centralizer_order(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

impl fmt::Display for Partition {
    /// `(3,1,1)`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1,1`, `(3,1,1)`, `3 1 1` or `()`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad partition part `{tok}`")))?;
            if p == 0 {
                return Err(Error::InvalidArgument("partition parts must be positive".into()));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}
