//! Brute-force ground truth by exhaustive enumeration.
//!
//! Tuples are enumerated row-major over element indices. Work is split on
//! the range of the first generator; each worker keeps a private
//! accumulator and the partial counts are summed once at the end, so the
//! result does not depend on the number of workers.

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::classfun::ClassFunction;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::words::Word;

pub const DEFAULT_MAX_TUPLES: u64 = 100_000_000;
pub const BUDGET_ENV: &str = "SURFHOM_BUDGET";

/// Groups up to this order have every class member checked for constancy.
const CONSTANCY_CHECK_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_tuples: u64,
    pub workers: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_tuples: DEFAULT_MAX_TUPLES,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl Budget {
    pub fn new(max_tuples: u64, workers: usize) -> Self {
        Budget {
            max_tuples,
            workers: workers.max(1),
        }
    }

    /// Default budget with `max_tuples` taken from `SURFHOM_BUDGET` if set.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            b.max_tuples = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("{BUDGET_ENV}={v} is not a count")))?;
        }
        Ok(b)
    }

    fn check(&self, factors: impl IntoIterator<Item = usize>) -> Result<()> {
        let required: BigInt = factors.into_iter().map(BigInt::from).product();
        if required > BigInt::from(self.max_tuples) {
            return Err(Error::BudgetExceeded {
                required: required.to_string(),
                limit: self.max_tuples,
            });
        }
        Ok(())
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        if self.workers <= 1 {
            return job();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.workers).build() {
            Ok(pool) => pool.install(job),
            Err(_) => job(),
        }
    }
}

/// A word with each syllable's power map precomputed on the group.
struct CompiledWord<'g> {
    group: &'g FiniteGroup,
    rank: usize,
    syllables: Vec<(usize, Vec<usize>)>,
}

impl<'g> CompiledWord<'g> {
    fn new(w: &Word, group: &'g FiniteGroup) -> Self {
        let syllables = w
            .letters()
            .iter()
            .map(|l| {
                let table = (0..group.order()).map(|a| group.pow(a, l.exponent)).collect();
                (l.generator, table)
            })
            .collect();
        CompiledWord {
            group,
            rank: w.rank(),
            syllables,
        }
    }

    #[inline]
    fn eval(&self, assignment: &[usize]) -> usize {
        self.syllables
            .iter()
            .fold(self.group.identity(), |acc, (gen, table)| {
                self.group.mul(acc, table[assignment[*gen]])
            })
    }

    /// Calls `visit` on every assignment whose first coordinate is `first`
    /// (or on the single empty assignment when the rank is 0).
    fn for_each_with_first(&self, first: usize, mut visit: impl FnMut(usize)) {
        let n = self.group.order();
        let mut tuple = vec![0usize; self.rank];
        if self.rank == 0 {
            visit(self.eval(&tuple));
            return;
        }
        tuple[0] = first;
        loop {
            visit(self.eval(&tuple));
            // Row-major odometer over coordinates 1..rank.
            let mut i = self.rank;
            loop {
                i -= 1;
                if i == 0 {
                    return;
                }
                tuple[i] += 1;
                if tuple[i] < n {
                    break;
                }
                tuple[i] = 0;
            }
        }
    }

    fn first_range(&self) -> std::ops::Range<usize> {
        if self.rank == 0 {
            0..1
        } else {
            0..self.group.order()
        }
    }
}

/// `#{g ∈ G^r : γ(g) = w}` for every element `w`, indexed by element.
pub fn oracle_element_counts(w: &Word, g: &FiniteGroup, budget: &Budget) -> Result<Vec<u64>> {
    budget.check(std::iter::repeat(g.order()).take(w.rank()))?;
    let cw = CompiledWord::new(w, g);
    let n = g.order();
    Ok(budget.run(|| {
        cw.first_range()
            .into_par_iter()
            .fold(
                || vec![0u64; n],
                |mut acc, first| {
                    cw.for_each_with_first(first, |x| acc[x] += 1);
                    acc
                },
            )
            .reduce(
                || vec![0u64; n],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    }))
}

/// The class function `f_γ(w) = #{g ∈ G^r : γ(g) = w}`.
pub fn oracle_class_function(w: &Word, group: &Arc<FiniteGroup>, budget: &Budget) -> Result<ClassFunction> {
    let counts = oracle_element_counts(w, group, budget)?;
    class_function_from_counts(group, &counts)
}

fn class_function_from_counts(group: &Arc<FiniteGroup>, counts: &[u64]) -> Result<ClassFunction> {
    let classes = group.classes();
    let e = group.exponent();
    if group.order() <= CONSTANCY_CHECK_LIMIT {
        for (ci, c) in classes.classes().iter().enumerate() {
            if c.members.iter().any(|&m| counts[m] != counts[c.representative]) {
                return Err(Error::Internal(format!("oracle counts not constant on class {ci}")));
            }
        }
    }
    let values = (0..classes.len())
        .map(|ci| Cyclotomic::from_integer(e, counts[classes.representative(ci)]))
        .collect();
    Ok(ClassFunction::new(group.clone(), values))
}

/// `#{(g, c) ∈ G^r × C_1 × ... × C_n : γ(g) c_1 ... c_n = 1}`.
pub fn oracle_count_with_boundary(
    w: &Word,
    g: &FiniteGroup,
    boundary: &[usize],
    budget: &Budget,
) -> Result<BigInt> {
    let classes = g.classes();
    if let Some(&bad) = boundary.iter().find(|&&c| c >= classes.len()) {
        return Err(Error::InvalidArgument(format!("no conjugacy class #{bad}")));
    }
    budget.check(
        std::iter::repeat(g.order())
            .take(w.rank())
            .chain(boundary.iter().map(|&c| classes.size(c))),
    )?;

    // Products c_1 ... c_n over all boundary tuples, row-major.
    let mut products = vec![g.identity()];
    for &c in boundary {
        let members = &classes.get(c).members;
        products = products
            .iter()
            .flat_map(|&p| members.iter().map(move |&m| (p, m)))
            .map(|(p, m)| g.mul(p, m))
            .collect();
    }

    let cw = CompiledWord::new(w, g);
    let total: u64 = budget.run(|| {
        cw.first_range()
            .into_par_iter()
            .map(|first| {
                let mut local = 0u64;
                cw.for_each_with_first(first, |x| {
                    for &p in &products {
                        if g.mul(x, p) == g.identity() {
                            local += 1;
                        }
                    }
                });
                local
            })
            .sum()
    });
    Ok(BigInt::from(total))
}

/// `#{x : x^n = w}` for each class representative `w`.
pub fn oracle_nth_root_counts(group: &Arc<FiniteGroup>, n: i64) -> Result<ClassFunction> {
    let mut counts = vec![0u64; group.order()];
    for x in 0..group.order() {
        counts[group.pow(x, n)] += 1;
    }
    class_function_from_counts(group, &counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::words::parse_word;

    fn group(s: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(&s.parse().unwrap()).unwrap())
    }

    fn ints(f: &ClassFunction) -> Vec<i64> {
        f.values()
            .iter()
            .map(|v| i64::try_from(v.to_integer().unwrap()).unwrap())
            .collect()
    }

    // S3 classes are ordered (identity, 3-cycles, transpositions).
    #[test]
    fn class_function_examples() {
        let g = group("builtin:sym:3");
        let b = Budget::new(1_000, 2);
        let f = oracle_class_function(&parse_word("x1", 1).unwrap(), &g, &b).unwrap();
        assert_eq!(ints(&f), vec![1, 1, 1]);
        let f = oracle_class_function(&parse_word("x1^2", 1).unwrap(), &g, &b).unwrap();
        assert_eq!(ints(&f), vec![4, 1, 0]);
        let f = oracle_class_function(&parse_word("[x1,x2]", 2).unwrap(), &g, &b).unwrap();
        assert_eq!(ints(&f)[0], 18);
        let f = oracle_class_function(&Word::identity(0), &g, &b).unwrap();
        assert_eq!(ints(&f), vec![1, 0, 0]);
    }

    #[test]
    fn boundary_examples() {
        let g = group("builtin:sym:3");
        let b = Budget::new(1_000, 1);
        let empty = Word::identity(0);
        assert_eq!(oracle_count_with_boundary(&empty, &g, &[0], &b).unwrap(), 1.into());
        let sq = parse_word("x1^2", 1).unwrap();
        assert_eq!(oracle_count_with_boundary(&sq, &g, &[1], &b).unwrap(), 2.into());
        // x^2 y^2 c = 1 with c a transposition: 6·6·3 = 108 tuples scanned.
        let sq2 = parse_word("x1^2 x2^2", 2).unwrap();
        let direct = {
            let mut n = 0;
            for x in 0..6 {
                for y in 0..6 {
                    for &c in &g.classes().get(2).members {
                        let v = g.mul(g.mul(g.pow(x, 2), g.pow(y, 2)), c);
                        n += (v == 0) as i64;
                    }
                }
            }
            n
        };
        assert_eq!(oracle_count_with_boundary(&sq2, &g, &[2], &b).unwrap(), direct.into());
        assert!(oracle_count_with_boundary(&sq2, &g, &[7], &b).is_err());
    }

    #[test]
    fn nth_roots() {
        let g = group("builtin:sym:3");
        assert_eq!(ints(&oracle_nth_root_counts(&g, 1).unwrap()), vec![1, 1, 1]);
        assert_eq!(ints(&oracle_nth_root_counts(&g, 2).unwrap()), vec![4, 1, 0]);
        assert_eq!(ints(&oracle_nth_root_counts(&g, 3).unwrap()), vec![3, 0, 1]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = group("builtin:sym:4");
        let w = parse_word("[x1,x2][x3,x4]", 4).unwrap();
        let err = oracle_class_function(&w, &g, &Budget::new(1000, 1)).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                required: "331776".into(),
                limit: 1000
            }
        );
    }

    #[test]
    fn totals_and_worker_independence() {
        let g = group("builtin:dih:4");
        let w = parse_word("x1^2 x2 x3^-1 x2", 3).unwrap();
        let one = oracle_element_counts(&w, &g, &Budget::new(1 << 20, 1)).unwrap();
        let many = oracle_element_counts(&w, &g, &Budget::new(1 << 20, 5)).unwrap();
        assert_eq!(one, many);
        assert_eq!(one.iter().sum::<u64>(), 8u64.pow(3));
    }
}
