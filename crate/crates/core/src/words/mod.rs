//! Words in free groups `F_r`.
//!
//! The text syntax: generators are `x1, x2, ...`; a postfix `^n` (any
//! integer) raises a factor to a power; juxtaposition multiplies;
//! `[a,b,...,m]` is the generalized commutator `a b ... m a^-1 b^-1 ... m^-1`
//! and may nest; parentheses group; `1` (or nothing) is the empty word.
//!
//! The rank is always explicit: `x1^2` in `F_1` and in `F_2` are different
//! words for counting purposes.

mod parse;
mod shape;

use std::fmt;

pub use parse::parse_word;
pub use shape::{recognize_shape, WordShape};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// One syllable `x_{gen+1}^exp` (generator stored 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i64,
}

/// A freely reduced word in `F_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    /// Builds and freely reduces a word; generators must be `< rank`.
    pub fn new(rank: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut reduced: Vec<Letter> = Vec::new();
        for l in letters {
            if l.generator >= rank {
                return Err(Error::RankMismatch {
                    index: l.generator + 1,
                    rank,
                });
            }
            push_reduced(&mut reduced, l);
        }
        Ok(Word {
            rank,
            letters: reduced,
        })
    }

    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// `x_{i+1}^exp` in `F_rank`.
    pub fn generator(rank: usize, i: usize, exp: i64) -> Result<Self> {
        Word::new(rank, [Letter { generator: i, exponent: exp }])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.rank, other.rank, "words live in different free groups");
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Word {
            rank: self.rank,
            letters,
        }
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator,
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }

    /// Renames generators in order of first appearance; unused generators
    /// keep the highest indices.
    pub fn normalize_names(&self) -> Word {
        let mut map = vec![usize::MAX; self.rank];
        let mut next = 0;
        for l in &self.letters {
            if map[l.generator] == usize::MAX {
                map[l.generator] = next;
                next += 1;
            }
        }
        for m in map.iter_mut().filter(|m| **m == usize::MAX) {
            *m = next;
            next += 1;
        }
        Word {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    generator: map[l.generator],
                    exponent: l.exponent,
                })
                .collect(),
        }
    }

    /// Sorted distinct generators appearing in the word.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.letters.iter().map(|l| l.generator).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if l.exponent == 0 {
        return;
    }
    match letters.last_mut() {
        Some(last) if last.generator == l.generator => {
            last.exponent += l.exponent;
            if last.exponent == 0 {
                letters.pop();
            }
        }
        _ => letters.push(l),
    }
}

/// `γ(g_1, ..., g_r)` with generator `i` sent to `assignment[i]`.
pub fn evaluate(w: &Word, assignment: &[usize], g: &FiniteGroup) -> Result<usize> {
    if assignment.len() != w.rank {
        return Err(Error::InvalidArgument(format!(
            "assignment has {} elements for a word of rank {}",
            assignment.len(),
            w.rank
        )));
    }
    Ok(w.letters.iter().fold(g.identity(), |acc, l| {
        g.mul(acc, g.pow(assignment[l.generator], l.exponent))
    }))
}

impl fmt::Display for Word {
    /// `x1^2 x2^-1`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.generator + 1)?;
            if l.exponent != 1 {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}
