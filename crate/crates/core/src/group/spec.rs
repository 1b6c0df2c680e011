//! Group specifications and their text format.
//!
//! Two forms are accepted:
//!
//! ```text
//! builtin:<name>:<param>     name in sym, alt, dih, cyc, q8
//! perms:
//! (1 2 3)(4 5)
//! (1 2)
//! ```
//!
//! Permutations are written in 1-based cycle notation, one generator per
//! line (a `;` also separates generators, which is handy on a command line).
//! Points must not exceed 64.

use std::fmt;
use std::str::FromStr;

use super::perm::Permutation;
use crate::error::{Error, Result};

pub const MAX_POINT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Symmetric(usize),
    Alternating(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Cyclic(usize),
    Quaternion8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Builtin(Builtin),
    Generators(Vec<Permutation>),
}

impl Builtin {
    /// Order of the group, or `None` if it overflows.
    pub fn order(&self) -> Option<u128> {
        match *self {
            Builtin::Symmetric(n) => (1..=n as u128).try_fold(1u128, |a, b| a.checked_mul(b)),
            Builtin::Alternating(n) => {
                let f = Builtin::Symmetric(n).order()?;
                Some(if n >= 2 { f / 2 } else { f })
            }
            Builtin::Dihedral(n) => Some(2 * n as u128),
            Builtin::Cyclic(n) => Some(n as u128),
            Builtin::Quaternion8 => Some(8),
        }
    }

    /// Generators in a faithful permutation action.
    pub fn generators(&self) -> Result<Vec<Permutation>> {
        let gens = match *self {
            Builtin::Symmetric(n) => {
                check_param(n, 1)?;
                if n == 1 {
                    vec![Permutation::identity(1)]
                } else {
                    vec![
                        Permutation::from_cycles(n, &[vec![0, 1]])?,
                        Permutation::from_cycles(n, &[(0..n).collect()])?,
                    ]
                }
            }
            Builtin::Alternating(n) => {
                check_param(n, 1)?;
                if n < 3 {
                    vec![Permutation::identity(n)]
                } else {
                    (2..n)
                        .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]]))
                        .collect::<Result<_>>()?
                }
            }
            Builtin::Dihedral(n) => {
                check_param(n, 1)?;
                match n {
                    1 => vec![Permutation::from_cycles(2, &[vec![0, 1]])?],
                    2 => vec![
                        Permutation::from_cycles(4, &[vec![0, 1]])?,
                        Permutation::from_cycles(4, &[vec![2, 3]])?,
                    ],
                    _ => {
                        let rotation = Permutation::from_cycles(n, &[(0..n).collect()])?;
                        let reflection = Permutation::from_images(
                            (0..n).map(|i| ((n - i) % n) as u32).collect(),
                        )?;
                        vec![rotation, reflection]
                    }
                }
            }
            Builtin::Cyclic(n) => {
                check_param(n, 1)?;
                vec![Permutation::from_cycles(n, &[(0..n).collect()])?]
            }
            Builtin::Quaternion8 => quaternion_regular(),
        };
        Ok(gens)
    }
}

fn check_param(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::GroupSpec(format!("parameter must be at least {min}")));
    }
    Ok(())
}

/// Left multiplication by `i` and `j` on the eight unit quaternions.
fn quaternion_regular() -> Vec<Permutation> {
    // Element index = 2 * unit + sign bit, units ordered 1, i, j, k.
    // Product table of basis units: unit_mul[a][b] = (sign, unit).
    const UNIT_MUL: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let left_mul = |unit: usize| {
        let images = (0..8)
            .map(|x| {
                let (neg, u) = UNIT_MUL[unit][x / 2];
                let sign = (x % 2 == 1) ^ neg;
                (2 * u + sign as usize) as u32
            })
            .collect();
        Permutation::from_images(images).expect("quaternion table is a bijection")
    };
    vec![left_mul(1), left_mul(2)]
}

/// Parses a permutation in 1-based cycle notation such as `(1 2 3)(4 5)`.
///
/// The returned permutation has degree equal to the largest point mentioned
/// (at least 1); callers pad to a common degree.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::InvalidPermutation(format!("expected `(` in `{text}`")));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::InvalidPermutation(format!("unclosed cycle in `{text}`")));
        };
        let mut cycle = Vec::new();
        for tok in body[..close].split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok.parse().map_err(|_| {
                Error::InvalidPermutation(format!("bad point `{tok}` in `{text}`"))
            })?;
            if p == 0 || p > MAX_POINT {
                return Err(Error::InvalidPermutation(format!(
                    "point {p} outside 1..={MAX_POINT}"
                )));
            }
            cycle.push(p - 1);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("builtin:") {
            let mut parts = rest.split(':').map(str::trim);
            let name = parts.next().unwrap_or_default();
            let param = parts.next();
            if parts.next().is_some() {
                return Err(Error::GroupSpec(format!("too many fields in `{s}`")));
            }
            let n = || -> Result<usize> {
                let p = param.ok_or_else(|| Error::GroupSpec(format!("`{name}` needs a parameter")))?;
                p.parse()
                    .map_err(|_| Error::GroupSpec(format!("bad parameter `{p}`")))
            };
            let b = match name {
                "sym" => Builtin::Symmetric(n()?),
                "alt" => Builtin::Alternating(n()?),
                "dih" => Builtin::Dihedral(n()?),
                "cyc" => Builtin::Cyclic(n()?),
                "q8" => match param {
                    None | Some("8") | Some("") => Builtin::Quaternion8,
                    Some(p) => return Err(Error::GroupSpec(format!("q8 takes no parameter, got `{p}`"))),
                },
                other => return Err(Error::GroupSpec(format!("unknown builtin `{other}`"))),
            };
            return Ok(GroupSpec::Builtin(b));
        }
        if let Some(rest) = s.strip_prefix("perms:") {
            let mut cycle_lists = Vec::new();
            for line in rest.split(['\n', ';']) {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                cycle_lists.push(parse_cycles(line)?);
            }
            let degree = cycle_lists
                .iter()
                .flatten()
                .flatten()
                .map(|&p| p + 1)
                .max()
                .unwrap_or(1);
            let gens = cycle_lists
                .iter()
                .map(|c| Permutation::from_cycles(degree, c))
                .collect::<Result<Vec<_>>>()?;
            return Ok(GroupSpec::Generators(gens));
        }
        Err(Error::GroupSpec(format!(
            "expected `builtin:<name>:<param>` or `perms:`, got `{s}`"
        )))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Builtin(b) => match b {
                Builtin::Symmetric(n) => write!(f, "builtin:sym:{n}"),
                Builtin::Alternating(n) => write!(f, "builtin:alt:{n}"),
                Builtin::Dihedral(n) => write!(f, "builtin:dih:{n}"),
                Builtin::Cyclic(n) => write!(f, "builtin:cyc:{n}"),
                Builtin::Quaternion8 => write!(f, "builtin:q8"),
            },
            GroupSpec::Generators(gens) => {
                f.write_str("perms:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}
