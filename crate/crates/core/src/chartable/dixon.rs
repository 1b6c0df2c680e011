//! Dixon's modular method for the irreducible characters.
//!
//! The class matrices `M_i[j][k] = a_ijk` commute, and their common
//! eigenvectors (normalised to 1 on the identity class) are the central
//! characters `ω_χ`. Working over `F_p` with `p ≡ 1 (mod e)` and `p > 2√|G|`,
//! each `ω_χ` determines the degree and the residues of `χ`, and the
//! eigenvalue multiplicities of every `χ(g)` are recovered exactly from
//! discrete Fourier sums over the powers of `g`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::modp::{self, Matrix};
use super::StructureConstants;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Upper bound for the prime search.
const PRIME_SEARCH_LIMIT: u64 = 50_000_000;

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√|G|` and `p ≥ 101`.
pub fn dixon_prime(order: u64, exponent: u64) -> Result<u64> {
    let lower = (2.0 * (order as f64).sqrt()).floor() as u64;
    let start = lower.max(100);
    // First candidate above `start` in the progression 1 mod e.
    let mut p = start - start % exponent + 1;
    while p <= start {
        p += exponent;
    }
    while p < PRIME_SEARCH_LIMIT {
        if modp::is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::PrimeSearchFailed {
        exponent,
        lower: start,
        bound: PRIME_SEARCH_LIMIT,
    })
}

/// Raw character rows (unsorted), each with its degree.
pub struct RawCharacter {
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
}

pub fn compute(g: &FiniteGroup, sc: &StructureConstants) -> Result<Vec<RawCharacter>> {
    let classes = g.classes();
    let r = classes.len();
    let order = g.order() as u64;
    let e = g.exponent();
    let p = dixon_prime(order, e)?;

    let central = central_characters_mod_p(sc, r, p)?;
    if central.len() != r {
        return Err(Error::LiftInconsistent(format!(
            "found {} central characters for {r} classes",
            central.len()
        )));
    }

    let zeta = modp::powmod(modp::primitive_root(p), (p - 1) / e, p);
    let sizes: Vec<u64> = (0..r).map(|i| classes.size(i) as u64).collect();
    let inv_class: Vec<usize> = (0..r).map(|i| classes.inverse_class(i)).collect();
    // power_classes[j][l] = class of rep_j^l for l < order(rep_j)
    let power_classes: Vec<Vec<usize>> = (0..r)
        .map(|j| {
            let rep = classes.representative(j);
            let o = g.element_order(rep);
            let mut acc = g.identity();
            (0..o)
                .map(|_| {
                    let c = classes.class_of(acc);
                    acc = g.mul(acc, rep);
                    c
                })
                .collect()
        })
        .collect();

    let max_degree = (order as f64).sqrt().floor() as u64;
    let mut out = Vec::with_capacity(r);
    for omega in central {
        // d^2 = |G| / Σ_j ω_j ω_j' / h_j  (mod p)
        let mut s = 0u64;
        for j in 0..r {
            let t = modp::mulmod(omega[j], omega[inv_class[j]], p);
            s = (s + modp::mulmod(t, modp::invmod(sizes[j] % p, p), p)) % p;
        }
        if s == 0 {
            return Err(Error::LiftInconsistent("degenerate degree equation".into()));
        }
        let d2 = modp::mulmod(order % p, modp::invmod(s, p), p);
        let degree = (1..=max_degree + 1)
            .find(|&d| d * d % p == d2)
            .filter(|&d| d <= max_degree)
            .ok_or_else(|| Error::LiftInconsistent("no degree solves d^2 = |G|/s mod p".into()))?;

        // residues θ_j = d ω_j / h_j
        let theta: Vec<u64> = (0..r)
            .map(|j| modp::mulmod(modp::mulmod(degree, omega[j], p), modp::invmod(sizes[j] % p, p), p))
            .collect();

        let mut values = Vec::with_capacity(r);
        for pc in &power_classes {
            let o = pc.len() as u64;
            let w = modp::powmod(zeta, e / o, p); // order-o root in F_p
            let w_inv = modp::invmod(w, p);
            let o_inv = modp::invmod(o % p, p);
            let mut powers = vec![BigRational::from_integer(BigInt::from(0)); e as usize];
            let mut total = 0u64;
            for k in 0..o {
                // m_k = (1/o) Σ_l θ(g^l) w^{-kl}
                let step = modp::powmod(w_inv, k, p);
                let mut acc = 0u64;
                let mut tw = 1u64;
                for &c in pc {
                    acc = (acc + modp::mulmod(theta[c], tw, p)) % p;
                    tw = modp::mulmod(tw, step, p);
                }
                let m = modp::mulmod(acc, o_inv, p);
                if m > degree {
                    return Err(Error::LiftInconsistent(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                total += m;
                powers[(k * (e / o)) as usize] = BigRational::from_integer(BigInt::from(m));
            }
            if total != degree {
                return Err(Error::LiftInconsistent(format!(
                    "multiplicities sum to {total}, expected degree {degree}"
                )));
            }
            values.push(Cyclotomic::from_powers(e, powers));
        }
        out.push(RawCharacter { degree, values });
    }
    Ok(out)
}

/// Common eigenvectors of all class matrices over `F_p`, normalised to 1
/// on the identity class.
fn central_characters_mod_p(sc: &StructureConstants, r: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let class_matrix = |i: usize| -> Matrix {
        (0..r)
            .map(|j| (0..r).map(|k| sc.get(i, j, k) % p).collect())
            .collect()
    };
    // Each subspace is kept as a row basis in reduced echelon form.
    let identity: Matrix = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Matrix> = vec![identity];

    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(i);
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split(&m, space, p)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::LiftInconsistent(
            "class matrices do not separate a common eigenspace".into(),
        ));
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = s.into_iter().next().unwrap();
            if v[0] == 0 {
                return Err(Error::LiftInconsistent("central character vanishes at 1".into()));
            }
            let inv = modp::invmod(v[0], p);
            Ok(v.into_iter().map(|x| modp::mulmod(x, inv, p)).collect())
        })
        .collect()
}

/// Splits an invariant subspace into eigenspaces of `m`.
fn split(m: &Matrix, mut basis: Matrix, p: u64) -> Result<Vec<Matrix>> {
    let pivots = modp::rref(&mut basis, p);
    let s = basis.len();
    let r = m.len();
    // Image of each basis vector under m (as a row vector v ↦ M v).
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|v| {
            (0..r)
                .map(|row| m[row].iter().zip(v).fold(0, |acc, (&a, &b)| (acc + a * b) % p))
                .collect()
        })
        .collect();
    // Restricted matrix: column b holds the coordinates of M v_b, read off
    // the pivot positions.
    let restricted: Matrix = (0..s)
        .map(|a| (0..s).map(|b| images[b][pivots[a]]).collect())
        .collect();
    let cp = modp::charpoly(&restricted, p);
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        if modp::eval_poly(&cp, lambda, p) != 0 {
            continue;
        }
        let shifted: Matrix = (0..s)
            .map(|a| {
                (0..s)
                    .map(|b| {
                        let d = if a == b { lambda } else { 0 };
                        (restricted[a][b] + p - d) % p
                    })
                    .collect()
            })
            .collect();
        let coords = modp::nullspace(&shifted, s, p);
        if coords.is_empty() {
            continue;
        }
        found += coords.len();
        let mut sub: Matrix = coords
            .iter()
            .map(|c| {
                (0..r)
                    .map(|col| {
                        c.iter()
                            .zip(&basis)
                            .fold(0, |acc, (&cb, v)| (acc + cb * v[col]) % p)
                    })
                    .collect()
            })
            .collect();
        modp::rref(&mut sub, p);
        out.push(sub);
    }
    if found != s {
        return Err(Error::LiftInconsistent(format!(
            "class matrix not diagonalisable on a {s}-dimensional subspace mod {p}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        // S3: e = 6, 2√6 ≈ 4.9, so p is the first prime ≡ 1 mod 6 above 100.
        assert_eq!(dixon_prime(6, 6).unwrap(), 103);
        assert_eq!(dixon_prime(8, 4).unwrap(), 101);
        assert_eq!(dixon_prime(720, 60).unwrap(), 181);
        assert_eq!(dixon_prime(2, 2).unwrap(), 101);
        assert_eq!(dixon_prime(1, 1).unwrap(), 101);
    }
}
