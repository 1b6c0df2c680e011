//! Exact arithmetic in cyclotomic fields `Q(ζ_e)`.
//!
//! An element is stored as its remainder modulo the cyclotomic polynomial
//! `Φ_e`, i.e. by rational coordinates on `1, ζ, ..., ζ^(φ(e)-1)`. That basis
//! is linearly independent over `Q`, so equality is coordinate-wise and an
//! element is rational iff every non-constant coordinate vanishes.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer coefficients of `Φ_n`, lowest degree first. Cached per `n`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

fn euler_phi(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

/// An element of `Q(ζ_e)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        Cyclotomic {
            conductor,
            coeffs: vec![BigRational::zero(); euler_phi(conductor)],
        }
    }

    pub fn from_rational(conductor: u64, q: BigRational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(conductor: u64, n: impl Into<BigInt>) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(n.into()))
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_integer(conductor, 1)
    }

    /// `ζ_e^k` for any integer `k`.
    pub fn root_of_unity(conductor: u64, k: i64) -> Self {
        let mut full = vec![BigRational::zero(); conductor as usize];
        full[k.rem_euclid(conductor as i64) as usize] = BigRational::one();
        Self::reduce(conductor, full)
    }

    /// Builds `Σ_j coeffs[j] ζ_e^j` from coefficients on arbitrary powers.
    pub fn from_powers(conductor: u64, coeffs: Vec<BigRational>) -> Self {
        Self::reduce(conductor, coeffs)
    }

    fn reduce(conductor: u64, mut poly: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let deg = phi.len() - 1;
        for top in (deg..poly.len()).rev() {
            let c = std::mem::take(&mut poly[top]);
            if c.is_zero() {
                continue;
            }
            for (i, &p) in phi[..deg].iter().enumerate() {
                if p != 0 {
                    poly[top - deg + i] -= &c * BigInt::from(p);
                }
            }
        }
        poly.resize(deg, BigRational::zero());
        Cyclotomic {
            conductor,
            coeffs: poly,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coordinates on `1, ζ, ..., ζ^(φ(e)-1)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-expresses this element in `Q(ζ_target)`; `target` must be a
    /// multiple of the current conductor.
    pub fn promote(&self, target: u64) -> Self {
        if target == self.conductor {
            return self.clone();
        }
        assert!(
            target % self.conductor == 0,
            "cannot embed Q(ζ_{}) into Q(ζ_{target})",
            self.conductor
        );
        let step = (target / self.conductor) as usize;
        let mut full = vec![BigRational::zero(); target as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            full[j * step] = c.clone();
        }
        Self::reduce(target, full)
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let l = a.conductor.lcm(&b.conductor);
        (a.promote(l), b.promote(l))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(BigRational::is_integer)
            .map(|q| q.to_integer())
    }

    pub fn is_rational_integer(&self) -> bool {
        self.to_integer().is_some()
    }

    /// Complex conjugation `ζ^j ↦ ζ^-j`.
    pub fn conj(&self) -> Self {
        let e = self.conductor as usize;
        let mut full = vec![BigRational::zero(); e];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                full[(e - j) % e] += c;
            }
        }
        Self::reduce(self.conductor, full)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(n.clone()))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one(self.conductor);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Lexicographic order on coordinates; used for deterministic sorting.
    pub fn cmp_coeffs(&self, other: &Self) -> Ordering {
        let (a, b) = Self::aligned(self, other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            let (a, b) = Cyclotomic::aligned(self, rhs);
            return &a + &b;
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            let (a, b) = Cyclotomic::aligned(self, rhs);
            return &a * &b;
        }
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce(self.conductor, prod)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl fmt::Display for Cyclotomic {
    /// Prints e.g. `-1 - 2*ζ3`, `1/2 + ζ8^3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if j == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "ζ{}", self.conductor)?;
            if j > 1 {
                write!(f, "^{j}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(60).len() - 1, 16);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in [1u64, 2, 3, 4, 6, 7, 12, 60] {
            let mut s = Cyclotomic::zero(e);
            for k in 0..e as i64 {
                s += &Cyclotomic::root_of_unity(e, k);
            }
            if e == 1 {
                assert_eq!(s, Cyclotomic::one(1));
            } else {
                assert!(s.is_zero(), "e = {e}");
            }
        }
    }

    #[test]
    fn conjugation_and_rationality() {
        let z = Cyclotomic::root_of_unity(3, 1);
        let zbar = z.conj();
        assert_eq!(zbar, Cyclotomic::root_of_unity(3, 2));
        assert_eq!(&z * &zbar, Cyclotomic::one(3));
        // ζ3 + ζ3^2 = -1
        let s = &z + &zbar;
        assert_eq!(s.to_integer(), Some(BigInt::from(-1)));
        assert!(!z.is_rational());
        assert_eq!(z.to_string(), "ζ3");
        assert_eq!(zbar.to_string(), "-1 - ζ3");
    }

    #[test]
    fn mixed_conductors() {
        let i = Cyclotomic::root_of_unity(4, 1);
        let w = Cyclotomic::root_of_unity(3, 1);
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::root_of_unity(12, 3 + 4));
        assert_eq!(Cyclotomic::from_integer(1, 5), Cyclotomic::from_integer(12, 5));
    }

    #[test]
    fn display() {
        let x = Cyclotomic::from_powers(8, vec![q(1, 2), q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(x.to_string(), "1/2 + ζ8^3");
        assert_eq!(Cyclotomic::zero(5).to_string(), "0");
        assert_eq!((-&Cyclotomic::root_of_unity(5, 2)).scale(&q(3, 1)).to_string(), "-3*ζ5^2");
    }

    fn arb_elem(e: u64) -> impl Strategy<Value = Cyclotomic> {
        prop::collection::vec(-5i64..=5, e as usize).prop_map(move |v| {
            Cyclotomic::from_powers(e, v.into_iter().map(|x| q(x, 1)).collect())
        })
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_elem(12), b in arb_elem(12), c in arb_elem(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert!((&a * &a.conj()).conj() == &a * &a.conj());
        }
    }
}
