//! Finite permutation groups: construction by closure, conjugacy classes,
//! element orders and power maps.

mod classes;
mod perm;
mod spec;

use std::collections::HashMap;
use std::sync::OnceLock;

pub use classes::{conjugacy_classes, ConjugacyClass, ConjugacyClassTable};
pub use perm::Permutation;
pub use spec::{parse_cycles, Builtin, GroupSpec, MAX_POINT};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 2000;

/// Groups at most this large cache a dense multiplication table.
const DENSE_TABLE_LIMIT: usize = 256;

/// A finite group realised as permutations, with elements indexed
/// `0..order`. Index 0 is the identity.
#[derive(Debug)]
pub struct FiniteGroup {
    elements: Vec<Permutation>,
    index_of: HashMap<Permutation, usize>,
    inverse: Vec<usize>,
    element_orders: Vec<u64>,
    exponent: u64,
    table: Option<Vec<u32>>,
    classes: OnceLock<ConjugacyClassTable>,
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    let gens = match spec {
        GroupSpec::Builtin(b) => {
            if b.order().map_or(true, |o| o > cap as u128) {
                return Err(Error::OrderCapExceeded { cap });
            }
            b.generators()?
        }
        GroupSpec::Generators(g) => g.clone(),
    };
    FiniteGroup::from_generators(&gens, cap)
}

impl FiniteGroup {
    /// Breadth-first closure of the generators under right multiplication.
    pub fn from_generators(gens: &[Permutation], cap: usize) -> Result<Self> {
        let degree = gens.first().map_or(1, Permutation::degree);
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(
                "generators act on different degrees".into(),
            ));
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index_of = HashMap::from([(identity, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            for g in gens {
                let next = current.compose(g);
                if !index_of.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index_of.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }

        let inverse = elements.iter().map(|p| index_of[&p.inverse()]).collect();
        let element_orders: Vec<u64> = elements.iter().map(Permutation::order).collect();
        let exponent = element_orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o));

        let n = elements.len();
        let table = (n <= DENSE_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index_of[&a.compose(b)] as u32);
                }
            }
            t
        });

        Ok(FiniteGroup {
            elements,
            index_of,
            inverse,
            element_orders,
            exponent,
            table,
            classes: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index_of.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index_of[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.element_orders[a]
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `a^n` for any integer `n`.
    pub fn pow(&self, a: usize, n: i64) -> usize {
        let order = self.element_orders[a] as i64;
        let mut e = n.rem_euclid(order);
        let mut base = a;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g a g^-1`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.classes().len() == self.order()
    }

    /// Conjugacy classes, computed once and cached.
    pub fn classes(&self) -> &ConjugacyClassTable {
        self.classes.get_or_init(|| conjugacy_classes(self))
    }

    /// `Some(n)` if this is the full symmetric group on its `n` points.
    pub fn symmetric_degree(&self) -> Option<usize> {
        let n = self.degree();
        let factorial = (1..=n).try_fold(1usize, |a, b| a.checked_mul(b))?;
        (factorial == self.order()).then_some(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> FiniteGroup {
        build_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn builtin_orders() {
        assert_eq!(group("builtin:sym:3").order(), 6);
        assert_eq!(group("builtin:sym:4").order(), 24);
        assert_eq!(group("builtin:alt:4").order(), 12);
        assert_eq!(group("builtin:alt:5").order(), 60);
        assert_eq!(group("builtin:dih:4").order(), 8);
        assert_eq!(group("builtin:dih:1").order(), 2);
        assert_eq!(group("builtin:dih:2").order(), 4);
        assert_eq!(group("builtin:cyc:7").order(), 7);
        assert_eq!(group("builtin:q8").order(), 8);
        let trivial = group("builtin:cyc:1");
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.classes().len(), 1);
    }

    #[test]
    fn quaternion_from_explicit_generators() {
        // i and j acting by left multiplication on {1,-1,i,-i,j,-j,k,-k}.
        let spec: GroupSpec = "perms:(1 3 2 4)(5 7 6 8);(1 5 2 6)(3 8 4 7)".parse().unwrap();
        let g = build_group(&spec).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.exponent(), 4);
        assert_eq!((0..8).filter(|&a| g.element_order(a) == 4).count(), 6);
    }

    #[test]
    fn exponents() {
        assert_eq!(group("builtin:sym:3").exponent(), 6);
        assert_eq!(group("builtin:q8").exponent(), 4);
        assert_eq!(group("builtin:cyc:9").exponent(), 9);
        assert_eq!(group("builtin:sym:4").exponent(), 12);
    }

    #[test]
    fn order_cap() {
        let spec: GroupSpec = "builtin:sym:7".parse().unwrap();
        assert_eq!(build_group(&spec).unwrap_err(), Error::OrderCapExceeded { cap: 2000 });
        let spec: GroupSpec = "perms:(1 2 3 4 5 6 7);(1 2)".parse().unwrap();
        assert!(matches!(
            build_group_with_cap(&spec, 100),
            Err(Error::OrderCapExceeded { cap: 100 })
        ));
        assert_eq!(build_group_with_cap(&spec, 5040).unwrap().order(), 5040);
    }

    #[test]
    fn mixed_degrees_rejected() {
        let a = Permutation::identity(2);
        let b = Permutation::identity(3);
        assert!(FiniteGroup::from_generators(&[a, b], 10).is_err());
    }

    #[test]
    fn powers_and_inverses() {
        let g = group("builtin:sym:4");
        for a in 0..g.order() {
            assert_eq!(g.pow(a, -1), g.inv(a));
            assert_eq!(g.pow(a, 0), 0);
            assert_eq!(g.pow(a, 3), g.mul(a, g.mul(a, a)));
            assert_eq!(g.index_of(g.element(a)), Some(a));
        }
    }

    #[test]
    fn sparse_multiplication_matches_composition() {
        let g = group("builtin:sym:6");
        assert!(g.table.is_none());
        let (a, b) = (17, 403);
        assert_eq!(
            g.element(g.mul(a, b)),
            &g.element(a).compose(g.element(b))
        );
        assert_eq!(g.symmetric_degree(), Some(6));
        assert_eq!(group("builtin:alt:4").symmetric_degree(), None);
    }
}
