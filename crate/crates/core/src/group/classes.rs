use super::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    /// Member element indices in ascending order.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes in canonical order: identity class first, then by
/// ascending size, ties broken by least member index.
#[derive(Clone, Debug)]
pub struct ConjugacyClassTable {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ConjugacyClassTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn get(&self, i: usize) -> &ConjugacyClass {
        &self.classes[i]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].size()
    }

    pub fn representative(&self, i: usize) -> usize {
        self.classes[i].representative
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Index of the class `C^-1`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyClassTable {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    // Conjugating by generators would suffice, but the element list is small.
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let mut orbit = vec![start];
        assigned[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            let a = orbit[head];
            for h in 0..n {
                let b = g.conjugate(a, h);
                if !assigned[b] {
                    assigned[b] = true;
                    orbit.push(b);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        raw.push(orbit);
    }
    // Orbits are discovered in order of least member, so the tie-break is
    // already satisfied; a stable sort by (non-identity, size) finishes it.
    raw.sort_by_key(|members| (members[0] != g.identity(), members.len()));

    let mut class_of = vec![0; n];
    for (ci, members) in raw.iter().enumerate() {
        for &m in members {
            class_of[m] = ci;
        }
    }
    let classes: Vec<ConjugacyClass> = raw
        .into_iter()
        .map(|members| ConjugacyClass {
            representative: members[0],
            members,
        })
        .collect();
    let inverse_class = classes
        .iter()
        .map(|c| class_of[g.inv(c.representative)])
        .collect();
    ConjugacyClassTable {
        classes,
        class_of,
        inverse_class,
    }
}

#[cfg(test)]
mod tests {
    use crate::group::build_group;

    #[test]
    fn symmetric_three() {
        let g = build_group(&"builtin:sym:3".parse().unwrap()).unwrap();
        let c = g.classes();
        let sizes: Vec<_> = c.classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        // Identity class is first.
        assert_eq!(c.representative(0), 0);
    }

    #[test]
    fn class_counts() {
        for (spec, count) in [
            ("builtin:sym:4", 5),
            ("builtin:alt:4", 4),
            ("builtin:dih:4", 5),
            ("builtin:q8", 5),
            ("builtin:cyc:6", 6),
            ("builtin:sym:5", 7),
        ] {
            let g = build_group(&spec.parse().unwrap()).unwrap();
            assert_eq!(g.classes().len(), count, "{spec}");
        }
    }

    #[test]
    fn inverse_classes() {
        let g = build_group(&"builtin:cyc:7".parse().unwrap()).unwrap();
        let c = g.classes();
        for i in 0..c.len() {
            let j = c.inverse_class(i);
            assert_eq!(c.inverse_class(j), i);
            let prod = g.mul(c.representative(i), c.representative(j));
            assert_eq!(prod, g.identity());
        }
    }
}
