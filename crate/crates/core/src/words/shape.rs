use super::Word;

/// Word families with closed-form character coefficients.
///
/// A shape other than `Generic` is reported only when the reduced word is
/// literally the normal form on pairwise distinct generators and those
/// generators are all of `x1..xr`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WordShape {
    /// `x1^2 x2^2 ... xk^2`.
    ProductOfSquares(usize),
    /// `[x1,y1] ... [xg,yg]`; `g = 0` is the empty word in `F_0`.
    ProductOfCommutators(usize),
    /// Product of generalized commutators `[x1,...,xm]` of the given lengths.
    GeneralizedCommutatorProduct(Vec<usize>),
    /// `x1^n1 ... xm^nm`.
    PowerProduct(Vec<i64>),
    Generic,
}

pub fn recognize_shape(w: &Word) -> WordShape {
    let letters = w.letters();
    if letters.is_empty() {
        return if w.rank() == 0 {
            WordShape::ProductOfCommutators(0)
        } else {
            WordShape::Generic
        };
    }
    if w.support().len() != w.rank() {
        return WordShape::Generic;
    }

    // Each generator appears in exactly one syllable.
    if letters.len() == w.rank() {
        if letters.iter().all(|l| l.exponent == 2) {
            return WordShape::ProductOfSquares(letters.len());
        }
        return WordShape::PowerProduct(letters.iter().map(|l| l.exponent).collect());
    }

    if let Some(blocks) = commutator_blocks(w) {
        if blocks.iter().all(|&m| m == 2) {
            return WordShape::ProductOfCommutators(blocks.len());
        }
        return WordShape::GeneralizedCommutatorProduct(blocks);
    }
    WordShape::Generic
}

/// Splits the word into blocks `a b ... m a^-1 b^-1 ... m^-1` (m ≥ 2), each
/// generator appearing in exactly one block.
fn commutator_blocks(w: &Word) -> Option<Vec<usize>> {
    let letters = w.letters();
    if letters.len() != 2 * w.rank() {
        return None;
    }
    let mut blocks = Vec::new();
    let mut pos = 0;
    while pos < letters.len() {
        let m = letters[pos..].iter().take_while(|l| l.exponent == 1).count();
        if m < 2 || pos + 2 * m > letters.len() {
            return None;
        }
        let (head, tail) = letters[pos..pos + 2 * m].split_at(m);
        let matches = head
            .iter()
            .zip(tail)
            .all(|(a, b)| a.generator == b.generator && b.exponent == -1);
        if !matches {
            return None;
        }
        blocks.push(m);
        pos += 2 * m;
    }
    // Support size equals rank and length is 2·rank, so letters are disjoint.
    Some(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use proptest::prelude::*;

    fn shape(s: &str, r: usize) -> WordShape {
        recognize_shape(&parse_word(s, r).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(shape("x1^2 x2^2 x3^2", 3), WordShape::ProductOfSquares(3));
        assert_eq!(shape("[x1,x2][x3,x4]", 4), WordShape::ProductOfCommutators(2));
        assert_eq!(shape("x1^3 x2^-2", 2), WordShape::PowerProduct(vec![3, -2]));
        assert_eq!(shape("[x1,x2,x3]", 3), WordShape::GeneralizedCommutatorProduct(vec![3]));
        assert_eq!(
            shape("[x1,x2,x3][x4,x5]", 5),
            WordShape::GeneralizedCommutatorProduct(vec![3, 2])
        );
        assert_eq!(shape("", 0), WordShape::ProductOfCommutators(0));
        assert_eq!(shape("x1", 1), WordShape::PowerProduct(vec![1]));
    }

    #[test]
    fn rejects_non_normal_forms() {
        // Unused generator in the ambient free group.
        assert_eq!(shape("x1^2", 2), WordShape::Generic);
        assert_eq!(shape("", 1), WordShape::Generic);
        // Repeated letters.
        assert_eq!(shape("x1^2 x2 x1", 2), WordShape::Generic);
        assert_eq!(shape("[x1,x2][x1,x2]", 2), WordShape::Generic);
        assert_eq!(shape("[x1,x2]^-1", 2), WordShape::ProductOfCommutators(1));
        assert_eq!(shape("x1 x2 x2^-1", 2), WordShape::Generic);
        assert_eq!(shape("x1 x2 x1^-1 x2", 2), WordShape::Generic);
        assert_eq!(shape("[[x1,x2],x3]", 3), WordShape::Generic);
    }

    #[test]
    fn order_of_generators_is_irrelevant() {
        assert_eq!(shape("[x2,x1][x4,x3]", 4), WordShape::ProductOfCommutators(2));
        assert_eq!(shape("x3^2 x1^2 x2^2", 3), WordShape::ProductOfSquares(3));
    }

    proptest! {
        #[test]
        fn invariant_under_renaming(
            perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
            family in 0usize..4,
        ) {
            let text = ["x1^2 x2^2 x3^2 x4^2", "[x1,x2][x3,x4]", "[x1,x2,x3,x4]", "x1^3 x2 x3^-2 x4^5"][family];
            let w = parse_word(text, 4).unwrap();
            let renamed = crate::words::Word::new(
                4,
                w.letters().iter().map(|l| crate::words::Letter { generator: perm[l.generator], exponent: l.exponent }),
            ).unwrap();
            prop_assert_eq!(recognize_shape(&renamed), recognize_shape(&w));
            prop_assert_eq!(renamed.normalize_names(), w.normalize_names());
        }
    }
}
