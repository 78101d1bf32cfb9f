//! Reading words of a pair of triangular arrays and the permutation `p(P, Q)`.
//!
//! * `f(P)`: for every SE equality `a(i-1, j) = a(i, j+1)` of `P` write `s_j`,
//!   with `i` decreasing and, within a row, `j` increasing.
//! * `i(Q)`: for every NE equality `a(i, j) = a(i-1, j)` of `Q` write `s_{i-j}`,
//!   in lexicographic order of `(i, j)`.
//! * `w(P, Q) = f(P) i(Q)` and `p(P, Q) = *(w(P, Q)) · w0`.
//!
//! None of these require the arrays to satisfy the interlacing inequalities,
//! and entries may be of any exactly comparable type (integers, rationals).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gt::{index_pairs, GtPattern};
use crate::perm::{Permutation, Word};

/// The word `f(P)` read from SE equalities.
pub fn f_word<T: Copy + PartialOrd>(p: &GtPattern<T>) -> Word {
    let n = p.size();
    let mut letters = Vec::new();
    for i in (2..=n).rev() {
        for j in 1..i {
            if p.get(i - 1, j) == p.get(i, j + 1) {
                letters.push(j);
            }
        }
    }
    Word::new(n, letters).expect("letters in range")
}

/// The word `i(Q)` read from NE equalities.
pub fn i_word<T: Copy + PartialOrd>(q: &GtPattern<T>) -> Word {
    let n = q.size();
    let letters = index_pairs(n)
        .filter(|&(i, j)| q.get(i, j) == q.get(i - 1, j))
        .map(|(i, j)| i - j)
        .collect();
    Word::new(n, letters).expect("letters in range")
}

/// `w(P, Q) = f(P) i(Q)`.
pub fn pair_word<T: Copy + PartialOrd>(p: &GtPattern<T>, q: &GtPattern<T>) -> Result<Word> {
    if p.size() != q.size() {
        return Err(Error::RankMismatch(p.size(), q.size()));
    }
    f_word(p).concat(&i_word(q))
}

/// `p(P, Q) = *(w(P, Q)) · w0`.
pub fn associated_permutation<T: Copy + PartialOrd>(
    p: &GtPattern<T>,
    q: &GtPattern<T>,
) -> Result<Permutation> {
    Ok(pair_word(p, q)?.demazure_product().times_longest())
}

/// Everything read off a pair, as reported by the command line tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReading {
    pub f_word: Word,
    pub i_word: Word,
    pub pair_word: Word,
    pub demazure_product: Permutation,
    pub p: Permutation,
}

impl PairReading {
    pub fn new<T: Copy + PartialOrd>(p: &GtPattern<T>, q: &GtPattern<T>) -> Result<Self> {
        let pair_word = pair_word(p, q)?;
        let demazure_product = pair_word.demazure_product();
        Ok(Self {
            f_word: f_word(p),
            i_word: i_word(q),
            p: demazure_product.times_longest(),
            demazure_product,
            pair_word,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::Partition;

    fn pat(rows: &[&[i64]]) -> GtPattern {
        GtPattern::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn sample_pair() -> (GtPattern, GtPattern) {
        (
            pat(&[&[1], &[2, 1], &[5, 2, 2], &[5, 3, 2, 0], &[6, 5, 3, 3, 0]]),
            pat(&[&[2], &[5, 4], &[6, 4, 2], &[6, 4, 4, 1], &[6, 5, 4, 2, 0]]),
        )
    }

    fn word(n: usize, letters: &[usize]) -> Word {
        Word::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn sample_pair_words() {
        let (p, q) = sample_pair();
        assert!(!p.is_valid() && !q.is_valid());
        assert_eq!(f_word(&p), word(5, &[1, 2, 4, 2, 1, 1]));
        assert_eq!(i_word(&q), word(5, &[1, 3, 2, 4, 2]));
        assert_eq!(
            pair_word(&p, &q).unwrap(),
            word(5, &[1, 2, 4, 2, 1, 1, 1, 3, 2, 4, 2])
        );
        let r = PairReading::new(&p, &q).unwrap();
        assert_eq!(r.demazure_product, word(5, &[1, 4, 2, 1, 3, 4, 2]).evaluate());
        assert_eq!(r.p, word(5, &[3, 4, 2]).evaluate());
        assert_eq!(associated_permutation(&p, &q).unwrap(), r.p);
        // multiplying by w0 on the other side gives s2 s1 s3 instead
        assert_eq!(r.demazure_product.longest_times(), word(5, &[2, 1, 3]).evaluate());
        assert_ne!(r.p, word(5, &[2, 1, 3]).evaluate());
    }

    #[test]
    fn extreme_patterns() {
        let mu = Partition::new(vec![4, 2, 1, 0]).unwrap();
        let hi = GtPattern::highest(&mu);
        let lo = GtPattern::lowest(&mu);
        let w0 = Permutation::longest(4).unwrap();
        assert!(f_word(&hi).is_empty());
        assert!(i_word(&lo).is_empty());
        assert_eq!(f_word(&lo).demazure_product(), w0);
        assert_eq!(i_word(&hi).demazure_product(), w0);
        assert_eq!(i_word(&hi), word(4, &[1, 2, 1, 3, 2, 1]));
        assert!(pair_word(&hi, &lo).unwrap().is_empty());
        for p in crate::gt::enumerate(&mu).unwrap().iter().step_by(7) {
            assert_eq!(
                pair_word(p, &hi).unwrap(),
                f_word(p).concat(&i_word(&hi)).unwrap()
            );
            assert!(associated_permutation(p, &hi).unwrap().is_identity());
        }
    }

    #[test]
    fn size_mismatch() {
        let a = GtPattern::highest(&Partition::new(vec![1, 0]).unwrap());
        let b = GtPattern::highest(&Partition::new(vec![1, 0, 0]).unwrap());
        assert!(matches!(pair_word(&a, &b), Err(Error::RankMismatch(2, 3))));
    }

    #[test]
    fn rational_entries() {
        use num_rational::Ratio;
        let h = Ratio::new(1, 2);
        let one = Ratio::from_integer(1);
        let zero = Ratio::from_integer(0);
        // a real point of GT(1,0,0) with a(2,1) = a(1,1) = 1/2
        let p = GtPattern::from_rows(vec![vec![h], vec![h, zero], vec![one, zero, zero]]).unwrap();
        assert!(p.is_valid());
        // NE equalities (2,1), (3,2); SE equality (3,2)
        assert_eq!(i_word(&p), word(3, &[1, 1]));
        assert_eq!(f_word(&p), word(3, &[2]));
    }
}
