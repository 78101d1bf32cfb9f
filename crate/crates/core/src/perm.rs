//! The symmetric group `S_n`: permutations, words in the simple reflections,
//! Bruhat order and the Demazure (0-Hecke) product.
//!
//! Composition convention: `u.compose(&v)` applies `v` first and then `u`, so
//! `(u ∘ v)(k) = u(v(k))`. A word `[i1, ..., ik]` evaluates to
//! `s_{i1} ∘ s_{i2} ∘ ... ∘ s_{ik}`, and right multiplication by `s_i` swaps
//! the entries in positions `i` and `i + 1` of the one-line notation.
//!
//! Indices are 1-based on the public surface.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gt::Partition;

/// Largest supported rank; images are stored as `u8`.
pub const MAX_RANK: usize = 64;

/// Largest rank for which whole-group enumeration is allowed.
pub const GROUP_ENUMERATION_MAX_RANK: usize = 9;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_RANK {
        return Err(Error::RankTooLarge { n, max: MAX_RANK });
    }
    Ok(())
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Self {
            images: (0..n as u8).collect(),
        })
    }

    /// The order-reversing permutation `w0`.
    pub fn longest(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Self {
            images: (0..n as u8).rev().collect(),
        })
    }

    /// The simple transposition `s_i`, `1 <= i <= n - 1`.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Self> {
        check_rank(n)?;
        check_index(n, i)?;
        let mut w = Self::identity(n)?;
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_rank(n)?;
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotAPermutation(images.to_vec(), n));
            }
            seen[x - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `w(k)` for 1-based `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x as usize)
    }

    fn check_same_rank(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        Ok(Self {
            images: other
                .images
                .iter()
                .map(|&k| self.images[k as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.rank()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize] = k as u8;
        }
        Self { images }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    /// True iff `length(w s_i) = length(w) + 1`, i.e. `w(i) < w(i+1)`.
    pub fn is_right_ascent(&self, i: usize) -> Result<bool> {
        check_index(self.rank(), i)?;
        Ok(self.images[i - 1] < self.images[i])
    }

    /// `w · s_i`.
    pub fn mul_simple(&self, i: usize) -> Result<Self> {
        check_index(self.rank(), i)?;
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// `s_i · w`.
    pub fn simple_mul(&self, i: usize) -> Result<Self> {
        check_index(self.rank(), i)?;
        let (a, b) = ((i - 1) as u8, i as u8);
        Ok(Self {
            images: self
                .images
                .iter()
                .map(|&x| match x {
                    x if x == a => b,
                    x if x == b => a,
                    x => x,
                })
                .collect(),
        })
    }

    /// In-place `w ← w * s_i`; `i` must already be range-checked (0-based `i - 1` in `pos`).
    #[inline]
    fn star_in_place(images: &mut [u8], pos: usize) {
        if images[pos] < images[pos + 1] {
            images.swap(pos, pos + 1);
        }
    }

    /// `w * s_i = max{w, w s_i}` in Bruhat order.
    pub fn star(&self, i: usize) -> Result<Self> {
        check_index(self.rank(), i)?;
        let mut w = self.clone();
        Self::star_in_place(&mut w.images, i - 1);
        Ok(w)
    }

    /// Demazure product `self * other`, folding `star` over a reduced word of `other`.
    pub fn star_product(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        let mut w = self.clone();
        for &i in &other.reduced_word().letters {
            Self::star_in_place(&mut w.images, i - 1);
        }
        Ok(w)
    }

    /// `w · w0` (reverses the one-line notation).
    pub fn times_longest(&self) -> Self {
        let mut images = self.images.clone();
        images.reverse();
        Self { images }
    }

    /// `w0 · w` (complements the values).
    pub fn longest_times(&self) -> Self {
        let top = self.rank() as u8 - 1;
        Self {
            images: self.images.iter().map(|&x| top - x).collect(),
        }
    }

    /// A reduced word for `self`, obtained by peeling off right descents
    /// starting from the leftmost one.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.images.clone();
        let mut letters = Vec::with_capacity(self.length());
        'outer: loop {
            for pos in 0..w.len().saturating_sub(1) {
                if w[pos] > w[pos + 1] {
                    w.swap(pos, pos + 1);
                    letters.push(pos + 1);
                    continue 'outer;
                }
            }
            break;
        }
        letters.reverse();
        Word {
            n: self.rank(),
            letters,
        }
    }

    /// Every reduced word of `self`, sorted lexicographically.
    pub fn reduced_words(&self) -> Vec<Word> {
        fn go(w: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if w.is_identity() {
                out.push(suffix.iter().rev().copied().collect());
                return;
            }
            for pos in 0..w.rank() - 1 {
                if w.images[pos] > w.images[pos + 1] {
                    let mut v = w.clone();
                    v.images.swap(pos, pos + 1);
                    suffix.push(pos + 1);
                    go(&v, suffix, out);
                    suffix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out.sort();
        out.into_iter()
            .map(|letters| Word {
                n: self.rank(),
                letters,
            })
            .collect()
    }

    /// Bruhat order via the rank-matrix criterion: `u <= v` iff
    /// `#{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        self.check_same_rank(other)?;
        Ok(bruhat_leq_unchecked(&self.images, &other.images))
    }

    /// The minimal-length representative of the coset `w W_J`.
    pub fn min_coset_rep(&self, parabolic: &ParabolicSet) -> Result<Self> {
        self.coset_rep(parabolic, false)
    }

    /// The maximal-length representative of the coset `w W_J`.
    pub fn max_coset_rep(&self, parabolic: &ParabolicSet) -> Result<Self> {
        self.coset_rep(parabolic, true)
    }

    fn coset_rep(&self, parabolic: &ParabolicSet, descending: bool) -> Result<Self> {
        if self.rank() != parabolic.n {
            return Err(Error::RankMismatch(self.rank(), parabolic.n));
        }
        // Right multiplication by W_J permutes positions inside each block.
        let mut images = self.images.clone();
        for (start, end) in parabolic.blocks() {
            let block = &mut images[start - 1..end];
            block.sort_unstable();
            if descending {
                block.reverse();
            }
        }
        Ok(Self { images })
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        check_rank(n)?;
        if n > GROUP_ENUMERATION_MAX_RANK {
            return Err(Error::RankTooLarge {
                n,
                max: GROUP_ENUMERATION_MAX_RANK,
            });
        }
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Self {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        Ok(out)
    }
}

pub(crate) fn bruhat_leq_unchecked(u: &[u8], v: &[u8]) -> bool {
    let n = u.len();
    // cu[j] = #{a <= i : u(a) >= j}, maintained row by row
    let mut cu = [0u16; MAX_RANK];
    let mut cv = [0u16; MAX_RANK];
    for i in 0..n {
        for c in cu.iter_mut().take(u[i] as usize + 1) {
            *c += 1;
        }
        for c in cv.iter_mut().take(v[i] as usize + 1) {
            *c += 1;
        }
        if (0..n).any(|j| cu[j] > cv[j]) {
            return false;
        }
    }
    true
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::from_one_line(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.one_line()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.one_line().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A (not necessarily reduced) word in the simple reflections of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<usize>")]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        check_rank(n)?;
        for &i in &letters {
            check_index(n, i)?;
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The ordered product of the letters' reflections.
    pub fn evaluate(&self) -> Permutation {
        let mut images: Vec<u8> = (0..self.n as u8).collect();
        for &i in &self.letters {
            images.swap(i - 1, i);
        }
        Permutation { images }
    }

    pub fn is_reduced(&self) -> bool {
        let mut images: Vec<u8> = (0..self.n as u8).collect();
        for &i in &self.letters {
            if images[i - 1] > images[i] {
                return false;
            }
            images.swap(i - 1, i);
        }
        true
    }

    /// `s_{i1} * s_{i2} * ... * s_{ik}`.
    pub fn demazure_product(&self) -> Permutation {
        let mut images: Vec<u8> = (0..self.n as u8).collect();
        for &i in &self.letters {
            Permutation::star_in_place(&mut images, i - 1);
        }
        Permutation { images }
    }

    /// True iff some subword of `self` is a reduced word for an element above
    /// `u`, equivalently `u <= demazure_product(self)`.
    pub fn subword_dominates(&self, u: &Permutation) -> Result<bool> {
        if self.n != u.rank() {
            return Err(Error::RankMismatch(self.n, u.rank()));
        }
        u.bruhat_leq(&self.demazure_product())
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    pub fn reversed(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Self {
        w.letters
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(n={}, {:?})", self.n, self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// A set of simple reflections generating a parabolic subgroup `W_J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicSet {
    n: usize,
    generators: BTreeSet<usize>,
}

impl ParabolicSet {
    pub fn new(n: usize, generators: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_rank(n)?;
        let generators: BTreeSet<usize> = generators.into_iter().collect();
        for &i in &generators {
            check_index(n, i)?;
        }
        Ok(Self { n, generators })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &BTreeSet<usize> {
        &self.generators
    }

    pub fn contains(&self, i: usize) -> bool {
        self.generators.contains(&i)
    }

    /// Maximal runs `[start, end]` (1-based, inclusive) of positions joined by generators.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 1;
        for p in 1..=self.n {
            if p == self.n || !self.generators.contains(&p) {
                out.push((start, p));
                start = p + 1;
            }
        }
        out
    }

    /// The longest element of `W_J`.
    pub fn longest_element(&self) -> Permutation {
        let mut images: Vec<u8> = (0..self.n as u8).collect();
        for (start, end) in self.blocks() {
            images[start - 1..end].reverse();
        }
        Permutation { images }
    }
}

/// `{i : mu_i = mu_{i+1}}`, the generators of the stabilizer of `mu`.
pub fn stabilizer_generators(mu: &Partition) -> ParabolicSet {
    let parts = mu.parts();
    ParabolicSet {
        n: parts.len(),
        generators: (1..parts.len())
            .filter(|&i| parts[i - 1] == parts[i])
            .collect(),
    }
}

/// `(tau_hat^{-1} * phi_tilde w0) · w0`: the Weyl group element attached to a
/// pair from the maximal final direction of the left factor and the minimal
/// initial direction of the right factor.
pub fn kk_direction_formula(tau_hat: &Permutation, phi_tilde: &Permutation) -> Result<Permutation> {
    Ok(tau_hat
        .inverse()
        .star_product(&phi_tilde.times_longest())?
        .times_longest())
}

/// The lower Bruhat interval `{u : u <= w}`.
pub fn bruhat_interval(w: &Permutation) -> Result<BTreeSet<Permutation>> {
    let all = Permutation::all(w.rank())?;
    Ok(all
        .into_iter()
        .filter(|u| bruhat_leq_unchecked(&u.images, &w.images))
        .collect())
}

/// The unique Bruhat-minimal element of `set`, if there is one.
pub fn bruhat_min<'a>(set: impl IntoIterator<Item = &'a Permutation>) -> Option<Permutation> {
    extremum(set, |a, b| bruhat_leq_unchecked(&a.images, &b.images))
}

/// The unique Bruhat-maximal element of `set`, if there is one.
pub fn bruhat_max<'a>(set: impl IntoIterator<Item = &'a Permutation>) -> Option<Permutation> {
    extremum(set, |a, b| bruhat_leq_unchecked(&b.images, &a.images))
}

fn extremum<'a>(
    set: impl IntoIterator<Item = &'a Permutation>,
    below: impl Fn(&Permutation, &Permutation) -> bool,
) -> Option<Permutation> {
    let items: Vec<&Permutation> = set.into_iter().collect();
    let candidate = items
        .iter()
        .copied()
        .reduce(|best, x| if below(x, best) { x } else { best })?;
    items
        .iter()
        .all(|x| below(candidate, x))
        .then(|| candidate.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_line(images).unwrap()
    }

    fn word(n: usize, letters: &[usize]) -> Word {
        Word::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn identity_and_longest() {
        assert_eq!(Permutation::longest(3).unwrap().one_line(), vec![3, 2, 1]);
        assert_eq!(Permutation::identity(4).unwrap().one_line(), vec![1, 2, 3, 4]);
        assert_eq!(Permutation::longest(5).unwrap().length(), 10);
        assert_eq!(Permutation::identity(0), Err(Error::ZeroRank));
        assert_eq!(Permutation::longest(0), Err(Error::ZeroRank));
    }

    #[test]
    fn compose_convention() {
        let w = p(&[3, 1, 4, 2, 5]);
        let e = Permutation::identity(5).unwrap();
        assert_eq!(w.compose(&e).unwrap(), w);
        assert_eq!(w.compose(&w.inverse()).unwrap(), e);
        let s1 = Permutation::simple_reflection(3, 1).unwrap();
        let s2 = Permutation::simple_reflection(3, 2).unwrap();
        let c = s1.compose(&s2).unwrap();
        assert_eq!(c.one_line(), vec![2, 3, 1]);
        assert_eq!(c, word(3, &[1, 2]).evaluate());
        assert_eq!(c.length(), 2);
        assert!(matches!(w.compose(&s1), Err(Error::RankMismatch(5, 3))));
    }

    #[test]
    fn evaluate_examples() {
        assert!(word(3, &[]).evaluate().is_identity());
        assert!(word(3, &[1, 1]).evaluate().is_identity());
        assert_eq!(word(3, &[1, 2, 1]).evaluate(), Permutation::longest(3).unwrap());
        assert!(Word::new(3, vec![3]).is_err());
        assert!(Word::new(3, vec![0]).is_err());
    }

    #[test]
    fn length_and_reducedness() {
        assert_eq!(Permutation::identity(4).unwrap().length(), 0);
        assert!(word(3, &[1, 2, 1]).is_reduced());
        assert!(!word(3, &[1, 1]).is_reduced());
        // inversions of 31425: (3,1) (3,2) (4,2)
        assert_eq!(p(&[3, 1, 4, 2, 5]).length(), 3);
    }

    #[test]
    fn bruhat_examples() {
        let e = Permutation::identity(3).unwrap();
        for w in Permutation::all(3).unwrap() {
            assert!(e.bruhat_leq(&w).unwrap());
            assert!(w.bruhat_leq(&w).unwrap());
        }
        let s1 = word(3, &[1]).evaluate();
        let s1s2 = word(3, &[1, 2]).evaluate();
        let s2s1 = word(3, &[2, 1]).evaluate();
        assert!(s1.bruhat_leq(&s1s2).unwrap());
        assert!(!s1s2.bruhat_leq(&s2s1).unwrap());
        assert!(!s2s1.bruhat_leq(&s1s2).unwrap());
    }

    #[test]
    fn star_examples() {
        let e = Permutation::identity(4).unwrap();
        let s1 = Permutation::simple_reflection(4, 1).unwrap();
        assert_eq!(e.star(1).unwrap(), s1);
        assert_eq!(s1.star(1).unwrap(), s1);
        assert_eq!(
            word(4, &[1, 3]).evaluate().star(2).unwrap(),
            word(4, &[1, 3, 2]).evaluate()
        );
        assert!(e.star(4).is_err());
        assert!(e.star(0).is_err());
    }

    #[test]
    fn demazure_product_examples() {
        assert_eq!(
            word(4, &[1, 3, 1, 2, 2]).demazure_product(),
            word(4, &[3, 1, 2]).evaluate()
        );
        assert!(word(4, &[]).demazure_product().is_identity());
        let w = word(5, &[1, 2, 4, 2, 1, 1, 1, 3, 2, 4, 2]);
        assert_eq!(
            w.demazure_product(),
            word(5, &[1, 4, 2, 1, 3, 4, 2]).evaluate()
        );
    }

    #[test]
    fn subword_dominates_examples() {
        let w0_3 = Permutation::longest(3).unwrap();
        assert!(word(3, &[1, 2, 1]).subword_dominates(&w0_3).unwrap());
        assert!(word(3, &[])
            .subword_dominates(&Permutation::identity(3).unwrap())
            .unwrap());
        let w = word(5, &[1, 2, 4, 2, 1, 1, 1, 3, 2, 4, 2]);
        assert_eq!(w.demazure_product().length(), 7);
        assert!(!w.subword_dominates(&Permutation::longest(5).unwrap()).unwrap());
    }

    #[test]
    fn stabilizers() {
        let gens = |parts: &[i64]| -> Vec<usize> {
            stabilizer_generators(&Partition::new(parts.to_vec()).unwrap())
                .generators()
                .iter()
                .copied()
                .collect()
        };
        assert_eq!(gens(&[1, 0, 0]), vec![2]);
        assert_eq!(gens(&[3, 2, 1, 0]), Vec::<usize>::new());
        assert_eq!(gens(&[0, 0, 0]), vec![1, 2]);
    }

    #[test]
    fn coset_representatives() {
        let all = ParabolicSet::new(3, [1, 2]).unwrap();
        let w0 = Permutation::longest(3).unwrap();
        assert!(w0.min_coset_rep(&all).unwrap().is_identity());
        assert_eq!(w0.max_coset_rep(&all).unwrap(), w0);
        let e = Permutation::identity(3).unwrap();
        for j in [vec![], vec![1], vec![2], vec![1, 2]] {
            let j = ParabolicSet::new(3, j).unwrap();
            assert!(e.min_coset_rep(&j).unwrap().is_identity());
        }
        // w = s2 s1 = [3,1,2]; coset {w, w s2} = {[3,1,2], [3,2,1]}
        let w = word(3, &[2, 1]).evaluate();
        let j = ParabolicSet::new(3, [2]).unwrap();
        let coset = [w.clone(), w.mul_simple(2).unwrap()];
        let shortest = coset.iter().min_by_key(|u| u.length()).unwrap();
        let longest = coset.iter().max_by_key(|u| u.length()).unwrap();
        assert_eq!(&w.min_coset_rep(&j).unwrap(), shortest);
        assert_eq!(&w.max_coset_rep(&j).unwrap(), longest);
        assert_eq!(w.min_coset_rep(&j).unwrap(), w);
    }

    #[test]
    fn direction_formula_small_cases() {
        let e = Permutation::identity(3).unwrap();
        let w0 = Permutation::longest(3).unwrap();
        assert!(kk_direction_formula(&e, &e).unwrap().is_identity());
        // (w0^{-1} * e w0) w0 = (w0 * w0) w0 = w0 w0 = e
        assert!(kk_direction_formula(&w0, &e).unwrap().is_identity());
        // (e * w0 w0) w0 = e w0 = w0
        assert_eq!(kk_direction_formula(&e, &w0).unwrap(), w0);
    }

    #[test]
    fn intervals() {
        let e = Permutation::identity(3).unwrap();
        assert_eq!(bruhat_interval(&e).unwrap().len(), 1);
        let s1 = Permutation::simple_reflection(3, 1).unwrap();
        assert_eq!(
            bruhat_interval(&s1).unwrap(),
            [e.clone(), s1.clone()].into_iter().collect()
        );
        assert_eq!(bruhat_interval(&Permutation::longest(3).unwrap()).unwrap().len(), 6);
        assert!(bruhat_interval(&Permutation::identity(12).unwrap()).is_err());
    }

    #[test]
    fn reduced_words_of_longest() {
        let words = Permutation::longest(4).unwrap().reduced_words();
        assert_eq!(words.len(), 16);
        assert!(words.iter().all(|w| w.is_reduced() && w.len() == 6));
        let w = p(&[2, 4, 1, 3]);
        assert_eq!(w.reduced_word().evaluate(), w);
    }

    #[test]
    fn extrema() {
        let all = Permutation::all(3).unwrap();
        assert!(bruhat_min(&all).unwrap().is_identity());
        assert_eq!(bruhat_max(&all).unwrap(), Permutation::longest(3).unwrap());
        let pair = [word(3, &[1]).evaluate(), word(3, &[2]).evaluate()];
        assert_eq!(bruhat_min(&pair), None);
    }

    #[test]
    fn json_shape() {
        let w = p(&[2, 3, 1]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[2,3,1]");
        assert_eq!(serde_json::from_str::<Permutation>("[2,3,1]").unwrap(), w);
        assert!(serde_json::from_str::<Permutation>("[2,2,1]").is_err());
        assert_eq!(serde_json::to_string(&word(3, &[1, 2])).unwrap(), "[1,2]");
    }
}
