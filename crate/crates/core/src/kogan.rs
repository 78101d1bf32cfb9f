//! Kogan faces (NE equalities), dual Kogan faces (SE equalities) and BiKogan
//! faces of `GT(lambda) × GT(mu)`.
//!
//! Faces are represented by their equality sets only. A set `F` of index
//! pairs `(i, j)`, `n >= i > j >= 1`, is stored as a bitmask over
//! [`pair_index`].
//!
//! * Kogan: pairs in lexicographic order, each contributing `s_{i-j}`; the
//!   product is `sigma(F)` and `varpi(F) = w0 sigma(F) w0`.
//! * Dual Kogan: pairs ordered by `i` increasing then `j` decreasing, each
//!   contributing `s_j`; the product is `sigma_bar(F)` and
//!   `varpi_bar(F) = w0 sigma_bar(F) w0`.
//! * BiKogan `(F, F')`, SE on the left factor and NE on the right:
//!   `varpi(F, F') = sigma_bar(F)^{-1} sigma(F')`, reduced when its length is
//!   `|F| + |F'|`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{PairSpace, TensorElement};
use crate::error::{Error, Result};
use crate::gt::{self, index_pairs, pair_index, GtPattern, Inequality, Partition};
use crate::perm::{Permutation, Word};

/// Largest rank for which faces are enumerated (masks are `u128`).
pub const FACE_MAX_RANK: usize = 16;

/// A set of NE (Kogan) or SE (dual Kogan) equalities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FaceSpec {
    n: usize,
    kind: Inequality,
    pairs: BTreeSet<(usize, usize)>,
}

impl FaceSpec {
    pub fn new(
        n: usize,
        kind: Inequality,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if n > FACE_MAX_RANK {
            return Err(Error::RankTooLarge {
                n,
                max: FACE_MAX_RANK,
            });
        }
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| !(j >= 1 && j < i && i <= n)) {
            return Err(Error::MalformedTriangle(format!(
                "face pair ({i},{j}) outside n >= i > j >= 1 for n = {n}"
            )));
        }
        Ok(Self { n, kind, pairs })
    }

    pub fn kogan(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(n, Inequality::NorthEast, pairs)
    }

    pub fn dual(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(n, Inequality::SouthEast, pairs)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Inequality {
        self.kind
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn mask(&self) -> u128 {
        self.pairs
            .iter()
            .fold(0, |m, &(i, j)| m | 1 << pair_index(i, j))
    }

    /// The face's associated word: `sigma` for NE, `sigma_bar` for SE.
    pub fn word(&self) -> Word {
        match self.kind {
            Inequality::NorthEast => sigma_unchecked(self),
            Inequality::SouthEast => sigma_bar_unchecked(self),
        }
    }

    /// `len(word) = |F|`.
    pub fn is_reduced(&self) -> bool {
        self.word().is_reduced()
    }

    /// Does the pattern satisfy every equality of this face?
    pub fn contains<T: Copy + PartialOrd>(&self, p: &GtPattern<T>) -> bool {
        let mask = match self.kind {
            Inequality::NorthEast => p.ne_mask(),
            Inequality::SouthEast => p.se_mask(),
        };
        self.mask() & !mask == 0
    }
}

fn check_kind(f: &FaceSpec, expected: Inequality) -> Result<()> {
    if f.kind != expected {
        return Err(Error::WrongFaceKind {
            expected: expected.name(),
            found: f.kind.name(),
        });
    }
    Ok(())
}

/// Pairs in the Kogan total order with their letters.
fn kogan_order(n: usize) -> Vec<((usize, usize), usize)> {
    index_pairs(n).map(|(i, j)| ((i, j), i - j)).collect()
}

/// Pairs in the dual Kogan total order with their letters.
fn dual_order(n: usize) -> Vec<((usize, usize), usize)> {
    (2..=n)
        .flat_map(|i| (1..i).rev().map(move |j| ((i, j), j)))
        .collect()
}

fn word_in_order(f: &FaceSpec, order: Vec<((usize, usize), usize)>) -> Word {
    let letters = order
        .into_iter()
        .filter(|(pair, _)| f.pairs.contains(pair))
        .map(|(_, letter)| letter)
        .collect();
    Word::new(f.n, letters).expect("letters in range")
}

fn sigma_unchecked(f: &FaceSpec) -> Word {
    word_in_order(f, kogan_order(f.n))
}

fn sigma_bar_unchecked(f: &FaceSpec) -> Word {
    word_in_order(f, dual_order(f.n))
}

/// `sigma(F)` for a Kogan face.
pub fn sigma(f: &FaceSpec) -> Result<Word> {
    check_kind(f, Inequality::NorthEast)?;
    Ok(sigma_unchecked(f))
}

/// `sigma_bar(F)` for a dual Kogan face.
pub fn sigma_bar(f: &FaceSpec) -> Result<Word> {
    check_kind(f, Inequality::SouthEast)?;
    Ok(sigma_bar_unchecked(f))
}

fn conjugate_by_longest(w: &Permutation) -> Permutation {
    w.longest_times().times_longest()
}

/// `varpi(F) = w0 sigma(F) w0`.
pub fn varpi(f: &FaceSpec) -> Result<Permutation> {
    Ok(conjugate_by_longest(&sigma(f)?.evaluate()))
}

/// `varpi_bar(F) = w0 sigma_bar(F) w0`.
pub fn varpi_bar(f: &FaceSpec) -> Result<Permutation> {
    Ok(conjugate_by_longest(&sigma_bar(f)?.evaluate()))
}

/// All subsets of `slots` whose letters, read in slot order, form a reduced
/// word for `target`. Returns the chosen slot masks.
fn reduced_subsets(n: usize, slots: &[usize], target: &Permutation) -> Vec<u128> {
    struct Search<'a> {
        slots: &'a [usize],
        target: &'a Permutation,
        goal: usize,
        out: Vec<u128>,
    }
    impl Search<'_> {
        fn go(&mut self, k: usize, cur: &Permutation, len: usize, mask: u128) {
            if len == self.goal {
                if cur == self.target {
                    self.out.push(mask);
                }
                return;
            }
            if self.slots.len() - k < self.goal - len {
                return;
            }
            let letter = self.slots[k];
            if cur.is_right_ascent(letter).unwrap() {
                let next = cur.mul_simple(letter).unwrap();
                // every prefix of a reduced word lies below the full product
                if next.bruhat_leq(self.target).unwrap() {
                    self.go(k + 1, &next, len + 1, mask | 1 << k);
                }
            }
            self.go(k + 1, cur, len, mask);
        }
    }
    let mut s = Search {
        slots,
        target,
        goal: target.length(),
        out: Vec::new(),
    };
    s.go(0, &Permutation::identity(n).unwrap(), 0, 0);
    s.out.sort_unstable();
    s.out
}

fn check_face_rank(n: usize) -> Result<()> {
    if n > FACE_MAX_RANK {
        return Err(Error::RankTooLarge {
            n,
            max: FACE_MAX_RANK,
        });
    }
    Ok(())
}

/// Reduced faces of the given kind whose associated permutation (`varpi` or
/// `varpi_bar`) is `w`.
pub fn reduced_faces(kind: Inequality, w: &Permutation) -> Result<Vec<FaceSpec>> {
    let n = w.rank();
    check_face_rank(n)?;
    let order = match kind {
        Inequality::NorthEast => kogan_order(n),
        Inequality::SouthEast => dual_order(n),
    };
    let letters: Vec<usize> = order.iter().map(|&(_, l)| l).collect();
    let target = conjugate_by_longest(w);
    Ok(reduced_subsets(n, &letters, &target)
        .into_iter()
        .map(|slot_mask| FaceSpec {
            n,
            kind,
            pairs: order
                .iter()
                .enumerate()
                .filter(|(k, _)| slot_mask >> k & 1 == 1)
                .map(|(_, &(pair, _))| pair)
                .collect(),
        })
        .collect())
}

fn face_union(mu: &Partition, faces: &[FaceSpec]) -> Result<BTreeSet<GtPattern>> {
    let patterns = gt::enumerate(mu)?;
    let masks: Vec<u128> = faces.iter().map(FaceSpec::mask).collect();
    Ok(patterns
        .into_iter()
        .filter(|p| {
            let (ne, se) = (p.ne_mask(), p.se_mask());
            faces.iter().zip(&masks).any(|(f, &m)| {
                let have = match f.kind {
                    Inequality::NorthEast => ne,
                    Inequality::SouthEast => se,
                };
                m & !have == 0
            })
        })
        .collect())
}

/// Integral points of the union of reduced Kogan faces with `varpi(F) = w`.
pub fn kogan_points(mu: &Partition, w: &Permutation) -> Result<BTreeSet<GtPattern>> {
    if w.rank() != mu.rank() {
        return Err(Error::RankMismatch(mu.rank(), w.rank()));
    }
    face_union(mu, &reduced_faces(Inequality::NorthEast, w)?)
}

/// Integral points of the union of reduced dual Kogan faces with `varpi_bar(F) = w`.
pub fn dual_kogan_points(mu: &Partition, w: &Permutation) -> Result<BTreeSet<GtPattern>> {
    if w.rank() != mu.rank() {
        return Err(Error::RankMismatch(mu.rank(), w.rank()));
    }
    face_union(mu, &reduced_faces(Inequality::SouthEast, w)?)
}

/// A BiKogan face: SE equalities on the left factor, NE equalities on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BiFace {
    pub se_part: FaceSpec,
    pub ne_part: FaceSpec,
}

impl BiFace {
    pub fn new(se_part: FaceSpec, ne_part: FaceSpec) -> Result<Self> {
        check_kind(&se_part, Inequality::SouthEast)?;
        check_kind(&ne_part, Inequality::NorthEast)?;
        if se_part.n != ne_part.n {
            return Err(Error::RankMismatch(se_part.n, ne_part.n));
        }
        Ok(Self { se_part, ne_part })
    }

    pub fn rank(&self) -> usize {
        self.se_part.n
    }

    /// `rev(sigma_bar(F)) ++ sigma(F')`, a word for `varpi(F, F')`.
    pub fn word(&self) -> Word {
        sigma_bar_unchecked(&self.se_part)
            .reversed()
            .concat(&sigma_unchecked(&self.ne_part))
            .expect("equal ranks")
    }

    pub fn len(&self) -> usize {
        self.se_part.len() + self.ne_part.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, t: &TensorElement) -> bool {
        self.se_part.contains(&t.left) && self.ne_part.contains(&t.right)
    }
}

/// `varpi(F, F') = sigma_bar(F)^{-1} · sigma(F')`.
pub fn bikogan_varpi(b: &BiFace) -> Permutation {
    b.word().evaluate()
}

/// `len(varpi(F, F')) = |F| + |F'|`.
pub fn bikogan_is_reduced(b: &BiFace) -> bool {
    bikogan_varpi(b).length() == b.len()
}

/// Every reduced BiFace with `varpi(F, F') = v`.
pub fn reduced_bifaces(v: &Permutation) -> Result<Vec<BiFace>> {
    let n = v.rank();
    check_face_rank(n)?;
    // slots: SE pairs in reversed dual order, then NE pairs in Kogan order
    let mut se_slots = dual_order(n);
    se_slots.reverse();
    let ne_slots = kogan_order(n);
    let letters: Vec<usize> = se_slots.iter().chain(&ne_slots).map(|&(_, l)| l).collect();
    let split = se_slots.len();
    Ok(reduced_subsets(n, &letters, v)
        .into_iter()
        .map(|slot_mask| {
            let pick = |slots: &[((usize, usize), usize)], shift: usize| -> BTreeSet<_> {
                slots
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| slot_mask >> (k + shift) & 1 == 1)
                    .map(|(_, &(pair, _))| pair)
                    .collect()
            };
            BiFace {
                se_part: FaceSpec {
                    n,
                    kind: Inequality::SouthEast,
                    pairs: pick(&se_slots, 0),
                },
                ne_part: FaceSpec {
                    n,
                    kind: Inequality::NorthEast,
                    pairs: pick(&ne_slots, split),
                },
            }
        })
        .collect())
}

/// Pairs of `space` lying on the BiKogan face `b`.
pub fn bikogan_points_in(space: &PairSpace, b: &BiFace) -> Result<BTreeSet<TensorElement>> {
    if b.rank() != space.rank() {
        return Err(Error::RankMismatch(space.rank(), b.rank()));
    }
    let (fm, fpm) = (b.se_part.mask(), b.ne_part.mask());
    let left: Vec<&GtPattern> = space.left().iter().filter(|p| fm & !p.se_mask() == 0).collect();
    let right: Vec<&GtPattern> = space.right().iter().filter(|q| fpm & !q.ne_mask() == 0).collect();
    Ok(left
        .iter()
        .flat_map(|p| right.iter().map(move |q| TensorElement::new((*p).clone(), (*q).clone())))
        .collect())
}

/// Integral points of the BiKogan face `b` of `GT(lambda) × GT(mu)`.
pub fn bikogan_points(
    lambda: &Partition,
    mu: &Partition,
    b: &BiFace,
) -> Result<BTreeSet<TensorElement>> {
    bikogan_points_in(&PairSpace::new(lambda, mu)?, b)
}

/// Union of the points of all reduced BiFaces with `varpi(F, F') = v`.
pub fn bikogan_union_in(space: &PairSpace, v: &Permutation) -> Result<BTreeSet<TensorElement>> {
    if v.rank() != space.rank() {
        return Err(Error::RankMismatch(space.rank(), v.rank()));
    }
    let faces = reduced_bifaces(v)?;
    let left_masks: Vec<u128> = space.left().iter().map(|p| p.se_mask()).collect();
    let right_masks: Vec<u128> = space.right().iter().map(|q| q.ne_mask()).collect();
    let r = right_masks.len();
    let ids: BTreeSet<usize> = faces
        .par_iter()
        .map(|b| {
            let (fm, fpm) = (b.se_part.mask(), b.ne_part.mask());
            let mut ids = BTreeSet::new();
            for (a, &lm) in left_masks.iter().enumerate() {
                if fm & !lm != 0 {
                    continue;
                }
                for (c, &rm) in right_masks.iter().enumerate() {
                    if fpm & !rm == 0 {
                        ids.insert(a * r + c);
                    }
                }
            }
            ids
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(ids.into_iter().map(|k| space.element(k)).collect())
}

/// Integral points of `K_{lambda,mu}(v)`.
pub fn bikogan_union_points(
    lambda: &Partition,
    mu: &Partition,
    v: &Permutation,
) -> Result<BTreeSet<TensorElement>> {
    bikogan_union_in(&PairSpace::new(lambda, mu)?, v)
}

/// A reduced BiFace with `varpi(F, F') = v` containing `(P, Q)`, if one exists.
pub fn bikogan_witness(t: &TensorElement, v: &Permutation) -> Result<Option<BiFace>> {
    Ok(reduced_bifaces(v)?.into_iter().find(|b| b.contains(t)))
}
