//! Kostant-Kumar crystals `GT(lambda, w, mu) = {(P, Q) : p(P, Q) <= w}`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::charpoly::CharPoly;
use crate::crystal::{PairSpace, TensorConvention, TensorElement};
use crate::error::{Error, Result};
use crate::gt::{GtPattern, Partition, Weight};
use crate::perm::{Permutation, Word};
use crate::reading::{associated_permutation, pair_word};

fn check_shapes(lambda: &Partition, mu: &Partition, w: &Permutation) -> Result<()> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
    }
    if w.rank() != mu.rank() {
        return Err(Error::RankMismatch(mu.rank(), w.rank()));
    }
    Ok(())
}

/// `p(P, Q) <= w`, with `P` of shape `lambda` and `Q` of shape `mu`.
pub fn member(
    lambda: &Partition,
    mu: &Partition,
    w: &Permutation,
    p: &GtPattern,
    q: &GtPattern,
) -> Result<bool> {
    check_shapes(lambda, mu, w)?;
    if p.size() != lambda.rank() || q.size() != mu.rank() {
        return Err(Error::RankMismatch(p.size(), q.size()));
    }
    if &p.shape() != lambda || &q.shape() != mu {
        return Err(Error::MalformedTriangle(format!(
            "pair of shapes {} and {} given for {lambda} and {mu}",
            p.shape(),
            q.shape()
        )));
    }
    associated_permutation(p, q)?.bruhat_leq(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KkCrystal {
    pub lambda: Partition,
    pub mu: Partition,
    pub w: Permutation,
    pub members: BTreeSet<TensorElement>,
}

impl KkCrystal {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn character(&self) -> CharPoly {
        character_of(self.mu.rank(), self.members.iter())
    }
}

fn character_of<'a>(n: usize, members: impl Iterator<Item = &'a TensorElement>) -> CharPoly {
    let mut c = CharPoly::zero(n);
    for t in members {
        c.add_term(t.weight(), 1);
    }
    c
}

/// Ids (left-major) of the pairs of `space` whose `p` lies below `w`.
pub fn member_ids(space: &PairSpace, w: &Permutation) -> Result<Vec<usize>> {
    if w.rank() != space.rank() {
        return Err(Error::RankMismatch(space.rank(), w.rank()));
    }
    let r = space.right().len();
    (0..space.len())
        .into_par_iter()
        .filter_map(|k| {
            let p = &space.left()[k / r];
            let q = &space.right()[k % r];
            match associated_permutation(p, q).and_then(|x| x.bruhat_leq(w)) {
                Ok(true) => Some(Ok(k)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect()
}

/// `GT_Z(lambda, w, mu)` inside a prepared pair space.
pub fn kk_crystal_in(space: &PairSpace, w: &Permutation) -> Result<KkCrystal> {
    let ids = member_ids(space, w)?;
    Ok(KkCrystal {
        lambda: space.lambda().clone(),
        mu: space.mu().clone(),
        w: w.clone(),
        members: ids.into_iter().map(|k| space.element(k)).collect(),
    })
}

/// `GT_Z(lambda, w, mu)`; refuses more than [`crate::crystal::PAIR_LIMIT`] pairs.
pub fn kk_crystal(lambda: &Partition, mu: &Partition, w: &Permutation) -> Result<KkCrystal> {
    check_shapes(lambda, mu, w)?;
    kk_crystal_in(&PairSpace::new(lambda, mu)?, w)
}

/// `sum x^{wt(P) + wt(Q)}` over the KK crystal.
pub fn kk_character(lambda: &Partition, mu: &Partition, w: &Permutation) -> Result<CharPoly> {
    Ok(kk_crystal(lambda, mu, w)?.character())
}

/// Pairs whose reading word contains a reduced word of `w0` as a subword.
pub fn cartan_component(lambda: &Partition, mu: &Partition) -> Result<BTreeSet<TensorElement>> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
    }
    let space = PairSpace::new(lambda, mu)?;
    cartan_component_in(&space)
}

pub fn cartan_component_in(space: &PairSpace) -> Result<BTreeSet<TensorElement>> {
    let w0 = Permutation::longest(space.rank())?;
    let hits: Result<Vec<Option<TensorElement>>> = (0..space.len())
        .into_par_iter()
        .map(|k| {
            let t = space.element(k);
            let word: Word = pair_word(&t.left, &t.right)?;
            Ok(word.subword_dominates(&w0)?.then_some(t))
        })
        .collect();
    Ok(hits?.into_iter().flatten().collect())
}

/// Highest weights of the crystal components making up `GT_Z(lambda, w, mu)`,
/// with multiplicities.
pub fn decompose(
    lambda: &Partition,
    mu: &Partition,
    w: &Permutation,
) -> Result<BTreeMap<Weight, usize>> {
    check_shapes(lambda, mu, w)?;
    let space = PairSpace::new(lambda, mu)?;
    decompose_in(&space, w, TensorConvention::Kashiwara)
}

/// [`decompose`] inside a prepared space under a chosen tensor convention.
/// A component that is only partly inside the KK set is an error.
pub fn decompose_in(
    space: &PairSpace,
    w: &Permutation,
    conv: TensorConvention,
) -> Result<BTreeMap<Weight, usize>> {
    let inside: BTreeSet<usize> = member_ids(space, w)?.into_iter().collect();
    let mut out = BTreeMap::new();
    for comp in space.components(conv)? {
        let ids: Vec<usize> = comp
            .members
            .iter()
            .map(|t| space.id_of(t).expect("member of space"))
            .collect();
        let hit = ids.iter().filter(|k| inside.contains(k)).count();
        if hit == ids.len() {
            *out.entry(comp.highest_weight()).or_insert(0) += 1;
        } else if hit != 0 {
            let witness = comp
                .members
                .iter()
                .zip(&ids)
                .find(|(_, k)| !inside.contains(k))
                .map(|(t, _)| t.to_string())
                .unwrap_or_default();
            return Err(Error::StraddlingComponent(format!(
                "component with highest element {} has {hit} of {} pairs inside for w = {w}; outside: {witness}",
                comp.highest,
                ids.len()
            )));
        }
    }
    Ok(out)
}
