//! Crystal structure on integral GT patterns, the tensor product crystal on
//! pairs, Demazure and opposite Demazure crystals, and connected components.
//!
//! For a fixed `i`, the operators look at rows `i-1`, `i`, `i+1` through the
//! partial sums
//!
//! ```text
//! d_1 = a(i,1) - a(i+1,1)
//! d_t = d_{t-1} + a(i,t-1) + a(i,t) - a(i-1,t-1) - a(i+1,t)    (1 < t <= i+1)
//! ```
//!
//! with `a(k, k+1) = 0` for `k in {i-1, i}` and row `0` empty. With
//! `d = min d_t`, `m` the first and `M` the last index attaining it, `e_i`
//! increments `a(i, m)` unless `d = 0`, and `f_i` decrements `a(i, M)` unless
//! `M = i + 1`. Then `epsilon_i = -d`.

pub mod tableau;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gt::{self, GtPattern, Partition, Weight};
use crate::perm::{Permutation, Word};

pub use tableau::{gt_to_tableau, lower_oracle, raise_oracle, tableau_to_gt};

/// Largest pair set a [`PairSpace`] builds without `force`.
pub const PAIR_LIMIT: u128 = 10_000_000;

fn check_index(p: &GtPattern, i: usize) -> Result<()> {
    if i == 0 || i >= p.size() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: p.size().saturating_sub(1),
        });
    }
    Ok(())
}

/// The sequence `d_1, ..., d_{i+1}`.
fn partial_sums(p: &GtPattern, i: usize) -> Vec<i64> {
    // a(k, t) with the boundary conventions: row 0 empty, a(k, k+1) = 0
    let a = |k: usize, t: usize| -> i64 {
        if k == 0 || t > k {
            0
        } else {
            p.get(k, t)
        }
    };
    let mut d = Vec::with_capacity(i + 1);
    d.push(a(i, 1) - a(i + 1, 1));
    for t in 2..=i + 1 {
        let prev = d[t - 2];
        d.push(prev + a(i, t - 1) + a(i, t) - a(i - 1, t - 1) - a(i + 1, t));
    }
    d
}

/// `e_i(P)`, or `None` for the zero element.
pub fn raise(p: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
    check_index(p, i)?;
    let d = partial_sums(p, i);
    let min = *d.iter().min().unwrap();
    if min == 0 {
        return Ok(None);
    }
    let m = d.iter().position(|&x| x == min).unwrap() + 1;
    let mut q = p.clone();
    q.set(i, m, p.get(i, m) + 1);
    Ok(Some(q))
}

/// `f_i(P)`, or `None` for the zero element.
pub fn lower(p: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
    check_index(p, i)?;
    let d = partial_sums(p, i);
    let min = *d.iter().min().unwrap();
    let big_m = d.iter().rposition(|&x| x == min).unwrap() + 1;
    if big_m == i + 1 {
        return Ok(None);
    }
    let mut q = p.clone();
    q.set(i, big_m, p.get(i, big_m) - 1);
    Ok(Some(q))
}

/// `epsilon_i(P) = -min_t d_t`.
pub fn epsilon(p: &GtPattern, i: usize) -> Result<usize> {
    check_index(p, i)?;
    Ok((-partial_sums(p, i).into_iter().min().unwrap()) as usize)
}

/// `phi_i(P) = epsilon_i(P) + <wt(P), alpha_i^vee>`.
pub fn phi(p: &GtPattern, i: usize) -> Result<usize> {
    let e = epsilon(p, i)? as i64;
    Ok((e + p.weight().pairing(i)) as usize)
}

/// Number of times `e_i` applies before reaching zero.
pub fn epsilon_by_walk(p: &GtPattern, i: usize) -> Result<usize> {
    string_length(p, i, raise)
}

/// Number of times `f_i` applies before reaching zero.
pub fn phi_by_walk(p: &GtPattern, i: usize) -> Result<usize> {
    string_length(p, i, lower)
}

fn string_length(
    p: &GtPattern,
    i: usize,
    op: fn(&GtPattern, usize) -> Result<Option<GtPattern>>,
) -> Result<usize> {
    let mut cur = p.clone();
    let mut k = 0;
    while let Some(next) = op(&cur, i)? {
        cur = next;
        k += 1;
    }
    Ok(k)
}

/// How the operators act on a pair.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TensorConvention {
    /// `f_i` acts on the left factor iff `phi_i(left) > epsilon_i(right)`;
    /// `e_i` acts on the right factor iff `epsilon_i(right) > phi_i(left)`.
    #[default]
    Kashiwara,
    /// The same rule with the roles of the two factors exchanged.
    Mirrored,
}

/// An element `P ⊗ Q` of `GTZ(lambda) × GTZ(mu)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TensorElement {
    pub left: GtPattern,
    pub right: GtPattern,
}

impl TensorElement {
    pub fn new(left: GtPattern, right: GtPattern) -> Self {
        Self { left, right }
    }

    pub fn weight(&self) -> Weight {
        self.left.weight().add(&self.right.weight())
    }
}

impl std::fmt::Display for TensorElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ⊗ {}", self.left, self.right)
    }
}

/// Which factor an operator acts on.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

fn raise_side(conv: TensorConvention, t: &TensorElement, i: usize) -> Result<Side> {
    Ok(match conv {
        TensorConvention::Kashiwara => {
            if epsilon(&t.right, i)? > phi(&t.left, i)? {
                Side::Right
            } else {
                Side::Left
            }
        }
        TensorConvention::Mirrored => {
            if epsilon(&t.left, i)? > phi(&t.right, i)? {
                Side::Left
            } else {
                Side::Right
            }
        }
    })
}

fn lower_side(conv: TensorConvention, t: &TensorElement, i: usize) -> Result<Side> {
    Ok(match conv {
        TensorConvention::Kashiwara => {
            if phi(&t.left, i)? > epsilon(&t.right, i)? {
                Side::Left
            } else {
                Side::Right
            }
        }
        TensorConvention::Mirrored => {
            if phi(&t.right, i)? > epsilon(&t.left, i)? {
                Side::Right
            } else {
                Side::Left
            }
        }
    })
}

fn act(
    t: &TensorElement,
    i: usize,
    side: Side,
    op: fn(&GtPattern, usize) -> Result<Option<GtPattern>>,
) -> Result<Option<TensorElement>> {
    Ok(match side {
        Side::Left => op(&t.left, i)?.map(|left| TensorElement::new(left, t.right.clone())),
        Side::Right => op(&t.right, i)?.map(|right| TensorElement::new(t.left.clone(), right)),
    })
}

pub fn tensor_raise_with(
    conv: TensorConvention,
    t: &TensorElement,
    i: usize,
) -> Result<Option<TensorElement>> {
    check_index(&t.left, i)?;
    act(t, i, raise_side(conv, t, i)?, raise)
}

pub fn tensor_lower_with(
    conv: TensorConvention,
    t: &TensorElement,
    i: usize,
) -> Result<Option<TensorElement>> {
    check_index(&t.left, i)?;
    act(t, i, lower_side(conv, t, i)?, lower)
}

/// `e_i(P ⊗ Q)` under the Kashiwara convention.
pub fn tensor_raise(t: &TensorElement, i: usize) -> Result<Option<TensorElement>> {
    tensor_raise_with(TensorConvention::Kashiwara, t, i)
}

/// `f_i(P ⊗ Q)` under the Kashiwara convention.
pub fn tensor_lower(t: &TensorElement, i: usize) -> Result<Option<TensorElement>> {
    tensor_lower_with(TensorConvention::Kashiwara, t, i)
}

/// Saturates `start` under `op_j^m` for each letter, last letter first.
fn closure(
    start: GtPattern,
    letters: &[usize],
    op: fn(&GtPattern, usize) -> Result<Option<GtPattern>>,
) -> Result<BTreeSet<GtPattern>> {
    let mut set = BTreeSet::from([start]);
    for &j in letters.iter().rev() {
        let mut next = set.clone();
        for b in &set {
            let mut cur = b.clone();
            while let Some(c) = op(&cur, j)? {
                next.insert(c.clone());
                cur = c;
            }
        }
        set = next;
    }
    Ok(set)
}

fn check_reduced(mu: &Partition, word: &Word) -> Result<()> {
    if word.rank() != mu.rank() {
        return Err(Error::RankMismatch(mu.rank(), word.rank()));
    }
    if !word.is_reduced() {
        return Err(Error::NotReduced(word.letters().to_vec()));
    }
    Ok(())
}

/// `{f_{i1}^{m1} ... f_{ik}^{mk} G0 : m_j >= 0}` for a reduced word `[i1, ..., ik]`.
pub fn demazure_crystal(mu: &Partition, word: &Word) -> Result<BTreeSet<GtPattern>> {
    check_reduced(mu, word)?;
    closure(GtPattern::highest(mu), word.letters(), lower)
}

/// `{e_{j1}^{m1} ... e_{jt}^{mt} G* : m_s >= 0}` where `[j1, ..., jt]` is a
/// reduced word for `w · w0`.
pub fn opposite_demazure_crystal(mu: &Partition, word: &Word) -> Result<BTreeSet<GtPattern>> {
    check_reduced(mu, word)?;
    closure(GtPattern::lowest(mu), word.letters(), raise)
}

/// [`demazure_crystal`] for the canonical reduced word of `w`.
pub fn demazure_crystal_of(mu: &Partition, w: &Permutation) -> Result<BTreeSet<GtPattern>> {
    demazure_crystal(mu, &w.reduced_word())
}

/// [`opposite_demazure_crystal`] indexed by `w` (the word used is one for `w · w0`).
pub fn opposite_demazure_crystal_of(
    mu: &Partition,
    w: &Permutation,
) -> Result<BTreeSet<GtPattern>> {
    opposite_demazure_crystal(mu, &w.times_longest().reduced_word())
}

/// The `f_i` edges of `GTZ(mu)`.
#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    pub vertices: Vec<GtPattern>,
    /// `(source, target, i)` with `f_i(vertices[source]) = vertices[target]`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl CrystalGraph {
    pub fn new(mu: &Partition) -> Result<Self> {
        let vertices = gt::enumerate(mu)?;
        let index: HashMap<&GtPattern, usize> =
            vertices.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut edges = Vec::new();
        for (k, p) in vertices.iter().enumerate() {
            for i in 1..mu.rank() {
                if let Some(q) = lower(p, i)? {
                    edges.push((k, index[&q], i));
                }
            }
        }
        Ok(Self { vertices, edges })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, p) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{k} [label=\"{p}\"];");
        }
        for &(a, b, i) in &self.edges {
            let _ = writeln!(s, "  v{a} -> v{b} [label=\"{i}\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// The finite set `GTZ(lambda) × GTZ(mu)` with pattern lookup tables.
#[derive(Clone, Debug)]
pub struct PairSpace {
    lambda: Partition,
    mu: Partition,
    left: Vec<GtPattern>,
    right: Vec<GtPattern>,
    left_index: HashMap<GtPattern, usize>,
    right_index: HashMap<GtPattern, usize>,
}

impl PairSpace {
    /// Refuses products larger than [`PAIR_LIMIT`].
    pub fn new(lambda: &Partition, mu: &Partition) -> Result<Self> {
        Self::build(lambda, mu, false)
    }

    /// Builds regardless of [`PAIR_LIMIT`].
    pub fn new_forced(lambda: &Partition, mu: &Partition) -> Result<Self> {
        Self::build(lambda, mu, true)
    }

    fn build(lambda: &Partition, mu: &Partition, force: bool) -> Result<Self> {
        if lambda.rank() != mu.rank() {
            return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
        }
        let count = gt::dimension_oracle(lambda)?
            .checked_mul(gt::dimension_oracle(mu)?)
            .ok_or(Error::Overflow("pair count"))?;
        if !force && count > PAIR_LIMIT {
            return Err(Error::SizeGuard {
                what: "pair set",
                count,
                limit: PAIR_LIMIT,
            });
        }
        let left = gt::enumerate(lambda)?;
        let right = gt::enumerate(mu)?;
        let index = |v: &[GtPattern]| v.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        Ok(Self {
            lambda: lambda.clone(),
            mu: mu.clone(),
            left_index: index(&left),
            right_index: index(&right),
            left,
            right,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn rank(&self) -> usize {
        self.mu.rank()
    }

    pub fn left(&self) -> &[GtPattern] {
        &self.left
    }

    pub fn right(&self) -> &[GtPattern] {
        &self.right
    }

    pub fn len(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The pair with id `k` (left-major).
    pub fn element(&self, k: usize) -> TensorElement {
        let r = self.right.len();
        TensorElement::new(self.left[k / r].clone(), self.right[k % r].clone())
    }

    pub fn id_of(&self, t: &TensorElement) -> Option<usize> {
        let l = self.left_index.get(&t.left)?;
        let r = self.right_index.get(&t.right)?;
        Some(l * self.right.len() + r)
    }

    /// All pairs in id order.
    pub fn elements(&self) -> impl Iterator<Item = TensorElement> + '_ {
        (0..self.len()).map(|k| self.element(k))
    }

    /// Connected components of the tensor crystal graph, ordered by highest element.
    pub fn components(&self, conv: TensorConvention) -> Result<Vec<Component>> {
        let n = self.rank();
        let mut label = vec![usize::MAX; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if label[start] != usize::MAX {
                continue;
            }
            let c = out.len();
            label[start] = c;
            let mut members = BTreeSet::new();
            let mut highest = Vec::new();
            let mut queue = VecDeque::from([start]);
            while let Some(k) = queue.pop_front() {
                let t = self.element(k);
                let mut is_highest = true;
                for i in 1..n {
                    let up = tensor_raise_with(conv, &t, i)?;
                    is_highest &= up.is_none();
                    for next in [up, tensor_lower_with(conv, &t, i)?].into_iter().flatten() {
                        let id = self.id_of(&next).expect("operators preserve shapes");
                        if label[id] == usize::MAX {
                            label[id] = c;
                            queue.push_back(id);
                        }
                    }
                }
                if is_highest {
                    highest.push(t.clone());
                }
                members.insert(t);
            }
            if highest.len() != 1 {
                return Err(Error::StraddlingComponent(format!(
                    "{} highest elements in component of {}",
                    highest.len(),
                    self.element(start)
                )));
            }
            out.push(Component {
                highest: highest.pop().unwrap(),
                members,
            });
        }
        out.sort_by(|a, b| a.highest.cmp(&b.highest));
        Ok(out)
    }
}

/// A connected component of the tensor crystal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub highest: TensorElement,
    pub members: BTreeSet<TensorElement>,
}

impl Component {
    pub fn highest_weight(&self) -> Weight {
        self.highest.weight()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Connected components of `GTZ(lambda) ⊗ GTZ(mu)` under the Kashiwara convention.
pub fn components(lambda: &Partition, mu: &Partition) -> Result<Vec<Component>> {
    PairSpace::new(lambda, mu)?.components(TensorConvention::Kashiwara)
}
