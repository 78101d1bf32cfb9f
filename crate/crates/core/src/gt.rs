//! Partitions, weights and Gelfand-Tsetlin patterns.
//!
//! A pattern of size `n` is a triangular array `a(i, j)`, `n >= i >= j >= 1`,
//! stored row by row from the top row (length 1) down to the bottom row
//! (length `n`, the shape). It is valid when
//!
//! * `NE(i, j) = a(i, j) - a(i-1, j) >= 0` and
//! * `SE(i, j) = a(i-1, j) - a(i, j+1) >= 0`
//!
//! for all `n >= i > j >= 1`. In the usual rotated pictures the node at
//! drawn position `(x, y)` (with `x <= y`) holds `a(n - y + x, x + 1)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest size accepted by [`enumerate`].
pub const ENUMERATION_MAX_RANK: usize = 16;

/// Largest number of patterns [`enumerate`] will materialize.
pub const ENUMERATION_MAX_COUNT: u128 = 20_000_000;

/// A weakly decreasing sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::ZeroRank);
        }
        if parts.iter().any(|&x| x < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `|mu|`, the sum of the parts.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let parts = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("partition sum")))
            .collect::<Result<_>>()?;
        Ok(Self(parts))
    }

    /// Every partition with `n` parts and `|mu| <= max_size`, sorted.
    pub fn all_up_to(n: usize, max_size: i64) -> Vec<Self> {
        fn go(n: usize, cap: i64, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                out.push(Partition(cur.clone()));
                return;
            }
            for x in 0..=cap.min(left) {
                cur.push(x);
                go(n, x, left - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 && max_size >= 0 {
            go(n, max_size, max_size, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }

    pub fn as_weight(&self) -> Weight {
        Weight(self.0.clone())
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<i64>(s)
            .map_err(|_| Error::MalformedTriangle(format!("cannot parse {s:?} as a shape")))?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn parse_list<T: FromStr>(s: &str) -> std::result::Result<Vec<T>, T::Err> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse()).collect()
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// An integral weight `(p_1, ..., p_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The simple root `alpha_i = e_i - e_{i+1}`.
    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.0[i - 1] = 1;
        w.0[i] = -1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `<wt, alpha_i^vee> = p_i - p_{i+1}`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1] - self.0[i]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Which family of interlacing inequalities an index pair refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Inequality {
    /// `a(i, j) - a(i-1, j) >= 0`
    #[serde(rename = "NE")]
    NorthEast,
    /// `a(i-1, j) - a(i, j+1) >= 0`
    #[serde(rename = "SE")]
    SouthEast,
}

impl Inequality {
    pub fn name(self) -> &'static str {
        match self {
            Inequality::NorthEast => "NE",
            Inequality::SouthEast => "SE",
        }
    }
}

/// All index pairs `(i, j)` with `n >= i > j >= 1`, in lexicographic order.
pub fn index_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=n).flat_map(|i| (1..i).map(move |j| (i, j)))
}

/// Position of `(i, j)` in [`index_pairs`]; used for bitmask face encodings.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    (i - 1) * (i - 2) / 2 + (j - 1)
}

/// A triangular array of size `n`; integral valid arrays are GT patterns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtPattern<T = i64> {
    n: usize,
    // row-major, top row first: ordering is lexicographic on row1 ‖ row2 ‖ ...
    entries: Vec<T>,
}

#[inline]
fn offset(i: usize) -> usize {
    i * (i - 1) / 2
}

impl<T: Copy + PartialOrd> GtPattern<T> {
    /// Builds a pattern from its rows, top (length 1) to bottom (length `n`).
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let mut entries = Vec::with_capacity(offset(n + 1));
        for (k, row) in rows.into_iter().enumerate() {
            if row.len() != k + 1 {
                return Err(Error::MalformedTriangle(format!(
                    "row {} has length {}, expected {}",
                    k + 1,
                    row.len(),
                    k + 1
                )));
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `a(i, j)`, 1-based, `1 <= j <= i <= n`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        debug_assert!(1 <= j && j <= i && i <= self.n);
        self.entries[offset(i) + j - 1]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[offset(i) + j - 1] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[offset(i)..offset(i + 1)]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (1..=self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Every violated inequality, in lexicographic `(i, j)` order.
    pub fn violations(&self) -> Vec<(Inequality, usize, usize)> {
        let mut out = Vec::new();
        for (i, j) in index_pairs(self.n) {
            if self.get(i, j) < self.get(i - 1, j) {
                out.push((Inequality::NorthEast, i, j));
            }
            if self.get(i - 1, j) < self.get(i, j + 1) {
                out.push((Inequality::SouthEast, i, j));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        index_pairs(self.n)
            .all(|(i, j)| self.get(i, j) >= self.get(i - 1, j) && self.get(i - 1, j) >= self.get(i, j + 1))
    }

    /// `{(i, j) : a(i, j) = a(i-1, j)}`. Validity is not required.
    pub fn ne_equalities(&self) -> BTreeSet<(usize, usize)> {
        index_pairs(self.n)
            .filter(|&(i, j)| self.get(i, j) == self.get(i - 1, j))
            .collect()
    }

    /// `{(i, j) : a(i-1, j) = a(i, j+1)}`. Validity is not required.
    pub fn se_equalities(&self) -> BTreeSet<(usize, usize)> {
        index_pairs(self.n)
            .filter(|&(i, j)| self.get(i - 1, j) == self.get(i, j + 1))
            .collect()
    }

    /// [`Self::ne_equalities`] as a bitmask over [`pair_index`].
    pub fn ne_mask(&self) -> u128 {
        index_pairs(self.n)
            .filter(|&(i, j)| self.get(i, j) == self.get(i - 1, j))
            .fold(0, |m, (i, j)| m | 1 << pair_index(i, j))
    }

    /// [`Self::se_equalities`] as a bitmask over [`pair_index`].
    pub fn se_mask(&self) -> u128 {
        index_pairs(self.n)
            .filter(|&(i, j)| self.get(i - 1, j) == self.get(i, j + 1))
            .fold(0, |m, (i, j)| m | 1 << pair_index(i, j))
    }
}

impl GtPattern<i64> {
    /// The shape, i.e. the bottom row.
    pub fn shape(&self) -> Partition {
        Partition(self.row(self.n).to_vec())
    }

    /// `p_i = sum_j a(i, j) - sum_j a(i-1, j)`.
    pub fn weight(&self) -> Weight {
        let mut prev = 0;
        Weight(
            (1..=self.n)
                .map(|i| {
                    let s: i64 = self.row(i).iter().sum();
                    let p = s - prev;
                    prev = s;
                    p
                })
                .collect(),
        )
    }

    /// The highest-weight pattern, `a(i, j) = mu_j`.
    pub fn highest(mu: &Partition) -> Self {
        let n = mu.rank();
        let rows = (1..=n).map(|i| mu.parts()[..i].to_vec()).collect();
        Self::from_rows(rows).expect("well-formed rows")
    }

    /// The lowest-weight pattern, `a(i, j) = mu_{n-i+j}`.
    pub fn lowest(mu: &Partition) -> Self {
        let n = mu.rank();
        let rows = (1..=n).map(|i| mu.parts()[n - i..].to_vec()).collect();
        Self::from_rows(rows).expect("well-formed rows")
    }
}

impl<T: fmt::Display> fmt::Display for GtPattern<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            if i > 1 {
                write!(f, "/")?;
            }
            write_tuple(f, &self.entries[offset(i)..offset(i + 1)])?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for GtPattern<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GtPattern({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PatternRepr<T> {
    n: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Serialize + Copy + PartialOrd> Serialize for GtPattern<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PatternRepr {
            n: self.n,
            rows: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Deserialize<'de> + Copy + PartialOrd> Deserialize<'de> for GtPattern<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PatternRepr::<T>::deserialize(deserializer)?;
        if repr.rows.len() != repr.n {
            return Err(serde::de::Error::custom(format!(
                "n = {} but {} rows given",
                repr.n,
                repr.rows.len()
            )));
        }
        Self::from_rows(repr.rows).map_err(serde::de::Error::custom)
    }
}

/// `prod_{i<j} (mu_i - mu_j + j - i) / (j - i)`, the Weyl dimension formula.
pub fn dimension_oracle(mu: &Partition) -> Result<u128> {
    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let m = mu.parts();
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            let top = (m[i] - m[j]) as u128 + (j - i) as u128;
            num = num.checked_mul(top).ok_or(Error::Overflow("dimension"))?;
            den *= (j - i) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}

/// Every integral pattern with bottom row `mu`, in lexicographic order of
/// `row1 ‖ row2 ‖ ... ‖ row n`.
pub fn enumerate(mu: &Partition) -> Result<Vec<GtPattern>> {
    let n = mu.rank();
    if n > ENUMERATION_MAX_RANK {
        return Err(Error::RankTooLarge {
            n,
            max: ENUMERATION_MAX_RANK,
        });
    }
    let count = dimension_oracle(mu)?;
    if count > ENUMERATION_MAX_COUNT {
        return Err(Error::SizeGuard {
            what: "GT pattern set",
            count,
            limit: ENUMERATION_MAX_COUNT,
        });
    }

    fn fill(p: &mut GtPattern, i: usize, j: usize, out: &mut Vec<GtPattern>) {
        if i == 0 {
            out.push(p.clone());
            return;
        }
        if j > i {
            fill(p, i - 1, 1, out);
            return;
        }
        let (lo, hi) = (p.get(i + 1, j + 1), p.get(i + 1, j));
        for x in lo..=hi {
            p.set(i, j, x);
            fill(p, i, j + 1, out);
        }
    }

    let mut p = GtPattern::highest(mu);
    let mut out = Vec::with_capacity(count as usize);
    fill(&mut p, n - 1, 1, &mut out);
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(xs: &[i64]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    fn pat(rows: &[&[i64]]) -> GtPattern {
        GtPattern::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// The displayed example of shape (5,4,2,1,0).
    fn example_pattern() -> GtPattern {
        pat(&[&[3], &[3, 2], &[5, 3, 1], &[5, 4, 2, 0], &[5, 4, 2, 1, 0]])
    }

    pub(crate) fn sample_left() -> GtPattern {
        pat(&[&[1], &[2, 1], &[5, 2, 2], &[5, 3, 2, 0], &[6, 5, 3, 3, 0]])
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2, 0]).is_err());
        assert!(Partition::new(vec![1, -1]).is_err());
        assert!(Partition::new(vec![]).is_err());
        assert_eq!("2,1,0".parse::<Partition>().unwrap(), part(&[2, 1, 0]));
        assert!("1,2,0".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        // (0,0,0) (1,0,0) (1,1,0) (2,0,0)
        assert_eq!(Partition::all_up_to(3, 2).len(), 4);
    }

    #[test]
    fn validate_examples() {
        assert!(example_pattern().is_valid());
        assert!(GtPattern::highest(&part(&[0, 0, 0, 0])).is_valid());
        assert_eq!(
            sample_left().violations(),
            vec![(Inequality::SouthEast, 3, 2), (Inequality::SouthEast, 5, 3)]
        );
        assert!(GtPattern::<i64>::from_rows(vec![vec![1], vec![1]]).is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(example_pattern().weight(), Weight(vec![3, 2, 4, 2, 1]));
        let mu = part(&[3, 1, 0]);
        assert_eq!(GtPattern::highest(&mu).weight(), mu.as_weight());
        assert_eq!(GtPattern::lowest(&mu).weight(), Weight(vec![0, 1, 3]));
    }

    #[test]
    fn extreme_patterns() {
        let mu = part(&[1, 0, 0]);
        assert_eq!(GtPattern::highest(&mu), pat(&[&[1], &[1, 0], &[1, 0, 0]]));
        assert_eq!(GtPattern::lowest(&mu), pat(&[&[0], &[0, 0], &[1, 0, 0]]));
        assert!(GtPattern::highest(&mu).is_valid() && GtPattern::lowest(&mu).is_valid());
    }

    #[test]
    fn equality_sets() {
        let mu = part(&[4, 2, 1, 0]);
        let all: BTreeSet<_> = index_pairs(4).collect();
        assert_eq!(GtPattern::highest(&mu).ne_equalities(), all);
        assert_eq!(GtPattern::lowest(&mu).se_equalities(), all);
        let expected: BTreeSet<_> = [(2, 1), (3, 1), (4, 2), (5, 1), (5, 2), (5, 4)]
            .into_iter()
            .collect();
        assert_eq!(sample_left().se_equalities(), expected);
        let mask = sample_left().se_mask();
        assert_eq!(mask.count_ones(), 6);
        assert!(expected.iter().all(|&(i, j)| mask >> pair_index(i, j) & 1 == 1));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(&part(&[0, 0, 0])).unwrap().len(), 1);
        assert_eq!(enumerate(&part(&[1, 0, 0])).unwrap().len(), 3);
        assert_eq!(enumerate(&part(&[2, 1, 0])).unwrap().len(), 8);
        let ps = enumerate(&part(&[2, 1, 0])).unwrap();
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        assert!(ps.iter().all(|p| p.is_valid()));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension_oracle(&part(&[1, 0, 0])).unwrap(), 3);
        assert_eq!(dimension_oracle(&part(&[1, 1, 0])).unwrap(), 3);
        assert_eq!(dimension_oracle(&part(&[2, 1, 0])).unwrap(), 8);
    }

    #[test]
    fn pattern_json() {
        let p = pat(&[&[1], &[1, 0], &[1, 0, 0]]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":3,"rows":[[1],[1,0],[1,0,0]]}"#);
        assert_eq!(serde_json::from_str::<GtPattern>(&s).unwrap(), p);
        assert!(serde_json::from_str::<GtPattern>(r#"{"n":2,"rows":[[1],[1,0],[1,0,0]]}"#).is_err());
    }
}
