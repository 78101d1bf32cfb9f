//! Formal characters as finitely supported maps `Weight -> multiplicity`,
//! with Schur and Demazure characters computed by isobaric divided differences.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gt::{self, GtPattern, Partition, Weight};
use crate::perm::{Permutation, Word};

/// A Laurent polynomial `sum_beta c_beta x^beta` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CharPoly {
    n: usize,
    terms: BTreeMap<Weight, i64>,
}

impl CharPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(weight: Weight) -> Self {
        let mut c = Self::zero(weight.rank());
        c.terms.insert(weight, 1);
        c
    }

    /// `sum_{P in patterns} x^{wt(P)}`.
    pub fn from_patterns<'a>(n: usize, patterns: impl IntoIterator<Item = &'a GtPattern>) -> Self {
        let mut c = Self::zero(n);
        for p in patterns {
            c.add_term(p.weight(), 1);
        }
        c
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn coefficient(&self, weight: &Weight) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients, i.e. the dimension for a genuine character.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, weight: Weight, coeff: i64) {
        debug_assert_eq!(weight.rank(), self.n);
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(weight.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&weight);
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.add(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Applies the permutation `w` to the variables: `x_k -> x_{w(k)}`.
    pub fn permute_variables(&self, w: &Permutation) -> Result<Self> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch(self.n, w.rank()));
        }
        let mut out = Self::zero(self.n);
        for (beta, &c) in &self.terms {
            let mut image = vec![0; self.n];
            for k in 1..=self.n {
                image[w.image(k) - 1] = beta.0[k - 1];
            }
            out.add_term(Weight(image), c);
        }
        Ok(out)
    }
}

/// `pi_i f = (x_i f - x_{i+1} s_i(f)) / (x_i - x_{i+1})`.
///
/// The numerator is divided exactly: monomials are grouped by every exponent
/// except the `(i, i+1)` pair and by total degree `d` in that pair; within a
/// group the quotient coefficients satisfy `c_e = q_{e-1} - q_e` along the
/// exponent `e` of `x_i`.
pub fn demazure_operator(i: usize, f: &CharPoly) -> Result<CharPoly> {
    let n = f.rank();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let (a, b) = (i - 1, i);

    // numerator, grouped: key = weight with the (a, b) slots zeroed plus the degree
    let mut groups: BTreeMap<(Weight, i64), BTreeMap<i64, i64>> = BTreeMap::new();
    for (beta, &c) in f.terms() {
        let mut rest = beta.clone();
        let (ea, eb) = (beta.0[a], beta.0[b]);
        rest.0[a] = 0;
        rest.0[b] = 0;
        let d = ea + eb + 1;
        // x_i * x^beta
        *groups.entry((rest.clone(), d)).or_default().entry(ea + 1).or_insert(0) += c;
        // - x_{i+1} * s_i(x^beta) = - x_i^{eb} x_{i+1}^{ea + 1}
        *groups.entry((rest, d)).or_default().entry(eb).or_insert(0) -= c;
    }

    let mut out = CharPoly::zero(n);
    for ((rest, d), coeffs) in groups {
        let coeffs: BTreeMap<i64, i64> = coeffs.into_iter().filter(|&(_, c)| c != 0).collect();
        let (Some(&lo), Some(&hi)) = (coeffs.keys().next(), coeffs.keys().next_back()) else {
            continue;
        };
        let mut q_prev = 0;
        for e in lo..=hi {
            let q = q_prev - coeffs.get(&e).copied().unwrap_or(0);
            if e == hi {
                if q != 0 {
                    return Err(Error::DivisionRemainder);
                }
                break;
            }
            // quotient monomial x_i^e x_{i+1}^{d-1-e}
            let mut beta = rest.clone();
            beta.0[a] = e;
            beta.0[b] = d - 1 - e;
            out.add_term(beta, q);
            q_prev = q;
        }
    }
    Ok(out)
}

/// `pi_{i1} pi_{i2} ... pi_{ik} (x^mu)` for a reduced word `[i1, ..., ik]`.
pub fn demazure_character(mu: &Partition, word: &Word) -> Result<CharPoly> {
    if word.rank() != mu.rank() {
        return Err(Error::RankMismatch(mu.rank(), word.rank()));
    }
    if !word.is_reduced() {
        return Err(Error::NotReduced(word.letters().to_vec()));
    }
    let mut f = CharPoly::monomial(mu.as_weight());
    for &i in word.letters().iter().rev() {
        f = demazure_operator(i, &f)?;
    }
    Ok(f)
}

/// The Schur polynomial as the weight generating function of `GTZ(mu)`.
pub fn schur(mu: &Partition) -> Result<CharPoly> {
    Ok(CharPoly::from_patterns(mu.rank(), &gt::enumerate(mu)?))
}

/// The Schur polynomial via the Demazure operator chain for a reduced word of `w0`.
pub fn schur_via_demazure(mu: &Partition) -> Result<CharPoly> {
    let w0 = Permutation::longest(mu.rank())?;
    demazure_character(mu, &w0.reduced_word())
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "x^{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    weight: Vec<i64>,
    mult: i64,
}

/// Serialized as a list of `{"weight": [...], "mult": k}` sorted by weight.
impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(w, &c)| TermRepr {
            weight: w.0.clone(),
            mult: c,
        }))
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let n = terms.first().map_or(0, |t| t.weight.len());
        let mut out = CharPoly::zero(n);
        for t in terms {
            if t.weight.len() != n {
                return Err(serde::de::Error::custom("weights of unequal length"));
            }
            out.add_term(Weight(t.weight), t.mult);
        }
        Ok(out)
    }
}
