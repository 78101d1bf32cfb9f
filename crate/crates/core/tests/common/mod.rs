//! Brute-force reference implementations on plain vectors.
//!
//! Permutations are 1-based one-line vectors, patterns are lists of rows
//! (row `i` has `i` entries). Nothing here calls into the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Perm = Vec<usize>;
pub type Rows = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Perm {
    (1..=n).collect()
}

pub fn longest(n: usize) -> Perm {
    (1..=n).rev().collect()
}

/// `u ∘ v`: apply `v`, then `u`.
pub fn compose(u: &Perm, v: &Perm) -> Perm {
    v.iter().map(|&k| u[k - 1]).collect()
}

pub fn reflection(n: usize, i: usize) -> Perm {
    let mut p = identity(n);
    p.swap(i - 1, i);
    p
}

pub fn evaluate(n: usize, word: &[usize]) -> Perm {
    word.iter()
        .fold(identity(n), |acc, &i| compose(&acc, &reflection(n, i)))
}

pub fn inversions(p: &Perm) -> usize {
    let n = p.len();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| p[a] > p[b])
        .count()
}

/// A reduced word by repeatedly stripping a right descent.
pub fn reduced_word(p: &Perm) -> Vec<usize> {
    let mut p = p.clone();
    let mut rev = Vec::new();
    while let Some(i) = (1..p.len()).find(|&i| p[i - 1] > p[i]) {
        p.swap(i - 1, i);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// Products of all subwords.
pub fn subword_products(n: usize, word: &[usize]) -> BTreeSet<Perm> {
    (0u32..1 << word.len())
        .map(|mask| {
            let sub: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &l)| l)
                .collect();
            evaluate(n, &sub)
        })
        .collect()
}

/// `u <= v` iff `u` is a subword product of a reduced word of `v`.
pub fn bruhat_leq(u: &Perm, v: &Perm) -> bool {
    subword_products(v.len(), &reduced_word(v)).contains(u)
}

/// The unique maximal subword product, found as the longest one and checked
/// to dominate every other.
pub fn demazure_product(n: usize, word: &[usize]) -> Perm {
    let all = subword_products(n, word);
    let top = all.iter().max_by_key(|p| inversions(p)).unwrap().clone();
    let below = subword_products(n, &reduced_word(&top));
    assert!(all.iter().all(|p| below.contains(p)), "no unique maximum");
    top
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn go(cur: &mut Perm, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k + 1);
                go(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All patterns with bottom row `mu`, built top-down by checking every
/// candidate row against the one below it.
pub fn patterns(mu: &[i64]) -> Vec<Rows> {
    let n = mu.len();
    let mut out = Vec::new();
    let mut rows: Rows = vec![Vec::new(); n];
    rows[n - 1] = mu.to_vec();
    fn fill(k: usize, rows: &mut Rows, out: &mut Vec<Rows>) {
        if k == 0 {
            out.push(rows.clone());
            return;
        }
        // rows[k-1] has k entries and interlaces rows[k]
        let below = rows[k].clone();
        let lo = *below.iter().min().unwrap();
        let hi = *below.iter().max().unwrap();
        let mut cand = vec![lo; k];
        loop {
            let ok = (0..k).all(|j| below[j] >= cand[j] && cand[j] >= below[j + 1]);
            if ok {
                rows[k - 1] = cand.clone();
                fill(k - 1, rows, out);
            }
            // odometer over [lo, hi]^k
            let mut pos = 0;
            while pos < k && cand[pos] == hi {
                cand[pos] = lo;
                pos += 1;
            }
            if pos == k {
                break;
            }
            cand[pos] += 1;
        }
    }
    fill(n - 1, &mut rows, &mut out);
    out
}

/// `a(i, j)`, 1-based.
fn a(rows: &Rows, i: usize, j: usize) -> i64 {
    rows[i - 1][j - 1]
}

pub fn weight(rows: &Rows) -> Vec<i64> {
    let sum = |i: usize| -> i64 { if i == 0 { 0 } else { rows[i - 1].iter().sum() } };
    (1..=rows.len()).map(|i| sum(i) - sum(i - 1)).collect()
}

pub fn f_word(rows: &Rows) -> Vec<usize> {
    let n = rows.len();
    let mut w = Vec::new();
    for i in (2..=n).rev() {
        for j in 1..i {
            if a(rows, i - 1, j) == a(rows, i, j + 1) {
                w.push(j);
            }
        }
    }
    w
}

pub fn i_word(rows: &Rows) -> Vec<usize> {
    let n = rows.len();
    let mut w = Vec::new();
    for i in 2..=n {
        for j in 1..i {
            if a(rows, i, j) == a(rows, i - 1, j) {
                w.push(i - j);
            }
        }
    }
    w
}

/// `*(f(P) i(Q)) · w0` with the subword-maximum Demazure product.
pub fn p_of(p: &Rows, q: &Rows) -> Perm {
    let n = p.len();
    let mut word = f_word(p);
    word.extend(i_word(q));
    compose(&demazure_product(n, &word), &longest(n))
}

/// Weyl's formula `prod_{i<j} (mu_i - mu_j + j - i) / (j - i)`, as f64 then rounded.
pub fn weyl_dimension(mu: &[i64]) -> u64 {
    let n = mu.len();
    let mut d = 1f64;
    for i in 0..n {
        for j in i + 1..n {
            d *= (mu[i] - mu[j] + (j - i) as i64) as f64 / (j - i) as f64;
        }
    }
    d.round() as u64
}
