//! Crystal operators computed through semistandard tableaux.
//!
//! Row `t` of the tableau of a pattern holds `a(k, t) - a(k-1, t)` copies of
//! `k`. Operators follow the signature rule on the reading word taken from the
//! bottom row to the top row, each row left to right: every `i+1` is an open
//! bracket, every `i` a close bracket, and after cancelling matched brackets
//! `e_i` turns the leftmost unmatched `i+1` into `i` while `f_i` turns the
//! rightmost unmatched `i` into `i+1`.
//!
//! This module shares no code with the row-difference rule in the parent
//! module and serves as its oracle.

use crate::error::{Error, Result};
use crate::gt::GtPattern;

/// Semistandard tableau rows (top row first) for an integral pattern with
/// nonnegative entries.
pub fn gt_to_tableau(p: &GtPattern) -> Vec<Vec<usize>> {
    let n = p.size();
    (1..=n)
        .map(|t| {
            let mut row = Vec::new();
            for k in t..=n {
                let above = if k > t { p.get(k - 1, t) } else { 0 };
                let count = p.get(k, t) - above;
                row.extend(std::iter::repeat_n(k, count.max(0) as usize));
            }
            row
        })
        .collect()
}

/// Inverse of [`gt_to_tableau`]: `a(k, t)` counts entries `<= k` in row `t`.
pub fn tableau_to_gt(rows: &[Vec<usize>]) -> GtPattern {
    let n = rows.len();
    let pattern_rows = (1..=n)
        .map(|k| {
            (1..=k)
                .map(|t| rows[t - 1].iter().filter(|&&x| x <= k).count() as i64)
                .collect()
        })
        .collect();
    GtPattern::from_rows(pattern_rows).expect("triangular by construction")
}

enum Op {
    Raise,
    Lower,
}

fn apply(p: &GtPattern, i: usize, op: Op) -> Result<Option<GtPattern>> {
    let n = p.size();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let mut rows = gt_to_tableau(p);

    let mut open: Vec<(usize, usize)> = Vec::new();
    let mut unmatched_close: Vec<(usize, usize)> = Vec::new();
    for t in (0..n).rev() {
        for (c, &x) in rows[t].iter().enumerate() {
            if x == i + 1 {
                open.push((t, c));
            } else if x == i && open.pop().is_none() {
                unmatched_close.push((t, c));
            }
        }
    }

    let target = match op {
        Op::Raise => open.first().map(|&pos| (pos, i)),
        Op::Lower => unmatched_close.last().map(|&pos| (pos, i + 1)),
    };
    Ok(target.map(|((t, c), value)| {
        rows[t][c] = value;
        rows[t].sort_unstable();
        tableau_to_gt(&rows)
    }))
}

/// `e_i` by the signature rule.
pub fn raise_oracle(p: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
    apply(p, i, Op::Raise)
}

/// `f_i` by the signature rule.
pub fn lower_oracle(p: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
    apply(p, i, Op::Lower)
}
