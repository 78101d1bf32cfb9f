//! Exhaustive cross-checks at small rank, reported as JSON.
//!
//! Shapes range over all partitions with `n` parts of size at most
//! `max_weight`; Weyl group elements over all of `S_n`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use serde_json::{json, Value};

use crate::charpoly::{demazure_character, schur, CharPoly};
use crate::crystal::{
    self, demazure_crystal_of, opposite_demazure_crystal_of, tensor_lower_with,
    tensor_raise_with, PairSpace, TensorConvention,
};
use crate::error::{Error, Result};
use crate::gt::{self, GtPattern, Partition, Weight};
use crate::kk::{decompose_in, member_ids};
use crate::kogan::{self, bikogan_union_in, bikogan_points_in, reduced_bifaces};
use crate::perm::{bruhat_max, bruhat_min, kk_direction_formula, Permutation};
use crate::reading::{associated_permutation, f_word, i_word, pair_word};

/// Largest rank accepted by [`run_verify`].
pub const VERIFY_MAX_RANK: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub max_weight: i64,
    pub convention: TensorConvention,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

struct Check {
    name: &'static str,
    cases: u64,
    counterexample: Option<Value>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            counterexample: None,
        }
    }

    fn case(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            passed: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn pat(p: &GtPattern) -> Value {
    json!({ "n": p.size(), "rows": p.rows() })
}

fn perm(w: &Permutation) -> Value {
    json!(w.one_line())
}

/// Data per shape shared by several checks.
struct ShapeData {
    patterns: Vec<GtPattern>,
    demazure: Vec<BTreeSet<GtPattern>>,
    opposite: Vec<BTreeSet<GtPattern>>,
    /// `min {w : P in D(mu, w)}` and `max {w : P in D(mu, w)^op}`.
    directions: HashMap<GtPattern, (Option<Permutation>, Option<Permutation>)>,
}

impl ShapeData {
    fn new(mu: &Partition, group: &[Permutation]) -> Result<Self> {
        let patterns = gt::enumerate(mu)?;
        let demazure = group
            .iter()
            .map(|w| demazure_crystal_of(mu, w))
            .collect::<Result<Vec<_>>>()?;
        let opposite = group
            .iter()
            .map(|w| opposite_demazure_crystal_of(mu, w))
            .collect::<Result<Vec<_>>>()?;
        let directions = patterns
            .iter()
            .map(|p| {
                let inside = |sets: &[BTreeSet<GtPattern>]| -> Vec<&Permutation> {
                    group.iter().zip(sets).filter(|(_, s)| s.contains(p)).map(|(w, _)| w).collect()
                };
                let lo = bruhat_min(inside(&demazure));
                let hi = bruhat_max(inside(&opposite));
                (p.clone(), (lo, hi))
            })
            .collect();
        Ok(Self {
            patterns,
            demazure,
            opposite,
            directions,
        })
    }
}

/// Runs every check under the Kashiwara tensor convention.
pub fn run_verify(n: usize, max_weight: i64) -> Result<VerifyReport> {
    run_verify_with(n, max_weight, TensorConvention::Kashiwara)
}

/// Runs every check with the tensor operators taken in the given convention.
/// Checks that only involve single patterns are unaffected by `conv`.
pub fn run_verify_with(n: usize, max_weight: i64, conv: TensorConvention) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > VERIFY_MAX_RANK {
        return Err(Error::RankTooLarge {
            n,
            max: VERIFY_MAX_RANK,
        });
    }
    let group = Permutation::all(n)?;
    let w0 = Permutation::longest(n)?;
    let shapes = Partition::all_up_to(n, max_weight);
    let data: Vec<ShapeData> = shapes
        .iter()
        .map(|mu| ShapeData::new(mu, &group))
        .collect::<Result<_>>()?;

    let mut checks = vec![
        check_crystal(&shapes, &data)?,
        check_demazure_bridge(&shapes, &data, &group)?,
    ];
    checks.extend(check_kogan_faces(&shapes, &data, &group, &w0)?);
    checks.push(check_reading_directions(&data, &w0)?);

    let mut closure = Check::new("kk_closure");
    let mut purity = Check::new("kk_component_purity");
    let mut endpoints = Check::new("kk_character_endpoints");
    let mut filtration = Check::new("kk_filtration");
    let mut bikogan = Check::new("bikogan_union");
    let mut bikogan_bound = Check::new("bikogan_face_bound");
    let mut p_formula = Check::new("p_direction_formula");

    // reduced BiFaces depend only on n
    let bifaces = group
        .iter()
        .map(reduced_bifaces)
        .collect::<Result<Vec<_>>>()?;

    for (a, lambda) in shapes.iter().enumerate() {
        for (b, mu) in shapes.iter().enumerate() {
            let space = PairSpace::new(lambda, mu)?;
            let shape_json = || json!({ "lambda": lambda.parts(), "mu": mu.parts() });

            for t in space.elements() {
                // maximal final direction of P, minimal initial direction of Q
                let tau_hat = &data[a].directions[&t.left].1;
                let phi_tilde = &data[b].directions[&t.right].0;
                let expected = associated_permutation(&t.left, &t.right)?;
                let got = match (tau_hat, phi_tilde) {
                    (Some(x), Some(y)) => Some(kk_direction_formula(x, y)?),
                    _ => None,
                };
                p_formula.case(got.as_ref() == Some(&expected), || {
                    json!({
                        "left": pat(&t.left), "right": pat(&t.right),
                        "p": perm(&expected), "formula": got.as_ref().map(perm),
                    })
                });
            }

            let members: Vec<BTreeSet<usize>> = group
                .iter()
                .map(|w| member_ids(&space, w).map(|v| v.into_iter().collect()))
                .collect::<Result<_>>()?;
            let decomps: Vec<std::result::Result<BTreeMap<Weight, usize>, String>> = group
                .iter()
                .map(|w| decompose_in(&space, w, conv).map_err(|e| e.to_string()))
                .collect();

            for (wi, w) in group.iter().enumerate() {
                let inside = &members[wi];
                // closure under the tensor operators
                let mut escape = None;
                'pairs: for &k in inside {
                    let t = space.element(k);
                    for i in 1..n {
                        for next in [tensor_raise_with(conv, &t, i)?, tensor_lower_with(conv, &t, i)?]
                            .into_iter()
                            .flatten()
                        {
                            if !inside.contains(&space.id_of(&next).expect("same shapes")) {
                                escape = Some((t.clone(), i, next));
                                break 'pairs;
                            }
                        }
                    }
                }
                closure.case(escape.is_none(), || {
                    let (t, i, next) = escape.clone().unwrap();
                    json!({
                        "shapes": shape_json(), "w": perm(w), "i": i,
                        "inside": [pat(&t.left), pat(&t.right)],
                        "outside": [pat(&next.left), pat(&next.right)],
                    })
                });

                purity.case(decomps[wi].is_ok(), || {
                    json!({
                        "shapes": shape_json(), "w": perm(w),
                        "error": decomps[wi].as_ref().err(),
                    })
                });

                for (vi, v) in group.iter().enumerate() {
                    if w.bruhat_leq(v)? {
                        let nested = inside.is_subset(&members[vi]);
                        let monotone = match (&decomps[wi], &decomps[vi]) {
                            (Ok(x), Ok(y)) => x.iter().all(|(h, m)| y.get(h).copied().unwrap_or(0) >= *m),
                            _ => false,
                        };
                        filtration.case(nested && monotone, || {
                            json!({
                                "shapes": shape_json(), "w": perm(w), "w_prime": perm(v),
                                "members_nested": nested, "multiplicities_monotone": monotone,
                            })
                        });
                    }
                }

                // BiKogan union at w w0 against the KK set
                let union: BTreeSet<usize> = bikogan_union_in(&space, &w.times_longest())?
                    .iter()
                    .map(|t| space.id_of(t).expect("same shapes"))
                    .collect();
                bikogan.case(&union == inside, || {
                    let diff: Vec<Value> = union
                        .symmetric_difference(inside)
                        .take(3)
                        .map(|&k| {
                            let t = space.element(k);
                            json!([pat(&t.left), pat(&t.right)])
                        })
                        .collect();
                    json!({ "shapes": shape_json(), "w": perm(w), "differing_pairs": diff })
                });
            }

            for (vi, faces) in bifaces.iter().enumerate() {
                let v = &group[vi];
                for face in faces {
                    for t in bikogan_points_in(&space, face)? {
                        let star = pair_word(&t.left, &t.right)?.demazure_product();
                        let ok = v.bruhat_leq(&star)?;
                        bikogan_bound.case(ok, || {
                            json!({
                                "shapes": shape_json(), "face": face,
                                "pair": [pat(&t.left), pat(&t.right)], "demazure_product": perm(&star),
                            })
                        });
                    }
                }
            }

            let character = |ids: &BTreeSet<usize>| {
                let mut c = CharPoly::zero(n);
                for &k in ids {
                    c.add_term(space.element(k).weight(), 1);
                }
                c
            };
            // `Permutation::all` lists the identity first and w0 last
            let identity_char = character(&members[0]);
            let full_char = character(&members[group.len() - 1]);
            let sum = lambda.checked_add(mu)?;
            let ok_e = identity_char == schur(&sum)?;
            let ok_w0 = full_char == schur(lambda)?.mul(&schur(mu)?)?;
            endpoints.case(ok_e && ok_w0, || {
                json!({ "shapes": shape_json(), "identity_ok": ok_e, "longest_ok": ok_w0 })
            });
        }
    }

    checks.extend(
        [closure, purity, endpoints, filtration, bikogan, bikogan_bound, p_formula]
            .into_iter()
            .map(Check::finish),
    );
    Ok(VerifyReport {
        n,
        max_weight,
        convention: conv,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn check_crystal(shapes: &[Partition], data: &[ShapeData]) -> Result<CheckResult> {
    let mut c = Check::new("crystal_rule_and_axioms");
    for (mu, d) in shapes.iter().zip(data) {
        let n = mu.rank();
        for p in &d.patterns {
            for i in 1..n {
                let up = crystal::raise(p, i)?;
                let down = crystal::lower(p, i)?;
                let (eps, ph) = (crystal::epsilon(p, i)?, crystal::phi(p, i)?);
                let alpha = Weight::simple_root(n, i);
                let mut ok = up == crystal::raise_oracle(p, i)? && down == crystal::lower_oracle(p, i)?;
                ok &= eps == crystal::epsilon_by_walk(p, i)? && ph == crystal::phi_by_walk(p, i)?;
                ok &= ph as i64 - eps as i64 == p.weight().pairing(i);
                if let Some(q) = &up {
                    ok &= q.is_valid()
                        && q.weight() == p.weight().add(&alpha)
                        && crystal::epsilon(q, i)? + 1 == eps
                        && crystal::phi(q, i)? == ph + 1
                        && crystal::lower(q, i)?.as_ref() == Some(p);
                }
                if let Some(q) = &down {
                    ok &= q.is_valid()
                        && q.weight() == p.weight().sub(&alpha)
                        && crystal::epsilon(q, i)? == eps + 1
                        && crystal::phi(q, i)? + 1 == ph
                        && crystal::raise(q, i)?.as_ref() == Some(p);
                }
                c.case(ok, || json!({ "pattern": pat(p), "i": i }));
            }
        }
    }
    Ok(c.finish())
}

fn check_demazure_bridge(
    shapes: &[Partition],
    data: &[ShapeData],
    group: &[Permutation],
) -> Result<CheckResult> {
    let mut c = Check::new("demazure_character_bridge");
    for (mu, d) in shapes.iter().zip(data) {
        for (w, set) in group.iter().zip(&d.demazure) {
            let from_crystal = CharPoly::from_patterns(mu.rank(), set.iter());
            let from_operator = demazure_character(mu, &w.reduced_word())?;
            c.case(from_crystal == from_operator, || {
                json!({ "mu": mu.parts(), "w": perm(w) })
            });
        }
    }
    Ok(c.finish())
}

fn check_kogan_faces(
    shapes: &[Partition],
    data: &[ShapeData],
    group: &[Permutation],
    w0: &Permutation,
) -> Result<Vec<CheckResult>> {
    let mut kog = Check::new("kogan_faces_demazure");
    let mut dual = Check::new("dual_kogan_faces_opposite_demazure");
    for (mu, d) in shapes.iter().zip(data) {
        for (wi, w) in group.iter().enumerate() {
            let left = w0.compose(w)?;
            let ok = kogan::kogan_points(mu, &left)? == d.demazure[wi];
            kog.case(ok, || json!({ "mu": mu.parts(), "w": perm(w) }));
            let conj = left.times_longest();
            let ok = kogan::dual_kogan_points(mu, &conj)? == d.opposite[wi];
            dual.case(ok, || json!({ "mu": mu.parts(), "w": perm(w) }));
        }
    }
    Ok(vec![kog.finish(), dual.finish()])
}

fn check_reading_directions(data: &[ShapeData], w0: &Permutation) -> Result<CheckResult> {
    let mut c = Check::new("reading_word_directions");
    for d in data {
        for p in &d.patterns {
            let (lo, hi) = &d.directions[p];
            let from_i = i_word(p).demazure_product().compose(w0)?;
            let from_f = f_word(p).demazure_product().inverse();
            let ok = lo.as_ref() == Some(&from_i) && hi.as_ref() == Some(&from_f);
            c.case(ok, || {
                json!({
                    "pattern": pat(p),
                    "min_demazure": lo.as_ref().map(perm), "from_i_word": perm(&from_i),
                    "max_opposite": hi.as_ref().map(perm), "from_f_word": perm(&from_f),
                })
            });
        }
    }
    Ok(c.finish())
}
