//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Every comparison is exact (tolerance zero); the wall-clock budgets below
//! are part of each criterion.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gtkk_core::charpoly::{demazure_character, schur};
use gtkk_core::crystal::{
    demazure_crystal, epsilon, lower, lower_oracle, opposite_demazure_crystal_of, phi, raise,
    raise_oracle, tensor_lower, tensor_raise, PairSpace, TensorConvention,
};
use gtkk_core::gt::enumerate;
use gtkk_core::kk::{cartan_component, decompose_in, kk_crystal, kk_crystal_in};
use gtkk_core::kogan::{bikogan_points_in, bikogan_union_in, dual_kogan_points, kogan_points, reduced_bifaces};
use gtkk_core::reading::{associated_permutation, f_word, i_word, pair_word, PairReading};
use gtkk_core::perm::{bruhat_max, bruhat_min};
use gtkk_core::{CharPoly, GtPattern, Partition, Permutation, Weight, Word};

/// Exact comparisons only.
const TOLERANCE: i64 = 0;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(xs: &[i64]) -> Partition {
    Partition::new(xs.to_vec()).unwrap()
}

fn word(n: usize, letters: &[usize]) -> Word {
    Word::new(n, letters.to_vec()).unwrap()
}

fn pat(rows: &[&[i64]]) -> GtPattern {
    GtPattern::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn shapes(ns: std::ops::RangeInclusive<usize>, max_size: i64) -> Vec<Partition> {
    ns.flat_map(|n| Partition::all_up_to(n, max_size)).collect()
}

fn sample_pair() -> (GtPattern, GtPattern) {
    (
        pat(&[&[1], &[2, 1], &[5, 2, 2], &[5, 3, 2, 0], &[6, 5, 3, 3, 0]]),
        pat(&[&[2], &[5, 4], &[6, 4, 2], &[6, 4, 4, 1], &[6, 5, 4, 2, 0]]),
    )
}

fn c1_demazure_product() -> Outcome {
    let got = word(4, &[1, 3, 1, 2, 2]).demazure_product();
    let want = word(4, &[3, 1, 2]).evaluate();
    ensure(got == want, || format!("got {got}, want {want}"))?;
    Ok(format!("*(s1 s3 s1 s2 s2) = {got}"))
}

fn c2_sample_pair() -> Outcome {
    let (p, q) = sample_pair();
    let r = PairReading::new(&p, &q).map_err(|e| e.to_string())?;
    ensure(r.f_word == word(5, &[1, 2, 4, 2, 1, 1]), || format!("f_word {}", r.f_word))?;
    ensure(r.i_word == word(5, &[1, 3, 2, 4, 2]), || format!("i_word {}", r.i_word))?;
    ensure(r.pair_word == word(5, &[1, 2, 4, 2, 1, 1, 1, 3, 2, 4, 2]), || {
        format!("pair_word {}", r.pair_word)
    })?;
    let star = word(5, &[1, 4, 2, 1, 3, 4, 2]).evaluate();
    ensure(r.demazure_product == star, || format!("demazure product {}", r.demazure_product))?;
    let want = word(5, &[2, 1, 3]).evaluate();
    ensure(r.p == want, || {
        format!(
            "words and demazure product match, but p = *(w)·w0 = {} ≠ s2 s1 s3 = {want} \
             (s2 s1 s3 equals w0·*(w) = {})",
            r.p,
            r.demazure_product.longest_times()
        )
    })?;
    Ok("words, demazure product and p reproduced".into())
}

fn c3_weight() -> Outcome {
    let p = pat(&[&[3], &[3, 2], &[5, 3, 1], &[5, 4, 2, 0], &[5, 4, 2, 1, 0]]);
    ensure(p.is_valid(), || "pattern invalid".into())?;
    let w = p.weight();
    ensure(w == Weight(vec![3, 2, 4, 2, 1]), || format!("weight {w}"))?;
    Ok(format!("weight {w}"))
}

fn c4_crystal() -> Outcome {
    let mut cases = 0u64;
    for mu in shapes(2..=4, 6) {
        let n = mu.rank();
        for p in enumerate(&mu).unwrap() {
            for i in 1..n {
                cases += 1;
                let up = raise(&p, i).unwrap();
                let down = lower(&p, i).unwrap();
                let here = || format!("P = {p}, i = {i}");
                ensure(up == raise_oracle(&p, i).unwrap(), || format!("e_i vs oracle at {}", here()))?;
                ensure(down == lower_oracle(&p, i).unwrap(), || format!("f_i vs oracle at {}", here()))?;
                let (e, f) = (epsilon(&p, i).unwrap() as i64, phi(&p, i).unwrap() as i64);
                ensure(f - e == p.weight().pairing(i), || format!("phi - eps at {}", here()))?;
                let alpha = Weight::simple_root(n, i);
                if let Some(q) = &up {
                    ensure(
                        q.is_valid()
                            && q.weight() == p.weight().add(&alpha)
                            && epsilon(q, i).unwrap() as i64 == e - 1
                            && phi(q, i).unwrap() as i64 == f + 1
                            && lower(q, i).unwrap().as_ref() == Some(&p),
                        || format!("raise axioms at {}", here()),
                    )?;
                }
                if let Some(q) = &down {
                    ensure(
                        q.is_valid()
                            && q.weight() == p.weight().sub(&alpha)
                            && epsilon(q, i).unwrap() as i64 == e + 1
                            && phi(q, i).unwrap() as i64 == f - 1
                            && raise(q, i).unwrap().as_ref() == Some(&p),
                        || format!("lower axioms at {}", here()),
                    )?;
                }
            }
        }
    }
    Ok(format!("{cases} (pattern, i) cases"))
}

fn c5_demazure_bridge() -> Outcome {
    let mut cases = 0u64;
    for mu in shapes(2..=4, 4) {
        let n = mu.rank();
        for w in Permutation::all(n).unwrap() {
            let words = w.reduced_words();
            let crystal = demazure_crystal(&mu, &words[0]).unwrap();
            let character = demazure_character(&mu, &words[0]).unwrap();
            ensure(CharPoly::from_patterns(n, crystal.iter()) == character, || {
                format!("mu = {mu}, w = {w}")
            })?;
            for other in &words[1..] {
                cases += 1;
                ensure(demazure_crystal(&mu, other).unwrap() == crystal, || {
                    format!("crystal depends on word {other} for mu = {mu}")
                })?;
                ensure(demazure_character(&mu, other).unwrap() == character, || {
                    format!("character depends on word {other} for mu = {mu}")
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (shape, reduced word) cases"))
}

fn c6_kogan_faces() -> Outcome {
    let mut cases = 0u64;
    for mu in shapes(2..=4, 4) {
        let n = mu.rank();
        let w0 = Permutation::longest(n).unwrap();
        for w in Permutation::all(n).unwrap() {
            cases += 1;
            let left = w0.compose(&w).unwrap();
            ensure(
                kogan_points(&mu, &left).unwrap() == demazure_crystal(&mu, &w.reduced_word()).unwrap(),
                || format!("Kogan side, mu = {mu}, w = {w}"),
            )?;
            ensure(
                dual_kogan_points(&mu, &left.times_longest()).unwrap()
                    == opposite_demazure_crystal_of(&mu, &w).unwrap(),
                || format!("dual Kogan side, mu = {mu}, w = {w}"),
            )?;
        }
    }
    Ok(format!("{cases} (shape, w) cases, both sides"))
}

/// All pair spaces used by criteria 7 to 10.
fn rank_three_spaces() -> Vec<PairSpace> {
    let sh = Partition::all_up_to(3, 3);
    sh.iter()
        .flat_map(|l| sh.iter().map(move |m| PairSpace::new(l, m).unwrap()))
        .collect()
}

fn c7_closure(spaces: &[PairSpace]) -> Outcome {
    let group = Permutation::all(3).unwrap();
    let mut cases = 0u64;
    for space in spaces {
        let comps = space.components(TensorConvention::Kashiwara).map_err(|e| e.to_string())?;
        for w in &group {
            cases += 1;
            let kk = kk_crystal_in(space, w).unwrap();
            for t in &kk.members {
                for i in 1..3 {
                    for next in [tensor_raise(t, i).unwrap(), tensor_lower(t, i).unwrap()]
                        .into_iter()
                        .flatten()
                    {
                        ensure(kk.members.contains(&next), || format!("w = {w}: {t} leaves via i = {i}"))?;
                    }
                }
            }
            for c in &comps {
                let inside = c.members.iter().filter(|t| kk.members.contains(t)).count();
                ensure(inside == 0 || inside == c.len(), || {
                    format!("w = {w}: component of {} straddles", c.highest)
                })?;
            }
        }
        for c in &comps {
            let p0 = associated_permutation(&c.highest.left, &c.highest.right).unwrap();
            for t in &c.members {
                ensure(associated_permutation(&t.left, &t.right).unwrap() == p0, || {
                    format!("p not constant on component of {}", c.highest)
                })?;
            }
        }
    }
    Ok(format!("{} shape pairs, {cases} (shapes, w) cases", spaces.len()))
}

fn c8_endpoints(spaces: &[PairSpace]) -> Outcome {
    let e = Permutation::identity(3).unwrap();
    let w0 = Permutation::longest(3).unwrap();
    for space in spaces {
        let (l, m) = (space.lambda(), space.mu());
        let low = kk_crystal_in(space, &e).unwrap().character();
        ensure(low == schur(&l.checked_add(m).unwrap()).unwrap(), || format!("identity, {l} {m}"))?;
        let high = kk_crystal_in(space, &w0).unwrap().character();
        ensure(high == schur(l).unwrap().mul(&schur(m).unwrap()).unwrap(), || {
            format!("w0, {l} {m}")
        })?;
    }
    Ok(format!("{} shape pairs", spaces.len()))
}

fn c9_filtration(spaces: &[PairSpace]) -> Outcome {
    let group = Permutation::all(3).unwrap();
    let mut cases = 0u64;
    for space in spaces {
        let sets: Vec<BTreeSet<_>> = group.iter().map(|w| kk_crystal_in(space, w).unwrap().members).collect();
        let decs: Vec<BTreeMap<Weight, usize>> = group
            .iter()
            .map(|w| decompose_in(space, w, TensorConvention::Kashiwara))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for (a, u) in group.iter().enumerate() {
            for (b, v) in group.iter().enumerate() {
                if u.bruhat_leq(v).unwrap() {
                    cases += 1;
                    ensure(sets[a].is_subset(&sets[b]), || format!("members {u} ⊄ {v}"))?;
                    ensure(
                        decs[a].iter().all(|(h, m)| decs[b].get(h).copied().unwrap_or(0) >= *m),
                        || format!("multiplicities drop from {u} to {v}"),
                    )?;
                }
            }
        }
    }
    Ok(format!("{cases} comparable (u, v) cases"))
}

fn c10_bikogan(spaces: &[PairSpace]) -> Outcome {
    let group = Permutation::all(3).unwrap();
    let faces: Vec<_> = group.iter().map(|v| reduced_bifaces(v).unwrap()).collect();
    let mut points = 0u64;
    for space in spaces {
        for w in &group {
            let union = bikogan_union_in(space, &w.times_longest()).unwrap();
            let kk = kk_crystal_in(space, w).unwrap().members;
            ensure(union == kk, || {
                format!(
                    "{} ⊗ {}, w = {w}: union {} vs KK {}",
                    space.lambda(),
                    space.mu(),
                    union.len(),
                    kk.len()
                )
            })?;
        }
        for (v, fs) in group.iter().zip(&faces) {
            for b in fs {
                for t in bikogan_points_in(space, b).unwrap() {
                    points += 1;
                    let star = pair_word(&t.left, &t.right).unwrap().demazure_product();
                    ensure(v.bruhat_leq(&star).unwrap(), || format!("face {b:?} at {t}"))?;
                }
            }
        }
    }
    Ok(format!("unions equal for all w; face bound on {points} face points"))
}

fn c11_reading_directions() -> Outcome {
    let mut cases = 0u64;
    for mu in shapes(2..=3, 6) {
        let n = mu.rank();
        let group = Permutation::all(n).unwrap();
        let w0 = Permutation::longest(n).unwrap();
        let dem: Vec<_> = group.iter().map(|w| demazure_crystal(&mu, &w.reduced_word()).unwrap()).collect();
        let opp: Vec<_> = group.iter().map(|w| opposite_demazure_crystal_of(&mu, w).unwrap()).collect();
        for p in enumerate(&mu).unwrap() {
            cases += 1;
            let lo = bruhat_min(group.iter().zip(&dem).filter(|(_, s)| s.contains(&p)).map(|(w, _)| w));
            let hi = bruhat_max(group.iter().zip(&opp).filter(|(_, s)| s.contains(&p)).map(|(w, _)| w));
            let from_i = i_word(&p).demazure_product().compose(&w0).unwrap();
            let from_f = f_word(&p).demazure_product().inverse();
            ensure(lo == Some(from_i.clone()), || format!("P = {p}: min {lo:?} vs {from_i}"))?;
            ensure(hi == Some(from_f.clone()), || format!("P = {p}: max {hi:?} vs {from_f}"))?;
        }
    }
    Ok(format!("{cases} patterns"))
}

fn c12_counts() -> Outcome {
    let b = part(&[1, 0, 0]);
    // oracle values, computed without the library
    let pats = common::patterns(&[1, 0, 0]);
    let mut oracle = Vec::new();
    let mut ours = Vec::new();
    for letters in [&[][..], &[1], &[2], &[1, 2, 1]] {
        let target = common::evaluate(3, letters);
        oracle.push(
            pats.iter()
                .flat_map(|p| pats.iter().map(move |q| (p, q)))
                .filter(|(p, q)| common::bruhat_leq(&common::p_of(p, q), &target))
                .count(),
        );
        ours.push(kk_crystal(&b, &b, &word(3, letters).evaluate()).unwrap().len());
    }
    ensure(oracle == [6, 9, 6, 9], || format!("oracle counts {oracle:?}"))?;
    ensure(ours == oracle, || format!("library counts {ours:?}"))?;
    let cart = cartan_component(&b, &b).unwrap();
    ensure(cart.len() == 6, || format!("cartan component has {} pairs", cart.len()))?;
    let mut c = CharPoly::zero(3);
    for t in &cart {
        c.add_term(t.weight(), 1);
    }
    ensure(c == schur(&part(&[2, 0, 0])).unwrap(), || format!("cartan character {c}"))?;
    Ok(format!("counts {ours:?}, cartan component 6 pairs"))
}

fn main() -> ExitCode {
    assert_eq!(TOLERANCE, 0);
    let spaces = rank_three_spaces();
    let criteria: Vec<Criterion> = vec![
        ("demazure product example", Duration::from_millis(1), Box::new(c1_demazure_product)),
        ("sample pair words and permutations", Duration::from_secs(1), Box::new(c2_sample_pair)),
        ("pattern weight example", Duration::from_secs(1), Box::new(c3_weight)),
        ("crystal rule vs tableau oracle, axioms", Duration::from_secs(30), Box::new(c4_crystal)),
        ("demazure crystal vs demazure character", Duration::from_secs(60), Box::new(c5_demazure_bridge)),
        ("kogan and dual kogan faces", Duration::from_secs(60), Box::new(c6_kogan_faces)),
        ("kk closure and component purity", Duration::from_secs(60), Box::new(|| c7_closure(&spaces))),
        ("kk character endpoints", Duration::from_secs(60), Box::new(|| c8_endpoints(&spaces))),
        ("kk filtration", Duration::from_secs(60), Box::new(|| c9_filtration(&spaces))),
        ("bikogan unions and face bound", Duration::from_secs(180), Box::new(|| c10_bikogan(&spaces))),
        ("reading words and demazure directions", Duration::from_secs(60), Box::new(c11_reading_directions)),
        ("box tensor box counts", Duration::from_secs(10), Box::new(c12_counts)),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *budget => Err(format!("{msg}; took {took:?} over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS [{:>2}] {name} ({took:.2?}): {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{:>2}] {name} ({took:.2?}): {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
