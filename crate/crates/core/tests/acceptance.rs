//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are expected to fail; the binary exits
//! nonzero when any other criterion fails or when a known failure passes.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{lat_idx, mask_of, Oracle};
use hyideal_core::verify::run_all;
use hyideal_core::{Caps, CorpusFile, PointSet, RingContext, SubSpace, Verdict};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const KNOWN_FAILURES: &[&str] = &["AC8"];
/// Wall-clock budget for the equivalence suite.
const AC1_BUDGET: Duration = Duration::from_secs(300);
/// Rings above this size get sampled `(I, J)` pairs in the six-condition suite.
const AC7_EXHAUSTIVE_MAX: usize = 16;
const AC7_SAMPLES: usize = 64;
const SEED: u64 = 0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn corpus() -> Vec<RingContext> {
    CorpusFile::default_corpus().contexts(&Caps::default()).unwrap()
}

/// Every subspace of the spectrum.
fn subspaces(c: &RingContext) -> Vec<SubSpace<'_>> {
    c.spec().subsets().map(|s| SubSpace::new(c, s).unwrap()).collect()
}

fn find(c: &RingContext, name: &str) -> usize {
    (0..c.lattice().len()).find(|&i| c.ideal_name(i) == name).expect("named ideal")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for c in corpus() {
        for y in subspaces(&c) {
            for i in 0..c.lattice().len() {
                let (p, s) = (y.hy_profile_idx(i), y.strong_profile_idx(i));
                n += 1;
                ensure(p.is_uniform() && p.all_hold() == y.is_hy_idx(i), || {
                    format!("{} {} {}: {}", c.name(), y.label(), c.ideal_name(i), p.summary())
                })?;
                ensure(s.is_uniform() && s.all_hold() == y.is_strong_idx(i), || {
                    format!("{} {} {}: {}", c.name(), y.label(), c.ideal_name(i), s.summary())
                })?;
            }
        }
    }
    let t = start.elapsed();
    ensure(t < AC1_BUDGET, || format!("took {t:?}"))?;
    Ok(format!("{n} (ring, Y, I) instances uniform in {:.2}s", t.as_secs_f64()))
}

fn ac2() -> Outcome {
    let mut n = 0;
    for c in corpus() {
        for y in subspaces(&c) {
            for i in 0..c.lattice().len() {
                n += 1;
                ensure(y.filter_idx(i).intersection(y.points()) == y.hull_idx(i), || {
                    format!("{} {} {}", c.name(), y.label(), c.ideal_name(i))
                })?;
            }
        }
    }
    let z12 = common::ctx("Z12");
    let y = SubSpace::whole(&z12);
    let meet = y.filter_idx(find(&z12, "(4)")).intersection(y.points());
    ensure(z12.points_label(meet) == "{(2)}", || format!("Z12 (4): {}", z12.points_label(meet)))?;
    Ok(format!("{n} instances; Z12 ⋂H_Y((4)) = {{(2)}}"))
}

fn ac3() -> Outcome {
    let mut n = 0;
    for c in corpus() {
        for y in subspaces(&c) {
            let maxl = c.maxl(y.points());
            let sorted = |mut v: Vec<usize>| {
                v.sort_unstable();
                v
            };
            ensure(sorted(y.maximal_fixed()) == sorted(c.prime_indices(maxl)), || {
                format!("{} {}", c.name(), y.label())
            })?;
            for s in y.points().subsets() {
                n += 1;
                let got = sorted(y.maximal_fixed_wrt(s).unwrap());
                ensure(got == sorted(c.prime_indices(maxl.intersection(s))), || {
                    format!("{} {} S={}", c.name(), y.label(), c.points_label(s))
                })?;
            }
        }
    }
    Ok(format!("{n} (Y, S) pairs"))
}

fn ac4() -> Outcome {
    let mut n = 0;
    for c in corpus() {
        for y in subspaces(&c).into_iter().filter(|y| !y.is_empty()) {
            n += 1;
            let r = y.verify_compactness_equivalents();
            ensure(r.verdict == Verdict::Pass, || format!("{} {}: {:?}", c.name(), y.label(), r.witness))?;
            for m in y.maxl_pshy_idx() {
                ensure(c.point_of(m).is_some_and(|p| y.points().contains(p)), || {
                    format!("{} {}: {}", c.name(), y.label(), c.ideal_name(m))
                })?;
            }
        }
    }
    Ok(format!("{n} nonempty subspaces"))
}

fn ac5() -> Outcome {
    let (mut hits, mut vacuous_rings) = (0, Vec::new());
    for c in corpus() {
        let zero = c.lattice().zero_index();
        let mut any = false;
        for s in c.min_primes().subsets().filter(|&s| c.kernel_idx(s) == zero) {
            any = true;
            hits += 1;
            let b = c.bourbaki(zero);
            ensure(b.is_subset(s), || format!("{} Y={}", c.name(), c.points_label(s)))?;
        }
        if !any {
            vacuous_rings.push(c.name().to_string());
        }
    }
    ensure(!vacuous_rings.is_empty(), || "no non-reduced ring gave a vacuous verdict".into())?;
    Ok(format!("{hits} qualifying subspaces; vacuous on {} rings: {}", vacuous_rings.len(), vacuous_rings.join(", ")))
}

fn ac6() -> Outcome {
    let mut n = 0;
    for c in corpus() {
        for y in subspaces(&c) {
            for s in y.points().subsets() {
                let sub = y.sub(s).unwrap();
                for i in 0..c.lattice().len() {
                    n += 1;
                    ensure(y.is_fixed_wrt(c.ideal(i), s).unwrap() == sub.is_fixed_idx(i), || {
                        format!("{} {} S={} {}", c.name(), y.label(), c.points_label(s), c.ideal_name(i))
                    })?;
                }
            }
        }
    }
    Ok(format!("{n} (I, S, Y) triples"))
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut exhaustive, mut sampled) = (0, 0);
    for c in corpus() {
        let len = c.lattice().len();
        let mut pairs: Vec<(usize, usize)> = (0..len).flat_map(|i| (0..len).map(move |j| (i, j))).collect();
        let big = c.ring().size() > AC7_EXHAUSTIVE_MAX;
        for y in subspaces(&c) {
            if big {
                pairs.shuffle(&mut rng);
            }
            let take = if big { AC7_SAMPLES.min(pairs.len()) } else { pairs.len() };
            for &(i, j) in &pairs[..take] {
                for strong in [false, true] {
                    let p = y.hyj_profile_idx(i, j, strong);
                    ensure(p.is_uniform() && p.all_hold() == y.hyj(i, j, strong), || {
                        format!(
                            "{} {} I={} J={} strong={strong}: {}",
                            c.name(),
                            y.label(),
                            c.ideal_name(i),
                            c.ideal_name(j),
                            p.summary()
                        )
                    })?;
                }
                if big {
                    sampled += 1;
                } else {
                    exhaustive += 1;
                }
            }
        }
    }
    let z12 = common::ctx("Z12");
    let y = SubSpace::whole(&z12);
    for strong in [false, true] {
        ensure(y.hyj_profile_idx(find(&z12, "(0)"), find(&z12, "(4)"), strong).all_hold(), || "Z12 (0),(4)".into())?;
        ensure(y.hyj_profile_idx(find(&z12, "(4)"), find(&z12, "(3)"), strong).none_hold(), || "Z12 (4),(3)".into())?;
    }
    Ok(format!("{exhaustive} exhaustive and {sampled} sampled (I, J, Y) triples"))
}

const AC8_IDS: &[&str] = &["P4.2", "P4.5", "P4.7", "P4.8", "T4.3", "T4.compare", "C4.semiprime"];

fn ac8() -> Outcome {
    let report = run_all(&CorpusFile::default_corpus(), SEED, Caps::default(), None).map_err(|e| e.to_string())?;
    for id in ["P4.8e.formula", "T4.3a.min-reading"] {
        ensure(report.notes.iter().any(|n| n.id == id), || format!("note {id} missing"))?;
    }
    let relevant: Vec<_> = report.results.iter().filter(|r| AC8_IDS.iter().any(|p| r.id.starts_with(p))).collect();
    let fails: Vec<_> = relevant.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    match fails.first() {
        None => Ok(format!("{} reports, no failures", relevant.len())),
        Some(first) => {
            let mut ids: Vec<&str> = fails.iter().map(|r| r.id.as_str()).collect();
            ids.dedup();
            Err(format!(
                "{} failing reports in {:?}; first {} {}: {}",
                fails.len(),
                ids,
                first.instance.ring,
                first.instance.y,
                first.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
            ))
        }
    }
}

fn ac9() -> Outcome {
    let all = corpus();
    let by_name = |n: &str| all.iter().find(|c| c.name() == n).expect("corpus ring");
    let all_relative = |y: &SubSpace, strong: bool| {
        let lat = y.ctx().lattice();
        (0..lat.whole_index()).all(|i| y.relative_decision(i, strong).is_relative())
    };
    let mut qualifying = 0;
    for name in ["F2xF2", "F2xF2xF2", "GF4", "Z2xZ3"] {
        let c = by_name(name);
        let zero = c.lattice().zero_index();
        let ys: Vec<PointSet> = c.spec().subsets().filter(|&s| c.kernel_idx(s) == zero).collect();
        ensure(!ys.is_empty(), || format!("{name}: no subspace with zero kernel"))?;
        for s in ys {
            qualifying += 1;
            let y = SubSpace::new(c, s).unwrap();
            ensure(c.ring().is_regular() && all_relative(&y, true) && all_relative(&y, false), || {
                format!("{name} Y={}", c.points_label(s))
            })?;
        }
    }
    for name in ["Z4", "Z4xZ9", "F2[x]/(x^2)"] {
        let c = by_name(name);
        let zero = c.lattice().zero_index();
        ensure(c.spec().subsets().all(|s| c.kernel_idx(s) != zero), || format!("{name} has a zero-kernel subspace"))?;
    }
    Ok(format!("{qualifying} regular instances all true; vacuity confirmed on 3 non-reduced rings"))
}

fn ac10() -> Outcome {
    let mut rings: Vec<RingContext> = corpus().into_iter().filter(|c| c.ring().size() <= 16).collect();
    rings.extend(common::pool_contexts());
    let mut n = 0;
    for c in &rings {
        let o = Oracle::new(c);
        let mut lib: Vec<u64> = c.lattice().ideals().iter().map(|i| mask_of(i.members())).collect();
        lib.sort_unstable();
        let mut want = o.ideals.clone();
        want.sort_unstable();
        ensure(lib == want, || format!("{}: ideal lattice", c.name()))?;
        for sel in 0..1u64 << o.primes.len() {
            let yo = o.y_of(sel);
            let y = SubSpace::new(c, o.points(c, &yo)).unwrap();
            for &m in &o.ideals {
                n += 1;
                let i = lat_idx(c, m);
                let closure = o.least_above(m, |k| o.is_hy(&yo, k)).map(|k| lat_idx(c, k));
                ensure(closure == Some(y.hy_closure_idx(i)), || {
                    format!("{} closure of {}", c.name(), c.ideal_name(i))
                })?;
                if c.ring().size() <= 12 {
                    ensure(y.is_strong_idx(i) == o.is_strong(&yo, m), || {
                        format!("{} {} strong {}", c.name(), y.label(), c.ideal_name(i))
                    })?;
                }
                for strong in [false, true] {
                    let d = y.relative_decision(i, strong);
                    ensure(d.routes_agree(), || format!("{} {} routes {}", c.name(), y.label(), c.ideal_name(i)))?;
                }
            }
        }
    }
    Ok(format!("{} rings, {n} (ring, Y, I) instances", rings.len()))
}

fn ac11() -> Outcome {
    let c = common::ctx("Z12");
    let y = SubSpace::whole(&c);
    let mut hy: Vec<String> = (0..c.lattice().len()).filter(|&i| y.is_hy_idx(i)).map(|i| c.ideal_name(i)).collect();
    hy.sort();
    ensure(hy == ["(2)", "(3)", "(6)", "R"], || format!("H_Y-ideals {hy:?}"))?;
    ensure(c.ideal_name(y.hy_closure_idx(find(&c, "(0)"))) == "(6)", || "I_H((0))".into())?;
    ensure(c.ideal_name(y.strong_closure_idx(find(&c, "(4)"))) == "(2)", || "I_SH((4))".into())?;
    let b = c.points_label(c.bourbaki(c.lattice().zero_index()));
    ensure(b == "{(3),(2)}" || b == "{(2),(3)}", || format!("B(Z12) = {b}"))?;
    ensure(!y.relative_decision(find(&c, "(4)"), false).is_relative(), || "(4) relative".into())?;
    let g = y.greatest_factor_idx(find(&c, "(0)"), false).maximum;
    ensure(g == Some(find(&c, "(4)")), || "greatest factor of (0)".into())?;
    Ok("Z12 table reproduced".into())
}

fn ac12() -> Outcome {
    let run = || run_all(&CorpusFile::default_corpus(), SEED, Caps::default(), None).map(|r| r.to_json());
    let (a, b) = (run().map_err(|e| e.to_string())?, run().map_err(|e| e.to_string())?);
    ensure(a == b, || "reports differ".into())?;
    Ok(format!("{} bytes identical", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
        ("AC11", ac11),
        ("AC12", ac12),
    ];
    let mut unexpected = 0;
    for (id, f) in criteria {
        let known = KNOWN_FAILURES.contains(&id);
        match f() {
            Ok(detail) => {
                println!("{id} PASS {detail}");
                if known {
                    println!("{id} was expected to fail");
                    unexpected += 1;
                }
            }
            Err(detail) => {
                println!("{id} FAIL {detail}{}", if known { " (known)" } else { "" });
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
