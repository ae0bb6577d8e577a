//! Fixed values on small rings, each first confirmed against the oracles.

mod common;

use common::{ctx, lat_idx, mask_of, Oracle};
use hyideal_core::verify::{run_all, run_one};
use hyideal_core::{Caps, CorpusFile, CorpusRing, PointSet, RingContext, SubSpace, Verdict, YSelector};

fn named(c: &RingContext, name: &str) -> usize {
    (0..c.lattice().len()).find(|&i| c.ideal_name(i) == name).unwrap_or_else(|| panic!("no ideal {name}"))
}

fn names(c: &RingContext, ix: impl IntoIterator<Item = usize>) -> Vec<String> {
    let mut v: Vec<String> = ix.into_iter().map(|i| c.ideal_name(i)).collect();
    v.sort();
    v
}

#[test]
fn z12_whole_spectrum() {
    let c = ctx("Z12");
    let y = SubSpace::whole(&c);
    let hy: Vec<usize> = (0..c.lattice().len()).filter(|&i| y.is_hy_idx(i)).collect();
    assert_eq!(names(&c, hy.iter().copied()), ["(2)", "(3)", "(6)", "R"]);
    assert_eq!(c.ideal_name(y.hy_closure_idx(named(&c, "(0)"))), "(6)");
    assert_eq!(c.ideal_name(y.strong_closure_idx(named(&c, "(4)"))), "(2)");
    assert_eq!(names(&c, c.prime_indices(c.bourbaki(c.lattice().zero_index()))), ["(2)", "(3)"]);
    assert!(!y.relative_decision(named(&c, "(4)"), false).is_relative());
    let g = y.greatest_factor_idx(named(&c, "(0)"), false);
    assert_eq!(g.maximum.map(|m| c.ideal_name(m)).as_deref(), Some("(4)"));
    assert_eq!(g.ideal, g.maximum);

    // the same values from the oracle
    let o = Oracle::new(&c);
    let all = o.primes.clone();
    let hy_oracle: Vec<usize> = o.ideals.iter().filter(|&&m| o.is_hy(&all, m)).map(|&m| lat_idx(&c, m)).collect();
    assert_eq!(names(&c, hy_oracle), ["(2)", "(3)", "(6)", "R"]);
    let zero = mask_of(c.ideal(c.lattice().zero_index()).members());
    let h0 = o.least_above(zero, |k| o.is_hy(&all, k)).unwrap();
    assert_eq!(c.ideal_name(lat_idx(&c, h0)), "(6)");
}

#[test]
fn z12_filter_of_four_meets_in_two() {
    let c = ctx("Z12");
    let y = SubSpace::whole(&c);
    let meet = y.filter_idx(named(&c, "(4)")).intersection(y.points());
    assert_eq!(c.points_label(meet), "{(2)}");
}

#[test]
fn z12_six_condition_profiles() {
    let c = ctx("Z12");
    let y = SubSpace::whole(&c);
    for strong in [false, true] {
        assert!(y.hyj_profile_idx(named(&c, "(0)"), named(&c, "(4)"), strong).all_hold());
        assert!(y.hyj_profile_idx(named(&c, "(4)"), named(&c, "(3)"), strong).none_hold());
    }
}

#[test]
fn verifier_examples() {
    let z12 = common::spec("Z12");
    assert!(run_one("T3.9", &z12, &YSelector::Spec).unwrap().iter().all(|r| r.verdict == Verdict::Pass));
    assert_eq!(run_one("P3.2", &z12, &YSelector::Max).unwrap()[0].verdict, Verdict::Pass);
    assert_eq!(run_one("T3.5", &z12, &YSelector::Indices(vec![])).unwrap()[0].verdict, Verdict::Degenerate);
}

#[test]
fn gf4_regularity_both_sides_true() {
    let corpus = CorpusFile::from_rings(vec![CorpusRing::dsl("GF4", "GF(4)")]);
    let only = vec!["T4.regularity".to_string()];
    let report = run_all(&corpus, 0, Caps::default(), Some(&only)).unwrap();
    let spec = report.results.iter().find(|r| r.instance.y == "spec").unwrap();
    assert_eq!(spec.verdict, Verdict::Pass);
    let c = ctx("GF(4)");
    let y = SubSpace::whole(&c);
    assert!(c.ring().is_regular());
    assert!(y.relative_decision(c.lattice().zero_index(), true).is_relative());
}

#[test]
fn empty_corpus_reports_nothing() {
    let report = run_all(&CorpusFile::from_rings(vec![]), 0, Caps::default(), None).unwrap();
    assert!(report.results.is_empty() && report.notes.is_empty());
}

#[test]
fn separation_absent_on_default_corpus() {
    let report = run_all(&CorpusFile::default_corpus(), 0, Caps::default(), Some(&["EQ.hy".into()])).unwrap();
    let note = report.notes.iter().find(|n| n.id == "separation").unwrap();
    let data = note.data.as_ref().unwrap();
    assert!(data["found"].as_array().unwrap().is_empty());
    assert!(data["scanned"].as_u64().unwrap() > 0);
}

#[test]
fn minimal_factor_characterisation_fails_on_z12() {
    let c = ctx("Z12");
    let y = SubSpace::new(&c, PointSet::first_n(c.num_points())).unwrap();
    let mut tally = hyideal_core::report::Tally::default();
    y.minimal_factor_check(c.lattice().zero_index(), false, &mut tally);
    let w = tally.failure.expect("(4) is a minimal factor of (0) outside the characterisation");
    assert_eq!(w["J"], "(4)");
    assert_eq!(w["I∩<K0,e>"], "(0)");
}
