//! The theorem-check registry and the corpus runner.
//!
//! Every check runs once per `(ring, Y)` instance and folds its sub-cases
//! into a single verdict. Instances are evaluated in parallel and reported in
//! registry order, then ring order, then subspace order.

mod relative_checks;
mod topology_checks;

use rayon::prelude::*;
use serde_json::json;

use crate::context::RingContext;
use crate::corpus::CorpusFile;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Note, Report, RunInfo, Summary, Tally};
use crate::ring::{Caps, RingSpec};
use crate::sets::PointSet;
use crate::zariski::{SubSpace, YSelector};

/// One `(ring, Y)` instance handed to a check, with the ring's other
/// subspaces for checks that compare two of them.
pub struct Env<'a> {
    pub y: SubSpace<'a>,
    pub subspaces: &'a [(String, PointSet)],
}

impl<'a> Env<'a> {
    pub fn ctx(&self) -> &'a RingContext {
        self.y.ctx()
    }

    /// Number of ideals of the ring.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.ctx().lattice().len()
    }

    pub fn name(&self, i: usize) -> String {
        self.ctx().ideal_name(i)
    }

    pub fn report(&self, id: &str, premise: &str, body: impl FnOnce(&mut Tally)) -> CheckReport {
        let mut tally = Tally::default();
        body(&mut tally);
        tally.into_report(id, self.y.instance(), self.y.is_empty(), premise)
    }
}

pub type CheckFn = fn(&Env) -> CheckReport;

pub struct TheoremCheck {
    pub id: &'static str,
    pub description: &'static str,
    run: CheckFn,
}

impl TheoremCheck {
    pub fn run(&self, env: &Env) -> CheckReport {
        (self.run)(env)
    }
}

macro_rules! registry {
    ($($id:literal => $f:path, $desc:literal;)*) => {
        /// Identifiers every registry must cover.
        pub const MANIFEST: &[&str] = &[$($id),*];

        static REGISTRY: &[TheoremCheck] = &[$(TheoremCheck { id: $id, description: $desc, run: $f }),*];
    };
}

registry! {
    "EQ.hy" => topology_checks::eq_hy, "the nine H_Y-ideal conditions agree with each other and with kh_Y(a) ⊆ I";
    "EQ.strong" => topology_checks::eq_strong, "the twelve strong H_Y-ideal conditions agree with each other and with kh_Y(I) ⊆ I";
    "P3.2" => topology_checks::p3_2, "⋂H_Y(I) = h_Y(I), so I is fixed iff h_Y(I) ≠ ∅";
    "C3.3a" => topology_checks::c3_3a, "proper Y-Hilbert ideals are fixed";
    "C3.3b" => topology_checks::c3_3b, "I is fixed iff H_Y^{-1}H_Y(I) is fixed";
    "C3.3c" => topology_checks::c3_3c, "H_Y^{-1}H_Y(I) = R iff I ⊄ ⋃Y";
    "C3.4" => topology_checks::c3_4, "maximal fixed ideals are exactly maxl(Y)";
    "T3.5" => topology_checks::t3_5, "compactness of Y and its four ideal-theoretic equivalents agree";
    "C3.6" => topology_checks::c3_6, "Y ⊆ Min(R) with ⋂Y = 0 is compact iff B(R) ⊆ Y";
    "T3.7" => topology_checks::t3_7, "maxl(PSH_Y) ∪ Y is a compact space containing Y densely";
    "T3.9" => topology_checks::t3_9, "fixed with respect to S ⊆ Y iff H_S-fixed";
    "C3.10" => topology_checks::c3_10, "maximal ideals fixed with respect to S are maxl(Y) ∩ S";
    "P3.11" => topology_checks::p3_11, "fixed ideals contract to fixed ideals of unital subrings";
    "P4.2a" => relative_checks::p4_2a, "strong H_YJ implies H_YJ";
    "P4.2b" => relative_checks::p4_2b, "relative strong implies relative";
    "P4.2c" => relative_checks::p4_2c, "every I is strong H_YI";
    "P4.2d" => relative_checks::p4_2d, "(strong) H_Y implies (strong) H_YJ for every J";
    "P4.2e" => relative_checks::p4_2e, "proper (strong) H_Y-ideals are relative (strong)";
    "P4.2f" => relative_checks::p4_2f, "H_YJ-subideals of an H_Y-ideal J are H_Y";
    "T4.3a" => relative_checks::t4_3a, "primes minimal over an H_YJ-ideal are H_YJ";
    "T4.3b" => relative_checks::t4_3b, "a prime is H_YJ iff it is H_Y or contains J";
    "T4.3c" => relative_checks::t4_3c, "Min(I) of a relative ideal contains an H_Y-ideal";
    "T4.4" => relative_checks::t4_4, "the six H_YJ conditions agree";
    "P4.5a" => relative_checks::p4_5a, "H_YJ is preserved by intersecting pairs (I_α, J_α)";
    "P4.5b" => relative_checks::p4_5b, "H_YK implies H_YJ for J ⊆ K";
    "P4.5c" => relative_checks::p4_5c, "H_YJ-ideals are closed under intersection";
    "P4.5d" => relative_checks::p4_5d, "H_YJ and J H_YK imply H_YK";
    "P4.5e" => relative_checks::p4_5e, "H_YJ implies √I is H_Y√J";
    "P4.5f" => relative_checks::p4_5f, "I is H_YJ iff I ∩ J is";
    "P4.5g" => relative_checks::p4_5g, "I is H_YJ iff I is H_Y(I+J)";
    "P4.5h" => relative_checks::p4_5h, "below an H_Y-ideal J, H_YJ means H_Y";
    "P4.5i" => relative_checks::p4_5i, "for H_Y J, I is H_YJ iff I ∩ J is H_Y";
    "P4.5j" => relative_checks::p4_5j, "I ∩ J is H_YI and H_YJ iff I is H_YJ and J is H_YI";
    "P4.5k" => relative_checks::p4_5k, "I_H ∩ J is the least H_YJ-ideal containing I ∩ J";
    "P4.5l" => relative_checks::p4_5l, "H_YJ passes up to K ⊇ I with the same closure";
    "P4.5m" => relative_checks::p4_5m, "H_YJ passes to every K with I ⊆ K ⊆ I_H";
    "P4.5n" => relative_checks::p4_5n, "H_YJ passes to √I";
    "P4.5o" => relative_checks::p4_5o, "IK H_YJ implies I ∩ K H_YJ";
    "P4.5p" => relative_checks::p4_5p, "I is H_YP for a prime P iff I_H ∖ I is multiplicatively closed";
    "P4.5q" => relative_checks::p4_5q, "J not H_Y and J ⊄ ⋂Y give a strong H_YJ-ideal below J that is not H_Y";
    "P4.5r" => relative_checks::p4_5r, "I ∩ P H_YJ implies I or P is H_YJ";
    "P4.5s" => relative_checks::p4_5s, "incomparable primes with P ∩ Q H_YJ are both H_YJ";
    "P4.7a" => relative_checks::p4_7a, "relative iff H_YJ for some J strictly above I";
    "P4.7b" => relative_checks::p4_7b, "relativity passes up to K ⊇ I with the same closure";
    "P4.7c" => relative_checks::p4_7c, "relativity passes to every K with I ⊆ K ⊆ I_H";
    "P4.7d" => relative_checks::p4_7d, "I ∩ P relative implies I or P relative";
    "P4.7e" => relative_checks::p4_7e, "relative iff some c ∉ I has <c> ∩ kh_Y(a) ⊆ I for all a ∈ I";
    "P4.7f" => relative_checks::p4_7f, "K ⊆ I and (K:I) ⊄ I imply relative strong, K = ⋂Y";
    "P4.7g" => relative_checks::p4_7g, "with the root property and K ⊆ <a>: <a> relative strong iff (K:a) ⊄ <a>";
    "P4.8a" => relative_checks::p4_8a, "maximal ideals with factor J are the maximal H_Y primes not containing J";
    "P4.8b" => relative_checks::p4_8b, "maximal H_YJ-ideals strictly below J are P ∩ J";
    "P4.8c" => relative_checks::p4_8c, "a factor family has a maximal member containing I";
    "P4.8d" => relative_checks::p4_8d, "for a minimal factor J, I + J is minimal among factors containing I";
    "P4.8e" => relative_checks::p4_8e, "a greatest factor equals {x : kh_Y(a) ∩ <x> ⊆ I for all a ∈ I}";
    "P4.8f" => relative_checks::p4_8f, "K = ⋂ non-H_Y primes of Min(I) has I_H ∩ K ⊆ √I and is greatest for semiprime relative I";
    "P4.8g" => relative_checks::p4_8g, "relative ideals have a greatest factor";
    "P4.8h" => relative_checks::p4_8h, "over arithmetical rings relative ideals have a greatest factor";
    "P4.8i" => relative_checks::p4_8i, "minimal factors are the <e> with e ∉ √I, I ∩ <K,e> H_Y and <e> minimal outside I";
    "C4.semiprime" => relative_checks::c4_semiprime, "semiprime I is relative iff every prime representation has an H_Y member";
    "T4.compare" => relative_checks::t4_compare, "H_XJ ⊆ H_YJ iff H_X primes not containing J are H_Y";
    "T4.regularity" => relative_checks::t4_regularity, "with ⋂Y = 0: all proper ideals relative strong iff relative iff R regular";
}

pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY
}

pub fn find_check(id: &str) -> Result<&'static TheoremCheck> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheckId(id.to_string()))
}

/// Resolves selectors to labelled point sets, dropping repeats of a point set
/// already listed under an earlier label.
pub fn instances(ctx: &RingContext, selectors: &[YSelector], seed: u64) -> Result<Vec<(String, PointSet)>> {
    let mut out: Vec<(String, PointSet)> = Vec::new();
    for sel in selectors {
        for (label, s) in sel.resolve(ctx, seed)? {
            if !out.iter().any(|(_, t)| *t == s) {
                out.push((label, s));
            }
        }
    }
    Ok(out)
}

fn run_checks(
    checks: &[&'static TheoremCheck],
    contexts: &[RingContext],
    subspaces: &[Vec<(String, PointSet)>],
) -> Vec<CheckReport> {
    let mut tasks: Vec<(usize, usize, usize)> = Vec::new();
    for c in 0..checks.len() {
        for (r, ys) in subspaces.iter().enumerate() {
            for y in 0..ys.len() {
                tasks.push((c, r, y));
            }
        }
    }
    tasks
        .par_iter()
        .map(|&(c, r, y)| {
            let (label, points) = &subspaces[r][y];
            let space = SubSpace::labelled(&contexts[r], *points, label.clone()).expect("resolved inside spectrum");
            checks[c].run(&Env { y: space, subspaces: &subspaces[r] })
        })
        .collect()
}

fn select_checks(filter: Option<&[String]>) -> Result<Vec<&'static TheoremCheck>> {
    match filter {
        None => Ok(REGISTRY.iter().collect()),
        Some(ids) => {
            let mut picked: Vec<&'static TheoremCheck> = Vec::new();
            for id in ids {
                let c = find_check(id)?;
                if !picked.iter().any(|p| p.id == c.id) {
                    picked.push(c);
                }
            }
            picked.sort_by_key(|c| REGISTRY.iter().position(|r| r.id == c.id));
            Ok(picked)
        }
    }
}

/// Runs the corpus. `only` overrides the corpus check filter.
pub fn run_all(corpus: &CorpusFile, seed: u64, caps: Caps, only: Option<&[String]>) -> Result<Report> {
    let caps = corpus.caps_over(caps);
    let contexts = corpus.contexts(&caps)?;
    let subspaces = contexts.iter().map(|ctx| instances(ctx, &corpus.subspaces, seed)).collect::<Result<Vec<_>>>()?;
    let checks = select_checks(only.or(corpus.checks.as_deref()))?;
    let results = run_checks(&checks, &contexts, &subspaces);
    let notes = if contexts.is_empty() { Vec::new() } else { run_notes(&contexts, &subspaces) };
    Ok(Report { run: RunInfo { seed, caps }, summary: Summary::of(&results), results, notes })
}

/// Runs a single check on one ring and one selector.
pub fn run_one(check_id: &str, spec: &RingSpec, selector: &YSelector) -> Result<Vec<CheckReport>> {
    let check = find_check(check_id)?;
    let ctx = RingContext::new(spec)?;
    let ys = instances(&ctx, std::slice::from_ref(selector), 0)?;
    Ok(run_checks(&[check], std::slice::from_ref(&ctx), &[ys]))
}

/// Scans every `(ring, Y, I)` for an H_Y-ideal that is not strong.
pub fn separation_search(contexts: &[RingContext], subspaces: &[Vec<(String, PointSet)>]) -> Note {
    let mut scanned = 0usize;
    let mut found = Vec::new();
    for (ctx, ys) in contexts.iter().zip(subspaces) {
        for (label, s) in ys {
            let y = SubSpace::labelled(ctx, *s, label.clone()).expect("resolved");
            for i in 0..ctx.lattice().len() {
                scanned += 1;
                if y.is_hy_idx(i) && !y.is_strong_idx(i) {
                    found.push(json!({"ring": ctx.name(), "Y": label, "I": ctx.ideal_name(i)}));
                }
            }
        }
    }
    let text = if found.is_empty() {
        format!("no H_Y-ideal that is not strong among {scanned} (ring, Y, I) instances")
    } else {
        format!("{} H_Y-ideals that are not strong among {scanned} instances", found.len())
    };
    Note { id: "separation".into(), text, data: Some(json!({"scanned": scanned, "found": found})) }
}

fn run_notes(contexts: &[RingContext], subspaces: &[Vec<(String, PointSet)>]) -> Vec<Note> {
    let mut min_r_checked = 0usize;
    let mut min_r_failures = 0usize;
    let mut min_r_witness = None;
    let mut literal_instances = 0usize;
    let mut literal_differs = 0usize;
    let mut literal_witness = None;
    let mut audit = Vec::new();

    for (ctx, ys) in contexts.iter().zip(subspaces) {
        let lat = ctx.lattice();
        for (label, s) in ys {
            let y = SubSpace::labelled(ctx, *s, label.clone()).expect("resolved");
            for i in 0..lat.len() {
                for strong in [false, true] {
                    for j in 0..lat.len() {
                        if let Ok((_, min_r)) = y.prime_transfer(i, j, strong) {
                            min_r_checked += 1;
                            if let Some(p) = min_r {
                                min_r_failures += 1;
                                min_r_witness.get_or_insert_with(|| {
                                    json!({"ring": ctx.name(), "Y": label, "I": ctx.ideal_name(i),
                                           "J": ctx.ideal_name(j), "P": ctx.ideal_name(p), "strong": strong})
                                });
                            }
                        }
                    }
                }
                literal_instances += 1;
                let literal = y.greatest_factor_literal(i);
                let proof = y.greatest_factor_idx(i, false).formula;
                if literal != proof {
                    literal_differs += 1;
                    literal_witness.get_or_insert_with(|| {
                        json!({"ring": ctx.name(), "Y": label, "I": ctx.ideal_name(i),
                               "literal_is_R": literal.is_full(), "proof_formula": proof.to_vec()})
                    });
                }
            }
        }
        let qualifying = ctx.spec().subsets().filter(|&s| ctx.kernel_idx(s) == lat.zero_index()).count();
        audit.push(
            json!({"ring": ctx.name(), "regular": ctx.ring().is_regular(), "subspaces_with_zero_kernel": qualifying}),
        );
    }

    let audit_ok = audit.iter().all(|a| a["regular"].as_bool() == Some(true) || a["subspaces_with_zero_kernel"] == 0);
    vec![
        Note {
            id: "T4.3a.min-reading".into(),
            text: format!(
                "transfer to primes minimal over I is checked as T4.3a; over Min(R) instead it fails in {min_r_failures} of {min_r_checked} H_YJ instances"
            ),
            data: Some(json!({"checked": min_r_checked, "failures": min_r_failures, "witness": min_r_witness})),
        },
        Note {
            id: "P4.8e.formula".into(),
            text: format!(
                "P4.8e uses {{x : kh_Y(a) ∩ <x> ⊆ I for all a ∈ I}}; the form {{x : kh_Y(x) ∩ <a> ⊆ I}} is all of R and differs from it in {literal_differs} of {literal_instances} instances"
            ),
            data: Some(json!({"instances": literal_instances, "differs": literal_differs, "witness": literal_witness})),
        },
        Note {
            id: "T4.regularity.audit".into(),
            text: if audit_ok {
                "no non-regular ring admits a subspace with zero kernel".into()
            } else {
                "a non-regular ring admits a subspace with zero kernel".into()
            },
            data: Some(json!(audit)),
        },
        separation_search(contexts, subspaces),
    ]
}
