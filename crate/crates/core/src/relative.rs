//! Relative H_Y-ideals: the H_{YJ} predicates, factor families, the greatest
//! and minimal factors, and the report-producing checks built on them.
//!
//! Most functions take a `strong` flag selecting the strong variant.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::hy::ConditionProfile;
use crate::ideal::Ideal;
use crate::report::{CheckReport, Tally, Verdict};
use crate::sets::{Element, ElementSet, PointSet};
use crate::zariski::SubSpace;

/// Outcome of the two relative-ideal decision routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeDecision {
    /// A factor `J ⊄ I` found by scanning the lattice.
    pub factor: Option<usize>,
    /// An element `c ∉ I` with `<c> ∩ kh_Y(a) ⊆ I` for all `a ∈ I`
    /// (strong: `<c> ∩ kh_Y(I) ⊆ I`).
    pub principal: Option<Element>,
}

impl RelativeDecision {
    pub fn is_relative(&self) -> bool {
        self.factor.is_some()
    }

    pub fn routes_agree(&self) -> bool {
        self.factor.is_some() == self.principal.is_some()
    }
}

/// The greatest-factor formula evaluated against the factor family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreatestFactor {
    /// `{x : kh_Y(a) ∩ <x> ⊆ I for all a ∈ I}` as a set.
    pub formula: ElementSet,
    /// Lattice index of the formula set, when it is an ideal.
    pub ideal: Option<usize>,
    /// Inclusion-maximum of the nontrivial factors, when one exists.
    pub maximum: Option<usize>,
    /// The formula set is contained in `I`.
    pub trivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub ideal: Ideal,
    #[serde(rename = "Y")]
    pub y: String,
    pub factors: Vec<Ideal>,
    pub greatest: Option<Ideal>,
    pub minimal: Vec<Ideal>,
    pub strong_factors: Vec<Ideal>,
    pub strong_greatest: Option<Ideal>,
    pub strong_minimal: Vec<Ideal>,
}

impl<'a> SubSpace<'a> {
    pub fn is_hy_family(&self, i: usize, strong: bool) -> bool {
        if strong {
            self.is_strong_idx(i)
        } else {
            self.is_hy_idx(i)
        }
    }

    pub fn closure_family(&self, i: usize, strong: bool) -> usize {
        if strong {
            self.strong_closure_idx(i)
        } else {
            self.hy_closure_idx(i)
        }
    }

    /// `kh_Y(a) ∩ J ⊆ I` for every `a ∈ I`.
    pub fn is_hyj_idx(&self, i: usize, j: usize) -> bool {
        let lat = self.ctx().lattice();
        lat.get(i).members().elements().all(|a| lat.leq(lat.meet(self.kh_elem(a), j), i))
    }

    /// `kh_Y(F) ∩ J ⊆ I` for every finite `F ⊆ I`; the largest such kernel is
    /// `kh_Y(I)`.
    pub fn is_strong_hyj_idx(&self, i: usize, j: usize) -> bool {
        let lat = self.ctx().lattice();
        lat.leq(lat.meet(self.kh_idx(i), j), i)
    }

    pub fn hyj(&self, i: usize, j: usize, strong: bool) -> bool {
        if strong {
            self.is_strong_hyj_idx(i, j)
        } else {
            self.is_hyj_idx(i, j)
        }
    }

    pub fn is_hyj(&self, ideal: &Ideal, j: &Ideal) -> bool {
        self.is_hyj_idx(self.ctx().idx(ideal), self.ctx().idx(j))
    }

    pub fn is_strong_hyj(&self, ideal: &Ideal, j: &Ideal) -> bool {
        self.is_strong_hyj_idx(self.ctx().idx(ideal), self.ctx().idx(j))
    }

    /// The six conditions characterising H_{YJ}-ideals, each evaluated on its own.
    pub fn hyj_profile_idx(&self, i: usize, j: usize, strong: bool) -> ConditionProfile {
        let ctx = self.ctx();
        let lat = ctx.lattice();
        let ring = ctx.ring();
        let ih = self.closure_family(i, strong);
        let ij = lat.meet(i, j);
        let im = lat.get(i).members();
        let lbl = |x: usize| ring.label(Element::from(x)).to_string();
        let named = |k: usize| ctx.ideal_name(k);

        let a = if strong {
            self.finite_subset_hulls(i).into_iter().find_map(|t| {
                let k = lat.meet(ctx.kernel_idx(t), j);
                (!lat.leq(k, i)).then(|| format!("h(F)={}, kh(F)∩J={}", ctx.points_label(t), named(k)))
            })
        } else {
            im.elements().find_map(|x| {
                let k = lat.meet(self.kh_elem(x), j);
                (!lat.leq(k, i)).then(|| format!("a={}, kh(a)∩J={}", lbl(x.index()), named(k)))
            })
        };
        let b = (!lat.leq(lat.meet(ih, j), i)).then(|| format!("closure∩J={}", named(lat.meet(ih, j))));
        let c = (lat.meet(ih, j) != ij).then(|| format!("closure∩J={}, I∩J={}", named(lat.meet(ih, j)), named(ij)));
        let above: Vec<usize> = (0..lat.len()).filter(|&k| lat.leq(i, k) && self.is_hy_family(k, strong)).collect();
        let d = (!above.iter().any(|&k| lat.meet(k, j) == ij)).then(|| "no such K".to_string());
        let e = (!above.iter().any(|&k| lat.leq(lat.meet(k, j), i))).then(|| "no such K".to_string());
        let f = if strong {
            let groups = self.subset_groups(j);
            self.finite_subset_hulls(i).into_iter().find_map(|t| {
                groups.iter().filter(|(te, _)| t.is_subset(*te)).find_map(|(te, u)| {
                    u.iter().find(|&x| !im.contains(x)).map(|x| {
                        format!("h(F)={} ⊆ h(E)={}, E contains {}", ctx.points_label(t), ctx.points_label(*te), lbl(x))
                    })
                })
            })
        } else {
            let jm = lat.get(j).members();
            im.iter().find_map(|x| {
                let hx = self.hull_elem(Element::from(x)).points();
                jm.iter()
                    .find(|&y| hx.is_subset(self.hull_elem(Element::from(y)).points()) && !im.contains(y))
                    .map(|y| format!("a={}, b={}", lbl(x), lbl(y)))
            })
        };
        let family = if strong { "strong-hyj" } else { "hyj" };
        let checks = vec![("a", a), ("b", b), ("c", c), ("d", d), ("e", e), ("f", f)];
        ConditionProfile {
            family,
            conditions: checks
                .into_iter()
                .map(|(label, witness)| crate::hy::ConditionVerdict { label, holds: witness.is_none(), witness })
                .collect(),
        }
    }

    pub fn hyj_equivalents(&self, ideal: &Ideal, j: &Ideal) -> (ConditionProfile, ConditionProfile) {
        let (i, j) = (self.ctx().idx(ideal), self.ctx().idx(j));
        (self.hyj_profile_idx(i, j, false), self.hyj_profile_idx(i, j, true))
    }

    /// Factors of `I`: ideals `J` with `I` an H_{YJ}-ideal. Trivial factors
    /// (`J ⊆ I`) are included only on request.
    pub fn factors_idx(&self, i: usize, strong: bool, include_trivial: bool) -> Vec<usize> {
        let lat = self.ctx().lattice();
        (0..lat.len()).filter(|&j| (include_trivial || !lat.leq(j, i)) && self.hyj(i, j, strong)).collect()
    }

    pub fn minimal_factors_idx(&self, i: usize, strong: bool) -> Vec<usize> {
        let lat = self.ctx().lattice();
        let fs = self.factors_idx(i, strong, false);
        fs.iter().copied().filter(|&j| fs.iter().all(|&k| k == j || !lat.leq(k, j))).collect()
    }

    pub fn maximal_factors_idx(&self, i: usize, strong: bool) -> Vec<usize> {
        let lat = self.ctx().lattice();
        let fs = self.factors_idx(i, strong, false);
        fs.iter().copied().filter(|&j| fs.iter().all(|&k| k == j || !lat.leq(j, k))).collect()
    }

    /// Both relative-ideal routes, computed independently.
    pub fn relative_decision(&self, i: usize, strong: bool) -> RelativeDecision {
        let ctx = self.ctx();
        let lat = ctx.lattice();
        let ring = ctx.ring();
        let factor = (0..lat.len()).find(|&j| !lat.leq(j, i) && self.hyj(i, j, strong));
        let im = lat.get(i).members();
        let principal = ring.elements().filter(|c| !im.contains(c.index())).find(|&c| {
            let pc = lat.get(lat.principal(c)).members();
            let inside = |k: usize| pc.intersection(lat.get(k).members()).is_subset(im);
            if strong {
                inside(self.kh_idx(i))
            } else {
                im.elements().all(|a| inside(self.kh_elem(a)))
            }
        });
        RelativeDecision { factor, principal }
    }

    pub fn is_relative_hy(&self, ideal: &Ideal) -> RelativeDecision {
        self.relative_decision(self.ctx().idx(ideal), false)
    }

    pub fn is_relative_strong_hy(&self, ideal: &Ideal) -> RelativeDecision {
        self.relative_decision(self.ctx().idx(ideal), true)
    }

    /// Evaluates `{x : kh_Y(a) ∩ <x> ⊆ I for all a ∈ I}` (strong: `kh_Y(I) ∩ <x> ⊆ I`)
    /// and compares it with the maximum of the factor family.
    pub fn greatest_factor_idx(&self, i: usize, strong: bool) -> GreatestFactor {
        let ctx = self.ctx();
        let lat = ctx.lattice();
        let ring = ctx.ring();
        let im = lat.get(i).members();
        let kernels: Vec<usize> = if strong {
            vec![self.kh_idx(i)]
        } else {
            let mut ks: Vec<usize> = im.elements().map(|a| self.kh_elem(a)).collect();
            ks.sort_unstable();
            ks.dedup();
            ks
        };
        let formula = ElementSet::from_indices(
            ring.size(),
            ring.elements()
                .filter(|&x| {
                    let px = lat.principal(x);
                    kernels.iter().all(|&k| lat.leq(lat.meet(k, px), i))
                })
                .map(Element::index),
        );
        let ideal = lat.index_of(&formula);
        let factors = self.factors_idx(i, strong, false);
        let maximum = factors.iter().copied().find(|&m| factors.iter().all(|&j| lat.leq(j, m)));
        let trivial = formula.is_subset(im);
        GreatestFactor { formula, ideal, maximum, trivial }
    }

    /// Lattice index of the greatest factor formula when it is an ideal.
    pub fn greatest_factor(&self, ideal: &Ideal) -> Option<usize> {
        self.greatest_factor_idx(self.ctx().idx(ideal), false).ideal
    }

    /// `{x : kh_Y(x) ∩ <a> ⊆ I for all a ∈ I}`, the formula with the roles of
    /// `x` and `a` exchanged. Always all of `R`, since `<a> ⊆ I`.
    pub fn greatest_factor_literal(&self, i: usize) -> ElementSet {
        let ctx = self.ctx();
        let lat = ctx.lattice();
        let ring = ctx.ring();
        let im = lat.get(i).members();
        ElementSet::from_indices(
            ring.size(),
            ring.elements()
                .filter(|&x| im.elements().all(|a| lat.leq(lat.meet(self.kh_elem(x), lat.principal(a)), i)))
                .map(Element::index),
        )
    }

    /// `K = ⋂{P ∈ Min(I) : P not a (strong) H_Y-ideal}`, with `⋂∅ = R`.
    pub fn factor_k_minprimes_idx(&self, i: usize, strong: bool) -> usize {
        let ctx = self.ctx();
        let lat = ctx.lattice();
        ctx.prime_indices(ctx.min_over(i))
            .into_iter()
            .filter(|&p| !self.is_hy_family(p, strong))
            .fold(lat.whole_index(), |acc, p| lat.meet(acc, p))
    }

    pub fn factor_report(&self, ideal: &Ideal) -> FactorReport {
        let ctx = self.ctx();
        let i = ctx.idx(ideal);
        let get = |v: Vec<usize>| v.into_iter().map(|k| ctx.ideal(k).clone()).collect::<Vec<_>>();
        let greatest = |strong: bool| {
            let g = self.greatest_factor_idx(i, strong);
            g.ideal.map(|k| ctx.ideal(k).clone())
        };
        FactorReport {
            ideal: ideal.clone(),
            y: self.label().to_string(),
            factors: get(self.factors_idx(i, false, false)),
            greatest: greatest(false),
            minimal: get(self.minimal_factors_idx(i, false)),
            strong_factors: get(self.factors_idx(i, true, false)),
            strong_greatest: greatest(true),
            strong_minimal: get(self.minimal_factors_idx(i, true)),
        }
    }

    /// `J` is a minimal factor of `I` iff `J = <e>` with `e ∉ √I`,
    /// `I ∩ <K₀, e>` a (strong) H_Y-ideal for `K₀ = k(Y)`, and `<e>` minimal
    /// among principal ideals not inside `I`. Both sides are evaluated for
    /// every lattice ideal `J`.
    pub fn minimal_factor_check(&self, i: usize, strong: bool, tally: &mut Tally) {
        let ctx = self.ctx();
        let lat = ctx.lattice();
        let ring = ctx.ring();
        let k0 = ctx.kernel_idx(self.points());
        let rad = lat.radical(i);
        let minimal = self.minimal_factors_idx(i, strong);
        let principal_outside: Vec<usize> = {
            let mut v: Vec<usize> = ring.elements().map(|e| lat.principal(e)).filter(|&p| !lat.leq(p, i)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let minimal_principal = |p: usize| principal_outside.iter().all(|&q| q == p || !lat.leq(q, p));
        for j in 0..lat.len() {
            let lhs = minimal.contains(&j);
            let rhs = ring.elements().any(|e| {
                lat.principal(e) == j
                    && !lat.get(rad).contains(e)
                    && self.is_hy_family(lat.meet(i, lat.join(k0, j)), strong)
                    && minimal_principal(j)
            });
            if lhs || rhs {
                tally.check(lhs == rhs, || {
                    json!({
                        "I": ctx.ideal_name(i),
                        "J": ctx.ideal_name(j),
                        "minimal_factor": lhs,
                        "characterisation": rhs,
                        "I∩<K0,e>": ctx.ideal_name(lat.meet(i, lat.join(k0, j))),
                    })
                });
            }
        }
    }

    /// Every (strong) H_{XJ}-ideal is (strong) H_{YJ} iff every prime
    /// (strong) H_X-ideal not containing `J` is (strong) H_Y.
    pub fn comparison(&self, y: &SubSpace<'_>, j: usize, strong: bool) -> (bool, bool, Option<serde_json::Value>) {
        let ctx = self.ctx();
        let lat = ctx.lattice();
        let lhs_bad = (0..lat.len()).find(|&i| self.hyj(i, j, strong) && !y.hyj(i, j, strong));
        let rhs_bad = ctx
            .prime_indices(ctx.spec())
            .into_iter()
            .find(|&p| self.is_hy_family(p, strong) && !lat.leq(j, p) && !y.is_hy_family(p, strong));
        let witness = json!({
            "J": ctx.ideal_name(j),
            "lhs_counterexample": lhs_bad.map(|i| ctx.ideal_name(i)),
            "rhs_counterexample": rhs_bad.map(|p| ctx.ideal_name(p)),
        });
        (lhs_bad.is_none(), rhs_bad.is_none(), Some(witness))
    }

    pub fn comparison_check(&self, y: &SubSpace<'_>, j: &Ideal) -> CheckReport {
        let jdx = self.ctx().idx(j);
        let mut tally = Tally::default();
        for strong in [false, true] {
            let (lhs, rhs, w) = self.comparison(y, jdx, strong);
            tally.check(lhs == rhs, || json!({"strong": strong, "detail": w}));
        }
        let instance = crate::report::Instance {
            ring: self.ctx().name().to_string(),
            y: format!("X={} Y={}", self.label(), y.label()),
        };
        tally.into_report("T4.compare", instance, self.is_empty() && y.is_empty(), "")
    }

    /// Families `A` of primes with `⋂A = I`.
    pub fn prime_representations(&self, i: usize) -> Vec<PointSet> {
        let ctx = self.ctx();
        ctx.spec().subsets().filter(|&a| ctx.kernel_idx(a) == i).collect()
    }

    /// For semiprime `I`: `I` is relative (strong) H_Y iff every
    /// representation of `I` as an intersection of primes has a (strong)
    /// H_Y member.
    pub fn semiprime_representation(&self, i: usize, strong: bool) -> Result<(bool, bool, Option<PointSet>)> {
        let ctx = self.ctx();
        if !ctx.ideal(i).is_semiprime(ctx.ring()) {
            return Err(Error::NotSemiprime(ctx.ideal(i).members().to_vec()));
        }
        let lhs = self.relative_decision(i, strong).is_relative();
        let bad = self
            .prime_representations(i)
            .into_iter()
            .find(|a| !ctx.prime_indices(*a).into_iter().any(|p| self.is_hy_family(p, strong)));
        Ok((lhs, bad.is_none(), bad))
    }

    pub fn semiprime_representation_check(&self, ideal: &Ideal) -> Result<CheckReport> {
        let ctx = self.ctx();
        let i = ctx.idx(ideal);
        if ctx.num_points() > ctx.caps().all_subsets_spec {
            return Ok(CheckReport::new("C4.semiprime", self.instance(), Verdict::Skipped, None));
        }
        let mut tally = Tally::default();
        for strong in [false, true] {
            let (lhs, rhs, bad) = self.semiprime_representation(i, strong)?;
            tally.check(lhs == rhs, || {
                json!({"I": ctx.ideal_name(i), "strong": strong, "relative": lhs,
                       "representation_without_member": bad.map(|a| ctx.points_label(a))})
            });
        }
        Ok(tally.into_report("C4.semiprime", self.instance(), self.is_empty(), ""))
    }

    /// `K₀ ⊆ I` and `(K₀ : I) ⊄ I` imply `I` is relative strong, `K₀ = k(Y)`.
    pub fn relative_via_colon(&self, i: usize, tally: &mut Tally) {
        let ctx = self.ctx();
        let lat = ctx.lattice();
        let k0 = ctx.kernel_idx(self.points());
        if !lat.leq(k0, i) {
            return;
        }
        let colon = ctx.ideal(k0).colon_ideal(ctx.ideal(i), ctx.ring()).expect("same ring");
        if colon.members().is_subset(ctx.ideal(i).members()) {
            return;
        }
        tally.check(
            self.relative_decision(i, true).is_relative(),
            || json!({"I": ctx.ideal_name(i), "K0": ctx.ideal_name(k0), "(K0:I)": colon.name(ctx.ring())}),
        );
    }

    pub fn relative_via_colon_check(&self, ideal: &Ideal) -> CheckReport {
        let mut tally = Tally::default();
        self.relative_via_colon(self.ctx().idx(ideal), &mut tally);
        tally.into_report("P4.7f", self.instance(), self.is_empty(), "k(Y) ⊆ I and (k(Y):I) ⊄ I")
    }

    /// With the root property and `K₀ ⊆ <a>`: `<a>` is relative strong iff
    /// `(K₀ : a) ⊄ <a>`. Returns both sides.
    pub fn principal_relative(&self, a: Element) -> Result<(bool, bool)> {
        let ctx = self.ctx();
        let ring = ctx.ring();
        let lat = ctx.lattice();
        if !ring.has_root_property() {
            return Err(Error::PremiseFailed("ring lacks the root property".into()));
        }
        let k0 = ctx.kernel_idx(self.points());
        let pa = lat.principal(a);
        if !lat.leq(k0, pa) {
            return Err(Error::PremiseFailed(format!(
                "k(Y) = {} is not inside <{}>",
                ctx.ideal_name(k0),
                ring.label(a)
            )));
        }
        let lhs = self.relative_decision(pa, true).is_relative();
        let colon = ctx.ideal(k0).colon(a, ring);
        let rhs = !colon.members().is_subset(lat.get(pa).members());
        Ok((lhs, rhs))
    }

    pub fn principal_relative_check(&self, a: Element) -> Result<CheckReport> {
        let (lhs, rhs) = self.principal_relative(a)?;
        let mut tally = Tally::default();
        tally.check(
            lhs == rhs,
            || json!({"a": self.ctx().ring().label(a), "relative_strong": lhs, "colon_outside": rhs}),
        );
        Ok(tally.into_report("P4.7g", self.instance(), self.is_empty(), ""))
    }

    /// For an H_{YJ}-ideal `I`, checks the primes of `Min(I)` and of `Min(R)`
    /// are H_{YJ}. Returns the first offender under each reading.
    pub fn prime_transfer(&self, i: usize, j: usize, strong: bool) -> Result<(Option<usize>, Option<usize>)> {
        if !self.hyj(i, j, strong) {
            return Err(Error::PremiseFailed("I is not an H_YJ-ideal".into()));
        }
        let ctx = self.ctx();
        let bad = |s: PointSet| ctx.prime_indices(s).into_iter().find(|&p| !self.hyj(p, j, strong));
        Ok((bad(ctx.min_over(i)), bad(ctx.min_primes())))
    }

    pub fn prime_transfer_check(&self, ideal: &Ideal, j: &Ideal) -> Result<CheckReport> {
        let ctx = self.ctx();
        let (i, jx) = (ctx.idx(ideal), ctx.idx(j));
        let mut tally = Tally::default();
        for strong in [false, true] {
            let (min_i, min_r) = self.prime_transfer(i, jx, strong)?;
            tally.check(
                min_i.is_none(),
                || json!({"reading": "Min(I)", "strong": strong, "P": min_i.map(|p| ctx.ideal_name(p))}),
            );
            let _ = min_r;
        }
        Ok(tally.into_report("T4.3a", self.instance(), self.is_empty(), "I is an H_YJ-ideal"))
    }
}
