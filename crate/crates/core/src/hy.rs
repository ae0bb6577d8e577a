//! H_Y-ideals and strong H_Y-ideals: the predicates, every equivalent
//! condition evaluated independently, closures, filters and fixed/free
//! classification.
//!
//! Conditions quantified over arbitrary subsets `S ⊆ R` are evaluated with the
//! subset hull tables of [`crate::context::SubHulls`]: for each closed set `T`
//! the union of all `S` with `h_Y(S) = T` is kept, so "every such `S` lies in
//! `I`" becomes one inclusion test per `T`.

use serde::Serialize;
use serde_json::json;

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::report::{CheckReport, Tally};
use crate::ring::{build_ring_with, FiniteRing, RingSpec, TableSpec};
use crate::sets::{Element, ElementSet, PointSet};
use crate::zariski::{ClosedSet, SubSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub label: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Verdicts of a list of conditions that are claimed to be equivalent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionProfile {
    pub family: &'static str,
    pub conditions: Vec<ConditionVerdict>,
}

impl ConditionProfile {
    fn from_checks(family: &'static str, checks: Vec<(&'static str, Option<String>)>) -> ConditionProfile {
        ConditionProfile {
            family,
            conditions: checks
                .into_iter()
                .map(|(label, witness)| ConditionVerdict { label, holds: witness.is_none(), witness })
                .collect(),
        }
    }

    /// All verdicts agree.
    pub fn is_uniform(&self) -> bool {
        self.conditions.windows(2).all(|w| w[0].holds == w[1].holds)
    }

    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn none_hold(&self) -> bool {
        self.conditions.iter().all(|c| !c.holds)
    }

    pub fn get(&self, label: &str) -> Option<bool> {
        self.conditions.iter().find(|c| c.label == label).map(|c| c.holds)
    }

    pub fn summary(&self) -> String {
        self.conditions
            .iter()
            .map(|c| format!("({}) {}", c.label, if c.holds { "T" } else { "F" }))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `H_Y(I) = {h_Y(F) : F a finite subset of I}`. Over a finite ring this is
/// the set of hulls of subideals of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HYFilter {
    ideal: usize,
    members: Vec<PointSet>,
}

impl HYFilter {
    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn contains(&self, c: ClosedSet) -> bool {
        self.contains_points(c.points())
    }

    pub fn contains_points(&self, p: PointSet) -> bool {
        self.members.binary_search(&p).is_ok()
    }

    pub fn ideal(&self) -> usize {
        self.ideal
    }

    /// Intersection of all members, within `within`.
    pub fn intersection(&self, within: PointSet) -> PointSet {
        self.members.iter().fold(within, |acc, &m| acc.intersection(m))
    }
}

fn first_outside(u: &ElementSet, i: &ElementSet) -> Option<usize> {
    u.iter().find(|&x| !i.contains(x))
}

impl<'a> SubSpace<'a> {
    /// Subset hull groups of ideal `i`, projected onto `Y` and merged.
    pub fn subset_groups(&self, i: usize) -> Vec<(PointSet, ElementSet)> {
        let mut out: Vec<(PointSet, ElementSet)> = Vec::new();
        for (h, u) in &self.ctx().sub_hulls().per_ideal[i] {
            let t = h.intersection(self.points());
            match out.iter_mut().find(|(k, _)| *k == t) {
                Some((_, acc)) => acc.union_with(u),
                None => out.push((t, u.clone())),
            }
        }
        out.sort_by_key(|(t, _)| *t);
        out
    }

    /// `{h_Y(F) : F ⊆ I}` from the subset tables.
    pub fn finite_subset_hulls(&self, i: usize) -> Vec<PointSet> {
        self.subset_groups(i).into_iter().map(|(t, _)| t).collect()
    }

    pub fn is_hy_idx(&self, i: usize) -> bool {
        let lat = self.ctx().lattice();
        lat.get(i).members().elements().all(|a| lat.leq(self.kh_elem(a), i))
    }

    pub fn is_strong_idx(&self, i: usize) -> bool {
        self.ctx().lattice().leq(self.kh_idx(i), i)
    }

    /// `kh_Y(a) ⊆ I` for every `a ∈ I`.
    pub fn is_hy_ideal(&self, ideal: &Ideal) -> bool {
        self.is_hy_idx(self.ctx().idx(ideal))
    }

    /// `kh_Y(F) ⊆ I` for every finite `F ⊆ I`. Since `F ↦ kh_Y(F)` is monotone
    /// and `I` itself is finite, the single test `kh_Y(I) ⊆ I` decides it.
    pub fn is_strong_hy_ideal(&self, ideal: &Ideal) -> bool {
        self.is_strong_idx(self.ctx().idx(ideal))
    }

    pub fn hy_condition_profile(&self, ideal: &Ideal) -> ConditionProfile {
        self.hy_profile_idx(self.ctx().idx(ideal))
    }

    pub fn hy_profile_idx(&self, i: usize) -> ConditionProfile {
        let ctx = self.ctx();
        let ring = ctx.ring();
        let lat = ctx.lattice();
        let im = lat.get(i).members();
        let all = self.subset_groups(lat.whole_index());
        let h: Vec<PointSet> = ring.elements().map(|a| self.hull_elem(a).points()).collect();
        let kh: Vec<usize> = h.iter().map(|&t| ctx.kernel_idx(t)).collect();
        let lbl = |x: usize| ring.label(Element::from(x)).to_string();

        let over_subsets = |rel: &dyn Fn(PointSet, PointSet) -> bool| -> Option<String> {
            for a in im.iter() {
                for (t, u) in &all {
                    if rel(h[a], *t) {
                        if let Some(x) = first_outside(u, im) {
                            return Some(format!("a={}, S contains {}", lbl(a), lbl(x)));
                        }
                    }
                }
            }
            None
        };
        let over_elements = |rel: &dyn Fn(usize, usize) -> bool| -> Option<String> {
            for a in im.iter() {
                for b in 0..ring.size() {
                    if rel(a, b) && !im.contains(b) {
                        return Some(format!("a={}, b={}", lbl(a), lbl(b)));
                    }
                }
            }
            None
        };

        let checks = vec![
            ("a", over_subsets(&|ha, t| ha.is_subset(t))),
            ("b", over_subsets(&|ha, t| ha == t)),
            ("c", over_elements(&|a, b| h[a] == h[b])),
            ("d", over_elements(&|a, b| h[a].is_subset(h[b]))),
            (
                "e",
                im.iter().find_map(|a| {
                    first_outside(lat.get(kh[a]).members(), im)
                        .map(|x| format!("a={}, kh(a) contains {}", lbl(a), lbl(x)))
                }),
            ),
            ("f", over_subsets(&|ha, t| lat.leq(ctx.kernel_idx(t), ctx.kernel_idx(ha)))),
            ("g", over_subsets(&|ha, t| ctx.kernel_idx(t) == ctx.kernel_idx(ha))),
            ("h", over_elements(&|a, b| kh[b] == kh[a])),
            ("k", over_elements(&|a, b| lat.leq(kh[b], kh[a]))),
        ];
        ConditionProfile::from_checks("hy", checks)
    }

    pub fn strong_condition_profile(&self, ideal: &Ideal) -> ConditionProfile {
        self.strong_profile_idx(self.ctx().idx(ideal))
    }

    pub fn strong_profile_idx(&self, i: usize) -> ConditionProfile {
        let ctx = self.ctx();
        let ring = ctx.ring();
        let lat = ctx.lattice();
        let im = lat.get(i).members();
        let all = self.subset_groups(lat.whole_index());
        let hf = self.finite_subset_hulls(i);
        let filter = self.filter_idx(i);
        let h: Vec<PointSet> = ring.elements().map(|a| self.hull_elem(a).points()).collect();
        let kh: Vec<usize> = h.iter().map(|&t| ctx.kernel_idx(t)).collect();
        let lbl = |x: usize| ring.label(Element::from(x)).to_string();
        let pts = |t: PointSet| ctx.points_label(t);

        let over_subsets = |rel: &dyn Fn(PointSet, PointSet) -> bool| -> Option<String> {
            for &f in &hf {
                for (t, u) in &all {
                    if rel(f, *t) {
                        if let Some(x) = first_outside(u, im) {
                            return Some(format!("h(F)={}, G contains {}", pts(f), lbl(x)));
                        }
                    }
                }
            }
            None
        };
        let over_elements = |rel: &dyn Fn(PointSet, usize) -> bool| -> Option<String> {
            for &f in &hf {
                for a in 0..ring.size() {
                    if rel(f, a) && !im.contains(a) {
                        return Some(format!("h(F)={}, a={}", pts(f), lbl(a)));
                    }
                }
            }
            None
        };

        let d = (0..ring.size())
            .find(|&a| filter.contains_points(h[a]) && !im.contains(a))
            .map(|a| format!("h(a) in H_Y(I) for a={}", lbl(a)));
        let e = all.iter().filter(|(t, _)| filter.contains_points(*t)).find_map(|(t, u)| {
            first_outside(u, im).map(|x| format!("h(F)={} in H_Y(I), F contains {}", pts(*t), lbl(x)))
        });
        let k = hf.iter().find_map(|&f| {
            first_outside(lat.get(ctx.kernel_idx(f)).members(), im)
                .map(|x| format!("h(F)={}, kh(F) contains {}", pts(f), lbl(x)))
        });

        let checks = vec![
            ("a", over_subsets(&|f, t| f == t)),
            // every subset of a finite ring is finite, so (b) ranges over the same G as (a)
            ("b", over_subsets(&|f, t| f == t)),
            ("c", over_subsets(&|f, t| f.is_subset(t))),
            ("d", d),
            ("e", e),
            ("f", over_elements(&|f, a| h[a] == f)),
            ("g", over_elements(&|f, a| f.is_subset(h[a]))),
            ("k", k),
            ("l", over_elements(&|f, a| kh[a] == ctx.kernel_idx(f))),
            ("m", over_elements(&|f, a| lat.leq(kh[a], ctx.kernel_idx(f)))),
            ("n", over_subsets(&|f, t| ctx.kernel_idx(t) == ctx.kernel_idx(f))),
            ("o", over_subsets(&|f, t| lat.leq(ctx.kernel_idx(t), ctx.kernel_idx(f)))),
        ];
        ConditionProfile::from_checks("strong", checks)
    }

    /// `I_H`: least fixpoint of `J ↦ <⋃_{a ∈ J} kh_Y(a)>` above `I`.
    pub fn hy_closure_idx(&self, i: usize) -> usize {
        let lat = self.ctx().lattice();
        let mut cur = i;
        loop {
            let next = lat.get(cur).members().elements().fold(cur, |acc, a| lat.join(acc, self.kh_elem(a)));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn hy_closure(&self, ideal: &Ideal) -> Ideal {
        let ctx = self.ctx();
        ctx.ideal(self.hy_closure_idx(ctx.idx(ideal))).clone()
    }

    /// `I_SH = kh_Y(I)`.
    pub fn strong_closure_idx(&self, i: usize) -> usize {
        self.kh_idx(i)
    }

    pub fn strong_hy_closure(&self, ideal: &Ideal) -> Ideal {
        let ctx = self.ctx();
        ctx.ideal(self.strong_closure_idx(ctx.idx(ideal))).clone()
    }

    pub fn filter_idx(&self, i: usize) -> HYFilter {
        let lat = self.ctx().lattice();
        let mut members: Vec<PointSet> = (0..lat.len()).filter(|&j| lat.leq(j, i)).map(|j| self.hull_idx(j)).collect();
        members.sort();
        members.dedup();
        HYFilter { ideal: i, members }
    }

    pub fn filter(&self, ideal: &Ideal) -> HYFilter {
        self.filter_idx(self.ctx().idx(ideal))
    }

    /// `⋂ H_Y(I)`, computed from the filter members.
    pub fn filter_intersection(&self, ideal: &Ideal) -> PointSet {
        self.filter(ideal).intersection(self.points())
    }

    pub fn is_fixed_idx(&self, i: usize) -> bool {
        !self.hull_idx(i).is_empty()
    }

    /// `h_Y(I) ≠ ∅`.
    pub fn is_fixed(&self, ideal: &Ideal) -> bool {
        self.is_fixed_idx(self.ctx().idx(ideal))
    }

    /// `(⋂ H_Y(I)) ∩ S ≠ ∅`.
    pub fn is_fixed_wrt(&self, ideal: &Ideal, s: PointSet) -> Result<bool> {
        if !s.is_subset(self.points()) {
            return Err(Error::SNotSubsetY);
        }
        Ok(!self.filter_intersection(ideal).intersection(s).is_empty())
    }

    fn maximal_among(&self, keep: impl Fn(usize) -> bool) -> Vec<usize> {
        let lat = self.ctx().lattice();
        let family: Vec<usize> = (0..lat.len()).filter(|&i| keep(i)).collect();
        family.iter().copied().filter(|&i| family.iter().all(|&j| j == i || !lat.leq(i, j))).collect()
    }

    /// Inclusion-maximal H_Y-fixed ideals.
    pub fn maximal_fixed(&self) -> Vec<usize> {
        self.maximal_among(|i| self.is_fixed_idx(i))
    }

    /// Inclusion-maximal ideals that are H_Y-fixed with respect to `S`.
    pub fn maximal_fixed_wrt(&self, s: PointSet) -> Result<Vec<usize>> {
        if !s.is_subset(self.points()) {
            return Err(Error::SNotSubsetY);
        }
        Ok(self.maximal_among(|i| !self.hull_idx(i).intersection(s).is_empty()))
    }

    /// Proper strong H_Y-ideals.
    pub fn pshy_idx(&self) -> Vec<usize> {
        let whole = self.ctx().lattice().whole_index();
        (0..whole).filter(|&i| self.is_strong_idx(i)).collect()
    }

    pub fn maxl_pshy_idx(&self) -> Vec<usize> {
        let whole = self.ctx().lattice().whole_index();
        self.maximal_among(|i| i != whole && self.is_strong_idx(i))
    }

    pub fn pshy(&self) -> Vec<Ideal> {
        self.pshy_idx().into_iter().map(|i| self.ctx().ideal(i).clone()).collect()
    }

    pub fn maxl_pshy(&self) -> Vec<Ideal> {
        self.maxl_pshy_idx().into_iter().map(|i| self.ctx().ideal(i).clone()).collect()
    }

    /// `{a : h_Y(a) ∈ H_Y(I)}`, which must be an ideal containing `I`.
    pub fn hy_inverse_image_set(&self, i: usize) -> ElementSet {
        let ring = self.ctx().ring();
        let filter = self.filter_idx(i);
        ElementSet::from_indices(
            ring.size(),
            ring.elements().filter(|&a| filter.contains(self.hull_elem(a))).map(Element::index),
        )
    }

    pub fn hy_inverse_image(&self, ideal: &Ideal) -> Result<Ideal> {
        let ctx = self.ctx();
        let set = self.hy_inverse_image_set(ctx.idx(ideal));
        match ctx.lattice().index_of(&set) {
            Some(j) if ideal.members().is_subset(&set) => Ok(ctx.ideal(j).clone()),
            _ => Err(Error::NotAnIdeal(set.to_vec())),
        }
    }

    /// Contracts `Y` and `I` to the unital subring on `sub` and checks that a
    /// fixed `I` stays fixed: `h_Y(I) ≠ ∅ ⇒ h_{Y'}(I ∩ R') ≠ ∅`.
    pub fn subring_restriction_check(&self, sub: &ElementSet, ideal: &Ideal) -> Result<CheckReport> {
        let ctx = self.ctx();
        let sub_ctx = subring_context(ctx, sub)?;
        let positions: Vec<usize> = sub.iter().collect();
        let to_sub = |s: &ElementSet| -> ElementSet {
            ElementSet::from_indices(
                positions.len(),
                positions.iter().enumerate().filter(|(_, &x)| s.contains(x)).map(|(k, _)| k),
            )
        };

        let mut y_sub = PointSet::EMPTY;
        for p in self.point_ideals() {
            let contracted = to_sub(ctx.ideal(p).members());
            let idx = sub_ctx.lattice().index_of(&contracted);
            match idx.and_then(|j| sub_ctx.point_of(j)) {
                Some(q) => y_sub = y_sub.union(PointSet::singleton(q)),
                None => {
                    return Ok(CheckReport::new(
                        "P3.11",
                        self.instance(),
                        crate::report::Verdict::Fail,
                        Some(json!({"contraction_not_prime": ctx.ideal_name(p)})),
                    ))
                }
            }
        }
        let y_prime = SubSpace::new(&sub_ctx, y_sub)?;
        let contracted_i = to_sub(&ideal.members().intersection(sub));
        let ci = sub_ctx.lattice().index_of(&contracted_i).ok_or_else(|| Error::NotAnIdeal(contracted_i.to_vec()))?;

        let mut tally = Tally::default();
        if self.is_fixed(ideal) {
            tally.check(y_prime.is_fixed_idx(ci), || json!({"ideal": ideal.name(ctx.ring()), "subring": sub.to_vec()}));
        }
        Ok(tally.into_report("P3.11", self.instance(), self.is_empty(), "I is H_Y-fixed"))
    }
}

/// Smallest unital subring containing `gens`.
pub fn generated_subring(ring: &FiniteRing, gens: &[Element]) -> ElementSet {
    let mut s = ElementSet::from_indices(ring.size(), [ring.zero().index(), ring.one().index()]);
    for g in gens {
        s.insert(g.index());
    }
    loop {
        let members: Vec<Element> = s.elements().collect();
        let before = s.len();
        for &a in &members {
            s.insert(ring.neg(a).index());
            for &b in &members {
                s.insert(ring.add(a, b).index());
                s.insert(ring.mul(a, b).index());
            }
        }
        if s.len() == before {
            return s;
        }
    }
}

/// Builds the subring on `sub` as a table ring, after checking it is one.
pub fn subring_context(ctx: &RingContext, sub: &ElementSet) -> Result<RingContext> {
    let ring = ctx.ring();
    let sub = sub.resized(ring.size());
    let closed = sub.contains(ring.zero().index())
        && sub.contains(ring.one().index())
        && sub.elements().all(|a| {
            sub.contains(ring.neg(a).index())
                && sub.elements().all(|b| sub.contains(ring.add(a, b).index()) && sub.contains(ring.mul(a, b).index()))
        });
    if !closed {
        let why = if !sub.contains(ring.one().index()) { "missing the identity" } else { "not closed" };
        return Err(Error::NotASubring(format!("{:?} is {why}", sub.to_vec())));
    }
    let positions: Vec<usize> = sub.iter().collect();
    let pos_of = |x: Element| positions.binary_search(&x.index()).expect("closed");
    let table = |op: &dyn Fn(Element, Element) -> Element| -> Vec<Vec<usize>> {
        positions
            .iter()
            .map(|&a| positions.iter().map(|&b| pos_of(op(Element::from(a), Element::from(b)))).collect())
            .collect()
    };
    let spec = TableSpec {
        size: positions.len(),
        add: table(&|a, b| ring.add(a, b)),
        mul: table(&|a, b| ring.mul(a, b)),
        zero: pos_of(ring.zero()),
        one: pos_of(ring.one()),
        names: Some(positions.iter().map(|&x| ring.label(Element::from(x)).to_string()).collect()),
    };
    let caps = *ctx.caps();
    let mut sub_caps = caps;
    sub_caps.tables = sub_caps.tables.max(caps.structured);
    let sub_ring = build_ring_with(&RingSpec::Tables(spec), &sub_caps)?;
    RingContext::from_ring(format!("{}|sub", ctx.name()), sub_ring, &caps)
}
