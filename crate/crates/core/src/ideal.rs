//! Ideals as member bitsets, ideal arithmetic, and the full ideal lattice.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{FiniteRing, RingId};
use crate::sets::{Element, ElementSet};

/// An ideal of a finite ring. Identity is the member set; `generators` is a
/// witness and plays no part in equality or ordering.
#[derive(Clone)]
pub struct Ideal {
    ring: RingId,
    members: ElementSet,
    generators: Vec<Element>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for Ideal {}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ring.cmp(&other.ring).then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.members)
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

/// `a + R b` for every coset: the additive sum of an ideal and an additive subgroup.
fn subgroup_sum(ring: &FiniteRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = a.clone();
    for y in b.elements() {
        if !out.contains(y.index()) {
            for x in a.elements() {
                out.insert(ring.add(x, y).index());
            }
        }
    }
    out
}

fn principal_members(ring: &FiniteRing, g: Element) -> ElementSet {
    ElementSet::from_indices(ring.size(), ring.elements().map(|r| ring.mul(r, g).index()))
}

/// Smallest ideal containing `gens`.
pub fn ideal_generate(ring: &FiniteRing, gens: &[Element]) -> Ideal {
    let mut members = ElementSet::from_indices(ring.size(), [ring.zero().index()]);
    for &g in gens {
        if !members.contains(g.index()) {
            members = subgroup_sum(ring, &members, &principal_members(ring, g));
        }
    }
    Ideal { ring: ring.id(), members, generators: gens.to_vec() }
}

/// Wraps a member set, checking the ideal axioms.
pub fn ideal_from_members(ring: &FiniteRing, members: ElementSet) -> Result<Ideal> {
    let members = members.resized(ring.size());
    let ok = members.contains(ring.zero().index())
        && members.elements().all(|a| {
            members.contains(ring.neg(a).index())
                && members.elements().all(|b| members.contains(ring.add(a, b).index()))
                && ring.elements().all(|r| members.contains(ring.mul(r, a).index()))
        });
    if !ok {
        return Err(Error::NotAnIdeal(members.to_vec()));
    }
    let generators = greedy_generators(ring, &members);
    Ok(Ideal { ring: ring.id(), members, generators })
}

/// A short generating set: repeatedly add the element whose principal ideal
/// grows the current span the most (lowest index on ties).
fn greedy_generators(ring: &FiniteRing, members: &ElementSet) -> Vec<Element> {
    let mut span = ElementSet::from_indices(ring.size(), [ring.zero().index()]);
    let mut gens = Vec::new();
    while span != *members {
        let best = members
            .elements()
            .filter(|x| !span.contains(x.index()))
            .map(|x| (subgroup_sum(ring, &span, &principal_members(ring, x)), x))
            .max_by(|(s1, x1), (s2, x2)| s1.len().cmp(&s2.len()).then(x2.cmp(x1)))
            .expect("span is a proper subset, so some member lies outside it");
        span = best.0;
        gens.push(best.1);
    }
    gens
}

impl Ideal {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn contains(&self, a: Element) -> bool {
        self.members.contains(a.index())
    }

    /// Number of members; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.is_full()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Conventional name: `(0)`, `R`, or a generator tuple such as `(4)` or `(2,x)`.
    pub fn name(&self, ring: &FiniteRing) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        if self.is_whole() {
            return "R".into();
        }
        let gens = greedy_generators(ring, &self.members);
        let labels: Vec<&str> = gens.iter().map(|&g| ring.label(g)).collect();
        format!("({})", labels.join(","))
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal, ring: &FiniteRing) -> Result<Ideal> {
        self.same_ring(other)?;
        let members = subgroup_sum(ring, &self.members, &other.members);
        let mut generators = self.generators.clone();
        generators.extend_from_slice(&other.generators);
        Ok(Ideal { ring: self.ring, members, generators })
    }

    pub fn product(&self, other: &Ideal, ring: &FiniteRing) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens: Vec<Element> = Vec::new();
        let mut seen = ElementSet::empty(ring.size());
        for a in self.members.elements() {
            for b in other.members.elements() {
                let p = ring.mul(a, b);
                if !seen.contains(p.index()) {
                    seen.insert(p.index());
                    gens.push(p);
                }
            }
        }
        Ok(ideal_generate(ring, &gens))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal { ring: self.ring, members: self.members.intersection(&other.members), generators: Vec::new() })
    }

    /// `(I : a) = {x : a x in I}`.
    pub fn colon(&self, a: Element, ring: &FiniteRing) -> Ideal {
        let members = ElementSet::from_indices(
            ring.size(),
            ring.elements().filter(|&x| self.contains(ring.mul(a, x))).map(Element::index),
        );
        Ideal { ring: self.ring, members, generators: Vec::new() }
    }

    /// `(I : J) = {x : x J ⊆ I}`.
    pub fn colon_ideal(&self, j: &Ideal, ring: &FiniteRing) -> Result<Ideal> {
        self.same_ring(j)?;
        let members = ElementSet::from_indices(
            ring.size(),
            ring.elements()
                .filter(|&x| j.members.elements().all(|i| self.contains(ring.mul(x, i))))
                .map(Element::index),
        );
        Ok(Ideal { ring: self.ring, members, generators: Vec::new() })
    }

    /// `sqrt(I)`: elements with some positive power in `I`.
    pub fn radical(&self, ring: &FiniteRing) -> Ideal {
        let mut seen = vec![false; ring.size()];
        let members = ElementSet::from_indices(
            ring.size(),
            ring.elements()
                .filter(|&x| {
                    seen.iter_mut().for_each(|s| *s = false);
                    let mut p = x;
                    loop {
                        if self.contains(p) {
                            return true;
                        }
                        if seen[p.index()] {
                            return false;
                        }
                        seen[p.index()] = true;
                        p = ring.mul(p, x);
                    }
                })
                .map(Element::index),
        );
        Ideal { ring: self.ring, members, generators: Vec::new() }
    }

    pub fn is_semiprime(&self, ring: &FiniteRing) -> bool {
        self.radical(ring) == *self
    }
}

pub fn zero_ideal(ring: &FiniteRing) -> Ideal {
    ideal_generate(ring, &[])
}

pub fn whole_ring(ring: &FiniteRing) -> Ideal {
    ideal_generate(ring, &[ring.one()])
}

pub fn annihilator(a: Element, ring: &FiniteRing) -> Ideal {
    zero_ideal(ring).colon(a, ring)
}

/// Every ideal of a ring, sorted by (cardinality, member list), with
/// precomputed meet, join and inclusion tables over lattice indices.
pub struct IdealLattice {
    ring: RingId,
    ideals: Vec<Ideal>,
    index: HashMap<ElementSet, usize>,
    principal: Vec<usize>,
    meet: Vec<usize>,
    join: Vec<usize>,
    leq: Vec<bool>,
    radical: Vec<usize>,
}

impl fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.ideals.iter()).finish()
    }
}

impl IdealLattice {
    /// Principal ideals closed under sums; every ideal of a finite ring is a
    /// finite sum of principal ideals.
    pub fn build(ring: &FiniteRing) -> IdealLattice {
        let n = ring.size();
        let principal_sets: Vec<ElementSet> = ring.elements().map(|g| principal_members(ring, g)).collect();
        let mut distinct: Vec<ElementSet> = principal_sets.clone();
        distinct.sort();
        distinct.dedup();

        let mut all: Vec<ElementSet> = distinct.clone();
        let mut seen: std::collections::HashSet<ElementSet> = all.iter().cloned().collect();
        let mut frontier = all.clone();
        while let Some(x) = frontier.pop() {
            for p in &distinct {
                if p.is_subset(&x) {
                    continue;
                }
                let s = subgroup_sum(ring, &x, p);
                if seen.insert(s.clone()) {
                    all.push(s.clone());
                    frontier.push(s);
                }
            }
        }
        all.sort();

        let index: HashMap<ElementSet, usize> = all.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let ideals: Vec<Ideal> = all
            .iter()
            .map(|s| Ideal { ring: ring.id(), members: s.clone(), generators: greedy_generators(ring, s) })
            .collect();
        let l = ideals.len();
        let principal = principal_sets.iter().map(|s| index[s]).collect();

        let mut meet = vec![0; l * l];
        let mut join = vec![0; l * l];
        let mut leq = vec![false; l * l];
        for i in 0..l {
            for j in i..l {
                let m = index[&all[i].intersection(&all[j])];
                let s = index[&subgroup_sum(ring, &all[i], &all[j])];
                meet[i * l + j] = m;
                meet[j * l + i] = m;
                join[i * l + j] = s;
                join[j * l + i] = s;
                leq[i * l + j] = all[i].is_subset(&all[j]);
                leq[j * l + i] = all[j].is_subset(&all[i]);
            }
        }
        let radical = ideals.iter().map(|i| index[i.radical(ring).members()]).collect();
        debug_assert_eq!(all[0].len(), 1);
        debug_assert_eq!(all[l - 1].len(), n);

        IdealLattice { ring: ring.id(), ideals, index, principal, meet, join, leq, radical }
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn index_of(&self, members: &ElementSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Lattice index of an ideal of this ring.
    pub fn idx(&self, ideal: &Ideal) -> usize {
        self.index[ideal.members()]
    }

    pub fn principal(&self, a: Element) -> usize {
        self.principal[a.index()]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn radical(&self, i: usize) -> usize {
        self.radical[i]
    }

    /// Ideal product, computed on demand.
    pub fn product(&self, i: usize, j: usize, ring: &FiniteRing) -> usize {
        let p = self.ideals[i].product(&self.ideals[j], ring).expect("same lattice");
        self.index[p.members()]
    }

    /// Distributivity `I ∩ (J + K) = (I ∩ J) + (I ∩ K)` over all triples.
    pub fn is_arithmetical(&self) -> bool {
        self.arithmetical_witness().is_none()
    }

    pub fn arithmetical_witness(&self) -> Option<(usize, usize, usize)> {
        let l = self.len();
        for i in 0..l {
            for j in 0..l {
                for k in j..l {
                    if self.meet(i, self.join(j, k)) != self.join(self.meet(i, j), self.meet(i, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, RingSpec};

    fn z12() -> FiniteRing {
        build_ring(&RingSpec::Zn(12)).unwrap()
    }

    fn gen(r: &FiniteRing, g: &[u32]) -> Ideal {
        ideal_generate(r, &g.iter().map(|&x| Element(x)).collect::<Vec<_>>())
    }

    #[test]
    fn generation_examples() {
        let r = z12();
        assert_eq!(gen(&r, &[2]).members().to_vec(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(gen(&r, &[]).members().to_vec(), vec![0]);
        assert!(gen(&r, &[1]).is_whole());
        assert_eq!(gen(&r, &[4, 6]), gen(&r, &[2]));
    }

    #[test]
    fn z12_lattice_has_six_ideals() {
        let r = z12();
        let lat = IdealLattice::build(&r);
        let names: Vec<String> = lat.ideals().iter().map(|i| i.name(&r)).collect();
        assert_eq!(names, ["(0)", "(6)", "(4)", "(3)", "(2)", "R"]);
        assert!(lat.is_arithmetical());
    }

    #[test]
    fn small_lattice_sizes() {
        let f2f2 = build_ring(&RingSpec::Product(vec![RingSpec::Zn(2), RingSpec::Zn(2)])).unwrap();
        assert_eq!(IdealLattice::build(&f2f2).len(), 4);
        let gf4 = build_ring(&RingSpec::QuotPoly { modulus: 2, coeffs: vec![1, 1, 1] }).unwrap();
        assert_eq!(IdealLattice::build(&gf4).len(), 2);
    }

    #[test]
    fn arithmetic_examples() {
        let r = z12();
        let (i4, i6) = (gen(&r, &[4]), gen(&r, &[6]));
        assert_eq!(i4.sum(&i6, &r).unwrap(), gen(&r, &[2]));
        assert!(i4.intersect(&i6).unwrap().is_zero());
        assert_eq!(i4.sum(&i4, &r).unwrap(), i4);
        assert_eq!(gen(&r, &[2]).product(&gen(&r, &[6]), &r).unwrap(), gen(&r, &[0]));
    }

    #[test]
    fn colon_and_annihilator_examples() {
        let r = z12();
        let zero = zero_ideal(&r);
        assert_eq!(zero.colon(Element(6), &r), gen(&r, &[2]));
        let i4 = gen(&r, &[4]);
        assert_eq!(i4.colon(r.one(), &r), i4);
        assert!(i4.colon(r.zero(), &r).is_whole());
        assert_eq!(zero.colon_ideal(&gen(&r, &[2]), &r).unwrap(), gen(&r, &[6]));
        assert_eq!(i4.colon_ideal(&whole_ring(&r), &r).unwrap(), i4);
        assert!(i4.colon_ideal(&zero, &r).unwrap().is_whole());
        assert_eq!(annihilator(Element(6), &r), gen(&r, &[2]));
        assert!(annihilator(r.one(), &r).is_zero());
        assert!(annihilator(r.zero(), &r).is_whole());
    }

    #[test]
    fn radical_examples() {
        let r = z12();
        assert_eq!(zero_ideal(&r).radical(&r), gen(&r, &[6]));
        assert_eq!(gen(&r, &[4]).radical(&r), gen(&r, &[2]));
        assert_eq!(gen(&r, &[3]).radical(&r), gen(&r, &[3]));
        assert!(gen(&r, &[6]).is_semiprime(&r));
        assert!(!gen(&r, &[4]).is_semiprime(&r));
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = z12();
        let b = z12();
        let err = zero_ideal(&a).sum(&zero_ideal(&b), &a).unwrap_err();
        assert_eq!(err, Error::RingMismatch);
    }

    #[test]
    fn non_ideal_member_sets_are_rejected() {
        let r = z12();
        let s = ElementSet::from_indices(12, [0, 3]);
        assert!(matches!(ideal_from_members(&r, s), Err(Error::NotAnIdeal(_))));
        let ok = ideal_from_members(&r, ElementSet::from_indices(12, [0, 4, 8])).unwrap();
        assert_eq!(ok.name(&r), "(4)");
    }
}
