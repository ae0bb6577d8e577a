//! A ring bundled with its ideal lattice, prime spectrum and hull tables.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::{build_ring_with, Caps, FiniteRing, RingSpec};
use crate::sets::{Element, ElementSet, PointSet};
use crate::spectrum::is_prime;

/// Largest spectrum the kernel table is built for. A ring under the hard cap
/// has at most 12 maximal ideals.
const MAX_PRIMES: usize = 20;

/// For each lattice ideal `I`, the distinct spectrum hulls `h(F)` of its
/// subsets `F` together with the union of all subsets sharing that hull.
///
/// Built from every subset of `I` when the ring is small enough, otherwise
/// from the subideals of `I` (same hulls, since `h(F) = h(<F>)`).
#[derive(Clone, Debug)]
pub struct SubHulls {
    pub from_subsets: bool,
    pub per_ideal: Vec<Vec<(PointSet, ElementSet)>>,
}

pub struct RingContext {
    name: String,
    ring: FiniteRing,
    lattice: IdealLattice,
    caps: Caps,
    pub(crate) primes: Vec<usize>,
    pub(crate) prime_point: HashMap<usize, usize>,
    pub(crate) hull_of: Vec<PointSet>,
    pub(crate) kernels: Vec<usize>,
    sub_hulls: SubHulls,
}

impl std::fmt::Debug for RingContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RingContext")
            .field("name", &self.name)
            .field("size", &self.ring.size())
            .field("ideals", &self.lattice.len())
            .field("primes", &self.primes.len())
            .finish()
    }
}

impl RingContext {
    pub fn new(spec: &RingSpec) -> Result<RingContext> {
        Self::with_caps(spec.to_string(), spec, &Caps::default())
    }

    pub fn with_caps(name: impl Into<String>, spec: &RingSpec, caps: &Caps) -> Result<RingContext> {
        let ring = build_ring_with(spec, caps)?;
        Self::from_ring(name, ring, caps)
    }

    pub fn from_ring(name: impl Into<String>, ring: FiniteRing, caps: &Caps) -> Result<RingContext> {
        let lattice = IdealLattice::build(&ring);
        let primes: Vec<usize> = (0..lattice.len()).filter(|&i| is_prime(&ring, lattice.get(i))).collect();
        if primes.len() > MAX_PRIMES {
            return Err(Error::CapExceeded { size: primes.len(), cap: MAX_PRIMES });
        }
        let prime_point = primes.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let hull_of: Vec<PointSet> = ring
            .elements()
            .map(|a| {
                PointSet::from_indices(
                    primes.iter().enumerate().filter(|(_, &i)| lattice.get(i).contains(a)).map(|(p, _)| p),
                )
            })
            .collect();

        let mut kernels = vec![lattice.whole_index(); 1usize << primes.len()];
        for mask in 1..kernels.len() {
            let low = mask.trailing_zeros() as usize;
            kernels[mask] = lattice.meet(kernels[mask & (mask - 1)], primes[low]);
        }

        let sub_hulls = build_sub_hulls(&ring, &lattice, &hull_of, primes.len(), caps.subset_oracle);
        Ok(RingContext {
            name: name.into(),
            ring,
            lattice,
            caps: *caps,
            primes,
            prime_point,
            hull_of,
            kernels,
            sub_hulls,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        self.lattice.get(i)
    }

    pub fn ideal_name(&self, i: usize) -> String {
        self.lattice.get(i).name(&self.ring)
    }

    /// Lattice index of an ideal given by its member set.
    pub fn idx(&self, ideal: &Ideal) -> usize {
        self.lattice.idx(ideal)
    }

    pub fn num_points(&self) -> usize {
        self.primes.len()
    }

    pub fn all_points(&self) -> PointSet {
        PointSet::first_n(self.primes.len())
    }

    /// Lattice index of the prime at spectrum position `p`.
    pub fn prime(&self, p: usize) -> usize {
        self.primes[p]
    }

    pub fn point_of(&self, lattice_idx: usize) -> Option<usize> {
        self.prime_point.get(&lattice_idx).copied()
    }

    /// Spectrum hull of one element.
    pub fn element_hull(&self, a: Element) -> PointSet {
        self.hull_of[a.index()]
    }

    /// Spectrum hull of an arbitrary element set (all primes when the set is empty).
    pub fn set_hull(&self, s: &ElementSet) -> PointSet {
        s.iter().fold(self.all_points(), |acc, a| acc.intersection(self.hull_of[a]))
    }

    pub fn ideal_hull(&self, i: usize) -> PointSet {
        self.set_hull(self.lattice.get(i).members())
    }

    /// Lattice index of `k(S)`; the empty set gives `R`.
    pub fn kernel_idx(&self, s: PointSet) -> usize {
        self.kernels[s.0 as usize]
    }

    pub fn sub_hulls(&self) -> &SubHulls {
        &self.sub_hulls
    }

    pub fn points_label(&self, s: PointSet) -> String {
        let names: Vec<String> = s.iter().map(|p| self.ideal_name(self.primes[p])).collect();
        format!("{{{}}}", names.join(","))
    }
}

fn build_sub_hulls(
    ring: &FiniteRing,
    lattice: &IdealLattice,
    hull_of: &[PointSet],
    num_points: usize,
    subset_cap: usize,
) -> SubHulls {
    let n = ring.size();
    let all = PointSet::first_n(num_points);
    if n <= subset_cap && n <= 24 {
        // hull of every subset of R, by peeling off the lowest element
        let mut hull = vec![all; 1usize << n];
        for s in 1..hull.len() {
            let low = s.trailing_zeros() as usize;
            hull[s] = hull[s & (s - 1)].intersection(hull_of[low]);
        }
        let per_ideal = lattice
            .ideals()
            .iter()
            .map(|ideal| {
                let full: usize = ideal.members().iter().map(|i| 1usize << i).sum();
                let mut groups: Vec<(PointSet, usize)> = Vec::new();
                let mut sub = 0usize;
                loop {
                    let h = hull[sub];
                    match groups.iter_mut().find(|(k, _)| *k == h) {
                        Some((_, u)) => *u |= sub,
                        None => groups.push((h, sub)),
                    }
                    if sub == full {
                        break;
                    }
                    sub = (sub.wrapping_sub(full)) & full;
                }
                let mut out: Vec<(PointSet, ElementSet)> = groups
                    .into_iter()
                    .map(|(h, u)| (h, ElementSet::from_indices(n, (0..n).filter(|i| u >> i & 1 == 1))))
                    .collect();
                out.sort_by_key(|(h, _)| *h);
                out
            })
            .collect();
        SubHulls { from_subsets: true, per_ideal }
    } else {
        let set_hull = |s: &ElementSet| s.iter().fold(all, |acc, a| acc.intersection(hull_of[a]));
        let per_ideal = (0..lattice.len())
            .map(|i| {
                let mut groups: Vec<(PointSet, ElementSet)> = Vec::new();
                for j in (0..lattice.len()).filter(|&j| lattice.leq(j, i)) {
                    let members = lattice.get(j).members();
                    let h = set_hull(members);
                    match groups.iter_mut().find(|(k, _)| *k == h) {
                        Some((_, u)) => u.union_with(members),
                        None => groups.push((h, members.clone())),
                    }
                }
                groups.sort_by_key(|(h, _)| *h);
                groups
            })
            .collect();
        SubHulls { from_subsets: false, per_ideal }
    }
}
