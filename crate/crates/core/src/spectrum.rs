//! Prime, maximal and minimal ideals; Bourbaki and affiliated primes.

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::ideal::{annihilator, Ideal};
use crate::ring::FiniteRing;
use crate::sets::{Element, PointSet};

/// Proper, and `a b ∉ I` whenever `a, b ∉ I`.
pub fn is_prime(ring: &FiniteRing, ideal: &Ideal) -> bool {
    if ideal.is_whole() {
        return false;
    }
    let outside: Vec<Element> = ring.elements().filter(|&a| !ideal.contains(a)).collect();
    outside.iter().all(|&a| outside.iter().all(|&b| !ideal.contains(ring.mul(a, b))))
}

impl RingContext {
    /// Every prime, as a spectrum position set.
    pub fn spec(&self) -> PointSet {
        self.all_points()
    }

    pub fn spec_ideals(&self) -> Vec<&Ideal> {
        self.primes.iter().map(|&i| self.ideal(i)).collect()
    }

    fn extremal(&self, s: PointSet, maximal: bool) -> PointSet {
        let lat = self.lattice();
        PointSet::from_indices(s.iter().filter(|&p| {
            s.iter().all(|q| {
                q == p
                    || if maximal {
                        !lat.leq(self.prime(p), self.prime(q))
                    } else {
                        !lat.leq(self.prime(q), self.prime(p))
                    }
            })
        }))
    }

    pub fn max_ideals(&self) -> PointSet {
        self.extremal(self.spec(), true)
    }

    pub fn min_primes(&self) -> PointSet {
        self.extremal(self.spec(), false)
    }

    /// Inclusion-maximal points of `s`.
    pub fn maxl(&self, s: PointSet) -> PointSet {
        self.extremal(s, true)
    }

    /// Primes minimal over the ideal at lattice index `i`.
    pub fn min_over(&self, i: usize) -> PointSet {
        let lat = self.lattice();
        let above = PointSet::from_indices((0..self.num_points()).filter(|&p| lat.leq(i, self.prime(p))));
        self.extremal(above, false)
    }

    /// `B(I)`: primes of the form `(I : x)`.
    pub fn bourbaki(&self, i: usize) -> PointSet {
        let ring = self.ring();
        let ideal = self.ideal(i);
        let mut out = PointSet::EMPTY;
        for x in ring.elements() {
            let c = ideal.colon(x, ring);
            if let Some(p) = self.lattice().index_of(c.members()).and_then(|ci| self.point_of(ci)) {
                out = out.union(PointSet::singleton(p));
            }
        }
        out
    }

    /// Semi-prime `I` with `I = ⋂ B(I)`.
    pub fn is_fixed_place(&self, i: usize) -> Result<bool> {
        if self.lattice().radical(i) != i {
            return Err(Error::NotSemiprime(self.ideal(i).members().to_vec()));
        }
        Ok(self.kernel_idx(self.bourbaki(i)) == i)
    }

    /// Annihilators of nonzero elements that are maximal among such annihilators.
    /// Each is checked to be prime.
    pub fn affiliated_primes(&self) -> Result<Vec<usize>> {
        let ring = self.ring();
        let lat = self.lattice();
        let mut anns: Vec<usize> =
            ring.elements().filter(|&a| a != ring.zero()).map(|a| lat.idx(&annihilator(a, ring))).collect();
        anns.sort();
        anns.dedup();
        let maximal: Vec<usize> =
            anns.iter().copied().filter(|&a| anns.iter().all(|&b| b == a || !lat.leq(a, b))).collect();
        for &m in &maximal {
            if self.point_of(m).is_none() {
                return Err(Error::NonPrimeAffiliated(self.ideal(m).members().to_vec()));
            }
        }
        Ok(maximal)
    }

    /// Lattice indices of the primes in `s`.
    pub fn prime_indices(&self, s: PointSet) -> Vec<usize> {
        s.iter().map(|p| self.prime(p)).collect()
    }
}
