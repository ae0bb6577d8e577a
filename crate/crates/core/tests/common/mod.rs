//! Brute-force oracles built from the addition and multiplication tables
//! alone, plus a pool of small rings for exhaustive and property tests.

#![allow(dead_code)]

use hyideal_core::{parse_ring_dsl, Element, ElementSet, PointSet, RingContext, RingSpec};

/// Small rings covering fields, local rings, products and non-reduced cases.
pub const POOL: &[&str] = &[
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Z9",
    "Z10",
    "Z11",
    "Z12",
    "Z13",
    "Z14",
    "Z15",
    "Z16",
    "Z2 x Z2",
    "Z2 x Z3",
    "Z2 x Z4",
    "Z3 x Z3",
    "Z2 x Z2 x Z2",
    "Z4 x Z4",
    "Z2 x Z6",
    "Z2 x Z2 x Z3",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "Z2[x]/(x^2)",
    "Z3[x]/(x^2)",
    "Z2[x]/(x^3)",
    "Z2[x]/(x^2+x)",
    "Z4[x]/(x^2+x+1)",
    "Z2 x GF(4)",
    "Z2 x Z2[x]/(x^2)",
    "Z2[x]/(x^4)",
];

pub fn spec(dsl: &str) -> RingSpec {
    parse_ring_dsl(dsl).unwrap()
}

pub fn ctx(dsl: &str) -> RingContext {
    RingContext::new(&spec(dsl)).unwrap()
}

pub fn pool_contexts() -> Vec<RingContext> {
    POOL.iter().map(|d| ctx(d)).collect()
}

type Mask = u64;

fn bits(m: Mask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| m >> i & 1 == 1)
}

fn subsets(m: Mask) -> impl Iterator<Item = Mask> {
    let mut sub = Some(0u64);
    std::iter::from_fn(move || {
        let cur = sub?;
        sub = if cur == m { None } else { Some((cur.wrapping_sub(m)) & m) };
        Some(cur)
    })
}

pub fn mask_of(s: &ElementSet) -> Mask {
    s.iter().map(|i| 1u64 << i).sum()
}

/// Tables copied out of a ring, and everything derived from them by search.
pub struct Oracle {
    pub n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    pub ideals: Vec<Mask>,
    pub primes: Vec<Mask>,
}

impl Oracle {
    /// Enumerates ideals as the subsets closed under addition, negation and
    /// multiplication by ring elements. Only for `n ≤ 16`.
    pub fn new(ctx: &RingContext) -> Oracle {
        let r = ctx.ring();
        let n = r.size();
        assert!(n <= 16, "subset oracle needs n ≤ 16");
        let e = |i: usize| Element(i as u32);
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = r.add(e(a), e(b)).index();
                mul[a * n + b] = r.mul(e(a), e(b)).index();
            }
        }
        let zero = r.zero().index();
        let mut o = Oracle { n, add, mul, zero, ideals: Vec::new(), primes: Vec::new() };
        o.ideals = (0..1u64 << n).filter(|&s| o.is_ideal(s)).collect();
        o.primes = o.ideals.iter().copied().filter(|&p| o.is_prime(p)).collect();
        o
    }

    pub fn full(&self) -> Mask {
        (1u64 << self.n) - 1
    }

    fn has(s: Mask, i: usize) -> bool {
        s >> i & 1 == 1
    }

    fn is_ideal(&self, s: Mask) -> bool {
        if !Self::has(s, self.zero) {
            return false;
        }
        // additive closure gives a subgroup in a finite group
        for a in bits(s) {
            for b in bits(s) {
                if !Self::has(s, self.add[a * self.n + b]) {
                    return false;
                }
            }
            for r in 0..self.n {
                if !Self::has(s, self.mul[r * self.n + a]) {
                    return false;
                }
            }
        }
        true
    }

    fn is_prime(&self, p: Mask) -> bool {
        if p == self.full() {
            return false;
        }
        (0..self.n)
            .all(|a| (0..self.n).all(|b| !Self::has(p, self.mul[a * self.n + b]) || Self::has(p, a) || Self::has(p, b)))
    }

    pub fn principal(&self, a: usize) -> Mask {
        (0..self.n).map(|r| 1u64 << self.mul[r * self.n + a]).fold(0, |x, y| x | y)
    }

    /// The subspace from a bitmask over `self.primes`.
    pub fn y_of(&self, sel: u64) -> Vec<Mask> {
        self.primes.iter().enumerate().filter(|(k, _)| sel >> k & 1 == 1).map(|(_, &p)| p).collect()
    }

    /// The same subspace as a library point set.
    pub fn points(&self, ctx: &RingContext, y: &[Mask]) -> PointSet {
        PointSet::from_indices(
            (0..ctx.num_points()).filter(|&p| y.contains(&mask_of(ctx.ideal(ctx.prime(p)).members()))),
        )
    }

    /// `kh_Y(S)`: intersection of the members of `Y` containing `S`.
    pub fn kh(&self, y: &[Mask], s: Mask) -> Mask {
        y.iter().filter(|&&p| s & p == s).fold(self.full(), |k, &p| k & p)
    }

    pub fn is_hy(&self, y: &[Mask], i: Mask) -> bool {
        bits(i).all(|a| self.kh(y, 1 << a) & !i == 0)
    }

    /// Every finite subset of `I`, which for a finite ring is every subset.
    pub fn is_strong(&self, y: &[Mask], i: Mask) -> bool {
        subsets(i).all(|f| self.kh(y, f) & !i == 0)
    }

    pub fn hyj(&self, y: &[Mask], i: Mask, j: Mask) -> bool {
        bits(i).all(|a| self.kh(y, 1 << a) & j & !i == 0)
    }

    pub fn strong_hyj(&self, y: &[Mask], i: Mask, j: Mask) -> bool {
        subsets(i).all(|f| self.kh(y, f) & j & !i == 0)
    }

    /// Least member of the family containing `i`, found as the member equal
    /// to the intersection of all members above `i`.
    pub fn least_above(&self, i: Mask, family: impl Fn(Mask) -> bool) -> Option<Mask> {
        let above: Vec<Mask> = self.ideals.iter().copied().filter(|&k| k & i == i && family(k)).collect();
        let meet = above.iter().fold(self.full(), |m, &k| m & k);
        above.contains(&meet).then_some(meet)
    }

    pub fn relative(&self, y: &[Mask], i: Mask, strong: bool) -> bool {
        self.ideals.iter().any(|&j| j & !i != 0 && if strong { self.strong_hyj(y, i, j) } else { self.hyj(y, i, j) })
    }

    pub fn radical(&self, i: Mask) -> Mask {
        self.primes.iter().filter(|&&p| p & i == i).fold(self.full(), |k, &p| k & p)
    }
}

/// Lattice index of the library ideal with the given members.
pub fn lat_idx(ctx: &RingContext, m: Mask) -> usize {
    let members = ElementSet::from_indices(ctx.ring().size(), bits(m));
    ctx.lattice().index_of(&members).expect("oracle ideal is in the lattice")
}
