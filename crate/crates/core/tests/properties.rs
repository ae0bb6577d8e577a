//! Structural invariants of rings, lattices, the spectrum, the hull-kernel
//! calculus and H_Y-ideals.

mod common;

use common::{ctx, spec, POOL};
use hyideal_core::{
    build_ring, ideal_generate, CorpusFile, Element, ElementSet, PointSet, RingContext, RingSpec, SubSpace,
};
use proptest::prelude::*;

fn corpus_and_pool() -> Vec<RingContext> {
    let mut v = CorpusFile::default_corpus().contexts(&Default::default()).unwrap();
    v.extend(common::pool_contexts());
    v
}

fn subspace(c: &RingContext, mask: u64) -> SubSpace<'_> {
    SubSpace::new(c, PointSet(mask).intersection(c.spec())).unwrap()
}

#[test]
fn ring_axioms_hold_exhaustively() {
    for c in corpus_and_pool() {
        let r = c.ring();
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(r.mul(a, b), r.mul(b, a));
                for x in r.elements() {
                    assert_eq!(r.add(r.add(a, b), x), r.add(a, r.add(b, x)));
                    assert_eq!(r.mul(a, r.add(b, x)), r.add(r.mul(a, b), r.mul(a, x)));
                }
            }
        }
    }
}

#[test]
fn lattice_order_of_operations() {
    for c in corpus_and_pool() {
        let (lat, ring) = (c.lattice(), c.ring());
        for i in 0..lat.len() {
            assert_eq!(lat.radical(lat.radical(i)), lat.radical(i));
            for j in 0..lat.len() {
                let (p, m, s) = (lat.product(i, j, ring), lat.meet(i, j), lat.join(i, j));
                assert!(lat.leq(p, m) && lat.leq(m, i) && lat.leq(i, s));
                assert_eq!(lat.radical(m), lat.meet(lat.radical(i), lat.radical(j)));
            }
            for a in ring.elements() {
                let pa = c.ideal(lat.principal(a));
                assert_eq!(c.ideal(i).colon_ideal(pa, ring).unwrap(), c.ideal(i).colon(a, ring));
            }
        }
    }
}

#[test]
fn spectrum_invariants() {
    for c in corpus_and_pool() {
        let lat = c.lattice();
        assert_eq!(c.min_primes(), c.min_over(lat.zero_index()));
        for i in 0..lat.len() {
            assert_eq!(c.kernel_idx(c.min_over(i)), lat.radical(i));
            for p in c.prime_indices(c.bourbaki(i)) {
                assert!(lat.leq(i, p));
                assert!(c.point_of(p).is_some());
            }
        }
        if let Ok(aff) = c.affiliated_primes() {
            for p in aff {
                assert!(hyideal_core::is_prime(c.ring(), c.ideal(p)));
            }
        }
        let reduced = lat.radical(lat.zero_index()) == lat.zero_index();
        assert_eq!(c.kernel_idx(c.min_primes()) == lat.zero_index(), reduced);
    }
}

#[test]
fn build_is_deterministic() {
    for d in POOL {
        let (a, b) = (build_ring(&spec(d)).unwrap(), build_ring(&spec(d)).unwrap());
        assert_eq!(a.to_table_spec(), b.to_table_spec());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn product_regular_iff_factors_are(a in 0..POOL.len(), b in 0..POOL.len()) {
        let (sa, sb) = (spec(POOL[a]), spec(POOL[b]));
        let prod = RingSpec::Product(vec![sa.clone(), sb.clone()]);
        prop_assume!(prod.size().unwrap() <= 256);
        let lhs = build_ring(&prod).unwrap().is_regular();
        let rhs = build_ring(&sa).unwrap().is_regular() && build_ring(&sb).unwrap().is_regular();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hull_and_kernel_reverse_inclusion(r in 0..POOL.len(), ym in any::<u64>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let c = ctx(POOL[r]);
        let y = subspace(&c, ym);
        let lat = c.lattice();
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                if lat.leq(i, j) {
                    prop_assert!(y.hull_idx(j).is_subset(y.hull_idx(i)));
                }
            }
        }
        let (a, b) = (PointSet(s1).intersection(y.points()), PointSet(s2).intersection(y.points()));
        if a.is_subset(b) {
            prop_assert!(lat.leq(c.kernel_idx(b), c.kernel_idx(a)));
        }
    }

    #[test]
    fn closure_is_kuratowski(r in 0..POOL.len(), ym in any::<u64>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let c = ctx(POOL[r]);
        let y = subspace(&c, ym);
        let cl = |s: PointSet| y.closure(s).unwrap().points();
        let (a, b) = (PointSet(s1).intersection(y.points()), PointSet(s2).intersection(y.points()));
        prop_assert!(cl(PointSet::EMPTY).is_empty());
        prop_assert_eq!(cl(cl(a)), cl(a));
        prop_assert!(a.is_subset(cl(a)));
        if a.is_subset(b) {
            prop_assert!(cl(a).is_subset(cl(b)));
        }
        prop_assert_eq!(cl(a.union(b)), cl(a).union(cl(b)));
        let lat = c.lattice();
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                prop_assert_eq!(y.hull_idx(i).union(y.hull_idx(j)), y.hull_idx(lat.meet(i, j)));
            }
        }
    }

    #[test]
    fn kernel_of_hull_contains_ideal(r in 0..POOL.len(), ym in any::<u64>()) {
        let c = ctx(POOL[r]);
        let y = subspace(&c, ym);
        let lat = c.lattice();
        for i in 0..lat.len() {
            let kh = c.kernel_idx(y.hull_idx(i));
            prop_assert!(lat.leq(i, kh));
            prop_assert_eq!(kh == i, y.is_y_hilbert(c.ideal(i)));
        }
    }

    #[test]
    fn hull_of_set_is_hull_of_generated_ideal(r in 0..POOL.len(), ym in any::<u64>(), sm in any::<u64>()) {
        let c = ctx(POOL[r]);
        let y = subspace(&c, ym);
        let n = c.ring().size();
        let s = ElementSet::from_indices(n, (0..n).filter(|k| sm >> k & 1 == 1));
        let gens: Vec<Element> = s.elements().collect();
        let generated = ideal_generate(c.ring(), &gens);
        prop_assert_eq!(y.hull(&s), y.hull_ideal(&generated));
    }

    #[test]
    fn hy_families(r in 0..POOL.len(), ym in any::<u64>()) {
        let c = ctx(POOL[r]);
        let y = subspace(&c, ym);
        let lat = c.lattice();
        for i in 0..lat.len() {
            if y.is_strong_idx(i) {
                prop_assert!(y.is_hy_idx(i));
            }
            let (h, sh) = (y.hy_closure_idx(i), y.strong_closure_idx(i));
            prop_assert!(lat.leq(i, lat.radical(i)) && lat.leq(lat.radical(i), h) && lat.leq(h, sh));
            prop_assert_eq!(y.hy_closure_idx(h), h);
            prop_assert!(y.is_hy_idx(h) && y.is_strong_idx(sh));
            prop_assert_eq!(y.is_fixed_idx(i), y.is_fixed_wrt(c.ideal(i), y.points()).unwrap());
            for j in 0..lat.len() {
                let m = lat.meet(i, j);
                if y.is_hy_idx(i) && y.is_hy_idx(j) {
                    prop_assert!(y.is_hy_idx(m));
                }
                if y.is_strong_idx(i) && y.is_strong_idx(j) {
                    prop_assert!(y.is_strong_idx(m));
                }
                if lat.leq(i, j) {
                    prop_assert!(lat.leq(h, y.hy_closure_idx(j)));
                }
                for strong in [false, true] {
                    if y.hyj(i, j, strong) {
                        prop_assert!(y.hyj(i, lat.join(i, j), strong));
                    }
                }
            }
        }
        if !y.is_empty() {
            for m in y.maxl_pshy_idx() {
                prop_assert!(c.point_of(m).is_some_and(|p| y.points().contains(p)));
            }
        }
    }

    #[test]
    fn equivalence_profiles_are_uniform(r in 0..POOL.len(), ym in any::<u64>()) {
        let c = ctx(POOL[r]);
        let y = subspace(&c, ym);
        for i in 0..c.lattice().len() {
            let (p, s) = (y.hy_profile_idx(i), y.strong_profile_idx(i));
            prop_assert!(p.is_uniform() && s.is_uniform());
            prop_assert_eq!(p.all_hold(), y.is_hy_idx(i));
            prop_assert_eq!(s.all_hold(), y.is_strong_idx(i));
        }
    }

    #[test]
    fn hyj_is_meet_closed_in_both_arguments(r in 0..POOL.len(), ym in any::<u64>()) {
        let c = ctx(POOL[r]);
        let y = subspace(&c, ym);
        let lat = c.lattice();
        let n = lat.len();
        for strong in [false, true] {
            for i1 in 0..n {
                for j1 in (0..n).filter(|&j| y.hyj(i1, j, strong)) {
                    for i2 in 0..n {
                        if y.hyj(i2, j1, strong) {
                            prop_assert!(y.hyj(lat.meet(i1, i2), j1, strong));
                        }
                        for j2 in (0..n).filter(|&j| y.hyj(i2, j, strong)) {
                            prop_assert!(y.hyj(lat.meet(i1, i2), lat.meet(j1, j2), strong));
                        }
                    }
                }
            }
        }
    }
}
