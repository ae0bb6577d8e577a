//! Library results against the brute-force oracles, exhaustively over the
//! ring pool and every subspace.

mod common;

use common::{lat_idx, mask_of, pool_contexts, Oracle};
use hyideal_core::{PointSet, RingContext, SubSpace};

fn lattice_masks(ctx: &RingContext) -> Vec<u64> {
    let mut v: Vec<u64> = ctx.lattice().ideals().iter().map(|i| mask_of(i.members())).collect();
    v.sort_unstable();
    v
}

/// Every subspace of the spectrum as `(oracle primes, library subspace)`.
fn all_subspaces<'a>(ctx: &'a RingContext, o: &Oracle) -> Vec<(Vec<u64>, SubSpace<'a>)> {
    (0..1u64 << o.primes.len())
        .map(|sel| {
            let y = o.y_of(sel);
            let pts = o.points(ctx, &y);
            assert_eq!(pts.len(), y.len());
            (y, SubSpace::new(ctx, pts).unwrap())
        })
        .collect()
}

#[test]
fn ideal_lattice_matches_subset_enumeration() {
    for ctx in pool_contexts() {
        let o = Oracle::new(&ctx);
        let mut want = o.ideals.clone();
        want.sort_unstable();
        assert_eq!(lattice_masks(&ctx), want, "{}", ctx.name());
    }
}

#[test]
fn spectrum_matches_prime_search() {
    for ctx in pool_contexts() {
        let o = Oracle::new(&ctx);
        let mut got: Vec<u64> = (0..ctx.num_points()).map(|p| mask_of(ctx.ideal(ctx.prime(p)).members())).collect();
        got.sort_unstable();
        let mut want = o.primes.clone();
        want.sort_unstable();
        assert_eq!(got, want, "{}", ctx.name());
        for (i, ideal) in ctx.lattice().ideals().iter().enumerate() {
            assert_eq!(mask_of(ctx.ideal(ctx.lattice().radical(i)).members()), o.radical(mask_of(ideal.members())));
        }
    }
}

#[test]
fn hy_and_strong_match_definitions() {
    for ctx in pool_contexts() {
        let o = Oracle::new(&ctx);
        for (y, space) in all_subspaces(&ctx, &o) {
            for &m in &o.ideals {
                let i = lat_idx(&ctx, m);
                assert_eq!(space.is_hy_idx(i), o.is_hy(&y, m), "{} {} I={m:b}", ctx.name(), space.label());
                if ctx.ring().size() <= 12 {
                    assert_eq!(space.is_strong_idx(i), o.is_strong(&y, m), "{} I={m:b}", ctx.name());
                }
            }
        }
    }
}

#[test]
fn closures_are_lattice_minima() {
    for ctx in pool_contexts() {
        let o = Oracle::new(&ctx);
        for (y, space) in all_subspaces(&ctx, &o) {
            for &m in &o.ideals {
                let i = lat_idx(&ctx, m);
                let plain = o.least_above(m, |k| o.is_hy(&y, k)).expect("H_Y-ideals are meet-closed");
                assert_eq!(space.hy_closure_idx(i), lat_idx(&ctx, plain));
                if ctx.ring().size() <= 12 {
                    let strong = o.least_above(m, |k| o.is_strong(&y, k)).expect("meet-closed");
                    assert_eq!(space.strong_closure_idx(i), lat_idx(&ctx, strong));
                }
            }
        }
    }
}

#[test]
fn hyj_matches_definition() {
    for ctx in pool_contexts().into_iter().filter(|c| c.ring().size() <= 12) {
        let o = Oracle::new(&ctx);
        for (y, space) in all_subspaces(&ctx, &o) {
            for &mi in &o.ideals {
                for &mj in &o.ideals {
                    let (i, j) = (lat_idx(&ctx, mi), lat_idx(&ctx, mj));
                    assert_eq!(space.is_hyj_idx(i, j), o.hyj(&y, mi, mj));
                    assert_eq!(space.is_strong_hyj_idx(i, j), o.strong_hyj(&y, mi, mj));
                }
            }
        }
    }
}

#[test]
fn relative_routes_agree_with_exhaustive_search() {
    for ctx in pool_contexts().into_iter().filter(|c| c.ring().size() <= 12) {
        let o = Oracle::new(&ctx);
        for (y, space) in all_subspaces(&ctx, &o) {
            for &m in &o.ideals {
                let i = lat_idx(&ctx, m);
                for strong in [false, true] {
                    let d = space.relative_decision(i, strong);
                    assert!(d.routes_agree(), "{} {} I={m:b}", ctx.name(), space.label());
                    assert_eq!(d.is_relative(), o.relative(&y, m, strong));
                }
            }
        }
    }
}

#[test]
fn fixed_means_nonempty_hull() {
    for ctx in pool_contexts() {
        let o = Oracle::new(&ctx);
        for (y, space) in all_subspaces(&ctx, &o) {
            for &m in &o.ideals {
                let fixed = y.iter().any(|&p| p & m == m);
                assert_eq!(space.is_fixed_idx(lat_idx(&ctx, m)), fixed);
            }
            assert!(space.points().is_subset(PointSet::first_n(ctx.num_points())));
        }
    }
}
