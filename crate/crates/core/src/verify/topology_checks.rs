//! Checks on fixed ideals, filters and compactness.

use serde_json::json;

use crate::hy::generated_subring;
use crate::report::{CheckReport, Verdict};
use crate::sets::ElementSet;

use super::Env;

pub fn eq_hy(env: &Env) -> CheckReport {
    env.report("EQ.hy", "", |t| {
        for i in 0..env.len() {
            let p = env.y.hy_profile_idx(i);
            let def = env.y.is_hy_idx(i);
            t.check(
                p.is_uniform() && p.all_hold() == def,
                || json!({"I": env.name(i), "definition": def, "profile": p.summary()}),
            );
        }
    })
}

pub fn eq_strong(env: &Env) -> CheckReport {
    env.report("EQ.strong", "", |t| {
        for i in 0..env.len() {
            let p = env.y.strong_profile_idx(i);
            let def = env.y.is_strong_idx(i);
            t.check(
                p.is_uniform() && p.all_hold() == def,
                || json!({"I": env.name(i), "definition": def, "profile": p.summary()}),
            );
        }
    })
}

pub fn p3_2(env: &Env) -> CheckReport {
    let y = &env.y;
    env.report("P3.2", "", |t| {
        for i in 0..env.len() {
            let meet = y.filter_idx(i).intersection(y.points());
            let hull = y.hull_idx(i);
            t.check(meet == hull && y.is_fixed_idx(i) == !meet.is_empty(), || {
                json!({"I": env.name(i), "filter_meet": env.ctx().points_label(meet),
                       "hull": env.ctx().points_label(hull)})
            });
        }
    })
}

pub fn c3_3a(env: &Env) -> CheckReport {
    let whole = env.ctx().lattice().whole_index();
    env.report("C3.3a", "a proper Y-Hilbert ideal", |t| {
        for i in 0..env.len() {
            if i != whole && env.y.is_y_hilbert(env.ctx().ideal(i)) {
                t.check(env.y.is_fixed_idx(i), || json!({"I": env.name(i)}));
            }
        }
    })
}

pub fn c3_3b(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    env.report("C3.3b", "", |t| {
        for i in 0..env.len() {
            let set = env.y.hy_inverse_image_set(i);
            match ctx.lattice().index_of(&set) {
                Some(j) => t.check(
                    env.y.is_fixed_idx(i) == env.y.is_fixed_idx(j),
                    || json!({"I": env.name(i), "inverse_image": env.name(j)}),
                ),
                None => t.fail(json!({"I": env.name(i), "inverse_image_not_ideal": set.to_vec()})),
            }
        }
    })
}

pub fn c3_3c(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let union = env.y.union_of_points();
    env.report("C3.3c", "", |t| {
        for i in 0..env.len() {
            let is_r = env.y.hy_inverse_image_set(i).is_full();
            let outside = !ctx.ideal(i).members().is_subset(&union);
            t.check(is_r == outside, || json!({"I": env.name(i), "image_is_R": is_r, "outside_union": outside}));
        }
    })
}

pub fn c3_4(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    env.report("C3.4", "", |t| {
        let mut got = env.y.maximal_fixed();
        got.sort_unstable();
        let mut want = ctx.prime_indices(ctx.maxl(env.y.points()));
        want.sort_unstable();
        t.check(got == want, || {
            json!({"maximal_fixed": got.iter().map(|&i| env.name(i)).collect::<Vec<_>>(),
                   "maxl_Y": want.iter().map(|&i| env.name(i)).collect::<Vec<_>>()})
        });
    })
}

pub fn t3_5(env: &Env) -> CheckReport {
    env.y.verify_compactness_equivalents()
}

pub fn c3_6(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let y = env.y.points();
    env.report("C3.6", "Y ⊆ Min(R) and k(Y) = 0", |t| {
        if y.is_subset(ctx.min_primes()) && ctx.kernel_idx(y) == ctx.lattice().zero_index() {
            let b = ctx.bourbaki(ctx.lattice().zero_index());
            t.check(b.is_subset(y), || json!({"B(R)": ctx.points_label(b)}));
        }
    })
}

pub fn t3_7(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    env.report("T3.7", "", |t| match env.y.compactification() {
        Err(e) => t.fail(json!({"error": e.to_string()})),
        Ok(z) => {
            let zp = z.points();
            t.check(env.y.points().is_subset(zp), || json!({"Z": ctx.points_label(zp)}));
            let dense = z.closure(env.y.points()).map(|c| c.points() == zp).unwrap_or(false);
            t.check(dense, || json!({"Z": ctx.points_label(zp), "Y_not_dense": true}));
            let outside = z.maxl_pshy_idx().into_iter().find(|&m| ctx.point_of(m).is_none_or(|p| !zp.contains(p)));
            t.check(
                outside.is_none(),
                || json!({"Z": ctx.points_label(zp), "maximal_strong_outside_Z": outside.map(|m| env.name(m))}),
            );
        }
    })
}

pub fn t3_9(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    env.report("T3.9", "", |t| {
        for s in env.y.points().subsets() {
            let sub = env.y.sub(s).expect("subset of Y");
            for i in 0..env.len() {
                let wrt = env.y.is_fixed_wrt(ctx.ideal(i), s).expect("subset of Y");
                t.check(wrt == sub.is_fixed_idx(i), || json!({"I": env.name(i), "S": ctx.points_label(s)}));
            }
        }
    })
}

pub fn c3_10(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let maxl = ctx.maxl(env.y.points());
    env.report("C3.10", "", |t| {
        for s in env.y.points().subsets() {
            let mut got = env.y.maximal_fixed_wrt(s).expect("subset of Y");
            got.sort_unstable();
            let mut want = ctx.prime_indices(maxl.intersection(s));
            want.sort_unstable();
            t.check(got == want, || {
                json!({"S": ctx.points_label(s),
                       "maximal_fixed": got.iter().map(|&i| env.name(i)).collect::<Vec<_>>()})
            });
        }
    })
}

/// Subrings generated by `1` and one further element, without repeats.
fn single_generator_subrings(env: &Env) -> Vec<ElementSet> {
    let ring = env.ctx().ring();
    let mut subs: Vec<ElementSet> = Vec::new();
    for a in ring.elements() {
        let s = generated_subring(ring, &[a]);
        if !subs.contains(&s) {
            subs.push(s);
        }
    }
    subs
}

pub fn p3_11(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    env.report("P3.11", "I is H_Y-fixed", |t| {
        for sub in single_generator_subrings(env) {
            for i in 0..env.len() {
                if !env.y.is_fixed_idx(i) {
                    continue;
                }
                match env.y.subring_restriction_check(&sub, ctx.ideal(i)) {
                    Ok(r) if r.verdict == Verdict::Fail => {
                        t.fail(json!({"subring": sub.to_vec(), "detail": r.witness}))
                    }
                    Ok(_) => t.check(true, || json!(null)),
                    Err(e) => t.fail(json!({"subring": sub.to_vec(), "I": env.name(i), "error": e.to_string()})),
                }
            }
        }
    })
}
