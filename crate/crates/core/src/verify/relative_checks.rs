//! Checks on H_YJ-ideals, relative ideals and their factors.

use serde_json::{json, Value};

use crate::error::Error;
use crate::ideal::IdealLattice;
use crate::report::{CheckReport, Tally, Verdict};
use crate::zariski::SubSpace;

use super::Env;

/// `hyj`, membership of the H_Y family, closures and relativity for one
/// variant, tabulated once per instance.
struct Tables {
    n: usize,
    hyj: Vec<bool>,
    family: Vec<bool>,
    closure: Vec<usize>,
}

impl Tables {
    fn new(y: &SubSpace, strong: bool) -> Tables {
        let n = y.ctx().lattice().len();
        let mut hyj = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                hyj[i * n + j] = y.hyj(i, j, strong);
            }
        }
        Tables {
            n,
            hyj,
            family: (0..n).map(|i| y.is_hy_family(i, strong)).collect(),
            closure: (0..n).map(|i| y.closure_family(i, strong)).collect(),
        }
    }

    fn hyj(&self, i: usize, j: usize) -> bool {
        self.hyj[i * self.n + j]
    }

    fn relative(&self, lat: &IdealLattice, i: usize) -> bool {
        (0..self.n).any(|j| !lat.leq(j, i) && self.hyj(i, j))
    }
}

/// Runs `body` for both variants, tagging every witness with the variant.
fn both(env: &Env, id: &str, premise: &str, body: impl Fn(&mut Tally, &Tables, bool)) -> CheckReport {
    env.report(id, premise, |t| {
        for strong in [false, true] {
            let tables = Tables::new(&env.y, strong);
            let mut inner = Tally::default();
            body(&mut inner, &tables, strong);
            t.hits += inner.hits;
            if let Some(w) = inner.failure {
                if t.failure.is_none() {
                    t.failure = Some(json!({"strong": strong, "detail": w}));
                }
            }
        }
    })
}

fn names(env: &Env, ix: &[usize]) -> Value {
    json!(ix.iter().map(|&i| env.name(i)).collect::<Vec<_>>())
}

fn maximal(lat: &IdealLattice, family: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> =
        family.iter().copied().filter(|&i| family.iter().all(|&j| j == i || !lat.leq(i, j))).collect();
    out.sort_unstable();
    out
}

fn primes(env: &Env) -> Vec<usize> {
    env.ctx().prime_indices(env.ctx().spec())
}

pub fn p4_2a(env: &Env) -> CheckReport {
    let (plain, strong) = (Tables::new(&env.y, false), Tables::new(&env.y, true));
    env.report("P4.2a", "I is a strong H_YJ-ideal", |t| {
        for i in 0..env.len() {
            for j in 0..env.len() {
                if strong.hyj(i, j) {
                    t.check(plain.hyj(i, j), || json!({"I": env.name(i), "J": env.name(j)}));
                }
            }
        }
    })
}

pub fn p4_2b(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let (plain, strong) = (Tables::new(&env.y, false), Tables::new(&env.y, true));
    env.report("P4.2b", "I is relative strong", |t| {
        for i in 0..env.len() {
            if strong.relative(lat, i) {
                t.check(plain.relative(lat, i), || json!({"I": env.name(i)}));
            }
        }
    })
}

pub fn p4_2c(env: &Env) -> CheckReport {
    let strong = Tables::new(&env.y, true);
    env.report("P4.2c", "", |t| {
        for i in 0..env.len() {
            t.check(strong.hyj(i, i), || json!({"I": env.name(i)}));
        }
    })
}

pub fn p4_2d(env: &Env) -> CheckReport {
    both(env, "P4.2d", "I is an H_Y-ideal", |t, tb, _| {
        for i in 0..tb.n {
            if tb.family[i] {
                let bad = (0..tb.n).find(|&j| !tb.hyj(i, j));
                t.check(bad.is_none(), || json!({"I": env.name(i), "J": bad.map(|j| env.name(j))}));
            }
        }
    })
}

pub fn p4_2e(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let whole = lat.whole_index();
    both(env, "P4.2e", "I is a proper H_Y-ideal", |t, tb, _| {
        for i in 0..tb.n {
            if i != whole && tb.family[i] {
                t.check(tb.relative(lat, i), || json!({"I": env.name(i)}));
            }
        }
    })
}

pub fn p4_2f(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.2f", "J is an H_Y-ideal and I ⊆ J is H_YJ", |t, tb, _| {
        for j in 0..tb.n {
            if !tb.family[j] {
                continue;
            }
            for i in 0..tb.n {
                if lat.leq(i, j) && tb.hyj(i, j) {
                    t.check(tb.family[i], || json!({"I": env.name(i), "J": env.name(j)}));
                }
            }
        }
    })
}

pub fn t4_3a(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    both(env, "T4.3a", "I is an H_YJ-ideal", |t, tb, _| {
        for i in 0..tb.n {
            for j in 0..tb.n {
                if !tb.hyj(i, j) {
                    continue;
                }
                let bad = ctx.prime_indices(ctx.min_over(i)).into_iter().find(|&p| !tb.hyj(p, j));
                t.check(bad.is_none(), || json!({"I": env.name(i), "J": env.name(j), "P": bad.map(|p| env.name(p))}));
            }
        }
    })
}

pub fn t4_3b(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let ps = primes(env);
    both(env, "T4.3b", "", |t, tb, _| {
        for &p in &ps {
            for j in 0..tb.n {
                let rhs = tb.family[p] || lat.leq(j, p);
                t.check(tb.hyj(p, j) == rhs, || json!({"P": env.name(p), "J": env.name(j)}));
            }
        }
    })
}

pub fn t4_3c(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let lat = ctx.lattice();
    both(env, "T4.3c", "I is relative", |t, tb, _| {
        for i in 0..tb.n {
            if tb.relative(lat, i) {
                let min = ctx.prime_indices(ctx.min_over(i));
                t.check(min.iter().any(|&p| tb.family[p]), || json!({"I": env.name(i), "Min(I)": names(env, &min)}));
            }
        }
    })
}

pub fn t4_4(env: &Env) -> CheckReport {
    both(env, "T4.4", "", |t, tb, strong| {
        for i in 0..tb.n {
            for j in 0..tb.n {
                let p = env.y.hyj_profile_idx(i, j, strong);
                t.check(
                    p.is_uniform() && p.all_hold() == tb.hyj(i, j),
                    || json!({"I": env.name(i), "J": env.name(j), "profile": p.summary()}),
                );
            }
        }
    })
}

pub fn p4_5a(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5a", "I_α is H_YJ_α for both pairs", |t, tb, _| {
        let pairs: Vec<(usize, usize)> =
            (0..tb.n).flat_map(|i| (0..tb.n).map(move |j| (i, j))).filter(|&(i, j)| tb.hyj(i, j)).collect();
        for &(i1, j1) in &pairs {
            for &(i2, j2) in &pairs {
                let (i, j) = (lat.meet(i1, i2), lat.meet(j1, j2));
                t.check(
                    tb.hyj(i, j),
                    || json!({"I1": env.name(i1), "J1": env.name(j1), "I2": env.name(i2), "J2": env.name(j2)}),
                );
            }
        }
    })
}

pub fn p4_5b(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5b", "J ⊆ K and I is H_YK", |t, tb, _| {
        for i in 0..tb.n {
            for k in 0..tb.n {
                if !tb.hyj(i, k) {
                    continue;
                }
                for j in (0..tb.n).filter(|&j| lat.leq(j, k)) {
                    t.check(tb.hyj(i, j), || json!({"I": env.name(i), "J": env.name(j), "K": env.name(k)}));
                }
            }
        }
    })
}

pub fn p4_5c(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5c", "I and K are H_YJ", |t, tb, _| {
        for j in 0..tb.n {
            let members: Vec<usize> = (0..tb.n).filter(|&i| tb.hyj(i, j)).collect();
            for &a in &members {
                for &b in &members {
                    t.check(
                        tb.hyj(lat.meet(a, b), j),
                        || json!({"I": env.name(a), "K": env.name(b), "J": env.name(j)}),
                    );
                }
            }
        }
    })
}

pub fn p4_5d(env: &Env) -> CheckReport {
    both(env, "P4.5d", "I is H_YJ and J is H_YK", |t, tb, _| {
        for i in 0..tb.n {
            for j in (0..tb.n).filter(|&j| tb.hyj(i, j)) {
                for k in (0..tb.n).filter(|&k| tb.hyj(j, k)) {
                    t.check(tb.hyj(i, k), || json!({"I": env.name(i), "J": env.name(j), "K": env.name(k)}));
                }
            }
        }
    })
}

pub fn p4_5e(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5e", "I is H_YJ", |t, tb, _| {
        for i in 0..tb.n {
            for j in (0..tb.n).filter(|&j| tb.hyj(i, j)) {
                t.check(tb.hyj(lat.radical(i), lat.radical(j)), || json!({"I": env.name(i), "J": env.name(j)}));
            }
        }
    })
}

fn biconditional(env: &Env, id: &str, rhs: impl Fn(&Tables, &IdealLattice, usize, usize) -> bool) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, id, "", |t, tb, _| {
        for i in 0..tb.n {
            for j in 0..tb.n {
                let (l, r) = (tb.hyj(i, j), rhs(tb, lat, i, j));
                t.check(l == r, || json!({"I": env.name(i), "J": env.name(j), "lhs": l, "rhs": r}));
            }
        }
    })
}

pub fn p4_5f(env: &Env) -> CheckReport {
    biconditional(env, "P4.5f", |tb, lat, i, j| tb.hyj(lat.meet(i, j), j))
}

pub fn p4_5g(env: &Env) -> CheckReport {
    biconditional(env, "P4.5g", |tb, lat, i, j| tb.hyj(i, lat.join(i, j)))
}

pub fn p4_5h(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5h", "J is an H_Y-ideal and I ⊆ J", |t, tb, _| {
        for j in (0..tb.n).filter(|&j| tb.family[j]) {
            for i in (0..tb.n).filter(|&i| lat.leq(i, j)) {
                t.check(tb.hyj(i, j) == tb.family[i], || json!({"I": env.name(i), "J": env.name(j)}));
            }
        }
    })
}

pub fn p4_5i(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5i", "J is an H_Y-ideal", |t, tb, _| {
        for j in (0..tb.n).filter(|&j| tb.family[j]) {
            for i in 0..tb.n {
                t.check(tb.hyj(i, j) == tb.family[lat.meet(i, j)], || json!({"I": env.name(i), "J": env.name(j)}));
            }
        }
    })
}

pub fn p4_5j(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5j", "", |t, tb, _| {
        for i in 0..tb.n {
            for j in 0..tb.n {
                let m = lat.meet(i, j);
                let l = tb.hyj(m, i) && tb.hyj(m, j);
                let r = tb.hyj(i, j) && tb.hyj(j, i);
                t.check(l == r, || json!({"I": env.name(i), "J": env.name(j), "lhs": l, "rhs": r}));
            }
        }
    })
}

pub fn p4_5k(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5k", "", |t, tb, _| {
        for i in 0..tb.n {
            for j in 0..tb.n {
                let m = lat.meet(tb.closure[i], j);
                let base = lat.meet(i, j);
                let below = (0..tb.n).find(|&k| lat.leq(base, k) && tb.hyj(k, j) && !lat.leq(m, k));
                t.check(tb.hyj(m, j) && lat.leq(base, m) && below.is_none(), || {
                    json!({"I": env.name(i), "J": env.name(j), "I_H∩J": env.name(m),
                           "smaller": below.map(|k| env.name(k))})
                });
            }
        }
    })
}

pub fn p4_5l(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5l", "I ⊆ K, I_H = K_H and I is H_YJ", |t, tb, _| {
        for i in 0..tb.n {
            for k in (0..tb.n).filter(|&k| lat.leq(i, k) && tb.closure[k] == tb.closure[i]) {
                for j in (0..tb.n).filter(|&j| tb.hyj(i, j)) {
                    t.check(tb.hyj(k, j), || json!({"I": env.name(i), "K": env.name(k), "J": env.name(j)}));
                }
            }
        }
    })
}

pub fn p4_5m(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5m", "I ⊆ K ⊆ I_H and I is H_YJ", |t, tb, _| {
        for i in 0..tb.n {
            for k in (0..tb.n).filter(|&k| lat.leq(i, k) && lat.leq(k, tb.closure[i])) {
                for j in (0..tb.n).filter(|&j| tb.hyj(i, j)) {
                    t.check(tb.hyj(k, j), || json!({"I": env.name(i), "K": env.name(k), "J": env.name(j)}));
                }
            }
        }
    })
}

pub fn p4_5n(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.5n", "I is H_YJ", |t, tb, _| {
        for i in 0..tb.n {
            for j in (0..tb.n).filter(|&j| tb.hyj(i, j)) {
                t.check(tb.hyj(lat.radical(i), j), || json!({"I": env.name(i), "J": env.name(j)}));
            }
        }
    })
}

pub fn p4_5o(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let lat = ctx.lattice();
    let n = env.len();
    let products: Vec<usize> = (0..n * n).map(|x| lat.product(x / n, x % n, ctx.ring())).collect();
    both(env, "P4.5o", "IK is H_YJ", |t, tb, _| {
        for i in 0..n {
            for k in 0..n {
                for j in (0..n).filter(|&j| tb.hyj(products[i * n + k], j)) {
                    t.check(
                        tb.hyj(lat.meet(i, k), j),
                        || json!({"I": env.name(i), "K": env.name(k), "J": env.name(j)}),
                    );
                }
            }
        }
    })
}

pub fn p4_5p(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let ring = ctx.ring();
    let ps = primes(env);
    both(env, "P4.5p", "", |t, tb, _| {
        for i in 0..tb.n {
            let lhs = ps.iter().any(|&p| tb.hyj(i, p));
            let gap = ctx.ideal(tb.closure[i]).members().difference(ctx.ideal(i).members());
            let rhs = gap.elements().all(|a| gap.elements().all(|b| gap.contains(ring.mul(a, b).index())));
            t.check(lhs == rhs, || json!({"I": env.name(i), "some_prime_factor": lhs, "gap_closed": rhs}));
        }
    })
}

pub fn p4_5q(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let lat = ctx.lattice();
    let k0 = ctx.kernel_idx(env.y.points());
    let strong_tb = Tables::new(&env.y, true);
    both(env, "P4.5q", "J is not an H_Y-ideal and J ⊄ k(Y)", |t, tb, _| {
        for j in (0..tb.n).filter(|&j| !tb.family[j] && !lat.leq(j, k0)) {
            let found = (0..tb.n).any(|i| i != j && lat.leq(i, j) && strong_tb.hyj(i, j) && !tb.family[i]);
            t.check(found, || json!({"J": env.name(j)}));
        }
    })
}

pub fn p4_5r(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let ps = primes(env);
    both(env, "P4.5r", "I ∩ P is H_YJ", |t, tb, _| {
        for i in 0..tb.n {
            for &p in &ps {
                for j in (0..tb.n).filter(|&j| tb.hyj(lat.meet(i, p), j)) {
                    t.check(
                        tb.hyj(i, j) || tb.hyj(p, j),
                        || json!({"I": env.name(i), "P": env.name(p), "J": env.name(j)}),
                    );
                }
            }
        }
    })
}

pub fn p4_5s(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let ps = primes(env);
    both(env, "P4.5s", "incomparable primes P, Q with P ∩ Q H_YJ", |t, tb, _| {
        for &p in &ps {
            for &q in ps.iter().filter(|&&q| !lat.leq(p, q) && !lat.leq(q, p)) {
                for j in (0..tb.n).filter(|&j| tb.hyj(lat.meet(p, q), j)) {
                    t.check(
                        tb.hyj(p, j) && tb.hyj(q, j),
                        || json!({"P": env.name(p), "Q": env.name(q), "J": env.name(j)}),
                    );
                }
            }
        }
    })
}

pub fn p4_7a(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.7a", "", |t, tb, _| {
        for i in 0..tb.n {
            let above = (0..tb.n).any(|j| j != i && lat.leq(i, j) && tb.hyj(i, j));
            t.check(tb.relative(lat, i) == above, || json!({"I": env.name(i), "strictly_above": above}));
        }
    })
}

pub fn p4_7b(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.7b", "I ⊆ K, I_H = K_H and I relative", |t, tb, _| {
        for i in (0..tb.n).filter(|&i| tb.relative(lat, i)) {
            for k in (0..tb.n).filter(|&k| lat.leq(i, k) && tb.closure[k] == tb.closure[i]) {
                t.check(tb.relative(lat, k), || json!({"I": env.name(i), "K": env.name(k)}));
            }
        }
    })
}

pub fn p4_7c(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.7c", "I ⊆ K ⊆ I_H and I relative", |t, tb, _| {
        for i in (0..tb.n).filter(|&i| tb.relative(lat, i)) {
            for k in (0..tb.n).filter(|&k| lat.leq(i, k) && lat.leq(k, tb.closure[i])) {
                t.check(tb.relative(lat, k), || json!({"I": env.name(i), "K": env.name(k)}));
            }
        }
    })
}

pub fn p4_7d(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let ps = primes(env);
    both(env, "P4.7d", "I ∩ P relative", |t, tb, _| {
        for i in 0..tb.n {
            for &p in ps.iter().filter(|&&p| tb.relative(lat, lat.meet(i, p))) {
                t.check(tb.relative(lat, i) || tb.relative(lat, p), || json!({"I": env.name(i), "P": env.name(p)}));
            }
        }
    })
}

pub fn p4_7e(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    both(env, "P4.7e", "", |t, _, strong| {
        for i in 0..env.len() {
            let d = env.y.relative_decision(i, strong);
            t.check(d.routes_agree(), || {
                json!({"I": env.name(i), "factor": d.factor.map(|j| env.name(j)),
                       "c": d.principal.map(|c| ctx.ring().label(c).to_string())})
            });
        }
    })
}

pub fn p4_7f(env: &Env) -> CheckReport {
    env.report("P4.7f", "k(Y) ⊆ I and (k(Y):I) ⊄ I", |t| {
        for i in 0..env.len() {
            env.y.relative_via_colon(i, t);
        }
    })
}

pub fn p4_7g(env: &Env) -> CheckReport {
    let ring = env.ctx().ring();
    env.report("P4.7g", "root property and k(Y) ⊆ <a>", |t| {
        for a in ring.elements() {
            match env.y.principal_relative(a) {
                Ok((l, r)) => t.check(l == r, || json!({"a": ring.label(a), "relative_strong": l, "colon_outside": r})),
                Err(Error::PremiseFailed(_)) => {}
                Err(e) => t.fail(json!({"a": ring.label(a), "error": e.to_string()})),
            }
        }
    })
}

pub fn p4_8a(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let ps = primes(env);
    both(env, "P4.8a", "", |t, tb, _| {
        for j in 0..tb.n {
            let with_factor: Vec<usize> = (0..tb.n).filter(|&i| tb.hyj(i, j) && !lat.leq(j, i)).collect();
            let hy_primes: Vec<usize> = ps.iter().copied().filter(|&p| tb.family[p] && !lat.leq(j, p)).collect();
            let (a, b) = (maximal(lat, &with_factor), maximal(lat, &hy_primes));
            t.check(a == b, || json!({"J": env.name(j), "maximal": names(env, &a), "primes": names(env, &b)}));
        }
    })
}

pub fn p4_8b(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let ps = primes(env);
    both(env, "P4.8b", "", |t, tb, _| {
        for j in 0..tb.n {
            let below: Vec<usize> = (0..tb.n).filter(|&i| i != j && lat.leq(i, j) && tb.hyj(i, j)).collect();
            let hy_primes: Vec<usize> = ps.iter().copied().filter(|&p| tb.family[p] && !lat.leq(j, p)).collect();
            let mut meets: Vec<usize> = maximal(lat, &hy_primes).into_iter().map(|p| lat.meet(p, j)).collect();
            meets.sort_unstable();
            meets.dedup();
            let got = maximal(lat, &below);
            t.check(
                got == maximal(lat, &meets),
                || json!({"J": env.name(j), "maximal_below": names(env, &got), "P∩J": names(env, &meets)}),
            );
        }
    })
}

pub fn p4_8c(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.8c", "I has a non-trivial factor", |t, _, strong| {
        for i in 0..env.len() {
            let maxf = env.y.maximal_factors_idx(i, strong);
            if env.y.factors_idx(i, strong, false).is_empty() {
                continue;
            }
            t.check(maxf.iter().any(|&m| lat.leq(i, m)), || json!({"I": env.name(i), "maximal": names(env, &maxf)}));
        }
    })
}

pub fn p4_8d(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.8d", "J is a minimal factor of I", |t, tb, strong| {
        for i in 0..tb.n {
            for j in env.y.minimal_factors_idx(i, strong) {
                let s = lat.join(i, j);
                let smaller =
                    (0..tb.n).find(|&k| k != s && lat.leq(i, k) && lat.leq(k, s) && !lat.leq(k, i) && tb.hyj(i, k));
                t.check(tb.hyj(i, s) && smaller.is_none(), || {
                    json!({"I": env.name(i), "J": env.name(j), "I+J": env.name(s), "smaller": smaller.map(|k| env.name(k))})
                });
            }
        }
    })
}

pub fn p4_8e(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    both(env, "P4.8e", "I has a greatest factor", |t, _, strong| {
        for i in 0..env.len() {
            let g = env.y.greatest_factor_idx(i, strong);
            if let Some(m) = g.maximum {
                t.check(g.ideal == Some(m), || {
                    json!({"I": env.name(i), "maximum": env.name(m), "formula": g.formula.to_vec(),
                           "formula_ideal": g.ideal.map(|k| ctx.ideal_name(k))})
                });
            }
        }
    })
}

pub fn p4_8f(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let lat = ctx.lattice();
    both(env, "P4.8f", "", |t, tb, strong| {
        for i in 0..tb.n {
            let k = env.y.factor_k_minprimes_idx(i, strong);
            let rad = lat.radical(i);
            t.check(lat.leq(lat.meet(tb.closure[i], k), rad), || json!({"I": env.name(i), "K": env.name(k)}));
            if rad == i && tb.relative(lat, i) {
                let g = env.y.greatest_factor_idx(i, strong);
                t.check(
                    g.maximum == Some(k),
                    || json!({"I": env.name(i), "K": env.name(k), "maximum": g.maximum.map(|m| env.name(m))}),
                );
            }
        }
    })
}

pub fn p4_8g(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    both(env, "P4.8g", "I is relative", |t, tb, strong| {
        for i in (0..tb.n).filter(|&i| tb.relative(lat, i)) {
            let g = env.y.greatest_factor_idx(i, strong);
            t.check(
                g.maximum.is_some(),
                || json!({"I": env.name(i), "maximal": names(env, &env.y.maximal_factors_idx(i, strong))}),
            );
        }
    })
}

pub fn p4_8h(env: &Env) -> CheckReport {
    let lat = env.ctx().lattice();
    let arithmetical = lat.is_arithmetical();
    both(env, "P4.8h", "R arithmetical and I relative", |t, tb, strong| {
        if !arithmetical {
            return;
        }
        for i in (0..tb.n).filter(|&i| tb.relative(lat, i)) {
            t.check(env.y.greatest_factor_idx(i, strong).maximum.is_some(), || json!({"I": env.name(i)}));
        }
    })
}

pub fn p4_8i(env: &Env) -> CheckReport {
    both(env, "P4.8i", "", |t, _, strong| {
        for i in 0..env.len() {
            env.y.minimal_factor_check(i, strong, t);
        }
    })
}

pub fn c4_semiprime(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    if ctx.num_points() > ctx.caps().all_subsets_spec {
        return CheckReport::new("C4.semiprime", env.y.instance(), Verdict::Skipped, None);
    }
    let lat = ctx.lattice();
    both(env, "C4.semiprime", "", |t, _, strong| {
        for i in (0..env.len()).filter(|&i| lat.radical(i) == i) {
            match env.y.semiprime_representation(i, strong) {
                Ok((l, r, bad)) => t.check(l == r, || {
                    json!({"I": env.name(i), "relative": l, "representation_without_member": bad.map(|a| ctx.points_label(a))})
                }),
                Err(e) => t.fail(json!({"I": env.name(i), "error": e.to_string()})),
            }
        }
    })
}

pub fn t4_compare(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    both(env, "T4.compare", "", |t, _, strong| {
        for (label, s) in env.subspaces {
            let other = SubSpace::labelled(ctx, *s, label.clone()).expect("resolved");
            for j in 0..env.len() {
                let (l, r, w) = env.y.comparison(&other, j, strong);
                t.check(l == r, || json!({"X": env.y.label(), "Y": label, "detail": w}));
            }
        }
    })
}

pub fn t4_regularity(env: &Env) -> CheckReport {
    let ctx = env.ctx();
    let lat = ctx.lattice();
    let whole = lat.whole_index();
    env.report("T4.regularity", "k(Y) = 0", |t| {
        if ctx.kernel_idx(env.y.points()) != lat.zero_index() {
            return;
        }
        let all_relative = |strong: bool| {
            let tb = Tables::new(&env.y, strong);
            (0..whole).all(|i| tb.relative(lat, i))
        };
        let (a, b, c) = (all_relative(true), all_relative(false), ctx.ring().is_regular());
        t.check(a == b && b == c, || json!({"relative_strong": a, "relative": b, "regular": c}));
    })
}
