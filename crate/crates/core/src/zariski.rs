//! The Zariski topology on a subset `Y` of the spectrum: hulls, kernels,
//! closures and Y-Hilbert ideals.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::report::{CheckReport, Instance, Tally};
use crate::sets::{Element, ElementSet, PointSet};

/// A closed subset of `Y`, i.e. one of the form `h_Y(I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedSet(PointSet);

impl ClosedSet {
    pub fn points(self) -> PointSet {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

/// A set `Y` of primes of one ring, identified by spectrum positions.
#[derive(Clone)]
pub struct SubSpace<'a> {
    ctx: &'a RingContext,
    points: PointSet,
    label: String,
}

impl fmt::Debug for SubSpace<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubSpace({} in {})", self.label, self.ctx.name())
    }
}

impl<'a> SubSpace<'a> {
    pub fn new(ctx: &'a RingContext, points: PointSet) -> Result<SubSpace<'a>> {
        if !points.is_subset(ctx.spec()) {
            return Err(Error::BadSpec(format!("point set {points:?} is outside the spectrum")));
        }
        Ok(SubSpace { ctx, points, label: format!("indices:{:?}", points.to_vec()) })
    }

    pub fn labelled(ctx: &'a RingContext, points: PointSet, label: impl Into<String>) -> Result<SubSpace<'a>> {
        let mut y = SubSpace::new(ctx, points)?;
        y.label = label.into();
        Ok(y)
    }

    pub fn whole(ctx: &'a RingContext) -> SubSpace<'a> {
        SubSpace { ctx, points: ctx.spec(), label: "spec".into() }
    }

    /// The subspace `S ⊆ Y` as a space in its own right.
    pub fn sub(&self, s: PointSet) -> Result<SubSpace<'a>> {
        if !s.is_subset(self.points) {
            return Err(Error::SNotSubsetY);
        }
        SubSpace::new(self.ctx, s)
    }

    pub fn ctx(&self) -> &'a RingContext {
        self.ctx
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn instance(&self) -> Instance {
        Instance { ring: self.ctx.name().to_string(), y: self.label.clone() }
    }

    /// Lattice indices of the points of `Y`.
    pub fn point_ideals(&self) -> Vec<usize> {
        self.ctx.prime_indices(self.points)
    }

    pub fn hull_elem(&self, a: Element) -> ClosedSet {
        ClosedSet(self.ctx.element_hull(a).intersection(self.points))
    }

    pub fn hull(&self, s: &ElementSet) -> ClosedSet {
        ClosedSet(self.ctx.set_hull(s).intersection(self.points))
    }

    pub fn hull_ideal(&self, ideal: &Ideal) -> ClosedSet {
        self.hull(ideal.members())
    }

    pub fn hull_idx(&self, i: usize) -> PointSet {
        self.ctx.ideal_hull(i).intersection(self.points)
    }

    /// `k(S)`, with `k(∅) = R`.
    pub fn kernel(&self, s: PointSet) -> Result<Ideal> {
        if !s.is_subset(self.points) {
            return Err(Error::SNotSubsetY);
        }
        Ok(self.ctx.ideal(self.ctx.kernel_idx(s)).clone())
    }

    pub fn closure(&self, s: PointSet) -> Result<ClosedSet> {
        if !s.is_subset(self.points) {
            return Err(Error::SNotSubsetY);
        }
        Ok(ClosedSet(self.hull_idx(self.ctx.kernel_idx(s))))
    }

    /// Lattice index of `k h_Y(a)`.
    pub fn kh_elem(&self, a: Element) -> usize {
        self.ctx.kernel_idx(self.hull_elem(a).points())
    }

    /// Lattice index of `k h_Y(I)`.
    pub fn kh_idx(&self, i: usize) -> usize {
        self.ctx.kernel_idx(self.hull_idx(i))
    }

    pub fn is_y_hilbert(&self, ideal: &Ideal) -> bool {
        let i = self.ctx.idx(ideal);
        self.kh_idx(i) == i
    }

    /// Every subspace here is finite, hence compact.
    pub fn is_compact(&self) -> (bool, &'static str) {
        (true, "finite-space")
    }

    /// Union of the points of `Y` as element sets.
    pub fn union_of_points(&self) -> ElementSet {
        let mut u = ElementSet::empty(self.ctx.ring().size());
        for i in self.point_ideals() {
            u.union_with(self.ctx.ideal(i).members());
        }
        u
    }

    /// Evaluates the four lattice-side conditions equivalent to compactness and
    /// compares each with [`SubSpace::is_compact`].
    pub fn verify_compactness_equivalents(&self) -> CheckReport {
        let ctx = self.ctx;
        let lat = ctx.lattice();
        let whole = lat.whole_index();
        let union = self.union_of_points();
        let fixed = |i: usize| !self.hull_idx(i).is_empty();

        let first_bad = |pred: &dyn Fn(usize) -> bool| (0..lat.len()).find(|&i| !pred(i));
        let a = first_bad(&|i| i == whole || !self.is_hy_idx(i) || fixed(i));
        let b = first_bad(&|i| i == whole || !self.is_strong_idx(i) || fixed(i));
        let c = first_bad(&|i| !lat.get(i).members().is_subset(&union) || fixed(i));
        let maxl = self.maxl_pshy_idx();
        let d = maxl.iter().copied().find(|&m| !self.point_ideals().contains(&m));

        let (compact, _) = self.is_compact();
        let mut tally = Tally::default();
        for (label, bad) in [("a", a), ("b", b), ("c", c), ("d", d)] {
            let holds = bad.is_none();
            tally.check(holds == compact, || json!({"condition": label, "ideal": bad.map(|i| ctx.ideal_name(i))}));
        }
        tally.into_report("T3.5", self.instance(), self.is_empty(), "")
    }

    /// `Z = maxl(PSH_Y) ∪ Y`, after checking that every maximal proper strong
    /// H_Y-ideal is prime.
    pub fn compactification(&self) -> Result<SubSpace<'a>> {
        let mut z = self.points;
        for m in self.maxl_pshy_idx() {
            match self.ctx.point_of(m) {
                Some(p) => z = z.union(PointSet::singleton(p)),
                None => return Err(Error::NonPrimeMaximalStrongIdeal(self.ctx.ideal(m).members().to_vec())),
            }
        }
        SubSpace::labelled(self.ctx, z, format!("compactification({})", self.label))
    }
}

/// How a subspace is chosen from a ring's spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YSelector {
    Spec,
    Max,
    Min,
    Indices(Vec<usize>),
    /// Every subset of the spectrum; only for small spectra.
    AllSubsets,
}

impl YSelector {
    /// Resolves to labelled point sets. `AllSubsets` lists every subset when
    /// the spectrum has at most `caps.all_subsets_spec` points and otherwise
    /// draws `caps.sampled_subspaces` subsets from `seed`.
    pub fn resolve(&self, ctx: &RingContext, seed: u64) -> Result<Vec<(String, PointSet)>> {
        let n = ctx.num_points();
        Ok(match self {
            YSelector::Spec => vec![("spec".into(), ctx.spec())],
            YSelector::Max => vec![("max".into(), ctx.max_ideals())],
            YSelector::Min => vec![("min".into(), ctx.min_primes())],
            YSelector::Indices(ix) => {
                if let Some(&bad) = ix.iter().find(|&&i| i >= n) {
                    return Err(Error::BadSpec(format!(
                        "spectrum index {bad} out of range ({} has {n} primes)",
                        ctx.name()
                    )));
                }
                let s = PointSet::from_indices(ix.iter().copied());
                vec![(format!("indices:{:?}", s.to_vec()), s)]
            }
            YSelector::AllSubsets => {
                if n <= ctx.caps().all_subsets_spec {
                    ctx.spec().subsets().map(|s| (format!("indices:{:?}", s.to_vec()), s)).collect()
                } else {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let mut out: Vec<PointSet> = Vec::new();
                    let full = ctx.spec().0;
                    let mut attempts = 0;
                    while out.len() < ctx.caps().sampled_subspaces && attempts < 100_000 {
                        attempts += 1;
                        let s = PointSet(rng.gen::<u64>() & full);
                        if !out.contains(&s) {
                            out.push(s);
                        }
                    }
                    out.sort();
                    out.into_iter().map(|s| (format!("indices:{:?}", s.to_vec()), s)).collect()
                }
            }
        })
    }
}

impl fmt::Display for YSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YSelector::Spec => f.write_str("spec"),
            YSelector::Max => f.write_str("max"),
            YSelector::Min => f.write_str("min"),
            YSelector::AllSubsets => f.write_str("all-subsets"),
            YSelector::Indices(ix) => write!(f, "indices:{ix:?}"),
        }
    }
}

impl FromStr for YSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<YSelector> {
        let s = s.trim();
        match s {
            "spec" => return Ok(YSelector::Spec),
            "max" => return Ok(YSelector::Max),
            "min" => return Ok(YSelector::Min),
            "all-subsets" => return Ok(YSelector::AllSubsets),
            _ => {}
        }
        let rest =
            s.strip_prefix("indices:").ok_or_else(|| Error::BadSpec(format!("unknown subspace selector `{s}`")))?;
        let inner = rest.trim().trim_start_matches('[').trim_end_matches(']');
        let ix = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::BadSpec(format!("bad index `{t}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(YSelector::Indices(ix))
    }
}

impl Serialize for YSelector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for YSelector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
