//! Finite commutative rings with identity, stored as explicit operation tables.
//!
//! Every ring is materialized as `N x N` addition and multiplication tables
//! over the element indices `0..N`. Structured specs enumerate elements
//! deterministically: residues in increasing order for `Z_n`, coefficient
//! vectors read from the highest degree down for polynomial quotients, and
//! mixed-radix order (first factor most significant) for products.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::Element;

/// Size limits. All checks in this crate are exhaustive, so ring size is the
/// dominant cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest structured ring (`Z_n`, quotients, products).
    pub structured: usize,
    /// Largest ring containing a raw table component.
    pub tables: usize,
    /// Ring size up to which subset-quantified conditions enumerate every subset.
    pub subset_oracle: usize,
    /// Largest spectrum for which every subspace is enumerated.
    pub all_subsets_spec: usize,
    /// Number of sampled subspaces when the spectrum is larger than `all_subsets_spec`.
    pub sampled_subspaces: usize,
}

/// Nothing above this size is ever built, whatever the configured caps say.
pub const HARD_CAP: usize = 4096;

impl Default for Caps {
    fn default() -> Self {
        Caps { structured: 256, tables: 64, subset_oracle: 16, all_subsets_spec: 6, sampled_subspaces: 32 }
    }
}

impl Caps {
    /// Applies overrides of the form `structured=512,tables=128`.
    pub fn with_overrides(mut self, text: &str) -> Result<Caps> {
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::BadSpec(format!("cap override `{part}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::BadSpec(format!("cap override `{part}` has a non-integer value")))?;
            match key.trim() {
                "structured" => self.structured = value,
                "tables" => self.tables = value,
                "subset_oracle" => self.subset_oracle = value,
                "all_subsets_spec" => self.all_subsets_spec = value,
                "sampled_subspaces" => self.sampled_subspaces = value,
                other => return Err(Error::BadSpec(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }
}

/// Raw operation tables for a ring given by the user.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSpec {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

/// Abstract description of a finite commutative ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Zn(u32),
    /// `Z_n[x]/(f)` with `f` monic; coefficients in ascending degree order.
    QuotPoly {
        modulus: u32,
        coeffs: Vec<u32>,
    },
    Product(Vec<RingSpec>),
    Tables(TableSpec),
}

impl RingSpec {
    /// Number of elements, validating the structural preconditions on the way.
    pub fn size(&self) -> Result<usize> {
        match self {
            RingSpec::Zn(n) => {
                if *n < 2 {
                    return Err(Error::BadSpec(format!("Z{n}: modulus must be at least 2")));
                }
                Ok(*n as usize)
            }
            RingSpec::QuotPoly { modulus, coeffs } => {
                if *modulus < 2 {
                    return Err(Error::BadSpec(format!("modulus {modulus} must be at least 2")));
                }
                if coeffs.len() < 2 {
                    return Err(Error::BadSpec("quotient polynomial must have degree >= 1".into()));
                }
                if coeffs.last().copied().map(|c| c % modulus) != Some(1) {
                    return Err(Error::BadSpec("quotient polynomial must be monic".into()));
                }
                let degree = (coeffs.len() - 1) as u32;
                (*modulus as usize)
                    .checked_pow(degree)
                    .filter(|&s| s <= HARD_CAP)
                    .ok_or(Error::CapExceeded { size: usize::MAX, cap: HARD_CAP })
            }
            RingSpec::Product(parts) => {
                if parts.is_empty() {
                    return Err(Error::BadSpec("empty product".into()));
                }
                parts.iter().try_fold(1usize, |acc, p| {
                    let s = p.size()?;
                    acc.checked_mul(s)
                        .filter(|&t| t <= HARD_CAP)
                        .ok_or(Error::CapExceeded { size: usize::MAX, cap: HARD_CAP })
                })
            }
            RingSpec::Tables(t) => {
                if t.size < 2 {
                    return Err(Error::BadSpec("table ring must have at least 2 elements".into()));
                }
                Ok(t.size)
            }
        }
    }

    fn has_tables(&self) -> bool {
        match self {
            RingSpec::Tables(_) => true,
            RingSpec::Product(parts) => parts.iter().any(RingSpec::has_tables),
            _ => false,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z{n}"),
            RingSpec::QuotPoly { modulus, coeffs } => {
                write!(f, "Z{modulus}[x]/({})", poly_to_string(coeffs, *modulus))
            }
            RingSpec::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    match p {
                        RingSpec::Product(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            RingSpec::Tables(t) => write!(f, "tables[{}]", t.size),
        }
    }
}

fn poly_to_string(coeffs: &[u32], modulus: u32) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        let c = c % modulus;
        if c == 0 {
            continue;
        }
        let term = match (deg, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (d, 1) => format!("x^{d}"),
            (d, c) => format!("{c}x^{d}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Opaque identity of a built ring; ideals carry it so mixed-ring arithmetic is caught.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

/// An explicit finite commutative ring with identity.
#[derive(Clone)]
pub struct FiniteRing {
    id: RingId,
    spec: RingSpec,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Element,
    one: Element,
    labels: Vec<String>,
    /// Sizes of the top-level product factors (empty unless the spec is a product).
    factor_sizes: Vec<usize>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing").field("spec", &self.spec.to_string()).field("size", &self.size).finish()
    }
}

struct RawTables {
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
}

/// Builds a ring under the default caps.
pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing> {
    build_ring_with(spec, &Caps::default())
}

pub fn build_ring_with(spec: &RingSpec, caps: &Caps) -> Result<FiniteRing> {
    let size = spec.size()?;
    let cap = if spec.has_tables() { caps.tables } else { caps.structured }.min(HARD_CAP);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let raw = raw_tables(spec)?;
    debug_assert_eq!(raw.size, size);
    if raw.zero == raw.one {
        return Err(Error::BadSpec("zero equals one: the trivial ring is not admitted".into()));
    }

    let mut neg = vec![0u16; size];
    for (a, slot) in neg.iter_mut().enumerate() {
        let inv = (0..size).find(|&b| raw.add[a * size + b] as usize == raw.zero);
        match inv {
            Some(b) => *slot = b as u16,
            None => return Err(Error::AxiomViolation { law: "additive inverse", witness: vec![a] }),
        }
    }

    let factor_sizes = match spec {
        RingSpec::Product(parts) => parts.iter().map(|p| p.size()).collect::<Result<_>>()?,
        _ => Vec::new(),
    };

    let ring = FiniteRing {
        id: RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed)),
        spec: spec.clone(),
        size,
        add: raw.add,
        mul: raw.mul,
        neg,
        zero: Element::from(raw.zero),
        one: Element::from(raw.one),
        labels: raw.labels,
        factor_sizes,
    };
    if spec.has_tables() {
        ring.check_axioms()?;
    } else {
        ring.check_identity_and_commutativity()?;
    }
    Ok(ring)
}

fn raw_tables(spec: &RingSpec) -> Result<RawTables> {
    match spec {
        RingSpec::Zn(n) => {
            let n = *n as usize;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            for a in 0..n {
                for b in 0..n {
                    add[a * n + b] = ((a + b) % n) as u16;
                    mul[a * n + b] = ((a * b) % n) as u16;
                }
            }
            Ok(RawTables { size: n, add, mul, zero: 0, one: 1, labels: (0..n).map(|a| a.to_string()).collect() })
        }
        RingSpec::QuotPoly { modulus, coeffs } => quot_poly_tables(*modulus, coeffs),
        RingSpec::Product(parts) => {
            let raws = parts.iter().map(raw_tables).collect::<Result<Vec<_>>>()?;
            Ok(product_tables(&raws))
        }
        RingSpec::Tables(t) => {
            let n = t.size;
            let square = |tab: &Vec<Vec<usize>>| tab.len() == n && tab.iter().all(|row| row.len() == n);
            if !square(&t.add) || !square(&t.mul) {
                return Err(Error::BadSpec(format!("operation tables must be {n}x{n}")));
            }
            if t.add.iter().chain(&t.mul).flatten().any(|&v| v >= n) || t.zero >= n || t.one >= n {
                return Err(Error::BadSpec("table entry out of range".into()));
            }
            let labels = match &t.names {
                Some(names) if names.len() == n => names.clone(),
                Some(_) => return Err(Error::BadSpec("names list has the wrong length".into())),
                None => (0..n).map(|a| a.to_string()).collect(),
            };
            Ok(RawTables {
                size: n,
                add: t.add.iter().flatten().map(|&v| v as u16).collect(),
                mul: t.mul.iter().flatten().map(|&v| v as u16).collect(),
                zero: t.zero,
                one: t.one,
                labels,
            })
        }
    }
}

fn quot_poly_tables(modulus: u32, coeffs: &[u32]) -> Result<RawTables> {
    let m = modulus as usize;
    let d = coeffs.len() - 1;
    let size = m.pow(d as u32);
    let f: Vec<usize> = coeffs.iter().map(|&c| c as usize % m).collect();

    // element index = sum c_i m^i
    let vec_of = |mut idx: usize| -> Vec<usize> {
        let mut v = vec![0; d];
        for c in v.iter_mut() {
            *c = idx % m;
            idx /= m;
        }
        v
    };
    let idx_of = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * m + c) };
    let vecs: Vec<Vec<usize>> = (0..size).map(vec_of).collect();

    let mut add = vec![0u16; size * size];
    let mut mul = vec![0u16; size * size];
    let mut prod = vec![0usize; 2 * d];
    for a in 0..size {
        for b in 0..size {
            let (va, vb) = (&vecs[a], &vecs[b]);
            let s: Vec<usize> = va.iter().zip(vb).map(|(x, y)| (x + y) % m).collect();
            add[a * size + b] = idx_of(&s) as u16;

            prod.iter_mut().for_each(|c| *c = 0);
            for (i, x) in va.iter().enumerate() {
                for (j, y) in vb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % m;
                }
            }
            // reduce by the monic modulus polynomial from the top
            for k in (d..2 * d).rev() {
                let c = prod[k];
                if c != 0 {
                    for (i, fi) in f.iter().enumerate().take(d) {
                        let pos = k - d + i;
                        prod[pos] = (prod[pos] + m - (c * fi) % m) % m;
                    }
                    prod[k] = 0;
                }
            }
            mul[a * size + b] = idx_of(&prod[..d]) as u16;
        }
    }
    let labels =
        vecs.iter().map(|v| poly_to_string(&v.iter().map(|&c| c as u32).collect::<Vec<_>>(), modulus)).collect();
    Ok(RawTables { size, add, mul, zero: 0, one: 1, labels })
}

fn product_tables(parts: &[RawTables]) -> RawTables {
    let size: usize = parts.iter().map(|p| p.size).product();
    let mut strides = vec![1usize; parts.len()];
    for i in (0..parts.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * parts[i + 1].size;
    }
    let digits = |idx: usize| -> Vec<usize> { parts.iter().zip(&strides).map(|(p, s)| (idx / s) % p.size).collect() };
    let all: Vec<Vec<usize>> = (0..size).map(digits).collect();
    let compose = |ds: &mut dyn Iterator<Item = usize>| -> usize { ds.zip(&strides).map(|(d, s)| d * s).sum() };

    let mut add = vec![0u16; size * size];
    let mut mul = vec![0u16; size * size];
    for a in 0..size {
        for b in 0..size {
            let (da, db) = (&all[a], &all[b]);
            let sum = compose(&mut parts.iter().enumerate().map(|(k, p)| p.add[da[k] * p.size + db[k]] as usize));
            let prod = compose(&mut parts.iter().enumerate().map(|(k, p)| p.mul[da[k] * p.size + db[k]] as usize));
            add[a * size + b] = sum as u16;
            mul[a * size + b] = prod as u16;
        }
    }
    let zero = compose(&mut parts.iter().map(|p| p.zero));
    let one = compose(&mut parts.iter().map(|p| p.one));
    let labels = all
        .iter()
        .map(|ds| {
            let inner: Vec<&str> = parts.iter().zip(ds).map(|(p, &d)| p.labels[d].as_str()).collect();
            format!("({})", inner.join(","))
        })
        .collect();
    RawTables { size, add, mul, zero, one, labels }
}

impl FiniteRing {
    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn one(&self) -> Element {
        self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.size).map(Element::from)
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        Element(self.add[a.index() * self.size + b.index()] as u32)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.mul[a.index() * self.size + b.index()] as u32)
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        Element(self.neg[a.index()] as u32)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// `a^n`, with `a^0 = 1`.
    pub fn pow(&self, a: Element, n: u32) -> Element {
        (0..n).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn label(&self, a: Element) -> &str {
        &self.labels[a.index()]
    }

    /// Parses an element given as a label (`x+1`, `(1,0)`), a tuple of factor
    /// indices for product rings, or a bare element index.
    pub fn parse_element(&self, token: &str) -> Result<Element> {
        let token = token.trim();
        let compact: String = token.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(i) = self.labels.iter().position(|l| *l == compact) {
            return Ok(Element::from(i));
        }
        if compact.starts_with('(') && compact.ends_with(')') && !self.factor_sizes.is_empty() {
            let inner = &compact[1..compact.len() - 1];
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != self.factor_sizes.len() {
                return Err(Error::BadSpec(format!("element `{token}` needs {} components", self.factor_sizes.len())));
            }
            let mut idx = 0usize;
            for (p, &s) in parts.iter().zip(&self.factor_sizes) {
                let d: usize = p.parse().map_err(|_| Error::BadSpec(format!("bad component `{p}` in `{token}`")))?;
                if d >= s {
                    return Err(Error::BadSpec(format!("component {d} out of range in `{token}`")));
                }
                idx = idx * s + d;
            }
            return Ok(Element::from(idx));
        }
        match compact.parse::<usize>() {
            Ok(i) if i < self.size => Ok(Element::from(i)),
            _ => Err(Error::BadSpec(format!("`{token}` is not an element of {}", self.spec))),
        }
    }

    pub fn is_unit(&self, a: Element) -> bool {
        self.elements().any(|x| self.mul(a, x) == self.one)
    }

    pub fn units(&self) -> Vec<Element> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&a| self.mul(a, a) == a).collect()
    }

    /// Von Neumann regularity: every `a` has some `x` with `a x a = a`.
    pub fn is_regular(&self) -> bool {
        self.elements().all(|a| self.elements().any(|x| self.mul(self.mul(a, x), a) == a))
    }

    /// Every element is a proper power `y^n` with `n >= 2`.
    ///
    /// Powers of each `y` are followed from `y^2` until the sequence revisits a
    /// value; finite monoid powers are eventually periodic, so nothing beyond
    /// the cycle is reachable.
    pub fn has_root_property(&self) -> bool {
        let mut reached = vec![false; self.size];
        let mut seen = vec![false; self.size];
        for y in self.elements() {
            seen.iter_mut().for_each(|s| *s = false);
            let mut p = self.mul(y, y);
            while !seen[p.index()] {
                seen[p.index()] = true;
                reached[p.index()] = true;
                p = self.mul(p, y);
            }
        }
        reached.iter().all(|&r| r)
    }

    fn check_identity_and_commutativity(&self) -> Result<()> {
        for a in self.elements() {
            if self.mul(a, self.one) != a {
                return Err(Error::AxiomViolation { law: "multiplicative identity", witness: vec![a.index()] });
            }
            if self.add(a, self.zero) != a {
                return Err(Error::AxiomViolation { law: "additive identity", witness: vec![a.index()] });
            }
            for b in self.elements() {
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::AxiomViolation {
                        law: "multiplicative commutativity",
                        witness: vec![a.index(), b.index()],
                    });
                }
            }
        }
        Ok(())
    }

    /// Validates every ring law. Exhaustive over all triples up to 256
    /// elements, otherwise 100 000 triples drawn from a fixed seed.
    pub fn check_axioms(&self) -> Result<()> {
        self.check_identity_and_commutativity()?;
        for a in self.elements() {
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::AxiomViolation {
                        law: "additive commutativity",
                        witness: vec![a.index(), b.index()],
                    });
                }
            }
        }
        if self.size <= 256 {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        self.check_triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..100_000 {
                let mut pick = || Element::from(rng.gen_range(0..self.size));
                let (a, b, c) = (pick(), pick(), pick());
                self.check_triple(a, b, c)?;
            }
        }
        Ok(())
    }

    fn check_triple(&self, a: Element, b: Element, c: Element) -> Result<()> {
        let w = || vec![a.index(), b.index(), c.index()];
        if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
            return Err(Error::AxiomViolation { law: "additive associativity", witness: w() });
        }
        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
            return Err(Error::AxiomViolation { law: "multiplicative associativity", witness: w() });
        }
        if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
            return Err(Error::AxiomViolation { law: "distributivity", witness: w() });
        }
        Ok(())
    }

    /// Operation tables in the corpus schema; used to carve out subrings.
    pub fn to_table_spec(&self) -> TableSpec {
        let rows = |t: &Vec<u16>| -> Vec<Vec<usize>> {
            t.chunks(self.size).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
        };
        TableSpec {
            size: self.size,
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero.index(),
            one: self.one.index(),
            names: Some(self.labels.clone()),
        }
    }
}

/// Smallest monic irreducible polynomial of degree `k` over `Z_p`, ordered by
/// the integer value of its ascending coefficient vector in base `p`.
pub fn irreducible_poly(p: u32, k: u32) -> Option<Vec<u32>> {
    if k == 0 || !is_prime(p) {
        return None;
    }
    let count = (p as u64).checked_pow(k)?;
    (0..count).map(|v| monic_from_value(v, p, k)).find(|f| is_irreducible(f, p))
}

fn monic_from_value(mut v: u64, p: u32, k: u32) -> Vec<u32> {
    let mut f = Vec::with_capacity(k as usize + 1);
    for _ in 0..k {
        f.push((v % p as u64) as u32);
        v /= p as u64;
    }
    f.push(1);
    f
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = (f.len() - 1) as u32;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d);
        for v in 0..count {
            let g = monic_from_value(v, p, d);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    while r.len() > dg {
        let lead = r[r.len() - 1] % p;
        let shift = r.len() - 1 - dg;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - (lead * gi as u64) % p) % p;
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}
