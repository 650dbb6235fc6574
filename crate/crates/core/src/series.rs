//! Exact Laurent series with finitely-bounded-below, downward-finite support.
//!
//! Two kinds of series exist. [`LaurentSeries`] is a finite truncation: it
//! knows its coefficients exactly on a valid region (a [`Window`]) and refuses
//! to answer outside of it. [`QSeries`] is a lazily evaluated series supported
//! on `Q`, used for ring-level series such as `H(R)` and `H(R)^{-1}` whose
//! coefficients are needed at whatever degree a module computation asks for.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grading::{descriptor_sum, enumerate_downset_q, leq_q, Degree, SupportDescriptor, Window};
use crate::scalar::Coefficient;

/// A windowed element of `Z[[Q]]{Γ}` (coefficients in `C`).
///
/// Invariants: every stored degree lies in the valid region and in the
/// support descriptor's region, and no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries<C> {
    window: Window,
    support: SupportDescriptor,
    coeffs: BTreeMap<Degree, C>,
}

impl<C: Coefficient> LaurentSeries<C> {
    /// Builds a series from terms. Terms outside the window are truncated
    /// away; terms outside the support are rejected. Repeated degrees add.
    pub fn new(
        window: Window,
        support: SupportDescriptor,
        terms: impl IntoIterator<Item = (Degree, C)>,
    ) -> Result<Self> {
        let mut coeffs: BTreeMap<Degree, C> = BTreeMap::new();
        for (g, c) in terms {
            if c.is_zero() || !window.contains(&g) {
                continue;
            }
            if !support.contains(&g) {
                return Err(Error::OutsideSupport(g));
            }
            accumulate(&mut coeffs, g, c);
        }
        Ok(LaurentSeries { window, support, coeffs })
    }

    /// Finite series with support descriptor given by its own terms.
    pub fn polynomial(window: Window, terms: impl IntoIterator<Item = (Degree, C)>) -> Self {
        let terms: Vec<(Degree, C)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let support = SupportDescriptor::new(terms.iter().map(|(g, _)| g.clone()));
        Self::new(window, support, terms).expect("terms lie in their own support")
    }

    pub fn zero(window: Window) -> Self {
        LaurentSeries { window, support: SupportDescriptor::empty(), coeffs: BTreeMap::new() }
    }

    pub fn one(window: Window) -> Self {
        Self::monomial(window, Degree::zero(), C::one())
    }

    /// `c t^g`.
    pub fn monomial(window: Window, g: Degree, c: C) -> Self {
        let support = SupportDescriptor::new([g.clone()]);
        Self::new(window, support, [(g, c)]).expect("monomial lies in its support")
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn support(&self) -> &SupportDescriptor {
        &self.support
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Degree, &C)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at `g`; reading outside the valid region is an error.
    pub fn coeff(&self, g: &Degree) -> Result<C> {
        if !self.window.contains(g) {
            return Err(Error::OutsideValidRegion(g.clone()));
        }
        Ok(self.coeffs.get(g).cloned().unwrap_or_else(C::zero))
    }

    /// Same series with a smaller valid region.
    pub fn restrict(&self, window: &Window) -> Result<Self> {
        if let Some(u) = self.window.first_escape(window) {
            return Err(Error::WindowExceedsValidRegion(u.clone()));
        }
        let coeffs =
            self.coeffs.iter().filter(|(g, _)| window.contains(g)).map(|(g, c)| (g.clone(), c.clone())).collect();
        Ok(LaurentSeries { window: window.clone(), support: self.support.clone(), coeffs })
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            window: self.window.clone(),
            support: self.support.clone(),
            coeffs: self.coeffs.iter().map(|(g, c)| (g.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let coeffs =
            self.coeffs.iter().map(|(g, c)| (g.clone(), c.clone() * k.clone())).filter(|(_, c)| !c.is_zero()).collect();
        LaurentSeries { window: self.window.clone(), support: self.support.clone(), coeffs }
    }

    /// Multiplication by `t^g`.
    pub fn shift(&self, g: &Degree) -> Self {
        LaurentSeries {
            window: self.window.translate(g),
            support: self.support.translate(g),
            coeffs: self.coeffs.iter().map(|(h, c)| (h + g, c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        add(self, other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        add(self, &other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        mul(self, other)
    }
}

fn accumulate<C: Coefficient>(map: &mut BTreeMap<Degree, C>, g: Degree, c: C) {
    match map.get_mut(&g) {
        Some(existing) => {
            let sum = existing.clone() + c;
            if sum.is_zero() {
                map.remove(&g);
            } else {
                *existing = sum;
            }
        }
        None => {
            if !c.is_zero() {
                map.insert(g, c);
            }
        }
    }
}

/// Coefficientwise sum on the intersection of the two valid regions.
pub fn add<C: Coefficient>(a: &LaurentSeries<C>, b: &LaurentSeries<C>) -> LaurentSeries<C> {
    let window = a.window.intersect(&b.window);
    let mut coeffs = BTreeMap::new();
    for (g, c) in a.coeffs.iter().chain(b.coeffs.iter()) {
        if window.contains(g) {
            accumulate(&mut coeffs, g.clone(), c.clone());
        }
    }
    LaurentSeries { window, support: a.support.union(&b.support), coeffs }
}

/// Valid region of a product: degrees in both windows such that, for every
/// pair of lower bounds, the complementary factor's degree stays inside the
/// other factor's window.
pub fn product_window<C>(a: &LaurentSeries<C>, b: &LaurentSeries<C>) -> Window {
    let mut window = a.window.intersect(&b.window);
    for la in a.support.lower_bounds() {
        window = window.intersect(&b.window.translate(la));
    }
    for lb in b.support.lower_bounds() {
        window = window.intersect(&a.window.translate(lb));
    }
    window
}

/// Convolution product `c_g = Σ_{u+v=g} a_u b_v`, exact on the conservative
/// product window.
pub fn mul<C: Coefficient>(a: &LaurentSeries<C>, b: &LaurentSeries<C>) -> LaurentSeries<C> {
    let window = product_window(a, b);
    let support = descriptor_sum(&a.support, &b.support);
    let mut coeffs = BTreeMap::new();
    for (u, x) in &a.coeffs {
        for (v, y) in &b.coeffs {
            let g = u + v;
            if window.contains(&g) {
                accumulate(&mut coeffs, g, x.clone() * y.clone());
            }
        }
    }
    LaurentSeries { window, support, coeffs }
}

/// Equality of coefficients over the whole region of `w`, which must lie in
/// both valid regions.
pub fn eq_on_window<C: Coefficient>(a: &LaurentSeries<C>, b: &LaurentSeries<C>, w: &Window) -> Result<bool> {
    for s in [a, b] {
        if let Some(u) = s.window.first_escape(w) {
            return Err(Error::WindowExceedsValidRegion(u.clone()));
        }
    }
    let zero = C::zero();
    for (g, c) in a.coeffs.iter().filter(|(g, _)| w.contains(g)) {
        if b.coeffs.get(g).unwrap_or(&zero) != c {
            return Ok(false);
        }
    }
    for (g, c) in b.coeffs.iter().filter(|(g, _)| w.contains(g)) {
        if a.coeffs.get(g).unwrap_or(&zero) != c {
            return Ok(false);
        }
    }
    Ok(true)
}

impl<C: Coefficient> fmt::Debug for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LaurentSeries {{ window: {:?}, lower_bounds: {:?}, coeffs: {{",
            self.window.ceiling(),
            self.support.lower_bounds()
        )?;
        for (k, (g, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}: {c}")?;
        }
        write!(f, "}} }}")
    }
}

impl<C: Coefficient> fmt::Display for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative_coeff();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let monomial: Vec<String> =
                g.entries().iter().map(|&(i, e)| if e == 1 { format!("t{i}") } else { format!("t{i}^{e}") }).collect();
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{abs}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Writes a coefficient as a JSON integer when it fits in `i64`, otherwise as
/// a decimal string.
pub(crate) struct CoeffJson<'a, C>(pub &'a C);

impl<C: Coefficient> Serialize for CoeffJson<'_, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct CoeffList<'a, C>(&'a BTreeMap<Degree, C>);

impl<C: Coefficient> Serialize for CoeffList<'_, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (g, c) in self.0 {
            seq.serialize_element(&(g, CoeffJson(c)))?;
        }
        seq.end()
    }
}

impl<C: Coefficient> LaurentSeries<C> {
    /// Serializes the series fields into an already-open JSON map.
    pub(crate) fn serialize_fields<M: SerializeMap>(&self, map: &mut M) -> std::result::Result<(), M::Error> {
        map.serialize_entry("window", &self.window)?;
        map.serialize_entry("lower_bounds", &self.support)?;
        map.serialize_entry("coeffs", &CoeffList(&self.coeffs))
    }
}

/// `{ "window": [...], "lower_bounds": [...], "coeffs": [[degree, int], ...] }`
/// with coefficients in graded-lex order.
impl<C: Coefficient> Serialize for LaurentSeries<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        self.serialize_fields(&mut map)?;
        map.end()
    }
}

/// Deserialization mirror of the JSON layout above.
#[derive(Debug, Clone, Deserialize)]
pub struct SeriesRecord {
    pub window: Window,
    #[serde(default)]
    pub lower_bounds: Option<SupportDescriptor>,
    pub coeffs: Vec<(Degree, i64)>,
}

impl SeriesRecord {
    /// Without explicit lower bounds the support is taken from the terms.
    pub fn into_series<C: Coefficient>(self) -> Result<LaurentSeries<C>> {
        let terms = self.coeffs.into_iter().map(|(g, c)| (g, C::from_i64(c).expect("i64 fits every coefficient type")));
        match self.lower_bounds {
            Some(support) => LaurentSeries::new(self.window, support, terms),
            None => Ok(LaurentSeries::polynomial(self.window, terms)),
        }
    }
}

type Oracle<C> = dyn Fn(&Degree) -> C + Send + Sync;

enum Source<C> {
    Terms(BTreeMap<Degree, C>),
    Oracle(Box<Oracle<C>>),
    Inverse(QSeries<C>),
}

struct QInner<C> {
    source: Source<C>,
    memo: Mutex<HashMap<Degree, C>>,
}

/// A lazily evaluated series supported on `Q`. Cloning shares the memo table.
#[derive(Clone)]
pub struct QSeries<C> {
    inner: Arc<QInner<C>>,
}

impl<C: Coefficient> QSeries<C> {
    fn from_source(source: Source<C>) -> Self {
        QSeries { inner: Arc::new(QInner { source, memo: Mutex::new(HashMap::new()) }) }
    }

    pub fn one() -> Self {
        Self::from_terms([(Degree::zero(), C::one())]).expect("0 lies in Q")
    }

    /// A polynomial supported on `Q`.
    pub fn from_terms(terms: impl IntoIterator<Item = (Degree, C)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (g, c) in terms {
            if !g.in_q() {
                return Err(Error::OutsideSupport(g));
            }
            accumulate(&mut coeffs, g, c);
        }
        Ok(Self::from_source(Source::Terms(coeffs)))
    }

    /// A series given by a coefficient oracle. Values outside `Q` are never
    /// requested from the oracle.
    pub fn from_fn(oracle: impl Fn(&Degree) -> C + Send + Sync + 'static) -> Self {
        Self::from_source(Source::Oracle(Box::new(oracle)))
    }

    /// Nonzero terms, when the series is a known polynomial.
    pub fn finite_terms(&self) -> Option<&BTreeMap<Degree, C>> {
        match &self.inner.source {
            Source::Terms(t) => Some(t),
            _ => None,
        }
    }

    pub fn coeff(&self, g: &Degree) -> C {
        if !g.in_q() {
            return C::zero();
        }
        match &self.inner.source {
            Source::Terms(t) => t.get(g).cloned().unwrap_or_else(C::zero),
            Source::Oracle(f) => {
                if let Some(c) = self.inner.memo.lock().unwrap().get(g) {
                    return c.clone();
                }
                let c = f(g);
                self.inner.memo.lock().unwrap().insert(g.clone(), c.clone());
                c
            }
            Source::Inverse(a) => {
                let mut memo = self.inner.memo.lock().unwrap();
                fill_inverse(a, &mut memo, g);
                memo[g].clone()
            }
        }
    }

    /// The windowed truncation on `w` (support `{0}`).
    pub fn truncate(&self, w: &Window) -> LaurentSeries<C> {
        let terms: Vec<(Degree, C)> = w
            .q_points()
            .into_iter()
            .map(|g| {
                let c = self.coeff(&g);
                (g, c)
            })
            .collect();
        LaurentSeries::new(w.clone(), SupportDescriptor::cone(), terms).expect("Q-points lie in the cone")
    }
}

/// Fills `b_h` for every `h` in `Q ∩ (-∞, g]`, in graded-lex order:
/// `b_0 = 1`, `b_h = -Σ_{v ≠ 0, v <= h} a_v b_{h-v}`.
fn fill_inverse<C: Coefficient>(a: &QSeries<C>, memo: &mut HashMap<Degree, C>, g: &Degree) {
    if memo.contains_key(g) {
        return;
    }
    for h in enumerate_downset_q(g) {
        if memo.contains_key(&h) {
            continue;
        }
        let value = if h.is_zero() {
            C::one()
        } else {
            let mut acc = C::zero();
            match a.finite_terms() {
                Some(terms) => {
                    for (v, av) in terms {
                        if !v.is_zero() && leq_q(v, &h) {
                            acc = acc + av.clone() * memo[&(&h - v)].clone();
                        }
                    }
                }
                None => {
                    for v in enumerate_downset_q(&h) {
                        if v.is_zero() {
                            continue;
                        }
                        let av = a.coeff(&v);
                        if !av.is_zero() {
                            acc = acc + av * memo[&(&h - &v)].clone();
                        }
                    }
                }
            }
            -acc
        };
        memo.insert(h, value);
    }
}

/// Multiplicative inverse of a connected `Q`-supported series.
pub fn invert<C: Coefficient>(a: &QSeries<C>) -> Result<QSeries<C>> {
    let a0 = a.coeff(&Degree::zero());
    if !a0.is_one() {
        return Err(Error::NotConnected(a0.to_string()));
    }
    Ok(QSeries::from_source(Source::Inverse(a.clone())))
}

/// `a * b` for `a` supported on `Q`; exact on all of `b`'s window, since every
/// contributing coefficient of `a` sits below the window.
pub fn mul_q<C: Coefficient>(a: &QSeries<C>, b: &LaurentSeries<C>) -> LaurentSeries<C> {
    let mut coeffs = BTreeMap::new();
    for g in b.window.points_in(&b.support) {
        let mut acc = C::zero();
        for (v, bv) in &b.coeffs {
            let u = &g - v;
            if u.in_q() {
                let au = a.coeff(&u);
                if !au.is_zero() {
                    acc = acc + au * bv.clone();
                }
            }
        }
        if !acc.is_zero() {
            coeffs.insert(g, acc);
        }
    }
    LaurentSeries { window: b.window.clone(), support: b.support.clone(), coeffs }
}
