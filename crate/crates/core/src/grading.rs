//! Degrees in the free abelian group on countably many generators, the
//! componentwise partial order induced by the nonnegative cone `Q`, and the
//! finite regions (support descriptors, windows) that make every computation
//! in this crate terminate.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely supported integer vector, stored as strictly increasing
/// `(index, coefficient)` pairs with nonzero coefficients. Indices are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Degree {
    entries: Vec<(u32, i64)>,
}

impl Degree {
    pub fn zero() -> Self {
        Degree { entries: Vec::new() }
    }

    /// The standard basis vector `e_index`.
    pub fn unit(index: u32) -> Self {
        assert!(index >= 1, "degree indices are 1-based");
        Degree { entries: vec![(index, 1)] }
    }

    /// Builds a degree from canonical pairs, rejecting zero coefficients,
    /// index 0 and non-increasing indices.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, i64)>) -> Result<Self> {
        let mut entries: Vec<(u32, i64)> = Vec::new();
        for (index, coeff) in pairs {
            if index == 0 {
                return Err(Error::MalformedDegree("index 0 (indices are 1-based)".into()));
            }
            if coeff == 0 {
                return Err(Error::MalformedDegree(format!("zero coefficient at index {index}")));
            }
            if let Some(&(last, _)) = entries.last() {
                if index <= last {
                    return Err(Error::MalformedDegree(format!(
                        "indices not strictly increasing ({last} then {index})"
                    )));
                }
            }
            entries.push((index, coeff));
        }
        Ok(Degree { entries })
    }

    /// Dense constructor: `values[k]` is the coefficient of `e_{k+1}`.
    pub fn from_dense(values: &[i64]) -> Self {
        let entries = values.iter().enumerate().filter(|(_, &v)| v != 0).map(|(k, &v)| (k as u32 + 1, v)).collect();
        Degree { entries }
    }

    pub fn entries(&self) -> &[(u32, i64)] {
        &self.entries
    }

    pub fn get(&self, index: u32) -> i64 {
        match self.entries.binary_search_by_key(&index, |&(i, _)| i) {
            Ok(pos) => self.entries[pos].1,
            Err(_) => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().map(|&(_, c)| c).sum()
    }

    /// Largest index with a nonzero coefficient, 0 for the zero degree.
    pub fn max_index(&self) -> u32 {
        self.entries.last().map_or(0, |&(i, _)| i)
    }

    /// Membership in the cone `Q` (all coefficients nonnegative).
    pub fn in_q(&self) -> bool {
        self.entries.iter().all(|&(_, c)| c > 0)
    }

    pub fn to_dense(&self, len: usize) -> Vec<i64> {
        let mut out = vec![0; len];
        for &(i, c) in &self.entries {
            if (i as usize) <= len {
                out[i as usize - 1] = c;
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> Degree {
        if k == 0 {
            return Degree::zero();
        }
        Degree { entries: self.entries.iter().map(|&(i, c)| (i, c * k)).collect() }
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Degree) -> Degree {
        merge(self, other, |a, b| a.min(b))
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Degree) -> Degree {
        merge(self, other, |a, b| a.max(b))
    }
}

fn merge(a: &Degree, b: &Degree, f: impl Fn(i64, i64) -> i64) -> Degree {
    let mut entries = Vec::with_capacity(a.entries.len() + b.entries.len());
    let (mut i, mut j) = (0, 0);
    loop {
        let (index, x, y) = match (a.entries.get(i), b.entries.get(j)) {
            (None, None) => break,
            (Some(&(ia, va)), None) => {
                i += 1;
                (ia, va, 0)
            }
            (None, Some(&(ib, vb))) => {
                j += 1;
                (ib, 0, vb)
            }
            (Some(&(ia, va)), Some(&(ib, vb))) => match ia.cmp(&ib) {
                Ordering::Less => {
                    i += 1;
                    (ia, va, 0)
                }
                Ordering::Greater => {
                    j += 1;
                    (ib, 0, vb)
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (ia, va, vb)
                }
            },
        };
        let v = f(x, y);
        if v != 0 {
            entries.push((index, v));
        }
    }
    Degree { entries }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        merge(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Degree {
    type Output = Degree;
    fn sub(self, rhs: &Degree) -> Degree {
        merge(self, rhs, |a, b| a - b)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        &self + &rhs
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, rhs: Degree) -> Degree {
        &self - &rhs
    }
}

impl Neg for &Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        self.scale(-1)
    }
}

/// Graded-lex order: by total degree, then at the first index where the two
/// differ, the larger coefficient comes first. This is a linear extension of
/// `<=_Q`.
impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_total = self.total().cmp(&other.total());
        if by_total != Ordering::Equal {
            return by_total;
        }
        let (mut i, mut j) = (0, 0);
        loop {
            let (x, y) = match (self.entries.get(i), other.entries.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, va)), None) => (va, 0),
                (None, Some(&(_, vb))) => (0, vb),
                (Some(&(ia, va)), Some(&(ib, vb))) => match ia.cmp(&ib) {
                    Ordering::Less => (va, 0),
                    Ordering::Greater => (0, vb),
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, vb)
                    }
                },
            };
            // entries are nonzero, so a one-sided entry always differs
            if x != y {
                return y.cmp(&x);
            }
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, c)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{i},{c}]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for &(i, c) in &self.entries {
            seq.serialize_element(&(i, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(u32, i64)> = Vec::deserialize(deserializer)?;
        Degree::from_pairs(pairs).map_err(de::Error::custom)
    }
}

/// `g <=_Q h`, i.e. `h - g` has no negative coefficient.
pub fn leq_q(g: &Degree, h: &Degree) -> bool {
    (h - g).in_q()
}

/// All of `Q ∩ (-∞, u]`, in graded-lex order.
pub fn enumerate_downset_q(u: &Degree) -> Vec<Degree> {
    if !u.in_q() {
        return Vec::new();
    }
    let mut out = vec![Vec::<(u32, i64)>::new()];
    for &(index, bound) in u.entries() {
        let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
        for prefix in &out {
            next.push(prefix.clone());
            for v in 1..=bound {
                let mut e = prefix.clone();
                e.push((index, v));
                next.push(e);
            }
        }
        out = next;
    }
    let mut degrees: Vec<Degree> = out.into_iter().map(|entries| Degree { entries }).collect();
    degrees.sort();
    degrees
}

/// A finite set of lower bounds `LB`, describing the region `LB + Q`.
/// The empty set describes the empty region.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SupportDescriptor {
    lower_bounds: Vec<Degree>,
}

impl SupportDescriptor {
    pub fn new(lower_bounds: impl IntoIterator<Item = Degree>) -> Self {
        let set: BTreeSet<Degree> = lower_bounds.into_iter().collect();
        SupportDescriptor { lower_bounds: set.into_iter().collect() }
    }

    pub fn empty() -> Self {
        SupportDescriptor::default()
    }

    /// `{0}`, describing `Q` itself.
    pub fn cone() -> Self {
        SupportDescriptor { lower_bounds: vec![Degree::zero()] }
    }

    pub fn lower_bounds(&self) -> &[Degree] {
        &self.lower_bounds
    }

    pub fn is_empty(&self) -> bool {
        self.lower_bounds.is_empty()
    }

    pub fn contains(&self, g: &Degree) -> bool {
        self.lower_bounds.iter().any(|l| leq_q(l, g))
    }

    pub fn union(&self, other: &SupportDescriptor) -> SupportDescriptor {
        SupportDescriptor::new(self.lower_bounds.iter().chain(&other.lower_bounds).cloned())
    }

    pub fn translate(&self, by: &Degree) -> SupportDescriptor {
        SupportDescriptor::new(self.lower_bounds.iter().map(|l| l + by))
    }
}

/// Minkowski sum of the lower-bound sets.
pub fn descriptor_sum(a: &SupportDescriptor, b: &SupportDescriptor) -> SupportDescriptor {
    SupportDescriptor::new(a.lower_bounds.iter().flat_map(|x| b.lower_bounds.iter().map(move |y| x + y)))
}

/// Every `(u, v)` with `u ∈ a`, `v ∈ b`, `u + v = g`, sorted by `u`.
pub fn decompositions(g: &Degree, a: &SupportDescriptor, b: &SupportDescriptor) -> Vec<(Degree, Degree)> {
    let mut pairs = BTreeSet::new();
    for lb in b.lower_bounds() {
        let room = g - lb;
        for la in a.lower_bounds() {
            for q in enumerate_downset_q(&(&room - la)) {
                let v = lb + &q;
                let u = g - &v;
                pairs.insert((u, v));
            }
        }
    }
    pairs.into_iter().collect()
}

/// The truncation region `(-∞, U] = { g : g <=_Q u for some u ∈ U }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Window {
    ceiling: Vec<Degree>,
}

impl Window {
    /// Ceilings are kept as given (order and duplicates included).
    pub fn new(ceiling: Vec<Degree>) -> Self {
        Window { ceiling }
    }

    pub fn single(u: Degree) -> Self {
        Window { ceiling: vec![u] }
    }

    /// The region of nonnegative degrees in the first `coords` coordinates of
    /// total degree at most `total`, expressed by its maximal elements.
    pub fn total_degree(coords: u32, total: i64) -> Self {
        let mut ceiling = Vec::new();
        compositions(coords as usize, total, &mut Vec::new(), &mut ceiling);
        ceiling.sort();
        Window { ceiling }
    }

    /// The box `(-∞, (b, ..., b)]` in `coords` coordinates.
    pub fn cube(coords: u32, bound: i64) -> Self {
        Window::single(Degree::from_dense(&vec![bound; coords as usize]))
    }

    pub fn ceiling(&self) -> &[Degree] {
        &self.ceiling
    }

    pub fn is_empty(&self) -> bool {
        self.ceiling.is_empty()
    }

    pub fn contains(&self, g: &Degree) -> bool {
        self.ceiling.iter().any(|u| leq_q(g, u))
    }

    /// Whether `other`'s region is contained in this one; returns the first
    /// ceiling of `other` that escapes.
    pub fn first_escape<'a>(&self, other: &'a Window) -> Option<&'a Degree> {
        other.ceiling.iter().find(|u| !self.contains(u))
    }

    pub fn covers(&self, other: &Window) -> bool {
        self.first_escape(other).is_none()
    }

    /// Exact intersection of regions: pairwise componentwise minima, with
    /// duplicates and dominated ceilings dropped.
    pub fn intersect(&self, other: &Window) -> Window {
        let meets = self.ceiling.iter().flat_map(|u| other.ceiling.iter().map(move |v| u.meet(v)));
        Window::reduced(meets)
    }

    pub fn translate(&self, by: &Degree) -> Window {
        Window { ceiling: self.ceiling.iter().map(|u| u + by).collect() }
    }

    /// Antichain of maximal ceilings describing the same region.
    pub fn reduced(ceiling: impl IntoIterator<Item = Degree>) -> Window {
        let set: BTreeSet<Degree> = ceiling.into_iter().collect();
        let all: Vec<Degree> = set.into_iter().collect();
        let kept = all.iter().filter(|u| !all.iter().any(|v| v != *u && leq_q(u, v))).cloned().collect();
        Window { ceiling: kept }
    }

    /// All degrees of the region that lie in `support`, in graded-lex order.
    pub fn points_in(&self, support: &SupportDescriptor) -> Vec<Degree> {
        let mut set = BTreeSet::new();
        for l in support.lower_bounds() {
            for u in &self.ceiling {
                for q in enumerate_downset_q(&(u - l)) {
                    set.insert(l + &q);
                }
            }
        }
        set.into_iter().collect()
    }

    /// `Q ∩ region`.
    pub fn q_points(&self) -> Vec<Degree> {
        self.points_in(&SupportDescriptor::cone())
    }

    /// Largest index appearing in any ceiling.
    pub fn max_index(&self) -> u32 {
        self.ceiling.iter().map(Degree::max_index).max().unwrap_or(0)
    }
}

fn compositions(parts: usize, total: i64, prefix: &mut Vec<i64>, out: &mut Vec<Degree>) {
    if parts == 0 {
        if total == 0 || prefix.is_empty() {
            out.push(Degree::from_dense(prefix));
        }
        return;
    }
    if parts == 1 {
        prefix.push(total);
        out.push(Degree::from_dense(prefix));
        prefix.pop();
        return;
    }
    for v in 0..=total {
        prefix.push(v);
        compositions(parts - 1, total - v, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(v: &[i64]) -> Degree {
        Degree::from_dense(v)
    }

    fn brute_downset(u: &[i64]) -> BTreeSet<Degree> {
        // all integer vectors in a generous box, filtered by the order
        let n = u.len();
        let mut out = BTreeSet::new();
        let mut idx = vec![-3i64; n];
        loop {
            let g = d(&idx);
            if g.in_q() && leq_q(&g, &d(u)) {
                out.insert(g);
            }
            let mut k = 0;
            loop {
                if k == n {
                    return out;
                }
                idx[k] += 1;
                if idx[k] <= 4 {
                    break;
                }
                idx[k] = -3;
                k += 1;
            }
        }
    }

    #[test]
    fn leq_examples() {
        assert!(leq_q(&d(&[1, 0]), &d(&[1, 2])));
        assert!(leq_q(&Degree::zero(), &d(&[0, 3, 1])));
        assert!(leq_q(&d(&[1, -1]), &d(&[1, 0])));
        assert!(!leq_q(&d(&[1, -1]), &d(&[0, 0])));
    }

    #[test]
    fn downset_examples() {
        assert_eq!(enumerate_downset_q(&d(&[1, 1])), vec![d(&[0, 0]), d(&[1, 0]), d(&[0, 1]), d(&[1, 1])]);
        assert!(enumerate_downset_q(&d(&[-1, 0])).is_empty());
        let three = enumerate_downset_q(&d(&[2]));
        assert_eq!(three.len(), 3);
        assert_eq!(three.into_iter().collect::<BTreeSet<_>>(), brute_downset(&[2]));
    }

    #[test]
    fn descriptor_sum_examples() {
        let zero = SupportDescriptor::cone();
        assert_eq!(descriptor_sum(&zero, &zero), zero);
        let a = SupportDescriptor::new([d(&[-1, 0])]);
        let b = SupportDescriptor::new([d(&[0, -1])]);
        assert_eq!(descriptor_sum(&a, &b), SupportDescriptor::new([d(&[-1, -1])]));
        let a = SupportDescriptor::new([d(&[2, 0]), d(&[0, 1])]);
        let b = SupportDescriptor::new([d(&[1, 1])]);
        assert_eq!(descriptor_sum(&a, &b), SupportDescriptor::new([d(&[3, 1]), d(&[1, 2])]));
    }

    #[test]
    fn decomposition_examples() {
        let q = SupportDescriptor::cone();
        assert_eq!(
            decompositions(&d(&[1, 1]), &q, &q),
            vec![
                (d(&[0, 0]), d(&[1, 1])),
                (d(&[1, 0]), d(&[0, 1])),
                (d(&[0, 1]), d(&[1, 0])),
                (d(&[1, 1]), d(&[0, 0])),
            ]
        );
        assert_eq!(decompositions(&Degree::zero(), &q, &q), vec![(Degree::zero(), Degree::zero())]);
        let a = SupportDescriptor::new([d(&[2, 0])]);
        let b = SupportDescriptor::new([d(&[0, 2])]);
        assert!(decompositions(&d(&[1, 1]), &a, &b).is_empty());
    }

    #[test]
    fn decompositions_match_brute_force() {
        let a = SupportDescriptor::new([d(&[-1, 0]), d(&[0, 1])]);
        let b = SupportDescriptor::new([d(&[1, -1])]);
        let g = d(&[2, 2]);
        let mut brute = BTreeSet::new();
        for x in -4..=6 {
            for y in -4..=6 {
                let u = d(&[x, y]);
                let v = &g - &u;
                if a.contains(&u) && b.contains(&v) {
                    brute.insert((u, v));
                }
            }
        }
        let fast: BTreeSet<_> = decompositions(&g, &a, &b).into_iter().collect();
        assert_eq!(fast, brute);
    }

    #[test]
    fn degree_parsing_rejects_noncanonical() {
        assert!(Degree::from_pairs([(1, 2), (3, -1)]).is_ok());
        assert!(Degree::from_pairs([(1, 0)]).is_err());
        assert!(Degree::from_pairs([(2, 1), (1, 1)]).is_err());
        assert!(Degree::from_pairs([(0, 1)]).is_err());
        let g: Degree = serde_json::from_str("[[1,2],[3,-1]]").unwrap();
        assert_eq!(g, d(&[2, 0, -1]));
        assert_eq!(serde_json::to_string(&g).unwrap(), "[[1,2],[3,-1]]");
        assert!(serde_json::from_str::<Degree>("[[1,0]]").is_err());
    }

    #[test]
    fn windows() {
        let w = Window::new(vec![d(&[2, 0]), d(&[0, 2])]);
        assert!(w.contains(&d(&[1, 0])));
        assert!(w.contains(&d(&[-5, 1])));
        assert!(!w.contains(&d(&[1, 1])));
        let v = Window::single(d(&[1, 1]));
        assert_eq!(w.intersect(&v), Window::new(vec![d(&[1, 0]), d(&[0, 1])]));
        let t = Window::total_degree(2, 2);
        assert_eq!(t.q_points().len(), 6);
        assert_eq!(Window::total_degree(4, 5).q_points().len(), 126);
    }

    fn small_degree() -> impl Strategy<Value = Degree> {
        prop::collection::vec(-3i64..=3, 0..4).prop_map(|v| Degree::from_dense(&v))
    }

    proptest! {
        #[test]
        fn order_is_partial_order(a in small_degree(), b in small_degree(), c in small_degree()) {
            prop_assert!(leq_q(&a, &a));
            if leq_q(&a, &b) && leq_q(&b, &a) {
                prop_assert_eq!(&a, &b);
            }
            if leq_q(&a, &b) && leq_q(&b, &c) {
                prop_assert!(leq_q(&a, &c));
            }
            if leq_q(&a, &b) {
                prop_assert!(leq_q(&(&a + &c), &(&b + &c)));
                // graded-lex extends the partial order
                prop_assert!(a <= b);
            }
        }

        #[test]
        fn downset_cardinality(v in prop::collection::vec(0i64..=3, 0..4)) {
            let u = Degree::from_dense(&v);
            let down = enumerate_downset_q(&u);
            let expected: i64 = v.iter().map(|x| x + 1).product();
            prop_assert_eq!(down.len() as i64, expected);
            prop_assert!(down.iter().all(|e| leq_q(e, &u)));
            prop_assert!(down.windows(2).all(|p| p[0] < p[1]));
        }

        #[test]
        fn decompositions_symmetric(
            g in small_degree(),
            la in prop::collection::vec(small_degree(), 1..3),
            lb in prop::collection::vec(small_degree(), 1..3),
        ) {
            let a = SupportDescriptor::new(la);
            let b = SupportDescriptor::new(lb);
            let ab = decompositions(&g, &a, &b);
            let ba: BTreeSet<_> = decompositions(&g, &b, &a).into_iter().map(|(u, v)| (v, u)).collect();
            prop_assert_eq!(ab.iter().cloned().collect::<BTreeSet<_>>(), ba);
            for (u, v) in &ab {
                prop_assert_eq!(&(u + v), &g);
                prop_assert!(a.contains(u) && b.contains(v));
            }
        }
    }
}
