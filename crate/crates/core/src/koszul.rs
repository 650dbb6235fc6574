//! Koszul complexes tensored with a module, degreewise homology, Tor against
//! the residue field, Betti tables and torsion dimension.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graded::{BasisLabel, GradedModule};
use crate::grading::{leq_q, Degree, Window};
use crate::linalg::{rank, Matrix};
use crate::scalar::Characteristic;
use crate::text;

/// `e_{i_1} ∧ ... ∧ e_{i_n}` with `i_1 < ... < i_n` (0-based variable indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeBasisElement {
    vars: Vec<usize>,
    degree: Degree,
}

impl WedgeBasisElement {
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn index(&self) -> usize {
        self.vars.len()
    }
}

/// `(Λ^n F ⊗ M)_g` with basis `w ⊗ b`, `b` a basis element of `M_{g - deg w}`.
#[derive(Clone, Debug)]
pub struct KoszulPiece {
    index: usize,
    degree: Degree,
    basis: Vec<(WedgeBasisElement, BasisLabel)>,
    lookup: HashMap<(Vec<usize>, BasisLabel), usize>,
}

impl KoszulPiece {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn basis(&self) -> &[(WedgeBasisElement, BasisLabel)] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// A chain complex of graded vector spaces given degreewise.
pub trait GradedComplex: Sync {
    /// Degrees at which the complex can be nonzero.
    fn window_points(&self) -> Vec<Degree>;

    /// Every homological index above this is zero at `g`.
    fn top(&self, g: &Degree) -> usize;

    fn dim(&self, n: usize, g: &Degree) -> Result<usize>;

    /// The map `C_n -> C_{n-1}` at degree `g`, for `n >= 1`.
    fn differential(&self, n: usize, g: &Degree) -> Result<Matrix<i64>>;
}

/// Chain-group and homology dimensions at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub chain_dims: Vec<usize>,
    pub homology_dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn chain_euler(&self) -> i64 {
        alternating(&self.chain_dims)
    }

    pub fn homology_euler(&self) -> i64 {
        alternating(&self.homology_dims)
    }
}

fn alternating(dims: &[usize]) -> i64 {
    dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
}

/// Homology of `complex` at `g`. With `check_chain_law`, every consecutive
/// composite is verified to vanish.
pub fn homology_profile<C: GradedComplex + ?Sized>(
    complex: &C,
    g: &Degree,
    characteristic: Characteristic,
    check_chain_law: bool,
) -> Result<HomologyProfile> {
    let top = complex.top(g);
    let chain_dims = (0..=top).map(|n| complex.dim(n, g)).collect::<Result<Vec<_>>>()?;
    let mut ranks = vec![0usize; top + 2];
    let mut previous: Option<Matrix<i64>> = None;
    for n in 1..=top {
        let d = complex.differential(n, g)?;
        if check_chain_law {
            if let Some(prev) = &previous {
                if prev.cols() > 0 && d.cols() > 0 && !prev.mul(&d).is_zero() {
                    return Err(Error::ChainLawViolated { index: n - 1, degree: g.clone() });
                }
            }
        }
        ranks[n] = rank(&d, characteristic);
        previous = Some(d);
    }
    let homology_dims = (0..=top).map(|n| chain_dims[n] - ranks[n] - ranks[n + 1]).collect();
    Ok(HomologyProfile { chain_dims, homology_dims })
}

/// The Koszul complex on a set of variables, tensored with a module.
pub struct KoszulComplex<'a> {
    module: &'a GradedModule,
    seq: Vec<usize>,
    characteristic: Characteristic,
}

impl<'a> KoszulComplex<'a> {
    pub fn new(module: &'a GradedModule, seq: &[usize]) -> Result<Self> {
        let nvars = module.ring().nvars();
        if let Some(&bad) = seq.iter().find(|&&v| v >= nvars) {
            return Err(Error::InvalidModule(format!("variable index {bad} out of range ({nvars} variables)")));
        }
        let mut seq = seq.to_vec();
        seq.sort_unstable();
        seq.dedup();
        Ok(KoszulComplex { module, seq, characteristic: Characteristic::Zero })
    }

    /// The complex on every variable of the ring, which resolves `k`.
    pub fn all_variables(module: &'a GradedModule) -> Self {
        let seq: Vec<usize> = (0..module.ring().nvars()).collect();
        KoszulComplex { module, seq, characteristic: Characteristic::Zero }
    }

    pub fn with_characteristic(mut self, characteristic: Characteristic) -> Self {
        self.characteristic = characteristic;
        self
    }

    pub fn module(&self) -> &GradedModule {
        self.module
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    /// `T(g)`: sequence variables whose degree fits under `g` minus some lower
    /// bound of the module. Only these can occur in a nonzero wedge.
    pub fn candidates(&self, g: &Degree) -> Vec<usize> {
        let ring = self.module.ring();
        let room: Vec<Degree> = self.module.support().lower_bounds().iter().map(|l| g - l).collect();
        self.seq.iter().copied().filter(|&v| room.iter().any(|r| leq_q(ring.var_degree(v), r))).collect()
    }

    fn check(&self, g: &Degree) -> Result<()> {
        if self.module.window().contains(g) {
            Ok(())
        } else {
            Err(Error::OutsideValidRegion(g.clone()))
        }
    }

    pub fn piece(&self, n: usize, g: &Degree) -> Result<KoszulPiece> {
        self.check(g)?;
        Ok(self.piece_unchecked(n, g))
    }

    fn piece_unchecked(&self, n: usize, g: &Degree) -> KoszulPiece {
        let ring = self.module.ring();
        let candidates = self.candidates(g);
        let mut basis = Vec::new();
        for vars in subsets(&candidates, n) {
            let degree = vars.iter().fold(Degree::zero(), |acc, &v| &acc + ring.var_degree(v));
            let rest = g - &degree;
            if !self.module.support().contains(&rest) {
                continue;
            }
            let piece = self.module.piece_unchecked(&rest);
            let wedge = WedgeBasisElement { vars, degree };
            for label in piece.basis() {
                basis.push((wedge.clone(), label.clone()));
            }
        }
        let lookup = basis.iter().enumerate().map(|(i, (w, l))| ((w.vars.clone(), l.clone()), i)).collect();
        KoszulPiece { index: n, degree: g.clone(), basis, lookup }
    }

    /// `d_n : (Λ^n F ⊗ M)_g -> (Λ^{n-1} F ⊗ M)_g`,
    /// `w ⊗ b ↦ Σ_ℓ (-1)^{ℓ+1} (w without i_ℓ) ⊗ x_{i_ℓ} b`.
    pub fn differential(&self, n: usize, g: &Degree) -> Result<Matrix<i64>> {
        self.check(g)?;
        let source = self.piece_unchecked(n, g);
        if n == 0 {
            return Ok(Matrix::zeros(0, source.dimension()));
        }
        let target = self.piece_unchecked(n - 1, g);
        Ok(self.differential_between(&source, &target))
    }

    fn differential_between(&self, source: &KoszulPiece, target: &KoszulPiece) -> Matrix<i64> {
        let mut m = Matrix::zeros(target.dimension(), source.dimension());
        for (col, (wedge, label)) in source.basis.iter().enumerate() {
            for (pos, &var) in wedge.vars.iter().enumerate() {
                let Some(image) = self.module.act(var, label) else {
                    continue;
                };
                let mut rest = wedge.vars.clone();
                rest.remove(pos);
                let row = target.lookup[&(rest, image)];
                // pos is 0-based, so (-1)^{ℓ+1} with ℓ = pos + 1 is (-1)^pos
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                m.set(row, col, m.get(row, col) + sign);
            }
        }
        m
    }

    fn profile_unchecked(&self, g: &Degree) -> HomologyProfile {
        let top = self.candidates(g).len();
        let pieces: Vec<KoszulPiece> = (0..=top).map(|n| self.piece_unchecked(n, g)).collect();
        let mut ranks = vec![0usize; top + 2];
        for n in 1..=top {
            ranks[n] = rank(&self.differential_between(&pieces[n], &pieces[n - 1]), self.characteristic);
        }
        let chain_dims: Vec<usize> = pieces.iter().map(KoszulPiece::dimension).collect();
        let homology_dims = (0..=top).map(|n| chain_dims[n] - ranks[n] - ranks[n + 1]).collect();
        HomologyProfile { chain_dims, homology_dims }
    }

    /// `dim H_n(K ⊗ M)_g`.
    pub fn homology_at(&self, n: usize, g: &Degree) -> Result<usize> {
        Ok(self.homology(g)?.get(n).copied().unwrap_or(0))
    }

    /// Homology dimensions `H_0, ..., H_{|T(g)|}` at `g`.
    pub fn homology(&self, g: &Degree) -> Result<Vec<usize>> {
        self.check(g)?;
        Ok(self.profile_unchecked(g).homology_dims)
    }

    /// `Σ_n (-1)^n dim H_n` at any degree, window or not.
    pub(crate) fn euler_unchecked(&self, g: &Degree) -> i64 {
        self.profile_unchecked(g).homology_euler()
    }
}

impl GradedComplex for KoszulComplex<'_> {
    fn window_points(&self) -> Vec<Degree> {
        self.module.window_points()
    }

    fn top(&self, g: &Degree) -> usize {
        self.candidates(g).len()
    }

    fn dim(&self, n: usize, g: &Degree) -> Result<usize> {
        Ok(self.piece(n, g)?.dimension())
    }

    fn differential(&self, n: usize, g: &Degree) -> Result<Matrix<i64>> {
        KoszulComplex::differential(self, n, g)
    }
}

/// The Koszul complex of `R` augmented by `R -> R/(seq)` in homological
/// position 0 (the Koszul terms move up by one). Exact when `seq` is regular.
pub struct AugmentedKoszul<'a> {
    koszul: KoszulComplex<'a>,
    quotient: &'a GradedModule,
}

impl<'a> AugmentedKoszul<'a> {
    /// `ring_module` must be `R` itself and `quotient` must be `R/(seq)` over
    /// the same ring.
    pub fn new(koszul: KoszulComplex<'a>, quotient: &'a GradedModule) -> Result<Self> {
        if koszul.module.expr() != &crate::graded::ModuleExpr::ring() {
            return Err(Error::InvalidModule("augmentation is defined for the ring itself".into()));
        }
        if quotient.expr().as_variable_quotient().as_deref() != Some(koszul.sequence()) {
            return Err(Error::InvalidModule("augmentation target must be R modulo the sequence".into()));
        }
        Ok(AugmentedKoszul { koszul, quotient })
    }
}

impl GradedComplex for AugmentedKoszul<'_> {
    fn window_points(&self) -> Vec<Degree> {
        self.koszul.window_points()
    }

    fn top(&self, g: &Degree) -> usize {
        self.koszul.top(g) + 1
    }

    fn dim(&self, n: usize, g: &Degree) -> Result<usize> {
        match n {
            0 => self.quotient.dimension(g),
            n => self.koszul.dim(n - 1, g),
        }
    }

    fn differential(&self, n: usize, g: &Degree) -> Result<Matrix<i64>> {
        match n {
            0 => Ok(Matrix::zeros(0, self.quotient.dimension(g)?)),
            1 => {
                let source = self.koszul.module.piece(g)?;
                let target = self.quotient.piece(g)?;
                let mut m = Matrix::zeros(target.dimension(), source.dimension());
                for (col, label) in source.basis().iter().enumerate() {
                    let image = BasisLabel { summand: Vec::new(), monomial: label.monomial.clone() };
                    if let Some(row) = target.position(&image) {
                        m.set(row, col, 1);
                    }
                }
                Ok(m)
            }
            n => self.koszul.differential(n - 1, g),
        }
    }
}

fn subsets(items: &[usize], n: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < n - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, n, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n <= items.len() {
        go(items, n, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// `dim_k Tor_i^R(k, M)_g`, via the Koszul complex on all variables.
pub fn tor_k(module: &GradedModule, i: usize, g: &Degree, characteristic: Characteristic) -> Result<usize> {
    KoszulComplex::all_variables(module).with_characteristic(characteristic).homology_at(i, g)
}

/// Graded Betti numbers `β_{i,g}` on a window; only nonzero entries are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    window: Window,
    entries: BTreeMap<(usize, Degree), u64>,
}

impl BettiTable {
    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn get(&self, i: usize, g: &Degree) -> u64 {
        self.entries.get(&(i, g.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by `(i, graded-lex degree)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Degree, u64)> {
        self.entries.iter().map(|((i, g), &b)| (*i, g, b))
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `Σ_g β_{i,g}` for `i = 0..=max_index`.
    pub fn row_sums(&self) -> Vec<u64> {
        let mut sums = vec![0; self.max_index().map_or(0, |m| m + 1)];
        for ((i, _), b) in &self.entries {
            sums[*i] += b;
        }
        sums
    }

    /// CSV with header `i,degree,beta`; the degree column holds its JSON form.
    pub fn to_csv(&self) -> String {
        text::csv(&["i", "degree", "beta"], &self.rows())
    }

    /// Human-readable aligned table.
    pub fn to_table(&self) -> String {
        text::aligned(&["i", "degree", "beta"], &self.rows(), &[true, false, true])
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.entries().map(|(i, g, b)| vec![i.to_string(), g.to_string(), b.to_string()]).collect()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("window", &self.window)?;
        let entries: Vec<(usize, &Degree, u64)> = self.entries().collect();
        map.serialize_entry("entries", &entries)?;
        map.end()
    }
}

/// Betti numbers at every window degree and every index up to `|T(g)|`.
pub fn betti_table(module: &GradedModule, characteristic: Characteristic) -> Result<BettiTable> {
    let koszul = KoszulComplex::all_variables(module).with_characteristic(characteristic);
    let per_degree: Vec<(Degree, Vec<usize>)> =
        module.window_points().into_par_iter().map(|g| koszul.homology(&g).map(|h| (g, h))).collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    for (g, dims) in per_degree {
        for (i, d) in dims.into_iter().enumerate() {
            if d > 0 {
                entries.insert((i, g.clone()), d as u64);
            }
        }
    }
    Ok(BettiTable { window: module.window().clone(), entries })
}

/// Torsion (equivalently projective) dimension below a degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum TorsionDimension {
    Finite(usize),
    /// Every `Tor_i(k, M)_h` with `h <= g` vanishes (the module is zero there).
    Vanishing,
}

impl fmt::Display for TorsionDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionDimension::Finite(n) => write!(f, "{n}"),
            TorsionDimension::Vanishing => write!(f, "vanishing"),
        }
    }
}

/// The largest `n` with `Tor_n(k, M)_{<= g} != 0`. All of `(-∞, g]` must lie
/// in the module's window.
pub fn torsion_dimension(
    module: &GradedModule,
    g: &Degree,
    characteristic: Characteristic,
) -> Result<TorsionDimension> {
    if !module.window().contains(g) {
        return Err(Error::OutsideValidRegion(g.clone()));
    }
    let below = Window::single(g.clone()).points_in(module.support());
    let koszul = KoszulComplex::all_variables(module).with_characteristic(characteristic);
    let tops: Vec<Option<usize>> = below
        .into_par_iter()
        .map(|h| koszul.homology(&h).map(|dims| dims.iter().rposition(|&d| d > 0)))
        .collect::<Result<_>>()?;
    Ok(match tops.into_iter().flatten().max() {
        Some(n) => TorsionDimension::Finite(n),
        None => TorsionDimension::Vanishing,
    })
}

/// Shift multisets of a minimal free resolution: `F_i = ⊕ R(-g)^{β_{i,g}}`.
pub fn minimal_resolution_shape(table: &BettiTable) -> Vec<Vec<(Degree, u64)>> {
    let len = table.max_index().map_or(0, |m| m + 1);
    let mut shape = vec![Vec::new(); len];
    for (i, g, b) in table.entries() {
        shape[i].push((g.clone(), b));
    }
    shape
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{ModuleExpr, RingSpec};
    use std::sync::Arc;

    fn d(v: &[i64]) -> Degree {
        Degree::from_dense(v)
    }

    fn module(nvars: u32, expr: ModuleExpr, w: &[i64]) -> GradedModule {
        GradedModule::new(Arc::new(RingSpec::standard(nvars)), &expr, Window::single(d(w))).unwrap()
    }

    #[test]
    fn degree_zero_piece_is_the_module() {
        let m = module(2, ModuleExpr::Quotient(vec![vec![1, 1]]), &[3, 3]);
        let k = KoszulComplex::all_variables(&m);
        assert_eq!(k.piece(0, &d(&[2, 0])).unwrap().dimension(), m.dimension(&d(&[2, 0])).unwrap());
    }

    #[test]
    fn top_wedge_of_two_variables() {
        let r = module(2, ModuleExpr::ring(), &[2, 2]);
        let k = KoszulComplex::all_variables(&r);
        let p = k.piece(2, &d(&[1, 1])).unwrap();
        assert_eq!(p.dimension(), 1);
        assert_eq!(p.basis()[0].0.vars(), &[0, 1]);
        assert!(p.basis()[0].1.monomial.is_one());
        assert_eq!(k.piece(3, &d(&[1, 1])).unwrap().dimension(), 0);
        assert_eq!(k.candidates(&d(&[1, 0])), vec![0]);
    }

    #[test]
    fn differentials() {
        let r = module(2, ModuleExpr::ring(), &[2, 2]);
        let kx = KoszulComplex::new(&r, &[0]).unwrap();
        assert_eq!(kx.differential(1, &d(&[1])).unwrap().to_rows(), vec![vec![1]]);
        let k = KoszulComplex::all_variables(&r);
        // e_x ∧ e_y ↦ x e_y - y e_x; target basis is [e_x ⊗ y, e_y ⊗ x]
        let d2 = k.differential(2, &d(&[1, 1])).unwrap();
        let target = k.piece(1, &d(&[1, 1])).unwrap();
        assert_eq!(target.basis()[0].0.vars(), &[0]);
        assert_eq!(d2.to_rows(), vec![vec![-1], vec![1]]);
        let d1 = k.differential(1, &d(&[1, 1])).unwrap();
        assert!(d1.mul(&d2).is_zero());
    }

    #[test]
    fn out_of_window() {
        let r = module(2, ModuleExpr::ring(), &[2, 2]);
        let k = KoszulComplex::all_variables(&r);
        assert!(k.piece(0, &d(&[3, 0])).is_err());
        assert!(tor_k(&r, 0, &d(&[0, 3]), Characteristic::Zero).is_err());
    }

    #[test]
    fn tor_of_ring_and_residue_field() {
        let r = module(2, ModuleExpr::ring(), &[3, 3]);
        for g in Window::single(d(&[3, 3])).q_points() {
            for i in 0..3 {
                let expected = usize::from(i == 0 && g.is_zero());
                assert_eq!(tor_k(&r, i, &g, Characteristic::Zero).unwrap(), expected);
            }
        }
        let k = module(3, ModuleExpr::residue_field(3), &[2, 2, 2]);
        let table = betti_table(&k, Characteristic::Zero).unwrap();
        assert_eq!(table.row_sums(), vec![1, 3, 3, 1]);
        assert_eq!(table.get(2, &d(&[1, 0, 1])), 1);
    }

    #[test]
    fn quotient_betti_tables() {
        let q = module(2, ModuleExpr::Quotient(vec![vec![1, 1]]), &[4, 4]);
        let t = betti_table(&q, Characteristic::Zero).unwrap();
        assert_eq!(
            t.entries().map(|(i, g, b)| (i, g.clone(), b)).collect::<Vec<_>>(),
            vec![(0, Degree::zero(), 1), (1, d(&[1, 1]), 1)]
        );
        let x2 = module(1, ModuleExpr::Quotient(vec![vec![2]]), &[5]);
        let t = betti_table(&x2, Characteristic::Zero).unwrap();
        assert_eq!(
            t.entries().map(|(i, g, b)| (i, g.clone(), b)).collect::<Vec<_>>(),
            vec![(0, Degree::zero(), 1), (1, d(&[2]), 1)]
        );
        assert_eq!(minimal_resolution_shape(&t), vec![vec![(Degree::zero(), 1)], vec![(d(&[2]), 1)]]);
    }

    #[test]
    fn free_module_betti() {
        let f = module(2, ModuleExpr::Free(vec![d(&[1]), d(&[1]), d(&[0, 2])]), &[3, 3]);
        let t = betti_table(&f, Characteristic::Zero).unwrap();
        assert_eq!(
            t.entries().map(|(i, g, b)| (i, g.clone(), b)).collect::<Vec<_>>(),
            vec![(0, d(&[1]), 2), (0, d(&[0, 2]), 1)]
        );
        assert_eq!(torsion_dimension(&f, &d(&[2, 2]), Characteristic::Zero).unwrap(), TorsionDimension::Finite(0));
        assert_eq!(torsion_dimension(&f, &d(&[0, 1]), Characteristic::Zero).unwrap(), TorsionDimension::Vanishing);
    }

    #[test]
    fn torsion_dimensions() {
        let k = module(2, ModuleExpr::residue_field(2), &[3, 3]);
        assert_eq!(torsion_dimension(&k, &d(&[1, 1]), Characteristic::Zero).unwrap(), TorsionDimension::Finite(2));
        assert_eq!(torsion_dimension(&k, &d(&[1, 0]), Characteristic::Zero).unwrap(), TorsionDimension::Finite(1));
        let q = module(2, ModuleExpr::Quotient(vec![vec![1, 1]]), &[3, 3]);
        assert_eq!(torsion_dimension(&q, &d(&[1, 0]), Characteristic::Zero).unwrap(), TorsionDimension::Finite(0));
        assert!(torsion_dimension(&q, &d(&[4, 0]), Characteristic::Zero).is_err());
    }

    #[test]
    fn augmented_koszul_is_exact() {
        let r = module(3, ModuleExpr::ring(), &[2, 2, 2]);
        let k = module(3, ModuleExpr::residue_field(3), &[2, 2, 2]);
        let aug = AugmentedKoszul::new(KoszulComplex::all_variables(&r), &k).unwrap();
        for g in aug.window_points() {
            let p = homology_profile(&aug, &g, Characteristic::Zero, true).unwrap();
            assert!(p.homology_dims.iter().all(|&h| h == 0), "at {g}: {p:?}");
        }
        let q = module(3, ModuleExpr::Quotient(vec![vec![1, 1]]), &[2, 2, 2]);
        assert!(AugmentedKoszul::new(KoszulComplex::all_variables(&r), &q).is_err());
    }

    #[test]
    fn csv_and_table_output() {
        let q = module(2, ModuleExpr::Quotient(vec![vec![1, 1]]), &[2, 2]);
        let t = betti_table(&q, Characteristic::Zero).unwrap();
        assert_eq!(t.to_csv(), "i,degree,beta\n0,[],1\n1,\"[[1,1],[2,1]]\",1\n");
        assert_eq!(t.to_table(), "i  degree         beta\n0  []                1\n1  [[1,1],[2,1]]     1\n");
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(&[1, 2, 3], 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(&[1, 2], 0), vec![Vec::<usize>::new()]);
        assert!(subsets(&[1], 2).is_empty());
    }
}
