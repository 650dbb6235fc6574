use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ring::{Monomial, RingSpec};
use crate::error::{Error, Result};
use crate::grading::{Degree, SupportDescriptor, Window};
use crate::linalg::Matrix;
use crate::series::mul_q;
use crate::{Int, Series};

/// Constructive description of a module built from shifted frees, direct
/// sums and monomial ideals/quotients.
///
/// JSON uses externally tagged nodes, e.g.
/// `{"sum": [{"free": [[], [[1,1]]]}, {"quotient": [[1,1]]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleExpr {
    /// `⊕_i R(-h_i)` over the listed shifts (a multiset).
    Free(Vec<Degree>),
    /// `M(-by)`.
    Shift {
        module: Box<ModuleExpr>,
        by: Degree,
    },
    Sum(Vec<ModuleExpr>),
    /// The monomial ideal generated by the listed exponent vectors.
    Ideal(Vec<Vec<u32>>),
    /// `R / I` for the monomial ideal generated by the listed exponents.
    Quotient(Vec<Vec<u32>>),
}

impl ModuleExpr {
    pub fn ring() -> Self {
        ModuleExpr::Free(vec![Degree::zero()])
    }

    pub fn zero() -> Self {
        ModuleExpr::Free(Vec::new())
    }

    pub fn shift(module: ModuleExpr, by: Degree) -> Self {
        ModuleExpr::Shift { module: Box::new(module), by }
    }

    /// `R / (x_i : i ∈ vars)`.
    pub fn variable_quotient(nvars: usize, vars: &[usize]) -> Self {
        ModuleExpr::Quotient(vars.iter().map(|&v| unit_exponent(nvars, v)).collect())
    }

    /// `R / (all variables)`, i.e. the residue field `k`.
    pub fn residue_field(nvars: usize) -> Self {
        Self::variable_quotient(nvars, &(0..nvars).collect::<Vec<_>>())
    }

    /// When this is `R / (x_i : i ∈ A)` for a set `A` of variables, returns `A`.
    pub fn as_variable_quotient(&self) -> Option<Vec<usize>> {
        let ModuleExpr::Quotient(gens) = self else {
            return None;
        };
        let mut vars = Vec::with_capacity(gens.len());
        for g in gens {
            let nonzero: Vec<usize> = g.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect();
            match nonzero.as_slice() {
                [i] if g[*i] == 1 => vars.push(*i),
                _ => return None,
            }
        }
        vars.sort_unstable();
        vars.dedup();
        Some(vars)
    }
}

fn unit_exponent(nvars: usize, v: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[v] = 1;
    e
}

/// Pads generators to the ring's variable count and drops every generator
/// divisible by another one.
fn reduce_generators(gens: &[Vec<u32>], nvars: usize) -> Result<Vec<Vec<u32>>> {
    let mut padded = Vec::with_capacity(gens.len());
    for g in gens {
        if g.len() > nvars {
            return Err(Error::InvalidModule(format!(
                "generator {g:?} has {} exponents but the ring has {nvars} variables",
                g.len()
            )));
        }
        let mut e = g.clone();
        e.resize(nvars, 0);
        padded.push(e);
    }
    padded.sort();
    padded.dedup();
    let divides = |a: &Vec<u32>, b: &Vec<u32>| a.iter().zip(b).all(|(x, y)| x <= y);
    let reduced = padded.iter().filter(|g| !padded.iter().any(|h| h != *g && divides(h, g))).cloned().collect();
    Ok(reduced)
}

fn normalize(expr: &ModuleExpr, nvars: usize) -> Result<ModuleExpr> {
    Ok(match expr {
        ModuleExpr::Free(shifts) => ModuleExpr::Free(shifts.clone()),
        ModuleExpr::Shift { module, by } => ModuleExpr::shift(normalize(module, nvars)?, by.clone()),
        ModuleExpr::Sum(parts) => ModuleExpr::Sum(parts.iter().map(|p| normalize(p, nvars)).collect::<Result<_>>()?),
        ModuleExpr::Ideal(gens) => ModuleExpr::Ideal(reduce_generators(gens, nvars)?),
        ModuleExpr::Quotient(gens) => ModuleExpr::Quotient(reduce_generators(gens, nvars)?),
    })
}

fn support_of(expr: &ModuleExpr, ring: &RingSpec) -> SupportDescriptor {
    match expr {
        ModuleExpr::Free(shifts) => SupportDescriptor::new(shifts.iter().cloned()),
        ModuleExpr::Shift { module, by } => support_of(module, ring).translate(by),
        ModuleExpr::Sum(parts) => {
            parts.iter().fold(SupportDescriptor::empty(), |acc, p| acc.union(&support_of(p, ring)))
        }
        ModuleExpr::Ideal(gens) => {
            SupportDescriptor::new(gens.iter().map(|g| ring.monomial_degree(&Monomial(g.clone()))))
        }
        ModuleExpr::Quotient(gens) => {
            if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                SupportDescriptor::empty()
            } else {
                SupportDescriptor::cone()
            }
        }
    }
}

/// A basis element of a graded piece: a monomial together with the path of
/// summand indices locating it in the module expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub summand: Vec<u32>,
    pub monomial: Monomial,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}@{:?}", self.monomial.0, self.summand)
    }
}

/// The degree-`g` piece `M_g` with an ordered monomial basis.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    degree: Degree,
    basis: Vec<BasisLabel>,
    index: HashMap<BasisLabel, usize>,
}

impl GradedPiece {
    fn new(degree: Degree, basis: Vec<BasisLabel>) -> Self {
        let index = basis.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        GradedPiece { degree, basis, index }
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// A module expression realized over a ring on a window.
pub struct GradedModule {
    ring: Arc<RingSpec>,
    expr: ModuleExpr,
    window: Window,
    support: SupportDescriptor,
    pieces: Mutex<HashMap<Degree, Arc<GradedPiece>>>,
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedModule").field("expr", &self.expr).field("window", &self.window).finish()
    }
}

impl GradedModule {
    /// Validates the ring on the window and normalizes the expression.
    pub fn new(ring: Arc<RingSpec>, expr: &ModuleExpr, window: Window) -> Result<Self> {
        ring.validate(&window).into_result()?;
        if window.is_empty() {
            return Err(Error::InvalidModule("empty window".into()));
        }
        let expr = normalize(expr, ring.nvars())?;
        let support = support_of(&expr, &ring);
        Ok(GradedModule { ring, expr, window, support, pieces: Mutex::default() })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn expr(&self) -> &ModuleExpr {
        &self.expr
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn support(&self) -> &SupportDescriptor {
        &self.support
    }

    /// Degrees of the window where the module can be nonzero.
    pub fn window_points(&self) -> Vec<Degree> {
        self.window.points_in(&self.support)
    }

    /// `M_g`; the degree must lie in the window.
    pub fn piece(&self, g: &Degree) -> Result<Arc<GradedPiece>> {
        if !self.window.contains(g) {
            return Err(Error::OutsideValidRegion(g.clone()));
        }
        Ok(self.piece_unchecked(g))
    }

    /// `M_g` without the window check; callers guarantee `g` lies below a
    /// degree already checked.
    pub(crate) fn piece_unchecked(&self, g: &Degree) -> Arc<GradedPiece> {
        if let Some(p) = self.pieces.lock().unwrap().get(g) {
            return p.clone();
        }
        let mut basis = Vec::new();
        if self.support.contains(g) {
            collect_labels(&self.expr, &self.ring, g, &mut Vec::new(), &mut basis);
            basis.sort_by(|a, b| graded_lex(&a.monomial.0, &b.monomial.0).then_with(|| a.summand.cmp(&b.summand)));
        }
        let piece = Arc::new(GradedPiece::new(g.clone(), basis));
        self.pieces.lock().unwrap().insert(g.clone(), piece.clone());
        piece
    }

    pub fn dimension(&self, g: &Degree) -> Result<usize> {
        Ok(self.piece(g)?.dimension())
    }

    /// Image of a basis element under multiplication by a variable: another
    /// basis element, or `None` when the product vanishes.
    pub fn act(&self, var: usize, label: &BasisLabel) -> Option<BasisLabel> {
        act(&self.expr, var, label, 0)
    }

    /// Matrix of multiplication by `var` from `M_g` to `M_{g + deg var}`
    /// (rows index the target basis).
    pub fn var_action(&self, var: usize, g: &Degree) -> Result<Matrix<i64>> {
        let target_degree = g + self.ring.var_degree(var);
        let source = self.piece(g)?;
        let target = self.piece(&target_degree)?;
        let mut m = Matrix::zeros(target.dimension(), source.dimension());
        for (col, label) in source.basis().iter().enumerate() {
            if let Some(image) = self.act(var, label) {
                let row = target.position(&image).expect("image lies in the target piece");
                m.set(row, col, 1);
            }
        }
        Ok(m)
    }

    /// Hilbert series on the window.
    pub fn hilbert(&self) -> Series {
        let points = self.window_points();
        let dims: Vec<(Degree, Int)> = points
            .into_par_iter()
            .map(|g| {
                let dim = self.piece_unchecked(&g).dimension();
                (g, Int::from(dim))
            })
            .collect();
        Series::new(self.window.clone(), self.support.clone(), dims).expect("window points lie in the support")
    }

    /// `K(M) = H(M) H(R)^{-1}`, exact on the whole window.
    pub fn kseries(&self) -> Series {
        mul_q(&self.ring.hilbert_inverse(), &self.hilbert())
    }
}

fn collect_labels(expr: &ModuleExpr, ring: &RingSpec, g: &Degree, path: &mut Vec<u32>, out: &mut Vec<BasisLabel>) {
    match expr {
        ModuleExpr::Free(shifts) => {
            for (i, h) in shifts.iter().enumerate() {
                let rest = g - h;
                if !rest.in_q() {
                    continue;
                }
                path.push(i as u32);
                for m in ring.monomials(&rest).iter() {
                    out.push(BasisLabel { summand: path.clone(), monomial: m.clone() });
                }
                path.pop();
            }
        }
        ModuleExpr::Shift { module, by } => collect_labels(module, ring, &(g - by), path, out),
        ModuleExpr::Sum(parts) => {
            for (i, part) in parts.iter().enumerate() {
                path.push(i as u32);
                collect_labels(part, ring, g, path, out);
                path.pop();
            }
        }
        ModuleExpr::Ideal(gens) => {
            for m in ring.monomials(g).iter() {
                if gens.iter().any(|gen| divides(gen, &m.0)) {
                    out.push(BasisLabel { summand: path.clone(), monomial: m.clone() });
                }
            }
        }
        ModuleExpr::Quotient(gens) => {
            for m in ring.monomials(g).iter() {
                if !gens.iter().any(|gen| divides(gen, &m.0)) {
                    out.push(BasisLabel { summand: path.clone(), monomial: m.clone() });
                }
            }
        }
    }
}

/// Total exponent first, then the larger leading exponent first; the same
/// convention as the order on degrees.
fn graded_lex(a: &[u32], b: &[u32]) -> Ordering {
    let total = |e: &[u32]| e.iter().map(|&x| x as u64).sum::<u64>();
    total(a).cmp(&total(b)).then_with(|| b.cmp(a))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn act(expr: &ModuleExpr, var: usize, label: &BasisLabel, depth: usize) -> Option<BasisLabel> {
    match expr {
        ModuleExpr::Free(_) | ModuleExpr::Ideal(_) => {
            Some(BasisLabel { summand: label.summand.clone(), monomial: label.monomial.times_var(var) })
        }
        ModuleExpr::Shift { module, .. } => act(module, var, label, depth),
        ModuleExpr::Sum(parts) => act(&parts[label.summand[depth] as usize], var, label, depth + 1),
        ModuleExpr::Quotient(gens) => {
            let m = label.monomial.times_var(var);
            if gens.iter().any(|g| divides(g, &m.0)) {
                None
            } else {
                Some(BasisLabel { summand: label.summand.clone(), monomial: m })
            }
        }
    }
}
