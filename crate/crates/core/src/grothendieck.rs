//! Grothendieck-ring classes represented by their K-series.

use std::sync::Arc;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graded::{GradedModule, ModuleExpr};
use crate::grading::{descriptor_sum, Degree, Window};
use crate::koszul::{homology_profile, GradedComplex, KoszulComplex};
use crate::scalar::{Characteristic, Coefficient};
use crate::series::{eq_on_window, mul, mul_q};
use crate::{Int, Series};

/// The class `[M]`, stored as `K(M)` on a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    pub series: Series,
    pub provenance: String,
}

impl KClass {
    pub fn new(series: Series, provenance: impl Into<String>) -> Self {
        KClass { series, provenance: provenance.into() }
    }

    /// Equality on the intersection of the two valid regions.
    pub fn eq_on_common_window(&self, other: &KClass) -> bool {
        let w = self.series.window().intersect(other.series.window());
        eq_on_window(&self.series, &other.series, &w).expect("the intersection lies in both windows")
    }
}

impl Serialize for KClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        self.series.serialize_fields(&mut map)?;
        map.serialize_entry("provenance", &self.provenance)?;
        map.end()
    }
}

pub fn class_of(module: &GradedModule) -> KClass {
    KClass::new(module.kseries(), format!("K-series of {}", describe(module.expr())))
}

/// Product in the Grothendieck ring: the product of K-series.
pub fn product(a: &KClass, b: &KClass) -> KClass {
    KClass::new(mul(&a.series, &b.series), format!("({}) * ({})", a.provenance, b.provenance))
}

/// `Σ_i (-1)^i [Tor_i(left, right)]`, computed degreewise from Koszul
/// homology. `left` must be built from variable quotients `R/(A)` and shifted
/// frees by shifts and direct sums; both modules must share a ring.
pub fn serre_product(left: &GradedModule, right: &GradedModule, characteristic: Characteristic) -> Result<KClass> {
    if !Arc::ptr_eq(left.ring(), right.ring()) && **left.ring() != **right.ring() {
        return Err(Error::InvalidModule("Serre product needs both modules over the same ring".into()));
    }
    check_resolvable(left.expr())?;
    let window = left.window().intersect(right.window());
    let support = descriptor_sum(left.support(), right.support());
    let points = window.points_in(&support);
    let chis: Vec<(Degree, Int)> = points
        .into_par_iter()
        .map(|g| {
            let chi = tor_euler(left.expr(), right, &g, characteristic);
            (g, Int::from(chi))
        })
        .collect();
    let euler = Series::new(window, support, chis).expect("points lie in the support");
    let series = mul_q(&right.ring().hilbert_inverse(), &euler);
    Ok(KClass::new(series, format!("Serre: sum (-1)^i [Tor_i({}, {})]", describe(left.expr()), describe(right.expr()))))
}

fn check_resolvable(expr: &ModuleExpr) -> Result<()> {
    match expr {
        ModuleExpr::Free(_) => Ok(()),
        ModuleExpr::Shift { module, .. } => check_resolvable(module),
        ModuleExpr::Sum(parts) => parts.iter().try_for_each(check_resolvable),
        q @ ModuleExpr::Quotient(_) if q.as_variable_quotient().is_some() => Ok(()),
        other => Err(Error::UnsupportedLeftArgument(describe(other))),
    }
}

/// `Σ_i (-1)^i dim Tor_i(left, right)_g`.
fn tor_euler(left: &ModuleExpr, right: &GradedModule, g: &Degree, characteristic: Characteristic) -> i64 {
    match left {
        ModuleExpr::Free(shifts) => shifts.iter().map(|h| right.piece_unchecked(&(g - h)).dimension() as i64).sum(),
        ModuleExpr::Shift { module, by } => tor_euler(module, right, &(g - by), characteristic),
        ModuleExpr::Sum(parts) => parts.iter().map(|p| tor_euler(p, right, g, characteristic)).sum(),
        q => {
            let vars = q.as_variable_quotient().expect("checked by check_resolvable");
            let koszul = KoszulComplex::new(right, &vars).expect("quotient variables come from the ring");
            koszul.with_characteristic(characteristic).euler_unchecked(g)
        }
    }
}

/// The free module `⊕ R(-g)^{a_g}` of an effective class.
pub fn free_from_series(class: &KClass) -> Result<ModuleExpr> {
    let mut shifts = Vec::new();
    for (g, c) in class.series.terms() {
        if c.is_negative_coeff() {
            return Err(Error::NegativeCoefficient { degree: g.clone(), coeff: c.to_string() });
        }
        let n: u64 = c.try_into().expect("coefficient multiplicity fits in u64");
        shifts.extend(std::iter::repeat_n(g.clone(), n as usize));
    }
    Ok(ModuleExpr::Free(shifts))
}

/// `Σ_i (-1)^i K(F_i)` for a resolution shape (shift multisets per index).
pub fn resolution_class(shape: &[Vec<(Degree, u64)>], window: &Window) -> KClass {
    let terms = shape.iter().enumerate().flat_map(|(i, shifts)| {
        let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
        shifts.iter().map(move |(g, b)| (g.clone(), Int::from(sign * *b as i64)))
    });
    KClass::new(Series::polynomial(window.clone(), terms), "alternating sum of resolution shifts")
}

/// Per-degree comparison of chain-level and homology-level Euler
/// characteristics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub holds: bool,
    /// `(degree, Σ(-1)^i dim C_i, Σ(-1)^i dim H_i)`.
    pub degrees: Vec<(Degree, i64, i64)>,
}

/// Checks `Σ(-1)^i dim C_i = Σ(-1)^i dim H_i` at every degree of the
/// complex's window. Fails if some composite of differentials is nonzero.
pub fn euler_check<C: GradedComplex + ?Sized>(complex: &C, characteristic: Characteristic) -> Result<EulerReport> {
    let degrees: Vec<(Degree, i64, i64)> = complex
        .window_points()
        .into_par_iter()
        .map(|g| {
            let p = homology_profile(complex, &g, characteristic, true)?;
            Ok((g, p.chain_euler(), p.homology_euler()))
        })
        .collect::<Result<_>>()?;
    let holds = degrees.iter().all(|(_, a, b)| a == b);
    Ok(EulerReport { holds, degrees })
}

fn describe(expr: &ModuleExpr) -> String {
    serde_json::to_string(expr).expect("module expressions serialize")
}
