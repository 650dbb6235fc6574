use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{leq_q, Degree, Window};
use crate::series::{invert, QSeries};
use crate::{Int, LazySeries};

/// A polynomial variable and its degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub id: String,
    pub degree: Degree,
}

/// A monomial as a dense exponent vector over the ring's variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn times_var(&self, var: usize) -> Monomial {
        let mut e = self.0.clone();
        e[var] += 1;
        Monomial(e)
    }
}

/// A multigraded polynomial ring `k[x_1, ..., x_n]` with `deg x_i ∈ Q \ {0}`.
pub struct RingSpec {
    variables: Vec<Variable>,
    columns: Option<Vec<u32>>,
    monomials: Mutex<HashMap<Degree, Arc<Vec<Monomial>>>>,
    hilbert_inverse: OnceLock<LazySeries>,
}

impl RingSpec {
    pub fn new(variables: Vec<Variable>) -> Self {
        RingSpec { variables, columns: None, monomials: Mutex::default(), hilbert_inverse: OnceLock::new() }
    }

    /// The matrix ring with column sizes `n_1, n_2, ...`: variables `x_{i,j}`,
    /// `1 <= i <= n_j`, of degree `e_j`, ordered column by column.
    pub fn matrix(columns: &[u32]) -> Self {
        let mut variables = Vec::new();
        for (j, &n) in columns.iter().enumerate() {
            for i in 1..=n {
                variables.push(Variable { id: format!("x{i}_{}", j + 1), degree: Degree::unit(j as u32 + 1) });
            }
        }
        let mut ring = RingSpec::new(variables);
        ring.columns = Some(columns.to_vec());
        ring
    }

    /// `k[x_1, ..., x_n]` with `deg x_i = e_i`.
    pub fn standard(n: u32) -> Self {
        RingSpec::matrix(&vec![1; n as usize])
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn columns(&self) -> Option<&[u32]> {
        self.columns.as_deref()
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_degree(&self, var: usize) -> &Degree {
        &self.variables[var].degree
    }

    pub fn var_index(&self, id: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.id == id)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Degree {
        m.0.iter()
            .zip(&self.variables)
            .filter(|(&e, _)| e > 0)
            .fold(Degree::zero(), |acc, (&e, v)| &acc + &v.degree.scale(e as i64))
    }

    /// Checks pointedness, connectedness and per-degree finiteness.
    pub fn validate(&self, window: &Window) -> ValidationReport {
        let mut violations = Vec::new();
        let mut seen = HashSet::new();
        for v in &self.variables {
            if !seen.insert(v.id.as_str()) {
                violations.push(Violation { variable: v.id.clone(), kind: ViolationKind::DuplicateId });
            }
            if v.degree.is_zero() {
                violations.push(Violation { variable: v.id.clone(), kind: ViolationKind::ZeroDegree });
            } else if !v.degree.in_q() {
                violations.push(Violation { variable: v.id.clone(), kind: ViolationKind::NotInQ });
            }
        }
        let mut per_degree: BTreeMap<Degree, usize> = BTreeMap::new();
        for v in &self.variables {
            if v.degree.in_q() && !v.degree.is_zero() && window.contains(&v.degree) {
                *per_degree.entry(v.degree.clone()).or_default() += 1;
            }
        }
        ValidationReport { violations, in_window: per_degree }
    }

    /// Every monomial of multidegree `g`, in descending lex order of exponents.
    pub fn monomials(&self, g: &Degree) -> Arc<Vec<Monomial>> {
        if let Some(m) = self.monomials.lock().unwrap().get(g) {
            return m.clone();
        }
        let mut out = Vec::new();
        if g.in_q() {
            let usable: Vec<usize> = (0..self.nvars())
                .filter(|&i| {
                    let d = &self.variables[i].degree;
                    !d.is_zero() && d.in_q() && leq_q(d, g)
                })
                .collect();
            let mut exps = vec![0u32; self.nvars()];
            self.enumerate(&usable, 0, g.clone(), &mut exps, &mut out);
        }
        let out = Arc::new(out);
        self.monomials.lock().unwrap().insert(g.clone(), out.clone());
        out
    }

    fn enumerate(&self, usable: &[usize], k: usize, rest: Degree, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k == usable.len() {
            if rest.is_zero() {
                out.push(Monomial(exps.clone()));
            }
            return;
        }
        let var = usable[k];
        let d = &self.variables[var].degree;
        let mut max = 0u32;
        let mut r = rest.clone();
        while leq_q(d, &r) {
            r = &r - d;
            max += 1;
        }
        for e in (0..=max).rev() {
            exps[var] = e;
            let remaining = &rest - &d.scale(e as i64);
            self.enumerate(usable, k + 1, remaining, exps, out);
        }
        exps[var] = 0;
    }

    /// `dim_k R_g`.
    pub fn hilbert_coeff(&self, g: &Degree) -> usize {
        self.monomials(g).len()
    }

    /// The Hilbert series of the ring as a lazy `Q`-supported series.
    pub fn hilbert(self: &Arc<Self>) -> LazySeries {
        let ring = Arc::clone(self);
        QSeries::from_fn(move |g| Int::from(ring.hilbert_coeff(g)))
    }

    /// `H(R)^{-1}`, shared across every module over this ring.
    pub fn hilbert_inverse(self: &Arc<Self>) -> LazySeries {
        self.hilbert_inverse.get_or_init(|| invert(&self.hilbert()).expect("a connected ring has H(R)_0 = 1")).clone()
    }
}

impl Clone for RingSpec {
    fn clone(&self) -> Self {
        RingSpec {
            variables: self.variables.clone(),
            columns: self.columns.clone(),
            monomials: Mutex::default(),
            hilbert_inverse: OnceLock::new(),
        }
    }
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingSpec").field("variables", &self.variables).field("columns", &self.columns).finish()
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.variables == other.variables
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `deg x = 0`, so `R_0 != k`.
    ZeroDegree,
    /// The degree has a negative coefficient.
    NotInQ,
    DuplicateId,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::ZeroDegree => "degree 0 violates connectedness",
            ViolationKind::NotInQ => "degree outside Q violates pointedness",
            ViolationKind::DuplicateId => "duplicate variable id",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub variable: String,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Number of variables of each degree inside the window.
    pub in_window: BTreeMap<Degree, usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            return Ok(());
        }
        let msgs: Vec<String> = self.violations.iter().map(|v| format!("{}: {}", v.variable, v.kind)).collect();
        Err(Error::InvalidRing(msgs.join("; ")))
    }
}
