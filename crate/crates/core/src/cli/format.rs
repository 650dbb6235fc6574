use std::collections::BTreeSet;

use serde::Serialize;

use crate::grading::{Degree, Window};
use crate::grothendieck::{EulerReport, KClass};
use crate::koszul::{BettiTable, HomologyProfile, TorsionDimension};
use crate::text;
use crate::Series;

use super::spec::OutputFormat;

/// The result of one job, before rendering.
#[derive(Clone, Debug)]
pub enum Report {
    Series(Series),
    Class(KClass),
    Betti(BettiTable),
    Torsion { at: Degree, dimension: TorsionDimension },
    Serre { serre: KClass, product: KClass, agree: bool },
    Koszul { window: Window, sequence: Vec<String>, degrees: Vec<(Degree, HomologyProfile)> },
    Euler(EulerReport),
}

#[derive(Serialize)]
struct TorsionJson<'a> {
    at: &'a Degree,
    torsion_dimension: &'a TorsionDimension,
}

#[derive(Serialize)]
struct SerreJson<'a> {
    serre: &'a KClass,
    product: &'a KClass,
    agree: bool,
}

#[derive(Serialize)]
struct KoszulJson<'a> {
    window: &'a Window,
    sequence: &'a [String],
    acyclic: bool,
    degrees: Vec<KoszulRow<'a>>,
}

#[derive(Serialize)]
struct KoszulRow<'a> {
    degree: &'a Degree,
    chain: &'a [usize],
    homology: &'a [usize],
}

impl Report {
    /// Renders the report. Every format ends with a newline.
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = self.to_json();
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let (header, rows, _) = self.rows();
                text::csv(&header, &rows)
            }
            OutputFormat::Table => {
                let (header, rows, right) = self.rows();
                text::aligned(&header, &rows, &right)
            }
        }
    }

    fn to_json(&self) -> String {
        let out = match self {
            Report::Series(s) => serde_json::to_string(s),
            Report::Class(c) => serde_json::to_string(c),
            Report::Betti(b) => serde_json::to_string(b),
            Report::Torsion { at, dimension } => {
                serde_json::to_string(&TorsionJson { at, torsion_dimension: dimension })
            }
            Report::Serre { serre, product, agree } => {
                serde_json::to_string(&SerreJson { serre, product, agree: *agree })
            }
            Report::Koszul { window, sequence, degrees } => {
                let rows: Vec<KoszulRow> = degrees
                    .iter()
                    .map(|(g, p)| KoszulRow { degree: g, chain: &p.chain_dims, homology: &p.homology_dims })
                    .collect();
                serde_json::to_string(&KoszulJson { window, sequence, acyclic: koszul_acyclic(degrees), degrees: rows })
            }
            Report::Euler(e) => serde_json::to_string(e),
        };
        out.expect("reports serialize")
    }

    fn rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>, Vec<bool>) {
        match self {
            Report::Series(s) => series_rows(s),
            Report::Class(c) => series_rows(&c.series),
            Report::Betti(b) => (
                vec!["i", "degree", "beta"],
                b.entries().map(|(i, g, n)| vec![i.to_string(), g.to_string(), n.to_string()]).collect(),
                vec![true, false, true],
            ),
            Report::Torsion { at, dimension } => {
                (vec!["at", "torsion_dimension"], vec![vec![at.to_string(), dimension.to_string()]], vec![false, true])
            }
            Report::Serre { serre, product, .. } => {
                let degrees: BTreeSet<&Degree> =
                    serre.series.terms().map(|(g, _)| g).chain(product.series.terms().map(|(g, _)| g)).collect();
                let rows = degrees
                    .into_iter()
                    .map(|g| {
                        let a = serre.series.coeff(g).expect("term degrees lie in the window");
                        let b = product.series.coeff(g).expect("term degrees lie in the window");
                        vec![g.to_string(), a.to_string(), b.to_string()]
                    })
                    .collect();
                (vec!["degree", "serre", "product"], rows, vec![false, true, true])
            }
            Report::Koszul { degrees, .. } => {
                let mut rows = Vec::new();
                for (g, p) in degrees {
                    for (n, (c, h)) in p.chain_dims.iter().zip(&p.homology_dims).enumerate() {
                        rows.push(vec![g.to_string(), n.to_string(), c.to_string(), h.to_string()]);
                    }
                }
                (vec!["degree", "n", "chain", "homology"], rows, vec![false, true, true, true])
            }
            Report::Euler(e) => (
                vec!["degree", "chain_euler", "homology_euler"],
                e.degrees.iter().map(|(g, a, b)| vec![g.to_string(), a.to_string(), b.to_string()]).collect(),
                vec![false, true, true],
            ),
        }
    }
}

/// Homology vanishes in every positive index.
pub fn koszul_acyclic(degrees: &[(Degree, HomologyProfile)]) -> bool {
    degrees.iter().all(|(_, p)| p.homology_dims.iter().skip(1).all(|&h| h == 0))
}

fn series_rows(s: &Series) -> (Vec<&'static str>, Vec<Vec<String>>, Vec<bool>) {
    let rows = s.terms().map(|(g, c)| vec![g.to_string(), c.to_string()]).collect();
    (vec!["degree", "coeff"], rows, vec![false, true])
}
