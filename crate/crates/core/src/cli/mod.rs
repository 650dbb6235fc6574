//! Batch front end: one JSON job per invocation.
//!
//! A job names a command, a ring, one or two module expressions and a
//! window. The result goes to stdout as JSON, CSV or an aligned table.
//! Failures go to stderr as a JSON record, with exit code 2 for parse
//! errors, 3 for validation errors, 4 for window errors and 1 otherwise.

mod format;
mod spec;

use std::path::PathBuf;
use std::sync::Arc;

use clap::Parser;
use log::{debug, info};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::{GradedModule, ModuleExpr, RingSpec};
use crate::grothendieck::{class_of, euler_check, product, serre_product};
use crate::koszul::{betti_table, homology_profile, torsion_dimension, KoszulComplex};
use crate::series::{invert, QSeries};
use crate::Int;

pub use format::{koszul_acyclic, Report};
pub use spec::{parse_spec, parse_spec_with, Command, JobSpec, OutputFormat, Overrides, RingInput};

#[derive(Debug, Parser)]
#[command(name = "bdfkalc", version, about = "Exact multigraded module computations on finite windows")]
pub struct Args {
    /// Path to the JSON job file.
    #[arg(long)]
    pub spec: PathBuf,

    /// Overrides the job's `command`.
    #[arg(long)]
    pub command: Option<String>,

    /// Output format: json, csv or table. Overrides the job's `output`.
    #[arg(long)]
    pub output: Option<String>,

    /// Worker threads for per-degree parallelism (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,

    /// Field characteristic: 0 or a prime. Overrides the job's `char`.
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
}

/// Runs a validated job and renders its output.
pub fn run(job: &JobSpec) -> Result<String> {
    info!("running `{}` on window {:?}", job.command, job.window);
    Ok(compute(job)?.render(job.output))
}

/// Runs a validated job without rendering.
pub fn compute(job: &JobSpec) -> Result<Report> {
    let ch = job.characteristic;
    if job.command == Command::Invert {
        let terms = job.series.iter().flatten().map(|(g, c)| (g.clone(), Int::from(*c)));
        let inverse = invert(&QSeries::from_terms(terms)?)?;
        return Ok(Report::Series(inverse.truncate(&job.window)));
    }

    let ring = Arc::new(job.ring.as_ref().expect("arity checked").build());
    let module = build_module(&ring, job.module.as_ref().expect("arity checked"), job)?;
    debug!("module support {:?}", module.support());

    Ok(match job.command {
        Command::Hilbert => Report::Series(module.hilbert()),
        Command::Kseries => Report::Class(class_of(&module)),
        Command::Betti => Report::Betti(betti_table(&module, ch)?),
        Command::TorsionDim => {
            let at = job.at.clone().expect("arity checked");
            let dimension = torsion_dimension(&module, &at, ch)?;
            Report::Torsion { at, dimension }
        }
        Command::Serre => {
            let right = build_module(&ring, job.right.as_ref().expect("arity checked"), job)?;
            let serre = serre_product(&module, &right, ch)?;
            let product = product(&class_of(&module), &class_of(&right));
            let agree = serre.eq_on_common_window(&product);
            Report::Serre { serre, product, agree }
        }
        Command::KoszulVerify => {
            let (complex, sequence) = koszul_complex(&ring, &module, job)?;
            let degrees = module
                .window_points()
                .into_par_iter()
                .map(|g| homology_profile(&complex, &g, ch, true).map(|p| (g, p)))
                .collect::<Result<Vec<_>>>()?;
            Report::Koszul { window: job.window.clone(), sequence, degrees }
        }
        Command::EulerCheck => {
            let (complex, _) = koszul_complex(&ring, &module, job)?;
            Report::Euler(euler_check(&complex, ch)?)
        }
        Command::Invert => unreachable!("handled above"),
    })
}

fn build_module(ring: &Arc<RingSpec>, expr: &ModuleExpr, job: &JobSpec) -> Result<GradedModule> {
    GradedModule::new(Arc::clone(ring), expr, job.window.clone())
}

fn koszul_complex<'a>(
    ring: &RingSpec,
    module: &'a GradedModule,
    job: &JobSpec,
) -> Result<(KoszulComplex<'a>, Vec<String>)> {
    let ids: Vec<String> = match &job.sequence {
        Some(ids) => ids.clone(),
        None => ring.variables().iter().map(|v| v.id.clone()).collect(),
    };
    let seq = ids
        .iter()
        .map(|id| ring.var_index(id).ok_or_else(|| Error::InvalidModule(format!("unknown variable `{id}`"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((KoszulComplex::new(module, &seq)?.with_characteristic(job.characteristic), ids))
}

/// The structured record written to stderr on failure.
pub fn error_record(e: &Error) -> String {
    let kind = e.kind();
    serde_json::json!({
        "error": { "kind": kind.as_str(), "exit_code": kind.exit_code(), "message": e.to_string() }
    })
    .to_string()
}

/// Reads, validates and runs the job named by `args`.
pub fn execute(args: &Args) -> Result<String> {
    let text = std::fs::read_to_string(&args.spec)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", args.spec.display())))?;
    let overrides =
        Overrides { command: args.command.clone(), output: args.output.clone(), characteristic: args.characteristic };
    let job = parse_spec_with(&text, args.spec.parent(), &overrides)?;
    match args.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Parse(format!("bad --threads: {e}")))?;
            pool.install(|| run(&job))
        }
        None => run(&job),
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with(args: &Args) -> i32 {
    match execute(args) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) => {
            eprintln!("{}", error_record(&e));
            e.kind().exit_code()
        }
    }
}
