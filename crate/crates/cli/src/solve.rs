use std::io::Write;
use std::time::Instant;

use pairopt::optimizer::{
    optimal_depth_first_order, optimal_depth_main, optimal_depth_second_order, optimize_full,
};
use pairopt::{DesignProblem, SolverOptions};
use serde::Serialize;

use crate::args::{SolveArgs, Target};
use crate::error::{CliError, CliResult};
use crate::render;

#[derive(Debug, Serialize)]
pub struct ProblemReport {
    pub attributes: usize,
    pub strength: usize,
    pub levels: usize,
    pub parameters: usize,
}

impl ProblemReport {
    pub fn new(problem: &DesignProblem) -> Self {
        Self {
            attributes: problem.attributes(),
            strength: problem.strength(),
            levels: problem.levels(),
            parameters: problem.layout().total,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CertificateReport {
    pub passed: bool,
    pub max_normalized_variance: f64,
    pub tolerance: f64,
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub problem: ProblemReport,
    pub target: String,
    pub support: Vec<usize>,
    /// Weights rounded to the requested precision.
    pub weights: Vec<f64>,
    pub exact_weights: Vec<f64>,
    /// Compact design cell, e.g. `(2, 0.857)`.
    pub design: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<f64>,
    /// `V(d)/p` for `d = 1..=S`, rounded to three decimals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized_variance: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
    pub elapsed_ms: f64,
}

fn target_name(target: Target) -> &'static str {
    match target {
        Target::Main => "main",
        Target::FirstOrder => "first-order",
        Target::SecondOrder => "second-order",
        Target::Full => "full",
    }
}

fn rounded(x: f64, places: u32) -> f64 {
    render::fixed(x, places).parse().expect("decimal string")
}

pub fn solve_report(args: &SolveArgs) -> CliResult<SolveReport> {
    let p = args.problem;
    let problem = DesignProblem::new(p.attributes, p.strength, p.levels)?;
    let start = Instant::now();
    let single = |depth: usize| (vec![depth], vec![1.0]);
    let mut objective = None;
    let mut normalized_variance = None;
    let mut certificate = None;
    let (support, exact_weights) = match args.target {
        Target::Main => single(optimal_depth_main(&problem)),
        Target::FirstOrder => single(optimal_depth_first_order(&problem)),
        Target::SecondOrder => single(optimal_depth_second_order(&problem)),
        Target::Full => {
            let options = SolverOptions {
                weight_tolerance: args.weight_tolerance,
                kw_tolerance: args.tolerance,
            };
            let result = optimize_full(&problem, &options)?;
            objective = Some(result.objective);
            normalized_variance = Some(
                result
                    .certificate
                    .per_depth
                    .iter()
                    .map(|&x| rounded(x, 3))
                    .collect(),
            );
            certificate = Some(CertificateReport {
                passed: result.certificate.passed,
                max_normalized_variance: result.certificate.max_normalized_variance,
                tolerance: result.certificate.tolerance,
            });
            let (support, weights) = result.support_weights().into_iter().unzip();
            (support, weights)
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let pairs: Vec<(usize, f64)> = support
        .iter()
        .copied()
        .zip(exact_weights.iter().copied())
        .collect();
    Ok(SolveReport {
        problem: ProblemReport::new(&problem),
        target: target_name(args.target).to_string(),
        design: render::design_cell(&pairs, problem.strength(), args.precision, false),
        weights: exact_weights
            .iter()
            .map(|&w| rounded(w, args.precision))
            .collect(),
        support,
        exact_weights,
        objective,
        normalized_variance,
        certificate,
        elapsed_ms,
    })
}

pub fn run(args: &SolveArgs, out: &mut dyn Write) -> CliResult<()> {
    if args.precision > 15 {
        return Err(CliError::Usage("--precision must be at most 15".into()));
    }
    let report = solve_report(args)?;
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &report)?;
        writeln!(out)?;
        return Ok(());
    }
    let p = &report.problem;
    writeln!(
        out,
        "problem    K={} S={} v={} ({} parameters)",
        p.attributes, p.strength, p.levels, p.parameters
    )?;
    writeln!(out, "target     {}", report.target)?;
    writeln!(out, "design     {}", report.design)?;
    if let (Some(objective), Some(variance), Some(cert)) = (
        report.objective,
        &report.normalized_variance,
        &report.certificate,
    ) {
        let weights: Vec<String> = report
            .exact_weights
            .iter()
            .map(|&w| render::fixed(w, args.precision))
            .collect();
        let support: Vec<String> = report.support.iter().map(usize::to_string).collect();
        let variance: Vec<String> = variance
            .iter()
            .map(|&x| render::normalized_variance(x))
            .collect();
        writeln!(out, "support    {}", support.join(" "))?;
        writeln!(out, "weights    {}", weights.join(" "))?;
        writeln!(out, "log det    {objective:.9}")?;
        writeln!(out, "V/p        {}", variance.join(" "))?;
        writeln!(
            out,
            "certificate {} (max V/p = {:.12}, tolerance {:e})",
            if cert.passed { "pass" } else { "FAIL" },
            cert.max_normalized_variance,
            cert.tolerance
        )?;
    }
    writeln!(out, "elapsed    {:.3} ms", report.elapsed_ms)?;
    Ok(())
}
