use std::collections::BTreeMap;
use std::io::Write;

use num_traits::ToPrimitive;
use pairopt::closed_form::{info_summary, information_matrix};
use pairopt::effects::{difference_vector, PairedComparison};
use pairopt::optimizer::optimize_full;
use pairopt::oracle::{
    check_appendix_sums, check_block_information, check_orbit_multiplicities,
    check_variance_elements, check_variance_function, check_variance_function_float, CheckReport,
};
use pairopt::{DesignProblem, Error, Rational, RationalMatrix, SolverOptions};

use crate::args::VerifyArgs;
use crate::design_file::DesignFile;
use crate::error::{CliError, CliResult};
use crate::resolve_cap;

/// Largest level count of the triple-sum identities.
pub const APPENDIX_SUM_MAX_LEVELS: usize = 6;
/// Largest level count of the variance-element identities.
pub const VARIANCE_ELEMENT_MAX_LEVELS: usize = 8;

/// Information matrix summed directly over an explicit weighted pair list.
pub fn explicit_information(
    problem: &DesignProblem,
    pairs: &[(PairedComparison, Rational)],
) -> RationalMatrix {
    let dim = problem.layout().total;
    let mut grams: BTreeMap<&Rational, Vec<i64>> = BTreeMap::new();
    for (pair, weight) in pairs {
        let x = difference_vector(problem, pair);
        let x = x.coords();
        let nz: Vec<usize> = (0..dim).filter(|&i| x[i] != 0).collect();
        let gram = grams.entry(weight).or_insert_with(|| vec![0; dim * dim]);
        for &i in &nz {
            for &j in &nz {
                gram[i * dim + j] += i64::from(x[i]) * i64::from(x[j]);
            }
        }
    }
    let mut total = RationalMatrix::zeros(dim, dim);
    for (weight, gram) in grams {
        total = total.add(&RationalMatrix::from_integers(dim, dim, &gram).scale(weight));
    }
    total
}

fn check_explicit_pairs(
    problem: &DesignProblem,
    pairs: &[(PairedComparison, Rational)],
    expected: &RationalMatrix,
) -> CheckReport {
    let got = explicit_information(problem, pairs);
    let first_discrepancy = got.first_difference(expected).map(|(i, j)| {
        format!(
            "entry ({i}, {j}): listed pairs give {}, invariant design gives {}",
            got.get(i, j),
            expected.get(i, j)
        )
    });
    CheckReport {
        name: format!("information of the {} listed pairs, {problem}", pairs.len()),
        passed: first_discrepancy.is_none(),
        checked: (got.rows() * got.cols()) as u64,
        first_discrepancy,
    }
}

/// Runs every applicable check and returns the reports in order.
pub fn reports(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<Vec<CheckReport>> {
    let p = args.problem;
    let problem = DesignProblem::new(p.attributes, p.strength, p.levels)?;
    let cap = resolve_cap(args.cap)?;
    let region = problem.region_size();
    if region.to_u64().is_none_or(|n| n > cap) {
        return Err(Error::CapExceeded { pairs: region, cap }.into());
    }

    let mut reports = Vec::new();
    let mut push = |report: CheckReport, out: &mut dyn Write| -> CliResult<()> {
        writeln!(out, "{report}")?;
        reports.push(report);
        Ok(())
    };
    for depth in 0..=problem.strength() {
        push(check_block_information(&problem, depth, cap)?, out)?;
    }
    push(check_orbit_multiplicities(&problem, cap)?, out)?;
    if problem.levels() <= APPENDIX_SUM_MAX_LEVELS {
        push(check_appendix_sums(problem.levels())?, out)?;
    } else {
        writeln!(
            out,
            "skip triple-sum identities (v > {APPENDIX_SUM_MAX_LEVELS})"
        )?;
    }
    if problem.levels() <= VARIANCE_ELEMENT_MAX_LEVELS {
        push(check_variance_elements(problem.levels())?, out)?;
    } else {
        writeln!(
            out,
            "skip variance-element identities (v > {VARIANCE_ELEMENT_MAX_LEVELS})"
        )?;
    }

    match &args.design {
        Some(path) => {
            let loaded = DesignFile::read(path)?.load(&problem)?;
            if let Some(pairs) = &loaded.pairs {
                let expected = information_matrix(&problem, &info_summary(&loaded.design));
                push(check_explicit_pairs(&problem, pairs, &expected), out)?;
            }
            push(check_variance_function(&loaded.design, cap)?, out)?;
        }
        None => {
            let solved = optimize_full(&problem, &SolverOptions::default())?;
            push(check_variance_function_float(&solved.design, cap)?, out)?;
        }
    }
    Ok(reports)
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let reports = reports(args, out)?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(CliError::CheckFailed(format!(
            "{failed} of {} checks failed",
            reports.len()
        )));
    }
    writeln!(out, "all {} checks passed", reports.len())?;
    Ok(())
}
