use std::io::Write;

use num_traits::ToPrimitive;
use pairopt::effects::{enumerate_orbit, PairedComparison};
use pairopt::{DesignProblem, Error, Rational};
use serde_json::Value;

use crate::args::{ExportArgs, ExportFormat};
use crate::design_file::{DepthWeight, DesignFile, ExportedPair};
use crate::error::{CliError, CliResult};
use crate::resolve_cap;

fn join_levels(levels: &[usize]) -> String {
    levels
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("|")
}

fn exported(id: u64, pair: &PairedComparison, weight: Value) -> ExportedPair {
    ExportedPair {
        pair_id: id,
        attr_subset: pair
            .first
            .shown_attributes()
            .iter()
            .map(|a| a + 1)
            .collect(),
        alt1: pair.first.levels().to_vec(),
        alt2: pair.second.levels().to_vec(),
        weight,
    }
}

/// Writes the uniform design on one depth orbit.
pub fn write_orbit(
    problem: &DesignProblem,
    depth: usize,
    format: ExportFormat,
    cap: u64,
    out: &mut dyn Write,
) -> CliResult<()> {
    problem.check_depth(depth)?;
    if depth == 0 {
        return Err(CliError::Usage(
            "depth 0 compares identical alternatives; choose a depth in 1..=S".into(),
        ));
    }
    let count = problem.orbit_count(depth)?;
    let n = match count.to_u64() {
        Some(n) if n <= cap => n,
        _ => return Err(Error::CapExceeded { pairs: count, cap }.into()),
    };
    let weight = Rational::new(1.into(), n.into());
    let pairs = enumerate_orbit(problem, depth)?;
    match format {
        ExportFormat::Csv => {
            let decimal = (1.0 / n as f64).to_string();
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["pair_id", "attr_subset", "alt1", "alt2", "weight"])?;
            for (i, pair) in pairs.enumerate() {
                let row = exported(i as u64 + 1, &pair, Value::Null);
                w.write_record([
                    row.pair_id.to_string(),
                    join_levels(&row.attr_subset),
                    join_levels(&row.alt1),
                    join_levels(&row.alt2),
                    decimal.clone(),
                ])?;
            }
            w.flush()?;
        }
        ExportFormat::Json => {
            let fraction = Value::String(weight.to_string());
            let file = DesignFile {
                attributes: Some(problem.attributes()),
                strength: Some(problem.strength()),
                levels: Some(problem.levels()),
                depth: Some(depth),
                weights: vec![DepthWeight {
                    depth,
                    weight: Value::String("1".into()),
                }],
                pairs: Some(
                    pairs
                        .enumerate()
                        .map(|(i, pair)| exported(i as u64 + 1, &pair, fraction.clone()))
                        .collect(),
                ),
            };
            serde_json::to_writer(&mut *out, &file)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn run(args: &ExportArgs, out: &mut dyn Write) -> CliResult<()> {
    let p = args.problem;
    let problem = DesignProblem::new(p.attributes, p.strength, p.levels)?;
    let cap = resolve_cap(args.cap)?;
    match &args.out {
        Some(path) => {
            let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
            write_orbit(&problem, args.depth, args.format, cap, &mut file)?;
            file.flush()?;
            Ok(())
        }
        None => write_orbit(&problem, args.depth, args.format, cap, out),
    }
}
