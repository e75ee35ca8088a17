use std::io::Write;

use pairopt::optimizer::{optimal_depth_second_order, optimize_full};
use pairopt::{DesignProblem, SolverOptions};

use crate::args::{TableArgs, TableFormat, TableKind};
use crate::error::CliResult;
use crate::render;

/// Levels of the second-order depth table.
pub const SECOND_ORDER_LEVELS: [usize; 10] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 20];

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn write(&self, format: TableFormat, out: &mut dyn Write) -> CliResult<()> {
        match format {
            TableFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
            TableFormat::Md => {
                writeln!(out, "| {} |", self.header.join(" | "))?;
                writeln!(out, "|{}", "---|".repeat(self.header.len()))?;
                for row in &self.rows {
                    writeln!(out, "| {} |", row.join(" | "))?;
                }
            }
        }
        Ok(())
    }
}

fn second_order_depths() -> CliResult<Table> {
    let mut header = vec!["K".to_string(), "S".to_string()];
    header.extend(SECOND_ORDER_LEVELS.iter().map(|v| format!("v={v}")));
    let mut rows = Vec::new();
    for k in 4..=10 {
        let mut row = vec![k.to_string(), (k - 1).to_string()];
        for v in SECOND_ORDER_LEVELS {
            let problem = DesignProblem::new(k, k - 1, v)?;
            row.push(optimal_depth_second_order(&problem).to_string());
        }
        rows.push(row);
    }
    Ok(Table { header, rows })
}

fn full_designs(bold: bool) -> CliResult<Table> {
    let mut header = vec!["K".to_string(), "S".to_string()];
    header.extend((2..=8).map(|v| format!("v={v}")));
    let mut rows = Vec::new();
    for k in 4..=10 {
        for s in 3..=k {
            let mut row = vec![k.to_string(), s.to_string()];
            for v in 2..=8 {
                let problem = DesignProblem::new(k, s, v)?;
                let result = optimize_full(&problem, &SolverOptions::default())?;
                row.push(render::design_cell(&result.support_weights(), s, 3, bold));
            }
            rows.push(row);
        }
    }
    Ok(Table { header, rows })
}

fn full_profile_variance(bold: bool) -> CliResult<Table> {
    let mut header = vec!["K".to_string(), "v".to_string()];
    header.extend((1..=10).map(|d| format!("d={d}")));
    let mut rows = Vec::new();
    for k in 4..=10 {
        for v in 2..=8 {
            let problem = DesignProblem::new(k, k, v)?;
            let result = optimize_full(&problem, &SolverOptions::default())?;
            let mut row = vec![k.to_string(), v.to_string()];
            for d in 1..=10 {
                if d > k {
                    row.push(String::new());
                    continue;
                }
                let cell = render::normalized_variance(*result.certificate.at(d));
                if bold && result.support.contains(&d) {
                    row.push(format!("**{cell}**"));
                } else {
                    row.push(cell);
                }
            }
            rows.push(row);
        }
    }
    Ok(Table { header, rows })
}

pub fn build(kind: TableKind, format: TableFormat) -> CliResult<Table> {
    let bold = format == TableFormat::Md;
    match kind {
        TableKind::SecondOrderDepth => second_order_depths(),
        TableKind::FullDesign => full_designs(bold),
        TableKind::FullProfileVariance => full_profile_variance(bold),
    }
}

pub fn run(args: &TableArgs, out: &mut dyn Write) -> CliResult<()> {
    build(args.which, args.format)?.write(args.format, out)
}
