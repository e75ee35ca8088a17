//! JSON files describing a design: the pair list written by `export`, or a
//! plain list of depth weights.

use std::str::FromStr;

use pairopt::effects::{PairedComparison, Profile};
use pairopt::{DesignProblem, InvariantDesign, Rational};
use rust_decimal::Decimal;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

/// One exported pair. Attribute indices are 1-based; alternatives list the
/// level of every attribute, with 0 for attributes not shown.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExportedPair {
    pub pair_id: u64,
    pub attr_subset: Vec<usize>,
    pub alt1: Vec<usize>,
    pub alt2: Vec<usize>,
    pub weight: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepthWeight {
    pub depth: usize,
    /// A fraction string such as `"6/7"`, or a decimal number.
    pub weight: Value,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DesignFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attributes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strength: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<DepthWeight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<ExportedPair>>,
}

/// A design read from a file.
#[derive(Debug, Clone)]
pub struct LoadedDesign {
    /// Depth weights; for a pair list, the total weight of each depth.
    pub design: InvariantDesign<Rational>,
    /// The explicit pairs, when the file lists them.
    pub pairs: Option<Vec<(PairedComparison, Rational)>>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::DesignFile(msg.into())
}

/// Exact value of a weight given as a fraction string or a decimal.
pub fn parse_weight(value: &Value) -> CliResult<Rational> {
    let text = match value {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) => n.to_string(),
        other => {
            return Err(bad(format!(
                "weight must be a string or number, got {other}"
            )))
        }
    };
    if let Ok(r) = Rational::from_str(&text) {
        return Ok(r);
    }
    let d = Decimal::from_str(&text)
        .or_else(|_| Decimal::from_scientific(&text))
        .map_err(|_| bad(format!("unreadable weight {text:?}")))?;
    Rational::from_str(&format!("{}/{}", d.mantissa(), 10i128.pow(d.scale())))
        .map_err(|_| bad(format!("unreadable weight {text:?}")))
}

impl DesignFile {
    pub fn read(path: &std::path::Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))
    }

    /// Resolves the file against `problem`, rejecting files written for a
    /// different problem.
    pub fn load(&self, problem: &DesignProblem) -> CliResult<LoadedDesign> {
        let declared = [
            ("attributes", self.attributes, problem.attributes()),
            ("strength", self.strength, problem.strength()),
            ("levels", self.levels, problem.levels()),
        ];
        for (name, found, expected) in declared {
            if let Some(found) = found {
                if found != expected {
                    return Err(bad(format!(
                        "{name} is {found} in the file but {expected} on the command line"
                    )));
                }
            }
        }
        match &self.pairs {
            Some(pairs) => load_pairs(problem, pairs),
            None => {
                if self.weights.is_empty() {
                    return Err(bad("the file lists neither pairs nor weights"));
                }
                let weights = self
                    .weights
                    .iter()
                    .map(|w| Ok((w.depth, parse_weight(&w.weight)?)))
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(LoadedDesign {
                    design: InvariantDesign::from_pairs(*problem, &weights)?,
                    pairs: None,
                })
            }
        }
    }
}

fn load_pairs(problem: &DesignProblem, pairs: &[ExportedPair]) -> CliResult<LoadedDesign> {
    let mut per_depth = vec![Rational::default(); problem.strength() + 1];
    let mut out = Vec::with_capacity(pairs.len());
    for entry in pairs {
        let context = |msg: String| bad(format!("pair {}: {msg}", entry.pair_id));
        let first =
            Profile::new(problem, entry.alt1.clone()).map_err(|e| context(e.to_string()))?;
        let second =
            Profile::new(problem, entry.alt2.clone()).map_err(|e| context(e.to_string()))?;
        let shown: Vec<usize> = first.shown_attributes().iter().map(|a| a + 1).collect();
        if shown != entry.attr_subset {
            return Err(context(format!(
                "attr_subset {:?} does not match the shown attributes {shown:?}",
                entry.attr_subset
            )));
        }
        let pair = PairedComparison::new(first, second).map_err(|e| context(e.to_string()))?;
        let weight = parse_weight(&entry.weight)?;
        per_depth[pair.depth()] += &weight;
        out.push((pair, weight));
    }
    if per_depth[0] != Rational::default() {
        return Err(bad("pairs of identical alternatives carry weight"));
    }
    Ok(LoadedDesign {
        design: InvariantDesign::new(*problem, per_depth.split_off(1))?,
        pairs: Some(out),
    })
}
