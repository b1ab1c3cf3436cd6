//! Graph JSON, matrix text and report serialisation.
//!
//! Floating-point output is rounded to 12 significant digits before it is
//! written.

use std::fmt::Display;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{BoundReport, SignatureSearchResult};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, SignedGraph};
use crate::linalg::{DenseMatrix, Spectrum};
use crate::scalar::Real;
use crate::spectral::SpectrumPrediction;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to [`SIGNIFICANT_DIGITS`] and folds `-0` into `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize, i8)>,
    #[serde(default)]
    pub bipartition_s: Option<usize>,
}

/// A graph read from JSON, with its bipartition when one was recorded.
#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: SignedGraph,
    pub bipartition: Option<Bipartition>,
}

impl GraphFile {
    pub fn plain(graph: SignedGraph) -> Self {
        Self {
            graph,
            bipartition: None,
        }
    }

    pub fn bipartite(b: Bipartition) -> Self {
        Self {
            graph: b.graph().clone(),
            bipartition: Some(b),
        }
    }
}

pub fn graph_from_json(text: &str) -> Result<GraphFile> {
    let raw: GraphJson = serde_json::from_str(text)?;
    let graph = SignedGraph::from_edges(raw.n, &raw.edges)?;
    let bipartition = raw
        .bipartition_s
        .map(|s| Bipartition::new(graph.clone(), s))
        .transpose()?;
    Ok(GraphFile { graph, bipartition })
}

/// Only contiguous splits (V1 first) are recorded; others write `null`.
pub fn graph_to_json(g: &SignedGraph, bipartition: Option<&Bipartition>) -> String {
    let s = bipartition.filter(|b| b.is_contiguous()).map(|b| b.s());
    let raw = GraphJson {
        n: g.order(),
        edges: g.edges(),
        bipartition_s: s,
    };
    serde_json::to_string(&raw).expect("graph JSON serialises")
}

/// `"rows cols"` then one whitespace-separated row per line.
pub fn matrix_to_text<T: crate::scalar::Element + Display>(m: &DenseMatrix<T>) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn matrix_from_text<T>(text: &str) -> Result<DenseMatrix<T>>
where
    T: crate::scalar::Element + FromStr,
{
    let mut tokens = text.split_whitespace();
    let mut dim = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("missing {what}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad {what}")))
    };
    let rows = dim("row count")?;
    let cols = dim("column count")?;
    let data: Vec<T> = tokens
        .map(|t| {
            t.parse::<T>()
                .map_err(|_| Error::Parse(format!("bad matrix entry {t:?}")))
        })
        .collect::<Result<_>>()?;
    if data.len() != rows * cols {
        return Err(Error::Parse(format!(
            "expected {} entries, found {}",
            rows * cols,
            data.len()
        )));
    }
    DenseMatrix::new(rows, cols, data)
}

pub fn spectrum_to_value<T: Real>(s: &Spectrum<T>) -> Value {
    let pairs: Vec<Value> = s
        .groups()
        .iter()
        .map(|g| json!({"value": round_sig(g.value.as_f64()), "mult": g.mult}))
        .collect();
    json!({ "pairs": pairs })
}

pub fn spectrum_from_value(v: &Value, grouping_tol: f64) -> Result<Spectrum<f64>> {
    let pairs = v
        .get("pairs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("spectrum JSON needs a \"pairs\" array".into()))?;
    let mut out = Vec::with_capacity(pairs.len());
    for p in pairs {
        let value = p
            .get("value")
            .and_then(Value::as_f64)
            .ok_or_else(|| Error::Parse("pair without value".into()))?;
        let mult = p
            .get("mult")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("pair without mult".into()))?;
        out.push((value, mult as usize));
    }
    Ok(Spectrum::from_pairs(&out, grouping_tol))
}

pub fn prediction_to_value<T: Real>(p: &SpectrumPrediction<T>) -> Value {
    let pairs: Vec<Value> = p
        .groups()
        .iter()
        .map(|g| json!({"value": round_sig(g.value.as_f64()), "mult": g.mult, "provenance": g.provenance}))
        .collect();
    json!({ "pairs": pairs })
}

pub fn bound_report_to_value(r: &BoundReport) -> Value {
    json!({
        "subset_size": r.subset_size,
        "brute_min_max_degree": r.brute_min_max_degree,
        "spectral_bound": round_sig(r.spectral_bound),
        "spectral_bound_ceil": r.spectral_bound_ceil,
        "witness_subset": r.witness_subset,
        "elapsed_seconds": round_sig(r.elapsed.as_secs_f64()),
        "holds": r.holds(),
    })
}

pub fn signature_result_to_value(r: &SignatureSearchResult) -> Value {
    json!({
        "best_rho": round_sig(r.best_rho),
        "best_signature": r.best_signature,
        "encoding": r.encoding,
        "edges": r.edges,
        "all_positive_rho": round_sig(r.all_positive_rho),
        "max_degree": r.max_degree,
        "bound": r.bound.map(round_sig),
        "satisfied": r.satisfied,
        "evaluated": r.evaluated,
    })
}
