//! Named builtins, files and stdin as graphs, factors and weighing matrices.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use signed_spectra::constructions::{
    c4, conference_paley, hadamard, huang_hypercube, k2, k22neg, k3, p3, petersen, s14, signed_complete,
    signed_complete_bipartite, star_k12, toroidal_t2n, w74, WeighingMatrix,
};
use signed_spectra::io::{graph_from_json, matrix_from_text, GraphFile};
use signed_spectra::{find_bipartition, Factor, IntMatrix, RealMatrix, SignedGraph};

/// Source text from a path, or stdin for `-`.
pub fn read_source(src: &str) -> Result<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(src).with_context(|| format!("reading {src}"))
    }
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Graph JSON or an integer sign matrix.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    if is_json(text) {
        return Ok(graph_from_json(text)?);
    }
    let m: IntMatrix = matrix_from_text(text)?;
    Ok(GraphFile::plain(SignedGraph::from_sign_matrix(&m)?))
}

pub fn load_graph(src: &str) -> Result<GraphFile> {
    parse_graph(&read_source(src)?).with_context(|| format!("parsing graph from {src}"))
}

/// Any symmetric real matrix: graph JSON becomes its adjacency matrix.
pub fn load_real_matrix(src: &str) -> Result<RealMatrix> {
    let text = read_source(src)?;
    if is_json(&text) {
        return Ok(graph_from_json(&text)?.graph.adjacency());
    }
    matrix_from_text(&text).with_context(|| format!("parsing matrix from {src}"))
}

fn param(name: &str, arg: &str) -> Result<usize> {
    arg.parse()
        .with_context(|| format!("builtin {name}: bad parameter {arg:?}"))
}

/// Builtin names accepted by `--factors`.
pub const BUILTINS: &str = "k2+, k2-, k22neg, p3, k12, c4, k3+, k3-, t6, s14, pg+, pg-, q3, kbip:t, conf:n, t2n:n";

fn builtin(name: &str) -> Result<Option<GraphFile>> {
    let bip = |b| Ok(Some(GraphFile::bipartite(b)));
    let plain = |g| Ok(Some(GraphFile::plain(g)));
    let name = name.replace('−', "-");
    if let Some((family, arg)) = name.split_once(':') {
        return match family {
            "kbip" => bip(signed_complete_bipartite(param(family, arg)? as u32)),
            "conf" => plain(signed_complete(param(family, arg)?)?),
            "t2n" => plain(toroidal_t2n(param(family, arg)?)?),
            _ => Ok(None),
        };
    }
    match name.as_str() {
        "k2+" => bip(k2(1)),
        "k2-" => bip(k2(-1)),
        "k22neg" => bip(k22neg()),
        "p3" => bip(p3()),
        "k12" => bip(star_k12()),
        "c4" => bip(c4()),
        "s14" => bip(s14()),
        "k3+" => plain(k3(1)),
        "k3-" => plain(k3(-1)),
        "t6" => plain(toroidal_t2n(3)?),
        "pg+" => plain(petersen(1)),
        "pg-" => plain(petersen(-1)),
        "q3" => plain(huang_hypercube(3)?),
        _ => Ok(None),
    }
}

/// A builtin name or a graph file.
pub fn resolve_graph(spec: &str) -> Result<GraphFile> {
    if let Some(g) = builtin(spec)? {
        return Ok(g);
    }
    if spec == "-" || Path::new(spec).exists() {
        return load_graph(spec);
    }
    bail!("unknown factor {spec:?}; expected a file or one of: {BUILTINS}")
}

/// Factor list for products and folds. Every factor but the last must be
/// bipartite; files without a recorded split are two-colored and relabeled
/// so that V1 comes first.
pub fn resolve_factors(list: &str, bipartite_prefix: bool) -> Result<Vec<Factor>> {
    let specs: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if specs.is_empty() {
        bail!("--factors is empty");
    }
    let last = specs.len() - 1;
    let mut out = Vec::with_capacity(specs.len());
    for (i, spec) in specs.iter().enumerate() {
        let file = resolve_graph(spec)?;
        let factor = match file.bipartition {
            Some(b) => Factor::Bipartite(b),
            None if bipartite_prefix && i < last => {
                let split = find_bipartition(&file.graph).with_context(|| format!("factor {i} ({spec})"))?;
                if split.permutation.iter().enumerate().any(|(a, &b)| a != b) {
                    eprintln!(
                        "note: factor {i} ({spec}) relabeled so that V1 comes first: {:?}",
                        split.permutation
                    );
                }
                Factor::Bipartite(split.bipartition)
            }
            None => Factor::Plain(file.graph),
        };
        out.push(factor);
    }
    Ok(out)
}

/// `w11`, `h:N`, `conf:N`, `w74`, or an integer matrix file.
pub fn resolve_weighing(spec: &str) -> Result<WeighingMatrix> {
    let w = match spec.split_once(':') {
        Some(("h", n)) => hadamard(param("h", n)?)?,
        Some(("conf", n)) => conference_paley(param("conf", n)?)?,
        _ => match spec {
            "w11" | "unit" => WeighingMatrix::new(IntMatrix::identity(1), 1)?,
            "w74" => w74(),
            path => {
                let m: IntMatrix = matrix_from_text(&read_source(path)?).with_context(|| format!("parsing {path}"))?;
                WeighingMatrix::detect(m)?
            }
        },
    };
    Ok(w)
}
