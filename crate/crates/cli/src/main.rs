mod inputs;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use signed_spectra::bounds::{
    huang_report, interlacing_check, signature_search, spectral_lower_bound, SearchOptions, DEFAULT_MAX_EDGES,
    DEFAULT_MAX_VERTICES,
};
use signed_spectra::constructions::{
    c4, huang_hypercube, hypercube, k2, k22neg, k3, p3, petersen, s14, signed_complete, signed_complete_bipartite,
    signed_multipartite, star_k12, toroidal_t2n, weighing_compose, ComposeVariant,
};
use signed_spectra::io::{
    bound_report_to_value, graph_to_json, matrix_to_text, prediction_to_value, round_sig, signature_result_to_value,
    spectrum_to_value, GraphFile,
};
use signed_spectra::linalg::default_grouping_tol;
use signed_spectra::spectral::{is_spectrum_symmetric, predict_fold, predict_pair_product, symmetry_criterion_fold};
use signed_spectra::{
    eigen_sym, eigen_sym_default, fold, product, Factor, FoldDirection, ProductKind, SignedGraph, Spectrum64, SplitSize,
};

/// Comparison tolerance for prediction checks.
const CHECK_TOL: f64 = 1e-8;
const MAX_N_ENV: &str = "SIGNED_SPECTRA_MAX_N";

#[derive(Parser)]
#[command(
    name = "signed-spectra",
    version,
    about = "Signed graph products, spectra and degree bounds"
)]
struct Cli {
    /// Worker threads for exhaustive searches
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Lift the enumeration caps
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cartesian,
    Direct,
    Semistrong,
    SignedCartesian,
    SignedSemistrong,
}

impl From<Kind> for ProductKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cartesian => Self::Cartesian,
            Kind::Direct => Self::Direct,
            Kind::Semistrong => Self::Semistrong,
            Kind::SignedCartesian => Self::SignedCartesian,
            Kind::SignedSemistrong => Self::SignedSemistrong,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Left,
    Right,
}

impl From<Dir> for FoldDirection {
    fn from(d: Dir) -> Self {
        match d {
            Dir::Left => Self::Left,
            Dir::Right => Self::Right,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    T2n,
    Kbip,
    Conference,
    Multipartite,
    S14,
    Petersen,
    Hypercube,
    HuangHypercube,
    K2,
    K3,
    P3,
    K12,
    C4,
    K22neg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph family
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        /// Edge sign for the uniformly signed families
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        sign: i8,
        #[arg(long)]
        out: Option<String>,
    },
    /// Product of two graphs
    Product {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        factors: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// n-fold signed product
    Fold {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "left")]
        dir: Dir,
        #[arg(long)]
        factors: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Eigenvalues of a graph or symmetric matrix (file or `-`)
    Spectrum {
        input: String,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Closed-form spectrum of a product or fold, checked against an eigensolve
    Predict {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "left")]
        dir: Dir,
        #[arg(long)]
        factors: String,
    },
    /// Symmetry criterion of a signed product or fold against its spectrum
    VerifySymmetry {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "left")]
        dir: Dir,
        #[arg(long)]
        factors: String,
    },
    /// Brute-force minimum induced max degree next to the spectral bound
    Huang {
        #[arg(long)]
        graph: String,
        /// Subset size; defaults to the order the spectral bound applies to
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        skip_brute: bool,
    },
    /// Cauchy interlacing for a principal submatrix
    Interlace {
        #[arg(long)]
        graph: String,
        /// Comma-separated indices; otherwise a random subset
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimum spectral radius over all signings
    SearchSignature {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: usize,
    },
    /// Compose two weighing matrices (w11, h:N, conf:N, w74 or a matrix file)
    ComposeWeighing {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        variant: u8,
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        /// Write the composed matrix as matrix text
        #[arg(long)]
        out: Option<String>,
    },
    /// Convert a graph between JSON and matrix text
    Export {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
}

/// Finished normally, or a computed check disagreed.
enum Status {
    Ok,
    Mismatch,
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Mismatch
    }
}

/// Writes a line to stdout; a closed pipe (e.g. `| head`) ends the process quietly.
fn out_line(text: &str) {
    let mut stdout = io::stdout().lock();
    if let Err(e) = writeln!(stdout, "{text}").and_then(|_| stdout.flush()) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing stdout: {e}");
        std::process::exit(1);
    }
}

fn emit(v: &Value) {
    out_line(&serde_json::to_string_pretty(v).expect("JSON value serialises"));
}

fn write_or_print(text: &str, out: Option<&str>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path}")),
        None => {
            out_line(text.trim_end());
            Ok(())
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.with_context(|| format!("family {family} needs --{flag}"))
}

fn construct(family: Family, n: Option<usize>, t: Option<u32>, k: Option<usize>, sign: i8) -> Result<GraphFile> {
    if sign != 1 && sign != -1 {
        bail!("--sign must be 1 or -1");
    }
    let g = match family {
        Family::T2n => GraphFile::plain(toroidal_t2n(need(n, "n", "t2n")?)?),
        Family::Kbip => GraphFile::bipartite(signed_complete_bipartite(need(t, "t", "kbip")?)),
        Family::Conference => GraphFile::plain(signed_complete(need(n, "n", "conference")?)?),
        Family::Multipartite => GraphFile::plain(signed_multipartite(
            need(k, "k", "multipartite")?,
            need(t, "t", "multipartite")?,
        )?),
        Family::S14 => GraphFile::bipartite(s14()),
        Family::Petersen => GraphFile::plain(petersen(sign)),
        Family::Hypercube => GraphFile::plain(hypercube(need(n, "n", "hypercube")? as u32)),
        Family::HuangHypercube => GraphFile::plain(huang_hypercube(need(n, "n", "huang-hypercube")? as u32)?),
        Family::K2 => GraphFile::bipartite(k2(sign)),
        Family::K3 => GraphFile::plain(k3(sign)),
        Family::P3 => GraphFile::bipartite(p3()),
        Family::K12 => GraphFile::bipartite(star_k12()),
        Family::C4 => GraphFile::bipartite(c4()),
        Family::K22neg => GraphFile::bipartite(k22neg()),
    };
    Ok(g)
}

fn graph_json(g: &GraphFile) -> String {
    graph_to_json(&g.graph, g.bipartition.as_ref())
}

fn spectrum_of(g: &SignedGraph) -> Result<Spectrum64> {
    Ok(eigen_sym_default(&g.adjacency::<f64>())?)
}

fn signed_kind(kind: Kind) -> Result<ProductKind> {
    let k = ProductKind::from(kind);
    if !k.is_signed() {
        bail!("{k} is not a signed product; use signed-cartesian or signed-semistrong");
    }
    Ok(k)
}

fn pair_factors(kind: ProductKind, list: &str) -> Result<(Vec<Factor>, SignedGraph)> {
    let factors = inputs::resolve_factors(list, kind.is_signed())?;
    if kind.is_signed() {
        let g = fold(kind, FoldDirection::Left, &factors)?;
        return Ok((factors, g));
    }
    let [a, b] = factors.as_slice() else {
        bail!("{kind} takes exactly two factors, got {}", factors.len());
    };
    let g = product(kind, a.graph(), b.graph())?;
    Ok((factors, g))
}

fn search_options(jobs: Option<usize>, force: bool) -> Result<SearchOptions> {
    let max_vertices = match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{MAX_N_ENV}={v:?} is not a vertex count"))?,
        Err(_) => DEFAULT_MAX_VERTICES,
    };
    Ok(SearchOptions {
        jobs,
        max_vertices,
        force,
    })
}

fn parse_indices(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().with_context(|| format!("bad vertex index {s:?}")))
        .collect()
}

fn run(cli: Cli) -> Result<Status> {
    let Cli { jobs, force, command } = cli;
    match command {
        Command::Construct {
            family,
            n,
            t,
            k,
            sign,
            out,
        } => {
            let g = construct(family, n, t, k, sign)?;
            write_or_print(&graph_json(&g), out.as_deref())?;
            Ok(Status::Ok)
        }
        Command::Product { kind, factors, out } => {
            let kind = ProductKind::from(kind);
            let (f, g) = pair_factors(kind, &factors)?;
            if f.len() != 2 {
                bail!("product takes exactly two factors, got {}; use fold for more", f.len());
            }
            write_or_print(&graph_to_json(&g, None), out.as_deref())?;
            Ok(Status::Ok)
        }
        Command::Fold {
            kind,
            dir,
            factors,
            out,
        } => {
            let kind = signed_kind(kind)?;
            let f = inputs::resolve_factors(&factors, true)?;
            let g = fold(kind, dir.into(), &f)?;
            write_or_print(&graph_to_json(&g, None), out.as_deref())?;
            Ok(Status::Ok)
        }
        Command::Spectrum { input, tol } => {
            let a = inputs::load_real_matrix(&input)?;
            let tol = tol.unwrap_or_else(|| default_grouping_tol(&a));
            emit(&spectrum_to_value(&eigen_sym(&a, tol)?));
            Ok(Status::Ok)
        }
        Command::Predict { kind, dir, factors } => {
            let kind = ProductKind::from(kind);
            let (prediction, observed) = if kind.is_signed() {
                let f = inputs::resolve_factors(&factors, true)?;
                let spectra = f.iter().map(|x| spectrum_of(x.graph())).collect::<Result<Vec<_>>>()?;
                let splits: Vec<Option<SplitSize>> = f.iter().map(|x| x.bipartition().map(SplitSize::of)).collect();
                let p = predict_fold(kind, dir.into(), &spectra, &splits)?;
                (p, spectrum_of(&fold(kind, dir.into(), &f)?)?)
            } else {
                let (f, g) = pair_factors(kind, &factors)?;
                let p = predict_pair_product(kind, &spectrum_of(f[0].graph())?, &spectrum_of(f[1].graph())?)?;
                (p, spectrum_of(&g)?)
            };
            let matches = prediction.matches(&observed, CHECK_TOL);
            emit(&json!({
                "kind": kind.name(),
                "order": observed.order(),
                "prediction": prediction_to_value(&prediction),
                "observed": spectrum_to_value(&observed),
                "matches": matches,
            }));
            Ok(status(matches))
        }
        Command::VerifySymmetry { kind, dir, factors } => {
            let kind = signed_kind(kind)?;
            let f = inputs::resolve_factors(&factors, true)?;
            if f.len() < 2 {
                bail!("verify-symmetry needs at least two factors");
            }
            let last = spectrum_of(f[f.len() - 1].graph())?;
            let criterion = symmetry_criterion_fold(kind, dir.into(), &f, &last)?;
            let observed_spectrum = spectrum_of(&fold(kind, dir.into(), &f)?)?;
            let observed = is_spectrum_symmetric(&observed_spectrum, CHECK_TOL);
            emit(&json!({
                "kind": kind.name(),
                "criterion": criterion,
                "observed_symmetric": observed,
                "agree": criterion == observed,
                "spectrum": spectrum_to_value(&observed_spectrum),
            }));
            Ok(status(criterion == observed))
        }
        Command::Huang { graph, k, skip_brute } => {
            let g = inputs::resolve_graph(&graph)?.graph;
            let k = match k {
                Some(k) => k,
                None => spectral_lower_bound(&g)?.subgraph_order,
            };
            let r = huang_report(&g, k, !skip_brute, &search_options(jobs, force)?)?;
            emit(&bound_report_to_value(&r));
            Ok(status(r.holds()))
        }
        Command::Interlace {
            graph,
            subset,
            size,
            seed,
        } => {
            let a = inputs::load_real_matrix(&graph)?;
            let n = a.rows();
            let subset = match subset {
                Some(list) => parse_indices(&list)?,
                None => {
                    let m = size.unwrap_or(n.saturating_sub(1));
                    let mut idx: Vec<usize> = (0..n).collect();
                    idx.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                    idx.truncate(m);
                    idx.sort_unstable();
                    idx
                }
            };
            let r = interlacing_check(&a, &subset)?;
            emit(&json!({
                "subset": subset,
                "holds": r.holds,
                "max_violation": round_sig(r.max_violation),
                "seed": seed,
            }));
            Ok(status(r.holds))
        }
        Command::SearchSignature { graph, max_edges } => {
            let g = inputs::resolve_graph(&graph)?.graph;
            let r = signature_search(&g, max_edges, force)?;
            emit(&signature_result_to_value(&r));
            Ok(status(r.satisfied != Some(false)))
        }
        Command::ComposeWeighing { variant, w1, w2, out } => {
            let v = ComposeVariant::try_from(variant)?;
            let (a, b) = (inputs::resolve_weighing(&w1)?, inputs::resolve_weighing(&w2)?);
            let w = match weighing_compose(v, &a, &b) {
                Ok(w) => w,
                Err(signed_spectra::Error::InvariantViolation(msg)) => {
                    emit(&json!({"variant": variant, "verified": false, "reason": msg}));
                    return Ok(Status::Mismatch);
                }
                Err(e) => return Err(e.into()),
            };
            if let Some(path) = out.as_deref() {
                fs::write(path, matrix_to_text(w.entries())).with_context(|| format!("writing {path}"))?;
            }
            emit(&json!({
                "variant": variant,
                "order": w.order(),
                "weight": w.weight(),
                "symmetric": w.is_symmetric(),
                "verified": true,
            }));
            Ok(Status::Ok)
        }
        Command::Export { graph, format, out } => {
            let g = inputs::resolve_graph(&graph)?;
            let text = match format {
                Format::Json => graph_json(&g),
                Format::Matrix => matrix_to_text(&g.graph.adjacency::<i64>()),
            };
            write_or_print(&text, out.as_deref())?;
            Ok(Status::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            eprintln!(
                "hint: run with --help for usage; factor builtins are {}",
                inputs::BUILTINS
            );
            ExitCode::from(1)
        }
    }
}
