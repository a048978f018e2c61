//! Command-line driver for the quasi-kernel toolkit.
//!
//! Every invocation prints exactly one result on standard output: a small
//! human-readable block by default, a single JSON line under `--json`.
//! Diagnostics go to standard error. The exit code mirrors the result
//! status: 0 ok, 1 none_exists, 2 input_error, 3 cap_exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qk_core::conjecture::{
    check_small_qk_conjecture_capped, search_counterexamples, ConjectureError, GeneratorConfig,
    GeneratorKind, SearchTargets,
};
use qk_core::formats::{
    emit_digraph, emit_labels, emit_params, parse_cnf, parse_digraph, parse_edge_graph,
    parse_set_cover, ParseError,
};
use qk_core::reductions::{
    assignment_to_qk_b2, assignment_to_qk_pair, b2sat_to_qk, coloring_to_qk_triple,
    coloring_to_three_disjoint_qk, cover_to_qk, gutin_gadget, sat_to_two_disjoint_qk,
    setcover_to_qk, vc_set_to_qk, vc_to_qk, ReductionOutput,
};
use qk_core::solvers::{
    chvatal_lovasz_qk, disjoint_quasi_kernels, disjoint_quasi_kernels_capped,
    enumerate_quasi_kernels_capped, min_qk_within_kernel_capped, min_quasi_kernel_capped,
    DEFAULT_ENUMERATION_CAP, DEFAULT_EXACT_CAP,
};
use qk_core::tree_dp::min_qk_tree;
use qk_core::{Digraph, SolveError, VertexSet};

#[derive(Parser)]
#[command(name = "qk", version, about = "Quasi-kernels in digraphs: verify, construct, reduce")]
struct Cli {
    /// Print the result as a single JSON line instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a quasi-kernel in polynomial time.
    Find { file: PathBuf },
    /// Find a minimum quasi-kernel (tree solver or exact search).
    Min {
        file: PathBuf,
        /// Force the linear-time solver for tree orientations.
        #[arg(long, conflicts_with = "exact")]
        tree: bool,
        /// Force the exponential exact search.
        #[arg(long)]
        exact: bool,
        /// Vertex-count cap for the exact search.
        #[arg(long, conflicts_with = "tree")]
        cap: Option<usize>,
    },
    /// Check a vertex set against the quasi-kernel (or kernel) predicate.
    Verify {
        file: PathBuf,
        /// Comma-separated 0-based vertex indices.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        set: Vec<usize>,
        /// Check the kernel predicate instead.
        #[arg(long)]
        kernel: bool,
    },
    /// Find k pairwise disjoint quasi-kernels or report that none exist.
    Disjoint {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        /// Vertex-count cap for the underlying enumeration.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// List every quasi-kernel.
    Enumerate {
        file: PathBuf,
        /// Vertex-count cap for the enumeration.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Find a minimum quasi-kernel contained in a given kernel.
    WithinKernel {
        file: PathBuf,
        /// The kernel, as comma-separated 0-based vertex indices.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        kernel: Vec<usize>,
        /// Vertex-count cap for the search.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Translate an instance into a quasi-kernel question; writes the
    /// digraph plus `.labels` and `.params` sidecars.
    Reduce {
        kind: ReductionKind,
        input: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Map a certificate of the source problem through a reduction and
    /// verify the resulting quasi-kernels.
    Witness {
        kind: ReductionKind,
        input: PathBuf,
        /// Truth value per variable, comma-separated 0/1 (sat2dqk, b2sat).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        assign: Option<Vec<u8>>,
        /// Color per vertex, comma-separated 0/1/2 (col3dqk).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        colors: Option<Vec<u8>>,
        /// Chosen set indices (setcover) or cover vertices (vc).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        cover: Option<Vec<usize>>,
    },
    /// Write the 14-vertex sink-free digraph without two disjoint
    /// quasi-kernels.
    Gutin {
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Evaluate the half-size bound on one sink-free digraph.
    CheckConjecture {
        file: PathBuf,
        /// Vertex-count cap for the exact solver.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run seeded random trials hunting for conjecture counterexamples.
    Search {
        #[arg(long)]
        kind: SearchKind,
        /// Vertex count per generated instance.
        #[arg(long)]
        n: usize,
        /// Arc probability (random digraphs only).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Master seed; trials derive their own seeds from it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Keep instances with sinks instead of filtering them out.
        #[arg(long)]
        allow_sinks: bool,
        #[arg(long, value_enum, default_value_t = TargetChoice::Both)]
        target: TargetChoice,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionKind {
    /// Satisfiability to two disjoint quasi-kernels.
    #[value(name = "sat2dqk")]
    SatTwoDisjoint,
    /// 3-colorability to three disjoint quasi-kernels.
    #[value(name = "col3dqk")]
    ColoringThreeDisjoint,
    /// Twice-per-literal satisfiability to a quasi-kernel size target.
    #[value(name = "b2sat")]
    BoundedSat,
    /// Set cover to a quasi-kernel budget.
    #[value(name = "setcover")]
    SetCover,
    /// Vertex cover on cubic graphs to minimum quasi-kernel.
    #[value(name = "vc")]
    VertexCover,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    Random,
    Tournament,
    Tree,
    Grid,
}

impl From<SearchKind> for GeneratorKind {
    fn from(kind: SearchKind) -> Self {
        match kind {
            SearchKind::Random => GeneratorKind::RandomDigraph,
            SearchKind::Tournament => GeneratorKind::Tournament,
            SearchKind::Tree => GeneratorKind::TreeOrientation,
            SearchKind::Grid => GeneratorKind::GridOrientation,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetChoice {
    Both,
    SmallQk,
    TwoDisjoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Ok,
    NoneExists,
    InputError,
    CapExceeded,
}

impl Status {
    fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::NoneExists => 1,
            Status::InputError => 2,
            Status::CapExceeded => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::NoneExists => "none_exists",
            Status::InputError => "input_error",
            Status::CapExceeded => "cap_exceeded",
        }
    }
}

#[derive(Serialize)]
struct CommandResult {
    status: Status,
    payload: Value,
}

/// Handlers return the failure side as a ready-to-print result, so `?`
/// short-circuits straight to the printer.
type Outcome = Result<CommandResult, CommandResult>;

fn ok(payload: Value) -> CommandResult {
    CommandResult {
        status: Status::Ok,
        payload,
    }
}

fn fail_input(msg: impl Into<String>) -> CommandResult {
    CommandResult {
        status: Status::InputError,
        payload: json!({ "error": msg.into() }),
    }
}

fn parse_failure(e: ParseError) -> CommandResult {
    CommandResult {
        status: Status::InputError,
        payload: json!({ "error": e.to_string(), "line": e.line, "col": e.col }),
    }
}

fn solve_failure(e: SolveError) -> CommandResult {
    let status = match e {
        SolveError::CapExceeded { .. } => Status::CapExceeded,
        _ => Status::InputError,
    };
    CommandResult {
        status,
        payload: json!({ "error": e.to_string() }),
    }
}

fn read_input(path: &Path) -> Result<String, CommandResult> {
    fs::read_to_string(path)
        .map_err(|e| fail_input(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: &Path, text: &str) -> Result<(), CommandResult> {
    fs::write(path, text).map_err(|e| fail_input(format!("cannot write {}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> Result<Digraph, CommandResult> {
    parse_digraph(&read_input(path)?).map_err(parse_failure)
}

fn parse_set(indices: &[usize], n: usize) -> Result<VertexSet, CommandResult> {
    if let Some(&v) = indices.iter().find(|&&v| v >= n) {
        return Err(fail_input(format!(
            "vertex {v} out of range, the digraph has {n} vertices"
        )));
    }
    Ok(VertexSet::from_indices(n, indices.iter().copied()))
}

fn set_json(q: &VertexSet) -> Value {
    Value::from(q.to_vec())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(cli.command).unwrap_or_else(|failed| failed);
    if cli.json {
        let line = serde_json::to_string(&result).expect("payloads are plain JSON data");
        println!("{line}");
    } else {
        print_human(&result);
    }
    ExitCode::from(result.status.exit_code())
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Find { file } => cmd_find(&file),
        Command::Min {
            file,
            tree,
            exact,
            cap,
        } => cmd_min(&file, tree, exact, cap),
        Command::Verify { file, set, kernel } => cmd_verify(&file, &set, kernel),
        Command::Disjoint { file, k, cap } => cmd_disjoint(&file, k, cap),
        Command::Enumerate { file, cap } => cmd_enumerate(&file, cap),
        Command::WithinKernel { file, kernel, cap } => cmd_within_kernel(&file, &kernel, cap),
        Command::Reduce { kind, input, out } => cmd_reduce(kind, &input, &out),
        Command::Witness {
            kind,
            input,
            assign,
            colors,
            cover,
        } => cmd_witness(kind, &input, assign, colors, cover),
        Command::Gutin { out } => cmd_gutin(&out),
        Command::CheckConjecture { file, cap } => cmd_check_conjecture(&file, cap),
        Command::Search {
            kind,
            n,
            p,
            seed,
            trials,
            allow_sinks,
            target,
        } => cmd_search(kind, n, p, seed, trials, allow_sinks, target),
    }
}

fn cmd_find(file: &Path) -> Outcome {
    let d = load_digraph(file)?;
    let q = chvatal_lovasz_qk(&d);
    Ok(ok(json!({
        "predicate": "is_quasi_kernel",
        "verified": d.is_quasi_kernel(&q),
        "size": q.len(),
        "set": set_json(&q),
    })))
}

fn cmd_min(file: &Path, tree: bool, exact: bool, cap: Option<usize>) -> Outcome {
    let d = load_digraph(file)?;
    let shape_is_tree = d.profile().underlying_is_tree
        && d.arc_count() + 1 == d.vertex_count()
        && d.vertex_count() > 0;
    let use_tree = tree || (!exact && shape_is_tree);
    let q = if use_tree {
        let (_, q) = min_qk_tree(&d).map_err(|e| fail_input(e.to_string()))?;
        q
    } else {
        min_quasi_kernel_capped(&d, cap.unwrap_or(DEFAULT_EXACT_CAP)).map_err(solve_failure)?
    };
    Ok(ok(json!({
        "predicate": "is_quasi_kernel",
        "verified": d.is_quasi_kernel(&q),
        "size": q.len(),
        "set": set_json(&q),
        "solver": if use_tree { "tree" } else { "exact" },
    })))
}

fn cmd_verify(file: &Path, set: &[usize], kernel: bool) -> Outcome {
    let d = load_digraph(file)?;
    let s = parse_set(set, d.vertex_count())?;
    let (predicate, verified) = if kernel {
        ("is_kernel", d.is_kernel(&s))
    } else {
        ("is_quasi_kernel", d.is_quasi_kernel(&s))
    };
    Ok(ok(json!({
        "predicate": predicate,
        "verified": verified,
        "set": set_json(&s),
    })))
}

fn cmd_disjoint(file: &Path, k: usize, cap: Option<usize>) -> Outcome {
    let d = load_digraph(file)?;
    let found = disjoint_quasi_kernels_capped(&d, k, cap.unwrap_or(DEFAULT_ENUMERATION_CAP))
        .map_err(solve_failure)?;
    match found {
        Some(sets) => {
            let verified = sets.iter().all(|q| d.is_quasi_kernel(q))
                && sets
                    .iter()
                    .enumerate()
                    .all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(b)));
            Ok(ok(json!({
                "predicate": "pairwise_disjoint_quasi_kernels",
                "verified": verified,
                "k": k,
                "sets": sets.iter().map(set_json).collect::<Vec<_>>(),
            })))
        }
        None => Ok(CommandResult {
            status: Status::NoneExists,
            payload: json!({ "k": k, "exists": false }),
        }),
    }
}

fn cmd_enumerate(file: &Path, cap: Option<usize>) -> Outcome {
    let d = load_digraph(file)?;
    let sets = enumerate_quasi_kernels_capped(&d, cap.unwrap_or(DEFAULT_ENUMERATION_CAP))
        .map_err(solve_failure)?;
    Ok(ok(json!({
        "predicate": "is_quasi_kernel",
        "verified": sets.iter().all(|q| d.is_quasi_kernel(q)),
        "count": sets.len(),
        "sets": sets.iter().map(set_json).collect::<Vec<_>>(),
    })))
}

fn cmd_within_kernel(file: &Path, kernel: &[usize], cap: Option<usize>) -> Outcome {
    let d = load_digraph(file)?;
    let s = parse_set(kernel, d.vertex_count())?;
    let q = min_qk_within_kernel_capped(&d, &s, cap.unwrap_or(DEFAULT_EXACT_CAP))
        .map_err(solve_failure)?;
    Ok(ok(json!({
        "predicate": "is_quasi_kernel",
        "verified": d.is_quasi_kernel(&q) && q.is_subset_of(&s),
        "kernel": set_json(&s),
        "size": q.len(),
        "set": set_json(&q),
    })))
}

fn build_reduction(kind: ReductionKind, text: &str) -> Result<ReductionOutput, CommandResult> {
    let out = match kind {
        ReductionKind::SatTwoDisjoint => {
            sat_to_two_disjoint_qk(&parse_cnf(text).map_err(parse_failure)?)
        }
        ReductionKind::ColoringThreeDisjoint => {
            coloring_to_three_disjoint_qk(&parse_edge_graph(text).map_err(parse_failure)?)
        }
        ReductionKind::BoundedSat => b2sat_to_qk(&parse_cnf(text).map_err(parse_failure)?),
        ReductionKind::SetCover => setcover_to_qk(&parse_set_cover(text).map_err(parse_failure)?),
        ReductionKind::VertexCover => vc_to_qk(&parse_edge_graph(text).map_err(parse_failure)?),
    };
    out.map_err(|e| fail_input(e.to_string()))
}

/// Re-checks the structural facts each construction promises. Counts are
/// exact except for the clause-pair family, where clauses with repeated
/// literals shed their duplicate arcs.
fn reduction_structure_ok(kind: ReductionKind, out: &ReductionOutput) -> bool {
    let d = &out.digraph;
    let profile = d.profile();
    match kind {
        ReductionKind::SatTwoDisjoint => {
            let n = out.param("num_vars") as usize;
            let m = out.param("num_clauses") as usize;
            d.vertex_count() == 14 * m + 6 * n + 6
                && d.arc_count() <= 31 * m + 11 * n + 9
                && profile.max_out_degree <= 6
        }
        ReductionKind::ColoringThreeDisjoint => {
            let n = out.param("num_vertices") as usize;
            let m = out.param("num_edges") as usize;
            d.vertex_count() == 3 * n && d.arc_count() == 2 * m + 3 * n
        }
        ReductionKind::BoundedSat => {
            let n = out.param("num_vars") as usize;
            let m = out.param("num_clauses") as usize;
            d.vertex_count() == 14 * n + 24 * m
                && d.arc_count() == 19 * n + 36 * m
                && profile.is_acyclic
        }
        ReductionKind::SetCover => {
            let n = out.param("universe_size") as usize;
            let m = out.param("num_sets") as usize;
            d.vertex_count() == n + m + 2
                && profile.is_acyclic
                && profile.underlying_is_bipartite
        }
        ReductionKind::VertexCover => {
            let n = out.param("num_vertices") as usize;
            let m = out.param("num_edges") as usize;
            d.vertex_count() == 3 * n + 2 * m
                && d.arc_count() == 2 * n + 3 * m
                && profile.is_acyclic
                && profile.max_in_degree == 3
        }
    }
}

fn cmd_reduce(kind: ReductionKind, input: &Path, out_path: &Path) -> Outcome {
    let text = read_input(input)?;
    let out = build_reduction(kind, &text)?;
    let labels_path = PathBuf::from(format!("{}.labels", out_path.display()));
    let params_path = PathBuf::from(format!("{}.params", out_path.display()));
    write_output(out_path, &emit_digraph(&out.digraph))?;
    write_output(
        &labels_path,
        &emit_labels(out.labels.iter().map(|(name, &i)| (name.as_str(), i))),
    )?;
    write_output(
        &params_path,
        &emit_params(out.params.iter().map(|(key, &v)| (key.as_str(), v))),
    )?;
    Ok(ok(json!({
        "predicate": "structure_checks",
        "verified": reduction_structure_ok(kind, &out),
        "written": [out_path, &labels_path, &params_path],
        "vertices": out.digraph.vertex_count(),
        "arcs": out.digraph.arc_count(),
        "params": serde_json::to_value(&out.params).expect("string-keyed map"),
    })))
}

/// Extracts the one certificate flag a reduction accepts, rejecting the
/// others by name so a mixup fails loudly instead of being ignored.
fn pick_certificate<T>(
    wanted: (Option<T>, &str),
    unwanted: [(bool, &str); 2],
    kind_name: &str,
) -> Result<T, CommandResult> {
    let (value, flag) = wanted;
    for (present, other) in unwanted {
        if present {
            return Err(fail_input(format!(
                "reduction {kind_name} takes --{flag}, not --{other}"
            )));
        }
    }
    value.ok_or_else(|| fail_input(format!("reduction {kind_name} needs --{flag}")))
}

fn to_assignment(raw: Vec<u8>) -> Result<Vec<bool>, CommandResult> {
    raw.into_iter()
        .map(|b| match b {
            0 => Ok(false),
            1 => Ok(true),
            other => Err(fail_input(format!(
                "assignment entries are 0 or 1, found {other}"
            ))),
        })
        .collect()
}

fn cmd_witness(
    kind: ReductionKind,
    input: &Path,
    assign: Option<Vec<u8>>,
    colors: Option<Vec<u8>>,
    cover: Option<Vec<usize>>,
) -> Outcome {
    let text = read_input(input)?;
    let has_colors = colors.is_some();
    let has_cover = cover.is_some();
    let has_assign = assign.is_some();
    let map_err = |e: qk_core::reductions::ReductionError| fail_input(e.to_string());
    match kind {
        ReductionKind::SatTwoDisjoint => {
            let raw = pick_certificate(
                (assign, "assign"),
                [(has_colors, "colors"), (has_cover, "cover")],
                "sat2dqk",
            )?;
            let phi = to_assignment(raw)?;
            let f = parse_cnf(&text).map_err(parse_failure)?;
            let out = sat_to_two_disjoint_qk(&f).map_err(map_err)?;
            let (q1, q2) = assignment_to_qk_pair(&out, &f, &phi).map_err(map_err)?;
            let d = &out.digraph;
            Ok(ok(json!({
                "predicate": "pairwise_disjoint_quasi_kernels",
                "verified": d.is_quasi_kernel(&q1) && d.is_quasi_kernel(&q2)
                    && q1.is_disjoint(&q2),
                "sets": [set_json(&q1), set_json(&q2)],
            })))
        }
        ReductionKind::ColoringThreeDisjoint => {
            let coloring = pick_certificate(
                (colors, "colors"),
                [(has_assign, "assign"), (has_cover, "cover")],
                "col3dqk",
            )?;
            let g = parse_edge_graph(&text).map_err(parse_failure)?;
            let out = coloring_to_three_disjoint_qk(&g).map_err(map_err)?;
            let (a, b, c) = coloring_to_qk_triple(&out, &coloring).map_err(map_err)?;
            let d = &out.digraph;
            let verified = [&a, &b, &c].iter().all(|q| d.is_quasi_kernel(q))
                && a.is_disjoint(&b)
                && a.is_disjoint(&c)
                && b.is_disjoint(&c);
            Ok(ok(json!({
                "predicate": "pairwise_disjoint_quasi_kernels",
                "verified": verified,
                "sets": [set_json(&a), set_json(&b), set_json(&c)],
            })))
        }
        ReductionKind::BoundedSat => {
            let raw = pick_certificate(
                (assign, "assign"),
                [(has_colors, "colors"), (has_cover, "cover")],
                "b2sat",
            )?;
            let phi = to_assignment(raw)?;
            let f = parse_cnf(&text).map_err(parse_failure)?;
            let out = b2sat_to_qk(&f).map_err(map_err)?;
            let q = assignment_to_qk_b2(&out, &f, &phi).map_err(map_err)?;
            let target = out.param("target_qk_size") as usize;
            Ok(ok(json!({
                "predicate": "is_quasi_kernel",
                "verified": out.digraph.is_quasi_kernel(&q) && q.len() == target,
                "target_size": target,
                "size": q.len(),
                "set": set_json(&q),
            })))
        }
        ReductionKind::SetCover => {
            let chosen = pick_certificate(
                (cover, "cover"),
                [(has_assign, "assign"), (has_colors, "colors")],
                "setcover",
            )?;
            let inst = parse_set_cover(&text).map_err(parse_failure)?;
            let out = setcover_to_qk(&inst).map_err(map_err)?;
            let q = cover_to_qk(&out, &chosen).map_err(map_err)?;
            Ok(ok(json!({
                "predicate": "is_quasi_kernel",
                "verified": out.digraph.is_quasi_kernel(&q) && q.len() == chosen.len() + 1,
                "size": q.len(),
                "set": set_json(&q),
            })))
        }
        ReductionKind::VertexCover => {
            let chosen = pick_certificate(
                (cover, "cover"),
                [(has_assign, "assign"), (has_colors, "colors")],
                "vc",
            )?;
            let g = parse_edge_graph(&text).map_err(parse_failure)?;
            let out = vc_to_qk(&g).map_err(map_err)?;
            let q = vc_set_to_qk(&out, &chosen).map_err(map_err)?;
            let expected = chosen.len() + g.vertex_count();
            Ok(ok(json!({
                "predicate": "is_quasi_kernel",
                "verified": out.digraph.is_quasi_kernel(&q) && q.len() == expected,
                "size": q.len(),
                "set": set_json(&q),
            })))
        }
    }
}

fn cmd_gutin(out_path: &Path) -> Outcome {
    let d = gutin_gadget();
    write_output(out_path, &emit_digraph(&d))?;
    let verified = d.profile().is_sink_free
        && disjoint_quasi_kernels(&d, 2).map_err(solve_failure)?.is_none();
    Ok(ok(json!({
        "predicate": "sink_free_without_two_disjoint_quasi_kernels",
        "verified": verified,
        "written": out_path,
        "vertices": d.vertex_count(),
        "arcs": d.arc_count(),
    })))
}

fn cmd_check_conjecture(file: &Path, cap: Option<usize>) -> Outcome {
    let d = load_digraph(file)?;
    let verdict = check_small_qk_conjecture_capped(&d, cap.unwrap_or(DEFAULT_EXACT_CAP)).map_err(
        |e| match e {
            ConjectureError::Solve(solve) => solve_failure(solve),
            other => fail_input(other.to_string()),
        },
    )?;
    Ok(ok(json!({
        "predicate": "min_quasi_kernel_at_most_half",
        "verified": verdict.holds,
        "n": verdict.n,
        "min_qk_size": verdict.min_qk_size,
        "margin": verdict.margin,
    })))
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    kind: SearchKind,
    n: usize,
    p: f64,
    seed: u64,
    trials: usize,
    allow_sinks: bool,
    target: TargetChoice,
) -> Outcome {
    let config = GeneratorConfig {
        kind: kind.into(),
        n,
        p,
        seed,
        sink_free_filter: !allow_sinks,
    };
    let targets = SearchTargets {
        small_qk: target != TargetChoice::TwoDisjoint,
        two_disjoint: target != TargetChoice::SmallQk,
    };
    let report = search_counterexamples(&config, trials, targets).map_err(|e| match e {
        ConjectureError::Solve(solve) => solve_failure(solve),
        other => fail_input(other.to_string()),
    })?;
    Ok(ok(json!({
        "predicate": "targets_hold_on_every_trial",
        "verified": report.violations.is_empty(),
        "trials": report.trials,
        "violations": report.violations.len(),
        "cap_exceeded_trials": report.cap_exceeded_trials,
        "generation_failures": report.generation_failures,
        "report": serde_json::to_value(&report).expect("report serializes"),
    })))
}

fn print_human(result: &CommandResult) {
    println!("status: {}", result.status.name());
    if let Value::Object(map) = &result.payload {
        for (key, value) in map {
            if key == "report" {
                println!("report: pass --json for the per-trial data");
                continue;
            }
            println!("{key}: {}", render_value(value));
        }
    }
}

fn render_value(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(Value::is_number) => {
            if items.is_empty() {
                "(empty)".into()
            } else {
                items
                    .iter()
                    .map(Value::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        }
        Value::Array(items) => items
            .iter()
            .map(render_value)
            .collect::<Vec<_>>()
            .join(" | "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", render_value(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
