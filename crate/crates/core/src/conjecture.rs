//! Seeded random-instance generators and a search harness for two open
//! questions: does every sink-free digraph have a quasi-kernel on at
//! most half its vertices, and does every sink-free planar digraph have
//! two disjoint quasi-kernels.
//!
//! The harness only searches and reports. Every flagged violation is
//! re-verified from its serialized instance by [`reverify_violation`]
//! before it enters the report, so a report's findings stand on their
//! own. Trials exceeding the exhaustive-search caps are counted, never
//! reported as findings.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::{Digraph, VertexSet};
use crate::formats::{emit_digraph, parse_digraph};
use crate::solvers::{disjoint_quasi_kernels, min_quasi_kernel, min_quasi_kernel_capped, SolveError};

/// Draws per call of [`generate`] before giving up on the sink-free
/// filter. Tree orientations always have a sink, so a filtered tree
/// config burns the whole budget and errors.
pub const GENERATION_RETRY_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    /// Each ordered pair gets an arc independently with probability p.
    RandomDigraph,
    /// Each unordered pair gets exactly one arc, direction uniform.
    Tournament,
    /// A uniform labeled tree with each edge oriented uniformly.
    TreeOrientation,
    /// A near-square grid with each edge oriented uniformly; planar and
    /// K5-free by construction.
    GridOrientation,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneratorConfig {
    pub kind: GeneratorKind,
    pub n: usize,
    /// Arc probability; only `RandomDigraph` consumes it but it is
    /// validated for every kind.
    pub p: f64,
    pub seed: u64,
    /// Redraw until the instance is sink-free, up to
    /// [`GENERATION_RETRY_LIMIT`] attempts.
    pub sink_free_filter: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConjectureError {
    #[error("digraph has a sink; the size bound concerns sink-free digraphs")]
    NotSinkFree,
    #[error("no sink-free instance found in {attempts} draws")]
    RetriesExhausted { attempts: usize },
    #[error("arc probability {p} is outside [0, 1]")]
    InvalidProbability { p: f64 },
    #[error("generators need at least one vertex")]
    InvalidSize,
    #[error("stored instance does not parse: {msg}")]
    MalformedInstance { msg: String },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Outcome of checking the half-the-vertices bound on one digraph.
/// `margin = n - 2 * min_qk_size`; the bound holds iff it is
/// non-negative, and a violation would be a publishable counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub n: usize,
    pub min_qk_size: usize,
    pub holds: bool,
    pub margin: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchTargets {
    pub small_qk: bool,
    pub two_disjoint: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// A sink-free digraph whose minimum quasi-kernel exceeds n/2.
    SmallQk,
    /// A sink-free instance with no two disjoint quasi-kernels.
    TwoDisjoint,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub trial: usize,
    pub kind: ViolationKind,
    /// The instance in the digraph text format, sufficient on its own
    /// to re-verify the finding.
    pub instance: String,
    pub min_qk_size: Option<usize>,
    pub margin: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialStat {
    pub trial: usize,
    pub generated: bool,
    pub n: usize,
    pub arcs: usize,
    pub sink_free: bool,
    /// None when the trial is not sink-free (the bound is vacuous
    /// there) or when the exact solver hit its cap.
    pub min_qk_size: Option<usize>,
    pub margin: Option<i64>,
    pub two_disjoint: Option<bool>,
    pub cap_exceeded: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub master_seed: u64,
    pub trials: usize,
    pub config: GeneratorConfig,
    pub targets: SearchTargets,
    pub stats: Vec<TrialStat>,
    pub violations: Vec<Violation>,
    pub cap_exceeded_trials: usize,
    pub generation_failures: usize,
}

impl SearchReport {
    /// Single-line JSON with keys in declaration order, byte-identical
    /// across runs with the same inputs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn check_config(config: &GeneratorConfig) -> Result<(), ConjectureError> {
    if config.n == 0 {
        return Err(ConjectureError::InvalidSize);
    }
    if !(config.p >= 0.0 && config.p <= 1.0) {
        return Err(ConjectureError::InvalidProbability { p: config.p });
    }
    Ok(())
}

fn isqrt(n: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Uniform labeled tree on n vertices, decoded from a uniform sequence
/// of n-2 vertex picks; the smallest available leaf is joined first.
fn random_tree_edges(n: usize, rng: &mut ChaCha12Rng) -> Vec<(usize, usize)> {
    if n <= 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let Reverse(leaf) = leaves.pop().expect("decode always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    edges
}

/// Near-square grid on n vertices: isqrt(n) rows, cells laid out
/// row-major with the last row ragged. Edge order is right then down
/// per cell.
fn grid_edges(n: usize) -> Vec<(usize, usize)> {
    let rows = isqrt(n);
    let cols = n.div_ceil(rows);
    let mut edges = Vec::new();
    for id in 0..n {
        if (id % cols) + 1 < cols && id + 1 < n {
            edges.push((id, id + 1));
        }
        if id + cols < n {
            edges.push((id, id + cols));
        }
    }
    edges
}

fn orient<I>(edges: I, rng: &mut ChaCha12Rng) -> Vec<(usize, usize)>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    edges
        .into_iter()
        .map(|(u, v)| if rng.gen::<bool>() { (u, v) } else { (v, u) })
        .collect()
}

fn draw(config: &GeneratorConfig, rng: &mut ChaCha12Rng) -> Digraph {
    let n = config.n;
    let arcs = match config.kind {
        GeneratorKind::RandomDigraph => {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(config.p) {
                        arcs.push((u, v));
                    }
                }
            }
            arcs
        }
        GeneratorKind::Tournament => {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            orient(pairs, rng)
        }
        GeneratorKind::TreeOrientation => {
            let edges = random_tree_edges(n, rng);
            orient(edges, rng)
        }
        GeneratorKind::GridOrientation => orient(grid_edges(n), rng),
    };
    Digraph::new(n, arcs).expect("generated arcs are valid")
}

/// Deterministic function of the full config: one ChaCha12 stream
/// seeded by `config.seed` drives both the draws and any sink-free
/// retries.
pub fn generate(config: &GeneratorConfig) -> Result<Digraph, ConjectureError> {
    check_config(config)?;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    if !config.sink_free_filter {
        return Ok(draw(config, &mut rng));
    }
    for _ in 0..GENERATION_RETRY_LIMIT {
        let d = draw(config, &mut rng);
        if d.sinks().is_empty() {
            return Ok(d);
        }
    }
    Err(ConjectureError::RetriesExhausted {
        attempts: GENERATION_RETRY_LIMIT,
    })
}

/// Checks the half-the-vertices bound exactly, with the default
/// exhaustive-search cap.
pub fn check_small_qk_conjecture(d: &Digraph) -> Result<ConjectureVerdict, ConjectureError> {
    if !d.sinks().is_empty() {
        return Err(ConjectureError::NotSinkFree);
    }
    let min = min_quasi_kernel(d)?.len();
    Ok(verdict(d.vertex_count(), min))
}

pub fn check_small_qk_conjecture_capped(
    d: &Digraph,
    cap: usize,
) -> Result<ConjectureVerdict, ConjectureError> {
    if !d.sinks().is_empty() {
        return Err(ConjectureError::NotSinkFree);
    }
    let min = min_quasi_kernel_capped(d, cap)?.len();
    Ok(verdict(d.vertex_count(), min))
}

fn verdict(n: usize, min_qk_size: usize) -> ConjectureVerdict {
    ConjectureVerdict {
        n,
        min_qk_size,
        holds: 2 * min_qk_size <= n,
        margin: n as i64 - 2 * min_qk_size as i64,
    }
}

/// The trial-indexed output of a splitmix64 stream seeded at
/// `master_seed`; trials get well-separated generator seeds without
/// sharing state.
fn trial_seed(master_seed: u64, trial: u64) -> u64 {
    let mut z = master_seed.wrapping_add((trial + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs independent seeded trials against the requested targets and
/// aggregates. Identical inputs give a byte-identical report. The size
/// bound is only meaningful on sink-free instances, so both targets go
/// unevaluated (null) on trials that keep a sink; trials over the
/// solver caps are tallied in `cap_exceeded_trials`.
pub fn search_counterexamples(
    config: &GeneratorConfig,
    trials: usize,
    targets: SearchTargets,
) -> Result<SearchReport, ConjectureError> {
    check_config(config)?;
    let mut report = SearchReport {
        master_seed: config.seed,
        trials,
        config: *config,
        targets,
        stats: Vec::with_capacity(trials),
        violations: Vec::new(),
        cap_exceeded_trials: 0,
        generation_failures: 0,
    };

    for trial in 0..trials {
        let trial_config = GeneratorConfig {
            seed: trial_seed(config.seed, trial as u64),
            ..*config
        };
        let mut stat = TrialStat {
            trial,
            generated: false,
            n: 0,
            arcs: 0,
            sink_free: false,
            min_qk_size: None,
            margin: None,
            two_disjoint: None,
            cap_exceeded: false,
        };
        let d = match generate(&trial_config) {
            Ok(d) => d,
            Err(ConjectureError::RetriesExhausted { .. }) => {
                report.generation_failures += 1;
                report.stats.push(stat);
                continue;
            }
            Err(e) => return Err(e),
        };
        stat.generated = true;
        stat.n = d.vertex_count();
        stat.arcs = d.arc_count();
        stat.sink_free = d.sinks().is_empty();

        if targets.small_qk && stat.sink_free {
            match min_quasi_kernel(&d) {
                Ok(q) => {
                    let v = verdict(stat.n, q.len());
                    stat.min_qk_size = Some(v.min_qk_size);
                    stat.margin = Some(v.margin);
                    if !v.holds {
                        let violation = Violation {
                            trial,
                            kind: ViolationKind::SmallQk,
                            instance: emit_digraph(&d),
                            min_qk_size: Some(v.min_qk_size),
                            margin: Some(v.margin),
                        };
                        assert!(
                            reverify_violation(&violation)?,
                            "flagged violation failed re-verification"
                        );
                        report.violations.push(violation);
                    }
                }
                Err(SolveError::CapExceeded { .. }) => stat.cap_exceeded = true,
                Err(e) => return Err(e.into()),
            }
        }
        if targets.two_disjoint && stat.sink_free {
            match disjoint_quasi_kernels(&d, 2) {
                Ok(found) => {
                    stat.two_disjoint = Some(found.is_some());
                    if found.is_none() {
                        let violation = Violation {
                            trial,
                            kind: ViolationKind::TwoDisjoint,
                            instance: emit_digraph(&d),
                            min_qk_size: None,
                            margin: None,
                        };
                        assert!(
                            reverify_violation(&violation)?,
                            "flagged violation failed re-verification"
                        );
                        report.violations.push(violation);
                    }
                }
                Err(SolveError::CapExceeded { .. }) => stat.cap_exceeded = true,
                Err(e) => return Err(e.into()),
            }
        }
        if stat.cap_exceeded {
            report.cap_exceeded_trials += 1;
        }
        report.stats.push(stat);
    }
    Ok(report)
}

/// Re-checks a violation from its serialized instance alone. Up to 20
/// vertices this sweeps every subset directly against the verification
/// predicate, sharing nothing with the solvers' pruning; larger
/// instances fall back to the capped solvers.
pub fn reverify_violation(violation: &Violation) -> Result<bool, ConjectureError> {
    let d = parse_digraph(&violation.instance)
        .map_err(|e| ConjectureError::MalformedInstance { msg: e.to_string() })?;
    if !d.sinks().is_empty() {
        return Ok(false);
    }
    let n = d.vertex_count();
    if n > 20 {
        return match violation.kind {
            ViolationKind::SmallQk => Ok(!check_small_qk_conjecture(&d)?.holds),
            ViolationKind::TwoDisjoint => Ok(disjoint_quasi_kernels(&d, 2)?.is_none()),
        };
    }
    let quasi_kernels: Vec<u32> = (0u32..1 << n)
        .filter(|&mask| {
            let s = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            d.is_quasi_kernel(&s)
        })
        .collect();
    match violation.kind {
        ViolationKind::SmallQk => Ok(quasi_kernels
            .iter()
            .all(|mask| 2 * mask.count_ones() as usize > n)),
        ViolationKind::TwoDisjoint => Ok(quasi_kernels
            .iter()
            .all(|a| quasi_kernels.iter().all(|b| a & b != 0))),
    }
}
