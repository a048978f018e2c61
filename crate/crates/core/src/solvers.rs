//! Quasi-kernel solvers: a linear-time constructor, minimalization, exhaustive
//! enumeration, exact minimum search, disjoint-family search, minimum search
//! inside a kernel, and the in-degree approximation certificate.
//!
//! The exponential-cost entry points refuse instances above a vertex cap
//! instead of running away; callers can raise the cap explicitly.

use thiserror::Error;

use crate::digraph::{Digraph, VertexSet};

/// Vertex cap for exhaustive enumeration (and searches built on it).
pub const DEFAULT_ENUMERATION_CAP: usize = 24;
/// Vertex cap for the minimum-size branch-and-bound.
pub const DEFAULT_EXACT_CAP: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("instance has {n} vertices, over the exhaustive-search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("seed set is not a quasi-kernel")]
    SeedNotQuasiKernel,
    #[error("set is not a quasi-kernel")]
    NotAQuasiKernel,
    #[error("set is not a kernel")]
    NotAKernel,
    #[error("requested family size must be at least 1")]
    InvalidK,
}

/// Per-vertex bitmaps shared by the exhaustive searches.
///
/// `out2[v]` holds every u with a directed v-to-u path of length <= 2, so
/// `out2[v]` meets `Q` exactly when v is absorbed by `Q`. `in2[u]` is the
/// transpose: the vertices absorbed by putting u into `Q`. `adj[v]` holds the
/// underlying neighbors, for independence.
struct Absorption {
    adj: Vec<VertexSet>,
    out2: Vec<VertexSet>,
    in2: Vec<VertexSet>,
}

impl Absorption {
    fn new(d: &Digraph) -> Self {
        let n = d.vertex_count();
        let mut adj = vec![VertexSet::empty(n); n];
        let mut out2 = Vec::with_capacity(n);
        let mut in2 = vec![VertexSet::empty(n); n];
        for v in d.vertices() {
            for w in d.underlying_neighbors(v) {
                adj[v].insert(w);
            }
            let mut ball = VertexSet::empty(n);
            ball.insert(v);
            for &w in d.out_neighbors(v) {
                ball.insert(w);
                for &x in d.out_neighbors(w) {
                    ball.insert(x);
                }
            }
            for u in ball.iter() {
                in2[u].insert(v);
            }
            out2.push(ball);
        }
        Absorption { adj, out2, in2 }
    }
}

/// Builds a quasi-kernel in O(n + m).
///
/// Peeling pass: repeatedly take the lowest-index remaining vertex u and
/// delete u together with its remaining in-neighbors. Unwinding pass, in
/// reverse peel order: keep the set built so far if u already has an arc into
/// it, otherwise add u. Adding u is safe because u's in-neighbors left the
/// graph with u, so nothing selected later can be adjacent to u from either
/// side. The result is checked before returning; a failure would be a defect
/// in this function and aborts.
pub fn chvatal_lovasz_qk(d: &Digraph) -> VertexSet {
    let n = d.vertex_count();
    let mut alive = VertexSet::full(n);
    let mut order = Vec::new();
    while let Some(u) = alive.first() {
        order.push(u);
        alive.remove(u);
        for &w in d.in_neighbors(u) {
            if alive.contains(w) {
                alive.remove(w);
            }
        }
    }
    let mut q = VertexSet::empty(n);
    for &u in order.iter().rev() {
        if !d.out_neighbors(u).iter().any(|&w| q.contains(w)) {
            q.insert(u);
        }
    }
    assert!(
        d.is_quasi_kernel(&q),
        "constructor returned a non-quasi-kernel on n={}, m={}: {:?}",
        n,
        d.arc_count(),
        q
    );
    q
}

/// Shrinks a quasi-kernel to an inclusion-minimal one.
///
/// Scans members in ascending order, drops the first one whose removal keeps
/// the set a quasi-kernel, and restarts until no member is removable.
pub fn greedy_minimal_qk(d: &Digraph, seed: &VertexSet) -> Result<VertexSet, SolveError> {
    if !d.is_quasi_kernel(seed) {
        return Err(SolveError::SeedNotQuasiKernel);
    }
    let mut q = seed.clone();
    'outer: loop {
        for v in q.to_vec() {
            let mut candidate = q.clone();
            candidate.remove(v);
            if d.is_quasi_kernel(&candidate) {
                q = candidate;
                continue 'outer;
            }
        }
        return Ok(q);
    }
}

/// All quasi-kernels, each exactly once, ordered by ascending sorted member
/// list (the order a depth-first scan that tries "include vertex i" before
/// "exclude vertex i" produces).
pub fn enumerate_quasi_kernels(d: &Digraph) -> Result<Vec<VertexSet>, SolveError> {
    enumerate_quasi_kernels_capped(d, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_quasi_kernels_capped(
    d: &Digraph,
    cap: usize,
) -> Result<Vec<VertexSet>, SolveError> {
    let n = d.vertex_count();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let tab = Absorption::new(d);
    let mut found = Vec::new();
    let mut q = VertexSet::empty(n);
    let blocked = VertexSet::empty(n);
    let absorbed = VertexSet::empty(n);
    enumerate_rec(d, &tab, 0, &mut q, &blocked, &absorbed, &mut found);
    Ok(found)
}

fn enumerate_rec(
    d: &Digraph,
    tab: &Absorption,
    i: usize,
    q: &mut VertexSet,
    blocked: &VertexSet,
    absorbed: &VertexSet,
    found: &mut Vec<VertexSet>,
) {
    let n = d.vertex_count();
    // Every vertex not yet absorbed must still be reachable into q or into
    // some not-yet-decided vertex that independence has not ruled out.
    let mut support = q.clone();
    for j in i..n {
        if !blocked.contains(j) {
            support.insert(j);
        }
    }
    for v in 0..n {
        if !absorbed.contains(v) && !tab.out2[v].intersects(&support) {
            return;
        }
    }
    if i == n {
        debug_assert!(absorbed.is_full());
        found.push(q.clone());
        return;
    }
    if !blocked.contains(i) {
        q.insert(i);
        let blocked2 = blocked.union(&tab.adj[i]);
        let absorbed2 = absorbed.union(&tab.in2[i]);
        enumerate_rec(d, tab, i + 1, q, &blocked2, &absorbed2, found);
        q.remove(i);
    }
    enumerate_rec(d, tab, i + 1, q, blocked, absorbed, found);
}

/// Minimum-size quasi-kernel; ties broken by lexicographically least sorted
/// member list.
///
/// Iterates target sizes upward from the sink count (all sinks sit in every
/// quasi-kernel) and backtracks over supersets of the sink set. The existence
/// test per size branches on high out-degree vertices first; once the minimum
/// size is known a second pass in index order pins down the lexicographic
/// representative.
pub fn min_quasi_kernel(d: &Digraph) -> Result<VertexSet, SolveError> {
    min_quasi_kernel_capped(d, DEFAULT_EXACT_CAP)
}

pub fn min_quasi_kernel_capped(d: &Digraph, cap: usize) -> Result<VertexSet, SolveError> {
    let n = d.vertex_count();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let tab = Absorption::new(d);
    let sinks = d.sinks();
    debug_assert!(d.is_independent(&sinks));

    let mut by_out_degree: Vec<usize> = d.vertices().filter(|&v| !sinks.contains(v)).collect();
    by_out_degree.sort_by_key(|&v| (std::cmp::Reverse(d.out_degree(v)), v));
    let by_index: Vec<usize> = d.vertices().filter(|&v| !sinks.contains(v)).collect();

    let mut blocked = VertexSet::empty(n);
    let mut absorbed = VertexSet::empty(n);
    for s in sinks.iter() {
        blocked.union_in_place(&tab.adj[s]);
        absorbed.union_in_place(&tab.in2[s]);
    }

    for size in sinks.len()..=n {
        let extra = size - sinks.len();
        if fixed_size_search(&tab, &by_out_degree, 0, &sinks, &blocked, &absorbed, extra).is_some()
        {
            let best = fixed_size_search(&tab, &by_index, 0, &sinks, &blocked, &absorbed, extra)
                .expect("a quasi-kernel of the established size exists");
            assert!(
                d.is_quasi_kernel(&best),
                "exact search returned a non-quasi-kernel: {:?}",
                best
            );
            return Ok(best);
        }
    }
    unreachable!("every digraph has a quasi-kernel");
}

/// Searches for a quasi-kernel of size exactly |q| + `remaining`, extending
/// `q` with candidates drawn from `order[pos..]`.
#[allow(clippy::too_many_arguments)]
fn fixed_size_search(
    tab: &Absorption,
    order: &[usize],
    pos: usize,
    q: &VertexSet,
    blocked: &VertexSet,
    absorbed: &VertexSet,
    remaining: usize,
) -> Option<VertexSet> {
    if remaining == 0 {
        return absorbed.is_full().then(|| q.clone());
    }
    let unabsorbed = absorbed.complement();
    let mut support = q.clone();
    let mut max_gain = 0;
    for &c in &order[pos..] {
        if !blocked.contains(c) {
            support.insert(c);
            max_gain = max_gain.max(tab.in2[c].intersection_size(&unabsorbed));
        }
    }
    if max_gain * remaining < unabsorbed.len() {
        return None;
    }
    for v in unabsorbed.iter() {
        if !tab.out2[v].intersects(&support) {
            return None;
        }
    }
    for (j, &c) in order.iter().enumerate().skip(pos) {
        if blocked.contains(c) {
            continue;
        }
        let mut q2 = q.clone();
        q2.insert(c);
        let blocked2 = blocked.union(&tab.adj[c]);
        let absorbed2 = absorbed.union(&tab.in2[c]);
        if let Some(hit) =
            fixed_size_search(tab, order, j + 1, &q2, &blocked2, &absorbed2, remaining - 1)
        {
            return Some(hit);
        }
    }
    None
}

/// `k` pairwise-disjoint quasi-kernels, or `None` when no such family exists.
///
/// Within the cap the answer is always conclusive. Any sink belongs to every
/// quasi-kernel, so a digraph with a sink cannot carry two disjoint ones; that
/// case is answered without searching.
pub fn disjoint_quasi_kernels(d: &Digraph, k: usize) -> Result<Option<Vec<VertexSet>>, SolveError> {
    disjoint_quasi_kernels_capped(d, k, DEFAULT_ENUMERATION_CAP)
}

pub fn disjoint_quasi_kernels_capped(
    d: &Digraph,
    k: usize,
    cap: usize,
) -> Result<Option<Vec<VertexSet>>, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidK);
    }
    if k >= 2 && !d.sinks().is_empty() {
        return Ok(None);
    }
    let all = enumerate_quasi_kernels_capped(d, cap)?;
    let n = d.vertex_count();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    if pick_disjoint(&all, 0, &VertexSet::empty(n), k, &mut chosen) {
        Ok(Some(chosen.into_iter().map(|i| all[i].clone()).collect()))
    } else {
        Ok(None)
    }
}

fn pick_disjoint(
    all: &[VertexSet],
    start: usize,
    used: &VertexSet,
    k: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    if all.len() - start < k - chosen.len() {
        return false;
    }
    for i in start..all.len() {
        if all[i].is_disjoint(used) {
            chosen.push(i);
            let used2 = used.union(&all[i]);
            if pick_disjoint(all, i + 1, &used2, k, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Minimum-size quasi-kernel contained in the given kernel.
///
/// Subsets of a kernel are automatically independent, so only absorption is
/// searched: supersets of the sink set inside `kernel`, smallest first, in
/// index order.
pub fn min_qk_within_kernel(d: &Digraph, kernel: &VertexSet) -> Result<VertexSet, SolveError> {
    min_qk_within_kernel_capped(d, kernel, DEFAULT_EXACT_CAP)
}

pub fn min_qk_within_kernel_capped(
    d: &Digraph,
    kernel: &VertexSet,
    cap: usize,
) -> Result<VertexSet, SolveError> {
    if !d.is_kernel(kernel) {
        return Err(SolveError::NotAKernel);
    }
    let n = d.vertex_count();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let tab = Absorption::new(d);
    let sinks = d.sinks();
    debug_assert!(sinks.is_subset_of(kernel));
    let members: Vec<usize> = kernel.difference(&sinks).to_vec();
    let mut absorbed = VertexSet::empty(n);
    for s in sinks.iter() {
        absorbed.union_in_place(&tab.in2[s]);
    }
    let blocked = VertexSet::empty(n);
    for size in sinks.len()..=kernel.len() {
        if let Some(q) =
            fixed_size_search(&tab, &members, 0, &sinks, &blocked, &absorbed, size - sinks.len())
        {
            debug_assert!(d.is_quasi_kernel(&q));
            return Ok(q);
        }
    }
    unreachable!("the kernel itself absorbs every vertex");
}

/// Certificate that a quasi-kernel is within a factor `d^2 + d + 1` of any
/// minimum one, where `d` is the maximum in-degree.
///
/// A member absorbs at most `1 + d + d^2` vertices, so
/// `(d^2 + d + 1) * |Q| >= n` for every quasi-kernel `Q`; in particular any
/// two quasi-kernel sizes are within that factor of each other. The same
/// constant-factor obstruction shows up in the approximation-preserving
/// reduction from vertex cover on cubic graphs (see
/// [`crate::reductions::vc_to_qk`]), whose L-reduction constants are recorded
/// here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxCertificate {
    pub vertex_count: usize,
    pub qk_size: usize,
    pub max_in_degree: usize,
    /// `d^2 + d + 1` for `d` the maximum in-degree.
    pub ratio_bound: u64,
    /// Whether `ratio_bound * qk_size >= vertex_count` held.
    pub bound_holds: bool,
    /// L-reduction constant alpha of the cubic vertex cover reduction.
    pub l_reduction_alpha: u64,
    /// L-reduction constant beta of the cubic vertex cover reduction.
    pub l_reduction_beta: u64,
}

pub fn approx_ratio_certificate(
    d: &Digraph,
    q: &VertexSet,
) -> Result<ApproxCertificate, SolveError> {
    if !d.is_quasi_kernel(q) {
        return Err(SolveError::NotAQuasiKernel);
    }
    let deg = d.profile().max_in_degree as u64;
    let ratio_bound = deg * deg + deg + 1;
    Ok(ApproxCertificate {
        vertex_count: d.vertex_count(),
        qk_size: q.len(),
        max_in_degree: deg as usize,
        ratio_bound,
        bound_holds: (ratio_bound as u128) * (q.len() as u128) >= d.vertex_count() as u128,
        l_reduction_alpha: 5,
        l_reduction_beta: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vs.iter().copied())
    }

    fn path(n: usize) -> Digraph {
        Digraph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn constructor_on_tiny_graphs() {
        assert_eq!(chvatal_lovasz_qk(&Digraph::new(1, []).unwrap()).to_vec(), vec![0]);
        assert_eq!(chvatal_lovasz_qk(&path(2)).to_vec(), vec![1]);
        let tri = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let q = chvatal_lovasz_qk(&tri);
        assert_eq!(q.len(), 1);
    }

    #[test]
    fn constructor_keeps_all_sinks() {
        let star = Digraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(chvatal_lovasz_qk(&star).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn constructor_handles_empty_digraph() {
        let d = Digraph::new(0, []).unwrap();
        assert!(chvatal_lovasz_qk(&d).is_empty());
    }

    #[test]
    fn greedy_rejects_bad_seed() {
        let d = path(3);
        assert_eq!(
            greedy_minimal_qk(&d, &set(3, [0, 1].as_slice())),
            Err(SolveError::SeedNotQuasiKernel)
        );
    }

    #[test]
    fn greedy_shrinks_to_minimal() {
        // 0 -> 1 -> 2: {0, 2} is a quasi-kernel but 0 is removable.
        let d = path(3);
        let out = greedy_minimal_qk(&d, &set(3, &[0, 2])).unwrap();
        assert_eq!(out.to_vec(), vec![2]);
    }

    #[test]
    fn greedy_keeps_already_minimal_seed() {
        // Digon 0 <-> 1 plus 2 -> 0 and 2 -> 1; {0} already minimal.
        let d = Digraph::new(3, [(0, 1), (1, 0), (2, 0), (2, 1)]).unwrap();
        let out = greedy_minimal_qk(&d, &set(3, &[0])).unwrap();
        assert_eq!(out.to_vec(), vec![0]);
    }

    #[test]
    fn enumerate_three_cycle_in_order() {
        let tri = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let all = enumerate_quasi_kernels(&tri).unwrap();
        let got: Vec<Vec<usize>> = all.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn enumerate_single_vertex() {
        let d = Digraph::new(1, []).unwrap();
        let all = enumerate_quasi_kernels(&d).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_vec(), vec![0]);
    }

    #[test]
    fn enumerate_refuses_above_cap() {
        let d = Digraph::new(25, [(0, 1)]).unwrap();
        assert_eq!(
            enumerate_quasi_kernels(&d),
            Err(SolveError::CapExceeded { n: 25, cap: 24 })
        );
        assert!(enumerate_quasi_kernels_capped(&d, 25).is_ok());
    }

    #[test]
    fn min_on_paths() {
        assert_eq!(min_quasi_kernel(&path(3)).unwrap().to_vec(), vec![2]);
        // For the 5-path both {1, 4} and {2, 4} have minimum size; the tie
        // breaks to the lexicographically least.
        assert_eq!(min_quasi_kernel(&path(5)).unwrap().to_vec(), vec![1, 4]);
    }

    #[test]
    fn min_on_out_star_takes_all_sinks() {
        let star = Digraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(min_quasi_kernel(&star).unwrap().to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn min_respects_cap() {
        let d = Digraph::new(41, [(0, 1)]).unwrap();
        assert_eq!(
            min_quasi_kernel(&d),
            Err(SolveError::CapExceeded { n: 41, cap: 40 })
        );
    }

    #[test]
    fn disjoint_pair_on_digon() {
        let d = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let pair = disjoint_quasi_kernels(&d, 2).unwrap().unwrap();
        assert_eq!(pair[0].to_vec(), vec![0]);
        assert_eq!(pair[1].to_vec(), vec![1]);
    }

    #[test]
    fn disjoint_triple_on_three_cycle() {
        let tri = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let triple = disjoint_quasi_kernels(&tri, 3).unwrap().unwrap();
        assert_eq!(triple.len(), 3);
        let union: usize = triple.iter().map(VertexSet::len).sum();
        assert_eq!(union, 3);
    }

    #[test]
    fn disjoint_rejects_k_zero() {
        let d = path(2);
        assert_eq!(disjoint_quasi_kernels(&d, 0), Err(SolveError::InvalidK));
    }

    #[test]
    fn sink_blocks_any_disjoint_pair() {
        let d = path(4);
        assert_eq!(disjoint_quasi_kernels(&d, 2).unwrap(), None);
    }

    #[test]
    fn within_kernel_on_oriented_path() {
        // 0 -> 1: the only kernel is {1} and it is also the minimum inside.
        let d = path(2);
        let q = min_qk_within_kernel(&d, &set(2, &[1])).unwrap();
        assert_eq!(q.to_vec(), vec![1]);
    }

    #[test]
    fn within_kernel_rejects_non_kernel() {
        let d = path(3);
        assert_eq!(
            min_qk_within_kernel(&d, &set(3, &[2])),
            Err(SolveError::NotAKernel)
        );
    }

    #[test]
    fn within_kernel_can_drop_kernel_vertices() {
        // Sources 0, 1, 4 all feed hub 2, which feeds sink 3. {0, 1, 3, 4} is
        // a kernel, but inside it the sink alone absorbs everything at
        // distance two.
        let d = Digraph::new(5, [(0, 2), (1, 2), (2, 3), (4, 2)]).unwrap();
        let kernel = set(5, &[0, 1, 3, 4]);
        assert!(d.is_kernel(&kernel));
        let q = min_qk_within_kernel(&d, &kernel).unwrap();
        assert_eq!(q.to_vec(), vec![3]);
    }

    #[test]
    fn certificate_on_cycles() {
        let cyc = |n: usize| Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let d = cyc(9);
        let q = min_quasi_kernel(&d).unwrap();
        let cert = approx_ratio_certificate(&d, &q).unwrap();
        assert_eq!(cert.max_in_degree, 1);
        assert_eq!(cert.ratio_bound, 3);
        assert!(cert.bound_holds);
        assert_eq!(cert.l_reduction_alpha, 5);
        assert_eq!(cert.l_reduction_beta, 1);
    }

    #[test]
    fn certificate_rejects_non_quasi_kernel() {
        let d = path(3);
        assert_eq!(
            approx_ratio_certificate(&d, &set(3, &[0])),
            Err(SolveError::NotAQuasiKernel)
        );
    }
}
