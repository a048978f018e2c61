//! Set cover rephrased as minimum quasi-kernel: covers of size `k`
//! correspond to quasi-kernels of size `k + 1`.
//!
//! Layout: universe elements occupy `0..n`, set vertices `n..n+m`, then
//! the relay `s` and the sink `t`. Every element points into the sets
//! containing it, every set points at `s`, and `s` points at `t`. Labels
//! are `"u0"`, `"F3"`, `"s"`, `"t"`; set indices count from 0.

use std::collections::BTreeMap;

use super::{ReductionError, ReductionOutput, SetCoverInstance};
use crate::digraph::{Digraph, VertexSet};

/// Builds the digraph whose minimum quasi-kernel size is one more than
/// the minimum cover size of `inst`. The family must cover the universe.
pub fn setcover_to_qk(inst: &SetCoverInstance) -> Result<ReductionOutput, ReductionError> {
    inst.check()?;
    let n = inst.universe_size;
    let m = inst.family.len();
    let s = n + m;
    let t = n + m + 1;

    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (j, set) in inst.family.iter().enumerate() {
        for &e in set {
            arcs.push((e, n + j));
        }
        arcs.push((n + j, s));
    }
    arcs.push((s, t));

    let mut labels = BTreeMap::new();
    for e in 0..n {
        labels.insert(format!("u{e}"), e);
    }
    for j in 0..m {
        labels.insert(format!("F{j}"), n + j);
    }
    labels.insert("s".into(), s);
    labels.insert("t".into(), t);

    let digraph = Digraph::new(n + m + 2, arcs).expect("generated arcs are valid");
    let mut params = BTreeMap::new();
    params.insert("universe_size".into(), n as u64);
    params.insert("num_sets".into(), m as u64);
    params.insert("budget".into(), inst.budget as u64);
    params.insert("k_prime".into(), inst.budget as u64 + 1);
    Ok(ReductionOutput {
        digraph,
        labels,
        params,
    })
}

/// Turns a cover (0-based family indices) into the quasi-kernel made of
/// its set vertices plus the sink. Verified before returning.
pub fn cover_to_qk(out: &ReductionOutput, cover: &[usize]) -> Result<VertexSet, ReductionError> {
    let n = out.param("universe_size") as usize;
    let m = out.param("num_sets") as usize;
    let d = &out.digraph;
    for &j in cover {
        if j >= m {
            return Err(ReductionError::SetIndexOutOfRange {
                index: j,
                num_sets: m,
            });
        }
    }
    for e in 0..n {
        if !cover.iter().any(|&j| d.has_arc(e, n + j)) {
            return Err(ReductionError::NotACover { element: e });
        }
    }

    let mut q = VertexSet::empty(d.vertex_count());
    for &j in cover {
        q.insert(n + j);
    }
    q.insert(n + m + 1); // t
    assert!(d.is_quasi_kernel(&q), "witness set failed verification");
    Ok(q)
}

/// Extracts a cover from any quasi-kernel `q`, as sorted 0-based family
/// indices of size at most `|q| - 1`. While `q` holds a universe vertex
/// `u`, the exchange step swaps `u`'s whole trace inside `q` for one set
/// containing `u`; this never grows `q` and keeps it a quasi-kernel.
pub fn qk_to_cover(out: &ReductionOutput, q: &VertexSet) -> Result<Vec<usize>, ReductionError> {
    let d = &out.digraph;
    if !d.is_quasi_kernel(q) {
        return Err(ReductionError::NotAQuasiKernel);
    }
    let n = out.param("universe_size") as usize;
    let m = out.param("num_sets") as usize;

    let mut q = q.clone();
    loop {
        let Some(u) = q.iter().find(|&u| u < n) else {
            break;
        };
        // Every universe vertex points at some set; take the lowest.
        let f = *d.out_neighbors(u).first().expect("elements are covered");
        for &e in d.in_neighbors(f) {
            q.remove(e);
        }
        q.insert(f);
        debug_assert!(d.is_quasi_kernel(&q));
    }

    let cover: Vec<usize> = q.iter().filter(|&v| v >= n && v < n + m).map(|v| v - n).collect();
    // Absorption of each element now goes through a chosen set.
    for e in 0..n {
        debug_assert!(cover.iter().any(|&j| d.has_arc(e, n + j)));
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{enumerate_quasi_kernels, min_quasi_kernel};

    fn tiny() -> SetCoverInstance {
        SetCoverInstance {
            universe_size: 2,
            family: vec![vec![0, 1]],
            budget: 1,
        }
    }

    fn star() -> SetCoverInstance {
        SetCoverInstance {
            universe_size: 3,
            family: vec![vec![0], vec![1], vec![2], vec![0, 1, 2]],
            budget: 1,
        }
    }

    #[test]
    fn size_formula_and_profile() {
        let out = setcover_to_qk(&tiny()).unwrap();
        assert_eq!(out.digraph.vertex_count(), 5);
        assert_eq!(out.digraph.arc_count(), 2 + 1 + 1);
        assert_eq!(out.param("k_prime"), 2);
        let profile = out.digraph.profile();
        assert!(profile.is_acyclic);
        assert!(profile.underlying_is_bipartite);
    }

    #[test]
    fn rejects_uncovered_universe() {
        let inst = SetCoverInstance {
            universe_size: 2,
            family: vec![vec![0]],
            budget: 1,
        };
        assert_eq!(
            setcover_to_qk(&inst).unwrap_err(),
            ReductionError::UncoveredElement { element: 1 }
        );
    }

    #[test]
    fn minimum_matches_budget_on_small_instances() {
        let out = setcover_to_qk(&tiny()).unwrap();
        let best = min_quasi_kernel(&out.digraph).unwrap();
        assert_eq!(best.to_vec(), vec![2, 4]); // F0 and t
        let star_out = setcover_to_qk(&star()).unwrap();
        let star_best = min_quasi_kernel(&star_out.digraph).unwrap();
        assert_eq!(star_best.to_vec(), vec![6, 8]); // the big set and t
    }

    #[test]
    fn sink_sits_in_every_quasi_kernel() {
        let out = setcover_to_qk(&star()).unwrap();
        let t = out.index("t");
        for q in enumerate_quasi_kernels(&out.digraph).unwrap() {
            assert!(q.contains(t));
        }
    }

    #[test]
    fn cover_round_trip() {
        let out = setcover_to_qk(&tiny()).unwrap();
        let q = cover_to_qk(&out, &[0]).unwrap();
        assert_eq!(q.to_vec(), vec![2, 4]);
        let cover = qk_to_cover(&out, &q).unwrap();
        assert_eq!(cover, vec![0]);
    }

    #[test]
    fn exchange_shrinks_an_element_heavy_quasi_kernel() {
        let out = setcover_to_qk(&tiny()).unwrap();
        // Both universe vertices plus the sink form a quasi-kernel.
        let q = VertexSet::from_indices(5, [0, 1, 4]);
        assert!(out.digraph.is_quasi_kernel(&q));
        let cover = qk_to_cover(&out, &q).unwrap();
        assert_eq!(cover, vec![0]);
        assert!(cover.len() < q.len());
    }

    #[test]
    fn exchange_walks_through_singleton_sets() {
        let out = setcover_to_qk(&star()).unwrap();
        let q = VertexSet::from_indices(9, [0, 1, 2, 8]);
        assert!(out.digraph.is_quasi_kernel(&q));
        let cover = qk_to_cover(&out, &q).unwrap();
        assert_eq!(cover, vec![0, 1, 2]);
    }

    #[test]
    fn cover_witness_rejections() {
        let out = setcover_to_qk(&star()).unwrap();
        assert_eq!(
            cover_to_qk(&out, &[7]).unwrap_err(),
            ReductionError::SetIndexOutOfRange {
                index: 7,
                num_sets: 4
            }
        );
        assert_eq!(
            cover_to_qk(&out, &[0, 1]).unwrap_err(),
            ReductionError::NotACover { element: 2 }
        );
        let not_qk = VertexSet::from_indices(9, [7]);
        assert_eq!(
            qk_to_cover(&out, &not_qk).unwrap_err(),
            ReductionError::NotAQuasiKernel
        );
    }
}
