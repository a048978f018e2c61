//! Vertex cover on 3-regular graphs rephrased as minimum quasi-kernel,
//! with a size-preserving map in each direction: covers of size `k`
//! match quasi-kernels of size `k + n`.
//!
//! Layout: each input vertex `i` becomes the path `w_i -> w'_i -> w''_i`
//! (`w_i = i`, `w'_i = n + i`, `w''_i = 2n + i`); each input edge `e =
//! {u, v}` becomes `z'_e -> z_e` plus `z_e -> w_u`, `z_e -> w_v`
//! (`z_e = 3n + 2e`, `z'_e = 3n + 2e + 1`, with `e` indexing the sorted
//! edge list). Labels are `"w_4"`, `"w'_4"`, `"w''_4"`, `"z_1_2"`,
//! `"z'_1_2"`.

use std::collections::BTreeMap;

use super::{ReductionError, ReductionOutput, UndirectedGraph};
use crate::digraph::{Digraph, VertexSet};

/// Builds the digraph whose minimum quasi-kernel is `n` larger than the
/// minimum vertex cover of `g`. The input must be 3-regular.
pub fn vc_to_qk(g: &UndirectedGraph) -> Result<ReductionOutput, ReductionError> {
    if let Some((v, &degree)) = g.degrees().iter().enumerate().find(|(_, &d)| d != 3) {
        return Err(ReductionError::NotCubic { v, degree });
    }

    let n = g.vertex_count();
    let m = g.edge_count();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(2 * n + 3 * m);
    for i in 0..n {
        arcs.push((i, n + i));
        arcs.push((n + i, 2 * n + i));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let z = 3 * n + 2 * e;
        arcs.push((z + 1, z));
        arcs.push((z, u));
        arcs.push((z, v));
    }

    let mut labels = BTreeMap::new();
    for i in 0..n {
        labels.insert(format!("w_{i}"), i);
        labels.insert(format!("w'_{i}"), n + i);
        labels.insert(format!("w''_{i}"), 2 * n + i);
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        labels.insert(format!("z_{u}_{v}"), 3 * n + 2 * e);
        labels.insert(format!("z'_{u}_{v}"), 3 * n + 2 * e + 1);
    }

    let digraph = Digraph::new(3 * n + 2 * m, arcs).expect("generated arcs are valid");
    let mut params = BTreeMap::new();
    params.insert("num_vertices".into(), n as u64);
    params.insert("num_edges".into(), m as u64);
    params.insert("l_reduction_alpha".into(), 5);
    params.insert("l_reduction_beta".into(), 1);
    Ok(ReductionOutput {
        digraph,
        labels,
        params,
    })
}

/// Turns a vertex cover into the quasi-kernel holding every `w''_i` plus
/// `w_i` for each covered vertex. Verified before returning.
pub fn vc_set_to_qk(out: &ReductionOutput, cover: &[usize]) -> Result<VertexSet, ReductionError> {
    let n = out.param("num_vertices") as usize;
    let m = out.param("num_edges") as usize;
    let d = &out.digraph;
    for &v in cover {
        if v >= n {
            return Err(ReductionError::VertexOutOfRange { v, n });
        }
    }
    let in_cover = {
        let mut flags = vec![false; n];
        for &v in cover {
            flags[v] = true;
        }
        flags
    };
    for e in 0..m {
        let ends = d.out_neighbors(3 * n + 2 * e);
        if !ends.iter().any(|&w| in_cover[w]) {
            return Err(ReductionError::NotAVertexCover {
                u: ends[0],
                v: ends[1],
            });
        }
    }

    let mut q = VertexSet::empty(d.vertex_count());
    for i in 0..n {
        q.insert(2 * n + i);
    }
    for &v in cover {
        q.insert(v);
    }
    assert!(d.is_quasi_kernel(&q), "witness set failed verification");
    Ok(q)
}

/// Normalizes a quasi-kernel until it only holds `w` and `w''` vertices,
/// then reads off the cover. Returns the cover (sorted input-vertex ids)
/// and the normalized quasi-kernel; normalization never grows the set,
/// so the cover has size at most `|q| - n`.
///
/// Two rewrite steps run to exhaustion: a `z'_e` member is dropped (its
/// edge already has a covered endpoint, which reabsorbs it), and the
/// `z_e` members at a vertex `i` are traded for `w_i` itself.
pub fn normalize_qk_to_vc(
    out: &ReductionOutput,
    q: &VertexSet,
) -> Result<(Vec<usize>, VertexSet), ReductionError> {
    let d = &out.digraph;
    if !d.is_quasi_kernel(q) {
        return Err(ReductionError::NotAQuasiKernel);
    }
    let n = out.param("num_vertices") as usize;
    let m = out.param("num_edges") as usize;

    let mut q = q.clone();
    for e in 0..m {
        q.remove(3 * n + 2 * e + 1);
    }
    debug_assert!(d.is_quasi_kernel(&q));
    for i in 0..n {
        let covered: Vec<usize> = (0..m)
            .map(|e| 3 * n + 2 * e)
            .filter(|&z| q.contains(z) && d.out_neighbors(z).contains(&i))
            .collect();
        if !covered.is_empty() {
            for z in covered {
                q.remove(z);
            }
            q.insert(i);
            debug_assert!(d.is_quasi_kernel(&q));
        }
    }

    let cover: Vec<usize> = q.iter().take_while(|&v| v < n).collect();
    // Every edge vertex must now be absorbed through a covered endpoint.
    for e in 0..m {
        let ends = d.out_neighbors(3 * n + 2 * e);
        assert!(ends.iter().any(|&w| q.contains(w)));
    }
    assert!(d.is_quasi_kernel(&q));
    Ok((cover, q))
}
