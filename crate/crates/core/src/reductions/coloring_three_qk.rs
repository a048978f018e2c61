//! 3-colorability rephrased as the existence of three pairwise disjoint
//! quasi-kernels.
//!
//! Each input vertex `i` becomes a directed triangle `w_i -> z_{i,1} ->
//! z_{i,2} -> w_i`; each input edge becomes a digon between the two `w`
//! vertices. Layout: `w_i = i`, `z_{i,1} = n + 2i`, `z_{i,2} = n + 2i +
//! 1`. Labels are `"w_4"`, `"z_4.1"`, `"z_4.2"`. Colors are 0, 1, 2
//! throughout.

use std::collections::BTreeMap;

use super::{ReductionError, ReductionOutput, UndirectedGraph};
use crate::digraph::{Digraph, VertexSet};

/// Builds the digraph that has three pairwise disjoint quasi-kernels
/// exactly when `g` is 3-colorable. Isolated vertices are rejected; the
/// equivalence needs every vertex to carry at least one digon.
pub fn coloring_to_three_disjoint_qk(
    g: &UndirectedGraph,
) -> Result<ReductionOutput, ReductionError> {
    if let Some(v) = g.degrees().iter().position(|&d| d == 0) {
        return Err(ReductionError::IsolatedVertex { v });
    }

    let n = g.vertex_count();
    let m = g.edge_count();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(2 * m + 3 * n);
    for &(u, v) in g.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    for i in 0..n {
        arcs.push((i, n + 2 * i));
        arcs.push((n + 2 * i, n + 2 * i + 1));
        arcs.push((n + 2 * i + 1, i));
    }

    let mut labels = BTreeMap::new();
    for i in 0..n {
        labels.insert(format!("w_{i}"), i);
        labels.insert(format!("z_{i}.1"), n + 2 * i);
        labels.insert(format!("z_{i}.2"), n + 2 * i + 1);
    }

    let digraph = Digraph::new(3 * n, arcs).expect("generated arcs are valid");
    let mut params = BTreeMap::new();
    params.insert("num_vertices".into(), n as u64);
    params.insert("num_edges".into(), m as u64);
    params.insert("disjoint_target".into(), 3);
    Ok(ReductionOutput {
        digraph,
        labels,
        params,
    })
}

/// Spreads a proper 3-coloring over the triangles: class `t` collects
/// every `w_i` colored `t`, every `z_{i,1}` with color `t - 1`, and
/// every `z_{i,2}` with color `t - 2` (mod 3). The classes partition the
/// vertices; each is verified as a quasi-kernel before returning.
pub fn coloring_to_qk_triple(
    out: &ReductionOutput,
    coloring: &[u8],
) -> Result<(VertexSet, VertexSet, VertexSet), ReductionError> {
    let n = out.param("num_vertices") as usize;
    check_coloring(out, coloring, n)?;

    let d = &out.digraph;
    let mut classes = [
        VertexSet::empty(d.vertex_count()),
        VertexSet::empty(d.vertex_count()),
        VertexSet::empty(d.vertex_count()),
    ];
    for (i, &c) in coloring.iter().enumerate() {
        let c = c as usize;
        classes[c].insert(i);
        classes[(c + 1) % 3].insert(n + 2 * i);
        classes[(c + 2) % 3].insert(n + 2 * i + 1);
    }
    let [q0, q1, q2] = classes;
    assert_eq!(q0.len() + q1.len() + q2.len(), d.vertex_count());
    for q in [&q0, &q1, &q2] {
        assert!(d.is_quasi_kernel(q), "witness set failed verification");
    }
    Ok((q0, q1, q2))
}

/// Reads a proper 3-coloring back off three disjoint quasi-kernels: each
/// `w_i` lies in exactly one of them (each set must meet the three-vertex
/// reach of `z_{i,1}`, and the sets are disjoint), and that one is the
/// color.
pub fn qk_triple_to_coloring(
    out: &ReductionOutput,
    triple: (&VertexSet, &VertexSet, &VertexSet),
) -> Result<Vec<u8>, ReductionError> {
    let d = &out.digraph;
    let (q0, q1, q2) = triple;
    for q in [q0, q1, q2] {
        if !d.is_quasi_kernel(q) {
            return Err(ReductionError::NotAQuasiKernel);
        }
    }
    if !(q0.is_disjoint(q1) && q0.is_disjoint(q2) && q1.is_disjoint(q2)) {
        return Err(ReductionError::NotDisjoint);
    }

    let n = out.param("num_vertices") as usize;
    let mut coloring = Vec::with_capacity(n);
    for i in 0..n {
        let holders: Vec<u8> = [q0, q1, q2]
            .iter()
            .enumerate()
            .filter(|(_, q)| q.contains(i))
            .map(|(t, _)| t as u8)
            .collect();
        assert_eq!(holders.len(), 1, "w_{i} must lie in exactly one set");
        coloring.push(holders[0]);
    }
    // Digons make same-colored adjacent w vertices impossible.
    for &(u, v) in d.arcs() {
        if u < n && v < n {
            assert_ne!(coloring[u], coloring[v]);
        }
    }
    Ok(coloring)
}

fn check_coloring(out: &ReductionOutput, coloring: &[u8], n: usize) -> Result<(), ReductionError> {
    if coloring.len() != n {
        return Err(ReductionError::ColoringLength {
            expected: n,
            got: coloring.len(),
        });
    }
    if let Some((v, &c)) = coloring.iter().enumerate().find(|(_, &c)| c > 2) {
        return Err(ReductionError::ColorOutOfRange { v, color: c });
    }
    // The digons among the first n vertices are exactly the input edges.
    for &(u, v) in out.digraph.arcs() {
        if u < v && v < n && coloring[u] == coloring[v] {
            return Err(ReductionError::ImproperColoring { u, v });
        }
    }
    Ok(())
}
