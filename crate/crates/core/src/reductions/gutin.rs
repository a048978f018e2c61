//! A 14-vertex sink-free digraph in which no two quasi-kernels are
//! disjoint: a 7-vertex tournament whose vertex pairs all share an
//! out-neighbour, with one private in-neighbour attached to each vertex.

use std::collections::BTreeMap;

use crate::digraph::Digraph;

/// Arc list of the gadget, as offsets into the local vertex order
/// `[k1..k7, s1..s7]`. The k-part is the tournament where `k_i` beats
/// `k_{i+1}`, `k_{i+2}` and `k_{i+4}` (indices mod 7); each `s_i` has
/// the single arc into `k_i`.
pub(crate) const GUTIN_ARCS: [(usize, usize); 28] = [
    (0, 1),
    (0, 2),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 6),
    (3, 4),
    (3, 5),
    (3, 0),
    (4, 5),
    (4, 6),
    (4, 1),
    (5, 6),
    (5, 0),
    (5, 2),
    (6, 0),
    (6, 1),
    (6, 3),
    (7, 0),
    (8, 1),
    (9, 2),
    (10, 3),
    (11, 4),
    (12, 5),
    (13, 6),
];

/// Builds the gadget. Vertices `0..7` are `k1..k7`, vertices `7..14`
/// are `s1..s7`.
pub fn gutin_gadget() -> Digraph {
    Digraph::new(14, GUTIN_ARCS).expect("arc table is in range and loop-free")
}

/// Structured names for the gadget vertices, matching [`gutin_gadget`].
pub fn gutin_labels() -> BTreeMap<String, usize> {
    let mut labels = BTreeMap::new();
    for r in 0..7 {
        labels.insert(format!("k{}", r + 1), r);
        labels.insert(format!("s{}", r + 1), 7 + r);
    }
    labels
}
