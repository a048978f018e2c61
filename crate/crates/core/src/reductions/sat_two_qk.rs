//! Three-literal satisfiability rephrased as the existence of two
//! disjoint quasi-kernels.
//!
//! Layout: a shared six-vertex block `D0` occupies indices `0..6`, one
//! six-vertex block per variable follows, then one fourteen-vertex block
//! per clause. Labels are `"D0.a"`..`"D0.c'"`, `"D3.A"`..`"D3.f"` for
//! variable 3, and `"C2.k1"`..`"C2.s7"` for clause 2.

use std::collections::{BTreeMap, BTreeSet};

use super::gutin::GUTIN_ARCS;
use super::{CnfFormula, ReductionError, ReductionOutput};
use crate::digraph::{Digraph, VertexSet};

const D0_NAMES: [&str; 6] = ["a", "b", "c", "a'", "b'", "c'"];
const VAR_NAMES: [&str; 6] = ["A", "A'", "A''", "B", "t", "f"];

// Both D0 and each variable block are two directed triangles whose
// second triangle's entry vertex dominates the first triangle. Offsets
// follow the name arrays above.
const TWIN_TRIANGLES: [(usize, usize); 9] = [
    (0, 1),
    (1, 2),
    (2, 0),
    (3, 4),
    (4, 5),
    (5, 3),
    (3, 0),
    (3, 1),
    (3, 2),
];

const B_PRIME: usize = 4;
const VAR_T: usize = 4;
const VAR_F: usize = 5;

fn var_base(i: usize) -> usize {
    6 + 6 * (i - 1)
}

fn clause_base(num_vars: usize, j: usize) -> usize {
    6 + 6 * num_vars + 14 * (j - 1)
}

/// Vertex standing for "literal `lit` evaluates to true": the `t` vertex
/// of its variable block for a positive literal, the `f` vertex for a
/// negative one.
fn lambda(lit: i64) -> usize {
    let i = lit.unsigned_abs() as usize;
    var_base(i) + if lit > 0 { VAR_T } else { VAR_F }
}

/// Builds the digraph that has two disjoint quasi-kernels exactly when
/// `f` is satisfiable. Clauses may hold at most three distinct literals;
/// clause vertex `k1` gets one arc per distinct literal.
pub fn sat_to_two_disjoint_qk(f: &CnfFormula) -> Result<ReductionOutput, ReductionError> {
    f.check_literals()?;
    let distinct: Vec<BTreeSet<i64>> = f
        .clauses
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();
    for (j, lits) in distinct.iter().enumerate() {
        if lits.len() > 3 {
            return Err(ReductionError::ClauseTooWide {
                clause: j + 1,
                count: lits.len(),
            });
        }
    }

    let n = f.num_vars;
    let m = f.clauses.len();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(9 + 11 * n + 31 * m);
    arcs.extend(TWIN_TRIANGLES);
    for i in 1..=n {
        let base = var_base(i);
        arcs.extend(TWIN_TRIANGLES.iter().map(|&(u, v)| (base + u, base + v)));
        arcs.push((base + VAR_T, B_PRIME));
        arcs.push((base + VAR_F, B_PRIME));
    }
    for (j, lits) in distinct.iter().enumerate() {
        let base = clause_base(n, j + 1);
        arcs.extend(GUTIN_ARCS.iter().map(|&(u, v)| (base + u, base + v)));
        // k1 sits at offset 0 of the clause block.
        arcs.extend(lits.iter().map(|&lit| (base, lambda(lit))));
    }

    let mut labels = BTreeMap::new();
    for (off, name) in D0_NAMES.iter().enumerate() {
        labels.insert(format!("D0.{name}"), off);
    }
    for i in 1..=n {
        for (off, name) in VAR_NAMES.iter().enumerate() {
            labels.insert(format!("D{i}.{name}"), var_base(i) + off);
        }
    }
    for j in 1..=m {
        let base = clause_base(n, j);
        for r in 1..=7 {
            labels.insert(format!("C{j}.k{r}"), base + r - 1);
            labels.insert(format!("C{j}.s{r}"), base + 6 + r);
        }
    }

    let digraph = Digraph::new(6 + 6 * n + 14 * m, arcs).expect("generated arcs are valid");
    let mut params = BTreeMap::new();
    params.insert("num_vars".into(), n as u64);
    params.insert("num_clauses".into(), m as u64);
    params.insert("disjoint_target".into(), 2);
    Ok(ReductionOutput {
        digraph,
        labels,
        params,
    })
}

/// Turns a satisfying assignment into two disjoint quasi-kernels of the
/// generated digraph. Both sets are verified before being returned.
pub fn assignment_to_qk_pair(
    out: &ReductionOutput,
    f: &CnfFormula,
    phi: &[bool],
) -> Result<(VertexSet, VertexSet), ReductionError> {
    f.check_satisfying(phi)?;
    let n = f.num_vars;
    let m = f.clauses.len();
    let d = &out.digraph;
    let mut q1 = VertexSet::empty(d.vertex_count());
    let mut q2 = VertexSet::empty(d.vertex_count());

    q1.insert(1); // b
    q1.insert(B_PRIME);
    q2.insert(2); // c
    q2.insert(5); // c'
    for i in 1..=n {
        let base = var_base(i);
        q1.insert(base + 1); // A'
        q2.insert(base + 2); // A''
        q2.insert(base + if phi[i - 1] { VAR_T } else { VAR_F });
    }
    for j in 1..=m {
        let base = clause_base(n, j);
        for off in [5, 7, 9, 13] {
            q1.insert(base + off); // k6, s1, s3, s7
        }
        for off in [6, 8, 10] {
            q2.insert(base + off); // k7, s2, s4
        }
    }

    assert!(q1.is_disjoint(&q2));
    assert!(d.is_quasi_kernel(&q1), "witness set failed verification");
    assert!(d.is_quasi_kernel(&q2), "witness set failed verification");
    Ok((q1, q2))
}
