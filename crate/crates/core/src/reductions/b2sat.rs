//! Satisfiability of (3,B2) formulas (exactly three distinct literals
//! per clause, every literal occurring exactly twice) rephrased as a
//! quasi-kernel size target on an acyclic digraph whose underlying graph
//! is cubic except for the connection midpoints.
//!
//! Layout: one 14-vertex block per variable (`var_base(i) = 14(i-1)`),
//! then one 21-vertex block per clause, then one midpoint per clause
//! slot. Clause slot `k` reaches the slot's literal vertex through its
//! midpoint: `C_{j,k} -> M_{j,k} -> x_i` (or `~x_i`).
//!
//! Labels: variable blocks use `"x3"`, `"~x3"`, `"d3.1"`..`"d3.4"` and
//! `"x3.g1"`..`"x3.g8"` for the unnamed interior; clause blocks use
//! `"C2.1"`..`"C2.3"` for the slot vertices, `"C2.t1"`..`"C2.t3"` for
//! the arm sinks, and `"C2.inner1"`, `"C2.outer1"`, `"C2.a1"`,
//! `"C2.b1"`, `"C2.src1"` for the arm interior; midpoints are `"M2.1"`.

use std::collections::BTreeMap;

use super::{CnfFormula, ReductionError, ReductionOutput};
use crate::digraph::{Digraph, VertexSet};

// Offsets into the variable block order
// [x, ~x, d1, d2, d3, d4, g1, g2, g3, g4, g5, g6, g7, g8].
const POS: usize = 0;
const NEG: usize = 1;
const D1: usize = 2;
const D2: usize = 3;
const D3: usize = 4;
const D4: usize = 5;

/// Arc list of the variable block. Both literal vertices feed a d-vertex
/// (`x` into `d2`, `~x` into `d3`); `d1` and `d4` are its sinks.
const VAR_GADGET_ARCS: [(usize, usize); 19] = [
    (POS, D2),
    (NEG, D3),
    (6, D2),
    (6, D3),
    (D2, 7),
    (D3, 8),
    (7, D1),
    (8, D1),
    (10, 7),
    (10, 8),
    (10, D1),
    (11, 6),
    (9, 12),
    (9, 13),
    (9, D4),
    (12, D4),
    (13, D4),
    (12, 11),
    (13, 11),
];

// Offsets into the clause block order
// [c1, c2, c3, t1, t2, t3, inner1..3, outer1..3, a1..3, b1..3, src1..3].
const C_SLOT: usize = 0;
const C_T: usize = 3;
const C_INNER: usize = 6;
const C_OUTER: usize = 9;
const C_A: usize = 12;
const C_B: usize = 15;
const C_SRC: usize = 18;

/// Arc list of the clause block: three arms, each a source feeding two
/// relays and a sink, with the relays also feeding the arm's outer
/// vertex; each arm's outer->inner pair covers two of the slot vertices.
const CLAUSE_GADGET_ARCS: [(usize, usize); 30] = [
    (C_OUTER, C_INNER),
    (C_OUTER + 1, C_INNER + 1),
    (C_OUTER + 2, C_INNER + 2),
    (C_INNER, C_SLOT + 1),
    (C_INNER, C_SLOT + 2),
    (C_INNER + 1, C_SLOT),
    (C_INNER + 1, C_SLOT + 1),
    (C_INNER + 2, C_SLOT),
    (C_INNER + 2, C_SLOT + 2),
    (C_A, C_OUTER),
    (C_A + 1, C_OUTER + 1),
    (C_A + 2, C_OUTER + 2),
    (C_B, C_OUTER),
    (C_B + 1, C_OUTER + 1),
    (C_B + 2, C_OUTER + 2),
    (C_A, C_T),
    (C_A + 1, C_T + 1),
    (C_A + 2, C_T + 2),
    (C_B, C_T),
    (C_B + 1, C_T + 1),
    (C_B + 2, C_T + 2),
    (C_SRC, C_A),
    (C_SRC + 1, C_A + 1),
    (C_SRC + 2, C_A + 2),
    (C_SRC, C_B),
    (C_SRC + 1, C_B + 1),
    (C_SRC + 2, C_B + 2),
    (C_SRC, C_T),
    (C_SRC + 1, C_T + 1),
    (C_SRC + 2, C_T + 2),
];

fn var_base(i: usize) -> usize {
    14 * (i - 1)
}

fn clause_base(num_vars: usize, j: usize) -> usize {
    14 * num_vars + 21 * (j - 1)
}

fn midpoint(num_vars: usize, num_clauses: usize, j: usize, k: usize) -> usize {
    14 * num_vars + 21 * num_clauses + 3 * (j - 1) + (k - 1)
}

fn literal_vertex(lit: i64) -> usize {
    let i = lit.unsigned_abs() as usize;
    var_base(i) + if lit > 0 { POS } else { NEG }
}

fn check_b2(f: &CnfFormula) -> Result<(), ReductionError> {
    f.check_literals()?;
    for (j, clause) in f.clauses.iter().enumerate() {
        let mut distinct: Vec<i64> = clause.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if clause.len() != 3 || distinct.len() != 3 {
            return Err(ReductionError::ClauseNotTriple {
                clause: j + 1,
                count: distinct.len(),
            });
        }
    }
    let mut counts = BTreeMap::new();
    for clause in &f.clauses {
        for &lit in clause {
            *counts.entry(lit).or_insert(0usize) += 1;
        }
    }
    for i in 1..=f.num_vars as i64 {
        for lit in [i, -i] {
            let count = counts.get(&lit).copied().unwrap_or(0);
            if count != 2 {
                return Err(ReductionError::LiteralNotTwice {
                    literal: lit,
                    count,
                });
            }
        }
    }
    Ok(())
}

/// Builds the acyclic digraph that has a quasi-kernel of size `5m + 4n`
/// exactly when the (3,B2) formula `f` is satisfiable. That target is
/// also the minimum possible size.
pub fn b2sat_to_qk(f: &CnfFormula) -> Result<ReductionOutput, ReductionError> {
    check_b2(f)?;
    let n = f.num_vars;
    let m = f.clauses.len();

    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(19 * n + 36 * m);
    for i in 1..=n {
        let base = var_base(i);
        arcs.extend(VAR_GADGET_ARCS.iter().map(|&(u, v)| (base + u, base + v)));
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        let base = clause_base(n, j + 1);
        arcs.extend(CLAUSE_GADGET_ARCS.iter().map(|&(u, v)| (base + u, base + v)));
        for (k, &lit) in clause.iter().enumerate() {
            let mid = midpoint(n, m, j + 1, k + 1);
            arcs.push((base + C_SLOT + k, mid));
            arcs.push((mid, literal_vertex(lit)));
        }
    }

    let mut labels = BTreeMap::new();
    for i in 1..=n {
        let base = var_base(i);
        labels.insert(format!("x{i}"), base + POS);
        labels.insert(format!("~x{i}"), base + NEG);
        for r in 1..=4 {
            labels.insert(format!("d{i}.{r}"), base + D1 + r - 1);
        }
        for r in 1..=8 {
            labels.insert(format!("x{i}.g{r}"), base + 5 + r);
        }
    }
    for j in 1..=m {
        let base = clause_base(n, j);
        for k in 1..=3 {
            labels.insert(format!("C{j}.{k}"), base + C_SLOT + k - 1);
            labels.insert(format!("C{j}.t{k}"), base + C_T + k - 1);
            labels.insert(format!("C{j}.inner{k}"), base + C_INNER + k - 1);
            labels.insert(format!("C{j}.outer{k}"), base + C_OUTER + k - 1);
            labels.insert(format!("C{j}.a{k}"), base + C_A + k - 1);
            labels.insert(format!("C{j}.b{k}"), base + C_B + k - 1);
            labels.insert(format!("C{j}.src{k}"), base + C_SRC + k - 1);
            labels.insert(format!("M{j}.{k}"), midpoint(n, m, j, k));
        }
    }

    let digraph = Digraph::new(14 * n + 24 * m, arcs).expect("generated arcs are valid");
    let mut params = BTreeMap::new();
    params.insert("num_vars".into(), n as u64);
    params.insert("num_clauses".into(), m as u64);
    params.insert("target_qk_size".into(), (5 * m + 4 * n) as u64);
    Ok(ReductionOutput {
        digraph,
        labels,
        params,
    })
}

/// Turns a satisfying assignment into a quasi-kernel hitting the target
/// size `5m + 4n`: per clause the two slot vertices away from the first
/// satisfied literal plus the three arm sinks, per variable the matching
/// literal vertex and d-vertex plus both block sinks. Verified before
/// returning.
pub fn assignment_to_qk_b2(
    out: &ReductionOutput,
    f: &CnfFormula,
    phi: &[bool],
) -> Result<VertexSet, ReductionError> {
    f.check_satisfying(phi)?;
    let n = f.num_vars;
    let m = f.clauses.len();
    let d = &out.digraph;
    let mut q = VertexSet::empty(d.vertex_count());

    for i in 1..=n {
        let base = var_base(i);
        if phi[i - 1] {
            q.insert(base + POS);
            q.insert(base + D3);
        } else {
            q.insert(base + NEG);
            q.insert(base + D2);
        }
        q.insert(base + D1);
        q.insert(base + D4);
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        let base = clause_base(n, j + 1);
        let satisfied = clause
            .iter()
            .position(|&lit| {
                let value = phi[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
            .expect("assignment satisfies every clause");
        for k in 0..3 {
            if k != satisfied {
                q.insert(base + C_SLOT + k);
            }
            q.insert(base + C_T + k);
        }
    }

    assert_eq!(q.len(), 5 * m + 4 * n);
    assert!(d.is_quasi_kernel(&q), "witness set failed verification");
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Every literal occurs exactly twice; satisfiable (e.g. all true).
    fn b2_formula() -> CnfFormula {
        CnfFormula {
            num_vars: 3,
            clauses: vec![
                vec![1, 2, 3],
                vec![-1, -2, 3],
                vec![1, -2, -3],
                vec![-1, 2, -3],
            ],
        }
    }

    // Transcription checksums: block shape, degrees, sinks, acyclicity.
    #[test]
    fn variable_block_checksum() {
        let d = Digraph::new(14, VAR_GADGET_ARCS).unwrap();
        assert_eq!(d.arc_count(), 19);
        assert!(d.profile().is_acyclic);
        assert_eq!(d.sinks().to_vec(), vec![D1, D4]);
        for v in 0..14 {
            let expected = if v == POS || v == NEG { 1 } else { 3 };
            assert_eq!(d.underlying_neighbors(v).len(), expected, "vertex {v}");
        }
    }

    #[test]
    fn clause_block_checksum() {
        let d = Digraph::new(21, CLAUSE_GADGET_ARCS).unwrap();
        assert_eq!(d.arc_count(), 30);
        assert!(d.profile().is_acyclic);
        // Slot vertices only gain their out-arc (to a midpoint) in the
        // full construction; standalone, they sit next to the arm sinks.
        assert_eq!(d.sinks().to_vec(), vec![0, 1, 2, C_T, C_T + 1, C_T + 2]);
        for v in 0..21 {
            let expected = if v < 3 { 2 } else { 3 };
            assert_eq!(d.underlying_neighbors(v).len(), expected, "vertex {v}");
        }
    }

    #[test]
    fn rejects_malformed_formulas() {
        let wide = CnfFormula {
            num_vars: 2,
            clauses: vec![vec![1, 2]],
        };
        assert_eq!(
            b2sat_to_qk(&wide).unwrap_err(),
            ReductionError::ClauseNotTriple {
                clause: 1,
                count: 2
            }
        );

        let mut unbalanced = b2_formula();
        unbalanced.clauses[3] = vec![-1, 2, 3];
        assert_eq!(
            b2sat_to_qk(&unbalanced).unwrap_err(),
            ReductionError::LiteralNotTwice {
                literal: 3,
                count: 3
            }
        );
    }

    #[test]
    fn size_formulas_and_profile() {
        let out = b2sat_to_qk(&b2_formula()).unwrap();
        assert_eq!(out.digraph.vertex_count(), 14 * 3 + 24 * 4);
        assert_eq!(out.digraph.arc_count(), 19 * 3 + 36 * 4);
        assert_eq!(out.param("target_qk_size"), 5 * 4 + 4 * 3);
        assert!(out.digraph.profile().is_acyclic);
    }

    #[test]
    fn cubic_except_midpoints() {
        let out = b2sat_to_qk(&b2_formula()).unwrap();
        let d = &out.digraph;
        let first_midpoint = 14 * 3 + 21 * 4;
        for v in d.vertices() {
            let expected = if v >= first_midpoint { 2 } else { 3 };
            assert_eq!(d.underlying_neighbors(v).len(), expected, "vertex {v}");
        }
    }

    #[test]
    fn labels_are_a_bijection() {
        let out = b2sat_to_qk(&b2_formula()).unwrap();
        let n = out.digraph.vertex_count();
        assert_eq!(out.labels.len(), n);
        let mut seen = vec![false; n];
        for &v in out.labels.values() {
            assert!(!seen[v]);
            seen[v] = true;
        }
        assert_eq!(out.index("x1"), 0);
        assert_eq!(out.index("~x2"), 15);
        assert_eq!(out.index("d3.4"), 28 + 5);
        assert_eq!(out.index("C1.1"), 42);
        assert_eq!(out.index("C4.src3"), 42 + 21 * 3 + 20);
        assert_eq!(out.index("M1.1"), 42 + 84);
    }

    #[test]
    fn witness_hits_the_target_size() {
        let f = b2_formula();
        let out = b2sat_to_qk(&f).unwrap();
        let q = assignment_to_qk_b2(&out, &f, &[true, true, true]).unwrap();
        assert_eq!(q.len() as u64, out.param("target_qk_size"));
        assert!(out.digraph.sinks().is_subset_of(&q));
    }

    #[test]
    fn witness_follows_the_first_satisfied_literal() {
        let f = b2_formula();
        let out = b2sat_to_qk(&f).unwrap();
        let q = assignment_to_qk_b2(&out, &f, &[true, false, false]).unwrap();
        // Clause 1 = (x1 v x2 v x3) is satisfied by its first slot.
        assert!(!q.contains(out.index("C1.1")));
        assert!(q.contains(out.index("C1.2")));
        assert!(q.contains(out.index("C1.3")));
        // Clause 2 = (~x1 v ~x2 v x3) by its second.
        assert!(q.contains(out.index("C2.1")));
        assert!(!q.contains(out.index("C2.2")));
        assert!(q.contains(out.index("C2.3")));
        // Variable picks follow the assignment.
        assert!(q.contains(out.index("x1")));
        assert!(q.contains(out.index("d1.3")));
        assert!(q.contains(out.index("~x2")));
        assert!(q.contains(out.index("d2.2")));
    }

    #[test]
    fn witness_rejects_a_non_satisfying_assignment() {
        let f = b2_formula();
        let out = b2sat_to_qk(&f).unwrap();
        assert_eq!(
            assignment_to_qk_b2(&out, &f, &[false, false, false]).unwrap_err(),
            ReductionError::NotSatisfying { clause: 1 }
        );
    }
}
