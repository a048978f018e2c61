//! Hardness constructions: deterministic translations of classical
//! decision problems into quasi-kernel questions on digraphs.
//!
//! Each generator returns a [`ReductionOutput`] bundling the digraph with
//! a label map (structured vertex names, gadget id plus local role, e.g.
//! `"D3.t"` or `"C2.k5"`) and the numeric parameters its size guarantees
//! are stated in. Forward witness maps turn a certificate for the source
//! problem into quasi-kernels and verify them before returning; where an
//! extraction procedure exists, a backward map recovers a source
//! certificate from a quasi-kernel.
//!
//! Gadgets indexed by CNF variables or clauses count from 1, matching
//! DIMACS literal numbering; gadgets indexed by graph vertices, edges, or
//! set-cover members count from 0, matching the file formats.

mod b2sat;
mod coloring_three_qk;
mod gutin;
mod sat_two_qk;
mod set_cover;
mod vertex_cover;

pub use b2sat::{assignment_to_qk_b2, b2sat_to_qk};
pub use coloring_three_qk::{
    coloring_to_qk_triple, coloring_to_three_disjoint_qk, qk_triple_to_coloring,
};
pub use gutin::{gutin_gadget, gutin_labels};
pub use sat_two_qk::{assignment_to_qk_pair, sat_to_two_disjoint_qk};
pub use set_cover::{cover_to_qk, qk_to_cover, setcover_to_qk};
pub use vertex_cover::{normalize_qk_to_vc, vc_set_to_qk, vc_to_qk};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::digraph::Digraph;

/// Why a construction or a witness mapping rejected its input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("clause {clause}: literal {literal} is outside ±1..=±{num_vars}")]
    LiteralOutOfRange {
        clause: usize,
        literal: i64,
        num_vars: usize,
    },
    #[error("clause {clause} has {count} distinct literals, expected at most 3")]
    ClauseTooWide { clause: usize, count: usize },
    #[error("clause {clause} has {count} distinct literals, expected exactly 3")]
    ClauseNotTriple { clause: usize, count: usize },
    #[error("literal {literal} occurs {count} times, expected exactly 2")]
    LiteralNotTwice { literal: i64, count: usize },
    #[error("assignment covers {got} variables, the formula has {expected}")]
    AssignmentLength { expected: usize, got: usize },
    #[error("assignment leaves clause {clause} unsatisfied")]
    NotSatisfying { clause: usize },
    #[error("vertex {v} is isolated")]
    IsolatedVertex { v: usize },
    #[error("vertex {v} has degree {degree}, the input must be 3-regular")]
    NotCubic { v: usize, degree: usize },
    #[error("coloring covers {got} vertices, the graph has {expected}")]
    ColoringLength { expected: usize, got: usize },
    #[error("vertex {v} has color {color}, expected 0, 1, or 2")]
    ColorOutOfRange { v: usize, color: u8 },
    #[error("adjacent vertices {u} and {v} share a color")]
    ImproperColoring { u: usize, v: usize },
    #[error("set {set}: element {element} is outside the universe 0..{universe_size}")]
    ElementOutOfRange {
        set: usize,
        element: usize,
        universe_size: usize,
    },
    #[error("element {element} is not covered by any set")]
    UncoveredElement { element: usize },
    #[error("set index {index} is outside 0..{num_sets}")]
    SetIndexOutOfRange { index: usize, num_sets: usize },
    #[error("chosen sets miss element {element}")]
    NotACover { element: usize },
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge {{{u}, {v}}} has no endpoint in the claimed cover")]
    NotAVertexCover { u: usize, v: usize },
    #[error("the given set is not a quasi-kernel of this digraph")]
    NotAQuasiKernel,
    #[error("the given quasi-kernels are not pairwise disjoint")]
    NotDisjoint,
}

/// Truth value per variable, indexed by variable number minus one.
pub type Assignment = Vec<bool>;

/// CNF formula over variables `1..=num_vars`. A literal is a signed
/// variable number, never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    /// Rejects zero literals and literals whose variable is out of range.
    pub fn check_literals(&self) -> Result<(), ReductionError> {
        for (j, clause) in self.clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > self.num_vars {
                    return Err(ReductionError::LiteralOutOfRange {
                        clause: j + 1,
                        literal: lit,
                        num_vars: self.num_vars,
                    });
                }
            }
        }
        Ok(())
    }

    /// True when `phi` makes every clause true. `phi[i]` is the value of
    /// variable `i + 1` and must cover all variables.
    pub fn evaluate(&self, phi: &[bool]) -> bool {
        assert_eq!(phi.len(), self.num_vars);
        self.clauses.iter().all(|c| clause_satisfied(c, phi))
    }

    pub(crate) fn check_satisfying(&self, phi: &[bool]) -> Result<(), ReductionError> {
        if phi.len() != self.num_vars {
            return Err(ReductionError::AssignmentLength {
                expected: self.num_vars,
                got: phi.len(),
            });
        }
        for (j, clause) in self.clauses.iter().enumerate() {
            if !clause_satisfied(clause, phi) {
                return Err(ReductionError::NotSatisfying { clause: j + 1 });
            }
        }
        Ok(())
    }
}

fn clause_satisfied(clause: &[i64], phi: &[bool]) -> bool {
    clause.iter().any(|&lit| {
        let value = phi[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            value
        } else {
            !value
        }
    })
}

/// Simple undirected graph on vertices `0..n`. Edges are stored with the
/// smaller endpoint first, sorted, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// Panics on a self-loop or an endpoint outside `0..n`.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut normalized: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} vertices");
                assert!(u != v, "self-loop at vertex {u}");
                (u.min(v), u.max(v))
            })
            .collect();
        normalized.sort_unstable();
        normalized.dedup();
        UndirectedGraph { n, edges: normalized }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

/// Set-cover instance: `family` over the universe `0..universe_size`,
/// asking for a cover of at most `budget` sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub family: Vec<Vec<usize>>,
    pub budget: usize,
}

impl SetCoverInstance {
    /// Rejects out-of-range elements and elements no set covers.
    pub fn check(&self) -> Result<(), ReductionError> {
        let mut covered = vec![false; self.universe_size];
        for (j, set) in self.family.iter().enumerate() {
            for &e in set {
                if e >= self.universe_size {
                    return Err(ReductionError::ElementOutOfRange {
                        set: j,
                        element: e,
                        universe_size: self.universe_size,
                    });
                }
                covered[e] = true;
            }
        }
        match covered.iter().position(|&c| !c) {
            Some(e) => Err(ReductionError::UncoveredElement { element: e }),
            None => Ok(()),
        }
    }
}

/// A generated instance: the digraph, a name for every vertex, and the
/// numbers its guarantees are stated in.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub digraph: Digraph,
    pub labels: BTreeMap<String, usize>,
    pub params: BTreeMap<String, u64>,
}

impl ReductionOutput {
    /// Looks up a labelled vertex. Panics on an unknown name: label
    /// strings come from the generator itself, so a miss is a bug in the
    /// caller, not bad data.
    pub fn index(&self, name: &str) -> usize {
        match self.labels.get(name) {
            Some(&v) => v,
            None => panic!("no vertex labelled `{name}`"),
        }
    }

    /// Reads a named parameter; panics on an unknown key.
    pub fn param(&self, key: &str) -> u64 {
        match self.params.get(key) {
            Some(&v) => v,
            None => panic!("no parameter `{key}`"),
        }
    }
}
