//! Deterministic instance builders shared by the benchmark harness. Every
//! builder is a pure function of its arguments, so repeated benchmark runs
//! measure the same inputs.

use qk_core::conjecture::{generate, GeneratorConfig, GeneratorKind};
use qk_core::reductions::CnfFormula;
use qk_core::Digraph;

/// Directed path `0 -> 1 -> ... -> n-1`.
pub fn directed_path(n: usize) -> Digraph {
    Digraph::new(n, (1..n).map(|v| (v - 1, v))).expect("consecutive indices stay in range")
}

/// Seeded random orientation of a random labelled tree on `n` vertices.
pub fn tree_orientation(n: usize, seed: u64) -> Digraph {
    generate(&GeneratorConfig {
        kind: GeneratorKind::TreeOrientation,
        n,
        p: 0.0,
        seed,
        sink_free_filter: false,
    })
    .expect("tree generation is total for n >= 1")
}

/// Seeded sparse random digraph with arc probability `p`.
pub fn sparse_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    generate(&GeneratorConfig {
        kind: GeneratorKind::RandomDigraph,
        n,
        p,
        seed,
        sink_free_filter: false,
    })
    .expect("probability is validated by the caller")
}

/// Formula in which every literal of every variable appears exactly twice:
/// variables come in blocks of three sharing four clauses. `blocks` of them
/// give `3 * blocks` variables and `4 * blocks` clauses.
pub fn twice_per_literal_formula(blocks: usize) -> CnfFormula {
    let mut clauses = Vec::with_capacity(4 * blocks);
    for b in 0..blocks {
        let x = (3 * b + 1) as i64;
        let (y, z) = (x + 1, x + 2);
        clauses.push(vec![x, y, z]);
        clauses.push(vec![-x, -y, z]);
        clauses.push(vec![x, -y, -z]);
        clauses.push(vec![-x, y, -z]);
    }
    CnfFormula {
        num_vars: 3 * blocks,
        clauses,
    }
}

/// Formula of `m` three-literal clauses over `n` variables, cycling through
/// variables with alternating signs.
pub fn three_cnf(n: usize, m: usize) -> CnfFormula {
    assert!(n >= 3);
    let clauses = (0..m)
        .map(|j| {
            (0..3)
                .map(|i| {
                    let var = ((j + i * (j / n + 1)) % n + 1) as i64;
                    if (j + i) % 2 == 0 {
                        var
                    } else {
                        -var
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula {
        num_vars: n,
        clauses,
    }
}
