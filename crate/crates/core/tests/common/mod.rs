//! Shared fixtures: a from-scratch verification oracle, brute-force
//! searches over bitmask subsets, and seeded random instance builders
//! for the construction families. Nothing here calls into the solvers,
//! so disagreements point at the library.

#![allow(dead_code)]

use std::cmp::Ordering;

use qk_core::reductions::{CnfFormula, SetCoverInstance, UndirectedGraph};
use qk_core::{Digraph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Quasi-kernel check straight from the definition: independent, and
/// every outside vertex reaches the set by one or two arcs.
pub fn is_qk_reference(d: &Digraph, s: &VertexSet) -> bool {
    for &(u, v) in d.arcs() {
        if s.contains(u) && s.contains(v) {
            return false;
        }
    }
    for v in d.vertices() {
        if s.contains(v) {
            continue;
        }
        let mut reached = false;
        'scan: for &w in d.out_neighbors(v) {
            if s.contains(w) {
                reached = true;
                break;
            }
            for &x in d.out_neighbors(w) {
                if s.contains(x) {
                    reached = true;
                    break 'scan;
                }
            }
        }
        if !reached {
            return false;
        }
    }
    true
}

pub fn subset(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Every quasi-kernel as a sorted member list, in mask order.
pub fn all_qks_reference(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    assert!(n <= 20, "brute force is for small instances");
    (0u32..1 << n)
        .filter_map(|mask| {
            let s = subset(n, mask);
            is_qk_reference(d, &s).then(|| s.to_vec())
        })
        .collect()
}

/// Minimum size and the lexicographically least member list of that size.
pub fn min_qk_reference(d: &Digraph) -> (usize, Vec<usize>) {
    all_qks_reference(d)
        .into_iter()
        .map(|q| (q.len(), q))
        .min()
        .expect("every digraph has a quasi-kernel")
}

/// Order produced by a depth-first scan deciding vertices in index order
/// and trying "include" before "exclude": sets containing an earlier
/// vertex come first, and a set precedes its own proper extensions' rivals.
pub fn include_first_order(a: &[usize], b: &[usize]) -> Ordering {
    let mut i = 0;
    loop {
        match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) if x == y => i += 1,
            (Some(x), Some(y)) => return x.cmp(y),
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => return Ordering::Equal,
        }
    }
}

/// CNF with `m` clauses of three sign-flipped distinct variables.
pub fn random_cnf3(num_vars: usize, num_clauses: usize, rng: &mut ChaCha12Rng) -> CnfFormula {
    assert!(num_vars >= 3);
    let mut clauses = Vec::with_capacity(num_clauses);
    for _ in 0..num_clauses {
        let mut vars: Vec<i64> = (1..=num_vars as i64).collect();
        vars.shuffle(rng);
        let clause = vars[..3]
            .iter()
            .map(|&v| if rng.gen::<bool>() { v } else { -v })
            .collect();
        clauses.push(clause);
    }
    CnfFormula { num_vars, clauses }
}

/// Formula in which every literal occurs exactly twice and every clause
/// holds three distinct literals; `num_vars` must be divisible by 3.
pub fn random_b2(num_vars: usize, rng: &mut ChaCha12Rng) -> CnfFormula {
    assert_eq!(num_vars % 3, 0);
    'redraw: loop {
        let mut slots: Vec<i64> = (1..=num_vars as i64).flat_map(|i| [i, i, -i, -i]).collect();
        slots.shuffle(rng);
        for chunk in slots.chunks(3) {
            let mut d = chunk.to_vec();
            d.sort_unstable();
            d.dedup();
            if d.len() != 3 {
                continue 'redraw;
            }
        }
        return CnfFormula {
            num_vars,
            clauses: slots.chunks(3).map(|c| c.to_vec()).collect(),
        };
    }
}

pub fn brute_force_satisfying(f: &CnfFormula) -> Option<Vec<bool>> {
    assert!(f.num_vars <= 20);
    (0u32..1 << f.num_vars).find_map(|mask| {
        let phi: Vec<bool> = (0..f.num_vars).map(|i| mask >> i & 1 == 1).collect();
        f.evaluate(&phi).then_some(phi)
    })
}

/// Properly colored random graph with no isolated vertex: colors are
/// dealt round-robin, then every vertex gets at least one cross-color
/// edge plus some extras.
pub fn random_three_colorable(n: usize, rng: &mut ChaCha12Rng) -> (UndirectedGraph, Vec<u8>) {
    assert!(n >= 3);
    let mut colors: Vec<u8> = (0..n).map(|v| (v % 3) as u8).collect();
    colors.shuffle(rng);
    let mut edges = Vec::new();
    for u in 0..n {
        let others: Vec<usize> = (0..n).filter(|&v| colors[v] != colors[u]).collect();
        let &partner = others.choose(rng).expect("three color classes exist");
        edges.push((u, partner));
    }
    for u in 0..n {
        for v in u + 1..n {
            if colors[u] != colors[v] && rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    (UndirectedGraph::new(n, edges), colors)
}

pub fn is_three_colorable(g: &UndirectedGraph) -> bool {
    let n = g.vertex_count();
    let mut coloring = vec![0u8; n];
    'outer: for mut code in 0..3u32.pow(n as u32) {
        for c in coloring.iter_mut() {
            *c = (code % 3) as u8;
            code /= 3;
        }
        for &(u, v) in g.edges() {
            if coloring[u] == coloring[v] {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

/// Instance whose universe is fully covered: each element joins a random
/// nonempty selection of the sets.
pub fn random_set_cover(
    universe_size: usize,
    num_sets: usize,
    budget: usize,
    rng: &mut ChaCha12Rng,
) -> SetCoverInstance {
    let mut family = vec![Vec::new(); num_sets];
    for e in 0..universe_size {
        let forced = rng.gen_range(0..num_sets);
        for (j, set) in family.iter_mut().enumerate() {
            if j == forced || rng.gen_bool(0.25) {
                set.push(e);
            }
        }
    }
    SetCoverInstance {
        universe_size,
        family,
        budget,
    }
}

pub fn min_cover_size(inst: &SetCoverInstance) -> usize {
    let m = inst.family.len();
    assert!(m <= 20);
    (0u32..1 << m)
        .filter(|mask| {
            (0..inst.universe_size).all(|e| {
                (0..m).any(|j| mask >> j & 1 == 1 && inst.family[j].contains(&e))
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("the whole family is a cover")
}

/// Greedy cover by largest remaining coverage; valid on any coverable
/// instance.
pub fn greedy_cover(inst: &SetCoverInstance) -> Vec<usize> {
    let mut uncovered: Vec<usize> = (0..inst.universe_size).collect();
    let mut cover = Vec::new();
    while !uncovered.is_empty() {
        let best = (0..inst.family.len())
            .max_by_key(|&j| inst.family[j].iter().filter(|e| uncovered.contains(e)).count())
            .expect("family is nonempty");
        assert!(inst.family[best].iter().any(|e| uncovered.contains(e)));
        cover.push(best);
        uncovered.retain(|e| !inst.family[best].contains(e));
    }
    cover.sort_unstable();
    cover
}

/// Configuration-model cubic graph: pair up three stubs per vertex,
/// redraw on loops or repeated edges. `n` must be even and at least 4.
pub fn random_cubic(n: usize, rng: &mut ChaCha12Rng) -> UndirectedGraph {
    assert!(n >= 4 && n.is_multiple_of(2));
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * n / 2);
        let mut simple = true;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                simple = false;
                break;
            }
            edges.push((u, v));
        }
        if simple {
            return UndirectedGraph::new(n, edges);
        }
    }
}

pub fn is_vertex_cover(g: &UndirectedGraph, cover: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| cover.contains(&u) || cover.contains(&v))
}

/// All minimal vertex covers, as sorted member lists.
pub fn minimal_vertex_covers(g: &UndirectedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter_map(|mask| {
            let cover: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !is_vertex_cover(g, &cover) {
                return None;
            }
            let minimal = cover.iter().all(|&v| {
                let pruned: Vec<usize> = cover.iter().copied().filter(|&u| u != v).collect();
                !is_vertex_cover(g, &pruned)
            });
            minimal.then_some(cover)
        })
        .collect()
}

pub fn k4() -> UndirectedGraph {
    UndirectedGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn petersen() -> UndirectedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, 5 + (i + 2) % 5));
    }
    UndirectedGraph::new(10, edges)
}
