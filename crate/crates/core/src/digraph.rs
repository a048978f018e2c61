//! Digraph data model and the basic decidable predicates: independence,
//! bounded-distance absorption, quasi-kernel and kernel checks, sinks, and a
//! structural profile used by the solvers to pick strategies.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("arc ({u}, {v}) has an endpoint out of range for {n} vertices")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },
}

/// Set of vertices of a digraph with a fixed universe size, stored as a bitmap.
///
/// All members are below `capacity()`; inserting past the capacity is a
/// programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in &mut s.words {
            *w = !0;
        }
        s.clear_tail();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut s = Self::empty(n);
        for v in indices {
            s.insert(v);
        }
        s
    }

    // Bits at positions >= n in the last word must stay zero so that
    // equality, counting, and is_full stay exact.
    fn clear_tail(&mut self) {
        if !self.n.is_multiple_of(64) {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << (self.n % 64)) - 1;
            }
        }
    }

    /// Universe size this set was created for.
    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of range for capacity {}", v, self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of range for capacity {}", v, self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_check(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "vertex sets over different universes ({} vs {})",
            self.n, other.n
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_check(other);
        let mut out = self.clone();
        out.union_in_place(other);
        out
    }

    pub fn union_in_place(&mut self, other: &Self) {
        self.zip_check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_check(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_check(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.n);
        for (a, b) in out.words.iter_mut().zip(&self.words) {
            *a &= !b;
        }
        out
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.zip_check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.zip_check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_size(&self, other: &Self) -> usize {
        self.zip_check(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Structural facts about a digraph, computed once by [`Digraph::profile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigraphProfile {
    pub is_acyclic: bool,
    pub is_sink_free: bool,
    pub max_in_degree: usize,
    pub max_out_degree: usize,
    pub underlying_is_tree: bool,
    pub underlying_is_cubic: bool,
    pub underlying_is_bipartite: bool,
}

/// Immutable directed graph over dense 0-based vertices.
///
/// Digons (both `(u, v)` and `(v, u)`) are allowed and collapse to a single
/// edge in the underlying graph; self-loops are rejected; duplicate arcs are
/// silently deduplicated. The arc list is kept sorted, so emission and
/// neighbor queries are deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            list.push((u, v));
        }
        list.sort_unstable();
        list.dedup();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        Ok(Digraph {
            n,
            arcs: list,
            out_adj,
            in_adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in ascending lexicographic order, deduplicated.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    fn check_set(&self, s: &VertexSet) {
        assert_eq!(
            s.capacity(),
            self.n,
            "vertex set capacity {} does not match digraph order {}",
            s.capacity(),
            self.n
        );
    }

    /// True when some member of `q` is reachable from `v` by a directed path
    /// of length at most two (length zero counts: `v` itself in `q`).
    pub fn dist_at_most_two(&self, v: usize, q: &VertexSet) -> bool {
        assert!(v < self.n, "vertex {} out of range", v);
        self.check_set(q);
        if q.contains(v) {
            return true;
        }
        for &w in &self.out_adj[v] {
            if q.contains(w) {
                return true;
            }
        }
        for &w in &self.out_adj[v] {
            for &x in &self.out_adj[w] {
                if q.contains(x) {
                    return true;
                }
            }
        }
        false
    }

    /// No arc joins two members of `s`, in either direction.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.check_set(s);
        s.iter()
            .all(|v| self.out_adj[v].iter().all(|&w| !s.contains(w)))
    }

    /// Independent set every vertex can reach by a directed path of length
    /// at most two.
    pub fn is_quasi_kernel(&self, q: &VertexSet) -> bool {
        self.is_independent(q) && self.vertices().all(|v| self.dist_at_most_two(v, q))
    }

    /// Independent set every outside vertex has an arc into.
    pub fn is_kernel(&self, k: &VertexSet) -> bool {
        self.check_set(k);
        self.is_independent(k)
            && self
                .vertices()
                .all(|v| k.contains(v) || self.out_adj[v].iter().any(|&w| k.contains(w)))
    }

    /// Vertices with no outgoing arc. Every sink belongs to every quasi-kernel.
    pub fn sinks(&self) -> VertexSet {
        VertexSet::from_indices(
            self.n,
            self.vertices().filter(|&v| self.out_adj[v].is_empty()),
        )
    }

    /// Underlying undirected neighbors (digons collapsed), ascending, no dups.
    pub fn underlying_neighbors(&self, v: usize) -> Vec<usize> {
        let mut nb: Vec<usize> = self.out_adj[v]
            .iter()
            .chain(&self.in_adj[v])
            .copied()
            .collect();
        nb.sort_unstable();
        nb.dedup();
        nb
    }

    /// Edge set of the underlying undirected graph as `(min, max)` pairs.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    pub fn profile(&self) -> DigraphProfile {
        DigraphProfile {
            is_acyclic: self.is_acyclic(),
            is_sink_free: self.vertices().all(|v| !self.out_adj[v].is_empty()),
            max_in_degree: self.vertices().map(|v| self.in_degree(v)).max().unwrap_or(0),
            max_out_degree: self
                .vertices()
                .map(|v| self.out_degree(v))
                .max()
                .unwrap_or(0),
            underlying_is_tree: self.underlying_is_tree(),
            underlying_is_cubic: self.n > 0
                && self.vertices().all(|v| self.underlying_neighbors(v).len() == 3),
            underlying_is_bipartite: self.underlying_is_bipartite(),
        }
    }

    fn is_acyclic(&self) -> bool {
        // Kahn's algorithm; iterative so deep instances cannot overflow the stack.
        let mut indeg: Vec<usize> = self.vertices().map(|v| self.in_degree(v)).collect();
        let mut queue: Vec<usize> = self.vertices().filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &w in &self.out_adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        seen == self.n
    }

    fn underlying_is_tree(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let edges = self.underlying_edges();
        if edges.len() != self.n - 1 {
            return false;
        }
        // n-1 edges and connected together imply acyclicity of the underlying graph.
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.underlying_neighbors(v) {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.is_full()
    }

    fn underlying_is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in self.vertices() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for w in self.underlying_neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            stack.push(w);
                        }
                        Some(cw) => {
                            if cw == cv {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}
