//! Exact minimum quasi-kernel on orientations of trees, in linear time.
//!
//! Rooting the tree turns the problem into a four-table dynamic program over
//! subtrees. For a vertex v with subtree T_v the tables are
//!
//! * `pi0(v)`: minimum size over quasi-kernel-like sets of T_v with v inside,
//! * `pi1(v)`: same with v at directed distance exactly one from the set,
//! * `pi2(v)`: same with v at distance exactly two,
//! * `rho(v)`: minimum when v itself is allowed to stay unabsorbed (its
//!   absorption will be provided above v, through an arc v -> parent).
//!
//! "Quasi-kernel-like" means independent and absorbing every vertex of T_v
//! except where the table says otherwise. Neighborhoods in the recurrences
//! range over children only; the parent side is accounted for by which table
//! the parent consults. Costs saturate at an infinity value so impossible
//! states stay impossible under addition.
//!
//! Everything is iterative (reverse breadth-first order for the tables, an
//! explicit stack for the witness), so hundred-thousand-vertex paths do not
//! overflow the call stack.

use thiserror::Error;

use crate::digraph::{Digraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeDpError {
    #[error("digraph is not an orientation of a tree")]
    NotATree,
    #[error("root {root} out of range for {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
}

/// Subtree cost that saturates at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cost {
    Finite(u64),
    Infinite,
}

impl Cost {
    pub fn is_finite(self) -> bool {
        matches!(self, Cost::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Cost::Finite(x) => Some(x),
            Cost::Infinite => None,
        }
    }

    fn add(self, other: Cost) -> Cost {
        match (self, other) {
            (Cost::Finite(a), Cost::Finite(b)) => Cost::Finite(a + b),
            _ => Cost::Infinite,
        }
    }
}

/// Running sum of costs that remembers how many infinite terms it holds, so
/// single terms can be subtracted back out exactly.
#[derive(Debug, Clone, Copy, Default)]
struct CostSum {
    finite: u64,
    infinite: usize,
}

impl CostSum {
    fn add(&mut self, c: Cost) {
        match c {
            Cost::Finite(x) => self.finite += x,
            Cost::Infinite => self.infinite += 1,
        }
    }

    fn without(mut self, c: Cost) -> Cost {
        match c {
            Cost::Finite(x) => self.finite -= x,
            Cost::Infinite => self.infinite -= 1,
        }
        self.total()
    }

    fn total(self) -> Cost {
        if self.infinite == 0 {
            Cost::Finite(self.finite)
        } else {
            Cost::Infinite
        }
    }
}

/// The filled tables of the tree dynamic program, rooted at `root`.
#[derive(Debug, Clone)]
pub struct TreeDpTable {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    /// Children split by arc direction relative to the parent edge:
    /// `in_children[v]` hold arcs child -> v, `out_children[v]` arcs v -> child.
    pub in_children: Vec<Vec<usize>>,
    pub out_children: Vec<Vec<usize>>,
    pub pi0: Vec<Cost>,
    pub pi1: Vec<Cost>,
    pub pi2: Vec<Cost>,
    pub rho: Vec<Cost>,
}

impl TreeDpTable {
    /// Best over the three absorbed states; finite on every vertex because
    /// each subtree has a quasi-kernel.
    pub fn best(&self, v: usize) -> Cost {
        self.pi0[v].min(self.pi1[v]).min(self.pi2[v])
    }
}

fn check_tree(t: &Digraph) -> Result<(), TreeDpError> {
    // An orientation of a tree has exactly n-1 arcs; together with the
    // underlying shape being a tree this also rules out digons.
    if !t.profile().underlying_is_tree || t.arc_count() != t.vertex_count() - 1 {
        return Err(TreeDpError::NotATree);
    }
    Ok(())
}

/// Fills the four tables bottom-up from `root`.
pub fn tree_dp_tables(t: &Digraph, root: usize) -> Result<TreeDpTable, TreeDpError> {
    let n = t.vertex_count();
    if root >= n {
        return Err(TreeDpError::RootOutOfRange { root, n });
    }
    check_tree(t)?;

    let mut parent = vec![None; n];
    let mut bfs = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    bfs.push(root);
    let mut head = 0;
    while head < bfs.len() {
        let v = bfs[head];
        head += 1;
        for w in t.underlying_neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                bfs.push(w);
            }
        }
    }

    let mut in_children = vec![Vec::new(); n];
    let mut out_children = vec![Vec::new(); n];
    for v in t.vertices() {
        if let Some(p) = parent[v] {
            if t.has_arc(v, p) {
                in_children[p].push(v);
            } else {
                out_children[p].push(v);
            }
        }
    }

    let mut pi0 = vec![Cost::Infinite; n];
    let mut pi1 = vec![Cost::Infinite; n];
    let mut pi2 = vec![Cost::Infinite; n];
    let mut rho = vec![Cost::Infinite; n];
    // Per-vertex minima over the pi tables, final once the vertex is
    // processed; reverse BFS order finalizes children before parents.
    let mut best = vec![Cost::Infinite; n];
    let mut best12 = vec![Cost::Infinite; n];

    for &v in bfs.iter().rev() {
        // v in the set: in-children are absorbed through v; their own
        // in-children get absorbed along the two-arc path through them, so
        // they only owe rho; out-children of v may not join the set.
        let mut v0 = Cost::Finite(1);
        for &u in &in_children[v] {
            let mut inner = Cost::Finite(0);
            for &tt in &in_children[u] {
                inner = inner.add(rho[tt]);
            }
            for &tp in &out_children[u] {
                inner = inner.add(best[tp]);
            }
            v0 = v0.add(inner);
        }
        for &w in &out_children[v] {
            v0 = v0.add(best12[w]);
        }
        pi0[v] = v0;

        // v at distance one: some out-child w carries the set vertex, so w
        // pays pi0; in-children of v are absorbed through v -> w and owe rho.
        let mut base1 = Cost::Finite(0);
        for &u in &in_children[v] {
            base1 = base1.add(rho[u]);
        }
        let mut sum_best = CostSum::default();
        for &w in &out_children[v] {
            sum_best.add(best[w]);
        }
        let mut v1 = Cost::Infinite;
        for &w in &out_children[v] {
            let cand = base1.add(pi0[w]).add(sum_best.without(best[w]));
            v1 = v1.min(cand);
        }
        pi1[v] = v1;

        // v at distance exactly two: the two-arc path leaves through an
        // out-child w at distance one; no out-child may be in the set, and
        // in-children cannot route through v, so they must self-absorb.
        let mut base2 = Cost::Finite(0);
        for &u in &in_children[v] {
            base2 = base2.add(best[u]);
        }
        let mut sum_best12 = CostSum::default();
        for &w in &out_children[v] {
            sum_best12.add(best12[w]);
        }
        let mut v2 = Cost::Infinite;
        for &w in &out_children[v] {
            let cand = base2.add(pi1[w]).add(sum_best12.without(best12[w]));
            v2 = v2.min(cand);
        }
        pi2[v] = v2;

        // v left unabsorbed for the parent to handle: out-children may not be
        // in the set (their absorption of v would land in pi1/pi2) and must
        // not rely on v, leaving them pi2; in-children self-absorb.
        let mut unabsorbed = base2;
        for &w in &out_children[v] {
            unabsorbed = unabsorbed.add(pi2[w]);
        }
        best12[v] = pi1[v].min(pi2[v]);
        best[v] = pi0[v].min(best12[v]);
        rho[v] = best[v].min(unabsorbed);
    }

    Ok(TreeDpTable {
        root,
        parent,
        in_children,
        out_children,
        pi0,
        pi1,
        pi2,
        rho,
    })
}

// States of the witness replay. Best* pick the cheapest table with the lower
// table preferred on ties; Absorbed marks a vertex handled by its parent's
// membership; Unabsorbed is rho's fourth option (only ever reached below an
// Absorbed ancestor that covers it).
#[derive(Clone, Copy)]
enum Replay {
    Pi0,
    Pi1,
    Pi2,
    Rho,
    Absorbed,
    Unabsorbed,
    Best012,
    Best12,
}

/// Minimum quasi-kernel of a tree orientation: size plus a witness.
pub fn min_qk_tree(t: &Digraph) -> Result<(usize, VertexSet), TreeDpError> {
    let n = t.vertex_count();
    if n == 0 {
        check_tree(t)?;
        unreachable!("zero-vertex digraphs have no tree shape");
    }
    let tab = tree_dp_tables(t, 0)?;
    let size = tab
        .best(tab.root)
        .finite()
        .expect("every tree orientation has a quasi-kernel") as usize;

    let mut q = VertexSet::empty(n);
    let mut stack = vec![(tab.root, Replay::Best012)];
    while let Some((v, state)) = stack.pop() {
        match state {
            Replay::Best012 => {
                let next = if tab.pi0[v] <= tab.pi1[v] && tab.pi0[v] <= tab.pi2[v] {
                    Replay::Pi0
                } else if tab.pi1[v] <= tab.pi2[v] {
                    Replay::Pi1
                } else {
                    Replay::Pi2
                };
                stack.push((v, next));
            }
            Replay::Best12 => {
                let next = if tab.pi1[v] <= tab.pi2[v] {
                    Replay::Pi1
                } else {
                    Replay::Pi2
                };
                stack.push((v, next));
            }
            Replay::Rho => {
                let mut unabsorbed = Cost::Finite(0);
                for &u in &tab.in_children[v] {
                    unabsorbed = unabsorbed.add(tab.best(u));
                }
                for &w in &tab.out_children[v] {
                    unabsorbed = unabsorbed.add(tab.pi2[w]);
                }
                let next = if tab.pi0[v] <= tab.rho[v] {
                    Replay::Pi0
                } else if tab.pi1[v] <= tab.rho[v] {
                    Replay::Pi1
                } else if tab.pi2[v] <= tab.rho[v] {
                    Replay::Pi2
                } else {
                    debug_assert_eq!(unabsorbed, tab.rho[v]);
                    Replay::Unabsorbed
                };
                stack.push((v, next));
            }
            Replay::Pi0 => {
                q.insert(v);
                for &u in &tab.in_children[v] {
                    stack.push((u, Replay::Absorbed));
                }
                for &w in &tab.out_children[v] {
                    stack.push((w, Replay::Best12));
                }
            }
            Replay::Absorbed => {
                for &tt in &tab.in_children[v] {
                    stack.push((tt, Replay::Rho));
                }
                for &tp in &tab.out_children[v] {
                    stack.push((tp, Replay::Best012));
                }
            }
            Replay::Unabsorbed => {
                for &u in &tab.in_children[v] {
                    stack.push((u, Replay::Best012));
                }
                for &w in &tab.out_children[v] {
                    stack.push((w, Replay::Pi2));
                }
            }
            Replay::Pi1 => {
                // The matched value must carry the in-children term: pi1[v]
                // includes it, so a candidate without it never lines up.
                let mut in_term = Cost::Finite(0);
                for &u in &tab.in_children[v] {
                    stack.push((u, Replay::Rho));
                    in_term = in_term.add(tab.rho[u]);
                }
                let mut sum_best = CostSum::default();
                for &w in &tab.out_children[v] {
                    sum_best.add(tab.best(w));
                }
                let mut pick = None;
                for &w in &tab.out_children[v] {
                    let cand = in_term.add(tab.pi0[w]).add(sum_best.without(tab.best(w)));
                    if cand == tab.pi1[v] {
                        pick = Some(w);
                        break;
                    }
                }
                let w0 = pick.expect("a finite pi1 names an out-child");
                stack.push((w0, Replay::Pi0));
                for &w in &tab.out_children[v] {
                    if w != w0 {
                        stack.push((w, Replay::Best012));
                    }
                }
            }
            Replay::Pi2 => {
                let mut in_term = Cost::Finite(0);
                for &u in &tab.in_children[v] {
                    stack.push((u, Replay::Best012));
                    in_term = in_term.add(tab.best(u));
                }
                let mut sum_best12 = CostSum::default();
                for &w in &tab.out_children[v] {
                    sum_best12.add(tab.pi1[w].min(tab.pi2[w]));
                }
                let mut pick = None;
                for &w in &tab.out_children[v] {
                    let cand = in_term
                        .add(tab.pi1[w])
                        .add(sum_best12.without(tab.pi1[w].min(tab.pi2[w])));
                    if cand == tab.pi2[v] {
                        pick = Some(w);
                        break;
                    }
                }
                let w0 = pick.expect("a finite pi2 names an out-child");
                stack.push((w0, Replay::Pi1));
                for &w in &tab.out_children[v] {
                    if w != w0 {
                        stack.push((w, Replay::Best12));
                    }
                }
            }
        }
    }

    assert!(
        t.is_quasi_kernel(&q) && q.len() == size,
        "table replay disagreed with the table value: size {} vs set {:?}",
        size,
        q
    );
    Ok((size, q))
}
