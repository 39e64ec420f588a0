//! Simple graphs, exact tree-depth with elimination-forest witnesses, and the
//! dual graph of a matrix.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Default and hard limit on the number of vertices for exact tree-depth.
pub const TD_VERTEX_LIMIT: usize = 18;

type VSet = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 32, "graphs are limited to 32 vertices");
        Graph { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a] |= 1 << b;
            self.adj[b] |= 1 << a;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|a| (a + 1..n).filter(move |&b| self.has_edge(a, b)).map(move |b| (a, b)))
            .collect()
    }

    /// Connected components of the induced subgraph on `set`, ordered by smallest vertex.
    fn components_of(&self, set: VSet) -> Vec<VSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros();
            let mut comp: VSet = 1 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & set & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }
}

/// Rooted forest given by parent pointers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationForest {
    parent: Vec<Option<usize>>,
}

impl EliminationForest {
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&v| self.parent[v].is_none()).collect()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.parent.len()).filter(|&c| self.parent[c] == Some(v)).collect()
    }

    /// Number of edges from `v` up to its root.
    pub fn level(&self, v: usize) -> usize {
        let mut d = 0;
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            d += 1;
            cur = p;
        }
        d
    }

    /// Edge count of the deepest root-to-leaf path (0 for an empty forest).
    pub fn depth(&self) -> usize {
        (0..self.parent.len()).map(|v| self.level(v)).max().unwrap_or(0)
    }

    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut cur = Some(b);
        while let Some(c) = cur {
            if c == a {
                return true;
            }
            cur = self.parent[c];
        }
        false
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.is_ancestor(a, b) || self.is_ancestor(b, a)
    }

    fn is_acyclic(&self) -> bool {
        let n = self.parent.len();
        (0..n).all(|v| {
            let mut cur = self.parent[v];
            let mut steps = 0;
            while let Some(c) = cur {
                steps += 1;
                if steps > n {
                    return false;
                }
                cur = self.parent[c];
            }
            true
        })
    }

    /// The closure of the forest contains every edge of `g`.
    pub fn is_witness_for(&self, g: &Graph) -> bool {
        self.parent.len() == g.vertex_count()
            && self.is_acyclic()
            && g.edges().iter().all(|&(a, b)| self.comparable(a, b))
    }
}

struct TdSolver<'g> {
    g: &'g Graph,
    memo: HashMap<VSet, u8>,
}

impl TdSolver<'_> {
    fn td(&mut self, set: VSet) -> u8 {
        if set == 0 {
            return 0;
        }
        if set.count_ones() == 1 {
            return 1;
        }
        if let Some(&v) = self.memo.get(&set) {
            return v;
        }
        let comps = self.g.components_of(set);
        let val = if comps.len() > 1 {
            comps.into_iter().map(|c| self.td(c)).max().unwrap_or(0)
        } else {
            // connected with an edge: td >= 2
            let lower = 2;
            let mut best = u8::MAX;
            let mut rest = set;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                best = best.min(1 + self.td(set & !(1 << v)));
                if best <= lower {
                    break;
                }
            }
            best
        };
        self.memo.insert(set, val);
        val
    }

    fn build(&mut self, set: VSet, above: Option<usize>, parent: &mut [Option<usize>]) {
        if set == 0 {
            return;
        }
        let comps = self.g.components_of(set);
        if comps.len() > 1 {
            for c in comps {
                self.build(c, above, parent);
            }
            return;
        }
        let target = self.td(set);
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = set & !(1 << v);
            if 1 + self.td(without) == target {
                parent[v] = above;
                self.build(without, Some(v), parent);
                return;
            }
        }
        unreachable!("some vertex attains the minimum");
    }
}

/// Exact tree-depth with an optimal elimination forest (`depth + 1 = td`).
pub fn tree_depth(g: &Graph) -> Result<(usize, EliminationForest)> {
    tree_depth_with_limit(g, TD_VERTEX_LIMIT)
}

pub fn tree_depth_with_limit(g: &Graph, limit: usize) -> Result<(usize, EliminationForest)> {
    let n = g.vertex_count();
    Error::guard(
        "vertex count for tree-depth",
        limit.min(TD_VERTEX_LIMIT),
        n,
    )?;
    let all: VSet = if n == 32 { VSet::MAX } else { (1 << n) - 1 };
    let mut s = TdSolver {
        g,
        memo: HashMap::new(),
    };
    let value = s.td(all) as usize;
    let mut parent = vec![None; n];
    s.build(all, None, &mut parent);
    Ok((value, EliminationForest { parent }))
}

/// Rows as vertices; two rows adjacent when some column is nonzero in both.
pub fn dual_graph(a: &Matrix) -> Graph {
    let mut g = Graph::new(a.rows());
    for c in 0..a.cols() {
        let support: Vec<usize> = (0..a.rows()).filter(|&r| a.get(r, c) != 0).collect();
        for (i, &x) in support.iter().enumerate() {
            for &y in &support[i + 1..] {
                g.add_edge(x, y);
            }
        }
    }
    g
}

pub fn dual_tree_depth(a: &Matrix) -> Result<usize> {
    Ok(tree_depth(&dual_graph(a))?.0)
}
