//! Matrices of bounded dual tree-depth encoded as labelled rooted trees.
//!
//! Rows are internal nodes labelled `R`, columns are leaves labelled `C`, and a
//! column leaf at distance `k` from the root carries one entry label `(i, α)`
//! for every `i < k`. Entry `(r, c)` of the decoded matrix is `α` from the
//! label of `c` at level `dist(r)` when `r` is an ancestor of `c`, and 0
//! otherwise. Level 0 is the root, which is never a row; encoders write
//! `(0, 0)` there.
//!
//! Rows and columns of the decoded matrix are ordered by node id.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{dual_graph, tree_depth};
use crate::linalg::Matrix;

pub type NodeId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeLabel {
    Row,
    Column,
    Entry { level: usize, value: u8 },
}

impl fmt::Display for TreeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeLabel::Row => f.write_str("R"),
            TreeLabel::Column => f.write_str("C"),
            TreeLabel::Entry { level, value } => write!(f, "{level}:{value}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub parent: Option<NodeId>,
    pub labels: Vec<TreeLabel>,
}

impl TreeNode {
    pub fn is_row(&self) -> bool {
        self.labels.contains(&TreeLabel::Row)
    }

    pub fn is_column(&self) -> bool {
        self.labels.contains(&TreeLabel::Column)
    }

    fn entry(&self, level: usize) -> Option<u8> {
        self.labels.iter().find_map(|l| match *l {
            TreeLabel::Entry { level: i, value } if i == level => Some(value),
            _ => None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTree {
    field: Field,
    nodes: BTreeMap<NodeId, TreeNode>,
}

impl MatrixTree {
    /// Builds and validates a tree.
    pub fn new(field: Field, nodes: BTreeMap<NodeId, TreeNode>) -> Result<Self> {
        let t = MatrixTree { field, nodes };
        t.validate()?;
        Ok(t)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nodes(&self) -> &BTreeMap<NodeId, TreeNode> {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> Option<&TreeNode> {
        self.nodes.get(&id)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> NodeId {
        *self
            .nodes
            .iter()
            .find(|(_, n)| n.parent.is_none())
            .expect("validated trees have a root")
            .0
    }

    pub fn children(&self, id: NodeId) -> Vec<NodeId> {
        self.nodes
            .iter()
            .filter(|(_, n)| n.parent == Some(id))
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn distance(&self, id: NodeId) -> usize {
        let mut d = 0;
        let mut cur = id;
        while let Some(p) = self.nodes[&cur].parent {
            d += 1;
            cur = p;
        }
        d
    }

    /// Largest root distance of any node.
    pub fn depth(&self) -> usize {
        self.nodes.keys().map(|&id| self.distance(id)).max().unwrap_or(0)
    }

    pub fn is_ancestor(&self, a: NodeId, b: NodeId) -> bool {
        let mut cur = Some(b);
        while let Some(c) = cur {
            if c == a {
                return true;
            }
            cur = self.nodes[&c].parent;
        }
        false
    }

    /// `v` together with all its descendants.
    pub fn subtree(&self, v: NodeId) -> Result<BTreeSet<NodeId>> {
        if !self.nodes.contains_key(&v) {
            return Err(Error::input(format!("unknown node {v}")));
        }
        Ok(self
            .nodes
            .keys()
            .copied()
            .filter(|&id| self.is_ancestor(v, id))
            .collect())
    }

    pub fn row_nodes(&self) -> Vec<NodeId> {
        self.nodes.iter().filter(|(_, n)| n.is_row()).map(|(&i, _)| i).collect()
    }

    pub fn column_nodes(&self) -> Vec<NodeId> {
        self.nodes.iter().filter(|(_, n)| n.is_column()).map(|(&i, _)| i).collect()
    }

    /// Checks the structural invariants, naming the first offending node.
    pub fn validate(&self) -> Result<()> {
        let bad = |id: NodeId, why: &str| Error::input(format!("node {id}: {why}"));
        let roots: Vec<NodeId> = self
            .nodes
            .iter()
            .filter(|(_, n)| n.parent.is_none())
            .map(|(&i, _)| i)
            .collect();
        match roots.len() {
            0 => return Err(Error::input("tree has no root")),
            1 => {}
            _ => return Err(bad(roots[1], "second root")),
        }
        for (&id, node) in &self.nodes {
            if let Some(p) = node.parent {
                if !self.nodes.contains_key(&p) {
                    return Err(bad(id, &format!("parent {p} does not exist")));
                }
            }
            // parent chain must reach the root without revisiting
            let mut cur = node.parent;
            let mut steps = 0;
            while let Some(c) = cur {
                steps += 1;
                if steps > self.nodes.len() {
                    return Err(bad(id, "lies on a cycle"));
                }
                cur = self.nodes[&c].parent;
            }
        }
        for (&id, node) in &self.nodes {
            let mut seen = BTreeSet::new();
            for l in &node.labels {
                if !seen.insert(*l) {
                    return Err(bad(id, &format!("duplicate label {l}")));
                }
                if let TreeLabel::Entry { value, .. } = l {
                    if *value >= self.field.p() {
                        return Err(bad(id, &format!("entry {value} not reduced modulo {}", self.field.p())));
                    }
                }
            }
            let entries: Vec<usize> = node
                .labels
                .iter()
                .filter_map(|l| match l {
                    TreeLabel::Entry { level, .. } => Some(*level),
                    _ => None,
                })
                .collect();
            if node.parent.is_none() {
                if !node.labels.is_empty() {
                    return Err(bad(id, "the root carries labels"));
                }
                continue;
            }
            match (node.is_row(), node.is_column()) {
                (true, true) => return Err(bad(id, "labelled both R and C")),
                (false, false) => return Err(bad(id, "non-root node without R or C")),
                (true, false) => {
                    if !entries.is_empty() {
                        return Err(bad(id, "row node carries entry labels"));
                    }
                }
                (false, true) => {
                    if self.nodes.values().any(|n| n.parent == Some(id)) {
                        return Err(bad(id, "column node is not a leaf"));
                    }
                    let k = self.distance(id);
                    let levels: BTreeSet<usize> = entries.iter().copied().collect();
                    if levels.len() != entries.len() {
                        return Err(bad(id, "two values for one level"));
                    }
                    if levels != (0..k).collect() {
                        return Err(bad(id, &format!("needs exactly one entry label for each level below {k}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Validates and checks that the depth is at most `bound`.
    pub fn validate_depth(&self, bound: usize) -> Result<()> {
        self.validate()?;
        let d = self.depth();
        if d > bound {
            return Err(Error::input(format!("tree depth {d} exceeds the bound {bound}")));
        }
        Ok(())
    }

    pub fn decode(&self) -> Result<Matrix> {
        self.validate()?;
        let rows = self.row_nodes();
        let cols = self.column_nodes();
        let mut a = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            let level = self.distance(r);
            for (j, &c) in cols.iter().enumerate() {
                if self.is_ancestor(r, c) {
                    let v = self.nodes[&c].entry(level).expect("validated column labels");
                    a.set(i, j, v);
                }
            }
        }
        Ok(a)
    }

    /// Encodes `a` along an optimal elimination forest of its dual graph.
    ///
    /// Node ids: root 0, row `i` is `i + 1`, column `j` is `h + 1 + j`.
    pub fn encode(a: &Matrix) -> Result<MatrixTree> {
        let h = a.rows();
        let (_, forest) = tree_depth(&dual_graph(a))?;
        let row_id = |r: usize| (r + 1) as NodeId;
        let mut nodes = BTreeMap::new();
        nodes.insert(
            0,
            TreeNode {
                parent: None,
                labels: vec![],
            },
        );
        for r in 0..h {
            nodes.insert(
                row_id(r),
                TreeNode {
                    parent: Some(forest.parent(r).map_or(0, row_id)),
                    labels: vec![TreeLabel::Row],
                },
            );
        }
        for c in 0..a.cols() {
            let support: Vec<usize> = (0..h).filter(|&r| a.get(r, c) != 0).collect();
            // the support is a clique, hence a chain in the forest
            let deepest = support.iter().copied().max_by_key(|&r| forest.level(r));
            let mut labels = vec![TreeLabel::Column, TreeLabel::Entry { level: 0, value: 0 }];
            let parent = match deepest {
                None => 0,
                Some(d) => {
                    let mut cur = Some(d);
                    while let Some(r) = cur {
                        labels.push(TreeLabel::Entry {
                            level: forest.level(r) + 1,
                            value: a.get(r, c),
                        });
                        cur = forest.parent(r);
                    }
                    row_id(d)
                }
            };
            labels[1..].sort();
            nodes.insert(
                (h + 1 + c) as NodeId,
                TreeNode {
                    parent: Some(parent),
                    labels,
                },
            );
        }
        MatrixTree::new(a.field(), nodes)
    }

    /// Removes the column leaves of the subtree rooted at `v`; rows stay.
    pub fn drop_column_leaves(&self, v: NodeId) -> Result<MatrixTree> {
        let sub = self.subtree(v)?;
        let nodes = self
            .nodes
            .iter()
            .filter(|(id, n)| !(sub.contains(id) && n.is_column()))
            .map(|(&id, n)| (id, n.clone()))
            .collect();
        Ok(MatrixTree {
            field: self.field,
            nodes,
        })
    }

    /// Removes the subtrees rooted at every node of `vs`. Pruning at the root
    /// leaves the bare root, which decodes to the 0x0 matrix.
    pub fn prune(&self, vs: &[NodeId]) -> Result<MatrixTree> {
        let mut gone = BTreeSet::new();
        for &v in vs {
            gone.extend(self.subtree(v)?);
        }
        let root = self.root();
        gone.remove(&root);
        let nodes = self
            .nodes
            .iter()
            .filter(|(id, _)| !gone.contains(id))
            .map(|(&id, n)| (id, n.clone()))
            .collect();
        Ok(MatrixTree {
            field: self.field,
            nodes,
        })
    }
}
