//! Simple undirected graphs and the graph-level predicates the polytope
//! construction depends on.

mod graph6;
mod predicates;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::permgroup::Permutation;

pub use graph6::{graph6_decode, graph6_encode};
pub use predicates::{
    AugmentVariant, ConditionStarResult, LinkPair, StarStatus, StarWitness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {node} out of range for a graph on {count} nodes")]
    NodeOutOfRange { node: usize, count: usize },
    #[error("loop at node {0}")]
    Loop(usize),
    #[error("{{{0}, {1}}} is not a link")]
    NotALink(usize, usize),
    #[error("one-node augmentation needs linked nodes to have distinct neighbourhoods; nodes {0} and {1} are linked twins")]
    LinkedTwins(usize, usize),
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("graph on {0} nodes is too large for graph6")]
    Graph6TooLarge(usize),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Where a node came from in the construction pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeLabel {
    Original,
    Gadget,
    Pendant,
}

/// Simple undirected graph on nodes `0..node_count`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    labels: Vec<NodeLabel>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} nodes, links {:?})", self.node_count(), self.links())
    }
}

impl Graph {
    /// Edgeless graph, every node labelled original.
    pub fn new(node_count: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); node_count],
            labels: vec![NodeLabel::Original; node_count],
        }
    }

    pub fn from_links(node_count: usize, links: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(node_count);
        for &(u, v) in links {
            g.add_link(u, v)?;
        }
        Ok(g)
    }

    /// Graph on `n` nodes whose links are selected by the bits of `mask`,
    /// bit `k` standing for the `k`-th pair in lexicographic order.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::new(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> k & 1 == 1 {
                    g.add_link(u, v).expect("valid pair");
                }
                k += 1;
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let links: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_links(n, &links).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let links: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_links(n, &links).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    pub fn star(leaves: usize) -> Self {
        let links: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_links(leaves + 1, &links).unwrap()
    }

    pub fn petersen() -> Self {
        let mut links = Vec::new();
        for i in 0..5 {
            links.push((i, (i + 1) % 5));
            links.push((i, i + 5));
            links.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_links(10, &links).unwrap()
    }

    /// Adds a node with the given label and returns its index.
    pub fn add_node(&mut self, label: NodeLabel) -> usize {
        self.adjacency.push(BTreeSet::new());
        self.labels.push(label);
        self.adjacency.len() - 1
    }

    pub fn add_link(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let count = self.node_count();
        for node in [u, v] {
            if node >= count {
                return Err(GraphError::NodeOutOfRange { node, count });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn set_label(&mut self, node: usize, label: NodeLabel) {
        self.labels[node] = label;
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn link_count(&self) -> usize {
        self.adjacency.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_link(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    pub fn neighbors(&self, u: usize) -> &BTreeSet<usize> {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn labels(&self) -> &[NodeLabel] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> NodeLabel {
        self.labels[u]
    }

    /// Links as `(u, v)` with `u < v`, in lexicographic order.
    pub fn links(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.link_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    /// Complement graph; labels are kept.
    pub fn complement(&self) -> Graph {
        let n = self.node_count();
        let adjacency = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && !self.has_link(u, v))
                    .collect()
            })
            .collect();
        Graph {
            adjacency,
            labels: self.labels.clone(),
        }
    }

    /// Graph induced on `nodes`; node `nodes[i]` becomes `i`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        let mut g = Graph::new(nodes.len());
        for (i, &u) in nodes.iter().enumerate() {
            g.labels[i] = self.labels[u];
            for (j, &v) in nodes.iter().enumerate().skip(i + 1) {
                if self.has_link(u, v) {
                    g.add_link(i, j).unwrap();
                }
            }
        }
        g
    }

    /// Image of the graph under a relabelling of its nodes.
    pub fn permuted(&self, perm: &Permutation) -> Graph {
        let n = self.node_count();
        assert_eq!(perm.degree(), n);
        let mut g = Graph::new(n);
        for (u, v) in self.links() {
            g.add_link(perm.apply(u), perm.apply(v)).unwrap();
        }
        for u in 0..n {
            g.labels[perm.apply(u)] = self.labels[u];
        }
        g
    }

    /// True when `perm` maps links onto links.
    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        perm.degree() == self.node_count()
            && self
                .links()
                .into_iter()
                .all(|(u, v)| self.has_link(perm.apply(u), perm.apply(v)))
    }

    /// Plain-text adjacency format: an `n m` header followed by `u v` lines.
    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{} {}\n", self.node_count(), self.link_count());
        for (u, v) in self.links() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn from_edge_list_text(text: &str) -> Result<Graph, GraphError> {
        let bad = |m: &str| GraphError::MalformedEdgeList(m.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("missing header"))?;
        let nums = parse_pair(header).ok_or_else(|| bad(header))?;
        let (n, m) = nums;
        let mut g = Graph::new(n);
        let mut seen = 0;
        for line in lines {
            let (u, v) = parse_pair(line).ok_or_else(|| bad(line))?;
            g.add_link(u, v)?;
            seen += 1;
        }
        if seen != m || g.link_count() != m {
            return Err(bad("link count does not match header"));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_basics() {
        assert_eq!(Graph::new(3).complement(), Graph::complete(3));
        assert_eq!(Graph::complete(3).link_count(), 3);
        // path 0-1-2 -> single link {0,2}, node 1 isolated
        let c = Graph::path(3).complement();
        assert_eq!(c.links(), vec![(0, 2)]);
        assert_eq!(c.degree(1), 0);
        let p = Graph::petersen();
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::new(2);
        assert_eq!(g.add_link(0, 0), Err(GraphError::Loop(0)));
        assert!(matches!(
            g.add_link(0, 2),
            Err(GraphError::NodeOutOfRange { node: 2, count: 2 })
        ));
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.link_count(), 15);
        assert!((0..10).all(|u| p.degree(u) == 3));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5);
        let text = g.to_edge_list_text();
        assert!(text.starts_with("5 5\n"));
        assert_eq!(Graph::from_edge_list_text(&text).unwrap(), g);
        assert!(Graph::from_edge_list_text("3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list_text("3 1\n0 0\n").is_err());
    }

    #[test]
    fn pair_mask_enumerates_labelled_graphs() {
        assert_eq!(Graph::from_pair_mask(3, 0b111), Graph::complete(3));
        assert_eq!(Graph::from_pair_mask(3, 0b101).links(), vec![(0, 1), (1, 2)]);
    }
}
