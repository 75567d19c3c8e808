//! The 0/1 polytope of a graph: convex hull of the characteristic vectors of
//! the empty set, every node and every link.
//!
//! Its skeleton is derived from four combinatorial adjacency rules, never
//! from geometry. Everything else here (midpoint witnesses, the lift of graph
//! automorphisms, the Empty-swapping affine map and face certificates) exists
//! to check claims about that skeleton.

mod faces;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, StarStatus, ConditionStarResult};
use crate::permgroup::{Permutation, PermutationGroup};

pub use faces::{face_certificate, FaceCertificate, FaceKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("the graph has no nodes")]
    NoNodes,
    #[error("permutation {0} is not an automorphism of the source graph")]
    NotAnAutomorphism(String),
    #[error("the bipartition condition holds or the graph has no links; no swap map exists")]
    NoStarWitness,
    #[error("the swap map sends vertex {0} outside the vertex set")]
    ImageNotAVertex(usize),
    #[error("group of order {0} is not a special case")]
    NotSpecialCase(String),
    #[error("certificate parameters do not fit the graph: {0}")]
    BadFaceParameters(String),
    #[error("certificate inequality violated at vertex {0}")]
    CertificateViolated(usize),
    #[error("certificate tight set {found:?} differs from the claimed face {expected:?}")]
    TightSetMismatch { expected: Vec<usize>, found: Vec<usize> },
}

/// Which subset of nodes a vertex is the characteristic vector of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexTag {
    Empty,
    Singleton(usize),
    Link(usize, usize),
}

impl VertexTag {
    pub fn support(&self) -> Vec<usize> {
        match *self {
            VertexTag::Empty => vec![],
            VertexTag::Singleton(u) => vec![u],
            VertexTag::Link(u, v) => vec![u, v],
        }
    }
}

impl fmt::Display for VertexTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexTag::Empty => write!(f, "E"),
            VertexTag::Singleton(u) => write!(f, "S {u}"),
            VertexTag::Link(u, v) => write!(f, "L {u} {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeVertex {
    pub coords: Vec<u8>,
    pub tag: VertexTag,
}

/// Vertices in the order Empty, Singletons by node, Links lexicographically.
#[derive(Clone, Debug)]
pub struct BinaryPolytope {
    graph: Graph,
    vertices: Vec<PolytopeVertex>,
    index: HashMap<VertexTag, usize>,
}

pub fn build_polytope(g: &Graph) -> Result<BinaryPolytope, PolytopeError> {
    if g.node_count() == 0 {
        return Err(PolytopeError::NoNodes);
    }
    let tags = std::iter::once(VertexTag::Empty)
        .chain((0..g.node_count()).map(VertexTag::Singleton))
        .chain(g.links().into_iter().map(|(u, v)| VertexTag::Link(u, v)));
    Ok(BinaryPolytope::from_tags(g.clone(), tags))
}

/// The polytopes of the two smallest groups: the origin of ℝ¹ for the
/// trivial group, the segment `[0, 1]` for a group of order two.
pub fn special_case_polytope(group: &PermutationGroup) -> Result<BinaryPolytope, PolytopeError> {
    match group.order_usize() {
        Some(1) => Ok(BinaryPolytope::from_tags(Graph::new(1), [VertexTag::Empty])),
        Some(2) => build_polytope(&Graph::new(1)),
        _ => Err(PolytopeError::NotSpecialCase(group.order().to_string())),
    }
}

impl BinaryPolytope {
    fn from_tags(graph: Graph, tags: impl IntoIterator<Item = VertexTag>) -> Self {
        let d = graph.node_count();
        let vertices: Vec<PolytopeVertex> = tags
            .into_iter()
            .map(|tag| {
                let mut coords = vec![0u8; d];
                for u in tag.support() {
                    coords[u] = 1;
                }
                PolytopeVertex { coords, tag }
            })
            .collect();
        let index = vertices.iter().enumerate().map(|(i, v)| (v.tag, i)).collect();
        BinaryPolytope { graph, vertices, index }
    }

    pub fn source_graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[PolytopeVertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.graph.node_count()
    }

    pub fn tag(&self, i: usize) -> VertexTag {
        self.vertices[i].tag
    }

    /// Index of the vertex with the given tag; links may be given in either order.
    pub fn index_of(&self, tag: VertexTag) -> Option<usize> {
        let tag = match tag {
            VertexTag::Link(u, v) if u > v => VertexTag::Link(v, u),
            t => t,
        };
        self.index.get(&tag).copied()
    }

    /// Index of the vertex whose support is exactly `nodes`.
    pub fn index_of_support(&self, nodes: &[usize]) -> Option<usize> {
        match *nodes {
            [] => self.index_of(VertexTag::Empty),
            [u] => self.index_of(VertexTag::Singleton(u)),
            [u, v] => self.index_of(VertexTag::Link(u, v)),
            _ => None,
        }
    }

    pub fn empty_index(&self) -> usize {
        0
    }

    /// Rank of the vertex set as an affine point set, computed modulo a
    /// large prime. That is a lower bound on the rational rank, and exact
    /// whenever it reaches the ambient dimension.
    pub fn affine_dimension(&self) -> usize {
        const P: u64 = 2_147_483_647;
        let d = self.ambient_dimension();
        let base = &self.vertices[0].coords;
        let mut rows: Vec<Vec<u64>> = self.vertices[1..]
            .iter()
            .map(|v| {
                v.coords
                    .iter()
                    .zip(base)
                    .map(|(&a, &b)| (a as u64 + P - b as u64) % P)
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..d {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = mod_pow(rows[rank][col], P - 2, P);
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let f = rows[r][col] * inv % P;
                    for c in col..d {
                        rows[r][c] = (rows[r][c] + P - f * rows[rank][c] % P) % P;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Header `d k`, then one line of `d` digits per vertex.
    pub fn to_vertex_file(&self) -> String {
        let mut s = format!("{} {}\n", self.ambient_dimension(), self.vertex_count());
        for v in &self.vertices {
            let digits: Vec<String> = v.coords.iter().map(u8::to_string).collect();
            s.push_str(&digits.join(" "));
            s.push('\n');
        }
        s
    }

    /// One tag per line: `E`, `S u` or `L u v`.
    pub fn to_tag_file(&self) -> String {
        self.vertices.iter().map(|v| format!("{}\n", v.tag)).collect()
    }

    /// Lifts a graph automorphism to the vertex permutation
    /// Empty ↦ Empty, S(u) ↦ S(α(u)), L{v,w} ↦ L{α(v),α(w)}.
    pub fn lift_automorphism(&self, alpha: &Permutation) -> Result<Permutation, PolytopeError> {
        if !self.graph.is_automorphism(alpha) {
            return Err(PolytopeError::NotAnAutomorphism(alpha.to_cycle_string()));
        }
        let images = self
            .vertices
            .iter()
            .map(|v| {
                let image = match v.tag {
                    VertexTag::Empty => VertexTag::Empty,
                    VertexTag::Singleton(u) => VertexTag::Singleton(alpha.apply(u)),
                    VertexTag::Link(u, w) => VertexTag::Link(alpha.apply(u), alpha.apply(w)),
                };
                self.index_of(image).expect("automorphisms map links to links")
            })
            .collect();
        Ok(Permutation::from_images(images).expect("lift is a bijection"))
    }

    /// Node permutation read off a vertex permutation that maps Singletons
    /// to Singletons; `None` otherwise.
    pub fn induced_node_permutation(&self, beta: &Permutation) -> Option<Permutation> {
        let images = (0..self.ambient_dimension())
            .map(|u| {
                let i = self.index_of(VertexTag::Singleton(u))?;
                match self.tag(beta.apply(i)) {
                    VertexTag::Singleton(w) => Some(w),
                    _ => None,
                }
            })
            .collect::<Option<Vec<usize>>>()?;
        Permutation::from_images(images).ok()
    }

    /// Vertex permutation induced by the affine map that replaces `x_{v0}` by
    /// `1 − Σ_{a∈C} x_a` for a violating witness `(v0, C, D)`.
    pub fn lemma_t_map(&self, star: &ConditionStarResult) -> Result<Permutation, PolytopeError> {
        let w = match (&star.status, &star.witness) {
            (StarStatus::Violated, Some(w)) if w.is_valid_for(&self.graph) => w,
            _ => return Err(PolytopeError::NoStarWitness),
        };
        let images = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let sum: i64 = w.c.iter().map(|&a| v.coords[a] as i64).sum();
                let mut support: Vec<usize> = v.tag.support().into_iter().filter(|&u| u != w.v0).collect();
                match 1 - sum {
                    0 => {}
                    1 => support.push(w.v0),
                    _ => return Err(PolytopeError::ImageNotAVertex(i)),
                }
                support.sort_unstable();
                self.index_of_support(&support).ok_or(PolytopeError::ImageNotAVertex(i))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        Permutation::from_images(images).map_err(|_| PolytopeError::ImageNotAVertex(0))
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Skeleton of a [`BinaryPolytope`] on its vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonGraph {
    graph: Graph,
}

impl SkeletonGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.graph.has_link(i, j)
    }
}

/// Adjacency of two vertex tags by the combinatorial rules.
pub fn tags_adjacent(g: &Graph, a: VertexTag, b: VertexTag) -> bool {
    use VertexTag::*;
    match (a, b) {
        (Empty, Empty) => false,
        (Empty, Singleton(_)) | (Singleton(_), Empty) => true,
        (Empty, Link(..)) | (Link(..), Empty) => false,
        (Singleton(u), Singleton(v)) => u != v && !g.has_link(u, v),
        (Singleton(v), Link(u, w)) | (Link(u, w), Singleton(v)) => {
            v == u || v == w || (!g.has_link(v, u) && !g.has_link(v, w))
        }
        (Link(a, b), Link(c, d)) => {
            if (a, b) == (c, d) {
                false
            } else if a == c || a == d || b == c || b == d {
                true
            } else {
                let four_cycle = (g.has_link(a, c) && g.has_link(b, d))
                    || (g.has_link(a, d) && g.has_link(b, c));
                !four_cycle
            }
        }
    }
}

pub fn skeleton(p: &BinaryPolytope) -> SkeletonGraph {
    let k = p.vertex_count();
    let g = p.source_graph();
    let mut graph = Graph::new(k);
    for i in 0..k {
        for j in i + 1..k {
            if tags_adjacent(g, p.tag(i), p.tag(j)) {
                graph.add_link(i, j).unwrap();
            }
        }
    }
    SkeletonGraph { graph }
}

/// Coordinates of `v_i + v_j` as a sorted multiset of support positions.
type SumKey = [u32; 4];

fn sum_key(p: &BinaryPolytope, i: usize, j: usize) -> SumKey {
    let mut key = [u32::MAX; 4];
    let mut parts: Vec<u32> = p
        .tag(i)
        .support()
        .into_iter()
        .chain(p.tag(j).support())
        .map(|u| u as u32)
        .collect();
    parts.sort_unstable();
    key[..parts.len()].copy_from_slice(&parts);
    key
}

/// Map from integer sum vectors to the vertex pairs realising them.
pub struct MidpointIndex {
    pairs: HashMap<SumKey, Vec<(usize, usize)>>,
}

impl MidpointIndex {
    pub fn new(p: &BinaryPolytope) -> Self {
        let mut pairs: HashMap<SumKey, Vec<(usize, usize)>> = HashMap::new();
        for i in 0..p.vertex_count() {
            for j in i + 1..p.vertex_count() {
                pairs.entry(sum_key(p, i, j)).or_default().push((i, j));
            }
        }
        MidpointIndex { pairs }
    }

    /// Another vertex pair with the same midpoint as `v_i`, `v_j`.
    pub fn witness(&self, p: &BinaryPolytope, i: usize, j: usize) -> Option<(usize, usize)> {
        let (i, j) = (i.min(j), i.max(j));
        self.pairs
            .get(&sum_key(p, i, j))?
            .iter()
            .copied()
            .find(|&pair| pair != (i, j))
    }
}

pub fn midpoint_witness(p: &BinaryPolytope, i: usize, j: usize) -> Option<(usize, usize)> {
    assert_ne!(i, j);
    MidpointIndex::new(p).witness(p, i, j)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CombinatorialReport {
    pub nonadjacent_pairs: usize,
    /// Nonadjacent pairs lacking a midpoint witness.
    pub missing_witness: Vec<(usize, usize)>,
    /// Adjacent pairs that nonetheless share a midpoint with another pair;
    /// any entry means the skeleton itself is wrong.
    pub adjacent_with_witness: Vec<(usize, usize)>,
}

impl CombinatorialReport {
    pub fn passed(&self) -> bool {
        self.missing_witness.is_empty() && self.adjacent_with_witness.is_empty()
    }
}

pub fn verify_combinatorial(p: &BinaryPolytope, s: &SkeletonGraph) -> CombinatorialReport {
    let index = MidpointIndex::new(p);
    let mut report = CombinatorialReport::default();
    for i in 0..p.vertex_count() {
        for j in i + 1..p.vertex_count() {
            let witness = index.witness(p, i, j);
            if s.adjacent(i, j) {
                if witness.is_some() {
                    report.adjacent_with_witness.push((i, j));
                }
            } else {
                report.nonadjacent_pairs += 1;
                if witness.is_none() {
                    report.missing_witness.push((i, j));
                }
            }
        }
    }
    report
}

/// Exact diameter by breadth-first search from every vertex over bitset rows;
/// `None` if the skeleton is disconnected.
pub fn diameter(s: &SkeletonGraph) -> Option<usize> {
    let g = s.graph();
    let k = g.node_count();
    let words = k.div_ceil(64).max(1);
    let mut rows = vec![0u64; k * words];
    for (u, v) in g.links() {
        rows[u * words + v / 64] |= 1 << (v % 64);
        rows[v * words + u / 64] |= 1 << (u % 64);
    }
    let mut best = 0;
    for src in 0..k {
        let mut seen = vec![0u64; words];
        seen[src / 64] |= 1 << (src % 64);
        let mut frontier = vec![src];
        let mut reached = 1;
        let mut depth = 0;
        while !frontier.is_empty() {
            let mut next = vec![0u64; words];
            for &u in &frontier {
                for w in 0..words {
                    next[w] |= rows[u * words + w];
                }
            }
            frontier.clear();
            for w in 0..words {
                next[w] &= !seen[w];
                seen[w] |= next[w];
                let mut bits = next[w];
                while bits != 0 {
                    frontier.push(w * 64 + bits.trailing_zeros() as usize);
                    bits &= bits - 1;
                }
            }
            if !frontier.is_empty() {
                depth += 1;
                reached += frontier.len();
            }
        }
        if reached < k {
            return None;
        }
        best = best.max(depth);
    }
    Some(best)
}

/// Whether `u ↦ S(u)` is an isomorphism from the complement of the source
/// graph onto the skeleton restricted to the neighbours of Empty.
pub fn neighborhood_complement_iso(p: &BinaryPolytope, s: &SkeletonGraph) -> bool {
    let n = p.ambient_dimension();
    let empty = p.empty_index();
    let Some(singletons) = (0..n)
        .map(|u| p.index_of(VertexTag::Singleton(u)))
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    let mut expected: Vec<usize> = singletons.clone();
    expected.sort_unstable();
    let actual: Vec<usize> = s.graph().neighbors(empty).iter().copied().collect();
    if actual != expected {
        return false;
    }
    let g = p.source_graph();
    (0..n).all(|u| (u + 1..n).all(|v| s.adjacent(singletons[u], singletons[v]) == !g.has_link(u, v)))
}

/// The subgraph of the skeleton induced on the neighbours of Empty.
pub fn empty_neighborhood(s: &SkeletonGraph, p: &BinaryPolytope) -> Graph {
    let nodes: Vec<usize> = s.graph().neighbors(p.empty_index()).iter().copied().collect();
    s.graph().induced_subgraph(&nodes)
}
