//! Graph automorphism groups and isomorphism by individualization and
//! refinement.
//!
//! The search follows one leftmost path of the refinement tree down to a
//! discrete partition. Walking that path back up, each level asks which
//! vertices of its target cell lie in the orbit of the chosen vertex under
//! the pointwise stabilizer of the vertices chosen above it; every candidate
//! not already known to be in the orbit is settled by searching its subtree
//! for a leaf equivalent to the first one. Generators found this way, level
//! by level, generate the whole group, and the group order is the product of
//! the orbit lengths along the path.

mod partition;

use num_bigint::BigUint;
use serde::Serialize;

use crate::graph::Graph;
use crate::permgroup::{Permutation, StabilizerChain};

use partition::{DenseGraph, Partition};

/// Vertex colouring; colour classes are `0..class_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    class_count: usize,
}

impl Coloring {
    pub fn uniform(n: usize) -> Self {
        Coloring {
            colors: vec![0; n],
            class_count: usize::from(n > 0),
        }
    }

    /// Accepts arbitrary colour values and compresses them to `0..k`,
    /// preserving their order.
    pub fn from_colors(raw: &[usize]) -> Self {
        let mut values: Vec<usize> = raw.to_vec();
        values.sort_unstable();
        values.dedup();
        let colors = raw
            .iter()
            .map(|c| values.binary_search(c).unwrap())
            .collect();
        Coloring {
            colors,
            class_count: values.len(),
        }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Coloring) -> bool {
        let mut owner = vec![None; self.class_count];
        self.colors.iter().zip(&coarser.colors).all(|(&c, &d)| {
            match owner[c] {
                None => {
                    owner[c] = Some(d);
                    true
                }
                Some(x) => x == d,
            }
        })
    }
}

/// Automorphism group given by generators, with its exact order.
#[derive(Clone, Debug, Serialize)]
pub struct AutGroup {
    pub generators: Vec<Permutation>,
    #[serde(serialize_with = "crate::report::serialize_biguint")]
    pub order: BigUint,
    /// Vertices individualized along the first path; a base for the group.
    pub base: Vec<usize>,
}

impl AutGroup {
    pub fn stabilizer_chain(&self, degree: usize) -> StabilizerChain {
        StabilizerChain::new(degree, &self.generators, &self.base)
    }
}

fn dense(g: &Graph) -> DenseGraph {
    let lists = (0..g.node_count())
        .map(|u| g.neighbors(u).iter().map(|&v| v as u32).collect())
        .collect();
    DenseGraph::new(g.node_count(), lists)
}

fn refined_root(g: &DenseGraph, colors: &[usize]) -> Partition {
    let mut p = Partition::from_colors(colors);
    let starts = p.cell_starts();
    p.refine(g, &starts);
    p
}

/// 1-dimensional Weisfeiler–Leman refinement of `initial`.
pub fn wl_refine(g: &Graph, initial: &Coloring) -> Coloring {
    assert_eq!(initial.colors.len(), g.node_count());
    let p = refined_root(&dense(g), &initial.colors);
    Coloring {
        colors: p.colors(),
        class_count: p.cell_count(),
    }
}

struct PathNode {
    partition: Partition,
    target: usize,
    chosen: usize,
}

/// The leftmost root-to-leaf path and the data other branches are compared
/// against.
struct Reference {
    path: Vec<PathNode>,
    shapes: Vec<Vec<usize>>,
    leaf: Vec<usize>,
}

impl Reference {
    fn build(g: &DenseGraph, root: Partition) -> Self {
        let mut shapes = vec![root.shape()];
        let mut path = Vec::new();
        let mut current = root;
        while let Some(target) = current.target_cell() {
            let chosen = current.cell(target)[0];
            let mut child = current.clone();
            let s = child.individualize(chosen);
            child.refine(g, &[s]);
            shapes.push(child.shape());
            path.push(PathNode {
                partition: current,
                target,
                chosen,
            });
            current = child;
        }
        Reference {
            path,
            shapes,
            leaf: current.lab,
        }
    }
}

/// Searches the subtree below `parent` with `v` individualized for a leaf
/// equivalent to the reference leaf. Returns the vertex map
/// reference graph → `g`.
fn search_equivalent_leaf(
    g: &DenseGraph,
    reference_graph: &DenseGraph,
    reference: &Reference,
    parent: &Partition,
    v: usize,
    depth: usize,
) -> Option<Vec<usize>> {
    let mut child = parent.clone();
    let s = child.individualize(v);
    child.refine(g, &[s]);
    if child.shape() != reference.shapes[depth + 1] {
        return None;
    }
    match child.target_cell() {
        None => leaf_map(reference_graph, &reference.leaf, g, &child.lab),
        Some(t) => {
            let cell = child.cell(t).to_vec();
            cell.into_iter().find_map(|x| {
                search_equivalent_leaf(g, reference_graph, reference, &child, x, depth + 1)
            })
        }
    }
}

fn leaf_map(a: &DenseGraph, leaf_a: &[usize], b: &DenseGraph, leaf_b: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![0; a.len()];
    for (k, &u) in leaf_a.iter().enumerate() {
        map[u] = leaf_b[k];
    }
    a.maps_edges_into(b, &map).then_some(map)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

pub fn automorphism_group(g: &Graph) -> AutGroup {
    automorphism_group_colored(g, &Coloring::uniform(g.node_count()))
}

/// Automorphisms of `g` that also preserve every colour class.
pub fn automorphism_group_colored(g: &Graph, coloring: &Coloring) -> AutGroup {
    let n = g.node_count();
    assert_eq!(coloring.colors.len(), n);
    let dg = dense(g);
    let reference = Reference::build(&dg, refined_root(&dg, &coloring.colors));

    let mut generators: Vec<Permutation> = Vec::new();
    let mut orbits = UnionFind::new(n);
    let mut order = BigUint::from(1u32);
    for (depth, node) in reference.path.iter().enumerate().rev() {
        let v = node.chosen;
        let cell = node.partition.cell(node.target).to_vec();
        for &w in &cell {
            if orbits.find(w) == orbits.find(v) {
                continue;
            }
            if let Some(map) = search_equivalent_leaf(&dg, &dg, &reference, &node.partition, w, depth) {
                let perm = Permutation::from_images(map).expect("leaf map is a bijection");
                assert!(
                    g.is_automorphism(&perm)
                        && (0..n).all(|u| coloring.colors[u] == coloring.colors[perm.apply(u)]),
                    "search produced a non-automorphism"
                );
                for cycle in perm.cycles() {
                    for pair in cycle.windows(2) {
                        orbits.union(pair[0], pair[1]);
                    }
                }
                generators.push(perm);
            }
        }
        let root = orbits.find(v);
        let orbit_len = cell.iter().filter(|&&w| orbits.find(w) == root).count();
        order *= BigUint::from(orbit_len);
    }

    let base: Vec<usize> = reference.path.iter().map(|p| p.chosen).collect();
    let chain = StabilizerChain::new(n, &generators, &base);
    assert_eq!(chain.order(), order, "orbit product disagrees with stabilizer chain");
    AutGroup {
        generators,
        order,
        base,
    }
}

/// An adjacency-preserving bijection `a → b`, if one exists.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Option<Permutation> {
    if a.node_count() != b.node_count() || a.link_count() != b.link_count() {
        return None;
    }
    let n = a.node_count();
    let (da, db) = (dense(a), dense(b));
    let uniform = vec![0; n];
    let root_a = refined_root(&da, &uniform);
    let root_b = refined_root(&db, &uniform);
    if root_a.shape() != root_b.shape() {
        return None;
    }
    let reference = Reference::build(&da, root_a);
    let map = match root_b.target_cell() {
        None => leaf_map(&da, &reference.leaf, &db, &root_b.lab),
        Some(t) => root_b
            .cell(t)
            .to_vec()
            .into_iter()
            .find_map(|x| search_equivalent_leaf(&db, &da, &reference, &root_b, x, 0)),
    }?;
    debug_assert_eq!(da.edge_count(), db.edge_count());
    Some(Permutation::from_images(map).expect("leaf map is a bijection"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{AugmentVariant, Graph};

    fn order(g: &Graph) -> u64 {
        automorphism_group(g).order.try_into().unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(&Graph::cycle(6)), 12);
        assert_eq!(order(&Graph::path(3)), 2);
        assert_eq!(order(&Graph::new(3)), 6);
        assert_eq!(order(&Graph::complete(5)), 120);
        assert_eq!(order(&Graph::petersen()), 120);
        assert_eq!(order(&Graph::new(1)), 1);
        assert_eq!(order(&Graph::new(0)), 1);
    }

    #[test]
    fn augmentation_keeps_the_group() {
        let c6 = Graph::cycle(6);
        let aug = c6.augment(AugmentVariant::TwoNode).unwrap();
        assert_eq!(order(&aug), 12);
    }

    #[test]
    fn wl_examples() {
        let c6 = Graph::cycle(6);
        let out = wl_refine(&c6, &Coloring::uniform(6));
        assert_eq!(out.class_count(), 1);

        let p3 = Graph::path(3);
        let out = wl_refine(&p3, &Coloring::uniform(3));
        assert_eq!(out.class_count(), 2);
        assert_eq!(out.colors()[0], out.colors()[2]);
        assert_ne!(out.colors()[0], out.colors()[1]);
        assert!(out.refines(&Coloring::uniform(3)));
    }

    #[test]
    fn wl_never_merges_classes() {
        let g = Graph::petersen();
        let initial = Coloring::from_colors(&[0, 1, 0, 1, 0, 1, 0, 1, 0, 1]);
        let out = wl_refine(&g, &initial);
        assert!(out.refines(&initial));
    }

    #[test]
    fn isomorphism_examples() {
        let c6 = Graph::cycle(6);
        let m = are_isomorphic(&c6, &c6).unwrap();
        assert!(c6.is_automorphism(&m));

        let two_triangles =
            Graph::from_links(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(are_isomorphic(&c6, &two_triangles).is_none());

        let relabel = Permutation::from_images(vec![3, 0, 5, 1, 2, 4]).unwrap();
        let moved = c6.permuted(&relabel);
        let m = are_isomorphic(&c6, &moved).unwrap();
        assert_eq!(c6.permuted(&m), moved);
    }

    #[test]
    fn colored_search_respects_classes() {
        // C6 with node 0 coloured apart: only the reflection through 0 survives
        let c6 = Graph::cycle(6);
        let coloring = Coloring::from_colors(&[1, 0, 0, 0, 0, 0]);
        let aut = automorphism_group_colored(&c6, &coloring);
        assert_eq!(aut.order, BigUint::from(2u32));
    }
}
