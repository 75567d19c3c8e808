//! Graphs with a prescribed automorphism group, built from the Cayley colour
//! digraph by replacing every coloured arc with an asymmetric path gadget.
//!
//! For a generator of colour `c` that is not an involution, the arc `a → b`
//! becomes the path `a – x – y – b` with a pendant path of `2c + 1` nodes at
//! `x` and `2c + 2` nodes at `y`. The two arcs `a → b`, `b → a` of an
//! involution of colour `c` become one path `a – z – b` with a pendant path
//! of `2c + 1` nodes at `z`. Pendant lengths therefore identify colour and
//! direction, so the only automorphisms left are the left multiplications.

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::autengine::automorphism_group;
use crate::graph::{Graph, NodeLabel};
use crate::permgroup::{GroupError, Permutation, PermutationGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FruchtError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group of order {0} takes the small-group path, not a graph construction")]
    TooSmall(usize),
    #[error("constructed graph has {aut_order} automorphisms, expected {group_order}")]
    Verification { aut_order: BigUint, group_order: usize },
    #[error("the homomorphism into the automorphism group failed verification")]
    Action,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub source: usize,
    pub target: usize,
    pub color: usize,
}

/// Digraph on the enumerated elements with an arc `x → x·s` per generator `s`.
#[derive(Clone, Debug)]
pub struct CayleyColorDigraph {
    /// Identity first.
    pub elements: Vec<Permutation>,
    pub arcs: Vec<Arc>,
    /// Generator behind each colour; identity generators are dropped.
    pub generators: Vec<Permutation>,
    pub involution_flags: Vec<bool>,
}

impl CayleyColorDigraph {
    pub fn color_count(&self) -> usize {
        self.generators.len()
    }
}

pub fn cayley_color_digraph(group: &PermutationGroup) -> Result<CayleyColorDigraph, GroupError> {
    let elements = group.enumerate_elements()?;
    let index = element_index(&elements);
    let generators: Vec<Permutation> = group
        .generators()
        .iter()
        .filter(|s| !s.is_identity())
        .cloned()
        .collect();
    let involution_flags = generators
        .iter()
        .map(|s| s.compose(s).is_identity())
        .collect();
    let mut arcs = Vec::with_capacity(elements.len() * generators.len());
    for (color, s) in generators.iter().enumerate() {
        for (source, x) in elements.iter().enumerate() {
            arcs.push(Arc {
                source,
                target: index[&x.compose(s)],
                color,
            });
        }
    }
    Ok(CayleyColorDigraph {
        elements,
        arcs,
        generators,
        involution_flags,
    })
}

fn element_index(elements: &[Permutation]) -> HashMap<Permutation, usize> {
    elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()
}

/// Pendant path lengths `(at x, at y)` for a colour; involutions only use the first.
fn pendant_lengths(color: usize, involution: bool) -> (usize, Option<usize>) {
    let first = 2 * color + 1;
    (first, (!involution).then_some(first + 1))
}

#[derive(Clone, Debug)]
pub struct FruchtResult {
    pub graph: Graph,
    /// Element index → node; element `i` sits at node `i`.
    pub node_map: Vec<usize>,
    pub elements: Vec<Permutation>,
    /// `phi[i]` is the node permutation induced by left multiplication with element `i`.
    pub phi: Vec<Permutation>,
    pub digraph: CayleyColorDigraph,
}

impl FruchtResult {
    pub fn element_index(&self, g: &Permutation) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }
}

/// Builds the gadget graph and verifies that its automorphism group has the
/// order of `group` and that `phi` embeds `group` into it.
pub fn frucht_graph(group: &PermutationGroup) -> Result<FruchtResult, FruchtError> {
    let digraph = cayley_color_digraph(group)?;
    let order = digraph.elements.len();
    if order < 3 {
        return Err(FruchtError::TooSmall(order));
    }
    let index = element_index(&digraph.elements);

    let mut lengths = Vec::new();
    for (c, &inv) in digraph.involution_flags.iter().enumerate() {
        let (a, b) = pendant_lengths(c, inv);
        lengths.push(a);
        lengths.extend(b);
    }
    let mut sorted = lengths.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), lengths.len(), "pendant lengths collide");

    let mut graph = Graph::new(order);
    // gadget nodes in a fixed order, keyed by (colour, source element); an
    // involution gadget is keyed by the smaller element of its pair
    let mut gadgets: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for arc in &digraph.arcs {
        let inv = digraph.involution_flags[arc.color];
        if inv && arc.source > arc.target {
            continue;
        }
        let (first, second) = pendant_lengths(arc.color, inv);
        let mut nodes = Vec::new();
        let mut spine = vec![arc.source];
        for len in std::iter::once(first).chain(second) {
            let m = graph.add_node(NodeLabel::Gadget);
            nodes.push(m);
            spine.push(m);
            let mut prev = m;
            for _ in 0..len {
                let p = graph.add_node(NodeLabel::Pendant);
                nodes.push(p);
                graph.add_link(prev, p).expect("fresh nodes");
                prev = p;
            }
        }
        spine.push(arc.target);
        for w in spine.windows(2) {
            graph.add_link(w[0], w[1]).expect("gadget spine is simple");
        }
        gadgets.insert((arc.color, arc.source), nodes);
    }

    let n = graph.node_count();
    let phi: Vec<Permutation> = digraph
        .elements
        .iter()
        .map(|g| {
            let mut images = vec![usize::MAX; n];
            let left: Vec<usize> = digraph.elements.iter().map(|x| index[&g.compose(x)]).collect();
            images[..order].copy_from_slice(&left);
            for (&(color, source), nodes) in &gadgets {
                let mut key = (color, left[source]);
                if digraph.involution_flags[color] {
                    let partner = index[&digraph.elements[source].compose(&digraph.generators[color])];
                    key.1 = key.1.min(left[partner]);
                }
                for (&u, &v) in nodes.iter().zip(&gadgets[&key]) {
                    images[u] = v;
                }
            }
            Permutation::from_images(images).expect("gadget transport is a bijection")
        })
        .collect();

    let result = FruchtResult {
        graph,
        node_map: (0..order).collect(),
        elements: digraph.elements.clone(),
        phi,
        digraph,
    };
    let aut = automorphism_group(&result.graph);
    if aut.order != BigUint::from(order) {
        return Err(FruchtError::Verification {
            aut_order: aut.order,
            group_order: order,
        });
    }
    if !verify_action(&result, group) {
        return Err(FruchtError::Action);
    }
    Ok(result)
}

/// Checks that `phi` maps generators to automorphisms, respects 20 random
/// products and sends no non-identity element to the identity.
pub fn verify_action(r: &FruchtResult, group: &PermutationGroup) -> bool {
    let k = r.elements.len();
    if r.phi.len() != k {
        return false;
    }
    let index = element_index(&r.elements);
    for s in group.generators() {
        match index.get(s) {
            Some(&i) if r.graph.is_automorphism(&r.phi[i]) => {}
            _ => return false,
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..20 {
        let (a, b) = (rng.gen_range(0..k), rng.gen_range(0..k));
        let ab = index[&r.elements[a].compose(&r.elements[b])];
        if r.phi[ab] != r.phi[a].compose(&r.phi[b]) {
            return false;
        }
    }
    r.elements
        .iter()
        .zip(&r.phi)
        .all(|(g, p)| g.is_identity() || !p.is_identity())
}
