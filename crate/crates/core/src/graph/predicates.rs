use std::collections::BTreeSet;

use serde::Serialize;

use super::{Graph, GraphError, NodeLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarStatus {
    /// The graph has links and no bipartition witness exists.
    Holds,
    NoLinks,
    Violated,
}

/// A bipartition of the nodes into stable sets `c`, `d` with `v0 ∈ c`
/// linked to every node of `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarWitness {
    pub v0: usize,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionStarResult {
    pub status: StarStatus,
    pub witness: Option<StarWitness>,
}

impl ConditionStarResult {
    pub fn holds(&self) -> bool {
        self.status == StarStatus::Holds
    }
}

impl StarWitness {
    /// Checks the witness against its defining properties on `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.node_count();
        let mut side = vec![None; n];
        for &u in &self.c {
            if u >= n || side[u].is_some() {
                return false;
            }
            side[u] = Some(true);
        }
        for &u in &self.d {
            if u >= n || side[u].is_some() {
                return false;
            }
            side[u] = Some(false);
        }
        side.iter().all(Option::is_some)
            && side[self.v0] == Some(true)
            && g.is_stable_set(&self.c)
            && g.is_stable_set(&self.d)
            && self.d.iter().all(|&b| g.has_link(self.v0, b))
    }
}

/// Two disjoint, mutually unlinked links with equal link neighbourhoods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LinkPair {
    pub e: (usize, usize),
    pub f: (usize, usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AugmentVariant {
    /// Pendant path `v – v' – v''` at every node.
    #[default]
    TwoNode,
    /// Single pendant node `v – v'` at every node.
    OneNode,
}

impl Graph {
    pub fn is_stable_set(&self, nodes: &[usize]) -> bool {
        nodes
            .iter()
            .enumerate()
            .all(|(i, &u)| nodes[i + 1..].iter().all(|&v| !self.has_link(u, v)))
    }

    /// Evaluates the bipartition condition through its reduction: a witness
    /// at `v0` must have `d = N(v0)` and `c = V ∖ N(v0)`. Candidates are
    /// tried by decreasing degree, then by index.
    pub fn check_condition_star(&self) -> ConditionStarResult {
        if self.link_count() == 0 {
            return ConditionStarResult {
                status: StarStatus::NoLinks,
                witness: None,
            };
        }
        let mut order: Vec<usize> = (0..self.node_count()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        for v0 in order {
            let d: Vec<usize> = self.neighbors(v0).iter().copied().collect();
            let c: Vec<usize> = (0..self.node_count())
                .filter(|u| !self.has_link(v0, *u))
                .collect();
            if self.is_stable_set(&d) && self.is_stable_set(&c) {
                return ConditionStarResult {
                    status: StarStatus::Violated,
                    witness: Some(StarWitness { v0, c, d }),
                };
            }
        }
        ConditionStarResult {
            status: StarStatus::Holds,
            witness: None,
        }
    }

    /// True when two distinct nodes share at least two neighbours.
    pub fn has_four_cycle(&self) -> bool {
        let n = self.node_count();
        (0..n).any(|u| {
            (u + 1..n).any(|v| self.neighbors(u).intersection(self.neighbors(v)).nth(1).is_some())
        })
    }

    /// Nodes outside `{u, w}` linked to `u` or `w`.
    pub fn link_neighborhood(&self, u: usize, w: usize) -> Result<BTreeSet<usize>, GraphError> {
        if u >= self.node_count() || w >= self.node_count() || !self.has_link(u, w) {
            return Err(GraphError::NotALink(u, w));
        }
        Ok(self
            .neighbors(u)
            .union(self.neighbors(w))
            .copied()
            .filter(|&v| v != u && v != w)
            .collect())
    }

    pub fn exceptional_link_pairs(&self) -> Vec<LinkPair> {
        let links = self.links();
        let hoods: Vec<BTreeSet<usize>> = links
            .iter()
            .map(|&(u, w)| self.link_neighborhood(u, w).unwrap())
            .collect();
        let mut out = Vec::new();
        for i in 0..links.len() {
            let (a, b) = links[i];
            for j in i + 1..links.len() {
                let (c, d) = links[j];
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                // N(e) = N(f) already rules out a link between e and f,
                // since such a link would put an endpoint of f into N(e).
                if hoods[i] == hoods[j] {
                    out.push(LinkPair {
                        e: links[i],
                        f: links[j],
                    });
                }
            }
        }
        out
    }

    /// Attaches pendant paths to every node. Original nodes keep their
    /// indices; new nodes are labelled [`NodeLabel::Pendant`].
    ///
    /// Two-node variant: node `v` gets `v' = n + v` and `v'' = 2n + v`.
    /// One-node variant: node `v` gets `v' = n + v`; refused when two linked
    /// nodes share all their other neighbours.
    pub fn augment(&self, variant: AugmentVariant) -> Result<Graph, GraphError> {
        let n = self.node_count();
        let layers = match variant {
            AugmentVariant::TwoNode => 2,
            AugmentVariant::OneNode => {
                for (u, v) in self.links() {
                    let mut nu = self.neighbors(u).clone();
                    let mut nv = self.neighbors(v).clone();
                    nu.remove(&v);
                    nv.remove(&u);
                    if nu == nv {
                        return Err(GraphError::LinkedTwins(u, v));
                    }
                }
                1
            }
        };
        let mut g = self.clone();
        for _ in 0..layers * n {
            g.add_node(NodeLabel::Pendant);
        }
        for v in 0..n {
            g.add_link(v, n + v)?;
            if layers == 2 {
                g.add_link(n + v, 2 * n + v)?;
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_sets() {
        let c6 = Graph::cycle(6);
        assert!(c6.is_stable_set(&[]));
        assert!(c6.is_stable_set(&[0, 2, 4]));
        assert!(!c6.is_stable_set(&[0, 1]));
    }

    #[test]
    fn condition_star_examples() {
        assert_eq!(Graph::new(2).check_condition_star().status, StarStatus::NoLinks);

        let p3 = Graph::path(3);
        let r = p3.check_condition_star();
        assert_eq!(r.status, StarStatus::Violated);
        let w = r.witness.unwrap();
        assert_eq!(w, StarWitness { v0: 1, c: vec![1], d: vec![0, 2] });
        assert!(w.is_valid_for(&p3));

        assert_eq!(Graph::cycle(6).check_condition_star().status, StarStatus::Holds);
        assert_eq!(Graph::complete(3).check_condition_star().status, StarStatus::Holds);
    }

    #[test]
    fn four_cycles() {
        assert!(Graph::cycle(4).has_four_cycle());
        assert!(Graph::complete(4).has_four_cycle());
        assert!(!Graph::cycle(5).has_four_cycle());
        assert!(!Graph::cycle(6).has_four_cycle());
    }

    #[test]
    fn link_neighborhoods() {
        let c6 = Graph::cycle(6);
        assert_eq!(c6.link_neighborhood(0, 1).unwrap(), BTreeSet::from([2, 5]));
        assert_eq!(c6.link_neighborhood(3, 4).unwrap(), BTreeSet::from([2, 5]));
        assert_eq!(
            Graph::complete(3).link_neighborhood(0, 1).unwrap(),
            BTreeSet::from([2])
        );
        assert_eq!(c6.link_neighborhood(0, 2), Err(GraphError::NotALink(0, 2)));
    }

    #[test]
    fn six_cycle_has_three_opposite_pairs() {
        let pairs = Graph::cycle(6).exceptional_link_pairs();
        assert_eq!(
            pairs,
            vec![
                LinkPair { e: (0, 1), f: (3, 4) },
                LinkPair { e: (0, 5), f: (2, 3) },
                LinkPair { e: (1, 2), f: (4, 5) },
            ]
        );
        assert!(Graph::complete(3).exceptional_link_pairs().is_empty());
    }

    /// Straight from the definition, including the explicit no-link test.
    fn exceptional_pairs_by_definition(g: &Graph) -> usize {
        let links = g.links();
        let mut count = 0;
        for (i, &(a, b)) in links.iter().enumerate() {
            for &(c, d) in &links[i + 1..] {
                let disjoint = a != c && a != d && b != c && b != d;
                let unlinked = [a, b].iter().all(|&x| [c, d].iter().all(|&y| !g.has_link(x, y)));
                if disjoint
                    && unlinked
                    && g.link_neighborhood(a, b).unwrap() == g.link_neighborhood(c, d).unwrap()
                {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn exceptional_pairs_match_definition_on_five_nodes() {
        for mask in 0..1u64 << 10 {
            let g = Graph::from_pair_mask(5, mask);
            assert_eq!(g.exceptional_link_pairs().len(), exceptional_pairs_by_definition(&g));
        }
    }

    #[test]
    fn augmentation_counts() {
        let c6 = Graph::cycle(6);
        let two = c6.augment(AugmentVariant::TwoNode).unwrap();
        assert_eq!((two.node_count(), two.link_count()), (18, 18));
        assert!(two.exceptional_link_pairs().is_empty());
        assert_eq!(two.label(0), NodeLabel::Original);
        assert_eq!(two.label(6), NodeLabel::Pendant);

        assert_eq!(Graph::new(1).augment(AugmentVariant::TwoNode).unwrap(), {
            let mut p = Graph::path(3);
            // path 0 - 1 - 2 with the pendant nodes relabelled
            p.set_label(1, NodeLabel::Pendant);
            p.set_label(2, NodeLabel::Pendant);
            p
        });

        let one = c6.augment(AugmentVariant::OneNode).unwrap();
        assert_eq!((one.node_count(), one.link_count()), (12, 12));
        assert_eq!(
            Graph::complete(2).augment(AugmentVariant::OneNode),
            Err(GraphError::LinkedTwins(0, 1))
        );
    }
}
