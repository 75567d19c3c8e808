//! Reference engines that trade speed for obviousness: exact-LP vertex
//! adjacency, bipartition enumeration for the star condition, and
//! automorphisms by trying every permutation. Compiled for tests and behind
//! the `oracle` feature; the pipeline itself never calls them.

mod lp;

use thiserror::Error;

use crate::graph::{ConditionStarResult, Graph, StarStatus, StarWitness};
use crate::permgroup::Permutation;

pub use lp::{lp_adjacent, midpoint_problem, segment_problem, ExactRational, LpProblem, Phase1Outcome};

pub const BRUTE_STAR_LIMIT: usize = 12;
pub const BRUTE_AUT_LIMIT: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph on {nodes} nodes exceeds the brute-force limit of {limit}")]
    TooLarge { nodes: usize, limit: usize },
}

/// The star condition straight from its definition: every bipartition
/// `(C, D)` and every `v0 ∈ C`.
pub fn brute_condition_star(g: &Graph) -> Result<ConditionStarResult, OracleError> {
    let n = g.node_count();
    if n > BRUTE_STAR_LIMIT {
        return Err(OracleError::TooLarge { nodes: n, limit: BRUTE_STAR_LIMIT });
    }
    if g.link_count() == 0 {
        return Ok(ConditionStarResult { status: StarStatus::NoLinks, witness: None });
    }
    for mask in 0u32..1 << n {
        let c: Vec<usize> = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
        let d: Vec<usize> = (0..n).filter(|&u| mask >> u & 1 == 0).collect();
        if !g.is_stable_set(&c) || !g.is_stable_set(&d) {
            continue;
        }
        if let Some(&v0) = c.iter().find(|&&v0| d.iter().all(|&b| g.has_link(v0, b))) {
            return Ok(ConditionStarResult {
                status: StarStatus::Violated,
                witness: Some(StarWitness { v0, c, d }),
            });
        }
    }
    Ok(ConditionStarResult { status: StarStatus::Holds, witness: None })
}

/// Every adjacency-preserving permutation, in lexicographic order of images.
pub fn brute_automorphisms(g: &Graph) -> Result<Vec<Permutation>, OracleError> {
    let n = g.node_count();
    if n > BRUTE_AUT_LIMIT {
        return Err(OracleError::TooLarge { nodes: n, limit: BRUTE_AUT_LIMIT });
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        let perm = Permutation::from_images(images.clone()).unwrap();
        if g.is_automorphism(&perm) {
            out.push(perm);
        }
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| images[i - 1] < images[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| images[j] > images[i - 1]).unwrap();
        images.swap(i - 1, j);
        images[i..].reverse();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_condition_by_enumeration() {
        let r = brute_condition_star(&Graph::path(3)).unwrap();
        assert_eq!(r.status, StarStatus::Violated);
        assert!(r.witness.unwrap().is_valid_for(&Graph::path(3)));
        assert_eq!(brute_condition_star(&Graph::cycle(6)).unwrap().status, StarStatus::Holds);
        assert_eq!(brute_condition_star(&Graph::new(4)).unwrap().status, StarStatus::NoLinks);
        assert!(brute_condition_star(&Graph::new(13)).is_err());
    }

    #[test]
    fn automorphisms_by_enumeration() {
        assert_eq!(brute_automorphisms(&Graph::new(3)).unwrap().len(), 6);
        assert_eq!(brute_automorphisms(&Graph::cycle(6)).unwrap().len(), 12);
        assert_eq!(brute_automorphisms(&Graph::path(3)).unwrap().len(), 2);
        assert_eq!(brute_automorphisms(&Graph::new(0)).unwrap().len(), 1);
        assert!(brute_automorphisms(&Graph::new(9)).is_err());
    }
}
