//! Binary convex polytopes whose combinatorial automorphism group is a
//! prescribed finite group.
//!
//! The pipeline runs group → graph → polytope:
//!
//! * [`permgroup`] realises the group as a permutation group;
//! * [`frucht`] builds a graph whose automorphism group is that group;
//! * [`graph`] holds the graph predicates and the augmentation step;
//! * [`polytope`] builds the 0/1 polytope of the graph, its skeleton and the
//!   certificates behind each claim;
//! * [`autengine`] computes automorphism groups and isomorphisms;
//! * [`pipeline`] assembles everything into a verification report.
//!
//! The `oracle` feature adds exponential-time reference engines used to
//! cross-check the fast paths.

pub mod autengine;
pub mod frucht;
pub mod graph;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod permgroup;
pub mod pipeline;
pub mod polytope;
pub mod report;
#[cfg(any(test, feature = "oracle"))]
pub mod sweep;
