//! Cross-checks of every fast routine against its oracle over small graphs,
//! either all labelled graphs on `n` nodes or a seeded random sample.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::autengine::{are_isomorphic, automorphism_group, automorphism_group_colored, Coloring};
use crate::graph::{graph6_encode, AugmentVariant, Graph, StarStatus};
use crate::oracle::{brute_automorphisms, brute_condition_star, lp_adjacent, BRUTE_AUT_LIMIT};
use crate::permgroup::Permutation;
use crate::polytope::{
    build_polytope, diameter, empty_neighborhood, neighborhood_complement_iso, skeleton, verify_combinatorial,
    VertexTag,
};

/// Largest node count swept exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 6;

/// Counterexamples kept per invariant.
const KEPT_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub nodes: usize,
    /// `None` sweeps every labelled graph on `nodes` nodes.
    pub samples: Option<usize>,
    pub seed: u64,
    /// Compare the skeleton with exact-LP adjacency on every vertex pair.
    pub lp: bool,
}

impl SweepOptions {
    pub fn exhaustive(nodes: usize) -> Self {
        SweepOptions {
            nodes,
            samples: None,
            seed: 0,
            lp: nodes <= 5,
        }
    }

    pub fn sampled(nodes: usize, samples: usize, seed: u64) -> Self {
        SweepOptions {
            nodes,
            samples: Some(samples),
            seed,
            lp: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvariantTally {
    pub checked: usize,
    pub failed: usize,
    /// graph6 strings of failing graphs.
    pub counterexamples: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub nodes: usize,
    pub graphs: usize,
    pub invariants: BTreeMap<String, InvariantTally>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.invariants.values().all(|t| t.failed == 0)
    }

    pub fn tally(&self, name: &str) -> Option<&InvariantTally> {
        self.invariants.get(name)
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.graphs += other.graphs;
        for (name, t) in other.invariants {
            let mine = self.invariants.entry(name).or_default();
            mine.checked += t.checked;
            mine.failed += t.failed;
            mine.counterexamples.extend(t.counterexamples);
            mine.counterexamples.sort();
            mine.counterexamples.truncate(KEPT_COUNTEREXAMPLES);
        }
        self
    }
}

/// Error for sweeps that would be too large to run exhaustively.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("exhaustive sweeps stop at {EXHAUSTIVE_LIMIT} nodes; pass a sample count for {0} nodes")]
pub struct SweepTooLarge(pub usize);

pub fn sweep_graphs(opts: &SweepOptions) -> Result<SweepReport, SweepTooLarge> {
    let n = opts.nodes;
    let pairs = n * n.saturating_sub(1) / 2;
    let masks: Vec<u64> = match opts.samples {
        None if n > EXHAUSTIVE_LIMIT => return Err(SweepTooLarge(n)),
        None => (0..1u64 << pairs).collect(),
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            (0..k)
                .map(|_| (0..pairs).fold(0u64, |m, b| m | (rng.gen::<bool>() as u64) << b))
                .collect()
        }
    };
    let report = masks
        .par_iter()
        .map(|&mask| check_graph(&Graph::from_pair_mask(n, mask), opts.lp))
        .reduce(SweepReport::default, SweepReport::merge);
    Ok(SweepReport { nodes: n, ..report })
}

struct Recorder {
    report: SweepReport,
    g6: String,
}

impl Recorder {
    fn record(&mut self, name: &str, ok: bool) {
        let t = self.report.invariants.entry(name.to_string()).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
            t.counterexamples.push(self.g6.clone());
        }
    }
}

/// Runs every invariant on one graph.
pub fn check_graph(g: &Graph, with_lp: bool) -> SweepReport {
    let n = g.node_count();
    let mut r = Recorder {
        report: SweepReport {
            nodes: n,
            graphs: 1,
            invariants: BTreeMap::new(),
        },
        g6: graph6_encode(g).expect("small graph"),
    };
    let p = build_polytope(g).expect("at least one node");
    let s = skeleton(&p);
    let k = p.vertex_count();

    r.record("vertex_count", k == 1 + n + g.link_count());
    r.record("affine_dimension", p.affine_dimension() == n);
    if with_lp {
        let agree = (0..k).all(|i| (i + 1..k).all(|j| lp_adjacent(&p, i, j) == s.adjacent(i, j)));
        r.record("skeleton_matches_lp", agree);
    }
    r.record("diameter_at_most_2", diameter(&s).is_some_and(|d| d <= 2));
    r.record(
        "neighborhood_is_complement",
        neighborhood_complement_iso(&p, &s) && are_isomorphic(&g.complement(), &empty_neighborhood(&s, &p)).is_some(),
    );
    r.record("combinatorial", verify_combinatorial(&p, &s).passed());

    let fast = g.check_condition_star();
    let brute = brute_condition_star(g).expect("small graph");
    r.record(
        "star_matches_brute_force",
        fast.status == brute.status && fast.witness.as_ref().map_or(true, |w| w.is_valid_for(g)),
    );

    let aut_skel = automorphism_group(s.graph());
    match fast.status {
        StarStatus::Violated => {
            let moved = p
                .lemma_t_map(&fast)
                .is_ok_and(|t| !t.fixes(p.empty_index()) && s.graph().is_automorphism(&t));
            r.record("swap_map_moves_empty", moved);
        }
        StarStatus::Holds => {
            let fixed = aut_skel.generators.iter().all(|b| b.fixes(p.empty_index()));
            r.record("skeleton_generators_fix_empty", fixed);
        }
        StarStatus::NoLinks => {}
    }

    // skeleton automorphisms fixing Empty and every Singleton are trivial
    // unless an exceptional pair exists
    let exceptional = g.exceptional_link_pairs();
    let pinned: Vec<usize> = (0..k).map(|i| if matches!(p.tag(i), VertexTag::Link(..)) { 0 } else { i + 1 }).collect();
    let pointwise = automorphism_group_colored(s.graph(), &Coloring::from_colors(&pinned));
    if pointwise.order > 1u32.into() {
        r.record("extra_automorphism_needs_exceptional_pair", !exceptional.is_empty());
    }
    // without four-cycles, swapping the link vertices of an exceptional pair
    // is a skeleton automorphism
    let four_cycle_free = !g.has_four_cycle();
    for pair in exceptional.iter().filter(|_| four_cycle_free) {
        let e = p.index_of(VertexTag::Link(pair.e.0, pair.e.1)).unwrap();
        let f = p.index_of(VertexTag::Link(pair.f.0, pair.f.1)).unwrap();
        let swap = Permutation::from_cycles(&[vec![e, f]], k).unwrap();
        r.record("exceptional_swap_is_automorphism", s.graph().is_automorphism(&swap));
    }

    let aut = automorphism_group(g);
    if n <= BRUTE_AUT_LIMIT.min(7) {
        let brute = brute_automorphisms(g).expect("small graph").len();
        r.record("aut_order_matches_brute_force", aut.order == brute.into());
    }
    r.record("complement_same_aut_order", automorphism_group(&g.complement()).order == aut.order);
    let lifts_ok = aut.generators.iter().all(|a| {
        p.lift_automorphism(a).is_ok_and(|f| {
            f.fixes(p.empty_index())
                && s.graph().is_automorphism(&f)
                && (0..k).all(|i| std::mem::discriminant(&p.tag(i)) == std::mem::discriminant(&p.tag(f.apply(i))))
        })
    });
    r.record("lift_is_tag_preserving_automorphism", lifts_ok);

    let aug = g.augment(AugmentVariant::TwoNode).expect("two-node augmentation always applies");
    r.record("augmented_satisfies_star", aug.check_condition_star().holds());
    r.record("augmented_has_no_exceptional_pairs", aug.exceptional_link_pairs().is_empty());
    // an isolated node becomes a three-node path whose ends can be flipped,
    // so the order only survives when every node has a neighbour
    let isolated = (0..n).filter(|&v| g.degree(v) == 0).count();
    let aug_order = automorphism_group(&aug).order;
    r.record("augmented_aut_order", aug_order == aut.order.clone() << isolated);
    if isolated == 0 {
        r.record("augmented_same_aut_order", aug_order == aut.order);
    }
    r.report
}
