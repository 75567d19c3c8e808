// Fast engines against their exponential-time oracles, plus randomized
// invariants of the polytope, the lift and the exact simplex.

use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grouptope::autengine::{automorphism_group, wl_refine, Coloring};
use grouptope::frucht::{frucht_graph, verify_action};
use grouptope::graph::{graph6_decode, graph6_encode, Graph};
use grouptope::oracle::{brute_automorphisms, brute_condition_star, lp_adjacent, midpoint_problem, segment_problem};
use grouptope::permgroup::{Permutation, PermutationGroup};
use grouptope::polytope::{build_polytope, midpoint_witness, skeleton, tags_adjacent};

/// Hard ceiling on simplex pivots for the instance sizes used here.
const PIVOT_CEILING: usize = 2_000;

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    Graph::from_pair_mask(n, rng.gen::<u64>() & ((1u64 << pairs) - 1))
}

fn arb_graph(max_nodes: usize) -> impl Strategy<Value = Graph> {
    (1..=max_nodes, any::<u64>()).prop_map(|(n, mask)| {
        let pairs = n * (n - 1) / 2;
        Graph::from_pair_mask(n, if pairs == 0 { 0 } else { mask & ((1u64 << pairs) - 1) })
    })
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn automorphism_orders_match_brute_force_up_to_five_nodes() {
    for n in 0usize..=5 {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            let g = Graph::from_pair_mask(n, mask);
            let brute = brute_automorphisms(&g).unwrap().len();
            let aut = automorphism_group(&g);
            assert_eq!(aut.order, brute.into(), "{}", graph6_encode(&g).unwrap());
            assert!(aut.generators.iter().all(|a| g.is_automorphism(a)));
        }
    }
}

#[test]
fn automorphism_orders_match_brute_force_on_random_six_and_seven_nodes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..500 {
        let g = random_graph(6 + i % 2, &mut rng);
        let brute = brute_automorphisms(&g).unwrap();
        let aut = automorphism_group(&g);
        assert_eq!(aut.order, brute.len().into(), "{}", graph6_encode(&g).unwrap());
        // every brute-force automorphism lies in the generated group
        let chain = aut.stabilizer_chain(g.node_count());
        assert!(brute.iter().all(|a| chain.contains(a)));
    }
}

#[test]
fn star_condition_matches_brute_force_on_random_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..300 {
        let g = random_graph(7 + i % 4, &mut rng);
        let fast = g.check_condition_star();
        let brute = brute_condition_star(&g).unwrap();
        assert_eq!(fast.status, brute.status, "{}", graph6_encode(&g).unwrap());
        if let Some(w) = &fast.witness {
            assert!(w.is_valid_for(&g));
        }
    }
}

#[test]
fn segment_and_midpoint_systems_on_the_six_cycle() {
    let p = build_polytope(&Graph::cycle(6)).unwrap();
    let k = p.vertex_count();
    for i in 0..k {
        for j in i + 1..k {
            let seg = segment_problem(&p, i, j);
            let out = seg.solve_phase1(false);
            let ceiling = binomial(seg.rows.len() + seg.variable_count(), seg.rows.len());
            assert!(BigUint::from(out.pivots) <= ceiling);
            assert!(out.pivots <= PIVOT_CEILING);
            assert!(out.objective_trace.windows(2).all(|w| w[1] <= w[0]));
            assert!(out.objective_trace.last().unwrap().is_zero() == out.feasible);
            // an edge midpoint is never a convex combination of other vertices
            if !out.feasible {
                assert!(!midpoint_problem(&p, i, j).solve_phase1(false).feasible);
            }
        }
    }
}

#[test]
fn frucht_realizes_random_permutation_groups() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut built = 0;
    while built < 12 {
        let degree = rng.gen_range(3..=5);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let mut images: Vec<usize> = (0..degree).collect();
                for i in (1..degree).rev() {
                    images.swap(i, rng.gen_range(0..=i));
                }
                Permutation::from_images(images).unwrap()
            })
            .collect();
        let group = PermutationGroup::new(degree, gens).unwrap();
        if group.order_usize().is_some_and(|k| k < 3 || k > 24) {
            continue;
        }
        let r = frucht_graph(&group).unwrap();
        assert_eq!(&automorphism_group(&r.graph).order, group.order());
        assert!(verify_action(&r, &group));
        built += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polytope_shape(g in arb_graph(8)) {
        let p = build_polytope(&g).unwrap();
        prop_assert_eq!(p.vertex_count(), 1 + g.node_count() + g.link_count());
        prop_assert_eq!(p.affine_dimension(), g.node_count());
        prop_assert!(p.vertices().iter().all(|v| v.coords.iter().all(|&x| x <= 1)));
        prop_assert_eq!(p.empty_index(), 0);
    }

    #[test]
    fn lp_adjacency_is_symmetric_and_matches_the_rules(g in arb_graph(5), seed in any::<u64>()) {
        let p = build_polytope(&g).unwrap();
        let k = p.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..8 {
            let i = rng.gen_range(0..k);
            let j = rng.gen_range(0..k);
            if i == j {
                continue;
            }
            let forward = lp_adjacent(&p, i, j);
            prop_assert_eq!(forward, lp_adjacent(&p, j, i));
            prop_assert_eq!(forward, tags_adjacent(&g, p.tag(i), p.tag(j)));
        }
    }

    #[test]
    fn nonadjacent_pairs_have_midpoint_witnesses(g in arb_graph(8)) {
        let p = build_polytope(&g).unwrap();
        let s = skeleton(&p);
        let k = p.vertex_count();
        for i in 0..k {
            for j in i + 1..k {
                let w = midpoint_witness(&p, i, j);
                prop_assert_eq!(w.is_none(), s.adjacent(i, j));
                if let Some((a, b)) = w {
                    let lhs: Vec<u8> = (0..p.ambient_dimension())
                        .map(|u| p.vertices()[a].coords[u] + p.vertices()[b].coords[u])
                        .collect();
                    let rhs: Vec<u8> = (0..p.ambient_dimension())
                        .map(|u| p.vertices()[i].coords[u] + p.vertices()[j].coords[u])
                        .collect();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn lift_is_a_homomorphism(g in arb_graph(7), seed in any::<u64>()) {
        let p = build_polytope(&g).unwrap();
        let s = skeleton(&p);
        let aut = automorphism_group(&g);
        let chain = aut.stabilizer_chain(g.node_count());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let a = chain.random_element(&mut rng);
            let b = chain.random_element(&mut rng);
            let fa = p.lift_automorphism(&a).unwrap();
            let fab = p.lift_automorphism(&a.compose(&b)).unwrap();
            prop_assert_eq!(fab, fa.compose(&p.lift_automorphism(&b).unwrap()));
            prop_assert!(s.graph().is_automorphism(&fa));
            prop_assert_eq!(p.induced_node_permutation(&fa), Some(a));
        }
    }

    #[test]
    fn complement_is_an_involution_with_the_same_group(g in arb_graph(7)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(automorphism_group(&g.complement()).order, automorphism_group(&g).order);
    }

    #[test]
    fn refinement_is_equitable_and_invariant(g in arb_graph(7)) {
        let c = wl_refine(&g, &Coloring::uniform(g.node_count()));
        prop_assert!(c.refines(&Coloring::uniform(g.node_count())));
        for class in c.classes() {
            let profile = |u: usize| {
                let mut v: Vec<usize> = g.neighbors(u).iter().map(|&w| c.colors()[w]).collect();
                v.sort_unstable();
                v
            };
            prop_assert!(class.iter().all(|&u| profile(u) == profile(class[0])));
        }
        for a in brute_automorphisms(&g).unwrap() {
            prop_assert!((0..g.node_count()).all(|u| c.colors()[u] == c.colors()[a.apply(u)]));
        }
    }

    #[test]
    fn graph6_decodes_what_it_encodes(g in arb_graph(11)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g).unwrap()).unwrap(), g);
    }
}
