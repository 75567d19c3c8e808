// The six-cycle: its skeleton has automorphisms that are not combinatorial,
// and augmenting the graph removes them.

use std::error::Error;

use grouptope::autengine::automorphism_group;
use grouptope::graph::{AugmentVariant, Graph};
use grouptope::permgroup::{Permutation, StabilizerChain};
use grouptope::polytope::{build_polytope, skeleton, VertexTag};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let c6 = Graph::cycle(6);
    let p = build_polytope(&c6)?;
    let s = skeleton(&p);
    let aut = automorphism_group(&c6);
    let skel = automorphism_group(s.graph());
    println!("|Aut(C6)| = {}, |Aut(skeleton)| = {}", aut.order, skel.order);

    // send every link vertex to the opposite link, fix everything else
    let k = p.vertex_count();
    let rho = Permutation::from_images(
        (0..k)
            .map(|i| match p.tag(i) {
                VertexTag::Link(u, w) => p.index_of_support(&[(u + 3) % 6, (w + 3) % 6]).unwrap(),
                _ => i,
            })
            .collect(),
    )?;
    let lifts: Vec<Permutation> = aut.generators.iter().map(|a| p.lift_automorphism(a)).collect::<Result<_, _>>()?;
    let image = StabilizerChain::new(k, &lifts, &[]);
    println!(
        "rho = {}: skeleton automorphism {}, in the lifted group {}",
        rho.to_cycle_string(),
        s.graph().is_automorphism(&rho),
        image.contains(&rho)
    );
    println!("exceptional pairs: {:?}", c6.exceptional_link_pairs());

    let aug = c6.augment(AugmentVariant::TwoNode)?;
    let pa = build_polytope(&aug)?;
    let aug_skel = automorphism_group(skeleton(&pa).graph());
    println!(
        "augmented: {} nodes, {} exceptional pairs, |Aut(skeleton)| = {}",
        aug.node_count(),
        aug.exceptional_link_pairs().len(),
        aug_skel.order
    );
    if aug_skel.order != aut.order || image.contains(&rho) {
        return Err("six-cycle example does not behave as expected".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
