// Build a graph whose automorphism group is a given group, with the explicit
// action of each group element on it.

use std::error::Error;

use grouptope::autengine::automorphism_group;
use grouptope::frucht::{cayley_color_digraph, frucht_graph, verify_action};
use grouptope::graph::graph6_encode;
use grouptope::permgroup::{parse_group_spec, realize_group};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let group = realize_group(&parse_group_spec("symmetric 3")?);
    let digraph = cayley_color_digraph(&group)?;
    println!(
        "Cayley colour digraph: {} elements, {} arcs, {} colours, involution flags {:?}",
        digraph.elements.len(),
        digraph.arcs.len(),
        digraph.color_count(),
        digraph.involution_flags
    );

    let r = frucht_graph(&group)?;
    let aut = automorphism_group(&r.graph);
    println!(
        "Frucht graph: {} nodes, {} links, |Aut| = {}",
        r.graph.node_count(),
        r.graph.link_count(),
        aut.order
    );
    println!("graph6: {}", graph6_encode(&r.graph)?);
    for (g, phi) in r.elements.iter().zip(&r.phi).take(3) {
        println!("phi({}) moves {} nodes", g.to_cycle_string(), (0..phi.degree()).filter(|&v| !phi.fixes(v)).count());
    }
    if &aut.order != group.order() || !verify_action(&r, &group) {
        return Err("Frucht graph does not realize the group".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
