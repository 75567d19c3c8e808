// Automorphism groups by colour refinement and backtracking, checked against
// brute force.

use std::error::Error;

use grouptope::autengine::{are_isomorphic, automorphism_group, wl_refine, Coloring};
use grouptope::graph::Graph;
use grouptope::oracle::brute_automorphisms;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let petersen = Graph::petersen();
    let aut = automorphism_group(&petersen);
    println!("Petersen: |Aut| = {} from {} generators", aut.order, aut.generators.len());
    for g in &aut.generators {
        println!("  {}", g.to_cycle_string());
    }

    let path = Graph::path(3);
    let classes = wl_refine(&path, &Coloring::uniform(3)).classes();
    println!("refined classes of P3: {classes:?}");

    for (name, g) in [("C6", Graph::cycle(6)), ("K1,3", Graph::star(3)), ("P5", Graph::path(5))] {
        let fast = automorphism_group(&g).order;
        let brute = brute_automorphisms(&g)?.len();
        println!("{name}: engine {fast}, brute force {brute}");
        if fast != brute.into() {
            return Err(format!("{name}: orders disagree").into());
        }
    }

    let triangles = Graph::from_links(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])?;
    println!("C6 isomorphic to two triangles: {}", are_isomorphic(&Graph::cycle(6), &triangles).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
