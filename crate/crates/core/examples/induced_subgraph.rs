// Any graph on d nodes is an induced subgraph of the skeleton of a binary
// combinatorial polytope of dimension d.

use std::error::Error;

use grouptope::graph::{graph6_decode, graph6_encode, Graph};
use grouptope::pipeline::demo_induced_subgraph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let petersen = Graph::petersen();
    let g6 = graph6_encode(&petersen)?;
    let demo = demo_induced_subgraph(&graph6_decode(&g6)?)?;
    println!(
        "Petersen ({g6}) sits in a {}-dimensional polytope with {} vertices, combinatorial {}",
        demo.dimension, demo.polytope_vertices, demo.combinatorial
    );
    println!("node -> skeleton vertex: {:?}", demo.embedding);
    if !demo.combinatorial {
        return Err("host polytope is not combinatorial".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
