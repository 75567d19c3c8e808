// The 0/1 polytope of a graph, its skeleton from the adjacency rules, and the
// midpoint property that makes it combinatorial.

use std::error::Error;

use grouptope::graph::Graph;
use grouptope::polytope::{build_polytope, diameter, midpoint_witness, skeleton, verify_combinatorial, VertexTag};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // a single link gives the unit square
    let p = build_polytope(&Graph::complete(2))?;
    print!("{}", p.to_vertex_file());
    print!("{}", p.to_tag_file());
    let s = skeleton(&p);
    println!("square skeleton links: {:?}", s.graph().links());
    let empty = p.empty_index();
    let link = p.index_of(VertexTag::Link(0, 1)).ok_or("missing link vertex")?;
    println!("midpoint witness for E and L 0 1: {:?}", midpoint_witness(&p, empty, link));

    // the four-cycle: opposite links are not adjacent
    let c4 = Graph::cycle(4);
    let p = build_polytope(&c4)?;
    let s = skeleton(&p);
    let e = p.index_of(VertexTag::Link(0, 1)).ok_or("missing link vertex")?;
    let f = p.index_of(VertexTag::Link(2, 3)).ok_or("missing link vertex")?;
    println!(
        "C4: {} vertices, affine dimension {}, L 0 1 ~ L 2 3: {}, witness {:?}",
        p.vertex_count(),
        p.affine_dimension(),
        s.adjacent(e, f),
        midpoint_witness(&p, e, f).map(|(k, l)| (p.tag(k).to_string(), p.tag(l).to_string()))
    );
    let report = verify_combinatorial(&p, &s);
    println!("combinatorial: {}, diameter {:?}", report.passed(), diameter(&s));
    if !report.passed() || diameter(&s) != Some(2) {
        return Err("C4 polytope is not combinatorial with diameter 2".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
