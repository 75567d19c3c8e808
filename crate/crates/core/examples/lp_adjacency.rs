// Geometric vertex adjacency by exact rational linear programming.

use std::error::Error;

use grouptope::graph::Graph;
use grouptope::oracle::{lp_adjacent, segment_problem};
use grouptope::polytope::{build_polytope, skeleton, VertexTag};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = build_polytope(&Graph::cycle(6))?;
    let s = skeleton(&p);
    let e = p.index_of(VertexTag::Link(0, 1)).ok_or("missing link vertex")?;
    let f = p.index_of(VertexTag::Link(3, 4)).ok_or("missing link vertex")?;
    let outcome = segment_problem(&p, e, f).solve_phase1(false);
    println!(
        "C6, L 0 1 vs L 3 4: feasible {}, {} pivots, adjacent by LP {}, by the rules {}",
        outcome.feasible,
        outcome.pivots,
        lp_adjacent(&p, e, f),
        s.adjacent(e, f)
    );

    let k = p.vertex_count();
    let mismatches = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| lp_adjacent(&p, i, j) != s.adjacent(i, j))
        .count();
    println!("C6: {} vertex pairs, {mismatches} disagreements", k * (k - 1) / 2);

    let square = build_polytope(&Graph::complete(2))?;
    let diagonal = segment_problem(&square, 0, 3).solve_phase1(true);
    println!("square diagonal is an edge: {}", !diagonal.feasible);
    if let Some(point) = diagonal.solution {
        let text: Vec<String> = point.iter().map(|x| x.to_string()).collect();
        println!("  certificate point: {}", text.join(" "));
    }
    if mismatches > 0 {
        return Err("LP adjacency disagrees with the skeleton".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
