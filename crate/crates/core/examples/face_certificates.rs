// Exact valid inequalities whose tight sets are edges and faces of the polytope.

use std::error::Error;

use grouptope::graph::Graph;
use grouptope::polytope::{build_polytope, face_certificate, FaceKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = build_polytope(&Graph::cycle(6))?;
    for kind in [
        FaceKind::SingletonEdge { u: 0, v: 2 },
        FaceKind::MixedEdge { v: 4, u: 0, w: 1 },
        FaceKind::TwoFace { v: 0, w: 1 },
        FaceKind::EdgePolytope,
    ] {
        let cert = face_certificate(&p, kind)?;
        let tight: Vec<String> = cert.tight_vertex_indices.iter().map(|&i| p.tag(i).to_string()).collect();
        print!("{}", cert.to_text());
        println!("tight vertices: {}\n", tight.join(", "));
    }
    // 0 and 1 are linked, so they do not span an edge
    if face_certificate(&p, FaceKind::SingletonEdge { u: 0, v: 1 }).is_ok() {
        return Err("accepted an edge certificate for linked nodes".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
