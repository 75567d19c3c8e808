// The star condition, its brute-force check, and the affine swap map that
// moves the Empty vertex when the condition fails.

use std::error::Error;

use grouptope::autengine::automorphism_group;
use grouptope::graph::Graph;
use grouptope::oracle::brute_condition_star;
use grouptope::polytope::{build_polytope, skeleton};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (name, g) in [("path P3", Graph::path(3)), ("star K1,3", Graph::star(3)), ("six-cycle", Graph::cycle(6))] {
        let fast = g.check_condition_star();
        let brute = brute_condition_star(&g)?;
        println!("{name}: {:?} (brute force {:?}), witness {:?}", fast.status, brute.status, fast.witness);
        if fast.status != brute.status {
            return Err(format!("{name}: fast and brute-force checks disagree").into());
        }
        let p = build_polytope(&g)?;
        let s = skeleton(&p);
        if fast.holds() {
            let fixed = automorphism_group(s.graph()).generators.iter().all(|b| b.fixes(p.empty_index()));
            println!("  every skeleton automorphism fixes Empty: {fixed}");
        } else {
            let t = p.lemma_t_map(&fast)?;
            let pairs: Vec<String> = t
                .cycles()
                .iter()
                .map(|c| c.iter().map(|&i| p.tag(i).to_string()).collect::<Vec<_>>().join(" <-> "))
                .collect();
            println!("  swap map: {}", pairs.join(", "));
            println!("  skeleton automorphism: {}", s.graph().is_automorphism(&t));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
