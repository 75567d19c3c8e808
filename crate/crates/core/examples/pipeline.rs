// The whole construction for one group, with every property checked and the
// artifacts written to a directory.

use std::error::Error;

use grouptope::permgroup::parse_group_spec;
use grouptope::pipeline::{run_pipeline, write_artifacts, PipelineOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = parse_group_spec("cyclic 3")?;
    let opts = PipelineOptions {
        emit_certificates: true,
        ..PipelineOptions::full()
    };
    let run = run_pipeline(&spec, &opts)?;
    let r = &run.report;
    println!(
        "{}: graph with {} nodes, polytope with {} vertices in dimension {}",
        r.group.spec, r.graph.nodes, r.polytope.vertex_count, r.polytope.ambient_dimension
    );
    println!(
        "|G| = {}, |Aut(graph)| = {:?}, |Aut(skeleton)| = {}",
        r.aut_orders.group, r.aut_orders.graph, r.aut_orders.skeleton
    );
    for c in r.checks.all() {
        println!("  {:<12} {:?}  {}", c.name, c.status, c.detail);
    }

    let dir = std::env::temp_dir().join("grouptope-pipeline-example");
    write_artifacts(&run, &dir, true)?;
    let mut files: Vec<String> = std::fs::read_dir(&dir)?
        .map(|e| e.map(|e| e.file_name().to_string_lossy().into_owned()))
        .collect::<Result<_, _>>()?;
    files.sort();
    println!("wrote {} to {}", files.join(", "), dir.display());

    // a segment stands in for the graph when the group has order two
    let segment = run_pipeline(&parse_group_spec("cyclic 2")?, &PipelineOptions::default())?;
    println!("cyclic 2: {:?} with diameter {:?}", segment.report.graph.construction, segment.report.polytope.diameter);

    if !r.passed || !segment.report.passed {
        return Err("pipeline reported a failure".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
