// Parse group specs, realize them as permutation groups and read off orders.

use std::error::Error;

use grouptope::permgroup::{parse_group_spec, realize_group, Permutation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["cyclic 5", "dihedral 4", "quaternion8", "product cyclic 2 ; cyclic 4", "gens (0 1 2)(3 4)"] {
        let spec = parse_group_spec(text)?;
        let group = realize_group(&spec);
        println!(
            "{spec:<28} degree {:>2}  order {:>2}  generators {}  minimum {:?}",
            group.degree(),
            group.order(),
            group.generators().len(),
            group.minimum_generator_count()
        );
    }

    let q8 = realize_group(&parse_group_spec("quaternion8")?);
    let elements = q8.enumerate_elements()?;
    let involutions = elements.iter().filter(|g| g.order() == 2).count();
    println!("quaternion8 has {} elements, {involutions} of order two", elements.len());
    if elements.len() != 8 || involutions != 1 {
        return Err("quaternion group has the wrong shape".into());
    }

    // composition applies the right factor first
    let a = Permutation::from_cycles(&[vec![0, 1]], 3)?;
    let b = Permutation::from_cycles(&[vec![1, 2]], 3)?;
    println!("(0 1)·(1 2) = {}", a.compose(&b).to_cycle_string());

    if parse_group_spec("gens (0 1").is_ok() {
        return Err("unbalanced cycle accepted".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
