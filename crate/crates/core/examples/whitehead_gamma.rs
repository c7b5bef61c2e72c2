//! Whitehead's quadratic function on π₂ of M_c and its image generators.

use neat_disks::gamma::evaluate_quadratic;
use neat_disks::manifold::make_mc;

fn main() -> neat_disks::Result<()> {
    let m = make_mc(&[(-1, 1), (1, 2)], 0)?;
    let q = m.quadratic_data();
    for x in [[0, 1], [0, 2], [0, -1], [1, 3]] {
        println!("q({:?}) = {}", x, evaluate_quadratic(&q, &x)?);
    }
    let gens: Vec<String> = q.gamma_image_generators().iter().map(|r| r.to_string()).collect();
    println!("Gamma image generators: [{}]", gens.join(", "));
    Ok(())
}
