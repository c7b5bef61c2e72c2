//! The Freedman-Quinn invariant in F_2[T] modulo μ₃ for π = Z/2.

use neat_disks::manifold::closed_dax_s1xs2;
use neat_disks::{DiskGroup, RingElement};

fn main() -> neat_disks::Result<()> {
    let dg = DiskGroup::new(closed_dax_s1xs2())?;
    let group = dg.manifold().group.clone();
    let u = dg.identity();
    for lit in ["g", "2*g", "3*g", "5*g"] {
        let x = dg.fm(&RingElement::parse(group.clone(), lit)?)?;
        println!("fq(U, fm({lit})) = {}", dg.fq_pair(&u, &x)?);
    }
    Ok(())
}
