//! Relative Euler numbers and the splitting homomorphism eta.

use neat_disks::manifold::make_mc;
use neat_disks::{DiskGroup, RingElement};

fn main() -> neat_disks::Result<()> {
    for framing in [0, 1] {
        let m = make_mc(&[(1, 1)], framing)?;
        let spin = m.is_spin();
        let dg = DiskGroup::new(m)?;
        let group = dg.manifold().group.clone();
        println!("framing {framing}, spin: {spin:?}");
        let s = dg.section(&dg.manifold().basis_class(1))?;
        for lit in ["0", "1", "-2 + t", "3"] {
            let x = dg.fm_act(&s, &RingElement::parse(group.clone(), lit)?)?;
            println!("  e(fm({lit}) * s(S)) = {}, eta = {}", dg.euler_rel(&x)?, dg.eta(&x)?);
        }
    }
    Ok(())
}
