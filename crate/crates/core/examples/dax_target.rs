//! Invariant factors of Z[π∖1]^σ modulo the Dax image, with a stability check.

use neat_disks::manifold::make_mc;
use neat_disks::span::Ambient;

fn main() -> neat_disks::Result<()> {
    for (terms, label) in [(vec![(2, 2)], "2t^2"), (vec![(3, 1)], "3t"), (vec![(-1, 1), (1, 2)], "-t + t^2")] {
        let m = make_mc(&terms, 0)?;
        for window in [6, 10] {
            let q = m.dax_image_span().quotient_structure(Ambient::SigmaFixed, window)?;
            println!("M_c({label}) window {window}: {q} (stable: {})", q.stable);
        }
    }
    Ok(())
}
