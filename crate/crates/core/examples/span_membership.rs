//! Deciding membership in the Dax image of M_c with a certificate.

use std::time::Instant;

use neat_disks::manifold::make_mc;
use neat_disks::span::Membership;
use neat_disks::RingElement;

fn main() -> neat_disks::Result<()> {
    let m = make_mc(&[(-1, 1), (1, 2)], 0)?;
    let span = m.dax_image_span();
    println!("dax image: {span}");
    let f = RingElement::parse(m.group.clone(), "-t + t^2")?;
    let start = Instant::now();
    for probe in ["t", "t^3", "-2"] {
        let shift = RingElement::parse(m.group.clone(), probe)?;
        let x = (&shift * &f).norm_map()?;
        report(&x, span.membership(&x, 8)?);
    }
    let x = RingElement::parse(m.group.clone(), "t + t^-1")?;
    report(&x, span.membership(&x, 8)?);
    println!("elapsed: {:?}", start.elapsed());
    Ok(())
}

fn report(x: &RingElement, m: Membership) {
    match m {
        Membership::In(cert) => {
            let parts: Vec<String> = cert.iter().map(|(g, c)| format!("{c}*({g})")).collect();
            println!("{x}: in, = {}", parts.join(" + "));
        }
        other => println!("{x}: {}", other.tag()),
    }
}
