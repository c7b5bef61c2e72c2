//! Arithmetic in Z[π]: products, the involution, the norm map and reductions.

use std::sync::Arc;

use neat_disks::groups::GroupDescription;
use neat_disks::RingElement;

fn main() -> neat_disks::Result<()> {
    let z = Arc::new(GroupDescription::infinite_cyclic("t"));
    let f = RingElement::parse(z.clone(), "-t + t^2")?;
    let g = RingElement::parse(z.clone(), "1 + t^-1")?;
    println!("f = {f}");
    println!("f * g = {}", &f * &g);
    println!("bar(f) = {}", f.bar());
    println!("norm(f) = {}", f.norm_map()?);
    let x = RingElement::parse(z.clone(), "3*t^-2 + t + t^2")?;
    println!("{x} reduced mod (g - g^-1) = {}", x.reduce_mod_antisymmetric()?);

    let c2 = Arc::new(GroupDescription::cyclic("g", 2));
    let y = RingElement::parse(c2, "3*g")?;
    println!("{y} in F_2[T] = {}", y.reduce_to_f2_torsion()?);
    Ok(())
}
