//! Products, inverses and commutators in the disk group of the non-abelian example.

use neat_disks::manifold::non_abelian_example;
use neat_disks::{DiskGroup, RingElement};

fn main() -> neat_disks::Result<()> {
    let dg = DiskGroup::new(non_abelian_example())?;
    let m = dg.manifold().clone();
    let g = RingElement::parse(m.group.clone(), "g")?;
    let x = dg.section(&m.basis_class(1).scale(&g))?;
    let y = dg.section(&m.basis_class(2))?;
    let xy = dg.multiply(&x, &y)?;
    println!("x = {x}\ny = {y}\nxy = {xy}");
    println!("x^-1 = {}", dg.inverse(&x)?);
    let c = dg.commutator(&x, &y)?;
    println!("[x, y] = {c}");
    println!("[x, y] trivial: {}", dg.equal(&c, &dg.identity())?.as_str());
    println!("homotopy class of fm(g) * x: {}", dg.homotopy_class(&dg.fm_act(&x, &g)?)?.display_with(&m.basis));
    Ok(())
}
