//! Normal forms, products and ordered enumeration in the supported groups.

use neat_disks::groups::GroupDescription;

fn main() -> neat_disks::Result<()> {
    let g = GroupDescription::free_product(vec![
        GroupDescription::cyclic("g", 2),
        GroupDescription::infinite_cyclic("t"),
    ]);
    let a = g.word(&[("g", 1), ("t", 2)])?;
    let b = g.word(&[("t", -2), ("g", 1)])?;
    println!("{} * {} = {}", g.format(&a), g.format(&b), g.format(&g.multiply(&a, &b)?));
    println!("inverse of {} is {}", g.format(&a), g.format(&g.invert(&a)));

    let f2 = GroupDescription::free(&["x", "y"]);
    for r in 0..4 {
        println!("ball of radius {r} in F(x,y): {} elements", f2.enumerate(r).len());
    }
    let first: Vec<String> = g.enumerate(2).iter().map(|e| g.format(e)).collect();
    println!("Z/2 * Z up to length 2: {}", first.join(", "));
    Ok(())
}
