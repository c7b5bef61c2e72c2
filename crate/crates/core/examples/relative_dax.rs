//! Relative Dax invariants of homotopic disks in M_c.

use neat_disks::cli::parse_disk;
use neat_disks::manifold::make_mc;
use neat_disks::DiskGroup;

fn main() -> neat_disks::Result<()> {
    let dg = DiskGroup::new(make_mc(&[(-1, 1), (1, 2)], 0)?)?;
    let base = parse_disk(&dg, "U")?;
    for lit in ["fm(t + t^-1)", "fm(t^2 + t^-2)", "fm(t^3 + t^-3) * sec(S) * inv(sec(S))"] {
        let d = dg.relative_dax(&base, &parse_disk(&dg, lit)?)?;
        let canon = d.reduced.map_or("undecided".to_string(), |r| r.to_string());
        println!("Dax(U, {lit}) = {}, canonical form {canon}", d.raw);
    }
    Ok(())
}
