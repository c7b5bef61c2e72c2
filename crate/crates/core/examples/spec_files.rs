//! Reading the bundled spec files and writing them back out.

use neat_disks::cli::{emit_group, emit_spec, parse_spec};

fn main() -> neat_disks::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/specs");
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .expect("specs directory")
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    paths.sort();
    for p in paths {
        let text = std::fs::read_to_string(&p).expect("readable");
        let m = parse_spec(&text)?;
        let again = parse_spec(&emit_spec(&m))?;
        println!(
            "{}: {} (rank {}, pi1 {}), round trip {}",
            p.file_name().unwrap().to_string_lossy(),
            m.name,
            m.rank(),
            emit_group(&m.group),
            if again == m { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
