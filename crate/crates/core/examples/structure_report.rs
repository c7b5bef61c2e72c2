//! Full structure report through the command layer, as JSON.

use neat_disks::cli::{emit_spec, run_command, Command, Format, Options};
use neat_disks::manifold::closed_dax_s1xs2;

fn main() {
    let spec = emit_spec(&closed_dax_s1xs2());
    let out = run_command(&Command::DkStructure, &spec, &Options::default());
    print!("{}", out.render(Format::Json));
    println!("exit code {}", out.exit_code);
}
