//! Finger-move realizations of polynomials in tZ[t] and their reassembly.

use std::sync::Arc;

use neat_disks::groups::GroupDescription;
use neat_disks::manifold::{assemble_polynomial, polynomial_terms, realize_polynomial};
use neat_disks::RingElement;

fn main() -> neat_disks::Result<()> {
    let z = Arc::new(GroupDescription::infinite_cyclic("t"));
    for lit in ["-t + t^2", "2*t^3", "t - 3*t^4"] {
        let f = RingElement::parse(z.clone(), lit)?;
        let moves = realize_polynomial(&polynomial_terms(&f)?)?;
        let steps: Vec<String> = moves
            .iter()
            .map(|m| format!("{}t^{}", if m.sign < 0 { "-" } else { "+" }, m.exponent))
            .collect();
        println!("{f}: {} -> {:?}", steps.join(" "), assemble_polynomial(&moves));
    }
    Ok(())
}
