// How chambers fit together, and the Euler characteristic.

use disk_moduli::{chamber_adjacency, euler_characteristic, Result};

pub fn run_example() -> Result<()> {
    for (n, m) in [(0, 4), (0, 5), (1, 3), (1, 4), (2, 2)] {
        let a = chamber_adjacency(n, m)?;
        println!(
            "K({n},{m}): {} chambers, {} adjacent pairs, components {:?}",
            a.chambers.len(),
            a.edges.len(),
            a.component_sizes()
        );
    }
    for (n, m) in [(1, 2), (1, 3), (0, 4), (0, 5), (1, 4)] {
        println!("chi(K({n},{m})) = {}", euler_characteristic(n, m)?);
    }
    let err = euler_characteristic(2, 2).unwrap_err();
    println!("chi(K(2,2)): {}", err.code());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
