// The single-arc collisions that get blown up, in order.

use disk_moduli::{building_set, Result};

pub fn run_example() -> Result<()> {
    for (n, m) in [(2, 2), (2, 1), (1, 2), (1, 3), (2, 3)] {
        let b = building_set(n, m)?;
        println!("b({n},{m}) has {} elements", b.len());
        for e in &b {
            println!("  2i+b = {}  naive codim {}  {:?}", e.grading, e.naive_codim, e.collision);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
