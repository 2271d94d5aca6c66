// Counting strata by codimension, and chambers against (m-1)!.

use disk_moduli::{chambers, enumerate_strata, f_vector, Result};

pub fn run_example() -> Result<()> {
    for (n, m) in [(1, 3), (2, 1), (2, 2), (0, 5), (1, 4)] {
        let c = chambers(n, m)?;
        println!(
            "K({n},{m}): f = {:?}, chambers {} (formula {})",
            f_vector(n, m)?,
            c.enumerated,
            c.formula
        );
    }
    println!("walls of K(1,3):");
    for s in enumerate_strata(1, 3, 1)? {
        let fs: Vec<String> = s.factors().iter().map(|f| f.to_string()).collect();
        println!("  {s}  {}", fs.join(" x "));
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
