// Divisor classes of K(n,m) and the closed-form counts.

use disk_moduli::{divisor_census, Result};

pub fn run_example() -> Result<()> {
    let c = divisor_census(2, 2)?;
    println!(
        "K(2,2): interior {}, boundary {}, mixed {}",
        c.enumerated.interior, c.enumerated.boundary, c.enumerated.mixed
    );
    for d in &c.classes {
        println!("  {:?}  {} x {}  ({} strata)", d.collision, d.factors.0, d.factors.1, d.strata);
    }
    println!(
        "closed forms match: {:?}; codim-1 strata {} = sum of chamber products {}",
        c.closed_form_matches(),
        c.codim_one_strata,
        c.refinement_sum()
    );

    for n in 1..=3 {
        for m in 1..=4 {
            let c = divisor_census(n, m)?;
            assert_eq!(c.closed_form_matches(), Some(true));
            assert_eq!(c.refinement_matches(), Some(true));
        }
    }
    println!("closed forms hold for 1 <= n <= 3, 1 <= m <= 4");

    // outside the range of the closed forms the census is still enumerated, but flagged
    let c = divisor_census(0, 5)?;
    println!("K(0,5): {} classes, hypothesis violated: {}", c.classes.len(), c.hypothesis_violated);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
