// Building, validating and normalizing bubble trees.
//
// ```bash
// cargo run --example trees
// ```

use disk_moduli::{canonicalize, factors, oriented_form, BubbleTree, Result};

pub fn run_example() -> Result<()> {
    // the corner of the eye: a puncture nested in a flat bubble
    let corner: BubbleTree = "K(2,1):(i2|F[P(i1|),b1])".parse()?;
    corner.validate()?;
    let (codim, dim) = corner.codim_dim()?;
    println!("{corner}: codim {codim}, dim {dim}");
    for f in factors(&corner)? {
        println!("  factor {f} of dimension {}", f.dimension());
    }

    // a flip of the flat bubble names the same stratum, but a different face
    let flipped: BubbleTree = "K(2,1):(i2|F[b1,P(i1|)])".parse()?;
    assert_eq!(canonicalize(&corner)?, canonicalize(&flipped)?);
    assert_ne!(oriented_form(&corner)?, oriented_form(&flipped)?);
    println!("canonical: {}", canonicalize(&corner)?);

    // the anchor ip2 may not enter a disk bubble
    let bad: BubbleTree = "K(2,1):(i1|F[P(i2|),b1])".parse()?;
    let err = bad.validate().unwrap_err();
    println!("rejected {bad}: {} ({err})", err.code());

    // the JSON form round-trips
    let json = disk_moduli::wire::tree_to_json(&corner);
    assert_eq!(disk_moduli::wire::tree_from_json(&json)?, corner);
    println!("{json}");
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
