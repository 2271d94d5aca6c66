// Flipping flat bubbles and deleting arcs.

use disk_moduli::{flip, merge_bubble, BubbleTree, Result};

pub fn run_example() -> Result<()> {
    let tree: BubbleTree = "K(1,3):(i1|F[b1,b2],b3)".parse()?;
    for path in tree.bubble_paths() {
        println!("bubble at {path}: {:?}", tree.bubble_kind(&path)?);
        let once = flip(&tree, &path)?;
        assert_eq!(flip(&once, &path)?, tree);
        println!("  flipped: {once}");
        // a flat bubble merges back in both orders
        for s in merge_bubble(&tree, &path)? {
            println!("  merges into {s} (codim {})", s.codim());
        }
    }

    let corner: BubbleTree = "K(2,1):(i2|F[P(i1|),b1])".parse()?;
    for path in corner.bubble_paths() {
        let up = merge_bubble(&corner, &path)?;
        println!("{corner} at {path} -> {}", up[0]);
    }

    // punctured bubbles cannot be flipped
    let err = flip(&corner, &"b0.b0".parse()?).unwrap_err();
    println!("flip b0.b0: {}", err.code());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
