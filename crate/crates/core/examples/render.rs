// Schematic pictures of arc systems and their dual trees.
//
// Writes SVG files into the system temp directory.

use disk_moduli::render::{dual_tree, render_svg};
use disk_moduli::{BubbleTree, Result};

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir();
    for (name, enc) in [
        ("trivial", "(i1|b1)"),
        ("loop", "(S(i1,i2)|b1)"),
        ("corner", "K(2,1):(i2|F[P(i1|),b1])"),
        ("nested", "(i1|F[b1,F[b2,b3]],b4)"),
    ] {
        let tree: BubbleTree = enc.parse()?;
        tree.validate()?;
        let path = dir.join(format!("disk-moduli-{name}.svg"));
        std::fs::write(&path, render_svg(&tree)).map_err(|e| disk_moduli::Error::Parse(e.to_string()))?;
        println!("{enc} -> {}", path.display());
    }
    print!("{}", dual_tree(&"K(2,1):(i2|F[P(i1|),b1])".parse()?).to_dot());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
