// Face poset of a whole space, with DOT and text exports.

use disk_moduli::{face_poset, is_graded, is_pure, poset_f_vector, Result};

pub fn run_example() -> Result<()> {
    let eye = face_poset(2, 1)?;
    println!("K(2,1): ranks {:?}, graded {}, pure {}", poset_f_vector(&eye)?, is_graded(&eye), is_pure(&eye));
    // the pupil is a closed circle with no vertex on it
    print!("{}", eye.to_text());
    print!("{}", eye.to_dot());

    let p = face_poset(1, 3)?;
    println!("K(1,3): {:?}, {} covers", poset_f_vector(&p)?, p.covers().len());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
