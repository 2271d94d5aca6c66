// Tiles of single chambers: associahedra for n = 0, cyclohedra for n = 1.

use disk_moduli::{
    associahedron_poset, catalan, chamber_closure_poset, cyclohedron_poset, enumerate_strata, poset_f_vector,
    poset_isomorphic, Result,
};

pub fn run_example() -> Result<()> {
    for m in [4, 5] {
        let k = associahedron_poset(m as usize - 1)?;
        for chamber in enumerate_strata(0, m, 0)?.iter().take(3) {
            let tile = chamber_closure_poset(0, m, chamber)?;
            println!(
                "K(0,{m}) tile at {chamber}: {:?}, iso to K_{}: {}",
                poset_f_vector(&tile.poset)?,
                m - 1,
                poset_isomorphic(&tile.poset, &k)?
            );
        }
    }

    for n in 2..=7 {
        let f = poset_f_vector(&associahedron_poset(n)?)?;
        println!("K_{n}: {f:?} (Catalan {})", catalan(n as u64 - 1));
    }

    for n in 2..=4 {
        let w = cyclohedron_poset(n)?;
        println!(
            "W_{n}: faces {:?}, strata met {:?}, glued to itself: {}",
            poset_f_vector(&w.poset)?,
            w.stratum_f_vector(),
            w.self_glued()
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
