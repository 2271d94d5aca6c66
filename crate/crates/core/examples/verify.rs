// Runs the reproduction checks and prints one line per criterion.

use disk_moduli::verify::run_all;

pub fn run_example() -> disk_moduli::Result<()> {
    for c in run_all() {
        println!("[{}] {:>2} {}", if c.pass() { "PASS" } else { "FAIL" }, c.id, c.title);
    }
    Ok(())
}

fn main() -> disk_moduli::Result<()> {
    run_example()
}
