// Conditional subalgebras against C-equivalences, and congruences against
// T-closed sets, on the two four-element examples.

use condalg::structure::{congruence_duality_check, congruence_lattice, enumerate_subalgebras, subalgebra_duality_check};
use condalg::{CondAlg, Result};

pub fn run_example() -> Result<()> {
    for (name, alg) in [("proj2", CondAlg::projection(2)?), ("glob2", CondAlg::global_strict(2)?)] {
        let subs: Vec<Vec<u64>> = enumerate_subalgebras(&alg).iter().map(|s| s.elements.iter().collect()).collect();
        let closed: Vec<u64> = congruence_lattice(&alg)?.iter().map(|c| c.y.mask()).collect();
        println!("{name}: subalgebras {subs:?}");
        println!("{name}: T-closed sets {closed:?}");
        println!("  {}", subalgebra_duality_check(&alg)?);
        println!("  {}", congruence_duality_check(&alg)?);
    }
    Ok(())
}

fn main() {
    run_example().expect("structure example");
}
