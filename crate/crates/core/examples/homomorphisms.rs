// Boolean homomorphisms between conditional algebras and their dual point
// maps: a homomorphism preserves the operator exactly when its dual map is
// a frame morphism.

use condalg::duality::{hom_duality_check, AlgHom};
use condalg::{CondAlg, Result};

pub fn run_example() -> Result<()> {
    let glob2 = CondAlg::global_strict(2)?;
    let proj2 = CondAlg::projection(2)?;
    for (s, t) in [(&glob2, &glob2), (&proj2, &proj2), (&glob2, &proj2)] {
        for h in AlgHom::all(s, t) {
            println!("map {:?}: {} / {}", h.dual_map(), h.is_conditional(), hom_duality_check(&h)?);
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("homomorphisms example");
}
