// Check the conditional axioms on the two four-element examples and on a
// broken table, printing the least counterexample of each failing law.

use condalg::{check_axiom, check_ca, AxiomId, CondAlg, Result};

pub fn run_example() -> Result<()> {
    let proj2 = CondAlg::projection(2)?;
    let glob2 = CondAlg::global_strict(2)?;
    let broken = proj2.with_entry(0, 0b10, 0b11)?;

    for (name, alg) in [("proj2", &proj2), ("glob2", &glob2), ("broken", &broken)] {
        println!("{name}: {}", check_ca(alg));
        for id in AxiomId::ALL.iter().take(10) {
            println!("  {}", check_axiom(alg, *id));
        }
    }
    assert!(!check_ca(&broken).holds);
    Ok(())
}

fn main() {
    run_example().expect("axioms example");
}
