// Read a conditional algebra as a family of boxes indexed by antecedents,
// and compare each dual relation with the box of its Stone image.

use condalg::multimodal::{check_mma_axioms, q_relation, qa_equals_box_phi_check, to_conditional, to_mma};
use condalg::{CondAlg, Result};

pub fn run_example() -> Result<()> {
    let glob2 = CondAlg::global_strict(2)?;
    let m = to_mma(&glob2)?;
    println!("{}", check_mma_axioms(&m));
    for b in glob2.base().elements() {
        println!("Q[{b:#04b}] = {:?}", q_relation(&m, b)?);
    }
    println!("{}", qa_equals_box_phi_check(&glob2)?);
    assert_eq!(to_conditional(&m)?, glob2);
    Ok(())
}

fn main() {
    run_example().expect("multimodal example");
}
