// Classify algebras into varieties and check each axiom against its frame
// condition, then check canonicity on a random upward-closed frame.

use condalg::generate::{random_upward_closed_frame, rng_for};
use condalg::varieties::{canonicity_check, classify_variety, correspondence_check};
use condalg::{AxiomId, CondAlg, FrameCondId, Result};

pub fn run_example() -> Result<()> {
    for (name, alg) in [("proj2", CondAlg::projection(2)?), ("glob2", CondAlg::global_strict(2)?)] {
        let tags: Vec<String> = classify_variety(&alg).iter().map(|t| t.to_string()).collect();
        println!("{name} is in {}", tags.join(", "));
        for id in [AxiomId::C1star, AxiomId::C3star, AxiomId::C4, AxiomId::C5, AxiomId::C6, AxiomId::C7, AxiomId::C8] {
            println!("  {}", correspondence_check(&alg, id)?);
        }
    }
    let frame = random_upward_closed_frame(3, &mut rng_for(5, 0))?;
    for id in [FrameCondId::T3star, FrameCondId::T4, FrameCondId::T5, FrameCondId::T6, FrameCondId::T7, FrameCondId::T8] {
        println!("{}", canonicity_check(&frame, id)?);
    }
    Ok(())
}

fn main() {
    run_example().expect("correspondence example");
}
