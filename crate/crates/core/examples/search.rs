// Model search: enumerate small algebras exhaustively and look for larger
// ones with the structured generators.

use condalg::generate::{exhaustive, search, GenKind, GenSpec};
use condalg::io::serialize_algebra;
use condalg::{AxiomId, Result};

pub fn run_example() -> Result<()> {
    println!("{} conditional algebras on one atom", exhaustive(1)?.len());
    println!("{} conditional algebras on two atoms", exhaustive(2)?.len());

    // reflexive and transitive but not euclidean
    let spec = GenSpec { kind: GenKind::StrictImplicationFamily, atoms: 3, seed: 42 };
    let found = search(&spec, &[AxiomId::C4, AxiomId::C5], &[AxiomId::C7], 1)?;
    assert_eq!(found.len(), 1);
    for alg in &found {
        print!("{}", serialize_algebra(alg));
    }
    Ok(())
}

fn main() {
    run_example().expect("search example");
}
