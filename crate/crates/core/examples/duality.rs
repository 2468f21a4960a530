// The ultrafilter frame of an algebra, its canonical extension, and the
// two roundtrips between algebras and frames.

use condalg::duality::{co_es_roundtrip, em, es_co_roundtrip, representation_check, ultrafilter_frame};
use condalg::io::serialize_frame;
use condalg::{cm, CondAlg, Result};

pub fn run_example() -> Result<()> {
    let proj2 = CondAlg::projection(2)?;
    let frame = ultrafilter_frame(&proj2)?;
    print!("{}", serialize_frame(&frame));
    assert_eq!(frame.len(), 8);

    println!("{}", representation_check(&proj2)?);
    println!("{}", co_es_roundtrip(&proj2)?);
    println!("{}", es_co_roundtrip(&frame)?);
    assert_eq!(em(&proj2)?, proj2);
    assert_eq!(cm(&frame), proj2);
    Ok(())
}

fn main() {
    run_example().expect("duality example");
}
