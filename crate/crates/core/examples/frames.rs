// Build a small frame by hand, close it upward, and read off its complex
// algebra and the frame conditions it satisfies.

use condalg::frame::{check_conditional_space, frame_representation_check, upward_closure};
use condalg::io::serialize_algebra;
use condalg::varieties::check_frame_condition;
use condalg::{check_ca, cm, FrameCondId, Result, TFrame};

pub fn run_example() -> Result<()> {
    // every point sees itself through any set containing it
    let raw = TFrame::from_triples(3, [(0, 0b001, 0), (1, 0b010, 1), (2, 0b100, 2), (0, 0b010, 1)])?;
    let frame = upward_closure(&raw);
    println!("{} triples after closing upward", frame.len());
    println!("{}", check_conditional_space(&frame));
    println!("{}", frame_representation_check(&frame));

    let alg = cm(&frame);
    assert!(check_ca(&alg).holds);
    print!("{}", serialize_algebra(&alg));
    for id in [FrameCondId::T3star, FrameCondId::T4, FrameCondId::T5, FrameCondId::T6, FrameCondId::T7, FrameCondId::T8] {
        println!("{}", check_frame_condition(&frame, id)?);
    }
    Ok(())
}

fn main() {
    run_example().expect("frames example");
}
