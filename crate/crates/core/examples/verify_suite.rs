// Run the verification battery with a small configuration and print one
// line per criterion.

use condalg::suite::{verify_suite, SuiteConfig};
use condalg::Result;

pub fn run_example() -> Result<()> {
    let config = SuiteConfig { samples_per_size: 300, frames: 200, ..SuiteConfig::default() };
    let report = verify_suite(&config);
    for c in &report.criteria {
        println!("{} {:>2} {} ({} samples)", if c.passed { "PASS" } else { "FAIL" }, c.id, c.name, c.samples);
    }
    println!("all passed: {}", report.passed);
    Ok(())
}

fn main() {
    run_example().expect("verify_suite example");
}
