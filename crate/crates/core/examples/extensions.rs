// The pi and sigma extensions of an operator to sets of ultrafilters.
// On finite algebras both coincide with the operator carried along the
// Stone map.

use condalg::extensions::{g_relation, pi_algebra, sigma_algebra, smoothness_check};
use condalg::{check_ca, CondAlg, Result};

pub fn run_example() -> Result<()> {
    let glob2 = CondAlg::global_strict(2)?;
    let pi = pi_algebra(&glob2)?;
    let sigma = sigma_algebra(&glob2)?;
    println!("pi   {:?}", pi.table());
    println!("sigma {:?}", sigma.table());
    println!("{}", smoothness_check(&glob2)?);
    assert!(check_ca(&pi).holds && check_ca(&sigma).holds);
    println!("{} G-triples", g_relation(&glob2)?.len());
    Ok(())
}

fn main() {
    run_example().expect("extensions example");
}
