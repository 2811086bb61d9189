//! Branching a crystal to a standard Levi subgroup.

use adlvkit::crystal::{restrict_levi, DEFAULT_CAP};
use adlvkit::rootdata::{fmt_vec, DatumSpec, RootDatum};

fn main() -> adlvkit::Result<()> {
    let spec: DatumSpec = "C3".parse()?;
    let d = RootDatum::build(&spec)?;
    let mu = [0, 1, 0];
    let j = [1, 2];
    println!("C3 mu=(0,1,0) restricted to the Levi on simple roots 2,3:");
    for (eta, m) in restrict_levi(&d, &mu, &j, DEFAULT_CAP)? {
        println!("  {:<10} x{m}", fmt_vec(&eta));
    }
    Ok(())
}
