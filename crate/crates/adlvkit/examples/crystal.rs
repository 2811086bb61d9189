//! Weight table of a path crystal next to the Weyl dimension.

use adlvkit::crystal::{crystal_generate, DEFAULT_CAP};
use adlvkit::rootdata::{fmt_vec, DatumSpec, RootDatum};
use adlvkit::suite::weyl_dimension;

fn main() -> adlvkit::Result<()> {
    let spec: DatumSpec = "B2".parse()?;
    let d = RootDatum::build(&spec)?;
    let mu = [1, 1];
    let c = crystal_generate(&d, &mu, DEFAULT_CAP)?;
    println!("B2 mu=(1,1): {} paths, Weyl dimension {}", c.len(), weyl_dimension(&d, &mu));
    for (w, m) in c.character() {
        println!("  {:<8} {m}", fmt_vec(&w));
    }
    Ok(())
}
