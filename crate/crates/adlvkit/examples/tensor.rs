//! Tensor product decomposition by path concatenation.

use adlvkit::crystal::{tensor_decompose, DEFAULT_CAP};
use adlvkit::rootdata::{fmt_vec, DatumSpec, RootDatum};

fn main() -> adlvkit::Result<()> {
    let spec: DatumSpec = "A2:gl".parse()?;
    let d = RootDatum::build(&spec)?;
    let factors = vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 0]];
    println!("(1,0,0) x (1,1,0) x (1,0,0) on {}:", d.label);
    for (eta, m) in tensor_decompose(&d, &factors, DEFAULT_CAP)? {
        println!("  {:<10} x{m}", fmt_vec(&eta));
    }
    Ok(())
}
